#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lch/dga.hpp"

namespace lch {

struct DegreeWindow {
    int d_min = 0;
    int d_max = 0;
    std::optional<int> max_word_length;

    DegreeWindow() = default;
    DegreeWindow(int lo, int hi, std::optional<int> cap = std::nullopt);
};

struct BettiEntry {
    int dimension = 0;
    bool exact = true;

    bool operator==(const BettiEntry&) const = default;
};

/// Homology dimension per degree, each flagged exact or truncated.
class BettiTable {
public:
    void set(int degree, int dimension, bool exact = true);

    const std::map<int, BettiEntry>& entries() const noexcept { return entries_; }
    int dimension(int degree) const;
    bool exact(int degree) const;
    bool all_exact() const;
    /// Dimensions only, zero entries dropped.
    std::map<int, int> nonzero() const;
    /// Dimensions in degree order over the whole table.
    std::vector<int> dimensions() const;

    bool operator==(const BettiTable&) const = default;

private:
    std::map<int, BettiEntry> entries_;
};

std::string to_string(const BettiTable& t);

/// Homology of the underlying chain complex of the free algebra, computed
/// degree by degree on the word basis.
BettiTable homology_table(const DgaPresentation& p, const DegreeWindow& w);

/// An algebra map to F2; only degree-0 generators may be sent to 1.
class Augmentation {
public:
    Augmentation() = default;
    explicit Augmentation(std::map<std::string, bool> values) : values_(std::move(values)) {}

    bool operator()(const std::string& id) const;
    bool value(const Word& w) const;
    bool value(const Polynomial& x) const;
    const std::map<std::string, bool>& values() const noexcept { return values_; }

    bool operator==(const Augmentation&) const = default;

private:
    std::map<std::string, bool> values_;
};

/// Whether `e` is a DGA map to F2 (checked independently of any search).
bool is_augmentation(const DgaPresentation& p, const Augmentation& e);

/// Every augmentation, by exhaustive search over the degree-0 generators.
std::vector<Augmentation> augmentations(const DgaPresentation& p);

/// Homology of the linear part of the differential conjugated by `e`. When
/// `w` is absent the table spans the generator degrees.
BettiTable linearized_homology(const DgaPresentation& p, const Augmentation& e,
                               const std::optional<DegreeWindow>& w = std::nullopt);

/// The linearized differential of each generator (word-length-1 part).
std::map<std::string, Polynomial> linearized_differential(const DgaPresentation& p,
                                                          const Augmentation& e);

}  // namespace lch
