#pragma once

// Integer-indexed view of a presentation used by the linear-algebra modules.
// Generator indices follow the lexicographic order of ids, so comparing
// index words length-first then lexicographically matches the canonical
// order of string Words.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lch/dga.hpp"

namespace lch {

using IWord = std::vector<std::uint32_t>;

struct IWordLess {
    bool operator()(const IWord& a, const IWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// A set of index words under mod-2 addition.
using IPoly = std::set<IWord, IWordLess>;

void toggle(IPoly& p, const IWord& w);

class IndexedDga {
public:
    explicit IndexedDga(const DgaPresentation& p);

    std::size_t size() const noexcept { return ids_.size(); }
    const std::string& id(std::uint32_t g) const { return ids_[g]; }
    int degree(std::uint32_t g) const { return degrees_[g]; }
    int degree(const IWord& w) const;
    const IPoly& differential(std::uint32_t g) const { return diffs_[g]; }
    std::uint32_t index(const std::string& id) const;

    /// Smallest generator degree; nullopt for the ground presentation.
    std::optional<int> min_degree() const;

    /// All words of degree `d` (at most `max_len` letters when given), in
    /// canonical order. Needs either positive degrees or a length cap.
    std::vector<IWord> words_of_degree(int d, std::optional<int> max_len) const;

    /// Leibniz differential of one word, added mod 2 into `out`.
    void differentiate(const IWord& w, IPoly& out) const;

    Word to_word(const IWord& w) const;
    IWord from_word(const Word& w) const;

private:
    std::vector<std::string> ids_;
    std::vector<int> degrees_;
    std::vector<IPoly> diffs_;
    std::map<std::string, std::uint32_t> lookup_;
};

}  // namespace lch
