#pragma once

// Free noncommutative differential graded algebras over F2.
//
// A presentation is a finite list of graded generators together with the
// value of the differential on each of them. Elements of the algebra are
// Polynomials: finite sets of Words, every coefficient being 1 (mod 2).

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lch/error.hpp"

namespace lch {

struct Generator {
    std::string id;
    int degree = 0;

    bool operator==(const Generator&) const = default;
};

/// True for tokens of the form `name` or `name[tag]`.
bool is_valid_id(std::string_view id);

/// A noncommutative monomial; the empty word is the unit 1.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::string> factors) : factors_(std::move(factors)) {}
    Word(std::initializer_list<std::string> factors) : factors_(factors) {}

    const std::vector<std::string>& factors() const noexcept { return factors_; }
    std::size_t length() const noexcept { return factors_.size(); }
    bool is_unit() const noexcept { return factors_.empty(); }

    Word operator*(const Word& rhs) const;

    bool operator==(const Word&) const = default;
    // Length first, then lexicographic on ids.
    std::strong_ordering operator<=>(const Word& rhs) const;

private:
    std::vector<std::string> factors_;
};

std::string to_string(const Word& w);

/// F2-linear combination of Words. Addition is symmetric difference.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Word& w) { terms_.insert(w); }

    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial(Word{}); }
    static Polynomial generator(const std::string& id) { return Polynomial(Word{id}); }
    static Polynomial from_words(std::initializer_list<Word> words);

    const std::set<Word>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool contains(const Word& w) const { return terms_.count(w) != 0; }

    /// Adds a single term mod 2 (removes it when already present).
    void toggle(const Word& w);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;

    bool operator==(const Polynomial&) const = default;

private:
    std::set<Word> terms_;
};

/// Canonical text: `0`, `1`, or `+`-separated words with `.` between factors.
std::string to_string(const Polynomial& p);

class DgaPresentation {
public:
    DgaPresentation() = default;

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool has_generator(std::string_view id) const;
    int degree(std::string_view id) const;
    const Polynomial& differential(std::string_view id) const;

    /// Degree of a word; throws UnknownGenerator for undeclared factors.
    int degree(const Word& w) const;
    /// Degree shared by every term, or nullopt when empty or inhomogeneous.
    std::optional<int> homogeneous_degree(const Polynomial& p) const;

    bool operator==(const DgaPresentation& rhs) const;

private:
    friend DgaPresentation build_presentation(std::span<const Generator>,
                                              const std::map<std::string, Polynomial>&);

    std::string name_;
    std::vector<Generator> generators_;
    std::vector<Polynomial> differentials_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Validates and assembles a presentation. Generators missing from `diffs`
/// get a zero differential.
DgaPresentation build_presentation(std::span<const Generator> gens,
                                   const std::map<std::string, Polynomial>& diffs);

DgaPresentation build_presentation(std::initializer_list<Generator> gens,
                                   const std::map<std::string, Polynomial>& diffs);

/// Extends the differential to `x` by linearity and the Leibniz rule.
Polynomial apply_differential(const DgaPresentation& p, const Polynomial& x);

struct DSquaredFailure {
    std::string generator;
    Polynomial residual;
};

struct DSquaredReport {
    bool pass = true;
    std::vector<DSquaredFailure> failures;
};

DSquaredReport check_d_squared(const DgaPresentation& p);

/// Amalgamated free product of `p1` and `p2` over the sub-DGA spanned by
/// `shared`. An empty `shared` gives the free product.
DgaPresentation pushout(const DgaPresentation& p1, const DgaPresentation& p2,
                        const std::set<std::string>& shared);

/// The sub-presentation on `ids`; throws SharedNotClosed when the differential
/// of some listed generator leaves the set.
DgaPresentation restrict_to(const DgaPresentation& p, const std::set<std::string>& ids);

/// Ids of every generator appearing in `x`.
std::set<std::string> support(const Polynomial& x);

}  // namespace lch
