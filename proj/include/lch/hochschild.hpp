#pragma once

// Hochschild homology of a free DGA over F2, computed two ways:
//
//  * hh_bar: the normalized Hochschild complex A (x) Abar^{(x)n} with the
//    Hochschild boundary plus the internal differential. A chain
//    (w0 | w1 | ... | wn) sits in degree |w0| + ... + |wn| + n.
//  * hh_small: the two-term complex (A (x) V)[1] (+) A coming from the
//    semifree bimodule resolution of a tensor algebra T(V). Its boundary is
//    w(x)v -> w.v + v.w, plus d on A, plus the cyclic derivative of dv.
//
// Both require every generator to have degree >= 1, so each degree sees only
// finitely many chains.

#include <cstdint>
#include <map>
#include <vector>

#include "lch/dga.hpp"
#include "lch/homology.hpp"
#include "lch/indexed.hpp"

namespace lch {

/// A basis element of the bar complex: w0 followed by n nonempty words.
using HochschildChain = std::vector<IWord>;

/// A basis element of the small complex.
struct SmallChain {
    enum class Tag : std::uint8_t { Algebra, Tensor };
    Tag tag = Tag::Algebra;
    IWord word;
    std::uint32_t generator = 0;  // meaningful for Tag::Tensor only

    auto operator<=>(const SmallChain&) const = default;
};

BettiTable hh_bar(const DgaPresentation& p, const DegreeWindow& w);

struct SmallComplexOptions {
    /// Debug hook: flip one boundary-matrix entry so that some rank changes.
    bool corrupt_one_entry = false;
};

BettiTable hh_small(const DgaPresentation& p, const DegreeWindow& w,
                    const SmallComplexOptions& options = {});

struct HochschildReport {
    BettiTable bar;
    BettiTable small;
    std::map<int, bool> agrees;
    bool all_equal = true;
};

HochschildReport hh_report(const DgaPresentation& p, const DegreeWindow& w,
                           const SmallComplexOptions& options = {});

/// Checks that the total bar differential squares to zero on every basis
/// chain of degree in [w.d_min, w.d_max + 1].
bool hh_bar_d_squared(const DgaPresentation& p, const DegreeWindow& w);

/// Bar-complex basis in one total degree (exposed for tests and reports).
std::vector<HochschildChain> hh_bar_basis(const IndexedDga& dga, int degree);

}  // namespace lch
