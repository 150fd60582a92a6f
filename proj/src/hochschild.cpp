#include "lch/hochschild.hpp"

#include <functional>
#include <set>

#include "lch/gf2.hpp"

namespace lch {

namespace {

void require_positive(const IndexedDga& dga) {
    auto lo = dga.min_degree();
    if (lo && *lo < 1)
        throw Error(Errc::UnsupportedGrading, "Hochschild homology needs all generator degrees >= 1");
}

template <class Chain>
void flip(std::set<Chain>& acc, const Chain& c) {
    auto [it, inserted] = acc.insert(c);
    if (!inserted) acc.erase(it);
}

IWord concat(const IWord& a, const IWord& b) {
    IWord r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// Memoized word lists per degree.
class WordCache {
public:
    explicit WordCache(const IndexedDga& dga) : dga_(dga) {}
    const std::vector<IWord>& operator()(int d) {
        auto it = cache_.find(d);
        if (it == cache_.end()) it = cache_.emplace(d, dga_.words_of_degree(d, std::nullopt)).first;
        return it->second;
    }

private:
    const IndexedDga& dga_;
    std::map<int, std::vector<IWord>> cache_;
};

std::vector<HochschildChain> bar_basis(const IndexedDga& dga, WordCache& words, int degree) {
    std::vector<HochschildChain> out;
    if (degree < 0) return out;
    for (int n = 0; 2 * n <= degree; ++n) {
        const int budget = degree - n;
        HochschildChain cur(static_cast<std::size_t>(n) + 1);
        std::function<void(int, int)> fill = [&](int slot, int remaining) {
            if (slot == n) {
                for (const auto& w : words(remaining)) {
                    if (slot > 0 && w.empty()) continue;
                    cur[static_cast<std::size_t>(slot)] = w;
                    out.push_back(cur);
                }
                return;
            }
            const int min_here = slot == 0 ? 0 : 1;
            const int reserve = n - slot;  // later slots need degree >= 1 each
            for (int d = min_here; d <= remaining - reserve; ++d) {
                for (const auto& w : words(d)) {
                    if (slot > 0 && w.empty()) continue;
                    cur[static_cast<std::size_t>(slot)] = w;
                    fill(slot + 1, remaining - d);
                }
            }
        };
        fill(0, budget);
    }
    (void)dga;
    return out;
}

std::set<HochschildChain> bar_boundary(const IndexedDga& dga, const HochschildChain& c) {
    std::set<HochschildChain> acc;
    const std::size_t n = c.size() - 1;
    // Hochschild boundary: adjacent products, then the cyclic term.
    for (std::size_t i = 0; i < n; ++i) {
        HochschildChain r;
        r.reserve(n);
        for (std::size_t j = 0; j < i; ++j) r.push_back(c[j]);
        r.push_back(concat(c[i], c[i + 1]));
        for (std::size_t j = i + 2; j <= n; ++j) r.push_back(c[j]);
        flip(acc, r);
    }
    if (n >= 1) {
        HochschildChain r;
        r.reserve(n);
        r.push_back(concat(c[n], c[0]));
        for (std::size_t j = 1; j < n; ++j) r.push_back(c[j]);
        flip(acc, r);
    }
    // Internal differential; units vanish in the reduced slots.
    for (std::size_t i = 0; i <= n; ++i) {
        IPoly dw;
        dga.differentiate(c[i], dw);
        for (const auto& t : dw) {
            if (i > 0 && t.empty()) continue;
            HochschildChain r = c;
            r[i] = t;
            flip(acc, r);
        }
    }
    return acc;
}

std::vector<SmallChain> small_basis(const IndexedDga& dga, WordCache& words, int degree) {
    std::vector<SmallChain> out;
    if (degree < 0) return out;
    for (const auto& w : words(degree)) out.push_back({SmallChain::Tag::Algebra, w, 0});
    for (std::uint32_t g = 0; g < dga.size(); ++g) {
        const int rest = degree - 1 - dga.degree(g);
        if (rest < 0) continue;
        for (const auto& w : words(rest)) out.push_back({SmallChain::Tag::Tensor, w, g});
    }
    return out;
}

std::set<SmallChain> small_boundary(const IndexedDga& dga, const SmallChain& c) {
    std::set<SmallChain> acc;
    IPoly dw;
    dga.differentiate(c.word, dw);
    if (c.tag == SmallChain::Tag::Algebra) {
        for (const auto& t : dw) flip(acc, SmallChain{SmallChain::Tag::Algebra, t, 0});
        return acc;
    }
    const IWord v{c.generator};
    flip(acc, SmallChain{SmallChain::Tag::Algebra, concat(c.word, v), 0});
    flip(acc, SmallChain{SmallChain::Tag::Algebra, concat(v, c.word), 0});
    for (const auto& t : dw) flip(acc, SmallChain{SmallChain::Tag::Tensor, t, c.generator});
    // Cyclic derivative of dv: x1..xm contributes (x_{j+1}..x_m w x_1..x_{j-1}) (x) x_j.
    for (const auto& term : dga.differential(c.generator)) {
        for (std::size_t j = 0; j < term.size(); ++j) {
            IWord left(term.begin() + static_cast<std::ptrdiff_t>(j) + 1, term.end());
            IWord right(term.begin(), term.begin() + static_cast<std::ptrdiff_t>(j));
            flip(acc, SmallChain{SmallChain::Tag::Tensor, concat(concat(left, c.word), right), term[j]});
        }
    }
    return acc;
}

template <class Chain>
struct Piece {
    std::vector<Chain> basis;
    std::vector<std::set<Chain>> images;
};

template <class Chain>
std::vector<SparseRow> to_rows(const Piece<Chain>& piece, const std::vector<Chain>& target,
                               std::size_t& ncols) {
    std::map<Chain, std::size_t> cols;
    for (const auto& t : target) cols.emplace(t, cols.size());
    std::vector<SparseRow> rows;
    rows.reserve(piece.images.size());
    for (const auto& img : piece.images) {
        SparseRow r;
        for (const auto& t : img) r.push_back(cols.emplace(t, cols.size()).first->second);
        rows.push_back(std::move(r));
    }
    ncols = cols.size();
    return rows;
}

template <class Chain, class BasisFn, class BoundaryFn>
BettiTable complex_homology(const DegreeWindow& w, BasisFn basis, BoundaryFn boundary, bool corrupt) {
    std::map<int, Piece<Chain>> pieces;
    const int lo = std::max(w.d_min, 0);
    for (int d = lo - 1; d <= w.d_max + 1; ++d) {
        Piece<Chain> p;
        if (d >= 0) p.basis = basis(d);
        for (const auto& c : p.basis) p.images.push_back(boundary(c));
        pieces.emplace(d, std::move(p));
    }
    // rank of the boundary leaving degree d
    std::map<int, std::size_t> ranks;
    std::map<int, std::vector<SparseRow>> matrices;
    std::map<int, std::size_t> widths;
    for (int d = lo; d <= w.d_max + 1; ++d) {
        std::size_t ncols = 0;
        matrices[d] = to_rows(pieces.at(d), pieces.at(d - 1).basis, ncols);
        widths[d] = ncols;
        ranks[d] = gf2_rank(matrices[d], ncols);
    }
    if (corrupt) {
        bool done = false;
        for (int d = lo + 1; d <= w.d_max + 1 && !done; ++d) {
            auto& rows = matrices[d];
            const std::size_t width = pieces.at(d - 1).basis.size();
            for (std::size_t r = 0; r < rows.size() && !done; ++r) {
                for (std::size_t c = 0; c < width && !done; ++c) {
                    rows[r].push_back(c);  // repeated indices cancel, so this flips (r, c)
                    const auto changed = gf2_rank(rows, std::max(widths[d], width));
                    if (changed != ranks[d]) {
                        ranks[d] = changed;
                        done = true;
                    } else {
                        rows[r].pop_back();
                    }
                }
            }
        }
    }
    BettiTable table;
    for (int d = w.d_min; d <= w.d_max; ++d) {
        if (d < 0) {
            table.set(d, 0);
            continue;
        }
        const auto n = pieces.at(d).basis.size();
        table.set(d, static_cast<int>(n - ranks.at(d) - ranks.at(d + 1)));
    }
    return table;
}

}  // namespace

std::vector<HochschildChain> hh_bar_basis(const IndexedDga& dga, int degree) {
    require_positive(dga);
    WordCache words(dga);
    return bar_basis(dga, words, degree);
}

BettiTable hh_bar(const DgaPresentation& p, const DegreeWindow& w) {
    const IndexedDga dga(p);
    require_positive(dga);
    WordCache words(dga);
    return complex_homology<HochschildChain>(
        w, [&](int d) { return bar_basis(dga, words, d); },
        [&](const HochschildChain& c) { return bar_boundary(dga, c); }, false);
}

BettiTable hh_small(const DgaPresentation& p, const DegreeWindow& w, const SmallComplexOptions& options) {
    const IndexedDga dga(p);
    require_positive(dga);
    WordCache words(dga);
    return complex_homology<SmallChain>(
        w, [&](int d) { return small_basis(dga, words, d); },
        [&](const SmallChain& c) { return small_boundary(dga, c); }, options.corrupt_one_entry);
}

HochschildReport hh_report(const DgaPresentation& p, const DegreeWindow& w, const SmallComplexOptions& options) {
    HochschildReport r;
    r.bar = hh_bar(p, w);
    r.small = hh_small(p, w, options);
    for (int d = w.d_min; d <= w.d_max; ++d) {
        const bool same = r.bar.dimension(d) == r.small.dimension(d);
        r.agrees[d] = same;
        r.all_equal = r.all_equal && same;
    }
    return r;
}

bool hh_bar_d_squared(const DgaPresentation& p, const DegreeWindow& w) {
    const IndexedDga dga(p);
    require_positive(dga);
    WordCache words(dga);
    for (int d = std::max(w.d_min, 0); d <= w.d_max + 1; ++d) {
        for (const auto& c : bar_basis(dga, words, d)) {
            std::set<HochschildChain> twice;
            for (const auto& t : bar_boundary(dga, c))
                for (const auto& u : bar_boundary(dga, t)) flip(twice, u);
            if (!twice.empty()) return false;
        }
    }
    return true;
}

}  // namespace lch
