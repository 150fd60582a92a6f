#include "lch/homology.hpp"

#include <algorithm>
#include <sstream>

#include "lch/gf2.hpp"
#include "lch/indexed.hpp"

namespace lch {

DegreeWindow::DegreeWindow(int lo, int hi, std::optional<int> cap)
    : d_min(lo), d_max(hi), max_word_length(cap) {
    if (lo > hi) throw Error(Errc::InvalidWindow, "d_min > d_max");
    if (cap && *cap < 1) throw Error(Errc::InvalidWindow, "max word length must be positive");
}

void BettiTable::set(int degree, int dimension, bool exact) {
    entries_[degree] = {dimension, exact};
}

int BettiTable::dimension(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? 0 : it->second.dimension;
}

bool BettiTable::exact(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() || it->second.exact;
}

bool BettiTable::all_exact() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.exact; });
}

std::map<int, int> BettiTable::nonzero() const {
    std::map<int, int> out;
    for (const auto& [d, e] : entries_)
        if (e.dimension != 0) out[d] = e.dimension;
    return out;
}

std::vector<int> BettiTable::dimensions() const {
    std::vector<int> out;
    for (const auto& [d, e] : entries_) out.push_back(e.dimension);
    return out;
}

std::string to_string(const BettiTable& t) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [d, e] : t.entries()) {
        if (!first) os << ", ";
        os << d << ':' << e.dimension;
        if (!e.exact) os << '~';
        first = false;
    }
    os << '}';
    return os.str();
}

namespace {

using ColumnIndex = std::map<IWord, std::size_t, IWordLess>;

std::size_t column(ColumnIndex& cols, const IWord& w) {
    return cols.emplace(w, cols.size()).first->second;
}

struct GradedPiece {
    std::vector<IWord> basis;
    std::vector<IPoly> images;  // differential of each basis word
};

GradedPiece graded_piece(const IndexedDga& dga, int d, std::optional<int> cap) {
    GradedPiece piece;
    piece.basis = dga.words_of_degree(d, cap);
    piece.images.resize(piece.basis.size());
    for (std::size_t i = 0; i < piece.basis.size(); ++i) dga.differentiate(piece.basis[i], piece.images[i]);
    return piece;
}

std::size_t rank_of_images(const std::vector<IPoly>& images) {
    ColumnIndex cols;
    std::vector<SparseRow> rows;
    rows.reserve(images.size());
    for (const auto& img : images) {
        SparseRow r;
        for (const auto& w : img) r.push_back(column(cols, w));
        rows.push_back(std::move(r));
    }
    return gf2_rank(rows, cols.size());
}

// Rank of the images after discarding the coordinates that lie in `inside`.
std::size_t rank_outside(const std::vector<IPoly>& images, const std::vector<IWord>& inside) {
    ColumnIndex in;
    for (const auto& w : inside) column(in, w);
    ColumnIndex cols;
    std::vector<SparseRow> rows;
    for (const auto& img : images) {
        SparseRow r;
        for (const auto& w : img)
            if (!in.count(w)) r.push_back(column(cols, w));
        rows.push_back(std::move(r));
    }
    return gf2_rank(rows, cols.size());
}

}  // namespace

BettiTable homology_table(const DgaPresentation& p, const DegreeWindow& w) {
    if (w.d_min > w.d_max) throw Error(Errc::InvalidWindow, "d_min > d_max");
    const IndexedDga dga(p);
    const auto lo = dga.min_degree();
    if (lo && *lo <= 0 && !w.max_word_length)
        throw Error(Errc::InfiniteBasis, "a generator has degree <= 0; set a maximum word length");

    std::map<int, GradedPiece> pieces;
    for (int d = w.d_min; d <= w.d_max + 1; ++d) pieces.emplace(d, graded_piece(dga, d, w.max_word_length));

    BettiTable table;
    for (int d = w.d_min; d <= w.d_max; ++d) {
        const auto& here = pieces.at(d);
        const auto& above = pieces.at(d + 1);
        const auto rank_out = rank_of_images(here.images);
        const auto rank_in = rank_of_images(above.images);
        // Images of truncated degree-(d+1) words may leave the truncated
        // degree-d basis; only the part inside it is quotiented out.
        const auto boundary = rank_in - (w.max_word_length ? rank_outside(above.images, here.basis) : 0);
        const int dim = static_cast<int>(here.basis.size() - rank_out - boundary);
        bool exact = !lo || *lo >= 1;
        if (exact && w.max_word_length) exact = (d + 1) / *lo <= *w.max_word_length;
        table.set(d, dim, exact);
    }
    return table;
}

bool Augmentation::operator()(const std::string& id) const {
    auto it = values_.find(id);
    return it != values_.end() && it->second;
}

bool Augmentation::value(const Word& w) const {
    for (const auto& f : w.factors())
        if (!(*this)(f)) return false;
    return true;
}

bool Augmentation::value(const Polynomial& x) const {
    bool acc = false;
    for (const auto& w : x.terms()) acc ^= value(w);
    return acc;
}

bool is_augmentation(const DgaPresentation& p, const Augmentation& e) {
    for (const auto& [id, v] : e.values()) {
        if (!p.has_generator(id)) return false;
        if (v && p.degree(id) != 0) return false;
    }
    for (const auto& g : p.generators())
        if (e.value(p.differential(g.id))) return false;
    return true;
}

std::vector<Augmentation> augmentations(const DgaPresentation& p) {
    std::vector<std::string> zero;
    for (const auto& g : p.generators())
        if (g.degree == 0) zero.push_back(g.id);
    std::sort(zero.begin(), zero.end());
    if (zero.size() >= 32)
        throw Error(Errc::InvalidAugmentation, "too many degree-0 generators for exhaustive search");
    std::vector<Augmentation> out;
    const std::uint64_t total = std::uint64_t{1} << zero.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::map<std::string, bool> values;
        for (std::size_t i = 0; i < zero.size(); ++i) values[zero[i]] = (mask >> i) & 1U;
        Augmentation e(std::move(values));
        if (is_augmentation(p, e)) out.push_back(std::move(e));
    }
    return out;
}

std::map<std::string, Polynomial> linearized_differential(const DgaPresentation& p,
                                                          const Augmentation& e) {
    if (!is_augmentation(p, e)) throw Error(Errc::InvalidAugmentation, "not a DGA map to F2");
    std::map<std::string, Polynomial> out;
    for (const auto& g : p.generators()) {
        Polynomial lin;
        for (const auto& w : p.differential(g.id).terms()) {
            const auto& f = w.factors();
            // Substituting h -> h + e(h) and keeping one letter: the letter
            // at position i survives when every other letter augments to 1.
            for (std::size_t i = 0; i < f.size(); ++i) {
                bool others = true;
                for (std::size_t j = 0; j < f.size() && others; ++j)
                    if (j != i && !e(f[j])) others = false;
                if (others) lin.toggle(Word{f[i]});
            }
        }
        out[g.id] = std::move(lin);
    }
    return out;
}

BettiTable linearized_homology(const DgaPresentation& p, const Augmentation& e,
                               const std::optional<DegreeWindow>& w) {
    const auto lin = linearized_differential(p, e);
    int lo = 0, hi = 0;
    if (w) {
        lo = w->d_min;
        hi = w->d_max;
    } else if (p.size() > 0) {
        lo = hi = p.generators().front().degree;
        for (const auto& g : p.generators()) {
            lo = std::min(lo, g.degree);
            hi = std::max(hi, g.degree);
        }
    }
    std::map<int, std::vector<std::string>> by_degree;
    for (const auto& g : p.generators()) by_degree[g.degree].push_back(g.id);

    auto rank_from = [&](int d) -> std::size_t {
        auto it = by_degree.find(d);
        if (it == by_degree.end()) return 0;
        std::map<std::string, std::size_t> cols;
        std::vector<SparseRow> rows;
        for (const auto& id : it->second) {
            SparseRow r;
            for (const auto& t : lin.at(id).terms())
                r.push_back(cols.emplace(t.factors().front(), cols.size()).first->second);
            rows.push_back(std::move(r));
        }
        return gf2_rank(rows, cols.size());
    };

    BettiTable table;
    for (int d = lo; d <= hi; ++d) {
        auto it = by_degree.find(d);
        const std::size_t n = it == by_degree.end() ? 0 : it->second.size();
        table.set(d, static_cast<int>(n - rank_from(d) - rank_from(d + 1)));
    }
    return table;
}

}  // namespace lch
