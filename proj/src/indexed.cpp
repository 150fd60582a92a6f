#include "lch/indexed.hpp"

#include <algorithm>
#include <functional>

namespace lch {

void toggle(IPoly& p, const IWord& w) {
    auto [it, inserted] = p.insert(w);
    if (!inserted) p.erase(it);
}

IndexedDga::IndexedDga(const DgaPresentation& p) {
    for (const auto& g : p.generators()) ids_.push_back(g.id);
    std::sort(ids_.begin(), ids_.end());
    for (std::uint32_t i = 0; i < ids_.size(); ++i) lookup_.emplace(ids_[i], i);
    degrees_.reserve(ids_.size());
    diffs_.resize(ids_.size());
    for (std::uint32_t i = 0; i < ids_.size(); ++i) {
        degrees_.push_back(p.degree(ids_[i]));
        for (const auto& w : p.differential(ids_[i]).terms()) toggle(diffs_[i], from_word(w));
    }
}

int IndexedDga::degree(const IWord& w) const {
    int d = 0;
    for (auto g : w) d += degrees_[g];
    return d;
}

std::uint32_t IndexedDga::index(const std::string& id) const {
    auto it = lookup_.find(id);
    if (it == lookup_.end()) throw Error(Errc::UnknownGenerator, id);
    return it->second;
}

std::optional<int> IndexedDga::min_degree() const {
    if (degrees_.empty()) return std::nullopt;
    return *std::min_element(degrees_.begin(), degrees_.end());
}

std::vector<IWord> IndexedDga::words_of_degree(int d, std::optional<int> max_len) const {
    auto lo = min_degree();
    if (!max_len && lo && *lo <= 0)
        throw Error(Errc::InfiniteBasis, "generator of degree <= 0 without a word-length cap");
    const bool positive = !lo || *lo > 0;
    std::vector<IWord> out;
    IWord cur;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) out.push_back(cur);
        if (max_len && static_cast<int>(cur.size()) >= *max_len) return;
        for (std::uint32_t g = 0; g < degrees_.size(); ++g) {
            // With positive degrees the remaining budget bounds the search;
            // otherwise the length cap does.
            if (positive && degrees_[g] > remaining) continue;
            cur.push_back(g);
            rec(remaining - degrees_[g]);
            cur.pop_back();
        }
    };
    if (max_len || d >= 0) rec(d);
    std::sort(out.begin(), out.end(), IWordLess{});
    return out;
}

void IndexedDga::differentiate(const IWord& w, IPoly& out) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
        const IPoly& dg = diffs_[w[i]];
        for (const auto& t : dg) {
            IWord r;
            r.reserve(w.size() - 1 + t.size());
            r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            r.insert(r.end(), t.begin(), t.end());
            r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
            toggle(out, r);
        }
    }
}

Word IndexedDga::to_word(const IWord& w) const {
    std::vector<std::string> f;
    f.reserve(w.size());
    for (auto g : w) f.push_back(ids_[g]);
    return Word(std::move(f));
}

IWord IndexedDga::from_word(const Word& w) const {
    IWord out;
    out.reserve(w.length());
    for (const auto& f : w.factors()) out.push_back(index(f));
    return out;
}

}  // namespace lch
