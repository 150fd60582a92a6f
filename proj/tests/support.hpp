#pragma once

// Seeded generators for property tests.

#include <random>
#include <string>
#include <vector>

#include "lch/dga.hpp"
#include "lch/front.hpp"

namespace lch::testing {

inline DgaPresentation cp2() {
    return build_presentation({{"a", 3}, {"b", 1}}, {{"a", Polynomial(Word{"b", "b"})}});
}

/// Random word in the given ids, length in [0, max_len].
inline Word random_word(std::mt19937_64& rng, const std::vector<std::string>& ids, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    std::vector<std::string> f;
    const int n = ids.empty() ? 0 : len(rng);
    for (int i = 0; i < n; ++i) f.push_back(ids[pick(rng)]);
    return Word(std::move(f));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& ids, int terms,
                                    int max_len) {
    Polynomial p;
    for (int i = 0; i < terms; ++i) p.toggle(random_word(rng, ids, max_len));
    return p;
}

/// Generators g0..g{n-1} with degrees in [lo, hi]; the differential of g_i is
/// a random homogeneous sum of words in g_0..g_{i-1} of the right degree.
/// d^2 need not vanish.
inline DgaPresentation random_presentation(std::mt19937_64& rng, int n, int lo, int hi, int max_terms) {
    std::uniform_int_distribution<int> deg(lo, hi);
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i) gens.push_back({"g" + std::to_string(i), deg(rng)});
    std::map<std::string, Polynomial> diffs;
    std::uniform_int_distribution<int> count(0, max_terms);
    for (int i = 1; i < n; ++i) {
        const int target = gens[i].degree - 1;
        std::vector<std::string> earlier;
        for (int j = 0; j < i; ++j) earlier.push_back(gens[j].id);
        Polynomial d;
        const int tries = count(rng);
        for (int t = 0; t < tries * 8 && static_cast<int>(d.size()) < tries; ++t) {
            const auto w = random_word(rng, earlier, 3);
            int wd = 0;
            for (const auto& f : w.factors())
                for (const auto& g : gens)
                    if (g.id == f) wd += g.degree;
            if (wd == target && !d.contains(w)) d.toggle(w);
        }
        diffs[gens[i].id] = d;
    }
    return build_presentation(gens, diffs);
}

/// Zero-differential presentation with degrees in [1, hi].
inline DgaPresentation random_free(std::mt19937_64& rng, int n, int hi) {
    std::uniform_int_distribution<int> deg(1, hi);
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i) gens.push_back({"v" + std::to_string(i), deg(rng)});
    return build_presentation(gens, {});
}

/// Random plat front with at most `max_events` events.
inline FrontDiagram random_front(std::mt19937_64& rng, int max_events) {
    std::vector<FrontEvent> events;
    int n = 0;
    std::uniform_int_distribution<int> coin(0, 99);
    while (true) {
        const int left = max_events - static_cast<int>(events.size());
        const int closing = n / 2;
        if (left <= closing) {
            if (n == 0) break;
            std::uniform_int_distribution<int> pos(1, n - 1);
            events.push_back({EventKind::RightCusp, pos(rng)});
            n -= 2;
            continue;
        }
        const int r = coin(rng);
        if (n == 0 || (r < 30 && left - 1 >= closing + 1)) {
            if (left - 1 < closing + 1) break;
            std::uniform_int_distribution<int> pos(1, n + 1);
            events.push_back({EventKind::LeftCusp, pos(rng)});
            n += 2;
        } else if (r < 75 && n >= 2) {
            std::uniform_int_distribution<int> pos(1, n - 1);
            events.push_back({EventKind::Crossing, pos(rng)});
        } else {
            std::uniform_int_distribution<int> pos(1, n - 1);
            events.push_back({EventKind::RightCusp, pos(rng)});
            n -= 2;
            if (n == 0 && coin(rng) < 40) break;
        }
    }
    return FrontDiagram(std::move(events));
}

}  // namespace lch::testing
