#include "lch/front.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace lch {

namespace {

char event_letter(EventKind k) {
    switch (k) {
        case EventKind::LeftCusp: return 'L';
        case EventKind::RightCusp: return 'R';
        case EventKind::Crossing: return 'X';
    }
    return '?';
}

std::string describe(std::size_t index, const FrontEvent& e) {
    std::ostringstream os;
    os << "event " << index + 1 << " (" << event_letter(e.kind) << e.position << ")";
    return os.str();
}

}  // namespace

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events) : events_(std::move(events)) {
    int n = 0;
    for (std::size_t k = 0; k < events_.size(); ++k) {
        const auto& e = events_[k];
        const int i = e.position;
        bool ok = i >= 1;
        switch (e.kind) {
            case EventKind::LeftCusp:
                ok = ok && i <= n + 1;
                break;
            case EventKind::RightCusp:
            case EventKind::Crossing:
                ok = ok && i + 1 <= n;
                break;
        }
        if (!ok) {
            std::ostringstream msg;
            msg << describe(k, e) << " does not fit " << n << " strand(s)";
            throw Error(Errc::StrandCountViolation, msg.str());
        }
        if (e.kind == EventKind::LeftCusp) n += 2;
        if (e.kind == EventKind::RightCusp) n -= 2;
        counts_.push_back(n);
    }
    if (n != 0) {
        std::ostringstream msg;
        msg << n << " strand(s) left open at the right end";
        throw Error(Errc::OpenEnds, msg.str());
    }
}

FrontDiagram FrontDiagram::mirrored() const {
    std::vector<FrontEvent> out;
    out.reserve(events_.size());
    for (std::size_t k = 0; k < events_.size(); ++k) {
        const int n = counts_[k];
        auto e = events_[k];
        e.position = e.kind == EventKind::LeftCusp ? n + 2 - e.position : n - e.position;
        out.push_back(e);
    }
    return FrontDiagram(std::move(out));
}

std::string to_string(const FrontDiagram& f) {
    std::string out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k) out += " ; ";
        out += event_letter(f.events()[k].kind);
        out += std::to_string(f.events()[k].position);
    }
    return out;
}

FrontDiagram parse_front(std::string_view text) {
    std::vector<FrontEvent> events;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        const char head = token.front();
        const std::string digits = token.substr(1);
        const bool numeric = !digits.empty() && digits.size() <= 9 &&
                             std::all_of(digits.begin(), digits.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        EventKind kind{};
        bool known = true;
        switch (head) {
            case 'L': kind = EventKind::LeftCusp; break;
            case 'R': kind = EventKind::RightCusp; break;
            case 'X': kind = EventKind::Crossing; break;
            default: known = false;
        }
        if (!known || !numeric || std::stoi(digits) < 1)
            throw Error(Errc::MalformedEvent, "'" + token + "'");
        events.push_back({kind, std::stoi(digits)});
        token.clear();
    };
    bool comment = false;
    for (char c : text) {
        if (c == '\n') {
            comment = false;
            flush();
            continue;
        }
        if (comment) continue;
        if (c == '#') {
            comment = true;
            continue;
        }
        if (c == ';') {
            flush();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        token += c;
    }
    flush();
    return FrontDiagram(std::move(events));
}

namespace {

// Union-find over arcs carrying potential offsets relative to the root.
class OffsetUnionFind {
public:
    int add() {
        parent_.push_back(static_cast<int>(parent_.size()));
        offset_.push_back(0);
        return parent_.back();
    }

    int size() const { return static_cast<int>(parent_.size()); }

    // Returns (root, potential(x) - potential(root)).
    std::pair<int, int> find(int x) {
        if (parent_[x] == x) return {x, 0};
        auto [root, off] = find(parent_[x]);
        parent_[x] = root;
        offset_[x] += off;
        return {root, offset_[x]};
    }

    // Imposes potential(a) - potential(b) = diff; false on contradiction.
    bool relate(int a, int b, int diff) {
        auto [ra, oa] = find(a);
        auto [rb, ob] = find(b);
        if (ra == rb) return oa - ob == diff;
        // potential(rb) = potential(a) - diff - ob = potential(ra) + oa - diff - ob
        parent_[rb] = ra;
        offset_[rb] = oa - diff - ob;
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> offset_;
};

}  // namespace

MaslovAssignment maslov_potential(const FrontDiagram& f) {
    MaslovAssignment m;
    OffsetUnionFind uf;
    std::vector<int> strands;
    for (std::size_t k = 0; k < f.size(); ++k) {
        m.arc_at.push_back(strands);
        const auto& e = f.events()[k];
        const auto pos = static_cast<std::size_t>(e.position - 1);
        switch (e.kind) {
            case EventKind::LeftCusp: {
                const int upper = uf.add();
                const int lower = uf.add();
                uf.relate(upper, lower, 1);
                strands.insert(strands.begin() + static_cast<std::ptrdiff_t>(pos), {upper, lower});
                break;
            }
            case EventKind::RightCusp: {
                if (!uf.relate(strands[pos], strands[pos + 1], 1)) {
                    std::ostringstream msg;
                    msg << "right cusp at " << describe(k, e)
                        << " closes a component with nonzero rotation number";
                    throw Error(Errc::NotGradable, msg.str());
                }
                strands.erase(strands.begin() + static_cast<std::ptrdiff_t>(pos),
                              strands.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
                break;
            }
            case EventKind::Crossing:
                std::swap(strands[pos], strands[pos + 1]);
                break;
        }
    }
    m.arc_at.push_back(strands);

    std::map<int, int> component_of_root;
    std::map<int, int> min_of_root;
    std::vector<std::pair<int, int>> found;
    for (int a = 0; a < uf.size(); ++a) found.push_back(uf.find(a));
    for (const auto& [root, off] : found) {
        component_of_root.emplace(root, static_cast<int>(component_of_root.size()));
        auto it = min_of_root.find(root);
        if (it == min_of_root.end()) min_of_root.emplace(root, off);
        else it->second = std::min(it->second, off);
    }
    for (const auto& [root, off] : found) {
        m.arc_potential.push_back(off - min_of_root.at(root));
        m.arc_component.push_back(component_of_root.at(root));
    }
    return m;
}

int component_count(const FrontDiagram& f) {
    const auto m = maslov_potential(f);
    if (m.arc_component.empty()) return 0;
    return *std::max_element(m.arc_component.begin(), m.arc_component.end()) + 1;
}

namespace {

std::string generator_name(const FrontEvent& e, std::size_t k) {
    return (e.kind == EventKind::Crossing ? "x" : "r") + std::to_string(k + 1);
}

class DiskEnumerator {
public:
    DiskEnumerator(const FrontDiagram& f, std::map<std::string, Polynomial>& diffs)
        : f_(f), diffs_(diffs) {}

    void from_left_cusp(std::size_t k) {
        const int i = f_.events()[k].position;
        upper_.clear();
        lower_.clear();
        walk(k + 1, i, i + 1);
    }

private:
    void record(std::size_t k) {
        std::vector<std::string> factors;
        for (auto it = upper_.rbegin(); it != upper_.rend(); ++it) factors.push_back(name(*it));
        for (auto idx : lower_) factors.push_back(name(idx));
        diffs_[name(k)].toggle(Word(std::move(factors)));
    }

    std::string name(std::size_t k) const { return generator_name(f_.events()[k], k); }

    void walk(std::size_t k, int u, int l) {
        if (k >= f_.size()) return;
        const auto& e = f_.events()[k];
        const int j = e.position;
        switch (e.kind) {
            case EventKind::LeftCusp:
                walk(k + 1, u >= j ? u + 2 : u, l >= j ? l + 2 : l);
                return;
            case EventKind::RightCusp:
                if (u == j && l == j + 1) {
                    record(k);
                    return;
                }
                if (u == j || u == j + 1 || l == j || l == j + 1) return;
                walk(k + 1, u > j + 1 ? u - 2 : u, l > j + 1 ? l - 2 : l);
                return;
            case EventKind::Crossing:
                if (u == j && l == j + 1) {
                    record(k);
                    return;
                }
                break;
        }
        // Crossing the boundary paths do not both touch.
        std::vector<std::pair<int, bool>> uppers;  // (new position, turned here)
        if (u == j) uppers = {{j + 1, false}};
        else if (u == j + 1) uppers = {{j, false}, {j + 1, true}};
        else uppers = {{u, false}};
        std::vector<std::pair<int, bool>> lowers;
        if (l == j + 1) lowers = {{j, false}};
        else if (l == j) lowers = {{j + 1, false}, {j, true}};
        else lowers = {{l, false}};
        for (const auto& [nu, tu] : uppers) {
            for (const auto& [nl, tl] : lowers) {
                if (tu) upper_.push_back(k);
                if (tl) lower_.push_back(k);
                walk(k + 1, nu, nl);
                if (tl) lower_.pop_back();
                if (tu) upper_.pop_back();
            }
        }
    }

    const FrontDiagram& f_;
    std::map<std::string, Polynomial>& diffs_;
    std::vector<std::size_t> upper_;
    std::vector<std::size_t> lower_;
};

}  // namespace

DgaPresentation front_to_dga(const FrontDiagram& f) {
    const auto m = maslov_potential(f);
    std::vector<Generator> gens;
    std::map<std::string, Polynomial> diffs;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const auto& e = f.events()[k];
        const auto pos = static_cast<std::size_t>(e.position - 1);
        if (e.kind == EventKind::Crossing) {
            const int top = m.arc_at[k][pos];
            const int bottom = m.arc_at[k][pos + 1];
            gens.push_back({generator_name(e, k), m.arc_potential[top] - m.arc_potential[bottom]});
        } else if (e.kind == EventKind::RightCusp) {
            gens.push_back({generator_name(e, k), 1});
            diffs[generator_name(e, k)].toggle(Word{});
        }
    }
    DiskEnumerator disks(f, diffs);
    for (std::size_t k = 0; k < f.size(); ++k)
        if (f.events()[k].kind == EventKind::LeftCusp) disks.from_left_cusp(k);
    return build_presentation(gens, diffs);
}

int tree_dimension(const FlowTreeData& t) {
    const int n = t.ambient_dimension;
    auto in_range = [n](int d) { return d >= 0 && d <= n; };
    if (n < 0 || !in_range(t.dim_unstable_positive) || t.end_vertices < 0 || t.switch_vertices < 0 ||
        t.y1_vertices < 0 || !std::all_of(t.dim_stable_negative.begin(), t.dim_stable_negative.end(), in_range))
        throw Error(Errc::InvalidTreeData, "counts must be >= 0 and manifold dimensions within [0, n]");
    int dim = 2 + t.dim_unstable_positive;
    for (int s : t.dim_stable_negative) dim += s - n + 1;
    return dim + t.end_vertices - t.switch_vertices - t.y1_vertices;
}

}  // namespace lch
