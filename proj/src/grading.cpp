#include "lch/grading.hpp"

#include <sstream>

namespace lch {

int chord_grading(const CappingData& c) {
    return c.d_plus - c.u_plus - c.d_minus + c.u_minus + c.morse_index + c.connecting_index - 1;
}

int connecting_index(const ConnectingChord& c) {
    return c.d_upper - c.u_upper - c.d_lower + c.u_lower - c.morse_index;
}

void ConnectingIndexTable::set_chord(int from, int to, const ConnectingChord& c) {
    set_index(from, to, connecting_index(c));
}

void ConnectingIndexTable::set_index(int from, int to, int value) {
    if (from == to) return;
    values_[{from, to}] = value;
    values_[{to, from}] = -value;
}

int ConnectingIndexTable::operator()(int i, int j) const {
    if (i == j) return 0;
    auto it = values_.find({i, j});
    if (it == values_.end()) {
        std::ostringstream msg;
        msg << "no connecting chord between components " << i << " and " << j;
        throw Error(Errc::MissingPairData, msg.str());
    }
    return it->second;
}

void ComponentPathData::set(int i_minus, int i_plus, const ComponentPair& data) {
    pairs_[{i_minus, i_plus}] = data;
}

bool ComponentPathData::contains(int i_minus, int i_plus) const {
    return pairs_.count({i_minus, i_plus}) != 0;
}

const ComponentPair& ComponentPathData::at(int i_minus, int i_plus) const {
    auto it = pairs_.find({i_minus, i_plus});
    if (it == pairs_.end()) {
        std::ostringstream msg;
        msg << "no path data for component pair (" << i_minus << ", " << i_plus << ")";
        throw Error(Errc::MissingPairData, msg.str());
    }
    return it->second;
}

int k_function(const ComponentPathData& pairs, int i_minus, int i_plus) {
    if (i_minus == i_plus) return 0;
    const auto& d = pairs.at(i_minus, i_plus);
    const int morse = d.orientation == ChordOrientation::Forward ? d.morse_index : -d.morse_index;
    return d.d_plus_con - d.u_plus_con - d.d_minus_con + d.u_minus_con + morse + d.ambient_index;
}

std::string dip_suffix(DipPoint p) {
    switch (p) {
        case DipPoint::M1: return "m1";
        case DipPoint::S1: return "s1";
        case DipPoint::S2: return "s2";
        case DipPoint::M2: return "m2";
        case DipPoint::H: return "h";
    }
    return {};
}

DipShiftTable::DipShiftTable(int handle_index) : k_(handle_index) {
    if (handle_index < 1) throw Error(Errc::InvalidHandleIndex, "handle index must be >= 1");
}

int DipShiftTable::shift(DipPoint p) const {
    switch (p) {
        case DipPoint::M1: return k_;
        case DipPoint::S1: return 1;
        case DipPoint::S2: return k_ - 1;
        case DipPoint::M2: return 0;
        case DipPoint::H: return 0;
    }
    return 0;
}

std::array<int, 4> dipping_critical_indices(int handle_index) {
    if (handle_index < 1) throw Error(Errc::InvalidHandleIndex, "handle index must be >= 1");
    // For k = 1 the sphere S^0 is two points and the max/min of g collapse to
    // the two copies of the radial function; the formulas agree.
    return {handle_index, 1, handle_index - 1, 0};
}

std::vector<Generator> dip_generators(const DgaPresentation& sub, int handle_index,
                                      const ComponentPathData& pairs,
                                      const ComponentEndpoints& endpoints) {
    const DipShiftTable table(handle_index);
    std::vector<Generator> out;
    out.reserve(sub.size() * kDipPoints.size());
    for (const auto& g : sub.generators()) {
        if (g.id.find('[') != std::string::npos)
            throw Error(Errc::InvalidId, "'" + g.id + "' already carries a bracket suffix");
        auto it = endpoints.find(g.id);
        if (it == endpoints.end())
            throw Error(Errc::MissingPairData, "no endpoint components for '" + g.id + "'");
        const int k = k_function(pairs, it->second.first, it->second.second);
        for (auto p : kDipPoints)
            out.push_back({g.id + "[" + dip_suffix(p) + "]", g.degree + k + table.shift(p)});
    }
    return out;
}

}  // namespace lch
