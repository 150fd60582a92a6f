#pragma once

// Combinatorial gradings of Reeb chords from capping-path data, the
// connecting indices between link components, and the degree shifts of the
// chord copies created by dipping near a subcritical handle.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lch/dga.hpp"

namespace lch {

/// Cusp-edge crossings of the two capping paths of a chord, plus the Morse
/// index of the chord and the connecting index between its end components.
struct CappingData {
    int d_plus = 0;   // cusp edges crossed downward by the path from c+
    int u_plus = 0;   // ... upward
    int d_minus = 0;  // same for the path from c-
    int u_minus = 0;
    int morse_index = 0;
    int connecting_index = 0;
};

int chord_grading(const CappingData& c);

/// Path data of a connecting chord c_ij running from component i to j.
struct ConnectingChord {
    int d_upper = 0;  // D of the path on component j ending at c_ij,+
    int u_upper = 0;
    int d_lower = 0;  // D of the path on component i ending at c_ij,-
    int u_lower = 0;
    int morse_index = 0;
};

/// Connecting indices I_ij. Only one orientation of each pair is stored; the
/// other follows from antisymmetry.
class ConnectingIndexTable {
public:
    void set_chord(int from, int to, const ConnectingChord& c);
    void set_index(int from, int to, int value);

    /// I_ij; zero on the diagonal. Throws MissingPairData.
    int operator()(int i, int j) const;

private:
    std::map<std::pair<int, int>, int> values_;
};

/// Direct evaluation of I_ij from the path data of c_ij.
int connecting_index(const ConnectingChord& c);

enum class ChordOrientation {
    Forward,  // the chosen connecting chord runs i- -> i+
    Reverse,  // it runs i+ -> i-
};

/// Path data entering K(i-, i+).
struct ComponentPair {
    int d_plus_con = 0;   // D of the connecting path on the i+ side
    int u_plus_con = 0;
    int d_minus_con = 0;  // D of the connecting path on the i- side
    int u_minus_con = 0;
    int morse_index = 0;    // I'(c) of the connecting chord of Lambda_sub
    int ambient_index = 0;  // I_{l- l+} in the surgered Legendrian
    ChordOrientation orientation = ChordOrientation::Forward;
};

/// Per ordered pair (i-, i+) of components of the attaching Legendrian.
class ComponentPathData {
public:
    void set(int i_minus, int i_plus, const ComponentPair& data);
    bool contains(int i_minus, int i_plus) const;
    const ComponentPair& at(int i_minus, int i_plus) const;

private:
    std::map<std::pair<int, int>, ComponentPair> pairs_;
};

/// K(i-, i+): zero on the diagonal, otherwise the connecting-path count with
/// the Morse index entering with the sign of the chord orientation.
int k_function(const ComponentPathData& pairs, int i_minus, int i_plus);

enum class DipPoint { M1, S1, S2, M2, H };

inline constexpr std::array<DipPoint, 5> kDipPoints{DipPoint::M1, DipPoint::S1, DipPoint::S2,
                                                    DipPoint::M2, DipPoint::H};

std::string dip_suffix(DipPoint p);

/// Degree shifts of the five copies of a chord for a handle of index k.
class DipShiftTable {
public:
    explicit DipShiftTable(int handle_index);

    int handle_index() const noexcept { return k_; }
    int shift(DipPoint p) const;

private:
    int k_;
};

/// Morse indices of the four critical points of the dipping function, in the
/// order m1, s1, s2, m2.
std::array<int, 4> dipping_critical_indices(int handle_index);

using ComponentEndpoints = std::map<std::string, std::pair<int, int>>;

/// Emits b[m1], b[s1], b[s2], b[m2], b[h] for every generator b of `sub`,
/// in that order. Generators carry degrees only.
std::vector<Generator> dip_generators(const DgaPresentation& sub, int handle_index,
                                      const ComponentPathData& pairs,
                                      const ComponentEndpoints& endpoints);

}  // namespace lch
