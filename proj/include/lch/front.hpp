#pragma once

// Fronts of Legendrian links in J^1(R), given as a left-to-right sequence of
// cusps and crossings, and their Chekanov-Eliashberg algebras.
//
// Strand positions are 1-based and counted from the top (largest z). The
// differential is computed on the resolution of the front: crossings stay
// crossings and each right cusp becomes a small loop. A disk is described in
// the front by an upper and a lower boundary path, both x-monotone, starting
// together at a left cusp and ending at the positive puncture:
//
//   * at a crossing the two boundary paths meet there, occupying the left
//     quadrant (the positive corner);
//   * at a right cusp the paths close up at the cusp.
//
// On the way, the upper path may turn at a crossing where it arrives on the
// lower of the two crossing strands (the disk fills the bottom quadrant),
// and the lower path may turn where it arrives on the upper strand (top
// quadrant). These turns are the negative punctures. Boundary paths may not
// run into a right cusp before the end. Words are read counterclockwise from
// the positive puncture: upper turns right to left, then lower turns left to
// right. A right cusp additionally bounds the small disk inside its loop,
// contributing the term 1.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lch/dga.hpp"

namespace lch {

enum class EventKind { LeftCusp, RightCusp, Crossing };

struct FrontEvent {
    EventKind kind = EventKind::LeftCusp;
    int position = 1;

    bool operator==(const FrontEvent&) const = default;
};

class FrontDiagram {
public:
    FrontDiagram() = default;
    /// Validates strand bookkeeping; throws StrandCountViolation or OpenEnds.
    explicit FrontDiagram(std::vector<FrontEvent> events);

    const std::vector<FrontEvent>& events() const noexcept { return events_; }
    /// Strand count just before event `i` (i == size() gives the final count).
    int strands_before(std::size_t i) const { return counts_[i]; }
    std::size_t size() const noexcept { return events_.size(); }

    /// Vertical mirror image: every position i becomes (strand count) - i.
    FrontDiagram mirrored() const;

    bool operator==(const FrontDiagram& rhs) const { return events_ == rhs.events_; }

private:
    std::vector<FrontEvent> events_;
    std::vector<int> counts_{0};
};

std::string to_string(const FrontDiagram& f);

/// Parses `L<i>`, `R<i>`, `X<i>` tokens separated by `;` (or newlines).
/// Whitespace is ignored; `#` starts a comment running to end of line.
FrontDiagram parse_front(std::string_view text);

/// Maslov potential of every arc (cusp-to-cusp strand piece) of the front.
struct MaslovAssignment {
    std::vector<int> arc_potential;         // indexed by arc id
    std::vector<int> arc_component;         // link component of each arc
    std::vector<std::vector<int>> arc_at;   // arc_at[e][pos-1]: arc at position before event e
};

/// Solves the cusp constraints (upper arc = lower arc + 1). Within each
/// component the potentials are shifted so the smallest is 0. Throws
/// NotGradable when some component has nonzero rotation.
MaslovAssignment maslov_potential(const FrontDiagram& f);

/// Crossing at event e is named `x<e+1>`, right cusp at event e `r<e+1>`.
DgaPresentation front_to_dga(const FrontDiagram& f);

/// Number of link components.
int component_count(const FrontDiagram& f);

struct FlowTreeData {
    int ambient_dimension = 0;            // n
    int dim_unstable_positive = 0;        // dim W^u(a)
    std::vector<int> dim_stable_negative; // dim W^s(b_j), one per negative puncture
    int end_vertices = 0;                 // e
    int switch_vertices = 0;              // s
    int y1_vertices = 0;                  // Y1
};

/// Formal dimension of a flow tree; rigid trees have dimension 0.
int tree_dimension(const FlowTreeData& t);

}  // namespace lch
