#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbiknot {

// Planar-diagram code. Each crossing lists four arc labels read
// counterclockwise, starting at the incoming under-arc, so positions 0 and 2
// are the under-strand (0 in, 2 out) and positions 1 and 3 the over-strand.
// Labels run over 1..arc_count. A label used by some crossing appears exactly
// twice; a label used by no crossing is a crossingless unknotted circle.
using Crossing = std::array<int, 4>;

struct PDCode {
  std::vector<Crossing> crossings;
  int arc_count = 1;

  friend bool operator==(PDCode const &, PDCode const &) = default;
};

// Reference to one slot of a crossing.
struct Slot {
  int crossing = -1;
  int position = -1;

  friend bool operator==(Slot const &, Slot const &) = default;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every violated invariant, one message each. Empty iff the code is valid.
std::vector<std::string> validate_pd(PDCode const &code);

/// Throws ValidationError carrying the first violation.
void require_valid(PDCode const &code);

// Orientation of a diagram. Under-strands are oriented by the PD convention;
// over-strands inherit orientation by propagation along components. A
// component that never passes under anything is oriented by the label order
// (over-strand runs from label l to l+1, with wrap-around).
struct OrientedDiagram {
  // Per crossing: position (1 or 3) of the incoming over-arc.
  std::vector<int> over_in;
  // Indexed by label (entry 0 unused): slot where the arc ends / starts.
  std::vector<Slot> head;
  std::vector<Slot> tail;
  // Labels that appear in no crossing.
  std::vector<int> free_loops;

  // Label following `label` along its component.
  int successor(std::vector<Crossing> const &crossings, int label) const;
  // +1 or -1 using the right-hand rule.
  int sign(std::vector<Crossing> const &crossings, int crossing) const;
};

/// Requires a valid code.
OrientedDiagram orient(PDCode const &code);

/// Labels grouped into components, each in traversal order starting from its
/// smallest label. Components are ordered by their smallest label.
std::vector<std::vector<int>> components(PDCode const &code);

std::size_t component_count(PDCode const &code);

/// True when the crossing graph is disconnected or there are free circles
/// alongside other pieces.
bool is_split_diagram(PDCode const &code);

PDCode mirror(PDCode const &code);

/// Splices the lowest-numbered crossing arc of each summand. Labels of `b`
/// are shifted by a.arc_count.
PDCode connected_sum(PDCode const &a, PDCode const &b);

}  // namespace orbiknot

namespace orbiknot {

// Faces of the diagram on the sphere. Corner k of a crossing lies between
// positions k and k+1 (mod 4).
struct FaceMap {
  std::vector<std::array<int, 4>> corner_face;
  int face_count = 0;
};

/// Requires a code whose labels each appear 0 or 2 times.
FaceMap faces(PDCode const &code);

/// Connected pieces of the crossing graph; entry i is the block of crossing i.
std::vector<int> crossing_blocks(PDCode const &code, int *block_count = nullptr);

}  // namespace orbiknot
