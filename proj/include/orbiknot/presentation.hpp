#pragma once

#include <stdexcept>
#include <vector>

#include "orbiknot/pd_code.hpp"

namespace orbiknot {

// A letter is a signed 1-based generator index: +i for x_i, -i for x_i^-1.
using Word = std::vector<int>;

struct GroupPresentation {
  int n_generators = 0;
  std::vector<Word> relators;
  // 1-based generator indices, sorted.
  std::vector<int> meridians;

  friend bool operator==(GroupPresentation const &, GroupPresentation const &) = default;
};

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws PresentationError if a letter or meridian index is out of range.
void require_valid(GroupPresentation const &pres);

// Wirtinger arcs of a diagram: maximal over-passing strands, i.e. the PD
// labels glued across every over-crossing.
struct WirtingerArcs {
  int count = 0;
  // Indexed by PD label (entry 0 unused); 0-based arc index.
  std::vector<int> arc_of_label;
};

/// Arcs are numbered by their smallest PD label.
WirtingerArcs wirtinger_arcs(PDCode const &code);

/// One meridian generator per Wirtinger arc, one relator per crossing:
/// x a x^-1 c^-1 at positive crossings, x^-1 a x c^-1 at negative ones, where
/// x is the over-arc, a the incoming and c the outgoing under-arc.
GroupPresentation wirtinger(PDCode const &code);

/// Adds g^2 for every meridian g. Throws PresentationError if none is marked.
GroupPresentation orbifold_quotient(GroupPresentation const &pres);

/// Two reflections whose product has order n: the orbifold group of any
/// 2-bridge link with determinant n. Both generators are meridians.
GroupPresentation dihedral_presentation(int n);

/// <x,y,z | x^a, y^b, z^c, xyz>.
GroupPresentation triangle_presentation(int a, int b, int c);

}  // namespace orbiknot
