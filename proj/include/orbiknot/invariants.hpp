#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbiknot/integer_matrix.hpp"
#include "orbiknot/pd_code.hpp"
#include "orbiknot/verdict.hpp"

namespace orbiknot {

// Goeritz matrix over one checkerboard class of regions, with the row and
// column of one region deleted.
struct GoeritzData {
  IntMatrix matrix;
  // Checkerboard class used (0 or 1) and the face indices of its regions,
  // in matrix order; deleted_region is not among them.
  int shading = 0;
  std::vector<int> regions;
  int deleted_region = -1;
};

class SplitDiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default choice: the class not containing face 0, deleting its lowest face.
/// Throws SplitDiagramError for split diagrams.
GoeritzData goeritz(PDCode const &code);

/// Explicit shading class and deleted region (index into the class, sorted by
/// face index). Used to check independence of both choices.
GoeritzData goeritz(PDCode const &code, int shading, std::size_t deleted);

/// Number of regions in a checkerboard class.
std::size_t shaded_region_count(PDCode const &code, int shading);

/// |H_1| of the double branched cover; 0 when infinite or the diagram is split.
BigInt determinant(PDCode const &code);

struct H1DoubleCover {
  // Nontrivial cyclic factors Z/k, k > 1, in divisibility order.
  std::vector<BigInt> torsion;
  // Number of infinite cyclic summands (nonzero only for det 0).
  int free_rank = 0;
  // The diagram was split; free_rank counts the extra pieces.
  bool split = false;
};

H1DoubleCover h1_double_cover(PDCode const &code);

// Solutions of the Fox coloring system over Z/n on Wirtinger arcs.
struct ColoringSpace {
  int modulus = 2;
  std::uint64_t count = 0;
  // Generators of the solution module (a basis when the modulus is prime),
  // coordinates indexed by Wirtinger arc.
  std::vector<std::vector<int>> basis;
};

ColoringSpace fox_colorings(PDCode const &code, int n);

/// Colorings whose colour differences generate Z/n, i.e. the ones inducing
/// epimorphisms onto D_2n sending meridians to reflections.
std::uint64_t surjective_coloring_count(PDCode const &code, int n);

struct DihedralEpi {
  bool exists = false;
  std::vector<int> witness;
};

DihedralEpi dihedral_epi_exists(PDCode const &code, int n);

/// Certified when det = 0; otherwise Excluded, with the smallest n <= cap
/// admitting no dihedral epimorphism as corroborating witness.
DominationVerdict dominates_all_two_bridge(PDCode const &code, int spot_check_cap = 25);

/// D_2p surjects onto D_2p' exactly when p' divides p.
bool two_bridge_dominates(int p, int p_prime);

}  // namespace orbiknot
