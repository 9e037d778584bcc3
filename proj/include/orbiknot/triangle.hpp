#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "orbiknot/montesinos_link.hpp"
#include "orbiknot/rational.hpp"
#include "orbiknot/verdict.hpp"

namespace orbiknot {

// Unordered triple of branching indices, stored sorted a <= b <= c.
struct TriangleParams {
  int a = 2;
  int b = 2;
  int c = 2;

  friend bool operator==(TriangleParams const &, TriangleParams const &) = default;
};

class TriangleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorts and validates (each index >= 2).
TriangleParams make_triangle(int a, int b, int c);

enum class TriangleType { Elliptic, Euclidean, Hyperbolic };

std::string to_string(TriangleType t);

TriangleType classify(TriangleParams const &t);

/// 2n for (2,2,n), 12, 24, 60 for (2,3,3), (2,3,4), (2,3,5); empty otherwise.
std::optional<std::int64_t> elliptic_order(TriangleParams const &t);

/// 1 - (1/a + 1/b + 1/c).
Rational minus_chi(TriangleParams const &t);

enum class ObstructionKind { ExcludedByChi, ExcludedByTorsion, NotExcluded };

std::string to_string(ObstructionKind k);

struct EpiObstruction {
  ObstructionKind kind = ObstructionKind::NotExcluded;
  std::string detail;
  // Set when the torsion rule produced or could have produced the verdict;
  // the rule is a generalization and is reported as heuristic.
  bool heuristic = false;
};

/// Necessary conditions for an epimorphism T(src) -> T(dst). The Euler
/// characteristic test needs both triples hyperbolic; the torsion test
/// needs dst infinite.
EpiObstruction epi_obstruction(TriangleParams const &src, TriangleParams const &dst);

bool is_prime(std::int64_t n);

/// Throws TriangleError unless p, q >= 2, p != q and gcd(p,q) = 1.
DominationVerdict torus_knot_pi_minimal(int p, int q);

/// Throws MontesinosError unless r == 3.
DominationVerdict montesinos_pi_minimal(MontesinosLink const &m);

}  // namespace orbiknot
