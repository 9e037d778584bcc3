#pragma once

#include <stdexcept>
#include <vector>

#include "orbiknot/rational.hpp"

namespace orbiknot {

// Montesinos link L(b1/a1, ..., br/ar). Each slope is a reduced fraction with
// denominator a >= 2 and nonzero numerator; integer parts are kept as given.
struct MontesinosLink {
  std::vector<Rational> tangles;

  std::size_t r() const { return tangles.size(); }
  friend bool operator==(MontesinosLink const &, MontesinosLink const &) = default;
};

class MontesinosError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_valid(MontesinosLink const &m);

/// Parses "b/a,b/a,..." and validates.
MontesinosLink parse_montesinos(std::string_view text);

// 2-bridge link L(p/q): p >= 1, gcd(p,q) = 1, 0 < q < p, or (p,q) = (1,0).
struct TwoBridgeParams {
  int p = 1;
  int q = 0;

  friend bool operator==(TwoBridgeParams const &, TwoBridgeParams const &) = default;
};

void require_valid(TwoBridgeParams const &t);

}  // namespace orbiknot
