#include "orbiknot/montesinos_link.hpp"

#include <numeric>
#include <string>

namespace orbiknot {

void require_valid(MontesinosLink const &m) {
  if (m.tangles.empty()) throw MontesinosError("Montesinos link needs at least one tangle");
  for (auto const &t : m.tangles) {
    if (t.denominator() < 2) {
      throw MontesinosError("tangle slope " + to_string(t) + " needs denominator >= 2");
    }
    if (t.numerator() == 0) throw MontesinosError("tangle slope must be nonzero");
  }
}

MontesinosLink parse_montesinos(std::string_view text) {
  MontesinosLink m{parse_rational_list(text)};
  require_valid(m);
  return m;
}

void require_valid(TwoBridgeParams const &t) {
  if (t.p == 1 && t.q == 0) return;
  if (t.p < 1 || t.q <= 0 || t.q >= t.p || std::gcd(t.p, t.q) != 1) {
    throw std::invalid_argument("2-bridge parameters need 0 < q < p with gcd(p,q) = 1, got p=" +
                                std::to_string(t.p) + " q=" + std::to_string(t.q));
  }
}

}  // namespace orbiknot
