#pragma once

#include <vector>

#include "orbiknot/montesinos_link.hpp"
#include "orbiknot/pd_code.hpp"
#include "orbiknot/rational.hpp"

namespace orbiknot {

// Builds planar diagrams out of Conway tangles. Crossings are drawn as an X
// with slots NE, NW, SW, SE (counterclockwise); a positive twist puts the
// NW-SE strand over. Horizontal twists add integers to the tangle slope and
// vertical twists send s to 1/(1/s + v), so the numerator closure of a
// tangle of slope p/q has determinant |p|.
class TangleBuilder {
 public:
  struct Tangle {
    int nw = -1, ne = -1, sw = -1, se = -1;
  };

  Tangle zero();
  Tangle infinity();
  void twist_horizontal(Tangle &t, int sign);
  void twist_vertical(Tangle &t, int sign);
  /// Rational tangle from the all-positive continued fraction of |slope|.
  Tangle rational(Rational slope);
  /// Places b to the right of a.
  Tangle sum(Tangle a, Tangle b);
  void close_numerator(Tangle t);
  void close_denominator(Tangle t);

  /// Requires every tangle end to be closed off.
  PDCode to_pd() const;

 private:
  struct Port {
    int link[2] = {-1, -1};
    bool terminal = false;
  };
  struct XCrossing {
    bool nw_se_over = true;
  };

  int new_terminal();
  int new_crossing(bool nw_se_over);
  void connect(int a, int b);
  int resolve(int slot_port) const;

  std::vector<Port> ports_;
  std::vector<int> crossing_port_base_;
  std::vector<XCrossing> crossings_;
};

/// Numerator closure of the rational tangle p/q; (1,0) gives the 0-crossing
/// unknot.
PDCode two_bridge_diagram(TwoBridgeParams const &params);

/// Numerator closure of the tangle sum of the slopes, in the order given.
PDCode montesinos_diagram(MontesinosLink const &m);

}  // namespace orbiknot
