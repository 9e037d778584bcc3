#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbiknot/integer_matrix.hpp"
#include "orbiknot/montesinos_link.hpp"
#include "orbiknot/verdict.hpp"

namespace orbiknot {

// Seifert data V(0; e0; b1/a1, ..., br/ar) of the double branched cover.
struct SeifertInvariants {
  Rational e0;
  // Fractions reduced into (0,1), in canonical order.
  std::vector<Rational> exceptional_fibers;

  friend bool operator==(SeifertInvariants const &, SeifertInvariants const &) = default;
};

struct NormalForm {
  SeifertInvariants seifert;
  // Lexicographically least image of the reduced cyclic sequence under the
  // dihedral group.
  std::vector<Rational> canonical;
};

NormalForm normalize(MontesinosLink const &m);

/// Reduced fractions in canonical order with e0 carried by the first tangle,
/// so that normalize(canonical_link(m)) == normalize(m).
MontesinosLink canonical_link(MontesinosLink const &m);

/// Throws MontesinosError when either side has fewer than three tangles.
bool equivalent(MontesinosLink const &a, MontesinosLink const &b);

/// |e0| * prod a_i.
BigInt det(MontesinosLink const &m);

/// r == 3 and 1/a1 + 1/a2 + 1/a3 > 1.
bool is_elliptic(MontesinosLink const &m);

/// (r-2, r-1). Throws MontesinosError for r < 3.
std::pair<int, int> rank_bounds(MontesinosLink const &m);

/// The 2-bridge link L(p/q) equal to a Montesinos link with at most two
/// tangles, with q reduced to the least member of its class under
/// q -> -q and q -> 1/q mod p. Throws MontesinosError for r > 2.
TwoBridgeParams as_two_bridge(MontesinosLink const &m);

/// Least member of {q, -q, 1/q, -1/q} mod p; 0 for p = 1.
int two_bridge_class_representative(int p, int q);

struct LinkClassDescriptor {
  enum class Kind { Unknot, TwoBridge, Montesinos, ConnectedSum, SeifertLink, TorusKnot };

  Kind kind = Kind::Unknot;
  TwoBridgeParams two_bridge;
  MontesinosLink montesinos;
  std::vector<LinkClassDescriptor> factors;
  std::string tag;
  int torus_p = 0;
  int torus_q = 0;

  static LinkClassDescriptor unknot();
  static LinkClassDescriptor make_two_bridge(int p, int q);
  static LinkClassDescriptor make_montesinos(MontesinosLink m);
  static LinkClassDescriptor connected_sum(std::vector<LinkClassDescriptor> factors);
  static LinkClassDescriptor seifert_link(std::string tag);
  static LinkClassDescriptor torus_knot(int p, int q);
};

class DescriptorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_valid(LinkClassDescriptor const &d);

/// Accepted forms: "unknot", "twobridge:p/q", "montesinos:b/a,b/a,...",
/// "torus:p,q", "seifert:tag", and "sum:" followed by '+'-separated factors.
LinkClassDescriptor parse_descriptor(std::string_view text);
std::string to_string(LinkClassDescriptor const &d);
nlohmann::json to_json(LinkClassDescriptor const &d);

/// Determinant when it follows from the class data alone.
std::optional<BigInt> descriptor_det(LinkClassDescriptor const &d);

/// Throws DescriptorError for SeifertLink.
int bridge_number(LinkClassDescriptor const &d);

/// Necessary conditions for src to dominate the candidate. Clause names:
/// "class", "tangle-count", "half-tangle-shape", "connected-sum-bound",
/// "det-divisibility". Sources with r <= 2 are handled as 2-bridge links.
DominationVerdict domination_filter(MontesinosLink const &src, LinkClassDescriptor const &candidate);

}  // namespace orbiknot
