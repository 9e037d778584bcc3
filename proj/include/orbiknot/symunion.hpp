#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbiknot/homsearch.hpp"
#include "orbiknot/montesinos.hpp"
#include "orbiknot/pd_code.hpp"

namespace orbiknot {

/// det K == det(K_D)^2.
bool det_square_test(BigInt const &det_k, BigInt const &det_kd);

/// Sorted members of {q, -q, 1/q, -1/q} mod p.
std::vector<int> two_bridge_class(int p, int q);

struct PartialCandidates {
  // One S(p,q) per class, q the least member of its class, ordered by q.
  std::vector<TwoBridgeParams> candidates;
  // Set when the list is empty.
  std::string reason;
};

PartialCandidates two_bridge_partial_candidates(BigInt const &det_k);

/// Class restrictions on the partial knot K_D of a symmetric union K. Clause
/// names: "unknot", "two-bridge", "class", "tangle-count",
/// "connected-sum-bound". A passing 2-bridge K carries the evidence entry
/// "skew: the symmetric union is skew".
DominationVerdict partial_knot_class_filter(LinkClassDescriptor const &k_class,
                                            LinkClassDescriptor const &kd_class);

struct PartialKnotCandidate {
  LinkClassDescriptor descriptor;
  BigInt det;
  std::vector<int> q_class;
  std::vector<std::string> evidence;
  std::optional<std::string> witness;
  std::vector<std::string> budget_errors;
  bool survives = false;
};

struct PartialKnotReport {
  BigInt det;
  bool det_law_passed = false;
  std::string reason;
  // Output of the enumeration stage, before any filter.
  std::vector<TwoBridgeParams> enumerated;
  std::vector<PartialKnotCandidate> candidates;

  std::vector<PartialKnotCandidate> survivors() const;
};

/// Throws ValidationError unless the diagram is a knot.
PartialKnotReport partial_knot_report(PDCode const &knot, std::optional<LinkClassDescriptor> const &k_class,
                                      SearchOptions const &options = {});

nlohmann::json to_json(PartialKnotReport const &report);

}  // namespace orbiknot
