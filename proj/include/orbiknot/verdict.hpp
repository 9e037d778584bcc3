#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace orbiknot {

// One-sided domination evidence. No operation in this library decides the
// preorder in general; verdicts are either a refutation, a list of passed
// necessary conditions, or a match with the hypotheses of a proven result.
enum class VerdictKind { Excluded, ConsistentWithDomination, CertifiedByTheorem };

struct DominationVerdict {
  VerdictKind kind = VerdictKind::ConsistentWithDomination;
  // Excluded: name of the violated condition. Certified: the cited result.
  std::string reason;
  std::vector<std::string> evidence;

  static DominationVerdict excluded(std::string clause, std::vector<std::string> evidence = {});
  static DominationVerdict consistent(std::vector<std::string> evidence);
  static DominationVerdict certified(std::string citation, std::vector<std::string> evidence = {});

  bool is_excluded() const { return kind == VerdictKind::Excluded; }
  bool is_certified() const { return kind == VerdictKind::CertifiedByTheorem; }
};

std::string to_string(VerdictKind kind);
nlohmann::json to_json(DominationVerdict const &v);

}  // namespace orbiknot
