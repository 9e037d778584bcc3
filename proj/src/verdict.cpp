#include "orbiknot/verdict.hpp"

namespace orbiknot {

DominationVerdict DominationVerdict::excluded(std::string clause, std::vector<std::string> evidence) {
  return {VerdictKind::Excluded, std::move(clause), std::move(evidence)};
}

DominationVerdict DominationVerdict::consistent(std::vector<std::string> evidence) {
  return {VerdictKind::ConsistentWithDomination, "", std::move(evidence)};
}

DominationVerdict DominationVerdict::certified(std::string citation, std::vector<std::string> evidence) {
  return {VerdictKind::CertifiedByTheorem, std::move(citation), std::move(evidence)};
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Excluded: return "Excluded";
    case VerdictKind::ConsistentWithDomination: return "ConsistentWithDomination";
    case VerdictKind::CertifiedByTheorem: return "CertifiedByTheorem";
  }
  return "?";
}

nlohmann::json to_json(DominationVerdict const &v) {
  nlohmann::json j;
  j["verdict"] = to_string(v.kind);
  if (!v.reason.empty()) j["reason"] = v.reason;
  j["evidence"] = v.evidence;
  return j;
}

}  // namespace orbiknot
