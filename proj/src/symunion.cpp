#include "orbiknot/symunion.hpp"

#include <algorithm>
#include <numeric>

#include "orbiknot/diagrams.hpp"
#include "orbiknot/invariants.hpp"
#include "orbiknot/json_io.hpp"
#include "orbiknot/presentation.hpp"

namespace orbiknot {

bool det_square_test(BigInt const &det_k, BigInt const &det_kd) { return det_k == det_kd * det_kd; }

std::vector<int> two_bridge_class(int p, int q) {
  if (p == 1) return {0};
  q = ((q % p) + p) % p;
  int inv = 0;
  for (int x = 1; x < p; ++x) {
    if (static_cast<long long>(q) * x % p == 1) inv = x;
  }
  if (inv == 0) throw std::invalid_argument("q must be a unit mod p");
  std::vector<int> out{q, p - q, inv, p - inv};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PartialCandidates two_bridge_partial_candidates(BigInt const &det_k) {
  PartialCandidates out;
  if (det_k < 0) throw std::invalid_argument("determinant must be non-negative");
  BigInt root = boost::multiprecision::sqrt(det_k);
  if (root * root != det_k) {
    out.reason = "no symmetric union possible by det law: " + det_k.str() + " is not a perfect square";
    return out;
  }
  if (root == 0) {
    out.reason = "det 0: no 2-bridge knot has square determinant 0";
    return out;
  }
  if (root % 2 == 0) {
    out.reason = "det law gives even det(K_D) = " + root.str() + ", impossible for a knot";
    return out;
  }
  if (root > 100000) throw std::invalid_argument("determinant too large for candidate enumeration");
  int p = root.convert_to<int>();
  if (p == 1) {
    out.candidates.push_back({1, 0});
    return out;
  }
  for (int q = 1; q < p; ++q) {
    if (std::gcd(p, q) != 1) continue;
    if (two_bridge_class(p, q).front() == q) out.candidates.push_back({p, q});
  }
  return out;
}

namespace {

enum class Shape { Unknot, TwoBridge, EllipticMontesinos, Montesinos, Other };

Shape shape_of(LinkClassDescriptor const &d, int *tangles = nullptr) {
  using Kind = LinkClassDescriptor::Kind;
  switch (d.kind) {
    case Kind::Unknot:
      return Shape::Unknot;
    case Kind::TwoBridge:
      return d.two_bridge.p == 1 ? Shape::Unknot : Shape::TwoBridge;
    case Kind::Montesinos:
      if (d.montesinos.r() <= 2) return as_two_bridge(d.montesinos).p == 1 ? Shape::Unknot : Shape::TwoBridge;
      if (tangles) *tangles = static_cast<int>(d.montesinos.r());
      return is_elliptic(d.montesinos) ? Shape::EllipticMontesinos : Shape::Montesinos;
    case Kind::TorusKnot: {
      int p = std::min(std::abs(d.torus_p), std::abs(d.torus_q));
      int q = std::max(std::abs(d.torus_p), std::abs(d.torus_q));
      if (p == 2) return Shape::TwoBridge;
      if (p == 3 && (q == 4 || q == 5)) {
        if (tangles) *tangles = 3;
        return Shape::EllipticMontesinos;
      }
      return Shape::Other;
    }
    default:
      return Shape::Other;
  }
}

void flatten(LinkClassDescriptor const &d, std::vector<LinkClassDescriptor const *> &out) {
  if (d.kind == LinkClassDescriptor::Kind::ConnectedSum) {
    for (auto const &f : d.factors) flatten(f, out);
  } else {
    out.push_back(&d);
  }
}

}  // namespace

DominationVerdict partial_knot_class_filter(LinkClassDescriptor const &k_class,
                                            LinkClassDescriptor const &kd_class) {
  require_valid(k_class);
  require_valid(kd_class);
  int r = 0;
  auto ks = shape_of(k_class, &r);
  int rd = 0;
  auto kds = shape_of(kd_class, &rd);
  bool kd_sum = kd_class.kind == LinkClassDescriptor::Kind::ConnectedSum;

  if (ks == Shape::Unknot) {
    if (kds != Shape::Unknot || kd_sum) {
      return DominationVerdict::excluded("unknot", {"the partial knot of a trivial symmetric union is trivial"});
    }
    return DominationVerdict::consistent({"unknot: K and K_D trivial"});
  }
  if (ks == Shape::TwoBridge) {
    if (kds != Shape::TwoBridge || kd_sum) {
      return DominationVerdict::excluded(
          "two-bridge", {"the partial knot of a 2-bridge symmetric union is a 2-bridge knot, got " + to_string(kd_class)});
    }
    return DominationVerdict::consistent({"two-bridge: K_D is 2-bridge", "skew: the symmetric union is skew"});
  }
  if (ks != Shape::Montesinos && ks != Shape::EllipticMontesinos) {
    return DominationVerdict::consistent({"class: no restriction applies to " + to_string(k_class)});
  }

  std::vector<std::string> passed;
  if (kd_sum) {
    std::vector<LinkClassDescriptor const *> factors;
    flatten(kd_class, factors);
    int n1 = 0;
    int n2 = 0;
    for (auto const *f : factors) {
      auto s = shape_of(*f);
      if (s == Shape::TwoBridge) {
        ++n1;
      } else if (s == Shape::EllipticMontesinos) {
        ++n2;
      } else {
        return DominationVerdict::excluded(
            "class", {"connected-sum factor " + to_string(*f) + " is neither 2-bridge nor elliptic Montesinos"});
      }
    }
    passed.push_back("class: connected sum of 2-bridge and elliptic Montesinos knots");
    auto bound = "n1 + 2 n2 = " + std::to_string(n1 + 2 * n2) + ", r - 1 = " + std::to_string(r - 1);
    if (n1 + 2 * n2 > r - 1) return DominationVerdict::excluded("connected-sum-bound", {bound});
    passed.push_back("connected-sum-bound: " + bound);
    return DominationVerdict::consistent(std::move(passed));
  }
  if (kds == Shape::Unknot || kds == Shape::TwoBridge) {
    return DominationVerdict::consistent({std::string("class: K_D ") + (kds == Shape::Unknot ? "trivial" : "2-bridge")});
  }
  if (kds == Shape::Other) {
    return DominationVerdict::excluded("class", {to_string(kd_class) + " is not an allowed partial knot class"});
  }
  auto count = "r' = " + std::to_string(rd) + ", r = " + std::to_string(r);
  if (rd > r) return DominationVerdict::excluded("tangle-count", {count + ", r' > r"});
  return DominationVerdict::consistent({"class: Montesinos", "tangle-count: " + count});
}

std::vector<PartialKnotCandidate> PartialKnotReport::survivors() const {
  std::vector<PartialKnotCandidate> out;
  for (auto const &c : candidates) {
    if (c.survives) out.push_back(c);
  }
  return out;
}

PartialKnotReport partial_knot_report(PDCode const &knot, std::optional<LinkClassDescriptor> const &k_class,
                                      SearchOptions const &options) {
  require_valid(knot);
  if (component_count(knot) != 1) throw ValidationError("partial knot report needs a knot diagram");
  PartialKnotReport report;
  report.det = determinant(knot);
  auto enumeration = two_bridge_partial_candidates(report.det);
  report.enumerated = enumeration.candidates;
  report.det_law_passed = !enumeration.candidates.empty();
  report.reason = enumeration.reason;
  if (!report.det_law_passed) return report;

  auto source = orbifold_quotient(wirtinger(knot));
  auto battery = default_battery();
  for (auto const &tb : enumeration.candidates) {
    PartialKnotCandidate c;
    c.descriptor = tb.p == 1 ? LinkClassDescriptor::unknot() : LinkClassDescriptor::make_two_bridge(tb.p, tb.q);
    c.det = tb.p;
    c.q_class = two_bridge_class(tb.p, tb.q);
    c.evidence.push_back("det-law: " + report.det.str() + " = " + std::to_string(tb.p) + "^2");
    if (k_class) {
      auto v = partial_knot_class_filter(*k_class, c.descriptor);
      if (v.is_excluded()) {
        c.evidence.push_back("class-filter: excluded by " + v.reason);
        for (auto const &e : v.evidence) c.evidence.push_back("class-filter: " + e);
        report.candidates.push_back(std::move(c));
        continue;
      }
      for (auto const &e : v.evidence) c.evidence.push_back("class-filter: " + e);
    } else {
      c.evidence.push_back("class-filter: no class given for K");
    }
    auto target = orbifold_quotient(wirtinger(two_bridge_diagram(tb)));
    auto nd = non_domination_evidence(source, target, battery, options);
    c.witness = nd.witness;
    c.budget_errors = nd.budget_errors;
    if (nd.witness) {
      c.evidence.push_back("quotient-witness: " + *nd.witness + " is a quotient of K_D but not of K");
    } else {
      c.evidence.push_back("quotient-witness: none in the default battery");
      c.survives = true;
    }
    report.candidates.push_back(std::move(c));
  }
  return report;
}

nlohmann::json to_json(PartialKnotReport const &report) {
  nlohmann::json j;
  j["det"] = bigint_json(report.det);
  j["det_law_passed"] = report.det_law_passed;
  if (!report.reason.empty()) j["reason"] = report.reason;
  j["enumerated"] = nlohmann::json::array();
  for (auto const &tb : report.enumerated) j["enumerated"].push_back({{"p", tb.p}, {"q", tb.q}});
  j["candidates"] = nlohmann::json::array();
  for (auto const &c : report.candidates) {
    nlohmann::json cj;
    cj["class"] = to_json(c.descriptor);
    cj["det"] = bigint_json(c.det);
    cj["q_class"] = c.q_class;
    cj["evidence"] = c.evidence;
    cj["witness"] = c.witness ? nlohmann::json(*c.witness) : nlohmann::json(nullptr);
    cj["budget_errors"] = c.budget_errors;
    cj["survives"] = c.survives;
    j["candidates"].push_back(cj);
  }
  return j;
}

}  // namespace orbiknot
