#include "orbiknot/triangle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "orbiknot/diagrams.hpp"
#include "orbiknot/montesinos.hpp"
#include "orbiknot/pd_code.hpp"

namespace orbiknot {

TriangleParams make_triangle(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  for (int x : v) {
    if (x < 2) throw TriangleError("triangle group indices must be >= 2, got " + std::to_string(x));
  }
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

std::string to_string(TriangleType t) {
  switch (t) {
    case TriangleType::Elliptic:
      return "Elliptic";
    case TriangleType::Euclidean:
      return "Euclidean";
    case TriangleType::Hyperbolic:
      return "Hyperbolic";
  }
  return {};
}

Rational minus_chi(TriangleParams const &t) {
  return Rational(1) - (Rational(1, t.a) + Rational(1, t.b) + Rational(1, t.c));
}

TriangleType classify(TriangleParams const &t) {
  auto chi = minus_chi(t);
  if (chi.numerator() < 0) return TriangleType::Elliptic;
  if (chi.numerator() == 0) return TriangleType::Euclidean;
  return TriangleType::Hyperbolic;
}

std::optional<std::int64_t> elliptic_order(TriangleParams const &t) {
  if (classify(t) != TriangleType::Elliptic) return std::nullopt;
  if (t.a == 2 && t.b == 2) return 2 * static_cast<std::int64_t>(t.c);
  if (t.a == 2 && t.b == 3) {
    if (t.c == 3) return 12;
    if (t.c == 4) return 24;
    if (t.c == 5) return 60;
  }
  return std::nullopt;
}

std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::ExcludedByChi:
      return "ExcludedByChi";
    case ObstructionKind::ExcludedByTorsion:
      return "ExcludedByTorsion";
    case ObstructionKind::NotExcluded:
      return "NotExcluded";
  }
  return {};
}

namespace {
std::string triple_text(TriangleParams const &t) {
  return "T(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
}
}  // namespace

EpiObstruction epi_obstruction(TriangleParams const &src, TriangleParams const &dst) {
  EpiObstruction out;
  bool both_hyperbolic = classify(src) == TriangleType::Hyperbolic && classify(dst) == TriangleType::Hyperbolic;
  if (both_hyperbolic && minus_chi(src) < minus_chi(dst)) {
    out.kind = ObstructionKind::ExcludedByChi;
    out.detail = "-chi " + triple_text(src) + " = " + to_string(minus_chi(src)) + " < -chi " + triple_text(dst) +
                 " = " + to_string(minus_chi(dst));
    return out;
  }
  if (classify(dst) == TriangleType::Elliptic) {
    out.detail = "no test applies to a finite target";
    return out;
  }
  out.heuristic = true;
  std::array<int, 3> s{src.a, src.b, src.c};
  std::array<int, 3> d{dst.a, dst.b, dst.c};
  for (int i = 0; i < 3; ++i) {
    int other1 = s[(i + 1) % 3];
    int other2 = s[(i + 2) % 3];
    if (std::gcd(other1, other2) != 1) continue;
    bool shares = std::any_of(d.begin(), d.end(), [&](int x) { return std::gcd(x, s[i]) > 1; });
    if (!shares) {
      out.kind = ObstructionKind::ExcludedByTorsion;
      out.detail = "generator of order " + std::to_string(s[i]) + " in " + triple_text(src) +
                   " must map to a nontrivial torsion element, but no index of " + triple_text(dst) +
                   " shares a factor with " + std::to_string(s[i]);
      return out;
    }
  }
  out.detail = "Euler characteristic and torsion tests passed";
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

DominationVerdict torus_knot_pi_minimal(int p, int q) {
  if (p > q) std::swap(p, q);
  if (p < 2 || p == q || std::gcd(p, q) != 1) {
    throw TriangleError("torus knot needs 2 <= p < q with gcd(p,q) = 1");
  }
  auto pq = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (is_prime(p) && is_prime(q)) {
    return DominationVerdict::certified("torus knot with prime p and q is pi-minimal", {"p and q prime for " + pq});
  }
  int bad = is_prime(p) ? q : p;
  return DominationVerdict::consistent(
      {"hypothesis not met: " + std::to_string(bad) + " is not prime; minimality unknown"});
}

DominationVerdict montesinos_pi_minimal(MontesinosLink const &m) {
  require_valid(m);
  if (m.r() != 3) throw MontesinosError("pi-minimality test needs exactly three tangles");
  std::array<std::int64_t, 3> alpha{};
  for (int i = 0; i < 3; ++i) alpha[i] = m.tangles[i].denominator();
  std::sort(alpha.begin(), alpha.end());
  auto not_met = [](std::string why) {
    return DominationVerdict::consistent({"hypothesis not met: " + why + "; minimality unknown"});
  };
  if (alpha[0] == alpha[1] || alpha[1] == alpha[2]) return not_met("denominators are not distinct");
  for (auto a : alpha) {
    if (!is_prime(a)) return not_met(std::to_string(a) + " is not prime");
  }
  if (is_elliptic(m)) return not_met("elliptic");
  if (component_count(montesinos_diagram(m)) != 1) return not_met("not a knot");
  return DominationVerdict::certified(
      "non-elliptic Montesinos knot with distinct prime denominators is pi-minimal",
      {"denominators " + std::to_string(alpha[0]) + " < " + std::to_string(alpha[1]) + " < " +
       std::to_string(alpha[2]) + " prime", "non-elliptic", "knot"});
}

}  // namespace orbiknot
