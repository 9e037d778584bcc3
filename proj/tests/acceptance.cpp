// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "orbiknot/cli.hpp"
#include "orbiknot/diagrams.hpp"
#include "orbiknot/finite_group.hpp"
#include "orbiknot/homsearch.hpp"
#include "orbiknot/invariants.hpp"
#include "orbiknot/montesinos.hpp"
#include "orbiknot/poset.hpp"
#include "orbiknot/presentation.hpp"
#include "orbiknot/symunion.hpp"
#include "orbiknot/triangle.hpp"

using namespace orbiknot;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string const &msg) {
    if (ok) detail = msg;
    ok = false;
  }
};

std::vector<Rational> small_fractions(int alpha_max) {
  std::vector<Rational> out;
  for (int a = 2; a <= alpha_max; ++a) {
    for (int b = 1; b < a; ++b) {
      if (std::gcd(a, b) == 1) out.emplace_back(b, a);
    }
  }
  return out;
}

// |e0| * prod alpha, computed independently of the library formula.
BigInt formula_det(MontesinosLink const &m) {
  Rational e0(0);
  BigInt prod = 1;
  for (auto const &t : m.tangles) {
    e0 += t;
    prod *= t.denominator();
  }
  BigInt num = e0.numerator() < 0 ? -e0.numerator() : e0.numerator();
  return num * prod / e0.denominator();
}

Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<MontesinosLink> links;
  auto fr = small_fractions(7);
  for (auto const &f : fr) links.push_back({{f}});
  for (std::size_t i = 0; i < fr.size(); ++i) {
    for (std::size_t j = i; j < fr.size(); ++j) links.push_back({{fr[i], fr[j]}});
  }
  for (auto const &m : normalized_montesinos_classes(7, 4)) links.push_back(m);
  std::size_t cases = 0;
  for (auto const &base : links) {
    for (int shift : {0, -1}) {
      auto m = base;
      m.tangles[0] += shift;
      if (m.tangles[0].numerator() == 0) continue;
      ++cases;
      auto d = determinant(montesinos_diagram(m));
      if (d != formula_det(m)) {
        o.fail("mismatch at " + to_string(LinkClassDescriptor::make_montesinos(m)));
      }
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 60) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = std::to_string(cases) + " links in " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto report = partial_knot_report(oracle::load_fixture("11a201"), std::nullopt);
  if (report.det != 81) o.fail("det " + report.det.str());
  std::set<std::vector<int>> expected{two_bridge_class(9, 1), two_bridge_class(9, 7)};
  std::set<std::vector<int>> enumerated;
  for (auto const &t : report.enumerated) {
    if (t.p != 9) o.fail("candidate with p = " + std::to_string(t.p));
    enumerated.insert(two_bridge_class(t.p, t.q));
  }
  if (enumerated != expected || report.enumerated.size() != 2) o.fail("enumeration differs from {S(9,1), S(9,7)}");
  for (auto const &s : report.survivors()) {
    if (!expected.count(two_bridge_class(s.descriptor.two_bridge.p, s.descriptor.two_bridge.q))) {
      o.fail("unexpected survivor " + to_string(s.descriptor));
    }
  }
  if (o.ok) o.detail = "det 81, " + std::to_string(report.survivors().size()) + " survivors";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (auto const &name : oracle::knot_fixture_names()) {
    auto code = oracle::load_fixture(name);
    auto orb = orbifold_quotient(wirtinger(code));
    auto d = determinant(code);
    for (int n : {2, 3, 5, 7}) {
      auto epis = count_homomorphisms(orb, dihedral(n)).epis;
      auto colorings = surjective_coloring_count(code, n);
      bool divides = d % n == 0;
      if (epis != colorings || (epis > 0) != divides) {
        o.fail(name + " n=" + std::to_string(n) + ": epis " + std::to_string(epis) + ", colorings " +
               std::to_string(colorings));
      }
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto unlink = oracle::load_fixture("unlink2");
  for (int n = 2; n <= 25; ++n) {
    if (!dihedral_epi_exists(unlink, n).exists) o.fail("no epi for n = " + std::to_string(n));
  }
  if (!dominates_all_two_bridge(unlink).is_certified()) o.fail("unlink not certified");
  for (auto const &name : oracle::knot_fixture_names()) {
    if (!dominates_all_two_bridge(oracle::load_fixture(name)).is_excluded()) o.fail(name + " not excluded");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto t0 = Clock::now();
  for (int p = 1; p <= 12; ++p) {
    for (int q = 1; q <= 12; ++q) {
      bool found = epimorphism_exists(dihedral_presentation(p), dihedral(q));
      if (found != two_bridge_dominates(p, q)) o.fail("disagreement at " + std::to_string(p) + "," + std::to_string(q));
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 10) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "144 pairs in " + std::to_string(secs) + " s";
  return o;
}

// Largest group generated by x, y with x^a = y^b = (xy)^c = 1 inside `pool`.
std::size_t realized_order(std::vector<oracle::Perm> const &pool, int a, int b, int c) {
  std::size_t best = 0;
  for (auto const &x : pool) {
    if (oracle::order(x) != a) continue;
    for (auto const &y : pool) {
      if (oracle::order(y) != b || oracle::order(oracle::compose(x, y)) != c) continue;
      best = std::max(best, oracle::closure({x, y}).size());
    }
  }
  return best;
}

Outcome criterion6() {
  Outcome o;
  auto src = make_triangle(2, 3, 7);
  auto dst = make_triangle(2, 3, 11);
  if (epi_obstruction(src, dst).kind != ObstructionKind::ExcludedByChi) o.fail("T(2,3,7) -> T(2,3,11) not excluded");
  if (minus_chi(src) != Rational(1, 42) || minus_chi(dst) != Rational(5, 66)) o.fail("minus_chi values");
  auto s5 = oracle::all_perms(5);
  int checked = 0;
  for (int a = 2; a <= 12; ++a) {
    for (int b = a; b <= 12; ++b) {
      for (int c = b; c <= 12; ++c) {
        auto t = make_triangle(a, b, c);
        if (classify(t) != TriangleType::Elliptic) continue;
        ++checked;
        auto pool = a == 2 && b == 2 ? oracle::dihedral_perms(c) : s5;
        auto realized = realized_order(pool, a, b, c);
        auto ord = elliptic_order(t);
        if (!ord || static_cast<std::size_t>(*ord) != realized) {
          o.fail("order mismatch for (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " elliptic triples";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto src = parse_montesinos("1/3,2/3,4/5");
  std::vector<std::pair<std::string, std::string>> battery{
      {"montesinos:1/2,1/3,1/5,1/7,1/11", "tangle-count"},
      {"sum:twobridge:3/1+montesinos:1/2,1/3,1/5", "connected-sum-bound"},
      {"twobridge:5/2", "det-divisibility"},
  };
  for (auto const &[cand, clause] : battery) {
    auto v = domination_filter(src, parse_descriptor(cand));
    if (!v.is_excluded() || v.reason != clause) o.fail(cand + " gave " + to_string(v.kind) + " " + v.reason);
  }
  if (domination_filter(src, LinkClassDescriptor::make_montesinos(src)).kind != VerdictKind::ConsistentWithDomination) {
    o.fail("self pair not consistent");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto names = oracle::fixture_names();
  int pairs = 0;
  for (auto const &a : names) {
    auto da = oracle::load_fixture(a);
    auto det_a = determinant(da);
    if (determinant(mirror(da)) != det_a) o.fail("mirror " + a);
    for (auto const &b : names) {
      auto db = oracle::load_fixture(b);
      ++pairs;
      if (determinant(connected_sum(da, db)) != det_a * determinant(db)) o.fail("sum " + a + " # " + b);
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::vector<std::vector<std::string>> runs{
      {"hom", "trefoil.pd.json", "--target", "D6", "--orbifold"},
      {"evidence", "6_1.pd.json", "trefoil.pd.json"},
  };
  for (auto const &base : runs) {
    std::string first;
    for (std::string threads : {"1", "2", "8"}) {
      auto args = base;
      args.insert(args.begin(), {"--fixtures", ORBIKNOT_FIXTURE_DIR});
      args.push_back("--threads");
      args.push_back(threads);
      std::ostringstream out;
      std::ostringstream err;
      if (run_cli(args, out, err) != kExitOk) o.fail(base[0] + " failed: " + err.str());
      if (threads == "1") {
        first = out.str();
      } else if (out.str() != first) {
        o.fail(base[0] + " differs at " + threads + " threads");
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Montesinos determinant cross-validation", criterion1},
      {"2 11a201 partial knot reproduction", criterion2},
      {"3 Fox/dihedral duality", criterion3},
      {"4 unlink dominates every 2-bridge link", criterion4},
      {"5 two-bridge domination law", criterion5},
      {"6 triangle obstruction and elliptic orders", criterion6},
      {"7 domination filter regression", criterion7},
      {"8 determinant multiplicativity and mirror invariance", criterion8},
      {"9 thread-count determinism", criterion9},
  };
  int failures = 0;
  for (auto const &[name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (std::exception const &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
