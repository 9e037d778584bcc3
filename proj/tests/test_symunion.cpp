#include <catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "orbiknot/diagrams.hpp"
#include "orbiknot/invariants.hpp"
#include "orbiknot/symunion.hpp"

using namespace orbiknot;

namespace {

int inverse_mod(int q, int p) {
  for (int x = 1; x < p; ++x) {
    if ((q * x) % p == 1) return x;
  }
  return 0;
}

std::set<int> brute_class(int p, int q) {
  std::set<int> out;
  int inv = inverse_mod(q, p);
  for (int x : {q, p - q, inv, p - inv}) out.insert(x % p);
  return out;
}

}  // namespace

TEST_CASE("determinant square law", "[symunion]") {
  CHECK(det_square_test(9, 3));
  CHECK(det_square_test(81, 9));
  CHECK_FALSE(det_square_test(5, 3));
  CHECK(det_square_test(0, 0));
}

TEST_CASE("partial knot candidates", "[symunion]") {
  auto c81 = two_bridge_partial_candidates(81);
  REQUIRE(c81.candidates.size() == 2);
  CHECK(c81.candidates[0] == TwoBridgeParams{9, 1});
  CHECK(brute_class(9, c81.candidates[1].q) == brute_class(9, 7));
  auto c9 = two_bridge_partial_candidates(9);
  CHECK(c9.candidates == std::vector<TwoBridgeParams>{{3, 1}});
  auto c5 = two_bridge_partial_candidates(5);
  CHECK(c5.candidates.empty());
  CHECK(c5.reason.find("no symmetric union possible by det law") == 0);
  CHECK(two_bridge_partial_candidates(1).candidates == std::vector<TwoBridgeParams>{{1, 0}});
  CHECK(two_bridge_partial_candidates(36).candidates.empty());
}

TEST_CASE("candidate classes partition the units", "[symunion]") {
  for (int p = 3; p <= 49; p += 2) {
    auto cands = two_bridge_partial_candidates(static_cast<long long>(p) * p).candidates;
    std::set<int> covered;
    for (auto const &c : cands) {
      REQUIRE(c.p == p);
      auto cls = brute_class(p, c.q);
      CHECK(std::vector<int>(cls.begin(), cls.end()) == two_bridge_class(p, c.q));
      CHECK(c.q == *cls.begin());
      for (int x : cls) {
        CHECK(covered.insert(x).second);
        // Closed under the equivalences: every member maps back to the same class.
        CHECK(brute_class(p, x) == cls);
      }
    }
    std::set<int> units;
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) == 1) units.insert(q);
    }
    CHECK(covered == units);
  }
}

TEST_CASE("class filter", "[symunion]") {
  auto v = partial_knot_class_filter(LinkClassDescriptor::make_two_bridge(9, 2), LinkClassDescriptor::torus_knot(3, 4));
  CHECK(v.kind == VerdictKind::Excluded);
  CHECK(v.reason == "two-bridge");
  CHECK(partial_knot_class_filter(LinkClassDescriptor::unknot(), LinkClassDescriptor::unknot()).kind ==
        VerdictKind::ConsistentWithDomination);
  CHECK(partial_knot_class_filter(LinkClassDescriptor::unknot(), LinkClassDescriptor::make_two_bridge(3, 1)).reason ==
        "unknot");
  auto sum = partial_knot_class_filter(parse_descriptor("montesinos:1/3,2/3,4/5"),
                                       parse_descriptor("sum:twobridge:3/1+montesinos:1/2,1/3,1/5"));
  CHECK(sum.reason == "connected-sum-bound");
  auto skew = partial_knot_class_filter(LinkClassDescriptor::make_two_bridge(9, 2),
                                        LinkClassDescriptor::make_two_bridge(3, 1));
  CHECK(skew.kind == VerdictKind::ConsistentWithDomination);
  CHECK(std::find(skew.evidence.begin(), skew.evidence.end(), "skew: the symmetric union is skew") !=
        skew.evidence.end());
  CHECK(partial_knot_class_filter(parse_descriptor("montesinos:1/3,2/3,4/5"),
                                  parse_descriptor("montesinos:1/2,1/3,1/5,1/7"))
            .reason == "tangle-count");
}

TEST_CASE("partial knot reports", "[symunion]") {
  auto trefoil = partial_knot_report(oracle::load_fixture("trefoil"), std::nullopt);
  CHECK(trefoil.det == 3);
  CHECK_FALSE(trefoil.det_law_passed);
  CHECK(trefoil.candidates.empty());
  CHECK(trefoil.reason.find("det law") != std::string::npos);

  auto six = partial_knot_report(oracle::load_fixture("6_1"), LinkClassDescriptor::make_two_bridge(9, 7));
  auto surv = six.survivors();
  REQUIRE(surv.size() == 1);
  CHECK(to_string(surv[0].descriptor) == "twobridge:3/1");
  CHECK_FALSE(surv[0].witness.has_value());

  CHECK_THROWS_AS(partial_knot_report(oracle::load_fixture("hopf"), std::nullopt), ValidationError);
}

TEST_CASE("report soundness on the 11a201 fixture", "[symunion]") {
  auto report = partial_knot_report(oracle::load_fixture("11a201"), parse_descriptor("montesinos:1/3,2/3,4/5"));
  CHECK(report.det == 81);
  CHECK(report.det_law_passed);
  for (auto const &c : report.candidates) {
    CHECK_FALSE(c.evidence.empty());
    CHECK(det_square_test(report.det, c.det));
    if (c.survives) {
      CHECK_FALSE(c.witness.has_value());
      CHECK(partial_knot_class_filter(parse_descriptor("montesinos:1/3,2/3,4/5"), c.descriptor).kind !=
            VerdictKind::Excluded);
    }
  }
  auto j = to_json(report);
  CHECK(j.at("det") == 81);
}

TEST_CASE("survivor quotients are quotients of the knot", "[symunion]") {
  auto knot = oracle::load_fixture("6_1");
  auto report = partial_knot_report(knot, std::nullopt);
  auto kp = quotient_profile(orbifold_quotient(wirtinger(knot)), default_battery());
  for (auto const &c : report.survivors()) {
    auto tb = two_bridge_diagram(c.descriptor.two_bridge);
    auto cp = quotient_profile(orbifold_quotient(wirtinger(tb)), default_battery());
    for (auto const &[name, counts] : cp) {
      if (counts.epis > 0) CHECK(kp.at(name).epis > 0);
    }
  }
}
