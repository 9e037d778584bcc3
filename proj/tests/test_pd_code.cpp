#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "orbiknot/diagrams.hpp"
#include "orbiknot/json_io.hpp"
#include "orbiknot/pd_code.hpp"

using namespace orbiknot;

TEST_CASE("fixtures are valid and have the expected component counts", "[pd]") {
  std::map<std::string, std::size_t> expected = {
      {"unknot", 1}, {"hopf", 2}, {"trefoil", 1},  {"trefoil_alt", 1}, {"figure_eight", 1}, {"5_2", 1}, {"6_1", 1},
      {"7_4", 1},    {"8_19", 1}, {"11a201", 1},   {"unlink2", 2},     {"granny", 1},       {"square", 1}};
  for (auto const &name : oracle::fixture_names()) {
    auto code = oracle::load_fixture(name);
    INFO(name);
    CHECK(validate_pd(code).empty());
    CHECK(component_count(code) == expected.at(name));
  }
}

TEST_CASE("validation reports malformed codes", "[pd]") {
  CHECK_FALSE(validate_pd(PDCode{{{1, 2, 3, 4}}, 4}).empty());
  CHECK_FALSE(validate_pd(PDCode{{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 9}}, 6}).empty());
  CHECK_FALSE(validate_pd(PDCode{{{1, 1, 1, 2}}, 2}).empty());
  CHECK_THROWS_AS(require_valid(PDCode{{{1, 4, 2, 5}, {3, 6, 4, 1}}, 6}), ValidationError);
  CHECK_THROWS_AS(pd_from_json(nlohmann::json::parse(R"({"crossings": [[1,2,3]]})")), ValidationError);
}

TEST_CASE("free circles are accepted as crossingless components", "[pd]") {
  PDCode two_circles{{}, 2};
  CHECK(validate_pd(two_circles).empty());
  CHECK(component_count(two_circles) == 2);
  CHECK(is_split_diagram(two_circles));
  CHECK_FALSE(is_split_diagram(oracle::load_fixture("trefoil")));
}

TEST_CASE("crossing signs of standard diagrams", "[pd]") {
  auto trefoil = oracle::load_fixture("trefoil");
  auto o = orient(trefoil);
  int writhe = 0;
  for (int c = 0; c < 3; ++c) writhe += o.sign(trefoil.crossings, c);
  CHECK(std::abs(writhe) == 3);
  auto m = mirror(trefoil);
  auto om = orient(m);
  int mirrored = 0;
  for (int c = 0; c < 3; ++c) mirrored += om.sign(m.crossings, c);
  CHECK(mirrored == -writhe);

  auto fig8 = oracle::load_fixture("figure_eight");
  auto of = orient(fig8);
  int w8 = 0;
  for (int c = 0; c < 4; ++c) w8 += of.sign(fig8.crossings, c);
  CHECK(w8 == 0);
}

TEST_CASE("faces satisfy the Euler formula on the sphere", "[pd]") {
  for (auto const &name : oracle::fixture_names()) {
    auto code = oracle::load_fixture(name);
    if (code.crossings.empty()) continue;
    int blocks = 0;
    crossing_blocks(code, &blocks);
    auto f = faces(code);
    auto v = static_cast<int>(code.crossings.size());
    INFO(name);
    CHECK(v - 2 * v + f.face_count == 2 * blocks);
  }
}

TEST_CASE("mirror is an involution and connected sums add crossings", "[pd]") {
  for (auto const &name : oracle::fixture_names()) {
    auto code = oracle::load_fixture(name);
    INFO(name);
    CHECK(validate_pd(mirror(code)).empty());
    CHECK(mirror(mirror(code)).crossings.size() == code.crossings.size());
    CHECK(component_count(mirror(code)) == component_count(code));
  }
  auto t = oracle::load_fixture("trefoil");
  auto f = oracle::load_fixture("figure_eight");
  auto s = connected_sum(t, f);
  CHECK(validate_pd(s).empty());
  CHECK(s.crossings.size() == 7);
  CHECK(component_count(s) == 1);
  CHECK(connected_sum(PDCode{{}, 1}, t) == t);
}

TEST_CASE("JSON round trip of PD codes", "[pd]") {
  for (auto const &name : oracle::fixture_names()) {
    auto code = oracle::load_fixture(name);
    CHECK(pd_from_json(nlohmann::json::parse(to_json(code).dump())) == code);
  }
}

TEST_CASE("2-bridge diagrams are valid with the right component count", "[pd]") {
  for (int p = 2; p <= 30; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto code = two_bridge_diagram({p, q});
      INFO(p << "/" << q);
      REQUIRE(validate_pd(code).empty());
      CHECK(component_count(code) == (p % 2 == 0 ? 2u : 1u));
    }
  }
}
