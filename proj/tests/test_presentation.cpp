#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "orbiknot/json_io.hpp"
#include "orbiknot/presentation.hpp"

using namespace orbiknot;

TEST_CASE("Wirtinger presentation of the trefoil", "[presentation]") {
  auto p = wirtinger(oracle::load_fixture("trefoil"));
  CHECK(p.n_generators == 3);
  CHECK(p.relators.size() == 3);
  CHECK(p.meridians == std::vector<int>{1, 2, 3});
  for (auto const &w : p.relators) CHECK(w.size() == 4);
}

TEST_CASE("Wirtinger arcs match the over-strand oracle", "[presentation]") {
  for (auto const &name : oracle::fixture_names()) {
    auto code = oracle::load_fixture(name);
    int count = 0;
    auto arcs = oracle::arc_of_label(code, &count);
    auto w = wirtinger_arcs(code);
    INFO(name);
    CHECK(w.count == count);
    for (int l = 1; l <= code.arc_count; ++l) {
      for (int m = 1; m <= code.arc_count; ++m) {
        CHECK((arcs[l] == arcs[m]) == (w.arc_of_label[l] == w.arc_of_label[m]));
      }
    }
  }
}

TEST_CASE("orbifold quotient adds one square per meridian", "[presentation]") {
  auto p = orbifold_quotient(wirtinger(oracle::load_fixture("trefoil")));
  CHECK(p.relators.size() == 6);
  for (int m = 1; m <= 3; ++m) {
    CHECK(std::find(p.relators.begin(), p.relators.end(), Word{m, m}) != p.relators.end());
  }
  CHECK_THROWS_AS(orbifold_quotient(triangle_presentation(2, 3, 5)), PresentationError);
}

TEST_CASE("presentation validation and JSON round trip", "[presentation]") {
  GroupPresentation bad{2, {{1, 3}}, {}};
  CHECK_THROWS_AS(require_valid(bad), PresentationError);
  auto t = triangle_presentation(2, 3, 7);
  CHECK(presentation_from_json(nlohmann::json::parse(to_json(t).dump())) == t);
  auto d = dihedral_presentation(5);
  CHECK(d.meridians == std::vector<int>{1, 2});
  CHECK_THROWS_AS(presentation_from_json(nlohmann::json::parse(R"({"ngens": 1})")), PresentationError);
}
