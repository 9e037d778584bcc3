// Regenerates the PD fixtures: make_fixtures <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "orbiknot/diagrams.hpp"
#include "orbiknot/json_io.hpp"
#include "orbiknot/montesinos_link.hpp"

using namespace orbiknot;

namespace {

PDCode trefoil() { return {{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, 6}; }

PDCode unlink_r2() {
  TangleBuilder b;
  auto t = b.zero();
  b.twist_horizontal(t, 1);
  b.twist_horizontal(t, -1);
  b.close_numerator(t);
  return b.to_pd();
}

}  // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 1;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);

  std::vector<std::pair<std::string, PDCode>> fixtures = {
      {"unknot", PDCode{{}, 1}},
      {"hopf", PDCode{{{1, 3, 2, 4}, {3, 1, 4, 2}}, 4}},
      {"trefoil", trefoil()},
      {"trefoil_alt", montesinos_diagram(parse_montesinos("3/4"))},
      {"figure_eight", PDCode{{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}, 8}},
      {"5_2", two_bridge_diagram({7, 2})},
      {"6_1", two_bridge_diagram({9, 7})},
      {"7_4", two_bridge_diagram({15, 4})},
      {"8_19", montesinos_diagram(parse_montesinos("1/3,1/3,-1/2"))},
      {"11a201", montesinos_diagram(parse_montesinos("1/3,2/3,4/5"))},
      {"unlink2", unlink_r2()},
      {"granny", connected_sum(trefoil(), trefoil())},
      {"square", connected_sum(trefoil(), mirror(trefoil()))},
  };
  for (auto const &[name, code] : fixtures) {
    require_valid(code);
    std::ofstream out(dir / (name + ".pd.json"));
    out << to_json(code).dump() << "\n";
  }
  std::cout << "wrote " << fixtures.size() << " fixtures to " << dir.string() << "\n";
  return 0;
}
