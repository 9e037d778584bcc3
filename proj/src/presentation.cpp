#include "orbiknot/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace orbiknot {

void require_valid(GroupPresentation const &pres) {
  if (pres.n_generators < 0) throw PresentationError("negative generator count");
  for (auto const &w : pres.relators) {
    for (int letter : w) {
      if (letter == 0 || std::abs(letter) > pres.n_generators) {
        throw PresentationError("relator letter " + std::to_string(letter) + " out of range");
      }
    }
  }
  for (int m : pres.meridians) {
    if (m < 1 || m > pres.n_generators) {
      throw PresentationError("meridian index " + std::to_string(m) + " out of range");
    }
  }
}

WirtingerArcs wirtinger_arcs(PDCode const &code) {
  require_valid(code);
  std::vector<int> parent(code.arc_count + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto const &x : code.crossings) {
    int a = find(x[1]), b = find(x[3]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  WirtingerArcs arcs;
  arcs.arc_of_label.assign(code.arc_count + 1, -1);
  std::vector<int> index_of_root(code.arc_count + 1, -1);
  for (int label = 1; label <= code.arc_count; ++label) {
    int r = find(label);
    if (index_of_root[r] < 0) index_of_root[r] = arcs.count++;
    arcs.arc_of_label[label] = index_of_root[r];
  }
  return arcs;
}

GroupPresentation wirtinger(PDCode const &code) {
  auto arcs = wirtinger_arcs(code);
  auto od = orient(code);
  GroupPresentation pres;
  pres.n_generators = arcs.count;
  pres.meridians.resize(arcs.count);
  std::iota(pres.meridians.begin(), pres.meridians.end(), 1);
  for (std::size_t c = 0; c < code.crossings.size(); ++c) {
    auto const &x = code.crossings[c];
    int over = arcs.arc_of_label[x[1]] + 1;
    int in = arcs.arc_of_label[x[0]] + 1;
    int out = arcs.arc_of_label[x[2]] + 1;
    if (od.sign(code.crossings, static_cast<int>(c)) > 0) {
      pres.relators.push_back({over, in, -over, -out});
    } else {
      pres.relators.push_back({-over, in, over, -out});
    }
  }
  return pres;
}

GroupPresentation orbifold_quotient(GroupPresentation const &pres) {
  require_valid(pres);
  if (pres.meridians.empty()) {
    throw PresentationError("orbifold quotient needs at least one meridian generator");
  }
  GroupPresentation out = pres;
  for (int m : pres.meridians) out.relators.push_back({m, m});
  return out;
}

GroupPresentation dihedral_presentation(int n) {
  if (n < 1) throw PresentationError("dihedral presentation needs n >= 1");
  GroupPresentation pres;
  pres.n_generators = 2;
  pres.meridians = {1, 2};
  pres.relators = {{1, 1}, {2, 2}, {}};
  for (int i = 0; i < n; ++i) {
    pres.relators[2].push_back(1);
    pres.relators[2].push_back(2);
  }
  return pres;
}

GroupPresentation triangle_presentation(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw PresentationError("triangle exponents must be positive");
  GroupPresentation pres;
  pres.n_generators = 3;
  pres.relators = {Word(a, 1), Word(b, 2), Word(c, 3), {1, 2, 3}};
  return pres;
}

}  // namespace orbiknot
