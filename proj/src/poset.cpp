#include "orbiknot/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbiknot {

std::vector<MontesinosLink> normalized_montesinos_classes(int alpha_max, int r_max) {
  if (alpha_max < 2 || r_max < 3) return {};
  std::vector<Rational> fractions;
  for (int a = 2; a <= alpha_max; ++a) {
    for (int b = 1; b < a; ++b) {
      if (std::gcd(a, b) == 1) fractions.emplace_back(b, a);
    }
  }
  std::sort(fractions.begin(), fractions.end());
  std::vector<MontesinosLink> out;
  for (int r = 3; r <= r_max; ++r) {
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      MontesinosLink m;
      for (auto i : idx) m.tangles.push_back(fractions[i]);
      if (normalize(m).canonical == m.tangles) out.push_back(m);
      int k = r - 1;
      while (k >= 0 && idx[k] + 1 == fractions.size()) idx[k--] = 0;
      if (k < 0) break;
      ++idx[k];
    }
  }
  return out;
}

Poset build_poset(int alpha_max, int r_max) {
  Poset poset;
  poset.nodes = normalized_montesinos_classes(alpha_max, r_max);
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    for (std::size_t j = 0; j < poset.nodes.size(); ++j) {
      if (i == j) continue;
      auto v = domination_filter(poset.nodes[i], LinkClassDescriptor::make_montesinos(poset.nodes[j]));
      poset.edges.push_back({i, j, std::move(v)});
    }
  }
  return poset;
}

std::string to_dot(Poset const &poset) {
  std::ostringstream out;
  out << "digraph domination {\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    auto const &m = poset.nodes[i];
    std::string label;
    for (std::size_t k = 0; k < m.r(); ++k) label += (k ? "," : "") + to_string(m.tangles[k]);
    out << "  n" << i << " [label=\"L(" << label << ")\\ndet " << det(m).str() << "\"];\n";
  }
  for (auto const &e : poset.edges) {
    std::string style = "solid";
    std::string label = "consistent";
    if (e.verdict.kind == VerdictKind::Excluded) {
      style = "dashed";
      label = e.verdict.reason;
    } else if (e.verdict.kind == VerdictKind::CertifiedByTheorem) {
      style = "bold";
      label = "certified";
    }
    out << "  n" << e.src << " -> n" << e.dst << " [style=" << style << ", label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace orbiknot
