#include "orbiknot/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace orbiknot {

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
                         std::vector<Element> generators)
    : name_(std::move(name)), order_(order), table_(std::move(table)), generators_(std::move(generators)) {
  if (order_ == 0 || order_ > 65535) throw GroupError("group order out of range");
  if (table_.size() != order_ * order_) throw GroupError("multiplication table has wrong size");
  for (auto e : table_) {
    if (e >= order_) throw GroupError("table entry out of range");
  }
  for (std::size_t a = 0; a < order_; ++a) {
    if (multiply(0, a) != a || multiply(a, 0) != a) throw GroupError(name_ + ": 0 is not the identity");
  }
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    std::vector<char> seen(order_, 0);
    bool found = false;
    for (std::size_t b = 0; b < order_; ++b) {
      auto ab = multiply(a, b);
      if (seen[ab]) throw GroupError(name_ + ": table row is not a permutation");
      seen[ab] = 1;
      if (ab == 0) {
        if (multiply(b, a) != 0) throw GroupError(name_ + ": left and right inverses differ");
        inverse_[a] = static_cast<Element>(b);
        found = true;
      }
    }
    if (!found) throw GroupError(name_ + ": missing inverse");
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, order_ - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    auto a = static_cast<Element>(pick(rng)), b = static_cast<Element>(pick(rng)),
         c = static_cast<Element>(pick(rng));
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
      throw GroupError(name_ + ": multiplication is not associative");
    }
  }
  element_order_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    Element x = static_cast<Element>(a);
    int k = 1;
    while (x != 0) {
      x = multiply(x, static_cast<Element>(a));
      ++k;
    }
    element_order_[a] = k;
    if (k == 2) involutions_.push_back(static_cast<Element>(a));
  }
  for (auto g : generators_) {
    if (g >= order_) throw GroupError("generator out of range");
  }
}

std::size_t FiniteGroup::subgroup_order(std::span<Element const> elements) const {
  std::vector<char> in(order_, 0);
  std::vector<Element> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto g : elements) {
      auto x = multiply(members[i], g);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  return members.size();
}

Permutation from_cycles(int points, std::vector<std::vector<int>> const &cycles) {
  Permutation p(points);
  std::iota(p.begin(), p.end(), 0);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i] - 1, to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || from >= points || to < 0 || to >= points) throw GroupError("cycle point out of range");
      p[from] = to;
    }
  }
  return p;
}

FiniteGroup group_from_permutations(std::vector<Permutation> const &gens, std::size_t cap,
                                    std::string name) {
  std::size_t points = gens.empty() ? 0 : gens.front().size();
  for (auto const &g : gens) {
    if (g.size() != points) throw GroupError("permutations act on different sets");
    auto sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < points; ++i) {
      if (sorted[i] != static_cast<int>(i)) throw GroupError("not a permutation");
    }
  }
  auto compose = [](Permutation const &a, Permutation const &b) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
  };
  Permutation id(points);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (auto const &g : gens) {
      auto x = compose(elements[i], g);
      if (index.emplace(x, elements.size()).second) {
        elements.push_back(std::move(x));
        if (elements.size() > cap) {
          throw GroupError("Cayley closure exceeds cap of " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  auto const n = elements.size();
  std::vector<FiniteGroup::Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<FiniteGroup::Element>(index.at(compose(elements[a], elements[b])));
    }
  }
  std::vector<FiniteGroup::Element> gen_index;
  for (auto const &g : gens) gen_index.push_back(static_cast<FiniteGroup::Element>(index.at(g)));
  if (name.empty()) name = "G" + std::to_string(n);
  return FiniteGroup(std::move(name), n, std::move(table), std::move(gen_index));
}

FiniteGroup dihedral(int n) {
  if (n < 1) throw GroupError("dihedral group needs n >= 1");
  auto const order = static_cast<std::size_t>(2 * n);
  // r^i = i, s r^i = n + i; s r^i s = r^-i.
  std::vector<FiniteGroup::Element> table(order * order);
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      int sa = a / n, ra = a % n, sb = b / n, rb = b % n;
      int r = ((sb ? -ra : ra) + rb) % n;
      if (r < 0) r += n;
      table[a * order + b] = static_cast<FiniteGroup::Element>((sa ^ sb) * n + r);
    }
  }
  std::vector<FiniteGroup::Element> gens{static_cast<FiniteGroup::Element>(n)};
  if (n > 1) gens.push_back(static_cast<FiniteGroup::Element>(n + 1));
  return FiniteGroup("D" + std::to_string(2 * n), order, std::move(table), std::move(gens));
}

FiniteGroup cyclic(int n) {
  if (n < 1) throw GroupError("cyclic group needs n >= 1");
  auto const order = static_cast<std::size_t>(n);
  std::vector<FiniteGroup::Element> table(order * order);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a * order + b] = static_cast<FiniteGroup::Element>((a + b) % n);
  }
  return FiniteGroup(n == 1 ? "trivial" : "Z" + std::to_string(n), order, std::move(table),
                     {static_cast<FiniteGroup::Element>(n > 1 ? 1 : 0)});
}

FiniteGroup symmetric(int k) {
  if (k < 1) throw GroupError("symmetric group needs k >= 1");
  if (k == 1) return cyclic(1);
  std::vector<int> cycle(k);
  std::iota(cycle.begin(), cycle.end(), 1);
  return group_from_permutations({from_cycles(k, {cycle}), from_cycles(k, {{1, 2}})},
                                 FiniteGroup::kDefaultCap, "S" + std::to_string(k));
}

FiniteGroup alternating(int k) {
  if (k < 3) return cyclic(1);
  std::vector<Permutation> gens;
  for (int i = 3; i <= k; ++i) gens.push_back(from_cycles(k, {{1, 2, i}}));
  return group_from_permutations(gens, FiniteGroup::kDefaultCap, "A" + std::to_string(k));
}

FiniteGroup direct_product(FiniteGroup const &a, FiniteGroup const &b) {
  auto const na = a.order(), nb = b.order(), n = na * nb;
  std::vector<FiniteGroup::Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto xa = static_cast<FiniteGroup::Element>(x / nb), xb = static_cast<FiniteGroup::Element>(x % nb);
      auto ya = static_cast<FiniteGroup::Element>(y / nb), yb = static_cast<FiniteGroup::Element>(y % nb);
      table[x * n + y] = static_cast<FiniteGroup::Element>(a.multiply(xa, ya) * nb + b.multiply(xb, yb));
    }
  }
  std::vector<FiniteGroup::Element> gens;
  for (auto g : a.generators()) gens.push_back(static_cast<FiniteGroup::Element>(g * nb));
  for (auto g : b.generators()) gens.push_back(g);
  return FiniteGroup(a.name() + "x" + b.name(), n, std::move(table), std::move(gens));
}

FiniteGroup named_group(std::string const &name) {
  auto number = [&](std::size_t from) {
    auto rest = name.substr(from);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) {
      throw GroupError("unknown group name '" + name + "'");
    }
    return std::stoi(rest);
  };
  if (name == "trivial" || name == "1") return cyclic(1);
  if (auto x = name.find('x'); x != std::string::npos) {
    return direct_product(named_group(name.substr(0, x)), named_group(name.substr(x + 1)));
  }
  if (name.empty()) throw GroupError("empty group name");
  switch (name[0]) {
    case 'D': {
      int order = number(1);
      if (order < 2 || order % 2) throw GroupError("dihedral name needs an even order, e.g. D6");
      return dihedral(order / 2);
    }
    case 'Z': return cyclic(number(1));
    case 'S': return symmetric(number(1));
    case 'A': return alternating(number(1));
    default: throw GroupError("unknown group name '" + name + "'");
  }
}

std::vector<FiniteGroup> default_battery() {
  std::vector<FiniteGroup> out;
  for (int n = 2; n <= 13; ++n) out.push_back(dihedral(n));
  out.push_back(alternating(4));
  out.push_back(symmetric(4));
  out.push_back(alternating(5));
  out.push_back(direct_product(symmetric(3), cyclic(2)));
  return out;
}

}  // namespace orbiknot
