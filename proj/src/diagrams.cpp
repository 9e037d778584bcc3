#include "orbiknot/diagrams.hpp"

#include <stdexcept>

namespace orbiknot {

namespace {
// Slot order around a crossing, counterclockwise.
enum Dir { NE = 0, NW = 1, SW = 2, SE = 3 };
}  // namespace

int TangleBuilder::new_terminal() {
  ports_.push_back({});
  ports_.back().terminal = true;
  return static_cast<int>(ports_.size()) - 1;
}

int TangleBuilder::new_crossing(bool nw_se_over) {
  int base = static_cast<int>(ports_.size());
  ports_.resize(ports_.size() + 4);
  crossing_port_base_.push_back(base);
  crossings_.push_back({nw_se_over});
  return static_cast<int>(crossings_.size()) - 1;
}

void TangleBuilder::connect(int a, int b) {
  auto attach = [this](int at, int to) {
    auto &p = ports_[at];
    int k = p.link[0] == -1 ? 0 : 1;
    if (p.link[k] != -1 || (!p.terminal && k == 1)) {
      throw std::logic_error("tangle port connected twice");
    }
    p.link[k] = to;
  };
  attach(a, b);
  attach(b, a);
}

TangleBuilder::Tangle TangleBuilder::zero() {
  Tangle t{new_terminal(), new_terminal(), new_terminal(), new_terminal()};
  connect(t.nw, t.ne);
  connect(t.sw, t.se);
  return t;
}

TangleBuilder::Tangle TangleBuilder::infinity() {
  Tangle t{new_terminal(), new_terminal(), new_terminal(), new_terminal()};
  connect(t.nw, t.sw);
  connect(t.ne, t.se);
  return t;
}

void TangleBuilder::twist_horizontal(Tangle &t, int sign) {
  int c = new_crossing(sign > 0);
  int base = crossing_port_base_[c];
  connect(t.ne, base + NW);
  connect(t.se, base + SW);
  t.ne = new_terminal();
  t.se = new_terminal();
  connect(t.ne, base + NE);
  connect(t.se, base + SE);
}

void TangleBuilder::twist_vertical(Tangle &t, int sign) {
  int c = new_crossing(sign > 0);
  int base = crossing_port_base_[c];
  connect(t.sw, base + NW);
  connect(t.se, base + NE);
  t.sw = new_terminal();
  t.se = new_terminal();
  connect(t.sw, base + SW);
  connect(t.se, base + SE);
}

TangleBuilder::Tangle TangleBuilder::rational(Rational slope) {
  if (slope.numerator() == 0) return zero();
  int const sign = slope.numerator() > 0 ? 1 : -1;
  std::int64_t p = slope.numerator() * sign, q = slope.denominator();
  std::vector<std::int64_t> terms;
  while (q != 0) {
    std::int64_t c = p / q;
    terms.push_back(c);
    std::int64_t rem = p - c * q;
    p = q;
    q = rem;
  }
  // Even-indexed terms are horizontal twists, odd-indexed vertical; the
  // innermost term is applied first.
  auto const last = terms.size() - 1;
  Tangle t = last % 2 == 0 ? zero() : infinity();
  for (std::size_t k = terms.size(); k-- > 0;) {
    for (std::int64_t i = 0; i < terms[k]; ++i) {
      if (k % 2 == 0) {
        twist_horizontal(t, sign);
      } else {
        twist_vertical(t, sign);
      }
    }
  }
  return t;
}

TangleBuilder::Tangle TangleBuilder::sum(Tangle a, Tangle b) {
  connect(a.ne, b.nw);
  connect(a.se, b.sw);
  return {a.nw, b.ne, a.sw, b.se};
}

void TangleBuilder::close_numerator(Tangle t) {
  connect(t.nw, t.ne);
  connect(t.sw, t.se);
}

void TangleBuilder::close_denominator(Tangle t) {
  connect(t.nw, t.sw);
  connect(t.ne, t.se);
}

int TangleBuilder::resolve(int slot_port) const {
  int prev = slot_port;
  int cur = ports_[slot_port].link[0];
  while (cur != -1 && ports_[cur].terminal) {
    auto const &p = ports_[cur];
    int next = p.link[0] == prev ? p.link[1] : p.link[0];
    prev = cur;
    cur = next;
  }
  if (cur == -1) throw std::logic_error("tangle has an open end");
  return cur;
}

PDCode TangleBuilder::to_pd() const {
  auto const n = static_cast<int>(crossings_.size());
  std::vector<int> crossing_of_port(ports_.size(), -1);
  for (int c = 0; c < n; ++c) {
    for (int d = 0; d < 4; ++d) crossing_of_port[crossing_port_base_[c] + d] = c;
  }
  std::vector<std::array<int, 4>> label(n, {0, 0, 0, 0});
  std::vector<std::array<char, 4>> entered(n, {0, 0, 0, 0});
  int next_label = 1;
  for (int c0 = 0; c0 < n; ++c0) {
    for (int d0 = 0; d0 < 4; ++d0) {
      if (label[c0][d0] != 0) continue;
      int c = c0, d = d0;
      do {
        entered[c][d] = 1;
        int exit_dir = (d + 2) % 4;
        int partner = resolve(crossing_port_base_[c] + exit_dir);
        int pc = crossing_of_port[partner];
        int pd = partner - crossing_port_base_[pc];
        label[c][exit_dir] = next_label;
        label[pc][pd] = next_label;
        ++next_label;
        c = pc;
        d = pd;
      } while (!(c == c0 && d == d0));
    }
  }

  // Loops made only of terminals.
  int free_loops = 0;
  std::vector<char> seen(ports_.size(), 0);
  for (std::size_t i = 0; i < ports_.size(); ++i) {
    if (!ports_[i].terminal || seen[i]) continue;
    if (ports_[i].link[0] == -1 || ports_[i].link[1] == -1) {
      throw std::logic_error("tangle has an open end");
    }
    bool touches_crossing = false;
    std::vector<int> stack{static_cast<int>(i)};
    seen[i] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : ports_[u].link) {
        if (!ports_[v].terminal) {
          touches_crossing = true;
        } else if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    if (!touches_crossing) ++free_loops;
  }

  PDCode code;
  code.arc_count = next_label - 1 + free_loops;
  for (int c = 0; c < n; ++c) {
    // Under-strand is NE-SW when NW-SE is over, else NW-SE.
    int u0 = crossings_[c].nw_se_over ? NE : NW;
    int in = entered[c][u0] ? u0 : (u0 + 2) % 4;
    code.crossings.push_back(
        {label[c][in], label[c][(in + 1) % 4], label[c][(in + 2) % 4], label[c][(in + 3) % 4]});
  }
  return code;
}

PDCode two_bridge_diagram(TwoBridgeParams const &params) {
  require_valid(params);
  TangleBuilder b;
  auto t = params.q == 0 ? b.infinity() : b.rational(Rational(params.p, params.q));
  b.close_numerator(t);
  return b.to_pd();
}

PDCode montesinos_diagram(MontesinosLink const &m) {
  require_valid(m);
  TangleBuilder b;
  auto t = b.rational(m.tangles.front());
  for (std::size_t i = 1; i < m.tangles.size(); ++i) t = b.sum(t, b.rational(m.tangles[i]));
  b.close_numerator(t);
  return b.to_pd();
}

}  // namespace orbiknot
