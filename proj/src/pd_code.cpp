#include "orbiknot/pd_code.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

namespace orbiknot {

namespace {

enum Role : char { kUnknown = 0, kIn = 1, kOut = 2 };

// Both occurrences of each label; empty for free circles.
std::vector<std::vector<Slot>> occurrences(PDCode const &code) {
  std::vector<std::vector<Slot>> occ(static_cast<std::size_t>(std::max(code.arc_count, 0)) + 1);
  for (int c = 0; c < static_cast<int>(code.crossings.size()); ++c) {
    for (int p = 0; p < 4; ++p) {
      int label = code.crossings[c][p];
      if (label >= 1 && label <= code.arc_count) occ[label].push_back({c, p});
    }
  }
  return occ;
}

Slot other_end(std::vector<std::vector<Slot>> const &occ, PDCode const &code, Slot s) {
  auto const &pair = occ[code.crossings[s.crossing][s.position]];
  return pair[0] == s ? pair[1] : pair[0];
}

// Fallback for over-strands whose orientation is not forced: the over-arc runs
// from label l to l+1, wrapping from the largest label to the smallest.
int fallback_over_in(Crossing const &x) {
  int b = x[1], d = x[3];
  return (b == d + 1 || d > b + 1) ? 3 : 1;
}

// Propagates arc orientation; returns an error message on conflict.
std::optional<std::string> propagate(PDCode const &code, std::vector<std::vector<Slot>> const &occ,
                                     std::vector<std::array<Role, 4>> &role) {
  auto const n = static_cast<int>(code.crossings.size());
  role.assign(n, {kIn, kUnknown, kOut, kUnknown});
  std::deque<Slot> queue;
  for (int c = 0; c < n; ++c) {
    queue.push_back({c, 0});
    queue.push_back({c, 2});
  }
  auto set_over = [&](int c, int in_pos) {
    role[c][in_pos] = kIn;
    role[c][in_pos == 1 ? 3 : 1] = kOut;
    queue.push_back({c, 1});
    queue.push_back({c, 3});
  };
  int next_unresolved = 0;
  while (true) {
    while (!queue.empty()) {
      Slot s = queue.front();
      queue.pop_front();
      Role r = role[s.crossing][s.position];
      Slot t = other_end(occ, code, s);
      Role want = r == kIn ? kOut : kIn;
      Role have = role[t.crossing][t.position];
      if (have == kUnknown) {
        set_over(t.crossing, want == kIn ? t.position : (t.position == 1 ? 3 : 1));
      } else if (have != want) {
        return "arc " + std::to_string(code.crossings[s.crossing][s.position]) +
               " has inconsistent orientation";
      }
    }
    while (next_unresolved < n && role[next_unresolved][1] != kUnknown) ++next_unresolved;
    if (next_unresolved == n) break;
    set_over(next_unresolved, fallback_over_in(code.crossings[next_unresolved]));
  }
  return std::nullopt;
}

}  // namespace

FaceMap faces(PDCode const &code) {
  auto occ = occurrences(code);
  auto const n = static_cast<int>(code.crossings.size());
  FaceMap fm;
  fm.corner_face.assign(n, {-1, -1, -1, -1});
  // A dart (c,p) leaves crossing c along position p. Following the arc to
  // (c',p') and turning to position p'+1 walks once around a face whose
  // corner at c' is p'.
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      Slot start{c, p};
      Slot dart = start;
      Slot arrive = other_end(occ, code, dart);
      if (fm.corner_face[arrive.crossing][arrive.position] != -1) continue;
      int face = fm.face_count++;
      do {
        arrive = other_end(occ, code, dart);
        fm.corner_face[arrive.crossing][arrive.position] = face;
        dart = {arrive.crossing, (arrive.position + 1) % 4};
      } while (!(dart == start));
    }
  }
  return fm;
}

std::vector<int> crossing_blocks(PDCode const &code, int *block_count) {
  auto occ = occurrences(code);
  auto const n = static_cast<int>(code.crossings.size());
  std::vector<int> block(n, -1);
  int count = 0;
  for (int c0 = 0; c0 < n; ++c0) {
    if (block[c0] != -1) continue;
    std::vector<int> stack{c0};
    block[c0] = count;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        int d = other_end(occ, code, {c, p}).crossing;
        if (block[d] == -1) {
          block[d] = count;
          stack.push_back(d);
        }
      }
    }
    ++count;
  }
  if (block_count) *block_count = count;
  return block;
}

std::vector<std::string> validate_pd(PDCode const &code) {
  std::vector<std::string> errors;
  if (code.arc_count < 1) {
    errors.push_back("arc_count must be positive");
    return errors;
  }
  std::vector<int> count(code.arc_count + 1, 0);
  for (std::size_t c = 0; c < code.crossings.size(); ++c) {
    for (int label : code.crossings[c]) {
      if (label < 1 || label > code.arc_count) {
        errors.push_back("crossing " + std::to_string(c) + " uses label " + std::to_string(label) +
                         " outside 1.." + std::to_string(code.arc_count));
      } else {
        ++count[label];
      }
    }
  }
  for (int label = 1; label <= code.arc_count; ++label) {
    if (count[label] != 0 && count[label] != 2) {
      errors.push_back("label " + std::to_string(label) + " appears " + std::to_string(count[label]) +
                       " times");
    }
  }
  if (!errors.empty()) return errors;

  auto occ = occurrences(code);
  for (int label = 1; label <= code.arc_count; ++label) {
    auto const &o = occ[label];
    if (o.size() == 2 && o[0].position == o[1].position && o[0].position % 2 == 0) {
      errors.push_back("label " + std::to_string(label) + " is the " +
                       (o[0].position == 0 ? "incoming" : "outgoing") + " under-arc at two crossings");
    }
  }
  if (!errors.empty()) return errors;

  std::vector<std::array<Role, 4>> role;
  if (auto err = propagate(code, occ, role)) {
    errors.push_back(*err);
    return errors;
  }

  int block_count = 0;
  auto block = crossing_blocks(code, &block_count);
  auto fm = faces(code);
  std::vector<int> vertices(block_count, 0);
  std::vector<std::vector<int>> face_sets(block_count);
  for (std::size_t c = 0; c < code.crossings.size(); ++c) {
    ++vertices[block[c]];
    for (int f : fm.corner_face[c]) face_sets[block[c]].push_back(f);
  }
  for (int b = 0; b < block_count; ++b) {
    auto &fs = face_sets[b];
    std::sort(fs.begin(), fs.end());
    auto f = static_cast<int>(std::unique(fs.begin(), fs.end()) - fs.begin());
    int v = vertices[b];
    if (v - 2 * v + f != 2) {
      errors.push_back("diagram piece " + std::to_string(b) + " is not planar (Euler characteristic " +
                       std::to_string(f - v) + ")");
    }
  }
  return errors;
}

void require_valid(PDCode const &code) {
  auto errors = validate_pd(code);
  if (!errors.empty()) throw ValidationError("invalid PD code: " + errors.front());
}

OrientedDiagram orient(PDCode const &code) {
  require_valid(code);
  auto occ = occurrences(code);
  std::vector<std::array<Role, 4>> role;
  propagate(code, occ, role);
  OrientedDiagram od;
  od.head.assign(code.arc_count + 1, {});
  od.tail.assign(code.arc_count + 1, {});
  od.over_in.resize(code.crossings.size());
  for (int c = 0; c < static_cast<int>(code.crossings.size()); ++c) {
    od.over_in[c] = role[c][1] == kIn ? 1 : 3;
    for (int p = 0; p < 4; ++p) {
      int label = code.crossings[c][p];
      (role[c][p] == kIn ? od.head : od.tail)[label] = {c, p};
    }
  }
  for (int label = 1; label <= code.arc_count; ++label) {
    if (occ[label].empty()) od.free_loops.push_back(label);
  }
  return od;
}

int OrientedDiagram::successor(std::vector<Crossing> const &crossings, int label) const {
  Slot h = head[label];
  if (h.crossing < 0) return label;
  int out = h.position == 0 ? 2 : (h.position == 1 ? 3 : 1);
  return crossings[h.crossing][out];
}

int OrientedDiagram::sign(std::vector<Crossing> const &, int crossing) const {
  return over_in[crossing] == 3 ? 1 : -1;
}

std::vector<std::vector<int>> components(PDCode const &code) {
  auto od = orient(code);
  std::vector<char> seen(code.arc_count + 1, 0);
  std::vector<std::vector<int>> out;
  for (int label = 1; label <= code.arc_count; ++label) {
    if (seen[label]) continue;
    std::vector<int> comp;
    int x = label;
    do {
      seen[x] = 1;
      comp.push_back(x);
      x = od.successor(code.crossings, x);
    } while (x != label);
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t component_count(PDCode const &code) { return components(code).size(); }

bool is_split_diagram(PDCode const &code) {
  require_valid(code);
  int blocks = 0;
  crossing_blocks(code, &blocks);
  auto occ = occurrences(code);
  int free = 0;
  for (int label = 1; label <= code.arc_count; ++label) free += occ[label].empty();
  return blocks + free >= 2;
}

PDCode mirror(PDCode const &code) {
  auto od = orient(code);
  PDCode out = code;
  for (std::size_t c = 0; c < code.crossings.size(); ++c) {
    auto const &x = code.crossings[c];
    int s = od.over_in[c];
    out.crossings[c] = {x[s], x[(s + 1) % 4], x[(s + 2) % 4], x[(s + 3) % 4]};
  }
  return out;
}

namespace {
std::optional<int> lowest_crossing_label(PDCode const &code) {
  std::optional<int> best;
  for (auto const &x : code.crossings) {
    for (int label : x) {
      if (!best || label < *best) best = label;
    }
  }
  return best;
}
}  // namespace

PDCode connected_sum(PDCode const &a, PDCode const &b) {
  require_valid(a);
  require_valid(b);
  auto la = lowest_crossing_label(a);
  auto lb = lowest_crossing_label(b);
  if (!la) {
    if (a.arc_count == 1) return b;
    throw ValidationError("connected_sum: split summand");
  }
  if (!lb) {
    if (b.arc_count == 1) return a;
    throw ValidationError("connected_sum: split summand");
  }
  auto oa = orient(a);
  auto ob = orient(b);
  int const shift = a.arc_count;
  PDCode out;
  out.arc_count = a.arc_count + b.arc_count;
  out.crossings = a.crossings;
  for (auto x : b.crossings) {
    for (int &label : x) label += shift;
    out.crossings.push_back(x);
  }
  // tail(la) -> head(lb) keeps label la; tail(lb) -> head(la) keeps lb+shift.
  Slot ha = oa.head[*la];
  Slot hb = ob.head[*lb];
  out.crossings[hb.crossing + a.crossings.size()][hb.position] = *la;
  out.crossings[ha.crossing][ha.position] = *lb + shift;
  return out;
}

}  // namespace orbiknot
