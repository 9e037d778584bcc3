#include "orbiknot/homsearch.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace orbiknot {

std::uint64_t default_budget() {
  if (char const *env = std::getenv("ORBIKNOT_BUDGET")) {
    char *end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100'000'000ULL;
}

bool meridians_have_order_two(GroupPresentation const &pres) {
  if (pres.meridians.empty()) return false;
  for (int m : pres.meridians) {
    bool found = std::any_of(pres.relators.begin(), pres.relators.end(),
                             [m](Word const &w) { return w == Word{m, m} || w == Word{-m, -m}; });
    if (!found) return false;
  }
  return true;
}

namespace {

using Element = FiniteGroup::Element;

struct Letter {
  int gen;
  int exp;
};

// Static search order. Generators whose value is forced by a relator are
// placed as soon as possible; otherwise the most constrained free generator
// comes next.
struct Plan {
  int n = 0;
  std::vector<std::vector<Letter>> words;
  std::vector<int> order;
  struct Forced {
    int relator = -1;
    std::size_t letter = 0;
  };
  std::vector<Forced> forced;
  std::vector<std::vector<int>> check_at;
  std::vector<std::vector<Element>> domain;
};

Plan make_plan(GroupPresentation const &pres, FiniteGroup const &target, bool restrict_meridians) {
  require_valid(pres);
  Plan plan;
  plan.n = pres.n_generators;
  for (auto const &w : pres.relators) {
    std::vector<Letter> letters;
    for (int x : w) letters.push_back({std::abs(x) - 1, x > 0 ? 1 : -1});
    if (!letters.empty()) plan.words.push_back(std::move(letters));
  }
  std::vector<int> participation(plan.n, 0);
  std::vector<std::vector<int>> gens_of(plan.words.size());
  for (std::size_t r = 0; r < plan.words.size(); ++r) {
    for (auto const &l : plan.words[r]) gens_of[r].push_back(l.gen);
    std::sort(gens_of[r].begin(), gens_of[r].end());
    gens_of[r].erase(std::unique(gens_of[r].begin(), gens_of[r].end()), gens_of[r].end());
    for (int g : gens_of[r]) ++participation[g];
  }

  std::vector<int> pos(plan.n, -1);
  for (int step = 0; step < plan.n; ++step) {
    int pick = -1;
    Plan::Forced how;
    for (std::size_t r = 0; r < plan.words.size() && pick == -1; ++r) {
      int unknown = -1;
      bool single = true;
      for (int g : gens_of[r]) {
        if (pos[g] != -1) continue;
        if (unknown != -1) {
          single = false;
          break;
        }
        unknown = g;
      }
      if (!single || unknown == -1) continue;
      auto const &letters = plan.words[r];
      auto uses = std::count_if(letters.begin(), letters.end(), [&](Letter l) { return l.gen == unknown; });
      if (uses != 1) continue;
      pick = unknown;
      how.relator = static_cast<int>(r);
      how.letter = static_cast<std::size_t>(
          std::find_if(letters.begin(), letters.end(), [&](Letter l) { return l.gen == unknown; }) -
          letters.begin());
    }
    if (pick == -1) {
      // Prefer generators that complete relators, then those that leave
      // relators one unknown short of completion.
      std::vector<int> unplaced_in(plan.words.size(), 0);
      for (std::size_t r = 0; r < plan.words.size(); ++r) {
        for (int g : gens_of[r]) unplaced_in[r] += pos[g] == -1;
      }
      auto score = [&](int g) {
        std::array<int, 3> s{0, 0, participation[g]};
        for (std::size_t r = 0; r < plan.words.size(); ++r) {
          if (!std::binary_search(gens_of[r].begin(), gens_of[r].end(), g)) continue;
          if (unplaced_in[r] == 1) ++s[0];
          if (unplaced_in[r] == 2) ++s[1];
        }
        return s;
      };
      std::array<int, 3> best{-1, -1, -1};
      for (int g = 0; g < plan.n; ++g) {
        if (pos[g] != -1) continue;
        auto s = score(g);
        if (s > best) {
          best = s;
          pick = g;
        }
      }
    }
    pos[pick] = step;
    plan.order.push_back(pick);
    plan.forced.push_back(how);
  }

  plan.check_at.assign(plan.n, {});
  for (std::size_t r = 0; r < plan.words.size(); ++r) {
    int last = -1;
    for (int g : gens_of[r]) last = std::max(last, pos[g]);
    plan.check_at[last].push_back(static_cast<int>(r));
  }

  std::vector<Element> all(target.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  std::vector<Element> small{0};
  small.insert(small.end(), target.involutions().begin(), target.involutions().end());
  plan.domain.assign(plan.n, all);
  if (restrict_meridians) {
    for (int m : pres.meridians) plan.domain[m - 1] = small;
  }
  return plan;
}

enum class Mode { Collect, CollectEpis, Count, Exists };

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::atomic<bool> found{false};
};

class Worker {
 public:
  Worker(Plan const &plan, FiniteGroup const &target, Mode mode, std::uint64_t budget, Shared &shared)
      : plan_(plan), target_(target), mode_(mode), budget_(budget), shared_(shared), value_(plan.n, 0) {}

  void run_from(Element first) {
    if (plan_.n == 0) {
      leaf();
      return;
    }
    try_value(0, first);
    flush();
  }

  std::vector<Assignment> results;
  HomCounts counts;

 private:
  Element evaluate(std::vector<Letter> const &w, std::size_t from, std::size_t to) const {
    Element x = 0;
    for (std::size_t i = from; i < to; ++i) {
      Element v = value_[w[i].gen];
      x = target_.multiply(x, w[i].exp > 0 ? v : target_.inverse(v));
    }
    return x;
  }

  bool stopped() const {
    return shared_.abort.load(std::memory_order_relaxed) ||
           (mode_ == Mode::Exists && shared_.found.load(std::memory_order_relaxed));
  }

  void flush() {
    if (local_nodes_ == 0) return;
    auto total = shared_.nodes.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (total > budget_) shared_.abort = true;
  }

  void leaf() {
    bool need_epi = mode_ != Mode::Collect;
    bool epi = need_epi && target_.generates(value_);
    if (mode_ == Mode::Collect) {
      results.push_back(value_);
      ++counts.homs;
      return;
    }
    ++counts.homs;
    if (epi) ++counts.epis;
    if (mode_ == Mode::CollectEpis && epi) results.push_back(value_);
    if (mode_ == Mode::Exists && epi) shared_.found = true;
  }

  void try_value(int depth, Element v) {
    if (++local_nodes_ >= 1024) flush();
    if (stopped()) return;
    value_[plan_.order[depth]] = v;
    for (int r : plan_.check_at[depth]) {
      auto const &w = plan_.words[r];
      if (evaluate(w, 0, w.size()) != 0) return;
    }
    descend(depth + 1);
  }

  void descend(int depth) {
    if (depth == plan_.n) {
      leaf();
      return;
    }
    int g = plan_.order[depth];
    auto const &dom = plan_.domain[g];
    auto const &f = plan_.forced[depth];
    if (f.relator >= 0) {
      auto const &w = plan_.words[f.relator];
      Element prefix = evaluate(w, 0, f.letter);
      Element suffix = evaluate(w, f.letter + 1, w.size());
      Element v = w[f.letter].exp > 0 ? target_.multiply(target_.inverse(prefix), target_.inverse(suffix))
                                      : target_.multiply(suffix, prefix);
      if (dom.size() == target_.order() || std::binary_search(dom.begin(), dom.end(), v)) {
        try_value(depth, v);
      }
      return;
    }
    for (Element v : dom) {
      try_value(depth, v);
      if (stopped()) return;
    }
  }

  Plan const &plan_;
  FiniteGroup const &target_;
  Mode mode_;
  std::uint64_t budget_;
  Shared &shared_;
  Assignment value_;
  std::uint64_t local_nodes_ = 0;
};

struct SearchResult {
  std::vector<Assignment> assignments;
  HomCounts counts;
  bool found = false;
};

SearchResult search(GroupPresentation const &pres, FiniteGroup const &target, SearchOptions const &options,
                    Mode mode) {
  Plan plan = make_plan(pres, target, options.meridians_to_involutions);
  Shared shared;

  // Top-level tasks: the candidate values of the first generator.
  std::vector<Element> firsts;
  if (plan.n == 0) {
    firsts.push_back(0);
  } else if (plan.forced[0].relator >= 0) {
    // A one-letter relator forces the identity.
    firsts.push_back(0);
  } else {
    firsts = plan.domain[plan.order[0]];
  }

  std::vector<Worker> done;
  done.reserve(firsts.size());
  for (std::size_t i = 0; i < firsts.size(); ++i) done.emplace_back(plan, target, mode, options.budget, shared);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < firsts.size();) {
      if (shared.abort || (mode == Mode::Exists && shared.found)) break;
      done[i].run_from(firsts[i]);
    }
  };
  int threads = std::clamp(options.threads, 1, 64);
  if (threads == 1 || firsts.size() == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto &t : pool) t.join();
  }

  SearchResult out;
  out.found = shared.found;
  if (mode == Mode::Exists && out.found) return out;
  if (shared.abort) {
    throw BudgetExceeded("homomorphism search into " + target.name() + " exceeded budget of " +
                         std::to_string(options.budget) + " partial assignments");
  }
  for (auto &w : done) {
    out.counts.homs += w.counts.homs;
    out.counts.epis += w.counts.epis;
    for (auto &a : w.results) out.assignments.push_back(std::move(a));
  }
  std::sort(out.assignments.begin(), out.assignments.end());
  return out;
}

}  // namespace

std::vector<Assignment> all_homomorphisms(GroupPresentation const &pres, FiniteGroup const &target,
                                          SearchOptions const &options) {
  return search(pres, target, options, Mode::Collect).assignments;
}

std::vector<Assignment> all_epimorphisms(GroupPresentation const &pres, FiniteGroup const &target,
                                         SearchOptions const &options) {
  return search(pres, target, options, Mode::CollectEpis).assignments;
}

HomCounts count_homomorphisms(GroupPresentation const &pres, FiniteGroup const &target,
                              SearchOptions const &options) {
  return search(pres, target, options, Mode::Count).counts;
}

bool epimorphism_exists(GroupPresentation const &pres, FiniteGroup const &target, SearchOptions options) {
  if (meridians_have_order_two(pres)) options.meridians_to_involutions = true;
  return search(pres, target, options, Mode::Exists).found;
}

QuotientProfile quotient_profile(GroupPresentation const &pres, std::vector<FiniteGroup> const &battery,
                                 SearchOptions const &options) {
  QuotientProfile profile;
  for (auto const &q : battery) profile[q.name()] = count_homomorphisms(pres, q, options);
  return profile;
}

NonDominationEvidence non_domination_evidence(GroupPresentation const &src, GroupPresentation const &dst,
                                              std::vector<FiniteGroup> const &battery,
                                              SearchOptions const &options) {
  NonDominationEvidence out;
  for (auto const &q : battery) {
    try {
      if (!epimorphism_exists(dst, q, options)) continue;
      if (!epimorphism_exists(src, q, options)) {
        out.witness = q.name();
        return out;
      }
    } catch (BudgetExceeded const &e) {
      out.budget_errors.push_back(q.name() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace orbiknot
