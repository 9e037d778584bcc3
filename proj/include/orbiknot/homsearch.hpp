#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbiknot/finite_group.hpp"
#include "orbiknot/presentation.hpp"

namespace orbiknot {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 10^8, or the value of ORBIKNOT_BUDGET when set.
std::uint64_t default_budget();

struct SearchOptions {
  // Meridian generators range over the identity and the involutions only.
  bool meridians_to_involutions = false;
  // Cap on partial assignments per (presentation, target) pair.
  std::uint64_t budget = default_budget();
  int threads = 1;
};

// Image of each generator, indexed by 0-based generator index.
using Assignment = std::vector<FiniteGroup::Element>;

struct HomCounts {
  std::uint64_t homs = 0;
  std::uint64_t epis = 0;

  friend bool operator==(HomCounts const &, HomCounts const &) = default;
};

/// Every homomorphism, in lexicographic order of the assignment vectors.
/// Throws BudgetExceeded instead of truncating.
std::vector<Assignment> all_homomorphisms(GroupPresentation const &pres, FiniteGroup const &target,
                                          SearchOptions const &options = {});

/// Only the epimorphisms, same order.
std::vector<Assignment> all_epimorphisms(GroupPresentation const &pres, FiniteGroup const &target,
                                         SearchOptions const &options = {});

HomCounts count_homomorphisms(GroupPresentation const &pres, FiniteGroup const &target,
                              SearchOptions const &options = {});

/// Meridians are restricted to involutions automatically when the
/// presentation contains g^2 for each of them.
bool epimorphism_exists(GroupPresentation const &pres, FiniteGroup const &target,
                        SearchOptions options = {});

/// True when every meridian generator has its square among the relators.
bool meridians_have_order_two(GroupPresentation const &pres);

using QuotientProfile = std::map<std::string, HomCounts>;

QuotientProfile quotient_profile(GroupPresentation const &pres, std::vector<FiniteGroup> const &battery,
                                 SearchOptions const &options = {});

struct NonDominationEvidence {
  // First battery group that is a quotient of dst but not of src.
  std::optional<std::string> witness;
  // Targets skipped because a search ran out of budget.
  std::vector<std::string> budget_errors;
};

NonDominationEvidence non_domination_evidence(GroupPresentation const &src, GroupPresentation const &dst,
                                              std::vector<FiniteGroup> const &battery,
                                              SearchOptions const &options = {});

}  // namespace orbiknot
