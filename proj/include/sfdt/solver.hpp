#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfdt/cover.hpp"

namespace sfdt {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumerates all kappa^n transversals in lexicographic order and returns the
// first strictly f-degenerate one. Independent of find_sfdt by design.
std::optional<std::vector<int>> brute_force_sfdt(const Cover& c, long long budget = 10000000);

// Complete deterministic search:
//   reduction - while some vertex has fsum > its current degree, defer it;
//   core      - DFS over slot choices on the residual graph (skip dead slots
//               and capacity-1 slots already matched against a chosen
//               capacity-1 neighbor; both skips are exact), validating each
//               full residual assignment by peeling;
//   reinsert  - deferred vertices return in reverse order, greedily taking a
//               slot with spare capacity (one exists by the degree argument),
//               with a try-all-slots fallback and a final full validation.
std::optional<std::vector<int>> find_sfdt(const Cover& c);

// No SFDT, but deleting any one host fan leaves a solvable cover.
bool is_minimal_non_sfd(const Cover& c);

// Structure report for minimal non-SFD pairs: (i) host connected and
// fsum <= deg everywhere; (ii) the subgraph induced by F is a cycle, a
// complete graph, or has all degrees <= max-slot capacity.
struct MinimalPairReport {
  bool pre_ok = false;        // c minimal non-SFD, F induces 2-connected, F within the fsum>=deg set
  std::string pre_message;
  bool i_holds = false;
  bool ii_holds = false;
};
MinimalPairReport check_theorem_L(const Cover& c, const std::vector<int>& F);

}  // namespace sfdt
