#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <fppshield/poset.hpp>

namespace fppshield {

// ---------------------------------------------------------------------------
// Fixed point property by exhaustive endomorphism search.

struct EndomorphismSearchResult {
  // nullopt when the node budget ran out before the search was decided.
  std::optional<bool> has_fpp;
  // A fixed-point-free order endomorphism, when has_fpp == false.
  std::optional<std::vector<Index>> counterexample_map;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Backtracking search for an order-preserving map without fixed points.
/// Points are assigned in descending comparability degree; each assignment
/// narrows the candidate images of every unassigned comparable point, and a
/// point's own index is never a candidate for it.
EndomorphismSearchResult
fpp_bruteforce(const Poset &p, std::uint64_t node_budget = kDefaultNodeBudget);

/// Same as fpp_bruteforce but throws ResourceLimit instead of returning an
/// undecided result.
bool has_fixed_point_property(const Poset &p,
                              std::uint64_t node_budget = kDefaultNodeBudget);

/// True iff `f` is order-preserving on P.
bool is_endomorphism(const Poset &p, const std::vector<Index> &f);

// ---------------------------------------------------------------------------
// Enumeration of all labeled posets on a carrier.

inline constexpr std::size_t kMaxEnumerationCarrier = 6;

/// Visits every partial order on {0..n-1} exactly once, in a fixed order.
/// Reverse search over the lattice of posets: a poset's parent is obtained by
/// deleting its lexicographically greatest cover edge, and children are
/// generated by closing the relation under one extra incomparable pair.
/// Throws ResourceLimit for n > max_n.
void for_each_poset(std::size_t n, const std::function<void(const Poset &)> &visit,
                    std::size_t max_n = kMaxEnumerationCarrier);

std::vector<Poset> enumerate_posets(std::size_t n,
                                    std::size_t max_n = kMaxEnumerationCarrier);

// ---------------------------------------------------------------------------
// Lattice-theoretic cover oracle.

struct LatticeCovers {
  std::set<Poset> upper;
  std::set<Poset> lower;
};

inline constexpr std::size_t kMaxLatticeCarrier = 4;

/// Materializes every poset on n points and finds covers by pairwise
/// inclusion of relations alone: Q covers P iff P ⊏ Q with nothing strictly
/// between.
std::map<Poset, LatticeCovers> lattice_cover_oracle(std::size_t n);

// ---------------------------------------------------------------------------
// Exhaustive theorem verification.

enum class TheoremId {
  Core,          // closure/reduction duality, remove-add round trip
  Lemma1,        // transition facts for every critical pair
  Lemma1Amended, // same, with the minmax-loss containment amended
  Lemma2,        // non-minmax covers keep P connected; equality iff FPP-graph
  Theorem1,      // 3-chain-property vs L-shielded
  Proposition1,  // per cover edge version of Theorem1
  Corollary1,    // no 3-element extremal interval => connected lower covers keep FPP-graph
  Corollary2,    // FPP-graph & L-shielded <=> connected & 3-chain-property
  Corollary3,    // descending chain to height 2
  Lemma3,        // interval witnesses at height 2
  Theorem2,      // Crit ⊆ L x U vs U-shielded
  Proposition2,  // per critical pair version of Theorem2
  Corollary4,    // all upper covers have FPP-graph <=> extremal points comparable
  Lemma4,        // disconnected U-shieldedness
  Height,        // L-shieldedness by height for FPP-graph posets
  FppNecessity,  // fixed point property => FPP-graph
  FppEquivariance, // fixed point property invariant under relabeling
  DeanKeller,    // cover enumeration agrees with the lattice oracle (n <= 4)
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string &name);
std::vector<TheoremId> all_theorems();

struct Counterexample {
  TheoremId theorem;
  Poset poset;
  std::optional<EdgePair> edge;
  std::string detail;
};

struct TheoremTally {
  std::uint64_t passes = 0;
  std::vector<Counterexample> counterexamples;
};

struct VerifyOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 5;
  std::set<TheoremId> theorems; // empty: all
  bool long_run = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t fpp_node_budget = kDefaultNodeBudget;
};

struct VerificationRun {
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::map<std::size_t, std::uint64_t> posets_checked;
  std::map<TheoremId, TheoremTally> theorem_results;
  // Connected posets with an FPP-graph but without the fixed point property.
  std::uint64_t fpp_graph_without_fpp = 0;
  std::chrono::duration<double> wall_time{};

  std::uint64_t total_posets() const;
  std::uint64_t total_counterexamples() const;
};

/// Runs the selected checks over every labeled poset with n_min..n_max points.
/// n_max = 6 requires long_run; anything larger throws ResourceLimit.
VerificationRun verify_theorems(const VerifyOptions &options);

} // namespace fppshield
