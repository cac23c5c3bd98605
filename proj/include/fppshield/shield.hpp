#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <fppshield/cover_lattice.hpp>
#include <fppshield/poset.hpp>

namespace fppshield {

/// Connected, and deleting any minmax covering relation disconnects it.
bool has_fpp_graph(const Poset &p);

/// Which side implication of the witness is non-vacuous.
enum class FiredCondition {
  XyInMinMax, // (x,y) in L(P) x U(P): [u,w] = {u,v,w}
  XInMiddle,  // x in M(P): b is I-retractable to a
  YInMiddle,  // y in M(P): a is I-retractable to b
};

std::string_view to_string(FiredCondition c);

/// Certificate that a cover edge (a,b) has the 3-chain-property: a cover edge
/// (x,y) of Q = P \ (a,b) such that Q \ (x,y) stays connected and
/// {a,b,x,y} = {u,v,w} induces a maximal chain u < v < w of P.
struct ThreeChainWitness {
  EdgePair pair_removed;
  EdgePair witness;
  Index u = 0;
  Index v = 0;
  Index w = 0;
  FiredCondition fired = FiredCondition::XyInMinMax;
};

/// Searches witnesses for `e` in lexicographic order of (x,y) and returns the
/// first one. Throws PreconditionViolated unless e is a cover edge whose
/// removal leaves P connected.
std::optional<ThreeChainWitness> pair_has_3cp(const Poset &p, EdgePair e);

/// Every cover edge whose removal keeps P connected has the 3-chain-property
/// (vacuously true when there is none).
bool has_3cp(const Poset &p);

enum class Method {
  Direct,  // enumerate the covers and test each for an FPP-graph
  Theorem, // use the structural characterization
};

bool is_l_shielded(const Poset &p, Method method);
bool is_u_shielded(const Poset &p, Method method);

/// Characterization-based verdict plus whether the characterization is an
/// exact equivalence for this poset (as opposed to a sufficient condition).
struct TheoremVerdict {
  bool value = false;
  bool equivalence_applies = false;
};

TheoremVerdict l_shield_theorem(const Poset &p);
TheoremVerdict u_shield_theorem(const Poset &p);

/// Crit(P) ⊆ L(P) x U(P).
bool critical_pairs_extremal(const Poset &p);

struct Corollary1Result {
  // FPP-graph, no irreducible point, and #[l,u] != 3 for all l in L, u in U.
  bool applies = false;
  // Every lower cover that is connected has an FPP-graph, by enumeration.
  bool conclusion_verified = false;
};
Corollary1Result corollary1_check(const Poset &p);

struct Corollary4Result {
  // P has an FPP-graph.
  bool applies = false;
  // Every upper cover has an FPP-graph, by enumeration.
  bool all_upper_fppgraph = false;
  // l <= u for all l in L(P), u in U(P).
  bool extremal_points_comparable = false;
};
Corollary4Result corollary4_check(const Poset &p);

/// Saturated descending chain P = Q_0 ⊐ Q_1 ⊐ ... ⊐ Q_I obtained by removing
/// the lexicographically least middle-to-middle cover edge at each step,
/// ending at height exactly 2. Each step is re-checked for an FPP-graph.
/// Throws PreconditionViolated unless P has an FPP-graph and height >= 3, and
/// InvariantViolation if a step fails its checks.
std::vector<Poset> descending_chain_to_height2(const Poset &p);

struct Lemma3Witness {
  EdgePair pair;
  Index z = 0;
  // Every valid z, ascending; `z` is the first.
  std::vector<Index> candidates;
};

struct Lemma3Result {
  bool condition_holds = false;
  std::vector<Lemma3Witness> witnesses;
  std::vector<EdgePair> failing_pairs;
  // No irreducible point: the condition is then equivalent to has_3cp.
  bool equivalence_mode = false;
};

/// For height-2 posets with an FPP-graph: every cover edge (a,b) whose
/// removal keeps P connected needs a z closing a 3-element interval, with
/// the complementary cover of Q = P \ (a,b) removable without disconnecting.
/// Throws PreconditionViolated otherwise.
Lemma3Result lemma3_check(const Poset &p);

struct CoverFlag {
  EdgePair edge;
  bool has_fpp_graph = false;
};

struct ShieldReport {
  std::size_t n = 0;
  std::vector<EdgePair> edges; // cover edges of the analyzed poset
  bool connected = false;
  std::size_t height = 0;
  Strata strata;
  std::vector<EdgePair> minmax;
  bool has_fpp_graph = false;
  bool l_shielded = false;
  bool u_shielded = false;
  bool l_shielded_theorem = false;
  bool u_shielded_theorem = false;
  bool has_3cp = false;
  bool crit_in_LxU = false;
  std::vector<CoverFlag> per_lower_cover;
  std::vector<CoverFlag> per_upper_cover;
  std::vector<ThreeChainWitness> witnesses;
  // Filled for height-2 posets with an FPP-graph.
  std::optional<Lemma3Result> lemma3;
};

ShieldReport analyze(const Poset &p);

} // namespace fppshield
