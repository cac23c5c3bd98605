#pragma once

#include <string>
#include <vector>

#include <fppshield/poset.hpp>

namespace fppshield {

/// A neighbour of a poset in the lattice of all posets on its carrier,
/// together with the single ordered pair that distinguishes it.
struct Cover {
  EdgePair edge;
  Poset poset;
};

struct CoverEnumeration {
  Poset base;
  std::vector<Cover> upper;
  std::vector<Cover> lower;
};

/// Incomparable pairs (a, b) whose addition to the relation yields an upper
/// cover. Sorted lexicographically.
std::vector<EdgePair> critical_pairs(const Poset &p);

/// One entry per critical pair, in critical-pair order.
std::vector<Cover> upper_covers(const Poset &p);
/// One entry per cover edge, in cover-edge order.
std::vector<Cover> lower_covers(const Poset &p);
CoverEnumeration enumerate_covers(const Poset &p);

/// How the structure of P changes when a critical pair (a, b) is added,
/// Q = P(a, b). Each field is one claim, evaluated by brute force on both
/// posets; on a correct implementation every field is true for every
/// critical pair.
struct TransitionFacts {
  EdgePair pair;
  // down_Q(x) gains exactly `a` when b <= x, else is unchanged.
  bool down_set_update = false;
  // up_Q(x) gains exactly `b` when x <= a, else is unchanged.
  bool up_set_update = false;
  // [x,y]_P ⊆ [x,y]_Q ⊆ [x,y]_P ∪ {a,b} for all x, y.
  bool interval_sandwich = false;
  // [x,y]_P = [x,y]_Q whenever b <= x or y <= a.
  bool interval_unchanged_outside = false;
  // L(Q) = L(P) \ {b}.
  bool minimals_update = false;
  // U(Q) = U(P) \ {a}.
  bool maximals_update = false;
  // M(Q) \ {a,b} ⊆ M(P) ⊆ M(Q).
  bool middles_sandwich = false;
  // minmax(Q) \ {(a,b)} ⊆ minmax(P).
  bool minmax_gain_only_new_pair = false;
  // minmax(P) \ minmax(Q) lies in
  //   min(down a) x max(up b \ up a)  ∪  min(down a \ down b) x max(up b).
  bool minmax_loss_localized = false;
  // The same containment with two more blocks on the right: {b} x U(P) and
  // L(P) x {a}, the pairs lost because b stops being minimal or a stops
  // being maximal. Not part of `all()`; see `all_with_endpoint_shift()`.
  bool minmax_loss_with_endpoint_shift = false;
  // For (a,b) in L(P) x U(P): minmax(Q) = minmax(P) ∪ {(a,b)}. Vacuous
  // otherwise.
  bool extremal_pair_adds_minmax = false;

  bool all() const;
  // all() with minmax_loss_localized replaced by its amended form.
  bool all_with_endpoint_shift() const;
  std::vector<std::string> failed() const;
};

/// Throws NotCritical unless e ∈ Crit(P).
TransitionFacts transition_facts(const Poset &p, EdgePair e);

} // namespace fppshield
