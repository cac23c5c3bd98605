#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include <fppshield/error.hpp>
#include <fppshield/vertex_set.hpp>

namespace fppshield {

/// Ordered pair (a, b) of carrier points; a cover edge, critical pair or
/// minmax covering relation depending on context.
struct EdgePair {
  Index a = 0;
  Index b = 0;

  auto operator<=>(const EdgePair &) const = default;
};

/// Minimal, maximal and middle points. In an antichain (or for any isolated
/// point) a point is both minimal and maximal; middles never overlap either.
struct Strata {
  VertexSet minimals;
  VertexSet maximals;
  VertexSet middles;
};

/// Carriers larger than this are rejected with ResourceLimit.
inline constexpr std::size_t kMaxCarrier = 4096;

/// Finite partial order on the labeled carrier {0, ..., n-1}.
///
/// Immutable after construction. Both the up-set and the down-set of every
/// point are stored as bit rows, so every relational query is a row lookup or
/// a word-parallel set operation. Equality is equality of relations on the
/// same carrier (labeled, not up to isomorphism).
class Poset {
public:
  /// Reflexive-transitive closure of arbitrary strict edges.
  /// Throws CycleDetected if the closure is not antisymmetric.
  static Poset from_edges(std::size_t n, std::span<const EdgePair> edges);
  static Poset from_edges(std::size_t n, std::initializer_list<EdgePair> edges) {
    return from_edges(n, std::span<const EdgePair>(edges.begin(), edges.size()));
  }

  /// Takes up-set rows (row x holds every y with x <= y) and checks the three
  /// order axioms.
  static Poset from_up_sets(std::vector<VertexSet> up_rows);

  static Poset antichain(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  bool leq(Index x, Index y) const { return up_[x].contains(y); }
  bool lt(Index x, Index y) const { return x != y && leq(x, y); }
  bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }
  bool parallel(Index x, Index y) const { return !comparable(x, y); }

  const VertexSet &up_set(Index x) const;
  const VertexSet &down_set(Index x) const;
  VertexSet punctured_up_set(Index x) const;
  VertexSet punctured_down_set(Index x) const;
  /// [x, y] = up(x) ∩ down(y); empty unless x <= y.
  VertexSet interval(Index x, Index y) const;

  bool is_minimal(Index x) const { return down_set(x).size() == 1; }
  bool is_maximal(Index x) const { return up_set(x).size() == 1; }
  Strata strata() const;

  /// Hasse diagram edges, sorted lexicographically.
  std::vector<EdgePair> cover_edges() const;
  bool is_cover(EdgePair e) const;

  /// Cover edges running from a minimal to a maximal point. Computed by two
  /// independent characterizations, which must agree.
  std::vector<EdgePair> minmax_covers() const;

  /// Connected components of the comparability graph, ordered by least member.
  std::vector<VertexSet> components() const;
  bool is_connected() const;
  /// Connectivity of the comparability graph with the single edge {a, b}
  /// deleted, i.e. of P \ (a, b) when (a, b) is a cover edge.
  bool is_connected_without(EdgePair e) const;

  /// Length (number of steps) of a longest chain.
  std::size_t height() const;

  /// Points z such that z = max of the punctured down-set of x or z = min of
  /// the punctured up-set of x. Non-empty iff x is irreducible.
  std::vector<Index> i_retract_targets(Index x) const;
  bool has_irreducible_point() const;

  /// (a, b) incomparable with punctured-down(a) ⊆ punctured-down(b) and
  /// punctured-up(b) ⊆ punctured-up(a).
  bool is_critical(EdgePair e) const;

  /// Poset with the single pair e removed; e must be a cover edge.
  Poset remove_cover(EdgePair e) const;
  /// Poset with the single pair e added; e must be a critical pair.
  Poset add_critical(EdgePair e) const;

  /// Number of pairs in the relation, diagonal included.
  std::size_t relation_size() const;
  bool is_subrelation_of(const Poset &other) const;

  /// Sub-poset induced on `points`, relabeled to 0..k-1 in increasing order.
  Poset induced(const VertexSet &points) const;
  /// Image under the bijection x -> perm[x].
  Poset relabeled(std::span<const Index> perm) const;

  bool operator==(const Poset &other) const { return up_ == other.up_; }
  std::strong_ordering operator<=>(const Poset &other) const {
    return up_ <=> other.up_;
  }

private:
  Poset(std::size_t n, std::vector<VertexSet> up, std::vector<VertexSet> down)
      : n_(n), up_(std::move(up)), down_(std::move(down)) {}

  void check_index(Index x) const;
  static std::vector<VertexSet> transpose(const std::vector<VertexSet> &rows);
  // Throws `code` unless the rows form a partial order.
  static void validate(const std::vector<VertexSet> &up, ErrorCode code);

  std::size_t n_ = 0;
  std::vector<VertexSet> up_;
  std::vector<VertexSet> down_;
};

} // namespace fppshield
