#include <fppshield/poset.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fppshield {

namespace {

void check_carrier(std::size_t n) {
  if (n == 0)
    throw Error(ErrorCode::InvalidParameter, "carrier must be non-empty");
  if (n > kMaxCarrier) {
    std::ostringstream oss;
    oss << "carrier of " << n << " points exceeds the limit of " << kMaxCarrier;
    throw Error(ErrorCode::ResourceLimit, oss.str());
  }
}

std::string pair_text(EdgePair e) {
  std::ostringstream oss;
  oss << "(" << e.a << "," << e.b << ")";
  return oss.str();
}

} // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::CycleDetected:
    return "CycleDetected";
  case ErrorCode::IndexOutOfRange:
    return "IndexOutOfRange";
  case ErrorCode::NotACoverEdge:
    return "NotACoverEdge";
  case ErrorCode::NotCritical:
    return "NotCritical";
  case ErrorCode::PreconditionViolated:
    return "PreconditionViolated";
  case ErrorCode::ResourceLimit:
    return "ResourceLimit";
  case ErrorCode::InvalidParameter:
    return "InvalidParameter";
  case ErrorCode::SyntaxError:
    return "SyntaxError";
  case ErrorCode::InvariantViolation:
    return "InvariantViolation";
  }
  return "Unknown";
}

Poset Poset::from_edges(std::size_t n, std::span<const EdgePair> edges) {
  check_carrier(n);
  std::vector<VertexSet> up(n, VertexSet(n));
  for (Index x = 0; x < n; ++x)
    up[x].insert(x);
  for (const auto &e : edges) {
    if (e.a >= n || e.b >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge " + pair_text(e) + " on carrier of size " +
                      std::to_string(n));
    up[e.a].insert(e.b);
  }
  // Warshall on bit rows: after step k, row x contains every y reachable
  // through intermediate points < k+1.
  for (Index k = 0; k < n; ++k)
    for (Index x = 0; x < n; ++x)
      if (x != k && up[x].contains(k))
        up[x] |= up[k];
  for (Index x = 0; x < n; ++x)
    for (Index y : up[x])
      if (y != x && up[y].contains(x))
        throw Error(ErrorCode::CycleDetected,
                    "points " + std::to_string(x) + " and " +
                        std::to_string(y) + " lie on a common cycle");
  auto down = transpose(up);
  return Poset(n, std::move(up), std::move(down));
}

Poset Poset::from_up_sets(std::vector<VertexSet> up_rows) {
  const auto n = up_rows.size();
  check_carrier(n);
  for (const auto &row : up_rows)
    if (row.universe() != n)
      throw Error(ErrorCode::IndexOutOfRange, "relation row of wrong width");
  validate(up_rows, ErrorCode::InvalidParameter);
  auto down = transpose(up_rows);
  return Poset(n, std::move(up_rows), std::move(down));
}

Poset Poset::antichain(std::size_t n) { return from_edges(n, {}); }

std::vector<VertexSet> Poset::transpose(const std::vector<VertexSet> &rows) {
  const auto n = rows.size();
  std::vector<VertexSet> t(n, VertexSet(n));
  for (Index x = 0; x < n; ++x)
    for (Index y : rows[x])
      t[y].insert(x);
  return t;
}

void Poset::validate(const std::vector<VertexSet> &up, ErrorCode code) {
  const auto n = up.size();
  for (Index x = 0; x < n; ++x) {
    if (!up[x].contains(x))
      throw Error(code, "relation is not reflexive at " + std::to_string(x));
    for (Index y : up[x]) {
      if (y == x)
        continue;
      if (up[y].contains(x))
        throw Error(code, "relation is not antisymmetric on " +
                              pair_text({x, y}));
      if (!up[y].is_subset_of(up[x]))
        throw Error(code, "relation is not transitive through " +
                              pair_text({x, y}));
    }
  }
}

void Poset::check_index(Index x) const {
  if (x >= n_)
    throw Error(ErrorCode::IndexOutOfRange,
                "point " + std::to_string(x) + " outside carrier of size " +
                    std::to_string(n_));
}

const VertexSet &Poset::up_set(Index x) const {
  check_index(x);
  return up_[x];
}

const VertexSet &Poset::down_set(Index x) const {
  check_index(x);
  return down_[x];
}

VertexSet Poset::punctured_up_set(Index x) const {
  auto s = up_set(x);
  s.erase(x);
  return s;
}

VertexSet Poset::punctured_down_set(Index x) const {
  auto s = down_set(x);
  s.erase(x);
  return s;
}

VertexSet Poset::interval(Index x, Index y) const {
  check_index(x);
  check_index(y);
  return up_[x] & down_[y];
}

Strata Poset::strata() const {
  Strata s{VertexSet(n_), VertexSet(n_), VertexSet(n_)};
  for (Index x = 0; x < n_; ++x) {
    const bool lo = is_minimal(x);
    const bool hi = is_maximal(x);
    if (lo)
      s.minimals.insert(x);
    if (hi)
      s.maximals.insert(x);
    if (!lo && !hi)
      s.middles.insert(x);
  }
  return s;
}

std::vector<EdgePair> Poset::cover_edges() const {
  std::vector<EdgePair> out;
  for (Index a = 0; a < n_; ++a)
    for (Index b : up_[a])
      if (b != a && (up_[a] & down_[b]).size() == 2)
        out.push_back({a, b});
  return out;
}

bool Poset::is_cover(EdgePair e) const {
  check_index(e.a);
  check_index(e.b);
  return e.a != e.b && leq(e.a, e.b) && interval(e.a, e.b).size() == 2;
}

std::vector<EdgePair> Poset::minmax_covers() const {
  const auto s = strata();
  std::vector<EdgePair> by_covers;
  for (const auto &e : cover_edges())
    if (s.minimals.contains(e.a) && s.maximals.contains(e.b))
      by_covers.push_back(e);

  std::vector<EdgePair> by_intervals;
  for (Index a = 0; a < n_; ++a)
    for (Index b : up_[a])
      if (b != a && !interval(a, b).intersects(s.middles))
        by_intervals.push_back({a, b});

  if (by_covers != by_intervals)
    throw Error(ErrorCode::InvariantViolation,
                "the two characterizations of minmax covers disagree");
  return by_covers;
}

std::vector<VertexSet> Poset::components() const {
  std::vector<VertexSet> out;
  VertexSet seen(n_);
  for (Index start = 0; start < n_; ++start) {
    if (seen.contains(start))
      continue;
    VertexSet comp(n_);
    comp.insert(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(n_);
      for (Index x : frontier) {
        next |= up_[x];
        next |= down_[x];
      }
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool Poset::is_connected() const { return components().size() == 1; }

bool Poset::is_connected_without(EdgePair e) const {
  check_index(e.a);
  check_index(e.b);
  VertexSet reached(n_);
  reached.insert(0);
  std::vector<Index> stack{0};
  while (!stack.empty()) {
    const Index x = stack.back();
    stack.pop_back();
    auto nbrs = up_[x] | down_[x];
    if (x == e.a)
      nbrs.erase(e.b);
    if (x == e.b)
      nbrs.erase(e.a);
    nbrs -= reached;
    for (Index y : nbrs) {
      reached.insert(y);
      stack.push_back(y);
    }
  }
  return reached.size() == n_;
}

std::size_t Poset::height() const {
  // A point's down-set strictly contains the down-set of everything below
  // it, so sorting by down-set size gives a linear extension.
  std::vector<Index> order(n_);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
    return down_[x].size() < down_[y].size();
  });
  std::vector<std::size_t> level(n_, 0);
  std::size_t best = 0;
  for (Index x : order) {
    for (Index y : down_[x])
      if (y != x)
        level[x] = std::max(level[x], level[y] + 1);
    best = std::max(best, level[x]);
  }
  return best;
}

std::vector<Index> Poset::i_retract_targets(Index x) const {
  check_index(x);
  std::vector<Index> out;
  const auto below = punctured_down_set(x);
  for (Index z : below)
    if (below.is_subset_of(down_[z])) {
      out.push_back(z);
      break;
    }
  const auto above = punctured_up_set(x);
  for (Index z : above)
    if (above.is_subset_of(up_[z])) {
      out.push_back(z);
      break;
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool Poset::has_irreducible_point() const {
  for (Index x = 0; x < n_; ++x)
    if (!i_retract_targets(x).empty())
      return true;
  return false;
}

bool Poset::is_critical(EdgePair e) const {
  check_index(e.a);
  check_index(e.b);
  if (comparable(e.a, e.b))
    return false;
  return punctured_down_set(e.a).is_subset_of(punctured_down_set(e.b)) &&
         punctured_up_set(e.b).is_subset_of(punctured_up_set(e.a));
}

Poset Poset::remove_cover(EdgePair e) const {
  if (!is_cover(e))
    throw Error(ErrorCode::NotACoverEdge, pair_text(e) + " is not a cover edge");
  auto up = up_;
  auto down = down_;
  up[e.a].erase(e.b);
  down[e.b].erase(e.a);
  return Poset(n_, std::move(up), std::move(down));
}

Poset Poset::add_critical(EdgePair e) const {
  if (!is_critical(e))
    throw Error(ErrorCode::NotCritical, pair_text(e) + " is not a critical pair");
  auto up = up_;
  up[e.a].insert(e.b);
  validate(up, ErrorCode::InvariantViolation);
  auto down = down_;
  down[e.b].insert(e.a);
  return Poset(n_, std::move(up), std::move(down));
}

std::size_t Poset::relation_size() const {
  std::size_t total = 0;
  for (const auto &row : up_)
    total += row.size();
  return total;
}

bool Poset::is_subrelation_of(const Poset &other) const {
  if (other.n_ != n_)
    return false;
  for (Index x = 0; x < n_; ++x)
    if (!up_[x].is_subset_of(other.up_[x]))
      return false;
  return true;
}

Poset Poset::induced(const VertexSet &points) const {
  const auto keep = points.to_vector();
  const auto k = keep.size();
  std::vector<VertexSet> up(k, VertexSet(k));
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      if (leq(keep[i], keep[j]))
        up[i].insert(j);
  return from_up_sets(std::move(up));
}

Poset Poset::relabeled(std::span<const Index> perm) const {
  if (perm.size() != n_)
    throw Error(ErrorCode::InvalidParameter, "permutation has wrong length");
  VertexSet image(n_);
  for (Index p : perm) {
    check_index(p);
    image.insert(p);
  }
  if (image.size() != n_)
    throw Error(ErrorCode::InvalidParameter, "relabeling is not a bijection");
  std::vector<VertexSet> up(n_, VertexSet(n_));
  for (Index x = 0; x < n_; ++x)
    for (Index y : up_[x])
      up[perm[x]].insert(perm[y]);
  auto down = transpose(up);
  return Poset(n_, std::move(up), std::move(down));
}

} // namespace fppshield
