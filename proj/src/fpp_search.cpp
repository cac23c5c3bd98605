#include <fppshield/oracles.hpp>

#include <algorithm>
#include <numeric>

namespace fppshield {

namespace {

class EndomorphismSearch {
public:
  EndomorphismSearch(const Poset &p, std::uint64_t budget)
      : p_(p), n_(p.size()), budget_(budget), image_(n_, 0), order_(n_) {
    std::iota(order_.begin(), order_.end(), Index{0});
    std::vector<std::size_t> degree(n_);
    for (Index x = 0; x < n_; ++x)
      degree[x] = (p.up_set(x) | p.down_set(x)).size();
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Index x, Index y) { return degree[x] > degree[y]; });
  }

  EndomorphismSearchResult run() {
    std::vector<VertexSet> domains;
    domains.reserve(n_);
    for (Index x = 0; x < n_; ++x) {
      auto d = VertexSet::full(n_);
      d.erase(x);
      domains.push_back(std::move(d));
    }
    EndomorphismSearchResult r;
    const Outcome o = extend(0, domains);
    r.nodes_explored = nodes_;
    if (o == Outcome::Found) {
      r.has_fpp = false;
      r.counterexample_map = image_;
    } else if (o == Outcome::Exhausted) {
      r.has_fpp = true;
    }
    return r;
  }

private:
  enum class Outcome { Found, Exhausted, OutOfBudget };

  Outcome extend(std::size_t depth, const std::vector<VertexSet> &domains) {
    if (depth == n_)
      return Outcome::Found;
    const Index x = order_[depth];
    for (Index v : domains[x]) {
      if (++nodes_ > budget_)
        return Outcome::OutOfBudget;
      image_[x] = v;
      std::vector<VertexSet> next = domains;
      bool viable = true;
      for (std::size_t k = depth + 1; k < n_ && viable; ++k) {
        const Index y = order_[k];
        if (p_.lt(x, y))
          next[y] &= p_.up_set(v);
        else if (p_.lt(y, x))
          next[y] &= p_.down_set(v);
        else
          continue;
        viable = !next[y].empty();
      }
      if (!viable)
        continue;
      const Outcome o = extend(depth + 1, next);
      if (o != Outcome::Exhausted)
        return o;
    }
    return Outcome::Exhausted;
  }

  const Poset &p_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Index> image_;
  std::vector<Index> order_;
};

} // namespace

bool is_endomorphism(const Poset &p, const std::vector<Index> &f) {
  if (f.size() != p.size())
    return false;
  for (Index x = 0; x < p.size(); ++x) {
    if (f[x] >= p.size())
      return false;
    for (Index y : p.up_set(x))
      if (!p.leq(f[x], f[y]))
        return false;
  }
  return true;
}

EndomorphismSearchResult fpp_bruteforce(const Poset &p,
                                        std::uint64_t node_budget) {
  auto r = EndomorphismSearch(p, node_budget).run();
  if (r.counterexample_map) {
    const auto &f = *r.counterexample_map;
    bool fixed = false;
    for (Index x = 0; x < p.size(); ++x)
      fixed = fixed || f[x] == x;
    if (fixed || !is_endomorphism(p, f))
      throw Error(ErrorCode::InvariantViolation,
                  "endomorphism search returned an invalid map");
  }
  return r;
}

bool has_fixed_point_property(const Poset &p, std::uint64_t node_budget) {
  const auto r = fpp_bruteforce(p, node_budget);
  if (!r.has_fpp)
    throw Error(ErrorCode::ResourceLimit,
                "endomorphism search exceeded its node budget of " +
                    std::to_string(node_budget));
  return *r.has_fpp;
}

} // namespace fppshield
