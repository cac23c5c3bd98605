#include <fppshield/oracles.hpp>

namespace fppshield {

namespace {

void check_enumeration_size(std::size_t n, std::size_t max_n) {
  if (n == 0)
    throw Error(ErrorCode::InvalidParameter, "carrier must be non-empty");
  if (n > max_n)
    throw Error(ErrorCode::ResourceLimit,
                "enumeration of posets on " + std::to_string(n) +
                    " points exceeds the configured maximum of " +
                    std::to_string(max_n));
}

void descend(const Poset &p, const std::function<void(const Poset &)> &visit) {
  visit(p);
  const auto n = p.size();
  const auto size = p.relation_size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (a == b || p.comparable(a, b))
        continue;
      // Close under the single new pair: everything below a now lies below
      // everything above b.
      std::vector<VertexSet> up;
      up.reserve(n);
      for (Index x = 0; x < n; ++x) {
        up.push_back(p.up_set(x));
        if (p.leq(x, a))
          up.back() |= p.up_set(b);
      }
      Poset child = Poset::from_up_sets(std::move(up));
      if (child.relation_size() != size + 1)
        continue;
      if (child.cover_edges().back() != EdgePair{a, b})
        continue;
      descend(child, visit);
    }
}

} // namespace

void for_each_poset(std::size_t n, const std::function<void(const Poset &)> &visit,
                    std::size_t max_n) {
  check_enumeration_size(n, max_n);
  descend(Poset::antichain(n), visit);
}

std::vector<Poset> enumerate_posets(std::size_t n, std::size_t max_n) {
  std::vector<Poset> out;
  for_each_poset(n, [&](const Poset &p) { out.push_back(p); }, max_n);
  return out;
}

std::map<Poset, LatticeCovers> lattice_cover_oracle(std::size_t n) {
  check_enumeration_size(n, kMaxLatticeCarrier);
  const auto universe = enumerate_posets(n);
  const auto count = universe.size();

  auto strictly_below = [&](std::size_t i, std::size_t j) {
    return i != j && universe[i].is_subrelation_of(universe[j]);
  };

  std::map<Poset, LatticeCovers> out;
  for (const auto &p : universe)
    out.emplace(p, LatticeCovers{});
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (!strictly_below(i, j))
        continue;
      bool between = false;
      for (std::size_t k = 0; k < count && !between; ++k)
        between = strictly_below(i, k) && strictly_below(k, j);
      if (between)
        continue;
      out.at(universe[i]).upper.insert(universe[j]);
      out.at(universe[j]).lower.insert(universe[i]);
    }
  return out;
}

} // namespace fppshield
