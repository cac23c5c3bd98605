#include <fppshield/cover_lattice.hpp>

#include <algorithm>

namespace fppshield {

std::vector<EdgePair> critical_pairs(const Poset &p) {
  std::vector<EdgePair> out;
  const auto n = p.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b && p.is_critical({a, b}))
        out.push_back({a, b});
  return out;
}

std::vector<Cover> upper_covers(const Poset &p) {
  std::vector<Cover> out;
  for (const auto &e : critical_pairs(p))
    out.push_back({e, p.add_critical(e)});
  return out;
}

std::vector<Cover> lower_covers(const Poset &p) {
  std::vector<Cover> out;
  for (const auto &e : p.cover_edges())
    out.push_back({e, p.remove_cover(e)});
  return out;
}

CoverEnumeration enumerate_covers(const Poset &p) {
  return {p, upper_covers(p), lower_covers(p)};
}

namespace {

// Minimal (resp. maximal) elements of a subset, with respect to P.
VertexSet minimal_elements(const Poset &p, const VertexSet &s) {
  VertexSet out(p.size());
  for (Index x : s)
    if (!(p.punctured_down_set(x).intersects(s)))
      out.insert(x);
  return out;
}

VertexSet maximal_elements(const Poset &p, const VertexSet &s) {
  VertexSet out(p.size());
  for (Index x : s)
    if (!(p.punctured_up_set(x).intersects(s)))
      out.insert(x);
  return out;
}

bool contains(const std::vector<EdgePair> &v, EdgePair e) {
  return std::binary_search(v.begin(), v.end(), e);
}

} // namespace

TransitionFacts transition_facts(const Poset &p, EdgePair e) {
  const Poset q = p.add_critical(e);
  const auto [a, b] = e;
  const auto n = p.size();
  TransitionFacts f;
  f.pair = e;

  f.down_set_update = true;
  f.up_set_update = true;
  for (Index x = 0; x < n; ++x) {
    auto down = p.down_set(x);
    if (down.contains(b))
      down.insert(a);
    f.down_set_update = f.down_set_update && q.down_set(x) == down;
    auto up = p.up_set(x);
    if (up.contains(a))
      up.insert(b);
    f.up_set_update = f.up_set_update && q.up_set(x) == up;
  }

  VertexSet ab(n, {a, b});
  f.interval_sandwich = true;
  f.interval_unchanged_outside = true;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const auto ip = p.interval(x, y);
      const auto iq = q.interval(x, y);
      if (!ip.is_subset_of(iq) || !iq.is_subset_of(ip | ab))
        f.interval_sandwich = false;
      if ((p.leq(b, x) || p.leq(y, a)) && ip != iq)
        f.interval_unchanged_outside = false;
    }

  const auto sp = p.strata();
  const auto sq = q.strata();
  auto lp = sp.minimals;
  lp.erase(b);
  f.minimals_update = sq.minimals == lp;
  auto up_p = sp.maximals;
  up_p.erase(a);
  f.maximals_update = sq.maximals == up_p;
  f.middles_sandwich = (sq.middles - ab).is_subset_of(sp.middles) &&
                       sp.middles.is_subset_of(sq.middles);

  const auto mp = p.minmax_covers();
  const auto mq = q.minmax_covers();
  f.minmax_gain_only_new_pair =
      std::all_of(mq.begin(), mq.end(), [&](EdgePair g) {
        return g == e || contains(mp, g);
      });

  const auto min_down_a = minimal_elements(p, p.down_set(a));
  const auto max_up_b_minus_up_a =
      maximal_elements(p, p.up_set(b) - p.up_set(a));
  const auto min_down_a_minus_down_b =
      minimal_elements(p, p.down_set(a) - p.down_set(b));
  const auto max_up_b = maximal_elements(p, p.up_set(b));
  f.minmax_loss_localized = true;
  f.minmax_loss_with_endpoint_shift = true;
  for (const auto &g : mp) {
    if (contains(mq, g))
      continue;
    const bool first = min_down_a.contains(g.a) && max_up_b_minus_up_a.contains(g.b);
    const bool second =
        min_down_a_minus_down_b.contains(g.a) && max_up_b.contains(g.b);
    const bool shifted = (g.a == b && sp.maximals.contains(g.b)) ||
                         (g.b == a && sp.minimals.contains(g.a));
    if (!first && !second)
      f.minmax_loss_localized = false;
    if (!first && !second && !shifted)
      f.minmax_loss_with_endpoint_shift = false;
  }

  if (sp.minimals.contains(a) && sp.maximals.contains(b)) {
    auto expected = mp;
    expected.push_back(e);
    std::sort(expected.begin(), expected.end());
    f.extremal_pair_adds_minmax = mq == expected;
  } else {
    f.extremal_pair_adds_minmax = true;
  }
  return f;
}

bool TransitionFacts::all() const { return failed().empty(); }

bool TransitionFacts::all_with_endpoint_shift() const {
  const auto f = failed();
  return minmax_loss_with_endpoint_shift &&
         std::all_of(f.begin(), f.end(), [](const std::string &name) {
           return name == "minmax_loss_localized";
         });
}

std::vector<std::string> TransitionFacts::failed() const {
  std::vector<std::string> out;
  auto check = [&](bool ok, const char *name) {
    if (!ok)
      out.emplace_back(name);
  };
  check(down_set_update, "down_set_update");
  check(up_set_update, "up_set_update");
  check(interval_sandwich, "interval_sandwich");
  check(interval_unchanged_outside, "interval_unchanged_outside");
  check(minimals_update, "minimals_update");
  check(maximals_update, "maximals_update");
  check(middles_sandwich, "middles_sandwich");
  check(minmax_gain_only_new_pair, "minmax_gain_only_new_pair");
  check(minmax_loss_localized, "minmax_loss_localized");
  check(extremal_pair_adds_minmax, "extremal_pair_adds_minmax");
  return out;
}

} // namespace fppshield
