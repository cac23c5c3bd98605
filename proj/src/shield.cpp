#include <fppshield/shield.hpp>

#include <algorithm>
#include <array>

namespace fppshield {

bool has_fpp_graph(const Poset &p) {
  if (!p.is_connected())
    return false;
  for (const auto &e : p.minmax_covers())
    if (p.is_connected_without(e))
      return false;
  return true;
}

std::string_view to_string(FiredCondition c) {
  switch (c) {
  case FiredCondition::XyInMinMax:
    return "XY_IN_LxU";
  case FiredCondition::XInMiddle:
    return "X_IN_M";
  case FiredCondition::YInMiddle:
    return "Y_IN_M";
  }
  return "?";
}

namespace {

bool retracts_to(const Poset &p, Index from, Index to) {
  const auto targets = p.i_retract_targets(from);
  return std::find(targets.begin(), targets.end(), to) != targets.end();
}

// Orders three points of P into a chain u < v < w, if they form one.
std::optional<std::array<Index, 3>> as_chain(const Poset &p,
                                             std::array<Index, 3> pts) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!p.comparable(pts[i], pts[j]))
        return std::nullopt;
  std::sort(pts.begin(), pts.end(),
            [&](Index x, Index y) { return p.lt(x, y); });
  return pts;
}

} // namespace

std::optional<ThreeChainWitness> pair_has_3cp(const Poset &p, EdgePair e) {
  if (!p.is_cover(e))
    throw Error(ErrorCode::PreconditionViolated,
                "3-chain-property queried for a non-cover pair");
  if (!p.is_connected_without(e))
    throw Error(ErrorCode::PreconditionViolated,
                "3-chain-property queried for a disconnecting cover edge");

  const Poset q = p.remove_cover(e);
  const auto s = p.strata();
  const auto [a, b] = e;

  for (const auto &xy : q.cover_edges()) {
    const auto [x, y] = xy;
    // The chain has three points, so {x,y} shares exactly one point with
    // {a,b}.
    const bool x_shared = x == a || x == b;
    const bool y_shared = y == a || y == b;
    if (x_shared == y_shared)
      continue;
    const Index other = x_shared ? y : x;
    const auto chain = as_chain(p, {a, b, other});
    if (!chain)
      continue;
    const auto [u, v, w] = *chain;
    if (!p.is_cover({u, v}) || !p.is_cover({v, w}))
      continue;
    if (!s.minimals.contains(u) || !s.maximals.contains(w))
      continue;
    if (!q.is_connected_without(xy))
      continue;

    const bool xy_extremal = s.minimals.contains(x) && s.maximals.contains(y);
    const bool x_middle = s.middles.contains(x);
    const bool y_middle = s.middles.contains(y);
    if (xy_extremal && p.interval(u, w) != VertexSet(p.size(), {u, v, w}))
      continue;
    if (x_middle && !retracts_to(p, b, a))
      continue;
    if (y_middle && !retracts_to(p, a, b))
      continue;

    ThreeChainWitness wit;
    wit.pair_removed = e;
    wit.witness = xy;
    wit.u = u;
    wit.v = v;
    wit.w = w;
    wit.fired = xy_extremal ? FiredCondition::XyInMinMax
                : x_middle  ? FiredCondition::XInMiddle
                            : FiredCondition::YInMiddle;
    if (!xy_extremal && !x_middle && !y_middle)
      throw Error(ErrorCode::InvariantViolation,
                  "3-chain witness with no applicable side condition");
    return wit;
  }
  return std::nullopt;
}

bool has_3cp(const Poset &p) {
  for (const auto &e : p.cover_edges())
    if (p.is_connected_without(e) && !pair_has_3cp(p, e))
      return false;
  return true;
}

bool critical_pairs_extremal(const Poset &p) {
  const auto s = p.strata();
  for (const auto &e : critical_pairs(p))
    if (!s.minimals.contains(e.a) || !s.maximals.contains(e.b))
      return false;
  return true;
}

TheoremVerdict l_shield_theorem(const Poset &p) {
  return {has_3cp(p), has_fpp_graph(p)};
}

TheoremVerdict u_shield_theorem(const Poset &p) {
  const auto comps = p.components();
  if (comps.size() == 1)
    return {critical_pairs_extremal(p), has_fpp_graph(p)};
  const bool exposed = comps.size() == 2 &&
                       has_fpp_graph(p.induced(comps[0])) &&
                       has_fpp_graph(p.induced(comps[1]));
  return {!exposed, true};
}

bool is_l_shielded(const Poset &p, Method method) {
  if (method == Method::Theorem)
    return l_shield_theorem(p).value;
  for (const auto &e : p.cover_edges())
    if (has_fpp_graph(p.remove_cover(e)))
      return false;
  return true;
}

bool is_u_shielded(const Poset &p, Method method) {
  if (method == Method::Theorem)
    return u_shield_theorem(p).value;
  for (const auto &e : critical_pairs(p))
    if (has_fpp_graph(p.add_critical(e)))
      return false;
  return true;
}

Corollary1Result corollary1_check(const Poset &p) {
  Corollary1Result r;
  const auto s = p.strata();
  bool intervals_ok = true;
  for (Index l : s.minimals)
    for (Index u : s.maximals)
      if (p.interval(l, u).size() == 3)
        intervals_ok = false;
  r.applies = intervals_ok && has_fpp_graph(p) && !p.has_irreducible_point();

  r.conclusion_verified = true;
  for (const auto &c : lower_covers(p))
    if (c.poset.is_connected() && !has_fpp_graph(c.poset))
      r.conclusion_verified = false;
  return r;
}

Corollary4Result corollary4_check(const Poset &p) {
  Corollary4Result r;
  r.applies = has_fpp_graph(p);
  r.all_upper_fppgraph = true;
  for (const auto &c : upper_covers(p))
    if (!has_fpp_graph(c.poset)) {
      r.all_upper_fppgraph = false;
      break;
    }
  const auto s = p.strata();
  r.extremal_points_comparable = true;
  for (Index l : s.minimals)
    for (Index u : s.maximals)
      if (!p.leq(l, u))
        r.extremal_points_comparable = false;
  return r;
}

std::vector<Poset> descending_chain_to_height2(const Poset &p) {
  if (!has_fpp_graph(p))
    throw Error(ErrorCode::PreconditionViolated,
                "descending chain needs a poset with an FPP-graph");
  if (p.height() < 3)
    throw Error(ErrorCode::PreconditionViolated,
                "descending chain needs height at least 3");

  std::vector<Poset> chain{p};
  while (chain.back().height() > 2) {
    const Poset &cur = chain.back();
    const auto middles = cur.strata().middles;
    const auto covers = cur.cover_edges();
    const auto it = std::find_if(covers.begin(), covers.end(), [&](EdgePair e) {
      return middles.contains(e.a) && middles.contains(e.b);
    });
    if (it == covers.end())
      throw Error(ErrorCode::InvariantViolation,
                  "no middle-to-middle cover edge at height >= 3");
    Poset next = cur.remove_cover(*it);
    if (!has_fpp_graph(next))
      throw Error(ErrorCode::InvariantViolation,
                  "lower cover in descending chain lost its FPP-graph");
    chain.push_back(std::move(next));
  }
  if (chain.back().height() != 2)
    throw Error(ErrorCode::InvariantViolation,
                "descending chain skipped height 2");
  return chain;
}

Lemma3Result lemma3_check(const Poset &p) {
  if (p.height() != 2 || !has_fpp_graph(p))
    throw Error(ErrorCode::PreconditionViolated,
                "interval witness check needs height 2 and an FPP-graph");
  Lemma3Result r;
  r.equivalence_mode = !p.has_irreducible_point();
  const auto s = p.strata();
  const auto n = p.size();

  for (const auto &e : p.cover_edges()) {
    if (!p.is_connected_without(e))
      continue;
    const Poset q = p.remove_cover(e);
    const auto [a, b] = e;
    Lemma3Witness wit;
    wit.pair = e;

    auto consider = [&](EdgePair closing, Index z) {
      if (p.interval(closing.a, closing.b) != VertexSet(n, {a, b, z}))
        return;
      if (!q.is_cover(closing))
        throw Error(ErrorCode::InvariantViolation,
                    "3-element interval does not yield a cover after removal");
      if (q.is_connected_without(closing))
        wit.candidates.push_back(z);
    };
    if (s.minimals.contains(a) && s.middles.contains(b)) {
      for (Index z : s.maximals)
        consider({a, z}, z);
    } else if (s.middles.contains(a) && s.maximals.contains(b)) {
      for (Index z : s.minimals)
        consider({z, b}, z);
    }

    if (wit.candidates.empty()) {
      r.failing_pairs.push_back(e);
    } else {
      wit.z = wit.candidates.front();
      r.witnesses.push_back(std::move(wit));
    }
  }
  r.condition_holds = r.failing_pairs.empty();
  return r;
}

ShieldReport analyze(const Poset &p) {
  ShieldReport r;
  r.n = p.size();
  r.edges = p.cover_edges();
  r.connected = p.is_connected();
  r.height = p.height();
  r.strata = p.strata();
  r.minmax = p.minmax_covers();
  r.has_fpp_graph = has_fpp_graph(p);

  r.l_shielded = true;
  for (const auto &c : lower_covers(p)) {
    const bool f = has_fpp_graph(c.poset);
    r.per_lower_cover.push_back({c.edge, f});
    if (f)
      r.l_shielded = false;
  }
  r.u_shielded = true;
  for (const auto &c : upper_covers(p)) {
    const bool f = has_fpp_graph(c.poset);
    r.per_upper_cover.push_back({c.edge, f});
    if (f)
      r.u_shielded = false;
  }

  r.has_3cp = true;
  for (const auto &e : r.edges) {
    if (!p.is_connected_without(e))
      continue;
    if (auto w = pair_has_3cp(p, e))
      r.witnesses.push_back(*w);
    else
      r.has_3cp = false;
  }
  r.crit_in_LxU = critical_pairs_extremal(p);
  r.l_shielded_theorem = r.has_3cp;
  r.u_shielded_theorem = u_shield_theorem(p).value;
  if (r.height == 2 && r.has_fpp_graph)
    r.lemma3 = lemma3_check(p);
  return r;
}

} // namespace fppshield
