#include <doctest.h>

#include <algorithm>
#include <random>

#include <fppshield/cover_lattice.hpp>
#include <fppshield/generators.hpp>
#include <fppshield/shield.hpp>

#include "naive.hpp"

using namespace fppshield;

namespace {

Poset v_poset() { return Poset::from_edges(3, {{0, 2}, {1, 2}}); }
Poset chain3() { return Poset::from_edges(3, {{0, 1}, {1, 2}}); }
Poset crown4() { return gen_family(FamilyKind::Crown, 4); }
Poset two_vs() { return Poset::from_edges(6, {{0, 2}, {1, 2}, {3, 5}, {4, 5}}); }

} // namespace

TEST_SUITE("shield-analysis") {

TEST_CASE("FPP-graph") {
  CHECK(has_fpp_graph(v_poset()));
  CHECK_FALSE(has_fpp_graph(crown4()));
  CHECK(has_fpp_graph(gen_pm(12)));
  CHECK(has_fpp_graph(Poset::antichain(1)));
  CHECK(has_fpp_graph(chain3()));
  CHECK_FALSE(has_fpp_graph(Poset::antichain(2)));
  CHECK_FALSE(has_fpp_graph(gen_family(FamilyKind::Crown, 6)));
}

TEST_CASE("pair_has_3cp") {
  CHECK_FALSE(pair_has_3cp(chain3(), {0, 1}).has_value());

  auto w = pair_has_3cp(gen_pm(12), {0, 12});
  REQUIRE(w.has_value());
  CHECK(w->witness == EdgePair{0, 24});
  CHECK(w->u == 0);
  CHECK(w->v == 12);
  CHECK(w->w == 24);
  CHECK(w->fired == FiredCondition::XyInMinMax);
  CHECK(to_string(w->fired) == "XY_IN_LxU");

  Poset diamond = Poset::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(pair_has_3cp(diamond, {1, 3}).has_value());
}

TEST_CASE("pair_has_3cp preconditions") {
  CHECK_THROWS_AS(pair_has_3cp(chain3(), {0, 2}), Error);
  CHECK_THROWS_AS(pair_has_3cp(v_poset(), {0, 2}), Error);
}

TEST_CASE("3-chain-property") {
  CHECK(has_3cp(Poset::antichain(3)));
  CHECK(has_3cp(two_vs()));
  CHECK_FALSE(has_3cp(chain3()));
  CHECK(has_3cp(gen_pm(12)));
}

TEST_CASE("L-shieldedness") {
  CHECK(is_l_shielded(v_poset(), Method::Direct));
  CHECK(is_l_shielded(v_poset(), Method::Theorem));
  CHECK_FALSE(is_l_shielded(chain3(), Method::Direct));
  CHECK_FALSE(is_l_shielded(chain3(), Method::Theorem));
  // Deleting one relation of the 4-crown leaves a connected 4-fence,
  // which has an FPP-graph.
  CHECK_FALSE(is_l_shielded(crown4(), Method::Direct));
  CHECK(has_fpp_graph(crown4().remove_cover({0, 2})));
}

TEST_CASE("U-shieldedness") {
  CHECK(is_u_shielded(chain3(), Method::Direct));
  CHECK(is_u_shielded(chain3(), Method::Theorem));
  CHECK_FALSE(is_u_shielded(v_poset(), Method::Direct));
  CHECK_FALSE(is_u_shielded(v_poset(), Method::Theorem));
  CHECK_FALSE(critical_pairs_extremal(v_poset()));
  CHECK_FALSE(is_u_shielded(two_vs(), Method::Direct));
  CHECK_FALSE(is_u_shielded(two_vs(), Method::Theorem));
  CHECK(u_shield_theorem(two_vs()).equivalence_applies);
  CHECK(is_u_shielded(Poset::antichain(3), Method::Direct));
  CHECK(is_u_shielded(Poset::antichain(3), Method::Theorem));
}

TEST_CASE("corollary1_check") {
  auto p2 = corollary1_check(gen_pm(2));
  CHECK(p2.applies);
  CHECK(p2.conclusion_verified);
  CHECK_FALSE(corollary1_check(v_poset()).applies);
  CHECK_FALSE(corollary1_check(crown4()).applies);
}

TEST_CASE("corollary4_check") {
  auto p2 = corollary4_check(gen_pm(2));
  CHECK(p2.applies);
  CHECK(p2.all_upper_fppgraph);
  CHECK(p2.extremal_points_comparable);
  auto v = corollary4_check(v_poset());
  CHECK(v.applies);
  CHECK(v.all_upper_fppgraph);
  CHECK(v.extremal_points_comparable);
  auto p12 = corollary4_check(gen_pm(12));
  CHECK(p12.applies);
  CHECK_FALSE(p12.all_upper_fppgraph);
  CHECK_FALSE(p12.extremal_points_comparable);
}

TEST_CASE("descending chain to height 2") {
  Poset c4 = gen_family(FamilyKind::Chain, 4);
  auto chain = descending_chain_to_height2(c4);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0] == c4);
  CHECK(chain[1] == c4.remove_cover({1, 2}));
  CHECK(chain[1].height() == 2);
  CHECK(has_fpp_graph(chain[1]));

  auto c5 = descending_chain_to_height2(gen_family(FamilyKind::Chain, 5));
  REQUIRE(c5.size() >= 2);
  CHECK(c5.back().height() == 2);
  for (std::size_t i = 1; i < c5.size(); ++i) {
    CHECK(has_fpp_graph(c5[i]));
    CHECK(c5[i].relation_size() + 1 == c5[i - 1].relation_size());
    CHECK(c5[i].is_subrelation_of(c5[i - 1]));
  }
  CHECK_THROWS_AS(descending_chain_to_height2(chain3()), Error);
  CHECK_THROWS_AS(descending_chain_to_height2(gen_family(FamilyKind::Crown, 6)), Error);
}

TEST_CASE("lemma3_check interval witnesses") {
  auto p12 = lemma3_check(gen_pm(12));
  CHECK(p12.condition_holds);
  CHECK(p12.equivalence_mode);
  CHECK(p12.failing_pairs.empty());
  CHECK(p12.witnesses.size() == 72);
  for (const auto &w : p12.witnesses) {
    if (w.pair == EdgePair{0, 12})
      CHECK(w.z == 24);
    if (w.pair == EdgePair{0, 13})
      CHECK(w.z == 32);
  }

  auto p6 = lemma3_check(gen_pm(6));
  CHECK_FALSE(p6.condition_holds);
  CHECK(std::ranges::count(p6.failing_pairs, EdgePair{0, 7}) == 1);
  CHECK(p6.condition_holds == has_3cp(gen_pm(6)));

  CHECK_THROWS_AS(lemma3_check(v_poset()), Error);
}

TEST_CASE("analyze") {
  ShieldReport p12 = analyze(gen_pm(12));
  CHECK(p12.n == 36);
  CHECK(p12.connected);
  CHECK(p12.minmax.empty());
  CHECK(p12.has_fpp_graph);
  CHECK(p12.l_shielded);
  CHECK(p12.u_shielded);
  CHECK(p12.l_shielded_theorem);
  CHECK(p12.u_shielded_theorem);
  CHECK(p12.per_lower_cover.size() == 72);
  CHECK(p12.lemma3.has_value());

  ShieldReport crown = analyze(crown4());
  CHECK_FALSE(crown.has_fpp_graph);
  CHECK_FALSE(crown.l_shielded);
  CHECK(crown.u_shielded == is_u_shielded(crown4(), Method::Direct));

  ShieldReport one = analyze(Poset::antichain(1));
  CHECK(one.has_fpp_graph);
  CHECK(one.l_shielded);
  CHECK(one.u_shielded);
}

TEST_CASE("P_m invariants") {
  for (std::size_t m : {4, 6, 8, 10, 12, 14, 20}) {
    Poset p = gen_pm(m);
    CHECK(p.size() == 3 * m);
    CHECK(p.is_connected());
    CHECK(p.minmax_covers().empty());
    CHECK(p.height() == 2);
    Strata s = p.strata();
    CHECK(s.minimals.size() == m);
    CHECK(s.middles.size() == m);
    CHECK(s.maximals.size() == m);
    for (Index x = 0; x < 2 * m; ++x) {
      std::size_t covers = 0;
      for (auto e : p.cover_edges())
        covers += e.a == x ? 1 : 0;
      if (m >= 8)
        CHECK(covers == 3);
      else
        CHECK((covers >= 2 && covers <= 3));
    }
    // x -> x + 2 within each layer is an automorphism.
    std::vector<Index> rot(3 * m);
    for (Index x = 0; x < 3 * m; ++x)
      rot[x] = (x / m) * m + (x % m + 2) % m;
    CHECK(p.relabeled(rot) == p);
  }
  CHECK_THROWS_AS(gen_pm(5), Error);
  CHECK_THROWS_AS(gen_pm(0), Error);
}

TEST_CASE("shieldedness agrees with the matrix oracle on random posets") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 250; ++trial) {
    Poset p = naive::random_poset(rng, 1 + trial % 8, 0.2 + 0.05 * (trial % 6));
    auto rel = naive::from_poset(p);
    bool fpp_graph = has_fpp_graph(p);
    CHECK(fpp_graph == naive::has_fpp_graph(rel));
    bool l_direct = is_l_shielded(p, Method::Direct);
    bool u_direct = is_u_shielded(p, Method::Direct);
    CHECK(l_direct == naive::l_shielded(rel));
    CHECK(u_direct == naive::u_shielded(rel));
    bool l_thm = is_l_shielded(p, Method::Theorem);
    if (l_thm)
      CHECK(l_direct);
    if (fpp_graph) {
      CHECK(l_thm == l_direct);
      CHECK(critical_pairs_extremal(p) == u_direct);
    }
    if (p.is_connected() && critical_pairs_extremal(p))
      CHECK(u_direct);
    if (!p.is_connected())
      CHECK(is_u_shielded(p, Method::Theorem) == u_direct);
  }
}

} // TEST_SUITE
