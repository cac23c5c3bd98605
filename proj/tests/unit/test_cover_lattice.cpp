#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <fppshield/cover_lattice.hpp>
#include <fppshield/generators.hpp>
#include <fppshield/oracles.hpp>

#include "naive.hpp"

using namespace fppshield;

namespace {

Poset v_poset() { return Poset::from_edges(3, {{0, 2}, {1, 2}}); }
Poset chain3() { return Poset::from_edges(3, {{0, 1}, {1, 2}}); }

} // namespace

TEST_SUITE("cover-lattice") {

TEST_CASE("critical pairs") {
  CHECK(critical_pairs(Poset::antichain(2)) == std::vector<EdgePair>{{0, 1}, {1, 0}});
  CHECK(critical_pairs(v_poset()) == std::vector<EdgePair>{{0, 1}, {1, 0}});
  CHECK(critical_pairs(chain3()).empty());
}

TEST_CASE("upper covers") {
  auto a = upper_covers(Poset::antichain(2));
  REQUIRE(a.size() == 2);
  CHECK(a[0].poset == Poset::from_edges(2, {{0, 1}}));
  CHECK(a[1].poset == Poset::from_edges(2, {{1, 0}}));
  CHECK(upper_covers(chain3()).empty());
  auto v = upper_covers(v_poset());
  REQUIRE(v.size() == 2);
  CHECK(v[0].poset == chain3());
  CHECK(v[1].poset.height() == 2);
}

TEST_CASE("lower covers") {
  CHECK(lower_covers(chain3()).size() == 2);
  CHECK(lower_covers(Poset::antichain(3)).empty());
  CHECK(lower_covers(gen_pm(12)).size() == 72);
  auto covers = enumerate_covers(v_poset());
  CHECK(covers.base == v_poset());
  CHECK(covers.upper.size() == 2);
  CHECK(covers.lower.size() == 2);
}

TEST_CASE("transition facts on the antichain") {
  TransitionFacts f = transition_facts(Poset::antichain(2), {0, 1});
  CHECK(f.all());
  CHECK(f.failed().empty());
}

TEST_CASE("transition facts on the V poset expose the minmax-loss gap") {
  // Q = V(0,1) is the 3-chain: minmax(V) = {(0,2),(1,2)}, minmax(Q) = {}.
  // (1,2) is lost because 1 is no longer minimal, which the localized
  // containment does not account for.
  TransitionFacts f = transition_facts(v_poset(), {0, 1});
  CHECK(f.down_set_update);
  CHECK(f.up_set_update);
  CHECK(f.interval_sandwich);
  CHECK(f.interval_unchanged_outside);
  CHECK(f.minimals_update);
  CHECK(f.maximals_update);
  CHECK(f.middles_sandwich);
  CHECK(f.minmax_gain_only_new_pair);
  CHECK(f.extremal_pair_adds_minmax);
  CHECK_FALSE(f.minmax_loss_localized);
  CHECK(f.minmax_loss_with_endpoint_shift);
  CHECK_FALSE(f.all());
  CHECK(f.all_with_endpoint_shift());
  CHECK(f.failed() == std::vector<std::string>{"minmax_loss_localized"});
}

TEST_CASE("transition facts reject non-critical pairs") {
  CHECK_THROWS_AS(transition_facts(chain3(), {0, 2}), Error);
}

TEST_CASE("extremal critical pairs add exactly one minmax relation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Poset p = naive::random_poset(rng, 2 + trial % 6, 0.3);
    for (auto e : critical_pairs(p)) {
      TransitionFacts f = transition_facts(p, e);
      CHECK(f.all_with_endpoint_shift());
      if (p.is_minimal(e.a) && p.is_maximal(e.b)) {
        auto before = p.minmax_covers();
        before.push_back(e);
        std::ranges::sort(before);
        CHECK(p.add_critical(e).minmax_covers() == before);
      }
    }
  }
}

TEST_CASE("covers change the relation by exactly one pair") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Poset p = naive::random_poset(rng, 1 + trial % 7, 0.25);
    auto rel = naive::from_poset(p);
    std::vector<std::pair<std::size_t, std::size_t>> crit;
    for (auto e : critical_pairs(p))
      crit.emplace_back(e.a, e.b);
    CHECK(crit == naive::critical(rel));
    for (const auto &c : upper_covers(p)) {
      CHECK(c.poset.relation_size() == p.relation_size() + 1);
      CHECK(p.is_subrelation_of(c.poset));
    }
    for (const auto &c : lower_covers(p)) {
      CHECK(c.poset.relation_size() + 1 == p.relation_size());
      CHECK(c.poset.is_subrelation_of(p));
    }
  }
}

TEST_CASE("covers match the lattice oracle for n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto lattice = lattice_cover_oracle(n);
    CHECK(lattice.size() == naive::all_orders_by_filter(n).size());
    for (const auto &[p, expected] : lattice) {
      std::set<Poset> up, down;
      for (const auto &c : upper_covers(p))
        up.insert(c.poset);
      for (const auto &c : lower_covers(p))
        down.insert(c.poset);
      CHECK(up == expected.upper);
      CHECK(down == expected.lower);
    }
  }
}

} // TEST_SUITE
