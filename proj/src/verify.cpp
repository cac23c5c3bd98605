#include <fppshield/oracles.hpp>

#include <algorithm>
#include <random>
#include <thread>

#include <fppshield/cover_lattice.hpp>
#include <fppshield/shield.hpp>

namespace fppshield {

namespace {

struct TheoremName {
  TheoremId id;
  const char *name;
};

constexpr TheoremName kTheoremNames[] = {
    {TheoremId::Core, "CORE"},
    {TheoremId::Lemma1, "LEMMA1"},
    {TheoremId::Lemma1Amended, "LEMMA1_AMENDED"},
    {TheoremId::Lemma2, "LEMMA2"},
    {TheoremId::Theorem1, "THEOREM1"},
    {TheoremId::Proposition1, "PROP1"},
    {TheoremId::Corollary1, "COR1"},
    {TheoremId::Corollary2, "COR2"},
    {TheoremId::Corollary3, "COR3"},
    {TheoremId::Lemma3, "LEMMA3"},
    {TheoremId::Theorem2, "THEOREM2"},
    {TheoremId::Proposition2, "PROP2"},
    {TheoremId::Corollary4, "COR4"},
    {TheoremId::Lemma4, "LEMMA4"},
    {TheoremId::Height, "HEIGHT"},
    {TheoremId::FppNecessity, "FPP_NECESSITY"},
    {TheoremId::FppEquivariance, "FPP_EQUIVARIANCE"},
    {TheoremId::DeanKeller, "DEAN_KELLER"},
};

// Per-worker accumulator; merged in worker order.
struct Tally {
  std::map<TheoremId, TheoremTally> results;
  std::uint64_t fpp_graph_without_fpp = 0;
};

class PosetChecker {
public:
  PosetChecker(const VerifyOptions &opts, const std::set<TheoremId> &selected,
               const std::map<Poset, LatticeCovers> *lattice)
      : opts_(opts), selected_(selected), lattice_(lattice) {}

  void check(const Poset &p, std::uint64_t ordinal, Tally &tally) {
    tally_ = &tally;
    p_ = &p;
    prepare();
    run(TheoremId::Core, [&] { check_core(); });
    run(TheoremId::Lemma1, [&] { check_lemma1(); });
    run(TheoremId::Lemma1Amended, [&] { check_lemma1_amended(); });
    run(TheoremId::Lemma2, [&] { check_lemma2(); });
    run(TheoremId::Theorem1, [&] { check_theorem1(); });
    run(TheoremId::Proposition1, [&] { check_proposition1(); });
    run(TheoremId::Corollary1, [&] { check_corollary1(); });
    run(TheoremId::Corollary2, [&] { check_corollary2(); });
    run(TheoremId::Corollary3, [&] { check_corollary3(); });
    run(TheoremId::Lemma3, [&] { check_lemma3(); });
    run(TheoremId::Theorem2, [&] { check_theorem2(); });
    run(TheoremId::Proposition2, [&] { check_proposition2(); });
    run(TheoremId::Corollary4, [&] { check_corollary4(); });
    run(TheoremId::Lemma4, [&] { check_lemma4(); });
    run(TheoremId::Height, [&] { check_height(); });
    run(TheoremId::FppNecessity, [&] { check_fpp_necessity(); });
    run(TheoremId::FppEquivariance, [&] { check_fpp_equivariance(ordinal); });
    if (lattice_)
      run(TheoremId::DeanKeller, [&] { check_dean_keller(); });
  }

private:
  void prepare() {
    const Poset &p = *p_;
    connected_ = p.is_connected();
    fpp_graph_ = has_fpp_graph(p);
    strata_ = p.strata();
    height_ = p.height();
    covers_ = p.cover_edges();
    crit_ = critical_pairs(p);
    lower_flags_.clear();
    for (const auto &e : covers_)
      lower_flags_.push_back(has_fpp_graph(p.remove_cover(e)));
    upper_flags_.clear();
    for (const auto &e : crit_)
      upper_flags_.push_back(has_fpp_graph(p.add_critical(e)));
    l_direct_ = std::none_of(lower_flags_.begin(), lower_flags_.end(),
                             [](bool b) { return b; });
    u_direct_ = std::none_of(upper_flags_.begin(), upper_flags_.end(),
                             [](bool b) { return b; });
    has_3cp_ = fppshield::has_3cp(p);
  }

  template <class F> void run(TheoremId id, F &&body) {
    if (!selected_.contains(id))
      return;
    current_ = id;
    failed_ = false;
    try {
      body();
    } catch (const Error &e) {
      if (e.code() == ErrorCode::ResourceLimit)
        throw;
      fail(std::nullopt, e.what());
    }
    if (!failed_)
      ++tally_->results[id].passes;
  }

  void expect(bool ok, std::optional<EdgePair> edge, const std::string &detail) {
    if (!ok)
      fail(edge, detail);
  }

  void fail(std::optional<EdgePair> edge, const std::string &detail) {
    failed_ = true;
    tally_->results[current_].counterexamples.push_back(
        {current_, *p_, edge, detail});
  }

  bool extremal(EdgePair e) const {
    return strata_.minimals.contains(e.a) && strata_.maximals.contains(e.b);
  }

  void check_core() {
    const Poset &p = *p_;
    const auto n = p.size();
    expect(Poset::from_edges(n, covers_) == p, std::nullopt,
           "closure of the cover edges differs from the relation");
    for (const auto &e : covers_) {
      auto edges = p.remove_cover(e).cover_edges();
      edges.push_back(e);
      expect(Poset::from_edges(n, edges) == p, e,
             "re-adding a removed cover edge does not restore the poset");
    }
    p.minmax_covers(); // throws if the two characterizations disagree
    const auto all = strata_.minimals | strata_.maximals | strata_.middles;
    expect(all == VertexSet::full(n) &&
               !strata_.middles.intersects(strata_.minimals | strata_.maximals),
           std::nullopt, "strata do not cover the carrier");
  }

  void check_lemma1() {
    for (const auto &e : crit_) {
      const auto facts = transition_facts(*p_, e);
      if (!facts.all()) {
        std::string detail = "failed:";
        for (const auto &name : facts.failed())
          detail += " " + name;
        fail(e, detail);
      }
    }
  }

  void check_lemma1_amended() {
    for (const auto &e : crit_)
      expect(transition_facts(*p_, e).all_with_endpoint_shift(), e,
             "amended transition facts fail");
  }

  void check_lemma2() {
    if (!connected_)
      return;
    const auto minmax = p_->minmax_covers();
    std::vector<EdgePair> non_minmax, keeps_connected;
    for (const auto &e : covers_) {
      if (!std::binary_search(minmax.begin(), minmax.end(), e))
        non_minmax.push_back(e);
      if (p_->is_connected_without(e))
        keeps_connected.push_back(e);
    }
    expect(std::includes(keeps_connected.begin(), keeps_connected.end(),
                         non_minmax.begin(), non_minmax.end()),
           std::nullopt, "a non-minmax cover edge disconnects the poset");
    expect((non_minmax == keeps_connected) == fpp_graph_, std::nullopt,
           "set equality does not match having an FPP-graph");
  }

  void check_theorem1() {
    expect(!has_3cp_ || l_direct_, std::nullopt,
           "3-chain-property but a lower cover has an FPP-graph");
    expect(!(fpp_graph_ && l_direct_) || has_3cp_, std::nullopt,
           "FPP-graph and L-shielded without the 3-chain-property");
    expect(is_l_shielded(*p_, Method::Theorem) == has_3cp_, std::nullopt,
           "theorem-mode L-shieldedness disagrees with has_3cp");
  }

  void check_proposition1() {
    if (!connected_)
      return;
    for (std::size_t i = 0; i < covers_.size(); ++i) {
      const auto e = covers_[i];
      if (!p_->is_connected_without(e))
        continue;
      const bool witness = pair_has_3cp(*p_, e).has_value();
      const bool lower_fpp_graph = lower_flags_[i];
      expect(!witness || !lower_fpp_graph, e,
             "pair has the 3-chain-property but its lower cover has an "
             "FPP-graph");
      expect(!(fpp_graph_ && !lower_fpp_graph) || witness, e,
             "lower cover lacks an FPP-graph but the pair has no witness");
    }
  }

  void check_corollary1() {
    const auto r = corollary1_check(*p_);
    expect(!r.applies || r.conclusion_verified, std::nullopt,
           "a connected lower cover lacks an FPP-graph");
  }

  void check_corollary2() {
    expect((fpp_graph_ && l_direct_) == (connected_ && has_3cp_), std::nullopt,
           "FPP-graph & L-shielded differs from connected & 3-chain-property");
  }

  void check_corollary3() {
    if (!fpp_graph_ || height_ < 3)
      return;
    const auto chain = descending_chain_to_height2(*p_);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      expect(chain[i].is_subrelation_of(chain[i - 1]) &&
                 chain[i].relation_size() + 1 == chain[i - 1].relation_size(),
             std::nullopt, "descending chain step is not a lower cover");
      expect(has_fpp_graph(chain[i]), std::nullopt,
             "descending chain element lacks an FPP-graph");
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      expect(chain[i].height() >= 3, std::nullopt,
             "descending chain reached height 2 too early");
    expect(chain.back().height() == 2, std::nullopt,
           "descending chain does not end at height 2");
  }

  void check_lemma3() {
    if (height_ != 2 || !fpp_graph_)
      return;
    const auto r = lemma3_check(*p_);
    expect(!r.condition_holds || has_3cp_, std::nullopt,
           "interval condition holds without the 3-chain-property");
    if (r.equivalence_mode)
      expect(r.condition_holds == has_3cp_, std::nullopt,
             "no irreducible point, yet condition and 3-chain-property differ");
  }

  void check_theorem2() {
    const bool crit_extremal =
        std::all_of(crit_.begin(), crit_.end(),
                    [&](EdgePair e) { return extremal(e); });
    expect(!(connected_ && crit_extremal) || u_direct_, std::nullopt,
           "connected with extremal critical pairs, yet an upper cover has an "
           "FPP-graph");
    expect(!(fpp_graph_ && u_direct_) || crit_extremal, std::nullopt,
           "FPP-graph and U-shielded with a non-extremal critical pair");
    if (connected_) {
      const bool theorem = is_u_shielded(*p_, Method::Theorem);
      expect(!theorem || u_direct_, std::nullopt,
             "theorem-mode U-shieldedness not confirmed directly");
      if (fpp_graph_)
        expect(theorem == u_direct_, std::nullopt,
               "theorem-mode and direct U-shieldedness differ");
    }
  }

  void check_proposition2() {
    if (!connected_)
      return;
    for (std::size_t i = 0; i < crit_.size(); ++i) {
      const auto e = crit_[i];
      const bool upper_fpp_graph = upper_flags_[i];
      expect(!extremal(e) || !upper_fpp_graph, e,
             "extremal critical pair yields an upper cover with an FPP-graph");
      expect(!(fpp_graph_ && !upper_fpp_graph) || extremal(e), e,
             "upper cover lacks an FPP-graph but the pair is not extremal");
    }
  }

  void check_corollary4() {
    const auto r = corollary4_check(*p_);
    if (r.applies)
      expect(r.all_upper_fppgraph == r.extremal_points_comparable, std::nullopt,
             "all-upper-covers-FPP-graph differs from extremal comparability");
  }

  void check_lemma4() {
    if (connected_)
      return;
    const auto comps = p_->components();
    const bool two_fpp_graphs = comps.size() == 2 &&
                                has_fpp_graph(p_->induced(comps[0])) &&
                                has_fpp_graph(p_->induced(comps[1]));
    expect(!u_direct_ == two_fpp_graphs, std::nullopt,
           "disconnected U-shieldedness not characterized by two FPP-graph "
           "components");
    expect(is_u_shielded(*p_, Method::Theorem) == u_direct_, std::nullopt,
           "theorem-mode U-shieldedness differs for a disconnected poset");
  }

  void check_height() {
    if (!fpp_graph_)
      return;
    if (height_ >= 3)
      expect(!l_direct_, std::nullopt,
             "FPP-graph of height >= 3 is L-shielded");
    if (height_ <= 1)
      expect(l_direct_, std::nullopt, "FPP-graph of height <= 1 not L-shielded");
  }

  bool fpp(const Poset &q) const {
    return has_fixed_point_property(q, opts_.fpp_node_budget);
  }

  void check_fpp_necessity() {
    if (!connected_)
      return;
    const bool has_fpp = fpp(*p_);
    expect(!has_fpp || fpp_graph_, std::nullopt,
           "fixed point property without an FPP-graph");
    if (fpp_graph_ && !has_fpp)
      ++tally_->fpp_graph_without_fpp;
  }

  void check_fpp_equivariance(std::uint64_t ordinal) {
    std::vector<Index> perm(p_->size());
    for (Index i = 0; i < perm.size(); ++i)
      perm[i] = i;
    std::mt19937_64 rng(opts_.seed ^ (ordinal * 0x9E3779B97F4A7C15ULL));
    std::shuffle(perm.begin(), perm.end(), rng);
    expect(fpp(*p_) == fpp(p_->relabeled(perm)), std::nullopt,
           "fixed point property changes under relabeling");
  }

  void check_dean_keller() {
    const auto &oracle = lattice_->at(*p_);
    std::set<Poset> upper, lower;
    for (const auto &c : upper_covers(*p_)) {
      expect(c.poset.relation_size() == p_->relation_size() + 1, c.edge,
             "upper cover does not add exactly one pair");
      upper.insert(c.poset);
    }
    for (const auto &c : lower_covers(*p_)) {
      expect(c.poset.relation_size() + 1 == p_->relation_size(), c.edge,
             "lower cover does not remove exactly one pair");
      lower.insert(c.poset);
    }
    expect(upper == oracle.upper, std::nullopt,
           "critical-pair upper covers differ from the lattice oracle");
    expect(lower == oracle.lower, std::nullopt,
           "cover-edge lower covers differ from the lattice oracle");
  }

  const VerifyOptions &opts_;
  const std::set<TheoremId> &selected_;
  const std::map<Poset, LatticeCovers> *lattice_;

  Tally *tally_ = nullptr;
  const Poset *p_ = nullptr;
  TheoremId current_ = TheoremId::Core;
  bool failed_ = false;

  bool connected_ = false;
  bool fpp_graph_ = false;
  Strata strata_;
  std::size_t height_ = 0;
  std::vector<EdgePair> covers_;
  std::vector<EdgePair> crit_;
  std::vector<bool> lower_flags_;
  std::vector<bool> upper_flags_;
  bool l_direct_ = false;
  bool u_direct_ = false;
  bool has_3cp_ = false;
};

} // namespace

std::string to_string(TheoremId id) {
  for (const auto &t : kTheoremNames)
    if (t.id == id)
      return t.name;
  return "?";
}

std::optional<TheoremId> theorem_from_string(const std::string &name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto &t : kTheoremNames)
    if (upper == t.name)
      return t.id;
  return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
  std::vector<TheoremId> out;
  for (const auto &t : kTheoremNames)
    out.push_back(t.id);
  return out;
}

std::uint64_t VerificationRun::total_posets() const {
  std::uint64_t total = 0;
  for (const auto &[n, count] : posets_checked)
    total += count;
  return total;
}

std::uint64_t VerificationRun::total_counterexamples() const {
  std::uint64_t total = 0;
  for (const auto &[id, tally] : theorem_results)
    total += tally.counterexamples.size();
  return total;
}

VerificationRun verify_theorems(const VerifyOptions &options) {
  if (options.n_min == 0 || options.n_min > options.n_max)
    throw Error(ErrorCode::InvalidParameter, "empty carrier-size range");
  if (options.n_max > kMaxEnumerationCarrier)
    throw Error(ErrorCode::ResourceLimit,
                "verification is limited to carriers of at most " +
                    std::to_string(kMaxEnumerationCarrier) + " points");
  if (options.n_max == kMaxEnumerationCarrier && !options.long_run)
    throw Error(ErrorCode::ResourceLimit,
                "carriers of " + std::to_string(kMaxEnumerationCarrier) +
                    " points require the long-run flag");

  const auto start = std::chrono::steady_clock::now();
  std::set<TheoremId> selected = options.theorems;
  if (selected.empty()) {
    const auto all = all_theorems();
    selected.insert(all.begin(), all.end());
  }

  VerificationRun run;
  run.n_min = options.n_min;
  run.n_max = options.n_max;
  for (auto id : selected)
    run.theorem_results[id];

  const unsigned jobs = std::max(1U, options.jobs);
  std::uint64_t ordinal_base = 0;
  for (std::size_t n = options.n_min; n <= options.n_max; ++n) {
    const auto posets = enumerate_posets(n);
    run.posets_checked[n] = posets.size();

    std::optional<std::map<Poset, LatticeCovers>> lattice;
    if (selected.contains(TheoremId::DeanKeller) && n <= kMaxLatticeCarrier)
      lattice = lattice_cover_oracle(n);
    const auto *lattice_ptr = lattice ? &*lattice : nullptr;

    const std::size_t workers =
        std::min<std::size_t>(jobs, std::max<std::size_t>(1, posets.size()));
    std::vector<Tally> tallies(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](std::size_t w) {
      try {
        PosetChecker checker(options, selected, lattice_ptr);
        const auto lo = posets.size() * w / workers;
        const auto hi = posets.size() * (w + 1) / workers;
        for (auto i = lo; i < hi; ++i)
          checker.check(posets[i], ordinal_base + i, tallies[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back(work, w);
      for (auto &t : threads)
        t.join();
    }
    for (auto &e : errors)
      if (e)
        std::rethrow_exception(e);

    for (auto &t : tallies) {
      for (auto &[id, tally] : t.results) {
        auto &dst = run.theorem_results[id];
        dst.passes += tally.passes;
        for (auto &c : tally.counterexamples)
          dst.counterexamples.push_back(std::move(c));
      }
      run.fpp_graph_without_fpp += t.fpp_graph_without_fpp;
    }
    ordinal_base += posets.size();
  }
  run.wall_time = std::chrono::steady_clock::now() - start;
  return run;
}

} // namespace fppshield
