#include <fppshield/report.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <fppshield/poset_io.hpp>

namespace fppshield {

using nlohmann::json;

namespace {

json edges_json(const std::vector<EdgePair> &edges) {
  json out = json::array();
  for (const auto &e : edges)
    out.push_back({e.a, e.b});
  return out;
}

json set_json(const VertexSet &s) { return s.to_vector(); }

std::string edge_text(EdgePair e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

std::string set_text(const VertexSet &s) {
  std::string out = "{";
  bool first = true;
  for (Index i : s) {
    if (!first)
      out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string edges_text(const std::vector<EdgePair> &edges) {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i)
    out += (i ? "," : "") + edge_text(edges[i]);
  return out + "}";
}

const char *yes_no(bool b) { return b ? "true" : "false"; }

json cover_flags_json(const std::vector<CoverFlag> &flags) {
  json out = json::array();
  for (const auto &f : flags)
    out.push_back({{"edge", {f.edge.a, f.edge.b}}, {"fppGraph", f.has_fpp_graph}});
  return out;
}

} // namespace

json to_json(const ShieldReport &r) {
  json witnesses = json::array();
  for (const auto &w : r.witnesses)
    witnesses.push_back({{"pair", {w.pair_removed.a, w.pair_removed.b}},
                         {"witness", {w.witness.a, w.witness.b}},
                         {"chain", {w.u, w.v, w.w}},
                         {"fired", std::string(to_string(w.fired))}});
  json out = {
      {"n", r.n},
      {"edges", edges_json(r.edges)},
      {"connected", r.connected},
      {"height", r.height},
      {"strata",
       {{"minimals", set_json(r.strata.minimals)},
        {"maximals", set_json(r.strata.maximals)},
        {"middles", set_json(r.strata.middles)}}},
      {"minmax", edges_json(r.minmax)},
      {"fppGraph", r.has_fpp_graph},
      {"lShielded", r.l_shielded},
      {"uShielded", r.u_shielded},
      {"lShieldedTheorem", r.l_shielded_theorem},
      {"uShieldedTheorem", r.u_shielded_theorem},
      {"has3cp", r.has_3cp},
      {"critInLxU", r.crit_in_LxU},
      {"lowerCovers", cover_flags_json(r.per_lower_cover)},
      {"upperCovers", cover_flags_json(r.per_upper_cover)},
      {"witnesses", witnesses},
  };
  if (r.lemma3) {
    json rows = json::array();
    for (const auto &w : r.lemma3->witnesses)
      rows.push_back({{"pair", {w.pair.a, w.pair.b}},
                      {"z", w.z},
                      {"candidates", w.candidates}});
    out["intervalWitnesses"] = {
        {"conditionHolds", r.lemma3->condition_holds},
        {"equivalenceMode", r.lemma3->equivalence_mode},
        {"rows", rows},
        {"failing", edges_json(r.lemma3->failing_pairs)}};
  }
  return out;
}

json to_json(const CoverEnumeration &c) {
  auto list = [](const std::vector<Cover> &covers) {
    json out = json::array();
    for (const auto &cv : covers)
      out.push_back({{"edge", {cv.edge.a, cv.edge.b}},
                     {"edges", edges_json(cv.poset.cover_edges())},
                     {"fppGraph", has_fpp_graph(cv.poset)}});
    return out;
  };
  return {{"n", c.base.size()},
          {"edges", edges_json(c.base.cover_edges())},
          {"upper", list(c.upper)},
          {"lower", list(c.lower)}};
}

json to_json(const EndomorphismSearchResult &r) {
  json out = {{"nodesExplored", r.nodes_explored}};
  if (r.has_fpp)
    out["fpp"] = *r.has_fpp;
  else
    out["fpp"] = "unknown";
  if (r.counterexample_map)
    out["counterexample"] = *r.counterexample_map;
  return out;
}

json to_json(const VerificationRun &run) {
  json checked = json::object();
  for (const auto &[n, count] : run.posets_checked)
    checked[std::to_string(n)] = count;
  json theorems = json::object();
  for (const auto &[id, tally] : run.theorem_results) {
    json ces = json::array();
    for (const auto &c : tally.counterexamples) {
      json ce = {{"poset", serialize(c.poset)}, {"detail", c.detail}};
      if (c.edge)
        ce["edge"] = {c.edge->a, c.edge->b};
      ces.push_back(ce);
    }
    theorems[to_string(id)] = {{"passes", tally.passes}, {"counterexamples", ces}};
  }
  return {{"nMin", run.n_min},
          {"nMax", run.n_max},
          {"posetsTotal", run.total_posets()},
          {"posetsChecked", checked},
          {"theorems", theorems},
          {"fppGraphWithoutFpp", run.fpp_graph_without_fpp},
          {"counterexamples", run.total_counterexamples()},
          {"wallTimeSeconds", run.wall_time.count()}};
}

Poset poset_from_report(const json &report) {
  try {
    const auto n = report.at("n").get<std::size_t>();
    std::vector<EdgePair> edges;
    for (const auto &e : report.at("edges"))
      edges.push_back({e.at(0).get<Index>(), e.at(1).get<Index>()});
    return Poset::from_edges(n, edges);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::SyntaxError, std::string("malformed report: ") + e.what());
  }
}

std::string lemma3_table(const Lemma3Result &r) {
  std::vector<std::pair<EdgePair, std::string>> rows;
  for (const auto &w : r.witnesses)
    rows.emplace_back(w.pair, std::to_string(w.z));
  for (const auto &e : r.failing_pairs)
    rows.emplace_back(e, "-");
  std::sort(rows.begin(), rows.end());

  std::ostringstream out;
  out << std::left << std::setw(12) << "(a,b)" << "| z\n";
  out << std::string(12, '-') << "+----\n";
  for (const auto &[e, z] : rows)
    out << std::left << std::setw(12) << edge_text(e) << "| " << z << "\n";
  return out.str();
}

std::string to_text(const ShieldReport &r) {
  std::ostringstream out;
  out << "points:         " << r.n << "\n"
      << "cover edges:    " << r.edges.size() << "\n"
      << "connected:      " << yes_no(r.connected) << "\n"
      << "height:         " << r.height << "\n"
      << "minimals:       " << set_text(r.strata.minimals) << "\n"
      << "middles:        " << set_text(r.strata.middles) << "\n"
      << "maximals:       " << set_text(r.strata.maximals) << "\n"
      << "minmax covers:  " << edges_text(r.minmax) << "\n"
      << "FPP-graph:      " << yes_no(r.has_fpp_graph) << "\n"
      << "L-shielded:     " << yes_no(r.l_shielded) << " (direct, "
      << r.per_lower_cover.size() << " lower covers); 3-chain-property: "
      << yes_no(r.has_3cp) << "\n"
      << "U-shielded:     " << yes_no(r.u_shielded) << " (direct, "
      << r.per_upper_cover.size() << " upper covers); characterization: "
      << yes_no(r.u_shielded_theorem) << "\n"
      << "Crit in LxU:    " << yes_no(r.crit_in_LxU) << "\n";
  for (const auto &f : r.per_lower_cover)
    if (f.has_fpp_graph)
      out << "  lower cover without " << edge_text(f.edge) << " has an FPP-graph\n";
  for (const auto &f : r.per_upper_cover)
    if (f.has_fpp_graph)
      out << "  upper cover with " << edge_text(f.edge) << " has an FPP-graph\n";
  for (const auto &w : r.witnesses)
    out << "  3-chain witness for " << edge_text(w.pair_removed) << ": "
        << edge_text(w.witness) << " on chain " << w.u << "<" << w.v << "<"
        << w.w << " [" << to_string(w.fired) << "]\n";
  if (r.lemma3) {
    out << "interval witnesses (height 2): condition "
        << (r.lemma3->condition_holds ? "holds" : "fails")
        << (r.lemma3->equivalence_mode ? ", no irreducible point" : "")
        << "\n"
        << lemma3_table(*r.lemma3);
  }
  return out.str();
}

std::string to_text(const CoverEnumeration &c) {
  std::ostringstream out;
  out << "upper covers (" << c.upper.size() << "):\n";
  for (const auto &cv : c.upper)
    out << "  + " << edge_text(cv.edge)
        << (has_fpp_graph(cv.poset) ? "  FPP-graph" : "") << "\n";
  out << "lower covers (" << c.lower.size() << "):\n";
  for (const auto &cv : c.lower)
    out << "  - " << edge_text(cv.edge)
        << (has_fpp_graph(cv.poset) ? "  FPP-graph" : "") << "\n";
  return out.str();
}

std::string to_text(const EndomorphismSearchResult &r) {
  std::ostringstream out;
  if (!r.has_fpp)
    out << "unknown\n";
  else
    out << yes_no(*r.has_fpp) << "\n";
  if (r.counterexample_map) {
    out << "fixed-point-free endomorphism:";
    for (Index x = 0; x < r.counterexample_map->size(); ++x)
      out << " " << x << "->" << (*r.counterexample_map)[x];
    out << "\n";
  }
  out << "nodes explored: " << r.nodes_explored << "\n";
  return out.str();
}

std::string to_text(const VerificationRun &run) {
  std::ostringstream out;
  out << "posets checked: " << run.total_posets() << " (";
  bool first = true;
  for (const auto &[n, count] : run.posets_checked) {
    out << (first ? "" : ", ") << "n=" << n << ": " << count;
    first = false;
  }
  out << ")\n";
  for (const auto &[id, tally] : run.theorem_results)
    out << "  " << std::left << std::setw(18) << to_string(id)
        << (tally.counterexamples.empty() ? "ok  " : "FAIL") << "  "
        << tally.passes << " passed, " << tally.counterexamples.size()
        << " counterexamples\n";
  out << "connected posets with FPP-graph but no fixed point property: "
      << run.fpp_graph_without_fpp << "\n";
  for (const auto &[id, tally] : run.theorem_results)
    for (const auto &c : tally.counterexamples) {
      out << "counterexample " << to_string(id);
      if (c.edge)
        out << " at " << edge_text(*c.edge);
      out << ": " << c.detail << "\n" << serialize(c.poset);
    }
  return out.str();
}

} // namespace fppshield
