#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <fppshield/poset.hpp>

namespace fppshield {

/// Line-oriented text format, '#' starts a comment:
///
///   p <n>            header, exactly once, before any other record
///   e <a> <b>        strict relation a < b (closure is applied)
///   l <index> <name> optional label for a point
///
/// Parsed files are normalized: `edges` holds the cover edges of the closed
/// relation, sorted lexicographically.
struct PosetFile {
  std::size_t n = 0;
  std::vector<EdgePair> edges;
  // Empty, or one name per point.
  std::vector<std::string> labels;

  Poset poset() const { return Poset::from_edges(n, edges); }
  static PosetFile from_poset(const Poset &p,
                              std::vector<std::string> labels = {});

  bool operator==(const PosetFile &) const = default;
};

/// Throws SyntaxError (with the offending line number) on malformed input and
/// CycleDetected if the edges do not describe a partial order.
PosetFile parse_poset(std::string_view text);
PosetFile read_poset_file(const std::string &path);

/// Always emits the transitive reduction.
std::string serialize(const PosetFile &file);
std::string serialize(const Poset &p);

/// Hasse diagram in Graphviz DOT, edges pointing upwards.
std::string to_dot(const Poset &p, const std::vector<std::string> &labels = {});

} // namespace fppshield
