#include <fppshield/poset_io.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace fppshield {

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string &msg) {
  throw Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
      ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r')
      ++i;
    if (i > start)
      out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_number(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  const auto *end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    syntax_error(line, "expected a non-negative integer, got '" +
                           std::string(word) + "'");
  return value;
}

} // namespace

PosetFile PosetFile::from_poset(const Poset &p, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != p.size())
    throw Error(ErrorCode::InvalidParameter, "label count differs from carrier");
  return {p.size(), p.cover_edges(), std::move(labels)};
}

PosetFile parse_poset(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<EdgePair> edges;
  std::vector<std::pair<std::size_t, std::string>> labels;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty())
      continue;

    const auto tag = words[0];
    if (tag == "p") {
      if (n)
        syntax_error(line_no, "duplicate header");
      if (words.size() != 2)
        syntax_error(line_no, "header must be 'p <n>'");
      n = parse_number(words[1], line_no);
      if (*n == 0)
        syntax_error(line_no, "carrier must be non-empty");
      if (*n > kMaxCarrier)
        syntax_error(line_no, "carrier exceeds " + std::to_string(kMaxCarrier));
      continue;
    }
    if (!n)
      syntax_error(line_no, "record before the 'p <n>' header");
    if (tag == "e") {
      if (words.size() != 3)
        syntax_error(line_no, "edge must be 'e <a> <b>'");
      const auto a = parse_number(words[1], line_no);
      const auto b = parse_number(words[2], line_no);
      if (a >= *n || b >= *n)
        syntax_error(line_no, "edge endpoint outside carrier");
      if (a == b)
        syntax_error(line_no, "edge endpoints must differ");
      edges.push_back({a, b});
    } else if (tag == "l") {
      if (words.size() != 3)
        syntax_error(line_no, "label must be 'l <index> <name>'");
      const auto i = parse_number(words[1], line_no);
      if (i >= *n)
        syntax_error(line_no, "label index outside carrier");
      labels.emplace_back(i, std::string(words[2]));
    } else {
      syntax_error(line_no, "unknown record '" + std::string(tag) + "'");
    }
  }
  if (!n)
    syntax_error(line_no, "missing 'p <n>' header");

  PosetFile file;
  file.n = *n;
  file.edges = Poset::from_edges(*n, edges).cover_edges();
  if (!labels.empty()) {
    file.labels.resize(*n);
    for (Index i = 0; i < *n; ++i)
      file.labels[i] = std::to_string(i);
    for (auto &[i, name] : labels)
      file.labels[i] = std::move(name);
  }
  return file;
}

PosetFile read_poset_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::InvalidParameter, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

std::string serialize(const PosetFile &file) {
  std::ostringstream out;
  out << "p " << file.n << "\n";
  for (const auto &e : file.poset().cover_edges())
    out << "e " << e.a << " " << e.b << "\n";
  for (Index i = 0; i < file.labels.size(); ++i)
    out << "l " << i << " " << file.labels[i] << "\n";
  return out.str();
}

std::string serialize(const Poset &p) { return serialize(PosetFile::from_poset(p)); }

std::string to_dot(const Poset &p, const std::vector<std::string> &labels) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (Index i = 0; i < p.size(); ++i) {
    out << "  " << i;
    if (i < labels.size())
      out << " [label=\"" << labels[i] << "\"]";
    out << ";\n";
  }
  for (const auto &e : p.cover_edges())
    out << "  " << e.a << " -> " << e.b << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace fppshield
