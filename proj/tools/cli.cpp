#include "cli.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <fppshield/cover_lattice.hpp>
#include <fppshield/generators.hpp>
#include <fppshield/oracles.hpp>
#include <fppshield/poset_io.hpp>
#include <fppshield/report.hpp>
#include <fppshield/shield.hpp>

namespace fppshield::cli {

namespace {

enum class Format { Text, Json, Dot };

struct InputSpec {
  std::string file;
  std::size_t pm = 0;
  std::string family;
  std::size_t n = 0;
};

void add_input_options(CLI::App *cmd, InputSpec &in) {
  auto *file = cmd->add_option("--file,-f", in.file, "Poset file ('-' for stdin)");
  auto *pm = cmd->add_option("--pm", in.pm, "Three-layer family member with parameter M");
  auto *family = cmd->add_option("--family", in.family, "chain | antichain | crown | fence")
                     ->check(CLI::IsMember({"chain", "antichain", "crown", "fence"}));
  cmd->add_option("--n", in.n, "Number of points for --family");
  file->excludes(pm)->excludes(family);
  pm->excludes(family);
}

void add_format_option(CLI::App *cmd, Format &format) {
  cmd->add_option("--format", format, "text | json | dot")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}},
          CLI::ignore_case));
}

PosetFile load(const InputSpec &in) {
  if (!in.file.empty()) {
    if (in.file == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      return parse_poset(buf.str());
    }
    return read_poset_file(in.file);
  }
  if (in.pm != 0)
    return PosetFile::from_poset(gen_pm(in.pm));
  if (!in.family.empty()) {
    if (in.n == 0)
      throw Error(ErrorCode::InvalidParameter, "--family needs --n");
    return PosetFile::from_poset(gen_family(*family_from_string(in.family), in.n));
  }
  throw Error(ErrorCode::InvalidParameter,
              "no input: use --file, --pm or --family with --n");
}

nlohmann::json poset_file_json(const PosetFile &file) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto &e : file.edges)
    edges.push_back({e.a, e.b});
  return {{"n", file.n}, {"edges", edges}, {"labels", file.labels}};
}

unsigned default_jobs() {
  if (const char *env = std::getenv("FPPSHIELD_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0)
      return static_cast<unsigned>(v);
  }
  return 1;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::ResourceLimit:
    return kResourceLimit;
  case ErrorCode::InvariantViolation:
    return kInternalError;
  default:
    return kInputError;
  }
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Fixed-point-property graphs, shielded posets and covers in the "
               "lattice of posets on a fixed carrier"};
  app.name("fppshield");
  app.require_subcommand(1);

  InputSpec input;
  Format format = Format::Text;

  auto *analyze_cmd = app.add_subcommand("analyze", "Full shieldedness report");
  add_input_options(analyze_cmd, input);
  add_format_option(analyze_cmd, format);

  auto *covers_cmd = app.add_subcommand("covers", "List upper and lower covers");
  add_input_options(covers_cmd, input);
  add_format_option(covers_cmd, format);

  auto *generate_cmd = app.add_subcommand("generate", "Emit a generated poset");
  add_input_options(generate_cmd, input);
  add_format_option(generate_cmd, format);

  std::uint64_t budget = kDefaultNodeBudget;
  auto *fpp_cmd = app.add_subcommand("fpp", "Decide the fixed point property by search");
  add_input_options(fpp_cmd, input);
  add_format_option(fpp_cmd, format);
  fpp_cmd->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);

  VerifyOptions vopts;
  vopts.jobs = default_jobs();
  std::vector<std::string> only;
  auto *verify_cmd =
      app.add_subcommand("verify", "Check every theorem over all small labeled posets");
  verify_cmd->add_option("--max-n", vopts.n_max, "Largest carrier size")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--min-n", vopts.n_min, "Smallest carrier size")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--only", only, "Comma-separated theorem ids")->delimiter(',');
  verify_cmd->add_flag("--long-run", vopts.long_run, "Allow carriers of 6 points");
  verify_cmd->add_option("--jobs,-j", vopts.jobs, "Worker threads (env FPPSHIELD_JOBS)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vopts.seed, "Seed for relabeling spot checks");
  verify_cmd->add_option("--budget", vopts.fpp_node_budget, "Search node budget per poset")
      ->check(CLI::PositiveNumber);
  add_format_option(verify_cmd, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "fppshield: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (verify_cmd->parsed()) {
      for (const auto &name : only) {
        const auto id = theorem_from_string(name);
        if (!id) {
          err << "fppshield: unknown theorem id '" << name << "'\n";
          return kInputError;
        }
        vopts.theorems.insert(*id);
      }
      const auto result = verify_theorems(vopts);
      if (format == Format::Json)
        out << to_json(result).dump(2) << "\n";
      else
        out << to_text(result);
      return result.total_counterexamples() == 0 ? kOk : kCounterexamples;
    }

    const PosetFile file = load(input);
    const Poset p = file.poset();

    if (analyze_cmd->parsed()) {
      const auto report = analyze(p);
      if (format == Format::Json)
        out << to_json(report).dump(2) << "\n";
      else if (format == Format::Dot)
        out << to_dot(p, file.labels);
      else
        out << to_text(report);
    } else if (covers_cmd->parsed()) {
      const auto covers = enumerate_covers(p);
      if (format == Format::Json)
        out << to_json(covers).dump(2) << "\n";
      else
        out << to_text(covers);
    } else if (generate_cmd->parsed()) {
      if (format == Format::Dot)
        out << to_dot(p, file.labels);
      else if (format == Format::Json)
        out << poset_file_json(file).dump(2) << "\n";
      else
        out << serialize(file);
    } else if (fpp_cmd->parsed()) {
      const auto result = fpp_bruteforce(p, budget);
      if (format == Format::Json)
        out << to_json(result).dump(2) << "\n";
      else
        out << to_text(result);
      if (!result.has_fpp)
        return kResourceLimit;
    }
    return kOk;
  } catch (const Error &e) {
    err << "fppshield: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

} // namespace fppshield::cli
