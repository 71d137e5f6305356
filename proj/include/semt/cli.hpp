#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semt/semt.hpp"

namespace semt::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// key=value lines; '#' starts a comment. Only supplies defaults, flags win.
inline std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto body = std::string(detail::trim(line));
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
    out[std::string(detail::trim(std::string_view(body).substr(0, eq)))] = std::string(detail::trim(std::string_view(body).substr(eq + 1)));
  }
  return out;
}

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

inline UnicyclicFamily parse_family_flag(const std::string& text) {
  try {
    return UnicyclicFamily::parse(text);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw UsageError(std::string("--family: ") + e.what());
    throw;
  }
}

inline std::optional<std::uint64_t> budget_from_flag(std::uint64_t budget) {
  if (budget == 0) return std::nullopt;
  return budget;
}

/// Runs one command. Results go to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::map<std::string, std::string> config;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--config") {
      try {
        config = read_config(args[i + 1]);
      } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
      }
    }
  }
  auto cfg = [&](const std::string& key, auto fallback) {
    auto it = config.find(key);
    if (it == config.end()) return fallback;
    std::istringstream parse(it->second);
    decltype(fallback) value{};
    if (!(parse >> value)) throw UsageError("config value for " + key + " is malformed");
    return value;
  };

  CLI::App app{"Super edge-magic total labelings and strength of unicyclic graphs G(n;k1,...,kn)"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "key=value file providing option defaults");

  int n = 0, k = 0, c = 0, r = 0;
  std::string family_text, input = "-", output, format;
  std::uint64_t budget = 0;
  unsigned workers = 1;
  int n_max = 0, pendant_sum_max = 0;
  bool no_timing = false;
  try {
    budget = cfg("budget", kDefaultNodeBudget);
    workers = cfg("workers", 1u);
    n_max = cfg("n-max", 5);
    pendant_sum_max = cfg("pendant-sum-max", 4);
    format = cfg("format", std::string("json"));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  auto* label_cmd = app.add_subcommand("label", "Emit the closed-form labeling of a family");
  std::string kind;
  label_cmd->add_option("kind", kind, "g-plus | g-minus | g-sym | equal-k | cycle")
      ->required()
      ->check(CLI::IsMember({"g-plus", "g-minus", "g-sym", "equal-k", "cycle"}));
  label_cmd->add_option("--n", n, "cycle length")->required();
  label_cmd->add_option("--k", k, "base pendant count");
  label_cmd->add_option("--c", c, "excess/deficit at a_n (g-plus, g-minus)");
  label_cmd->add_option("--r", r, "odd position of the extra pendants (g-sym)");
  label_cmd->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  label_cmd->add_option("--output", output, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a labeling document");
  verify_cmd->add_option("--input", input, "labeling JSON (default stdin)");
  verify_cmd->add_option("--output", output, "output file (default stdout)");

  auto* bounds_cmd = app.add_subcommand("bounds", "Strength bounds for a family");
  bounds_cmd->add_option("--family", family_text, "\"n;k1,...,kn\"")->required();
  bounds_cmd->add_option("--output", output, "output file (default stdout)");

  auto* search_cmd = app.add_subcommand("search", "Exact strength by exhaustive search");
  search_cmd->add_option("--family", family_text, "\"n;k1,...,kn\"")->required();
  search_cmd->add_option("--budget", budget, "node budget, 0 for unlimited");
  search_cmd->add_option("--workers", workers, "s values probed concurrently")->check(CLI::PositiveNumber);
  search_cmd->add_option("--output", output, "output file (default stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Search every canonical family up to a size");
  sweep_cmd->add_option("--n-max", n_max, "largest odd cycle length");
  sweep_cmd->add_option("--pendant-sum-max", pendant_sum_max, "largest total pendant count");
  sweep_cmd->add_option("--budget", budget, "node budget per instance, 0 for unlimited");
  sweep_cmd->add_option("--workers", workers, "instances searched concurrently")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--format", format, "json (JSON lines) | csv, for stdout")->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("--output", output, "write <output>.jsonl and <output>.csv instead of stdout");
  sweep_cmd->add_flag("--no-timing", no_timing, "omit wall-clock columns");

  auto* dot_cmd = app.add_subcommand("export-dot", "Render a labeling document as DOT");
  dot_cmd->add_option("--input", input, "labeling JSON (default stdin)");
  dot_cmd->add_option("--output", output, "output file (default stdout)");

  std::vector<const char*> argv{"semt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream text;
    const int code = app.exit(e, text, text);
    (code == 0 ? out : err) << text.str();
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (label_cmd->parsed()) {
      FamilyKind family_kind = CycleKind{n};
      if (kind == "g-plus") family_kind = GPlus{n, k, c};
      if (kind == "g-minus") family_kind = GMinus{n, k, c};
      if (kind == "g-sym") family_kind = GSym{n, k, r};
      if (kind == "equal-k") family_kind = EqualK{n, k};
      const auto total = label(family_kind);
      write_output(output, format == "dot" ? to_dot(total) : serialize_labeling(total), out);
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const auto total = parse_labeling(read_input(input, in));
      const auto report = verify_semt(total);
      write_output(output, report_to_json(report).dump(2) + "\n", out);
      for (const auto& v : report.violations) err << to_string(v.kind) << ": " << v.detail << "\n";
      return report.valid ? kOk : kDomainError;
    }
    if (bounds_cmd->parsed()) {
      const auto family = parse_family_flag(family_text);
      auto doc = bounds_to_json(family, compute_bounds(*build_unicyclic(family)));
      doc["theorem4_upper_rotation_min"] = theorem4_upper_rotation_min(family);
      write_output(output, doc.dump(2) + "\n", out);
      return kOk;
    }
    if (search_cmd->parsed()) {
      const auto family = parse_family_flag(family_text);
      SearchConfig config;
      config.node_budget = budget_from_flag(budget);
      config.parallel_width = workers;
      const auto result = search_exact_strength(family, config);
      write_output(output, search_result_to_json(family, result).dump(2) + "\n", out);
      return kOk;
    }
    if (sweep_cmd->parsed()) {
      if (n_max < 3 || n_max % 2 == 0) throw UsageError("--n-max must be odd and at least 3");
      if (pendant_sum_max < 0) throw UsageError("--pendant-sum-max must be non-negative");
      SearchConfig config;
      config.node_budget = budget_from_flag(budget);
      config.parallel_width = workers;
      const auto report = conjecture_sweep(n_max, pendant_sum_max, config);
      if (output.empty() || output == "-") {
        out << (format == "csv" ? sweep_to_csv(report, !no_timing) : sweep_to_jsonl(report, !no_timing));
      } else {
        write_output(output + ".jsonl", sweep_to_jsonl(report, !no_timing), out);
        write_output(output + ".csv", sweep_to_csv(report, !no_timing), out);
      }
      err << report.instances.size() << " instances: " << report.count(Verdict::MatchesConjecture) << " match, "
          << report.count(Verdict::Counterexample) << " counterexample, " << report.count(Verdict::Indeterminate)
          << " indeterminate\n";
      return kOk;
    }
    if (dot_cmd->parsed()) {
      const auto total = parse_labeling(read_input(input, in));
      const auto report = verify_semt(total);
      if (!report.valid) {
        for (const auto& v : report.violations) err << to_string(v.kind) << ": " << v.detail << "\n";
        throw Error(ErrorKind::NotValid, "labeling fails verification");
      }
      write_output(output, to_dot(total), out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace semt::cli
