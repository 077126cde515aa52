// kmroots: root multiplicities, root strings and verification for
// symmetrizable Kac-Moody algebras.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kmroots/cache.hpp"
#include "kmroots/cartan.hpp"
#include "kmroots/error.hpp"
#include "kmroots/report.hpp"
#include "kmroots/strings.hpp"
#include "kmroots/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace kmroots;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kEngine = 3, kVerifyFailed = 4 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotGCM:
    case ErrorKind::NotSymmetrizable:
    case ErrorKind::EmptySubset:
    case ErrorKind::RankTooLarge:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ZeroVector:
    case ErrorKind::NotPositive:
    case ErrorKind::NotARoot:
    case ErrorKind::InvalidInput:
    case ErrorKind::PreconditionViolated:
      return kInvalid;
    default:
      return kEngine;
  }
}

struct Config {
  std::string cache_dir;
  std::optional<int> default_height;
  Window default_window = kDefaultWindow;
  Format output_format = Format::Table;
  std::size_t max_rank = kDefaultMaxRank;
};

fs::path default_config_path() {
  if (const char* x = std::getenv("XDG_CONFIG_HOME"); x && *x) return fs::path(x) / "kmroots" / "config.json";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".config" / "kmroots" / "config.json";
  return {};
}

// Config file first, then the environment; flags are applied by the caller.
Config load_config(const std::string& explicit_path) {
  Config c;
  const fs::path path = explicit_path.empty() ? default_config_path() : fs::path(explicit_path);
  if (!path.empty() && fs::exists(path)) {
    std::ifstream in(path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::InvalidInput, "config " + path.string() + ": " + e.what());
    }
    if (j.contains("cache_dir")) c.cache_dir = j["cache_dir"].get<std::string>();
    if (j.contains("default_height")) {
      c.default_height = j["default_height"].get<int>();
      if (*c.default_height < 2) throw Error(ErrorKind::InvalidInput, "config default_height must be >= 2");
    }
    if (j.contains("default_window")) c.default_window = parse_window(j["default_window"].get<std::string>());
    if (j.contains("output_format")) c.output_format = parse_format(j["output_format"].get<std::string>());
    if (j.contains("max_rank")) c.max_rank = j["max_rank"].get<std::size_t>();
  } else if (!explicit_path.empty()) {
    throw Error(ErrorKind::InvalidInput, "config file " + explicit_path + " not found");
  }
  if (const char* env = std::getenv("KMROOTS_CACHE_DIR"); env && *env) c.cache_dir = env;
  return c;
}

CartanMatrix read_matrix(const std::string& file, std::size_t max_rank) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, file + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw Error(ErrorKind::InvalidInput, file + ": expected {\"name\": str, \"rows\": [[int]]}");
  IntMatrix rows;
  try {
    rows = j["rows"].get<IntMatrix>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::InvalidInput, file + ": rows must be integer lists");
  }
  auto a = validate(rows, max_rank);
  a.set_name(j.value("name", fs::path(file).stem().string()));
  return a;
}

std::string diag(const Symmetrizer& q) {
  std::string s = "diag(";
  for (std::size_t i = 0; i < q.q.size(); ++i) s += (i ? "," : "") + std::to_string(q.q[i]);
  return s + ")";
}

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s;
}

int cmd_validate(const CartanMatrix& a, Format f) {
  const auto q = symmetrize(a);
  const auto types = classify_type(a, q);
  if (f == Format::Json) {
    json j;
    j["name"] = a.name();
    j["rank"] = a.size();
    j["valid"] = true;
    j["symmetrizer"] = q.q;
    json comps = json::array();
    for (const auto& t : types) {
      json c;
      json idx = json::array();
      for (auto i : t.component) idx.push_back(i + 1);
      c["indices"] = idx;
      c["type"] = to_string(t.tag);
      c["null_root"] = t.null_root ? json(t.null_root->coeffs()) : json(nullptr);
      comps.push_back(c);
    }
    j["components"] = comps;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  if (f == Format::Csv) {
    std::cout << "component,type,null_root\n";
    for (const auto& t : types)
      std::cout << '"' << index_list(t.component) << "\"," << to_string(t.tag) << ",\""
                << (t.null_root ? t.null_root->str() : "") << "\"\n";
    return kOk;
  }
  std::cout << a.name() << ": valid generalized Cartan matrix of size " << a.size() << '\n';
  auto describe = [](const MatrixType& t) {
    std::string s(to_string(t.tag));
    if (t.null_root) s += ", δ = " + t.null_root->str();
    return s;
  };
  if (types.size() == 1) {
    std::cout << describe(types[0]) << ", D = " << diag(q) << '\n';
  } else {
    std::cout << types.size() << " components, D = " << diag(q) << '\n';
    for (const auto& t : types) std::cout << "component " << index_list(t.component) << ": " << describe(t) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root multiplicities and root strings of symmetrizable Kac-Moody algebras"};
  app.require_subcommand(1);

  std::string config_path, cache_dir, format_text;
  int threads = 0;
  app.add_option("--config", config_path, "Config file (default: $XDG_CONFIG_HOME/kmroots/config.json)");
  app.add_option("--cache-dir", cache_dir, "Directory for multiplicity tables (overrides KMROOTS_CACHE_DIR)");
  app.add_option("--threads", threads, "Worker threads for the level kernel (0: OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));

  std::string file;
  int max_height = 0;
  auto* validate_cmd = app.add_subcommand("validate", "Check a matrix, print its symmetrizer and type");
  validate_cmd->add_option("file", file, "Matrix file")->required();

  auto* roots_cmd = app.add_subcommand("roots", "List positive roots with multiplicities");
  roots_cmd->add_option("file", file, "Matrix file")->required();
  roots_cmd->add_option("--max-height", max_height, "Largest root height")->check(CLI::PositiveNumber);
  roots_cmd->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));

  std::string alpha_text, beta_text, window_text;
  auto* string_cmd = app.add_subcommand("string", "Extract and classify the beta-string through alpha");
  string_cmd->add_option("file", file, "Matrix file")->required();
  string_cmd->add_option("--alpha", alpha_text, "Root or 0, e.g. 1,0,2")->required();
  string_cmd->add_option("--beta", beta_text, "Root, e.g. 1,1,0")->required();
  string_cmd->add_option("--window", window_text, "Range of n, e.g. -12..12");
  string_cmd->add_option("--max-height", max_height, "Table height")->check(CLI::PositiveNumber);
  string_cmd->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));

  bool corpus = false, timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks on a matrix or the default corpus");
  verify_cmd->add_option("file", file, "Matrix file (default: the built-in corpus)");
  verify_cmd->add_flag("--corpus", corpus, "Use the built-in corpus");
  verify_cmd->add_option("--max-height", max_height, "Height bound for the checks")->check(CLI::Range(2, 1000));
  verify_cmd->add_flag("--timings", timings, "Include per-check runtimes (output is then not reproducible)");
  verify_cmd->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Config cfg = load_config(config_path);
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    const Format fmt = format_text.empty() ? cfg.output_format : parse_format(format_text);
    EngineOptions engine;
    engine.threads = threads;

    if (validate_cmd->parsed()) return cmd_validate(read_matrix(file, cfg.max_rank), fmt);

    if (roots_cmd->parsed()) {
      const auto a = read_matrix(file, cfg.max_rank);
      const auto q = symmetrize(a);
      const int h = max_height ? max_height : cfg.default_height.value_or(default_height_for_rank(a.size()));
      const auto t = load_or_compute(cfg.cache_dir, a, q, h, engine);
      std::cout << render_roots(t, root_rows(t, h), fmt);
      return kOk;
    }

    if (string_cmd->parsed()) {
      const auto a = read_matrix(file, cfg.max_rank);
      const auto q = symmetrize(a);
      const auto alpha = RootVector::parse(alpha_text);
      const auto beta = RootVector::parse(beta_text);
      const Window w = window_text.empty() ? cfg.default_window : parse_window(window_text);
      const int h = max_height ? max_height : cfg.default_height.value_or(default_height_for_rank(a.size()));
      const auto t = load_or_compute(cfg.cache_dir, a, q, h, engine);
      std::cout << render_string(analyze(t, alpha, beta, w), fmt);
      return kOk;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions opts;
      if (max_height) opts.max_height = max_height;
      opts.window = cfg.default_window;
      opts.engine = engine;
      opts.cache_dir = cfg.cache_dir;
      std::vector<CorpusEntry> entries;
      if (!file.empty() && !corpus) {
        auto a = read_matrix(file, cfg.max_rank);
        entries.push_back({a.name(), std::move(a)});
      } else {
        entries = default_corpus();
      }
      const auto report = verify_corpus(entries, opts);
      std::cout << render_report(report, fmt, timings);
      return report.passed() ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "kmroots: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "kmroots: " << e.what() << '\n';
    return kEngine;
  }
  return kUsage;
}
