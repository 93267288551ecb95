#include "kcycles/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "kcycles/commands.hpp"
#include "kcycles/errors.hpp"
#include "kcycles/serialize.hpp"
#include "kcycles/verify.hpp"

namespace kcycles::cli {

namespace {

constexpr const char* kCacheEnv = "KCYCLES_CACHE_DIR";
constexpr const char* kCapsEnv = "KCYCLES_CAPS";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string override_hint(const std::string& cap) {
  if (cap == "trees") return "--cap-trees N";
  if (cap == "letters") return "--cap-letters N";
  return "--caps " + cap + "=N";
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  try {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    // Per-process temporary name so concurrent writers never share one.
    const std::filesystem::path tmp =
        path.parent_path() / ("." + path.filename().string() + "." + std::to_string(::getpid()) + ".tmp");
    {
      std::ofstream file(tmp, std::ios::trunc | std::ios::binary);
      if (!file) throw IoError("cannot open " + tmp.string() + " for writing");
      file << content;
      if (!file.flush()) throw IoError("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  } catch (const std::filesystem::filesystem_error& e) {
    std::error_code ignored;
    std::filesystem::remove(path.parent_path() / ("." + path.filename().string() + "." + std::to_string(::getpid()) + ".tmp"), ignored);
    throw IoError(e.what());
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tree polynomials, cyclic shuffles and kappa/Witten coefficient tables."};
  app.require_subcommand(1);

  std::string format_name;
  std::string out_path;
  std::string cache_dir;
  std::string caps_spec;
  std::optional<int> cap_trees;
  std::optional<int> cap_letters;
  app.add_option("--format", format_name, "Output format: json, text or latex");
  app.add_option("--out", out_path, "Write the output to this file instead of stdout");
  app.add_option("--cache-dir", cache_dir, std::string("Result cache directory (default: $") + kCacheEnv + ")");
  app.add_option("--caps", caps_spec, "Enumeration caps, e.g. trees=6,letters=13,shuffle=14,counting=N,perm=10");
  app.add_option("--cap-trees", cap_trees, "Largest k for increasing-tree enumeration");
  app.add_option("--cap-letters", cap_letters, "Most letters in a cyclic-shuffle enumeration");

  auto* treepoly = app.add_subcommand("treepoly", "Reduced/full tree polynomial, P family or L_k^n");
  int k = 0;
  std::string variant = "reduced";
  std::string route_name = "recursion";
  treepoly->add_option("k", k, "Index k (2k+1 variables)")->required();
  treepoly->add_option("--variant", variant, "reduced, full, pfamily or l:<n>");
  treepoly->add_option("--route", route_name, "recursion or bruteforce");

  auto* coeff = app.add_subcommand("coeff", "One coefficient b_lambda^mu or a_lambda^mu");
  std::string kind;
  std::string lambda_text;
  std::string mu_text = "auto-n";
  coeff->add_option("kind", kind, "b or a")->required();
  coeff->add_option("--lambda", lambda_text, "Partition, comma separated")->required();
  coeff->add_option("--mu", mu_text, "Partition, comma separated, or auto-n");

  auto* table = app.add_subcommand("table", "b and a matrices over the partitions of n");
  int weight = 0;
  table->add_option("n", weight, "Weight")->required();

  auto* cup = app.add_subcommand("cup", "Cup product coefficients of two dual Witten cycles");
  std::string cup_lambda;
  std::string cup_mu;
  cup->add_option("--lambda", cup_lambda, "Partition, comma separated")->required();
  cup->add_option("--mu", cup_mu, "Partition, comma separated (empty for the unit)")->required();

  auto* witten = app.add_subcommand("witten", "Expansion of a dual Witten cycle in kappa classes");
  std::string witten_lambda;
  witten->add_option("--lambda", witten_lambda, "Partition, comma separated")->required();

  auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
  std::string level_name = "quick";
  bool timings = false;
  verify->add_option("--level", level_name, "quick or full");
  verify->add_flag("--timings", timings, "Append per-check timings (output is then not reproducible)");

  auto* oracle = app.add_subcommand("oracle", "Compare a brute-force enumeration with its closed form");
  std::string oracle_what;
  std::vector<std::string> oracle_args;
  oracle->add_option("what", oracle_what, "treepoly, shuffle-sum, counting or xe")->required();
  oracle->add_option("args", oracle_args, "Arguments for the chosen oracle");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context ctx;
    if (const char* env = std::getenv(kCapsEnv)) ctx.caps.apply(env);
    if (!caps_spec.empty()) ctx.caps.apply(caps_spec);
    if (cap_trees) ctx.caps.max_tree_k = *cap_trees;
    if (cap_letters) ctx.caps.max_letters = *cap_letters;
    if (!cache_dir.empty()) {
      ctx.cache = ResultCache(cache_dir);
    } else if (const char* env = std::getenv(kCacheEnv); env && *env) {
      ctx.cache = ResultCache(env);
    }

    auto format_or = [&](Format fallback) { return format_name.empty() ? fallback : parse_format(format_name); };
    std::string output;
    int code = kExitOk;

    if (treepoly->parsed()) {
      output = treepoly_command(k, variant, parse_route(route_name), format_or(Format::kJson), ctx);
    } else if (coeff->parsed()) {
      output = coeff_command(kind, Partition::parse(lambda_text), mu_text, format_or(Format::kText));
    } else if (table->parsed()) {
      if (format_or(Format::kJson) != Format::kJson) throw std::invalid_argument("table supports only --format json");
      output = table_result(weight, ctx).dump(2) + "\n";
    } else if (cup->parsed()) {
      output = cup_command(Partition::parse(cup_lambda), Partition::parse(cup_mu), format_or(Format::kJson));
    } else if (witten->parsed()) {
      output = witten_command(Partition::parse(witten_lambda), format_or(Format::kJson));
    } else if (verify->parsed()) {
      const VerifyReport report = run_verify(parse_verify_level(level_name), ctx);
      std::ostringstream text;
      report.print(text, timings);
      output = text.str();
      if (!report.passed()) code = kExitVerifyFailed;
    } else if (oracle->parsed()) {
      const OracleReport report = oracle_command(oracle_what, oracle_args, ctx);
      output = report.text;
      if (!report.equal) code = kExitVerifyFailed;
    }

    if (out_path.empty()) {
      out << output;
    } else {
      write_atomically(out_path, output);
    }
    return code;
  } catch (const CapExceeded& e) {
    err << "error: enumeration cap '" << e.cap_name() << "' exceeded (limit " << e.limit() << ", requested "
        << e.requested() << "); raise it with " << override_hint(e.cap_name()) << " or " << kCapsEnv << "="
        << e.cap_name() << "=N\n";
    return kExitCap;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace kcycles::cli
