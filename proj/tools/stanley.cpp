#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stanley/families.hpp"
#include "stanley/io.hpp"
#include "stanley/search.hpp"

namespace {

using nlohmann::json;
using namespace stanley;

// Exit codes: 0 success, 1 usage/parse error, 2 budget exhausted (value not
// proven exact), 3 verification failed / target not achievable.

struct CommonOptions {
  std::string file;
  bool as_json = false;
  std::string g_override;
  double time_limit = 0;
  std::uint64_t node_limit = 0;
  int threads = 1;
  bool single_thread = false;
  bool witness = false;
};

void add_search_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_flag("--json", opt.as_json, "machine-readable output");
  cmd->add_option("--g", opt.g_override,
                  "admissible g, comma or space separated (overrides the file)");
  cmd->add_option("--time-limit", opt.time_limit, "time limit in seconds");
  cmd->add_option("--node-limit", opt.node_limit, "search node limit");
  cmd->add_option("--threads", opt.threads, "worker threads for the search");
  cmd->add_flag("--single-thread", opt.single_thread,
                "force one thread (byte-stable witnesses)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IdealFile load_ideal_file(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_ideal_file(text);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ":" + e.what());
  }
}

Exponent parse_g_string(const std::string& s, int n) {
  std::string norm = s;
  for (char& c : norm)
    if (c == ',') c = ' ';
  std::istringstream in(norm);
  Exponent g;
  long v;
  while (in >> v) {
    if (v < 0 || v > 1'000'000)
      throw std::runtime_error("g entries must be between 0 and 1000000");
    g.push_back(static_cast<int>(v));
  }
  if (!in.eof() || static_cast<int>(g.size()) != n)
    throw std::runtime_error("--g must list n nonnegative integers");
  return g;
}

struct LoadedInstance {
  QuotientPair pair;
  std::optional<Exponent> g;
};

LoadedInstance load_instance(const CommonOptions& opt) {
  IdealFile f = load_ideal_file(opt.file);
  std::optional<Exponent> g = f.g;
  if (!opt.g_override.empty())
    g = parse_g_string(opt.g_override, f.pair.nvars());
  return {std::move(f.pair), std::move(g)};
}

SearchBudget make_budget(const CommonOptions& opt) {
  SearchBudget b;
  if (opt.time_limit > 0) b.time_limit_seconds = opt.time_limit;
  if (opt.node_limit > 0) b.node_limit = opt.node_limit;
  b.threads = opt.single_thread ? 1 : std::max(1, opt.threads);
  return b;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

json witness_json(const CharacteristicPoset& poset, const Partition& part) {
  json arr = json::array();
  for (const auto& iv : part)
    arr.push_back({{"bottom", poset.point(iv.bottom)}, {"top", poset.point(iv.top)}});
  return arr;
}

/// Runs a command body, turning the zero-module outcome into its distinguished
/// report instead of an error.
int guard_empty_module(const char* command, bool as_json,
                       const std::function<int()>& body) {
  try {
    return body();
  } catch (const EmptyModuleError&) {
    if (as_json) {
      json out = {{"command", command},
                  {"value", nullptr},
                  {"status", "empty_module"},
                  {"poset_size", 0},
                  {"elapsed_ms", 0}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << "empty module\n";
    }
    return 0;
  }
}

int run_depth(const CommonOptions& opt, bool fdepth_mode) {
  const char* command = fdepth_mode ? "fdepth" : "sdepth";
  return guard_empty_module(command, opt.as_json, [&] {
    Stopwatch watch;
    LoadedInstance in = load_instance(opt);
    DepthResult r = fdepth_mode ? fdepth_exact(in.pair, make_budget(opt), in.g)
                                : sdepth_exact(in.pair, make_budget(opt), in.g);
    bool exact = r.status == SearchStatus::Exact;
    if (opt.as_json) {
      json out = {{"command", command},
                  {"value", r.value},
                  {"status", exact ? "exact" : "lower_bound"},
                  {"poset_size", r.poset->size()},
                  {"elapsed_ms", watch.ms()}};
      if (opt.witness) out["witness"] = witness_json(*r.poset, r.witness);
      std::cout << out.dump() << '\n';
    } else {
      if (exact)
        std::cout << r.value << '\n';
      else
        std::cout << ">= " << r.value << '\n';
      if (opt.witness) {
        std::cout << "# partition\n" << format_partition(*r.poset, r.witness);
        std::cout << "# decomposition\n"
                  << format_decomposition(
                         decomposition_from_partition(*r.poset, r.witness));
      }
    }
    return exact ? 0 : 2;
  });
}

int run_dim(const CommonOptions& opt) {
  return guard_empty_module("dim", opt.as_json, [&] {
    Stopwatch watch;
    LoadedInstance in = load_instance(opt);
    CharacteristicPoset poset(in.pair, in.g);
    int value = krull_dim(poset);
    if (opt.as_json) {
      json out = {{"command", "dim"},
                  {"value", value},
                  {"status", "exact"},
                  {"poset_size", poset.size()},
                  {"elapsed_ms", watch.ms()}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << value << '\n';
    }
    return 0;
  });
}

int run_bounds(const CommonOptions& opt) {
  return guard_empty_module("bounds", opt.as_json, [&] {
    Stopwatch watch;
    LoadedInstance in = load_instance(opt);
    CharacteristicPoset poset(in.pair, in.g);
    int minrho = lower_bound_minrho(poset);
    int upper = upper_bound(in.pair);
    bool ideal_case = in.pair.denominator().is_zero();
    std::optional<int> gencount, recursive;
    if (ideal_case) {
      gencount = lower_bound_gencount(in.pair);
      recursive = lower_bound_recursive(in.pair.numerator());
    }
    if (opt.as_json) {
      json out = {{"command", "bounds"},
                  {"minrho", minrho},
                  {"gencount", gencount ? json(*gencount) : json(nullptr)},
                  {"recursive", recursive ? json(*recursive) : json(nullptr)},
                  {"upper", upper},
                  {"poset_size", poset.size()},
                  {"elapsed_ms", watch.ms()}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << "minrho " << minrho << '\n';
      std::cout << "gencount " << (gencount ? std::to_string(*gencount) : "n/a") << '\n';
      std::cout << "recursive " << (recursive ? std::to_string(*recursive) : "n/a")
                << '\n';
      std::cout << "upper " << upper << '\n';
    }
    return 0;
  });
}

int run_decompose(const CommonOptions& opt, int target) {
  return guard_empty_module("decompose", opt.as_json, [&] {
    Stopwatch watch;
    LoadedInstance in = load_instance(opt);
    CharacteristicPoset poset(in.pair, in.g);
    DecisionResult d = sdepth_decision(poset, target, make_budget(opt));
    if (d.decision == Decision::Yes) {
      StanleyDecomposition dec = decomposition_from_partition(poset, d.witness);
      if (opt.as_json) {
        json spaces = json::array();
        for (const auto& s : dec.spaces) {
          std::vector<int> vars;
          for (int j = s.free_vars.find_first(); j != -1; j = s.free_vars.find_next(j))
            vars.push_back(j + 1);
          spaces.push_back({{"generator", s.generator}, {"vars", vars}});
        }
        json out = {{"command", "decompose"}, {"value", stats(dec).sdepth},
                    {"status", "exact"},      {"witness", witness_json(poset, d.witness)},
                    {"spaces", spaces},       {"poset_size", poset.size()},
                    {"elapsed_ms", watch.ms()}};
        std::cout << out.dump() << '\n';
      } else {
        std::cout << format_decomposition(dec);
      }
      return 0;
    }
    if (d.decision == Decision::No) {
      if (opt.as_json) {
        json out = {{"command", "decompose"},
                    {"value", nullptr},
                    {"status", "impossible"},
                    {"poset_size", poset.size()},
                    {"elapsed_ms", watch.ms()}};
        std::cout << out.dump() << '\n';
      } else {
        std::cerr << "impossible: no decomposition with sdepth >= " << target << '\n';
      }
      return 3;
    }
    std::cerr << "budget exhausted before a decision was reached\n";
    return 2;
  });
}

int run_verify(const CommonOptions& opt, const std::string& dec_path) {
  return guard_empty_module("verify", opt.as_json, [&] {
    Stopwatch watch;
    IdealFile f = load_ideal_file(opt.file);
    StanleyDecomposition dec = [&] {
      std::string text = read_file(dec_path);
      try {
        return parse_decomposition(text, f.pair);
      } catch (const ParseError& e) {
        throw std::runtime_error(dec_path + ":" + e.what());
      }
    }();
    VerifyResult r = verify_decomposition(dec);
    if (opt.as_json) {
      json out = {{"command", "verify"},
                  {"valid", r.valid},
                  {"elapsed_ms", watch.ms()}};
      if (!r.valid) {
        out["counterexample"] = r.counterexample;
        out["count"] = r.cover_count;
        out["expected"] = r.in_module ? 1 : 0;
      }
      std::cout << out.dump() << '\n';
    } else if (r.valid) {
      std::cout << "valid\n";
    } else {
      std::cout << "invalid: x^";
      std::cout << '(';
      for (std::size_t j = 0; j < r.counterexample.size(); ++j) {
        if (j) std::cout << ',';
        std::cout << r.counterexample[j];
      }
      std::cout << ") covered " << r.cover_count << " times (expected "
                << (r.in_module ? 1 : 0) << ")\n";
    }
    return r.valid ? 0 : 3;
  });
}

int run_poset(const CommonOptions& opt) {
  return guard_empty_module("poset", opt.as_json, [&] {
    LoadedInstance in = load_instance(opt);
    CharacteristicPoset poset(in.pair, in.g);
    if (opt.as_json) {
      json points = json::array();
      for (int i = 0; i < poset.size(); ++i)
        points.push_back({{"point", poset.point(i)}, {"rho", poset.rho(i)}});
      json out = {{"command", "poset"},
                  {"g", poset.g()},
                  {"poset_size", poset.size()},
                  {"points", points}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << format_poset(poset);
    }
    return 0;
  });
}

std::vector<std::vector<int>> parse_facets(const std::vector<std::string>& specs) {
  std::vector<std::vector<int>> facets;
  for (const auto& s : specs) {
    std::string norm = s;
    for (char& c : norm)
      if (c == ',') c = ' ';
    std::istringstream in(norm);
    std::vector<int> f;
    int v;
    while (in >> v) {
      if (v < 1) throw std::runtime_error("facet vertices are 1-based");
      f.push_back(v - 1);
    }
    if (!in.eof() || f.empty()) throw std::runtime_error("invalid facet '" + s + "'");
    facets.push_back(std::move(f));
  }
  return facets;
}

int run_family(const std::string& name, const std::vector<int>& params,
               const std::vector<std::string>& facet_specs, bool as_ideal,
               const std::string& emit_path) {
  QuotientPair pair = [&] {
    if (name == "stanley-reisner") {
      if (params.size() != 1)
        throw std::runtime_error("stanley-reisner takes the vertex count");
      MonomialIdeal ideal = stanley_reisner(params[0], parse_facets(facet_specs));
      if (as_ideal)
        return QuotientPair(ideal, MonomialIdeal::zero(params[0]));
      return QuotientPair(MonomialIdeal::unit(params[0]), std::move(ideal));
    }
    if (!facet_specs.empty())
      throw std::runtime_error("--facet is only for stanley-reisner");
    return instantiate(FamilySpec{name, params});
  }();
  std::string text = format_ideal_file(pair);
  if (emit_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(emit_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + emit_path + "'");
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Stanley depth and fdepth of quotients I/J of monomial ideals"};
  app.require_subcommand(1);

  CommonOptions sdepth_opt, fdepth_opt, dim_opt, bounds_opt, dec_opt, verify_opt,
      poset_opt;

  auto* sdepth_cmd = app.add_subcommand("sdepth", "exact Stanley depth");
  sdepth_cmd->add_option("file", sdepth_opt.file, "ideal file")->required();
  sdepth_cmd->add_flag("--witness", sdepth_opt.witness,
                       "print the optimal partition and its decomposition");
  add_search_flags(sdepth_cmd, sdepth_opt);

  auto* fdepth_cmd = app.add_subcommand("fdepth", "exact fdepth");
  fdepth_cmd->add_option("file", fdepth_opt.file, "ideal file")->required();
  fdepth_cmd->add_flag("--witness", fdepth_opt.witness,
                       "print the optimal ordered partition and its decomposition");
  add_search_flags(fdepth_cmd, fdepth_opt);

  auto* dim_cmd = app.add_subcommand("dim", "Krull dimension of I/J");
  dim_cmd->add_option("file", dim_opt.file, "ideal file")->required();
  add_search_flags(dim_cmd, dim_opt);

  auto* bounds_cmd = app.add_subcommand("bounds", "cheap depth bounds");
  bounds_cmd->add_option("file", bounds_opt.file, "ideal file")->required();
  add_search_flags(bounds_cmd, bounds_opt);

  int target = 0;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "emit a decomposition with sdepth >= k");
  decompose_cmd->add_option("file", dec_opt.file, "ideal file")->required();
  decompose_cmd->add_option("--target", target, "required sdepth")->required();
  add_search_flags(decompose_cmd, dec_opt);

  std::string verify_dec_path;
  auto* verify_cmd =
      app.add_subcommand("verify", "check a decomposition file against an ideal file");
  verify_cmd->add_option("ideal", verify_opt.file, "ideal file")->required();
  verify_cmd->add_option("decomposition", verify_dec_path, "decomposition file")
      ->required();
  verify_cmd->add_flag("--json", verify_opt.as_json, "machine-readable output");

  auto* poset_cmd = app.add_subcommand("poset", "dump the characteristic poset");
  poset_cmd->add_option("file", poset_opt.file, "ideal file")->required();
  add_search_flags(poset_cmd, poset_opt);

  std::string family_name, family_emit;
  std::vector<int> family_params;
  std::vector<std::string> family_facets;
  bool family_as_ideal = false;
  auto* family_cmd = app.add_subcommand("family", "write a named instance");
  family_cmd->add_option("name", family_name, "family name")->required();
  family_cmd->add_option("params", family_params, "integer parameters");
  family_cmd->add_option("--facet", family_facets,
                         "facet as 1-based vertices, e.g. 1,2 (stanley-reisner)");
  family_cmd->add_flag("--as-ideal", family_as_ideal,
                       "emit the ideal instead of the face ring (stanley-reisner)");
  family_cmd->add_option("--emit", family_emit, "write to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sdepth_cmd->parsed()) return run_depth(sdepth_opt, false);
    if (fdepth_cmd->parsed()) return run_depth(fdepth_opt, true);
    if (dim_cmd->parsed()) return run_dim(dim_opt);
    if (bounds_cmd->parsed()) return run_bounds(bounds_opt);
    if (decompose_cmd->parsed()) return run_decompose(dec_opt, target);
    if (verify_cmd->parsed()) return run_verify(verify_opt, verify_dec_path);
    if (poset_cmd->parsed()) return run_poset(poset_opt);
    if (family_cmd->parsed())
      return run_family(family_name, family_params, family_facets, family_as_ideal,
                        family_emit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
