// slength: Stanley length bounds, certificates, and experiments for
// monomial ideals and their quotients.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "slength/constructions.hpp"
#include "slength/errors.hpp"
#include "slength/ideal_io.hpp"
#include "slength/linear_quotients.hpp"
#include "slength/solver.hpp"
#include "slength/transforms.hpp"

using nlohmann::json;
using namespace slength;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json space_json(const StanleySpace& s) {
  json out;
  out["u"] = s.u.exponents();
  out["Z"] = varset_elements(s.z);
  return out;
}

json witness_json(const StanleyDecomposition& d) {
  json spaces = json::array();
  for (const StanleySpace& s : d.spaces) spaces.push_back(space_json(s));
  return spaces;
}

std::vector<std::string> witness_text(const StanleyDecomposition& d) {
  std::vector<std::string> lines;
  lines.reserve(d.spaces.size());
  for (const StanleySpace& s : d.spaces) lines.push_back(to_string(s));
  return lines;
}

struct CommonFlags {
  bool deterministic = false;
  int threads = 0;  // 0: env or 1
  long long budget = 0;
  int min_sdepth = -1;
};

SolveOptions make_options(const CommonFlags& flags) {
  SolveOptions options;
  options.deterministic = flags.deterministic;
  int threads = 1;
  if (const char* env = std::getenv("SLENGTH_THREADS")) {
    try {
      threads = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("SLENGTH_THREADS is not a number");
    }
  }
  if (flags.threads > 0) threads = flags.threads;  // flag wins over env
  options.threads = threads;
  if (flags.budget > 0) {
    options.budget.max_faces = static_cast<std::size_t>(flags.budget);
    options.budget.max_grid_points = static_cast<std::size_t>(flags.budget);
  }
  return options;
}

json base_report(const std::string& command, const ParsedModule& parsed) {
  json out;
  out["command"] = command;
  out["input_hash"] = input_hash(parsed.module);
  if (!parsed.warnings.empty()) out["warnings"] = parsed.warnings;
  return out;
}

void fill_bounds(json& out, const SlengthReport& report) {
  out["lower"] = {{"value", report.lower.value}, {"method", report.lower.method}};
  out["upper"] = {{"value", report.upper.value}, {"method", report.upper.method}};
  out["exact"] = report.exact;
  if (report.witness) {
    out["witness"] = witness_json(*report.witness);
    out["sdepth_of_witness"] = measure(*report.witness).sdepth;
  }
  if (!report.notes.empty()) out["notes"] = report.notes;
  out["timings_ms"] = report.timings_ms;
}

int emit(const json& out) {
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_slength(const std::string& path, const CommonFlags& flags) {
  ParsedModule parsed = parse_module(read_file(path));
  SolveOptions options = make_options(flags);
  json out = base_report("slength", parsed);
  if (flags.min_sdepth >= 0) {
    std::optional<SlengthReport> got =
        constrained_min_length(parsed.module, flags.min_sdepth, options);
    out["min_sdepth"] = flags.min_sdepth;
    if (!got) {
      out["feasible"] = false;
      out["exact"] = true;
      out["timings_ms"] = json::object();
      return emit(out);
    }
    out["feasible"] = true;
    fill_bounds(out, *got);
    return emit(out);
  }
  fill_bounds(out, slength_report(parsed.module, options));
  return emit(out);
}

int run_sdepth(const std::string& path, const CommonFlags& flags) {
  ParsedModule parsed = parse_module(read_file(path));
  SdepthResult got = sdepth_squarefree(parsed.module, make_options(flags));
  json out = base_report("sdepth", parsed);
  out["lower"] = {{"value", got.sdepth}, {"method", "sdepth-search"}};
  out["upper"] = {{"value", got.sdepth}, {"method", "sdepth-search"}};
  out["exact"] = true;
  out["witness"] = witness_json(got.witness);
  out["sdepth_of_witness"] = measure(got.witness).sdepth;
  out["timings_ms"] = json::object();
  return emit(out);
}

int run_decompose(const std::string& path, const CommonFlags& flags) {
  ParsedModule parsed = parse_module(read_file(path));
  SlengthReport report = slength_report(parsed.module, make_options(flags));
  json out = base_report("decompose", parsed);
  fill_bounds(out, report);
  if (report.witness) out["decomposition_text"] = witness_text(*report.witness);
  return emit(out);
}

StanleyDecomposition witness_from_report(const QuotientModule& module, const json& report) {
  if (!report.contains("witness") || !report["witness"].is_array())
    throw std::invalid_argument("report has no witness array");
  StanleyDecomposition d{module, {}};
  for (const json& space : report["witness"]) {
    std::vector<int> exps = space.at("u").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != module.vars())
      throw std::invalid_argument("witness monomial has the wrong variable count");
    VarSet z = 0;
    for (int j : space.at("Z").get<std::vector<int>>()) {
      if (j < 1 || j > module.vars())
        throw std::invalid_argument("witness Z index out of range");
      z |= var_bit(j);
    }
    d.spaces.push_back({Monomial(std::move(exps)), z});
  }
  return d;
}

int run_verify(const std::string& ideal_path, const std::string& report_path) {
  ParsedModule parsed = parse_module(read_file(ideal_path));
  json report;
  try {
    report = json::parse(read_file(report_path));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
  }
  StanleyDecomposition d = witness_from_report(parsed.module, report);
  VerifyResult got = verify(d);
  json out = base_report("verify", parsed);
  out["ok"] = got.ok;
  out["fault"] = to_string(got.fault);
  if (got.counterexample) out["counterexample"] = got.counterexample->exponents();
  out["length"] = d.spaces.size();
  if (got.ok && !d.spaces.empty()) out["sdepth_of_witness"] = measure(d).sdepth;
  out["timings_ms"] = json::object();
  return emit(out);
}

int run_transform(const std::string& path, const std::string& op,
                  const std::string& monomial_text, const CommonFlags& flags) {
  ParsedModule parsed = parse_module(read_file(path));
  SolveOptions options = make_options(flags);
  SlengthReport source = slength_report(parsed.module, options);
  if (!source.witness) throw SizeLimitError("no witness decomposition fits the budget");
  const StanleyDecomposition& d = *source.witness;

  std::optional<StanleyDecomposition> result;
  if (op == "polarize") {
    result = polarize_decomposition(d);
  } else if (op == "radical") {
    result = radical_decomposition(d);
  } else if (op == "colon") {
    Monomial v = parse_monomial(monomial_text, parsed.module.vars());
    result = colon_transform(d, v);
    if (!result) {
      json out = base_report("transform", parsed);
      out["op"] = op;
      out["monomial"] = v.exponents();
      out["module"] = render_module(
          QuotientModule::plain_ideal(MonomialIdeal::unit(parsed.module.vars())));
      out["notes"] = {"the colon is the unit ideal"};
      out["timings_ms"] = json::object();
      return emit(out);
    }
  } else if (op == "scale") {
    Monomial u = parse_monomial(monomial_text, parsed.module.vars());
    result = scale_decomposition(d, u);
  } else if (op == "extend") {
    result = extend_variable(d);
  } else if (op == "restrict") {
    result = restrict_variable(d);
  } else {
    throw std::invalid_argument("unknown transform: " + op);
  }

  VerifyResult check = verify(*result);
  json out = base_report("transform", parsed);
  out["op"] = op;
  if (!monomial_text.empty())
    out["monomial"] = parse_monomial(monomial_text, parsed.module.vars()).exponents();
  out["module"] = render_module(result->module);
  out["witness"] = witness_json(*result);
  out["decomposition_text"] = witness_text(*result);
  out["length"] = result->spaces.size();
  if (!result->spaces.empty()) out["sdepth_of_witness"] = measure(*result).sdepth;
  out["witness_verified"] = check.ok;
  out["timings_ms"] = json::object();
  return emit(out);
}

int run_linquot(const std::string& path, const CommonFlags& flags) {
  ParsedModule parsed = parse_module(read_file(path));
  if (!parsed.module.is_plain_ideal())
    throw std::invalid_argument("linear quotients are defined for plain ideals");
  const MonomialIdeal& ideal = parsed.module.upper();
  json out = base_report("linquot", parsed);
  std::optional<std::vector<Monomial>> order = find_linear_order(ideal);
  out["linear_quotients"] = order.has_value();
  if (order) {
    std::vector<std::string> names;
    for (const Monomial& u : *order) names.push_back(to_string(u));
    out["order"] = names;
    StanleyDecomposition d = decomposition_from_order(ideal, *order);
    out["witness"] = witness_json(d);
    out["sdepth_of_witness"] = measure(d).sdepth;
  }
  SlengthReport report = slength_report(parsed.module, make_options(flags));
  out["lower"] = {{"value", report.lower.value}, {"method", report.lower.method}};
  out["upper"] = {{"value", report.upper.value}, {"method", report.upper.method}};
  out["exact"] = report.exact;
  if (!report.notes.empty()) out["notes"] = report.notes;
  out["timings_ms"] = report.timings_ms;
  return emit(out);
}

int run_bounds(const std::string& path) {
  ParsedModule parsed = parse_module(read_file(path));
  const QuotientModule& q = parsed.module;
  json out = base_report("bounds", parsed);
  Bound lower{1, "trivial"};
  std::optional<Bound> upper;
  std::vector<std::string> notes;
  auto offer = [&](int value, const std::string& method) {
    if (!upper || value < upper->value) upper = Bound{value, method};
  };
  if (q.is_plain_ideal()) {
    const MonomialIdeal& j = q.upper();
    lower = {j.generator_count(), "generator-count"};
    if (j.is_unit() || j.generator_count() == 1) {
      offer(1, j.is_unit() ? "unit" : "principal");
    } else if (q.vars() == 2) {
      offer(formula_n2(j).value, "two-variable-formula");
    } else if (j.generator_count() == 2) {
      offer(formula_m2(j).value, "two-generator-formula");
    } else {
      try {
        if (find_linear_order(j)) offer(j.generator_count(), "linear-quotients");
      } catch (const SizeLimitError& e) {
        notes.push_back(std::string("linear-quotient search skipped: ") + e.what());
      }
      offer(static_cast<int>(janet(j, false).spaces.size()), "janet");
      offer(static_cast<int>(janet(j, true).spaces.size()), "janet");
      if (is_complete_intersection(j))
        offer(static_cast<int>(ci_decomposition(j).spaces.size()), "complete-intersection");
    }
  } else if (q.upper().is_unit() && q.lower().generator_count() == 1 &&
             !q.lower().is_unit()) {
    offer(static_cast<int>(principal_quotient(q.lower().generators()[0]).spaces.size()),
          "principal-quotient");
  }
  out["lower"] = {{"value", lower.value}, {"method", lower.method}};
  if (upper) {
    out["upper"] = {{"value", upper->value}, {"method", upper->method}};
    out["exact"] = lower.value == upper->value;
  } else {
    out["exact"] = false;
    notes.push_back("no cheap upper bound applies");
  }
  if (!notes.empty()) out["notes"] = notes;
  out["timings_ms"] = json::object();
  return emit(out);
}

int run_oracle(const std::string& path) {
  ParsedModule parsed = parse_module(read_file(path));
  OracleMode mode =
      parsed.module.is_squarefree() ? OracleMode::kSquarefree : OracleMode::kGrid;
  int value = oracle_slength(parsed.module, mode);
  json out = base_report("oracle", parsed);
  out["lower"] = {{"value", value}, {"method", "oracle"}};
  out["upper"] = {{"value", value}, {"method", "oracle"}};
  out["exact"] = true;
  out["mode"] = mode == OracleMode::kSquarefree ? "squarefree" : "grid";
  out["timings_ms"] = json::object();
  return emit(out);
}

int run_conjecture(int d1, int d2, int d3, int n, const CommonFlags& flags) {
  ConjectureReport got = conjecture_experiment(d1, d2, d3, n, make_options(flags));
  json out;
  out["command"] = "conjecture";
  out["d"] = {got.d1, got.d2, got.d3};
  out["n"] = got.n;
  out["exact_value"] = got.exact_value;
  out["conjectured_value"] = got.conjectured_value;
  out["matches"] = got.matches;
  out["timings_ms"] = json::object();
  return emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley length of monomial ideals: bounds, witnesses, experiments"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string path;
  std::string report_path;
  std::string op;
  std::string monomial_text;
  int d1 = 1, d2 = 1, d3 = 1, n = 3;

  auto add_common = [&](CLI::App* cmd, bool with_file = true) {
    if (with_file) cmd->add_option("file", path, "ideal file")->required();
    cmd->add_flag("--deterministic", flags.deterministic,
                  "sequential search with a reproducible witness");
    cmd->add_option("--threads", flags.threads, "solver threads (overrides SLENGTH_THREADS)");
    cmd->add_option("--budget", flags.budget, "max faces / grid points before refusal");
  };

  CLI::App* c_slength = app.add_subcommand("slength", "bound or compute the Stanley length");
  add_common(c_slength);
  c_slength->add_option("--min-sdepth", flags.min_sdepth,
                        "minimum length among decompositions of sdepth >= s");

  CLI::App* c_sdepth = app.add_subcommand("sdepth", "Stanley depth of a squarefree module");
  add_common(c_sdepth);

  CLI::App* c_decompose = app.add_subcommand("decompose", "emit a verified decomposition");
  add_common(c_decompose);

  CLI::App* c_verify = app.add_subcommand("verify", "re-check a reported witness");
  c_verify->add_option("file", path, "ideal file")->required();
  c_verify->add_option("report", report_path, "JSON report with a witness")->required();

  CLI::App* c_transform = app.add_subcommand("transform", "apply a decomposition transform");
  add_common(c_transform);
  c_transform->add_option("--op", op, "polarize|radical|colon|scale|extend|restrict")
      ->required();
  c_transform->add_option("--monomial", monomial_text, "monomial for colon/scale");

  CLI::App* c_linquot = app.add_subcommand("linquot", "linear quotient order search");
  add_common(c_linquot);

  CLI::App* c_bounds = app.add_subcommand("bounds", "cheap bounds only, no exact search");
  add_common(c_bounds);

  CLI::App* c_oracle = app.add_subcommand("oracle", "exhaustive reference value (tiny inputs)");
  c_oracle->add_option("file", path, "ideal file")->required();

  CLI::App* c_conj = app.add_subcommand("conjecture", "three-generator squarefree experiment");
  add_common(c_conj, false);
  c_conj->add_option("--d1", d1, "first block size")->required();
  c_conj->add_option("--d2", d2, "second block size")->required();
  c_conj->add_option("--d3", d3, "third block size")->required();
  c_conj->add_option("--n", n, "ambient variable count")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_slength->parsed()) return run_slength(path, flags);
    if (c_sdepth->parsed()) return run_sdepth(path, flags);
    if (c_decompose->parsed()) return run_decompose(path, flags);
    if (c_verify->parsed()) return run_verify(path, report_path);
    if (c_transform->parsed()) return run_transform(path, op, monomial_text, flags);
    if (c_linquot->parsed()) return run_linquot(path, flags);
    if (c_bounds->parsed()) return run_bounds(path);
    if (c_oracle->parsed()) return run_oracle(path);
    if (c_conj->parsed()) return run_conjecture(d1, d2, d3, n, flags);
  } catch (const SizeLimitError& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "size"}}.dump() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "input"}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "input"}}.dump() << "\n";
    return 1;
  }
  return 1;
}
