#include "commands.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "kmstab/error.hpp"
#include "kmstab/io.hpp"
#include "kmstab/lroracle.hpp"
#include "kmstab/ring.hpp"
#include "kmstab/tensor.hpp"

namespace kmstab::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string diagram;
  bool json_output = false;
  bool trace = false;
  unsigned parallel = 1;
  bool force_degenerate = false;
  std::optional<std::size_t> level;
  std::string levels;
  std::int64_t max_depth = 2;
  std::size_t max_tail = 2;
  std::size_t extra = 2;
  std::size_t upto = 0;
  std::string lambda;
  std::string mu;
  std::string nu;
  std::string lr_x;
  std::string lr_y;
  std::string lr_z;
};

struct LevelRange {
  std::size_t from;
  std::size_t to;
};

LevelRange parse_levels(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = std::stoul(text);
      return {n, n};
    }
    const LevelRange r{std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
    if (r.to < r.from) throw ParseError("level range '" + text + "' is empty");
    return r;
  } catch (const std::logic_error&) {
    throw ParseError("level range must look like 6..8, got '" + text + "'");
  }
}

std::string big(const BigInt& v) { return v.get_str(); }

std::vector<std::size_t> requested_levels(const RunConfig& cfg, std::size_t fallback_from, std::size_t fallback_count) {
  std::vector<std::size_t> out;
  if (cfg.level) {
    out.push_back(*cfg.level);
  } else if (!cfg.levels.empty()) {
    const auto r = parse_levels(cfg.levels);
    for (std::size_t n = r.from; n <= r.to; ++n) out.push_back(n);
  } else {
    for (std::size_t n = fallback_from; n < fallback_from + fallback_count; ++n) out.push_back(n);
  }
  return out;
}

MultQuery read_query(const RunConfig& cfg) {
  return {parse_weight(cfg.lambda), parse_weight(cfg.mu), parse_weight(cfg.nu)};
}

ExploreOptions explore_options(const RunConfig& cfg) {
  ExploreOptions o;
  o.threads = cfg.parallel;
  return o;
}

// ---- info -----------------------------------------------------------------

int cmd_info(const RunConfig& cfg, std::ostream& out) {
  const MarkedDiagram x = load_diagram(cfg.diagram);
  const std::size_t d = x.rank();
  const auto verdict = is_extensible(x);
  const std::size_t upto = cfg.upto ? cfg.upto : d + 6;
  const auto levels = requested_levels(cfg, d, 7);

  if (cfg.json_output) {
    json j = diagram_to_json(x);
    j["d"] = d;
    j["delta"] = big(delta(x));
    json dets = json::array();
    for (const auto n : levels) dets.push_back(json{{"n", n}, {"det", big(level_determinant(x, n))}});
    j["determinants"] = dets;
    j["extensible"] = verdict.extensible;
    j["reason"] = verdict.reason;
    if (verdict.extensible) {
      json a = json::array();
      for (const auto& v : a_sequence(x, upto)) a.push_back(big(v));
      j["a"] = a;
    }
    j["warnings"] = x.warnings();
    out << j.dump(2) << "\n";
    return 0;
  }

  for (const auto& w : x.warnings()) out << "warning: " << w << "\n";
  out << "diagram     " << x.name() << " (d = " << d << ")\n";
  out << "cartan      " << json(x.cartan().to_rows()).dump() << "\n";
  out << "delta       " << big(delta(x)) << "\n";
  out << "det(X_n)   ";
  for (const auto n : levels) out << " n=" << n << ":" << big(level_determinant(x, n));
  out << "\n";
  if (verdict.extensible) {
    out << "extensible  yes (" << verdict.reason << ")\n";
    out << "a_1..a_" << upto << "  ";
    for (const auto& v : a_sequence(x, upto)) out << " " << big(v);
    out << "\n";
  } else {
    out << "extensible  no (not extensible: " << verdict.reason << ")\n";
  }
  return 0;
}

// ---- mult / stable / verify -----------------------------------------------

json report_json(const LevelReport& r) {
  return json{{"level", r.level},          {"det", big(r.det)},
              {"degenerate", r.degenerate}, {"budget_height", r.budget_height},
              {"paths", r.paths_enumerated}, {"count", r.count}};
}

void print_row(std::ostream& out, const LevelReport& r) {
  out << std::setw(4) << r.level << std::setw(8) << big(r.det) << std::setw(8)
      << (r.budget_height < 0 ? std::string("-") : std::to_string(r.budget_height)) << std::setw(10)
      << r.paths_enumerated << std::setw(7) << r.count << (r.degenerate ? "  degenerate level (forced)" : "") << "\n";
}

void trace_paths(std::ostream& out, const MarkedDiagram& x, const MultQuery& q, std::size_t n, const RunConfig& cfg) {
  const LevelAlgebra alg(x, n);
  std::optional<std::vector<std::int64_t>> budget;
  if (alg.is_degenerate()) {
    budget = profile(q.gamma(), x).reassemble(n);
  } else {
    budget = root_coefficients(alg, instantiate(q.gamma(), alg).coords);
  }
  if (!budget || std::any_of(budget->begin(), budget->end(), [](std::int64_t b) { return b < 0; })) return;
  const auto mu = instantiate(q.mu, alg).coords;
  for (const auto& p : ls_paths_to_target(alg, instantiate(q.lambda, alg).coords, *budget, explore_options(cfg)))
    out << "    " << (is_dominant_after_shift(p, mu) ? "dominant " : "         ") << p.dump() << "\n";
}

std::optional<std::string> stably_zero_note(const MarkedDiagram& x, TensorEvaluator& ev, const MultQuery& q) {
  if (!is_extensible(x).extensible) return std::nullopt;
  const auto v = ev.stability_bound(q);
  if (!v.stably_zero) return std::nullopt;
  if (v.reason.rfind("box criterion", 0) == 0) return "stably zero (box criterion)";
  return "stably zero (" + v.reason + ")";
}

int cmd_mult(const RunConfig& cfg, std::ostream& out) {
  const MarkedDiagram x = load_diagram(cfg.diagram);
  const MultQuery q = read_query(cfg);
  TensorEvaluator ev(x, explore_options(cfg));
  const auto levels = requested_levels(cfg, q.min_level(x), 3);
  const auto note = stably_zero_note(x, ev, q);

  json rows = json::array();
  if (!cfg.json_output) out << "   n     det  budget     paths  count\n";
  for (const auto n : levels) {
    if (n < q.min_level(x))
      throw PreconditionError(ErrorKind::kLevelTooSmall, "level " + std::to_string(n) +
                                                             " is below the minimal legal level " +
                                                             std::to_string(q.min_level(x)));
    if (level_determinant(x, n) == 0 && !cfg.force_degenerate) {
      if (cfg.json_output)
        rows.push_back(json{{"level", n}, {"det", "0"}, {"degenerate", true}, {"skipped", true}});
      else
        out << std::setw(4) << n << std::setw(8) << 0 << "  degenerate level (skipped; use --force-degenerate)\n";
      continue;
    }
    const auto rep = ev.evaluate(q, n, cfg.force_degenerate);
    if (cfg.json_output) {
      rows.push_back(report_json(rep));
    } else {
      print_row(out, rep);
      if (cfg.trace) trace_paths(out, x, q, n, cfg);
    }
  }
  if (cfg.json_output) {
    json j{{"lambda", weight_to_json(q.lambda)}, {"mu", weight_to_json(q.mu)}, {"nu", weight_to_json(q.nu)},
           {"levels", rows}};
    if (note) j["note"] = *note;
    out << j.dump(2) << "\n";
  } else if (note) {
    out << *note << "\n";
  }
  return 0;
}

int cmd_stable(const RunConfig& cfg, std::ostream& out) {
  const MarkedDiagram x = load_diagram(cfg.diagram);
  const MultQuery q = read_query(cfg);
  TensorEvaluator ev(x, explore_options(cfg));
  const auto v = ev.stability_bound(q);
  const std::int64_t c = ev.stable_multiplicity(q);
  if (cfg.json_output) {
    json j{{"stably_zero", v.stably_zero}, {"c_inf", c}};
    if (v.stably_zero) {
      j["reason"] = v.reason;
    } else {
      j["N"] = v.bound;
      j["depth"] = v.depth;
      j["gamma_length"] = v.gamma_length;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  if (v.stably_zero)
    out << "stably zero (" << v.reason << ")\n";
  else
    out << "N = " << v.bound << " (l(gamma) = " << v.gamma_length << ", depth = " << v.depth << ")\n";
  out << "c(inf) = " << c << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const MarkedDiagram x = load_diagram(cfg.diagram);
  const MultQuery q = read_query(cfg);
  TensorEvaluator ev(x, explore_options(cfg));
  const auto v = ev.stability_bound(q);
  if (v.stably_zero) {
    if (cfg.json_output)
      out << json{{"stably_zero", true}, {"reason", v.reason}, {"stable", true}}.dump(2) << "\n";
    else
      out << "stably zero (" << v.reason << ")\nstable: yes\n";
    return 0;
  }
  const auto levels = cfg.levels.empty() && !cfg.level ? requested_levels(cfg, v.bound, cfg.extra + 1)
                                                       : requested_levels(cfg, v.bound, 1);
  json rows = json::array();
  std::optional<std::int64_t> first;
  bool stable = true;
  if (!cfg.json_output) out << "N = " << v.bound << "\n   n     det  budget     paths  count\n";
  for (const auto n : levels) {
    if (n < v.bound) throw PreconditionError(ErrorKind::kLevelTooSmall, "sweep must start at N = " + std::to_string(v.bound));
    if (level_determinant(x, n) == 0) {
      if (!cfg.json_output) out << std::setw(4) << n << std::setw(8) << 0 << "  degenerate level (skipped)\n";
      continue;
    }
    const auto rep = ev.evaluate(q, n);
    if (!first) first = rep.count;
    stable = stable && rep.count == *first;
    if (cfg.json_output)
      rows.push_back(report_json(rep));
    else
      print_row(out, rep);
  }
  if (cfg.json_output)
    out << json{{"N", v.bound}, {"levels", rows}, {"stable", stable}}.dump(2) << "\n";
  else
    out << "stable: " << (stable ? "yes" : "no") << "\n";
  return stable ? 0 : 3;
}

// ---- product / interval / lr ----------------------------------------------

int cmd_product(const RunConfig& cfg, std::ostream& out) {
  const MarkedDiagram x = load_diagram(cfg.diagram);
  const DoubleWeight lambda = parse_weight(cfg.lambda);
  const DoubleWeight mu = parse_weight(cfg.mu);
  const Cutoff cutoff{cfg.max_depth, cfg.max_tail, 0};
  const MultTable t = stable_product(lambda, mu, x, cutoff, explore_options(cfg));
  if (cfg.json_output) {
    out << table_to_json(t) << "\n";
    return 0;
  }
  out << "grade " << t.grade << ", complete for depth <= " << t.cutoff.max_depth << ", tail <= " << t.cutoff.max_tail
      << ", head <= " << t.cutoff.max_head << "\n";
  out << " coeff  weight (head/tail)\n";
  for (const auto& [w, c] : t.terms) out << std::setw(6) << c << "  " << w.to_string() << "\n";
  return 0;
}

int cmd_interval(const RunConfig& cfg, std::ostream& out) {
  const MarkedDiagram x = load_diagram(cfg.diagram);
  const DoubleWeight upper = parse_weight(cfg.lambda);
  const DoubleWeight lower = parse_weight(cfg.mu);
  const auto items = interval(upper, lower, x);
  if (cfg.json_output) {
    json list = json::array();
    for (const auto& w : items) list.push_back(weight_to_json(w));
    out << list.dump(2) << "\n";
    return 0;
  }
  out << items.size() << " weight(s) between " << lower.to_string() << " and " << upper.to_string() << "\n";
  for (const auto& w : items) out << "  " << w.to_string() << "  depth " << depth(upper - w, x) << "\n";
  return 0;
}

int cmd_lr(const RunConfig& cfg, std::ostream& out) {
  const Partition x(parse_int_list(cfg.lr_x));
  const Partition y(parse_int_list(cfg.lr_y));
  const Partition z(parse_int_list(cfg.lr_z));
  const auto c = lr_coefficient(x, y, z);
  if (cfg.json_output)
    out << json{{"lr", c}}.dump() << "\n";
  else
    out << c << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Stable tensor product multiplicities for series of Kac-Moody algebras", "kmstab"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--diagram", cfg.diagram, "preset name (A, B, C, D, E, F1, F2, G1, G2) or diagram JSON file")
        ->required();
    sub->add_flag("--json", cfg.json_output, "machine-readable output");
    sub->add_option("--parallel", cfg.parallel, "worker threads for path enumeration")->check(CLI::Range(1U, 256U));
  };
  auto add_query = [&](CLI::App* sub) {
    sub->add_option("--lambda", cfg.lambda, "weight as head/tail, e.g. 0,1/2")->required();
    sub->add_option("--mu", cfg.mu, "weight as head/tail")->required();
    sub->add_option("--nu", cfg.nu, "weight as head/tail")->required();
  };
  auto add_levels = [&](CLI::App* sub) {
    auto* single = sub->add_option("--level", cfg.level, "a single level n");
    sub->add_option("--levels", cfg.levels, "level range a..b")->excludes(single);
  };

  auto* info = app.add_subcommand("info", "diagram data: Delta, determinants, extensibility, a_i");
  add_common(info);
  add_levels(info);
  info->add_option("--upto", cfg.upto, "number of a_i to print");

  bool mult_stable = false;
  auto* mult = app.add_subcommand("mult", "tensor multiplicities at given levels");
  add_common(mult);
  add_query(mult);
  add_levels(mult);
  mult->add_flag("--trace", cfg.trace, "print the enumerated target paths");
  mult->add_flag("--force-degenerate", cfg.force_degenerate, "evaluate at levels with det(X_n) = 0");
  mult->add_flag("--stable", mult_stable, "print N and the stable value instead");

  auto* stable = app.add_subcommand("stable", "stability bound N and stable multiplicity");
  add_common(stable);
  add_query(stable);

  auto* verify = app.add_subcommand("verify", "check constancy of multiplicities on [N, N+k]");
  add_common(verify);
  add_query(verify);
  add_levels(verify);
  verify->add_option("--extra", cfg.extra, "k in [N, N+k]");

  auto* product = app.add_subcommand("product", "truncated product in the stable representation ring");
  add_common(product);
  product->add_option("--lambda", cfg.lambda, "first factor")->required();
  product->add_option("--mu", cfg.mu, "second factor")->required();
  product->add_option("--max-depth", cfg.max_depth, "depth cutoff")->check(CLI::NonNegativeNumber);
  product->add_option("--max-tail", cfg.max_tail, "tail length cutoff");

  auto* interval_cmd = app.add_subcommand("interval", "dominant weights between --mu and --lambda");
  add_common(interval_cmd);
  interval_cmd->add_option("--lambda", cfg.lambda, "upper weight")->required();
  interval_cmd->add_option("--mu", cfg.mu, "lower weight")->required();

  auto* lr = app.add_subcommand("lr", "");
  lr->group("");
  lr->add_option("--x", cfg.lr_x, "partition")->required();
  lr->add_option("--y", cfg.lr_y, "partition")->required();
  lr->add_option("--z", cfg.lr_z, "partition")->required();
  lr->add_flag("--json", cfg.json_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*info) return cmd_info(cfg, out);
    if (*mult) return mult_stable ? cmd_stable(cfg, out) : cmd_mult(cfg, out);
    if (*stable) return cmd_stable(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*product) return cmd_product(cfg, out);
    if (*interval_cmd) return cmd_interval(cfg, out);
    if (*lr) return cmd_lr(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace kmstab::cli
