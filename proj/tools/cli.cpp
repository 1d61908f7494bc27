#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "nestlogit/copula.hpp"
#include "nestlogit/distributions.hpp"
#include "nestlogit/errors.hpp"
#include "nestlogit/generate.hpp"
#include "nestlogit/model_io.hpp"
#include "nestlogit/nested_logit.hpp"
#include "nestlogit/representation.hpp"
#include "nestlogit/verify.hpp"

namespace nestlogit::cli {

namespace {

using Json = nlohmann::ordered_json;

// Stream indices keep the commands' random sequences apart for a shared seed.
enum StreamIndex : std::uint64_t {
  kProbsStream = 1,
  kMixedStream = 2,
  kCdfStream = 3,
  kSampleStream = 4,
  kVerifyStream = 5,
  kStableSampleStream = 6,
  kLaplaceStream = 7,
  kFrechetStream = 8,
};

Json estimate_json(const EstimateWithError& e) {
  return Json{{"value", e.value}, {"std_error", e.std_error}, {"draws", e.n_draws}};
}

Json make_report(const std::string& command, Json inputs) {
  Json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["results"] = Json::object();
  return r;
}

void finish(Json& report, std::optional<std::uint64_t> seed) {
  if (seed) report["seed"] = *seed;
  report["tool_version"] = kToolVersion;
}

std::string cell(const Json& v) {
  if (v.is_number_float()) return fmt::format("{:.10g}", v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void pretty_value(std::ostream& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); })) {
    std::vector<std::string> cols;
    for (const auto& row : v)
      for (const auto& [k, _] : row.items())
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    std::vector<std::size_t> width(cols.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto& row : v) {
      auto& line = cells.emplace_back();
      for (std::size_t c = 0; c < cols.size(); ++c) {
        line.push_back(row.contains(cols[c]) ? cell(row[cols[c]]) : "");
        width[c] = std::max(width[c], line.back().size());
      }
    }
    out << pad << key << ":\n";
    const auto print_row = [&](const std::vector<std::string>& items) {
      out << pad << "  ";
      for (std::size_t c = 0; c < items.size(); ++c)
        out << fmt::format("{:<{}}", items[c], width[c] + (c + 1 < items.size() ? 2 : 0));
      out << '\n';
    };
    print_row(cols);
    for (const auto& line : cells) print_row(line);
  } else if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) pretty_value(out, k, x, indent + 2);
  } else if (v.is_array()) {
    std::string joined;
    for (const auto& x : v) joined += (joined.empty() ? "" : " ") + cell(x);
    out << pad << key << ": " << joined << '\n';
  } else {
    out << pad << key << ": " << cell(v) << '\n';
  }
}

void emit(std::ostream& out, const Json& report, bool pretty) {
  if (!pretty) {
    out << report.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : report.items()) pretty_value(out, k, v, 0);
}

ModelSpec load_with_overrides(const std::string& path, const std::vector<std::string>& overrides) {
  ModelSpec model = load_model(path);
  if (!overrides.empty()) model = override_utilities(model, parse_assignments(overrides));
  return model;
}

Json leaf_ids(const Arborescence& tree) {
  Json ids = Json::array();
  for (NodeIndex j : tree.leaves()) ids.push_back(tree.id(j));
  return ids;
}

void require_positive(std::uint64_t draws, const char* what) {
  if (draws == 0) throw Error(ErrorKind::DomainError, std::string(what) + " must be positive");
}

std::vector<double> read_expected(const std::string& path, const Arborescence& tree) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("probabilities") || !doc["probabilities"].is_object())
    throw Error(ErrorKind::ParseError, path + ": expected {\"probabilities\": {id: value, ...}}");
  const Json& probs = doc["probabilities"];
  std::vector<double> out;
  for (NodeIndex j : tree.leaves()) {
    const auto it = probs.find(tree.id(j));
    if (it == probs.end() || !it->is_number())
      throw Error(ErrorKind::ParseError,
                  path + ": /probabilities/" + tree.id(j) + ": missing or not a number");
    out.push_back(it->get<double>());
  }
  return out;
}

void write_csv(const std::string& path, const SampleBatch& batch) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  fmt::memory_buffer buf;
  for (std::size_t c = 0; c < batch.n_leaves(); ++c)
    fmt::format_to(std::back_inserter(buf), "{}{}", c ? "," : "", batch.leaf_order()[c]);
  buf.push_back('\n');
  for (std::uint64_t r = 0; r < batch.n_draws(); ++r) {
    const auto row = batch.row(r);
    for (std::size_t c = 0; c < row.size(); ++c)
      fmt::format_to(std::back_inserter(buf), "{}{:.17g}", c ? "," : "", row[c]);
    buf.push_back('\n');
    if (buf.size() > (1u << 20)) {
      file.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  file.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!file) throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
}

struct Common {
  std::string model;
  std::vector<std::string> utilities;
  bool pretty = false;
  unsigned threads = 0;
};

void add_model(CLI::App* sub, Common& c) {
  sub->add_option("model", c.model, "Model file (JSON)")->required();
  sub->add_option("--utilities", c.utilities, "Utility overrides leafid=value");
  sub->add_flag("--pretty", c.pretty, "Human-readable output");
}

void add_threads(CLI::App* sub, Common& c) {
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

Json utilities_echo(const Common& c) {
  Json u = Json::array();
  for (const auto& s : c.utilities) u.push_back(s);
  return u;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nested logit models: choice probabilities, simulation and diagnostics", "nestlogit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common common;

  auto* validate = app.add_subcommand("validate", "Check a model file and report tree metrics");
  validate->add_option("model", common.model, "Model file (JSON)")->required();
  validate->add_flag("--pretty", common.pretty, "Human-readable output");

  std::string method = "analytic";
  std::uint64_t draws = 0;
  std::optional<std::uint64_t> seed;
  auto* probs = app.add_subcommand("probs", "Choice probabilities");
  add_model(probs, common);
  add_threads(probs, common);
  probs->add_option("--method", method, "analytic | mc | mixed")
      ->check(CLI::IsMember({"analytic", "mc", "mixed"}));
  probs->add_option("--draws", draws, "Draws (mc) or mixing draws K (mixed)");
  probs->add_option("--seed", seed, "Random seed");

  std::string node;
  bool all = false;
  auto* emax_cmd = app.add_subcommand("emax", "Expected maximum utility (inclusive values)");
  add_model(emax_cmd, common);
  emax_cmd->add_option("--node", node, "Nest id (default: root)");
  emax_cmd->add_flag("--all", all, "List the inclusive value of every node");

  std::vector<std::string> at;
  std::optional<double> level;
  std::uint64_t mc_draws = 0;
  auto* cdf_cmd = app.add_subcommand("cdf", "Joint distribution function of the utility shocks");
  add_model(cdf_cmd, common);
  add_threads(cdf_cmd, common);
  cdf_cmd->add_option("--at", at, "Evaluation point leafid=value");
  cdf_cmd->add_option("--level", level, "Common value for alternatives not set by --at");
  cdf_cmd->add_option("--mc", mc_draws, "Also estimate by simulation with this many draws");
  cdf_cmd->add_option("--seed", seed, "Random seed for --mc");

  double step = 1e-5;
  double tolerance = 1e-6;
  auto* grad = app.add_subcommand("grad-check", "Compare choice probabilities with the Emax gradient");
  add_model(grad, common);
  grad->add_option("--step", step, "Central difference step");
  grad->add_option("--tol", tolerance, "Maximum absolute difference");

  std::string out_path;
  auto* sample = app.add_subcommand("sample", "Write simulated utility shocks as CSV");
  add_model(sample, common);
  add_threads(sample, common);
  sample->add_option("--draws", draws, "Number of rows")->required();
  sample->add_option("--seed", seed, "Random seed")->required();
  sample->add_option("--out", out_path, "CSV output path")->required();

  double lambda = 0.5;
  double x = 1.0, t = 1.0, kappa = 0.25;
  double series_tol = 1e-15;
  auto* stable = app.add_subcommand("stable", "Positive stable law P(lambda)");
  stable->require_subcommand(1);
  auto* st_sample = stable->add_subcommand("sample", "Draw from P(lambda)");
  auto* st_density = stable->add_subcommand("density", "Density by Humbert's series");
  auto* st_moment = stable->add_subcommand("moment", "E[Z^kappa]");
  auto* st_laplace = stable->add_subcommand("laplace", "Simulated Laplace transform E[exp(-tZ)]");
  for (auto* s : {st_sample, st_density, st_moment, st_laplace}) {
    s->add_option("--lambda", lambda, "Stability index in (0, 1]")->required();
    s->add_flag("--pretty", common.pretty, "Human-readable output");
  }
  st_sample->add_option("--draws", draws, "Number of draws")->required();
  st_sample->add_option("--seed", seed, "Random seed")->required();
  st_density->add_option("--x", x, "Evaluation point")->required();
  st_density->add_option("--tol", series_tol, "Relative truncation tolerance");
  st_moment->add_option("--kappa", kappa, "Moment order, 0 < kappa < lambda")->required();
  st_laplace->add_option("--t", t, "Transform argument")->required();
  st_laplace->add_option("--draws", draws, "Number of draws")->required();
  st_laplace->add_option("--seed", seed, "Random seed")->required();
  add_threads(st_sample, common);
  add_threads(st_laplace, common);

  std::string expected_path;
  std::uint64_t verify_draws = 1'000'000;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Run the consistency checks on a model");
  add_model(verify, common);
  add_threads(verify, common);
  verify->add_option("--draws", verify_draws, "Monte Carlo draws per check");
  verify->add_option("--seed", verify_seed, "Random seed");
  verify->add_option("--expected", expected_path, "JSON fixture {\"probabilities\": {id: value}}");

  double alpha = 3.0;
  auto* frechet = app.add_subcommand("frechet-corr", "Correlation of Frechet pairs under a Gumbel copula");
  frechet->add_option("--alpha", alpha, "Frechet shape, > 2")->required();
  frechet->add_option("--lambda", lambda, "Dependence parameter in (0, 1]")->required();
  frechet->add_option("--mc", mc_draws, "Also estimate by simulation with this many draws");
  frechet->add_option("--seed", seed, "Random seed for --mc");
  frechet->add_flag("--pretty", common.pretty, "Human-readable output");
  add_threads(frechet, common);

  std::size_t nodes = 20;
  bool single_layer = false;
  std::uint64_t gen_seed = 0;
  auto* generate = app.add_subcommand("generate", "Write a random model");
  generate->add_option("--nodes", nodes, "Maximum number of nodes (>= 2)");
  generate->add_option("--seed", gen_seed, "Random seed")->required();
  generate->add_flag("--single-layer", single_layer, "Root with nests of alternatives only");
  generate->add_option("--out", out_path, "Write the model file here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const SimulationOptions sim{common.threads};

    if (validate->parsed()) {
      const ModelSpec model = load_model(common.model);
      const Arborescence& tree = model.tree();
      const TreeMetrics& m = model.metrics();
      Json report = make_report("validate", Json{{"model", common.model}});
      auto& r = report["results"];
      r["valid"] = true;
      r["node_count"] = tree.size();
      r["leaf_count"] = tree.leaf_count();
      r["nest_count"] = tree.nests().size();
      r["depth"] = *std::max_element(m.depth.begin(), m.depth.end());
      r["height"] = m.height[Arborescence::root()];
      r["single_layer"] = is_single_layer(tree);
      Json nests = Json::array();
      for (NodeIndex n : tree.nests())
        nests.push_back(Json{{"id", tree.id(n)},
                             {"lambda", tree.lambda(n)},
                             {"big_lambda", m.big_lambda[n]},
                             {"depth", m.depth[n]},
                             {"height", m.height[n]}});
      r["nests"] = std::move(nests);
      finish(report, std::nullopt);
      emit(out, report, common.pretty);
      return kOk;
    }

    if (probs->parsed()) {
      const ModelSpec model = load_with_overrides(common.model, common.utilities);
      const Arborescence& tree = model.tree();
      Json inputs{{"model", common.model}, {"method", method}, {"utilities", utilities_echo(common)}};
      std::optional<std::uint64_t> used_seed;
      Json rows = Json::array();
      if (method == "analytic") {
        const auto p = leaf_values(model, forward_probs(model, backward_utils(model)));
        for (std::size_t k = 0; k < p.size(); ++k)
          rows.push_back(Json{{"id", tree.id(tree.leaves()[k])}, {"probability", p[k]}});
      } else {
        if (!seed || draws == 0)
          throw Error(ErrorKind::DomainError, "--method " + method + " requires --draws > 0 and --seed");
        inputs["draws"] = draws;
        used_seed = seed;
        const auto est = method == "mc"
                             ? mc_choice_probs(model, {*seed, kProbsStream}, draws, sim)
                             : mixed_logit_probs(model, {*seed, kMixedStream}, draws, sim);
        for (std::size_t k = 0; k < est.size(); ++k)
          rows.push_back(Json{{"id", tree.id(tree.leaves()[k])},
                              {"probability", est[k].value},
                              {"std_error", est[k].std_error}});
      }
      Json report = make_report("probs", std::move(inputs));
      report["results"]["alternatives"] = std::move(rows);
      finish(report, used_seed);
      emit(out, report, common.pretty);
      return kOk;
    }

    if (emax_cmd->parsed()) {
      const ModelSpec model = load_with_overrides(common.model, common.utilities);
      const Arborescence& tree = model.tree();
      const std::string at_id = node.empty() ? tree.id(Arborescence::root()) : node;
      Json report = make_report("emax", Json{{"model", common.model},
                                             {"node", at_id},
                                             {"utilities", utilities_echo(common)}});
      auto& r = report["results"];
      r["emax"] = emax(model, at_id);
      if (all) {
        const NodeValues u = backward_utils(model);
        Json nodes_json = Json::array();
        for (NodeIndex n = 0; n < tree.size(); ++n)
          nodes_json.push_back(Json{{"id", tree.id(n)},
                                    {"kind", tree.is_nest(n) ? "nest" : "alternative"},
                                    {"u", u[n]}});
        r["nodes"] = std::move(nodes_json);
      }
      finish(report, std::nullopt);
      emit(out, report, common.pretty);
      return kOk;
    }

    if (cdf_cmd->parsed()) {
      const ModelSpec model = load_with_overrides(common.model, common.utilities);
      const Arborescence& tree = model.tree();
      std::vector<double> A(tree.leaf_count(), level.value_or(std::nan("")));
      for (const auto& [id, v] : parse_assignments(at)) A[tree.leaf_position(tree.index_of(id))] = v;
      Json point = Json::array();
      for (std::size_t k = 0; k < A.size(); ++k) {
        if (std::isnan(A[k]))
          throw Error(ErrorKind::DomainError,
                      "no evaluation value for '" + tree.id(tree.leaves()[k]) + "' (use --at or --level)");
        point.push_back(Json{{"id", tree.id(tree.leaves()[k])}, {"A", A[k]}});
      }
      Json inputs{{"model", common.model}, {"utilities", utilities_echo(common)}};
      std::optional<std::uint64_t> used_seed;
      if (mc_draws > 0) {
        if (!seed) throw Error(ErrorKind::DomainError, "--mc requires --seed");
        inputs["mc_draws"] = mc_draws;
        used_seed = seed;
      }
      Json report = make_report("cdf", std::move(inputs));
      auto& r = report["results"];
      r["point"] = std::move(point);
      r["cdf"] = cdf(model, A);
      if (used_seed) r["mc"] = estimate_json(mc_joint_cdf(model, {*seed, kCdfStream}, A, mc_draws, sim));
      finish(report, used_seed);
      emit(out, report, common.pretty);
      return kOk;
    }

    if (grad->parsed()) {
      const ModelSpec model = load_with_overrides(common.model, common.utilities);
      const Arborescence& tree = model.tree();
      if (!(step > 0.0)) throw Error(ErrorKind::DomainError, "--step must be positive");
      const auto analytic = emax_gradient(model);
      const auto fd = finite_difference_gradient(model, step);
      Json rows = Json::array();
      double worst = 0.0;
      for (std::size_t k = 0; k < analytic.size(); ++k) {
        worst = std::max(worst, std::abs(analytic[k] - fd[k]));
        rows.push_back(Json{{"id", tree.id(tree.leaves()[k])},
                            {"probability", analytic[k]},
                            {"finite_difference", fd[k]},
                            {"difference", fd[k] - analytic[k]}});
      }
      Json report = make_report("grad-check", Json{{"model", common.model},
                                                   {"step", step},
                                                   {"tol", tolerance},
                                                   {"utilities", utilities_echo(common)}});
      auto& r = report["results"];
      r["alternatives"] = std::move(rows);
      r["max_abs_difference"] = worst;
      r["passed"] = worst <= tolerance;
      finish(report, std::nullopt);
      emit(out, report, common.pretty);
      if (worst > tolerance) {
        err << fmt::format("grad-check failed: max |difference| {:.3g} > {:.3g}\n", worst, tolerance);
        return kVerificationFailed;
      }
      return kOk;
    }

    if (sample->parsed()) {
      const ModelSpec model = load_with_overrides(common.model, common.utilities);
      const SampleBatch batch = sample_epsilon(model, {*seed, kSampleStream}, draws, sim);
      write_csv(out_path, batch);
      Json report = make_report("sample", Json{{"model", common.model},
                                               {"draws", draws},
                                               {"out", out_path},
                                               {"utilities", utilities_echo(common)}});
      report["results"]["rows"] = batch.n_draws();
      report["results"]["columns"] = leaf_ids(model.tree());
      finish(report, seed);
      emit(out, report, common.pretty);
      return kOk;
    }

    if (stable->parsed()) {
      const StableParam p(lambda);
      if (st_sample->parsed()) {
        Json values = Json::array();
        for (std::uint64_t d = 0; d < draws; ++d) {
          RandomStream rng(SeededStream{*seed, kStableSampleStream}.substream(d));
          values.push_back(stable_sample(rng, p));
        }
        Json report = make_report("stable sample", Json{{"lambda", lambda}, {"draws", draws}});
        report["results"]["values"] = std::move(values);
        finish(report, seed);
        emit(out, report, common.pretty);
      } else if (st_density->parsed()) {
        const SeriesDensity s = stable_density_series(p, x, series_tol);
        Json report = make_report("stable density", Json{{"lambda", lambda}, {"x", x}, {"tol", series_tol}});
        auto& r = report["results"];
        r["density"] = s.value;
        r["terms"] = s.terms;
        r["loss_of_precision"] = s.loss_of_precision;
        if (lambda == 0.5) r["closed_form"] = stable_density_half(x);
        finish(report, std::nullopt);
        emit(out, report, common.pretty);
      } else if (st_moment->parsed()) {
        Json report = make_report("stable moment", Json{{"lambda", lambda}, {"kappa", kappa}});
        report["results"]["moment"] = stable_moment(p, kappa);
        finish(report, std::nullopt);
        emit(out, report, common.pretty);
      } else {
        require_positive(draws, "--draws");
        if (!(t >= 0.0)) throw Error(ErrorKind::DomainError, "--t must be non-negative");
        const auto e = stable_laplace_estimate({*seed, kLaplaceStream}, p, t, draws, sim);
        Json report = make_report("stable laplace", Json{{"lambda", lambda}, {"t", t}, {"draws", draws}});
        auto& r = report["results"];
        r["estimate"] = estimate_json(e);
        r["exact"] = std::exp(-std::pow(t, lambda));
        finish(report, seed);
        emit(out, report, common.pretty);
      }
      return kOk;
    }

    if (verify->parsed()) {
      const ModelSpec model = load_with_overrides(common.model, common.utilities);
      VerifyOptions opts;
      opts.draws = verify_draws;
      opts.stream = {verify_seed, kVerifyStream};
      opts.sim = sim;
      require_positive(verify_draws, "--draws");
      Json inputs{{"model", common.model}, {"draws", verify_draws}, {"utilities", utilities_echo(common)}};
      if (!expected_path.empty()) {
        opts.expected_probabilities = read_expected(expected_path, model.tree());
        inputs["expected"] = expected_path;
      }
      const auto checks = verify_model(model, opts);
      Json rows = Json::array();
      bool ok = true;
      for (const auto& c : checks) {
        ok = ok && c.passed;
        rows.push_back(Json{{"check", c.name},
                            {"passed", c.passed},
                            {"observed", c.observed},
                            {"threshold", c.threshold},
                            {"detail", c.detail}});
      }
      Json report = make_report("verify", std::move(inputs));
      report["results"]["checks"] = std::move(rows);
      report["results"]["all_passed"] = ok;
      finish(report, verify_seed);
      emit(out, report, common.pretty);
      for (const auto& c : checks)
        if (!c.passed)
          err << fmt::format("check failed: {}: observed {:.6g} > threshold {:.6g} ({})\n", c.name,
                             c.observed, c.threshold, c.detail);
      return ok ? kOk : kVerificationFailed;
    }

    if (frechet->parsed()) {
      const FrechetGumbelParams p{alpha, lambda};
      Json inputs{{"alpha", alpha}, {"lambda", lambda}};
      std::optional<std::uint64_t> used_seed;
      if (mc_draws > 0) {
        if (!seed) throw Error(ErrorKind::DomainError, "--mc requires --seed");
        inputs["mc_draws"] = mc_draws;
        used_seed = seed;
      }
      Json report = make_report("frechet-corr", std::move(inputs));
      report["results"]["closed_form"] = frechet_corr(p);
      if (used_seed)
        report["results"]["mc"] = estimate_json(mc_frechet_corr({*seed, kFrechetStream}, p, mc_draws, sim));
      finish(report, used_seed);
      emit(out, report, common.pretty);
      return kOk;
    }

    if (generate->parsed()) {
      if (nodes < 2) throw Error(ErrorKind::DomainError, "--nodes must be at least 2");
      GeneratorOptions g;
      g.max_nodes = nodes;
      const SeededStream s{gen_seed, 0};
      const ModelSpec model = single_layer ? random_single_layer_model(s, 6, 5, g) : random_model(s, g);
      const std::string text = model_to_json(model);
      if (out_path.empty()) {
        out << text;
        return kOk;
      }
      std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
      if (!file || !(file << text)) throw Error(ErrorKind::IoError, "cannot write '" + out_path + "'");
      Json report = make_report("generate", Json{{"nodes", nodes}, {"single_layer", single_layer}, {"out", out_path}});
      report["results"]["node_count"] = model.tree().size();
      report["results"]["leaf_count"] = model.tree().leaf_count();
      finish(report, gen_seed);
      emit(out, report, false);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace nestlogit::cli
