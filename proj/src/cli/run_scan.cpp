#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "logcave/body.hpp"
#include "logcave/cli.hpp"
#include "logcave/lr.hpp"
#include "logcave/parse.hpp"
#include "logcave/toeplitz.hpp"

namespace logcave {

namespace {

Json point_json(const RationalPoint& p) {
  Json j = Json::array();
  for (const auto& x : p) j.push_back(to_string(x));
  return j;
}

Json expansion_json(const std::map<Partition, BigInt>& terms) {
  Json j = Json::array();
  for (const auto& [p, c] : terms) j.push_back({{"partition", p.to_string()}, {"coefficient", c.get_str()}});
  return j;
}

struct ScanArgs {
  int bound = -1;
  int rank = -1;
  int pq = 2;
  int jobs = 1;
  int kmax = 3;
  int n = 3;
  int k = 1;
  std::size_t count = 200;
  int length = 12;
  std::uint64_t seed = 1;
};

struct Runner {
  std::string out_path;
  ScanArgs scan;
  std::shared_ptr<LrCache> cache;

  LrCache* lr_cache() {
    if (!cache) cache = LrCache::from_environment();
    return cache.get();
  }
  ScanOptions options() const { return {scan.jobs, scan.pq}; }
  int bound_or(int fallback) const { return scan.bound >= 0 ? scan.bound : fallback; }
  int rank_or(int fallback) const { return scan.rank >= 0 ? scan.rank : fallback; }
};

CommandResult scan_result(const ConcavityReport& report) {
  CommandResult r;
  r.document = {{"command", "verify"}};
  r.document.update(to_json(report));
  r.exit_code = report.violations.empty() ? kExitClean : kExitViolations;
  return r;
}

void require_positive(int value, const char* name) {
  if (value < 1) throw std::invalid_argument(std::string("--") + name + " must be positive");
}

}  // namespace

CommandResult execute(const std::vector<std::string>& args) {
  CLI::App app{"Exact verification of log-concavity for representation multiplicities", "logcave"};
  app.require_subcommand(1);
  Runner run;
  CommandResult result;
  std::function<CommandResult()> action;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", run.out_path, "Write the JSON report (and CSV summary) here"); };

  // schur
  std::string shape_text, schur_basis = "monomial";
  int vars = 0;
  auto* schur = app.add_subcommand("schur", "Skew Schur polynomial s_{lambda/mu}(z_1..z_n)");
  schur->add_option("--shape", shape_text, "Skew shape, e.g. 3,1/1")->required();
  schur->add_option("--vars,-n", vars, "Number of variables")->required();
  schur->add_option("--basis", schur_basis, "monomial or schur")->check(CLI::IsMember({"monomial", "schur"}));
  add_out(schur);
  schur->callback([&] {
    action = [&] {
      require_positive(vars, "vars");
      const SkewShape shape = parse_skew_shape(shape_text);
      const MonomialExpansion m = skew_schur(shape, vars);
      CommandResult r;
      r.document = {{"command", "schur"}, {"shape", shape.to_string()}, {"vars", vars}, {"basis", schur_basis}};
      r.document["terms"] = schur_basis == "schur" ? expansion_json(to_schur_basis(m).terms()) : expansion_json(m.terms());
      r.document["value_at_ones"] = m.evaluate_at_ones().get_str();
      r.document["params"] = {{"shape", shape.to_string()}, {"vars", vars}, {"basis", schur_basis}};
      return r;
    };
  });

  // lr
  std::string lam_text, mu_text, nu_text;
  int lr_rank = 0;
  bool triple = false;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu nu} for U(n)");
  lr->add_option("--lam,--lambda", lam_text, "Weight, e.g. 2,1,0@3")->required();
  lr->add_option("--mu", mu_text, "Weight")->required();
  lr->add_option("--nu", nu_text, "Weight")->required();
  lr->add_option("--rank", lr_rank, "Pad plain partitions to this rank");
  lr->add_flag("--triple", triple, "Report the triple invariant c_{lambda mu nu} instead");
  add_out(lr);
  lr->callback([&] {
    action = [&] {
      const GLWeight l = parse_weight(lam_text, lr_rank), m = parse_weight(mu_text, lr_rank),
                     n = parse_weight(nu_text, lr_rank);
      const BigInt value = triple ? triple_invariant(WeightTriple(l, m, n), run.lr_cache())
                                  : lr_coefficient(l, m, n, run.lr_cache());
      CommandResult r;
      r.document = {{"command", "lr"},
                    {"lambda", l.to_string()},
                    {"mu", m.to_string()},
                    {"nu", n.to_string()},
                    {"quantity", triple ? "triple_invariant" : "lr_coefficient"},
                    {"value", value.get_str()}};
      r.document["params"] = {{"lambda", l.to_string()}, {"mu", m.to_string()}, {"nu", n.to_string()}, {"triple", triple}};
      return r;
    };
  });

  // restrict
  std::string rlam, rmu;
  int rn = 0, rk = 0;
  auto* restrict_cmd = app.add_subcommand("restrict", "dim Hom_{U(k)}(V^mu, V^lambda) for U(k) in U(n)");
  restrict_cmd->add_option("--lam,--lambda", rlam, "Partition with at most n parts")->required();
  restrict_cmd->add_option("--mu", rmu, "Partition with at most k parts")->required();
  restrict_cmd->add_option("--n", rn, "Rank of the big group")->required();
  restrict_cmd->add_option("--k", rk, "Rank of the subgroup")->required();
  add_out(restrict_cmd);
  restrict_cmd->callback([&] {
    action = [&] {
      const Partition l = parse_partition(rlam), m = parse_partition(rmu);
      CommandResult r;
      r.document = {{"command", "restrict"},
                    {"lambda", l.to_string()},
                    {"mu", m.to_string()},
                    {"n", rn},
                    {"k", rk},
                    {"value", restriction_multiplicity(l, m, rn, rk).get_str()}};
      r.document["params"] = {{"lambda", l.to_string()}, {"mu", m.to_string()}, {"n", rn}, {"k", rk}};
      return r;
    };
  });

  // toeplitz
  std::string seq_text, weight_text, check_kind;
  int t_rank = 0, check_bound = 6;
  auto* toeplitz = app.add_subcommand("toeplitz", "Toeplitz minors and Schur coefficients of prod_i x(z_i)");
  toeplitz->add_option("--seq,--sequence", seq_text, "e.g. 0:1,1:2,2:1 or 1,2,1")->required();
  toeplitz->add_option("--weight", weight_text, "Weight lambda for the coefficient det[x_{lambda_i-i+j}]");
  toeplitz->add_option("--rank", t_rank, "Rank n for --weight padding and --check schur");
  toeplitz->add_option("--check", check_kind, "2x2 or schur")->check(CLI::IsMember({"2x2", "schur"}));
  toeplitz->add_option("--bound", check_bound, "Weight-size window for --check schur");
  add_out(toeplitz);
  toeplitz->callback([&] {
    action = [&] {
      const FiniteSequence x = parse_sequence(seq_text);
      if (x.empty()) throw std::invalid_argument("the sequence is identically zero");
      CommandResult r;
      r.document = {{"command", "toeplitz"}, {"sequence", x.to_string()}};
      Json params = {{"sequence", x.to_string()}};
      if (!weight_text.empty()) {
        const GLWeight w = parse_weight(weight_text, t_rank);
        r.document["weight"] = w.to_string();
        r.document["coefficient"] = to_string(toeplitz_schur_coefficient(x, w));
        r.document["product_coefficient"] = to_string(product_schur_coefficient(x, w));
        params["weight"] = w.to_string();
      }
      if (check_kind == "2x2") {
        const TwoByTwoResult two = two_by_two_scan(x);
        r.document["check"] = {{"kind", "2x2"}, {"pass", two.pass}};
        if (two.failing_index) r.document["check"]["failing_index"] = *two.failing_index;
        if (!two.pass) r.exit_code = kExitViolations;
      } else if (check_kind == "schur") {
        require_positive(t_rank, "rank");
        if (check_bound < 0) throw std::invalid_argument("--bound must be nonnegative");
        const CharacterPositivityResult c = character_positivity_check(x, t_rank, check_bound);
        Json cj = {{"kind", "schur"}, {"pass", c.pass}, {"checked", c.checked}};
        if (c.failing) cj["failing"] = c.failing->to_string(), cj["failing_value"] = to_string(c.failing_value);
        r.document["check"] = cj;
        params["rank"] = t_rank;
        params["bound"] = check_bound;
        if (!c.pass) r.exit_code = kExitViolations;
      }
      if (!check_kind.empty()) params["check"] = check_kind;
      r.document["params"] = params;
      return r;
    };
  });

  // body
  int dim = 0, kmax = 4;
  std::string basis_text;
  auto* body = app.add_subcommand("body", "Inner approximation of the convex body of a polynomial subspace");
  body->add_option("--dim", dim, "Number of variables d")->required();
  body->add_option("--basis", basis_text, "Spanning polynomials separated by ';', e.g. \"1; x; y\"")->required();
  body->add_option("--kmax", kmax, "Highest power S^k used");
  add_out(body);
  body->callback([&] {
    action = [&] {
      require_positive(dim, "dim");
      require_positive(kmax, "kmax");
      const PolynomialSubspace s(dim, parse_polynomial_list(basis_text, dim));
      const BodyApprox b = body_approximation(s, kmax);
      CommandResult r;
      r.document = {{"command", "body"}, {"dim", dim}, {"kmax", kmax}};
      Json basis = Json::array();
      for (const auto& f : s.basis()) basis.push_back(f.to_string());
      r.document["basis"] = basis;
      Json points = Json::array(), vertices = Json::array(), lattice = Json::array();
      for (const auto& p : b.points) points.push_back(point_json(p));
      for (const auto& v : b.hull.vertices()) vertices.push_back(point_json(v));
      for (const auto& row : b.lattice) {
        Json jr = Json::array();
        for (const auto& x : row) jr.push_back(x.get_str());
        lattice.push_back(jr);
      }
      r.document["points"] = points;
      r.document["hull_vertices"] = vertices;
      r.document["lattice"] = lattice;
      r.document["covolume"] = b.covolume.get_str();
      r.document["euclidean_volume"] = to_string(b.hull.volume());
      if (b.hull.dimension() == dim && b.covolume > 0) {
        const Rational vol = normalized_volume(b);
        r.document["volume"] = to_string(vol);
        r.document["degree"] = to_string(vol * Rational(factorial(static_cast<unsigned long>(dim))));
      } else {
        r.document["volume"] = nullptr;
        r.document["degree"] = nullptr;
      }
      r.document["stable"] = b.stable;
      r.document["dimensions"] = b.dimensions;
      if (kmax >= dim + 1) {
        const DegreeEstimate e = degree_estimate(b.dimensions, dim);
        Json residuals = Json::array();
        for (const auto& x : e.residuals) residuals.push_back(to_string(x));
        r.document["hilbert_degree"] = {{"degree", to_string(e.degree)}, {"stable", e.stable}, {"residuals", residuals}};
      }
      r.document["params"] = {{"dim", dim}, {"basis", basis_text}, {"kmax", kmax}};
      return r;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive or seeded log-concavity scans");
  verify->require_subcommand(1);
  auto add_scan = [&](const std::string& name, const std::string& help, std::function<CommandResult()> body_fn,
                      std::initializer_list<std::string> extra) {
    auto* sub = verify->add_subcommand(name, help);
    sub->add_option("--bound", run.scan.bound, "Size or entry bound");
    sub->add_option("--rank", run.scan.rank, "Rank bound");
    sub->add_option("--pq", run.scan.pq, "Use coprime p, q with p + q <= this (2: midpoints)");
    sub->add_option("--jobs,-j", run.scan.jobs, "Worker threads");
    sub->add_option("--seed", run.scan.seed, "Seed for randomized scans");
    for (const auto& e : extra) {
      if (e == "kmax") sub->add_option("--kmax", run.scan.kmax, "Largest dilation k");
      if (e == "n") sub->add_option("--n", run.scan.n, "Rank of U(n)");
      if (e == "k") sub->add_option("--k", run.scan.k, "Rank of the subgroup U(k)");
      if (e == "count") sub->add_option("--count", run.scan.count, "Number of random sequences");
      if (e == "length") sub->add_option("--length", run.scan.length, "Maximum sequence length");
    }
    add_out(sub);
    sub->callback([&, body_fn] { action = body_fn; });
  };
  add_scan("theorem1", "Monomial positivity of skew Schur midpoint differences",
           [&] { return scan_result(theorem1_scan(run.bound_or(4), run.options())); }, {});
  add_scan("slm", "Schur positivity of skew Schur midpoint differences",
           [&] { return scan_result(slm_scan(run.bound_or(4), run.options())); }, {});
  add_scan("conj1", "Log-concavity of triple tensor invariants",
           [&] { return scan_result(conjecture1_scan(run.bound_or(2), run.rank_or(2), run.options(), run.lr_cache())); }, {});
  add_scan("saturation", "Saturation and the power bound c_k <= c^k", [&] {
    return scan_result(saturation_sweep(run.rank_or(3), run.bound_or(4), run.scan.kmax, run.options(), run.lr_cache()));
  }, {"kmax"});
  add_scan("logv", "Inclusion of V^mu (x) V^nu in the square of the midpoint representation",
           [&] { return scan_result(logv_scan(run.bound_or(3), run.rank_or(2), run.options(), run.lr_cache())); }, {});
  add_scan("alpha", "Monotonicity under the circulant alpha-matrix",
           [&] { return scan_result(alpha_scan(run.bound_or(3), run.rank_or(2), run.options(), run.lr_cache())); }, {});
  add_scan("weyl", "Log-concavity of dim V^lambda",
           [&] { return scan_result(weyl_logconcavity_scan(run.rank_or(3), run.bound_or(4), run.options())); }, {});
  add_scan("restriction", "Log-concavity of restriction multiplicities U(k) in U(n)", [&] {
    return scan_result(restriction_logconcavity_scan(run.scan.n, run.scan.k, run.bound_or(4), run.options()));
  }, {"n", "k"});
  add_scan("convolution", "Convolution of random log-concave sequences", [&] {
    return scan_result(convolution_scan(run.scan.count, run.scan.length, run.scan.seed, run.options()));
  }, {"count", "length"});

  // replay
  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a report and compare digests");
  replay->add_option("report", replay_path, "Report JSON with an embedded manifest")->required();
  add_out(replay);
  replay->callback([&] {
    action = [&] {
      const Json stored = read_report(replay_path);
      if (!stored.contains("manifest")) throw std::invalid_argument(replay_path + " has no manifest");
      const RunManifest m = manifest_from_json(stored["manifest"]);
      if (m.command_line.size() < 2 || m.command_line[1] == "replay")
        throw std::invalid_argument("manifest does not record a replayable command");
      std::vector<std::string> again;
      for (std::size_t i = 0; i < m.command_line.size(); ++i) {
        if (m.command_line[i] == "--out") {
          ++i;
          continue;
        }
        again.push_back(m.command_line[i]);
      }
      const CommandResult rerun = execute(again);
      const std::string digest = report_digest(rerun.document);
      CommandResult r;
      r.document = {{"command", "replay"},
                    {"report", replay_path},
                    {"recorded_digest", m.output_digest},
                    {"stored_digest", report_digest(stored)},
                    {"replayed_digest", digest},
                    {"match", digest == m.output_digest && canonical_text(stored) == canonical_text(rerun.document)}};
      r.document["params"] = {{"report", replay_path}};
      r.exit_code = r.document["match"].get<bool>() ? kExitClean : kExitViolations;
      return r;
    };
  });

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    result.help = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.help = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  if (!action) throw std::invalid_argument("no command given");
  if (run.scan.jobs < 1) throw std::invalid_argument("--jobs must be positive");
  if (run.scan.pq < 2) throw std::invalid_argument("--pq must be at least 2");
  CommandResult r = action();
  r.jobs = run.scan.jobs;
  if (!run.out_path.empty()) r.out_path = run.out_path;
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult r;
  try {
    r = execute(args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (r.help) {
    out << *r.help;
    return kExitClean;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.document["runtime_ms"] = ms;
  RunManifest m;
  m.command_line = args;
  m.params = r.document.value("params", Json::object());
  m.wall_time_ms = ms;
  m.jobs = r.jobs;
  attach_manifest(r.document, m);
  try {
    if (r.out_path) {
      write_report(*r.out_path, r.document);
      std::string summary = r.document.value("command", std::string());
      if (r.document.contains("scan"))
        summary = r.document["scan"].get<std::string>() + ": " + std::to_string(r.document["checked"].get<std::uint64_t>()) +
                  " instances, " + std::to_string(r.document["violations"].size()) + " violations";
      out << summary << " -> " << *r.out_path << '\n';
    } else {
      out << r.document.dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return r.exit_code;
}

}  // namespace logcave
