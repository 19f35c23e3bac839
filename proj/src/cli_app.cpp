#include "psmono/cli_app.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "psmono/serialization.hpp"
#include "psmono/verify.hpp"

namespace psmono {

namespace {

using nlohmann::json;

std::vector<double> parse_csv_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(std::stod(piece));
  return out;
}

std::vector<int> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(std::stoi(piece));
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

struct Report {
  json body;
  bool pass = true;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  Report(const std::vector<std::string>& argv, int p, int q, std::uint64_t seed) {
    std::string echo = "psmono";
    for (const auto& a : argv) {
      echo += ' ';
      echo += a;
    }
    body["command"] = echo;
    body["context"] = {{"p", p}, {"q", q}};
    body["results"] = json::array();
    body["seed"] = seed;
  }

  void add(json result, bool result_pass = true) {
    body["results"].push_back(std::move(result));
    pass = pass && result_pass;
  }

  void finalize(bool timing) {
    body["pass"] = pass;
    // Wall clock breaks byte-identical reports, so it is opt-in.
    body["elapsed_ms"] =
        timing ? std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count()
               : 0;
  }

  void emit(const std::string& out_path, std::ostream& fallback, bool to_stdout) {
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << body.dump(2) << '\n';
    } else if (to_stdout) {
      fallback << body.dump(2) << '\n';
    }
  }
};

Omega default_or_parsed_eta(const SliceContext& ctx, const std::string& text) {
  if (text.empty()) return Omega::axis(ctx, 0);
  return omega_from_text(ctx, text);
}

// Evaluator from a function file: either a stem {"F1","F2"} or a full
// polynomial.
struct LoadedFunction {
  std::optional<StemPolynomial> stem;
  std::optional<CliffordPolynomial> full;
  SliceContext ctx{0, 1};

  Multivector operator()(const Point& x) const {
    if (stem) return stem->induce(x);
    return full->evaluate(x.x);
  }
};

LoadedFunction load_function(const json& j) {
  LoadedFunction f;
  if (j.contains("F1")) {
    f.stem = stem_from_json(j);
    f.ctx = f.stem->context();
    return f;
  }
  auto poly = polynomial_from_json(j);
  f.ctx = poly.context();
  if (poly.kind() == CliffordPolynomial::Kind::Slice)
    throw DomainError("function files carry stems or full polynomials");
  f.full = std::move(poly);
  return f;
}

GravGenerator parse_generator(const SliceContext& ctx, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "translation") return GravGenerator::translation(parse_csv_doubles(arg));
  if (kind == "inversion") return GravGenerator::inversion();
  if (kind == "rotation") {
    if (!arg.empty() && arg[0] == 'e') return GravGenerator::modified_rotation(omega_from_text(ctx, arg));
    return GravGenerator::modified_rotation(Omega(ctx, parse_csv_doubles(arg)));
  }
  if (kind == "dilation") return GravGenerator::dilation(std::stod(arg));
  throw DomainError("unknown generator kind: " + kind);
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculus of generalized partial-slice monogenic functions"};
  app.require_subcommand(1);

  int p = 0, q = 2;
  std::uint64_t seed = 0;
  std::string out_path;
  bool timing = false;
  bool json_stdout = false;
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--out", out_path, "Write the JSON run report to this path");
  app.add_flag("--timing", timing, "Record wall-clock in the report");
  app.add_flag("--json", json_stdout, "Print the JSON run report to stdout");

  // ---- fueter ----------------------------------------------------------
  auto* fueter = app.add_subcommand("fueter", "Fueter polynomials and evaluations");
  std::string k_arg, eta_arg, eval_arg;
  bool right_side = false;
  fueter->add_option("--p", p)->required();
  fueter->add_option("--q", q)->required();
  fueter->add_option("--k", k_arg, "Multi-index k0,k1,...")->required();
  fueter->add_option("--eta", eta_arg, "Slice direction, e.g. e2");
  fueter->add_flag("--right", right_side, "Right-sided variant");
  fueter->add_option("--eval", eval_arg, "Evaluate at x0,...,xp,r");

  // ---- ck --------------------------------------------------------------
  auto* ck = app.add_subcommand("ck", "Cauchy-Kovalevskaya extension");
  std::string ck_monomial, ck_file;
  ck->add_option("--p", p)->required();
  ck->add_option("--q", q)->required();
  ck->add_option("--monomial", ck_monomial, "Extend the monomial x^k, k as k0,k1,...");
  ck->add_option("--f0", ck_file, "Extend a polynomial (slice JSON, no radial part)");

  // ---- stem ------------------------------------------------------------
  auto* stem_cmd = app.add_subcommand("stem", "Stem functions");
  std::string gsr_file, induce_file, at_arg;
  double stem_tol = 1e-12;
  stem_cmd->add_option("--check-gsr", gsr_file, "Check the Cauchy-Riemann system");
  stem_cmd->add_option("--induce", induce_file, "Evaluate the induced function");
  stem_cmd->add_option("--at", at_arg, "Point x0,...,x_{p+q}");
  stem_cmd->add_option("--tol", stem_tol, "Residual tolerance");

  // ---- kernel ----------------------------------------------------------
  auto* kernel_cmd = app.add_subcommand("kernel", "Cauchy and derivative kernels");
  bool want_e = false, want_q = false, want_slice_cauchy = false;
  std::string pole_arg;
  kernel_cmd->add_option("--p", p)->required();
  kernel_cmd->add_option("--q", q)->required();
  kernel_cmd->add_flag("--E", want_e, "The Cauchy kernel E");
  kernel_cmd->add_flag("--Q", want_q, "Derivative kernel Q_k");
  kernel_cmd->add_flag("--slice-cauchy", want_slice_cauchy, "Kernel with pole orbit [y]");
  kernel_cmd->add_option("--k", k_arg, "Multi-index for --Q");
  kernel_cmd->add_option("--eta", eta_arg, "Slice direction for --Q");
  kernel_cmd->add_option("--pole", pole_arg, "Pole point for --slice-cauchy");
  kernel_cmd->add_option("--at", at_arg, "Evaluation point")->required();

  // ---- cauchy ----------------------------------------------------------
  auto* cauchy_cmd = app.add_subcommand("cauchy", "Cauchy reproduction integral");
  std::string function_file, slice_eta_arg, center_arg;
  double radius = 1.0, cauchy_tol = 1e-8;
  int nodes = 0;
  bool monte_carlo = false;
  cauchy_cmd->add_option("--function", function_file, "Stem or full polynomial JSON")->required();
  cauchy_cmd->add_option("--slice-eta", slice_eta_arg, "Integration slice");
  cauchy_cmd->add_option("--radius", radius, "Sphere radius");
  cauchy_cmd->add_option("--center", center_arg, "Center on R^{p+1}, comma separated");
  cauchy_cmd->add_option("--nodes", nodes, "Resolution (circle nodes / polar nodes)");
  cauchy_cmd->add_flag("--mc", monte_carlo,
                       "Monte Carlo boundary rule (required for p >= 2); reports std error");
  cauchy_cmd->add_option("--at", at_arg, "Interior evaluation point")->required();
  cauchy_cmd->add_option("--tol", cauchy_tol, "Relative error tolerance");

  // ---- laurent ---------------------------------------------------------
  auto* laurent_cmd = app.add_subcommand("laurent", "Laurent coefficient pairings");
  double rho = 1.0;
  int max_k = 4;
  laurent_cmd->add_option("--function", function_file, "Stem or full polynomial JSON")
      ->required();
  laurent_cmd->add_option("--rho", rho, "Pairing sphere radius");
  laurent_cmd->add_option("--max-k", max_k, "Largest total degree");
  laurent_cmd->add_option("--eta", eta_arg, "Pairing slice");
  laurent_cmd->add_option("--nodes", nodes, "Rule resolution");

  // ---- mobius ----------------------------------------------------------
  auto* mobius_cmd = app.add_subcommand("mobius", "Vahlen matrices and Möbius action");
  std::vector<std::string> gen_args;
  std::string apply_arg, check_file, transform_file;
  mobius_cmd->add_option("--p", p);
  mobius_cmd->add_option("--q", q);
  mobius_cmd->add_option("--gen", gen_args, "Generator, e.g. translation:1,0 (repeatable)");
  mobius_cmd->add_option("--apply", apply_arg, "Apply the composition to a point");
  mobius_cmd->add_option("--check-vahlen", check_file, "Check a matrix JSON file");
  mobius_cmd->add_option("--transform", transform_file, "Conformal transform of a function");
  mobius_cmd->add_option("--at", at_arg, "Point for --transform");

  // ---- verify ----------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
  std::string suite_name;
  int max_deg = -1;
  double tol_override = -1.0;
  bool list_suites = false, run_all = false;
  verify_cmd->add_option("--suite", suite_name, "Suite name");
  verify_cmd->add_option("--max-deg", max_deg, "Degree bound override");
  verify_cmd->add_option("--tol", tol_override, "Main tolerance override");
  verify_cmd->add_flag("--list", list_suites, "List suite names");
  verify_cmd->add_flag("--all", run_all, "Run every suite");

  // ---- maxmod ----------------------------------------------------------
  auto* maxmod_cmd = app.add_subcommand("maxmod", "Maximum-modulus sampling scan");
  int grid = 9, boundary_samples = 400;
  std::string csv_path, domain_file;
  maxmod_cmd->add_option("--function", function_file, "Stem or full polynomial JSON")
      ->required();
  maxmod_cmd->add_option("--radius", radius, "Ball radius");
  maxmod_cmd->add_option("--center", center_arg, "Center on R^{p+1}");
  maxmod_cmd->add_option("--domain", domain_file,
                         "Ball descriptor JSON, alternative to --center/--radius");
  maxmod_cmd->add_option("--grid", grid, "Interior grid points per axis");
  maxmod_cmd->add_option("--boundary-samples", boundary_samples, "Boundary sample count");
  maxmod_cmd->add_option("--csv", csv_path, "Write sampled data as CSV");

  std::vector<const char*> cargs;
  cargs.push_back("psmono");
  for (const auto& a : argv) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    Report report(argv, p, q, seed);

    if (*fueter) {
      const SliceContext ctx(p, q);
      const Omega eta = default_or_parsed_eta(ctx, eta_arg);
      const MultiIndex k(parse_csv_ints(k_arg));
      const Side side = right_side ? Side::Right : Side::Left;
      const auto element = fueter_polynomial(ctx, k, eta, side);
      json result{{"k", k.k}};
      if (!eval_arg.empty()) {
        const auto coords = parse_csv_doubles(eval_arg);
        const Multivector value = element.poly.evaluate(coords);
        out << to_text(value) << '\n';
        result["value"] = to_json(value);
        result["text"] = to_text(value);
      } else {
        const json pj = to_json(element.poly);
        out << pj.dump(2) << '\n';
        result["polynomial"] = pj;
      }
      report.add(std::move(result));
    } else if (*ck) {
      const SliceContext ctx(p, q);
      std::optional<StemPolynomial> stem;
      if (!ck_monomial.empty())
        stem = monomial_ck(ctx, MultiIndex(parse_csv_ints(ck_monomial)));
      else if (!ck_file.empty())
        stem = ck_extension(polynomial_from_json(load_json_file(ck_file)));
      else
        throw DomainError("ck needs --monomial or --f0");
      const json sj = to_json(*stem);
      out << sj.dump(2) << '\n';
      report.add({{"stem", sj}});
    } else if (*stem_cmd) {
      if (!gsr_file.empty()) {
        const auto stem = stem_from_json(load_json_file(gsr_file));
        const auto [r1, r2] = stem.gsr_residual();
        const double residual =
            std::max(r1.max_abs_coefficient(), r2.max_abs_coefficient());
        const bool pass = residual <= stem_tol;
        out << (pass ? "GSR: yes" : "GSR: no") << " (residual " << residual << ")\n";
        report.add({{"check", "gsr"}, {"residual", residual}, {"tolerance", stem_tol}}, pass);
      } else if (!induce_file.empty()) {
        if (at_arg.empty()) throw DomainError("--induce needs --at");
        const auto stem = stem_from_json(load_json_file(induce_file));
        const Multivector value = stem.induce(Point(parse_csv_doubles(at_arg)));
        out << to_text(value) << '\n';
        report.add({{"value", to_json(value)}, {"text", to_text(value)}});
      } else {
        throw DomainError("stem needs --check-gsr or --induce");
      }
    } else if (*kernel_cmd) {
      const SliceContext ctx(p, q);
      const Point x(parse_csv_doubles(at_arg));
      Multivector value(ctx.n());
      if (want_e) {
        value = cauchy_kernel(ctx, x);
      } else if (want_q) {
        if (k_arg.empty()) throw DomainError("--Q needs --k");
        const MultiIndex k(parse_csv_ints(k_arg));
        const auto eta = eta_arg.empty() ? std::optional<Omega>{}
                                         : std::optional<Omega>{omega_from_text(ctx, eta_arg)};
        value = q_full(ctx, k, x, eta);
      } else if (want_slice_cauchy) {
        if (pole_arg.empty()) throw DomainError("--slice-cauchy needs --pole");
        value = slice_cauchy_kernel(ctx, Point(parse_csv_doubles(pole_arg)), x);
      } else {
        throw DomainError("kernel needs one of --E, --Q, --slice-cauchy");
      }
      out << to_text(value) << '\n';
      report.add({{"value", to_json(value)}, {"text", to_text(value)}});
    } else if (*cauchy_cmd) {
      const auto fn = load_function(load_json_file(function_file));
      const SliceContext ctx = fn.ctx;
      const Omega eta = default_or_parsed_eta(ctx, slice_eta_arg);
      std::vector<double> center(static_cast<std::size_t>(ctx.p + 1), 0.0);
      if (!center_arg.empty()) center = parse_csv_doubles(center_arg);
      const auto rule =
          monte_carlo
              ? boundary_rule_monte_carlo(ctx, eta, center, radius,
                                          nodes > 0 ? nodes : 4096, seed)
              : boundary_rule(ctx, eta, center, radius, nodes);
      const Point x(parse_csv_doubles(at_arg));
      const auto integral =
          cauchy_integral_with_error([&](const Point& y) { return fn(y); }, rule, x);
      const Multivector reference = fn(x);
      const double abs_err = (integral.value - reference).norm();
      const double rel = abs_err / (1.0 + reference.norm());
      const bool pass = rel <= cauchy_tol;
      json result{{"value", to_json(integral.value)},
                  {"reference", to_json(reference)},
                  {"abs_err", abs_err},
                  {"rel_err", rel},
                  {"nodes", rule.nodes().size()}};
      if (rule.monte_carlo()) result["std_error"] = integral.std_error;
      out << result.dump(2) << '\n';
      report.add(std::move(result), pass);
    } else if (*laurent_cmd) {
      const auto fn = load_function(load_json_file(function_file));
      const SliceContext ctx = fn.ctx;
      const Omega eta = default_or_parsed_eta(ctx, eta_arg);
      std::vector<double> center(static_cast<std::size_t>(ctx.p + 1), 0.0);
      const auto rule = boundary_rule(ctx, eta, center, rho, nodes);
      const auto coeffs =
          laurent_coefficients([&](const Point& y) { return fn(y); }, rule, max_k);
      json aj = json::object(), bj = json::object();
      auto key_of = [](const MultiIndex& k) {
        std::string s;
        for (int v : k.k) {
          if (!s.empty()) s += ',';
          s += std::to_string(v);
        }
        return s;
      };
      for (const auto& [k, v] : coeffs.regular) aj[key_of(k)] = to_json(v);
      for (const auto& [k, v] : coeffs.principal) bj[key_of(k)] = to_json(v);
      json result{{"a", aj}, {"b", bj}, {"rho", rho}, {"nodes", rule.nodes().size()}};
      out << result.dump(2) << '\n';
      report.add(std::move(result));
    } else if (*mobius_cmd) {
      // The transform inherits the context of the function file.
      std::optional<LoadedFunction> fn;
      if (!transform_file.empty()) fn = load_function(load_json_file(transform_file));
      const SliceContext ctx = fn ? fn->ctx : SliceContext(p, q);
      report.body["context"] = {{"p", ctx.p}, {"q", ctx.q}};
      if (!check_file.empty()) {
        const auto m = vahlen_from_json(ctx, load_json_file(check_file));
        const auto vr = check_vahlen(m);
        json result{{"ok", vr.ok},
                    {"failed_condition",
                     vr.failed_condition ? std::string(1, vr.failed_condition) : "none"},
                    {"membership_basis", vr.membership_basis}};
        out << result.dump(2) << '\n';
        report.add(std::move(result), vr.ok);
      } else {
        if (gen_args.empty()) throw DomainError("mobius needs --gen or --check-vahlen");
        VahlenMatrix m = VahlenMatrix::from_generator(ctx, parse_generator(ctx, gen_args[0]));
        for (std::size_t i = 1; i < gen_args.size(); ++i)
          m = m * VahlenMatrix::from_generator(ctx, parse_generator(ctx, gen_args[i]));
        if (!apply_arg.empty()) {
          const Point image = mobius_apply(ctx, m, Point(parse_csv_doubles(apply_arg)));
          const json pj = to_json(image);
          out << pj.dump() << '\n';
          report.add({{"image", pj}});
        } else if (fn) {
          if (at_arg.empty()) throw DomainError("--transform needs --at");
          const Multivector value = conformal_transform(
              ctx, m, [&](const Point& y) { return (*fn)(y); },
              Point(parse_csv_doubles(at_arg)));
          out << to_text(value) << '\n';
          report.add({{"value", to_json(value)}, {"text", to_text(value)}});
        } else {
          throw DomainError("mobius needs --apply, --transform, or --check-vahlen");
        }
      }
    } else if (*verify_cmd) {
      if (list_suites) {
        for (const auto& name : suite_names()) out << name << '\n';
      } else {
        std::vector<std::string> to_run;
        if (run_all)
          to_run = suite_names();
        else if (!suite_name.empty())
          to_run.push_back(suite_name);
        else
          throw DomainError("verify needs --suite, --all, or --list");
        SuiteOptions options;
        options.seed = seed;
        options.max_degree = max_deg;
        if (tol_override > 0) options.tolerance = tol_override;
        for (const auto& name : to_run) {
          if (!has_suite(name)) {
            err << "unknown suite: " << name << '\n';
            return 2;
          }
          const auto sr = run_suite(name, options);
          json checks = json::array();
          for (const auto& c : sr.checks) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << sr.suite << '/' << c.name
                << "  max_err=" << c.max_err << " tol=" << c.tolerance
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
            checks.push_back({{"name", c.name},
                              {"pass", c.pass},
                              {"max_err", c.max_err},
                              {"tolerance", c.tolerance},
                              {"detail", c.detail}});
          }
          report.add({{"suite", sr.suite}, {"pass", sr.pass}, {"checks", checks}}, sr.pass);
        }
      }
    } else if (*maxmod_cmd) {
      const auto fn = load_function(load_json_file(function_file));
      const SliceContext ctx = fn.ctx;
      std::vector<double> center(static_cast<std::size_t>(ctx.p + 1), 0.0);
      if (!center_arg.empty()) center = parse_csv_doubles(center_arg);
      if (!domain_file.empty()) {
        const json dj = load_json_file(domain_file);
        const auto descriptor = domain_from_json(ctx, dj);  // validation
        if (descriptor.kind() != DomainDescriptor::Kind::Ball)
          throw DomainError("maxmod scans ball domains");
        center = dj.at("center").get<std::vector<double>>();
        radius = dj.at("radius").get<double>();
      }
      const auto scan = max_modulus_scan([&](const Point& y) { return fn(y); }, ctx, center,
                                         radius, grid, boundary_samples, seed);
      json result{{"interior_max", scan.interior_max},
                  {"interior_argmax", to_json(scan.interior_argmax)},
                  {"boundary_max", scan.boundary_max},
                  {"boundary_argmax", to_json(scan.boundary_argmax)},
                  {"boundary_dominates", scan.boundary_dominates},
                  {"interior_samples", scan.interior_samples},
                  {"boundary_samples", scan.boundary_samples}};
      out << result.dump(2) << '\n';
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "kind,abs_f";
        for (int i = 0; i < ctx.ambient_dim(); ++i) csv << ",x" << i;
        csv << '\n';
        auto row = [&](const char* kind, double v, const Point& pt) {
          csv << kind << ',' << v;
          for (int i = 0; i < ctx.ambient_dim(); ++i) csv << ',' << pt[i];
          csv << '\n';
        };
        row("interior_max", scan.interior_max, scan.interior_argmax);
        row("boundary_max", scan.boundary_max, scan.boundary_argmax);
      }
      report.add(std::move(result));
    }

    report.finalize(timing);
    report.emit(out_path, out, json_stdout);
    return report.pass ? 0 : 1;
  } catch (const CLI::Error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace psmono
