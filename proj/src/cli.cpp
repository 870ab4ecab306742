#include "qgf/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgf/errors.hpp"
#include "qgf/qbasis.hpp"
#include "qgf/qcore.hpp"
#include "qgf/qoperators.hpp"
#include "qgf/verify.hpp"

namespace qgf::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string q;
  std::string x;
  std::string n; // empty: command default
  std::string k;
  int m = 1;
  std::string f = "const1";
  double tol = 1e-12;
  std::size_t k_max = 0;
  std::size_t n_max = 16;
  std::size_t order = 32;
  std::size_t terms = 64;
  std::string mode;
  std::string format;
  bool json_report = false;
  bool serial = false;
};

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

int single_int(const std::string &spec, const char *flag) {
  const auto values = parse_int_range(spec);
  if (values.size() != 1)
    throw std::invalid_argument(std::string(flag) + " takes a single integer here");
  return values.front();
}

bool is_grid(const std::string &spec) { return spec.find(':') != std::string::npos; }

bool exact_mode(const Config &cfg) {
  if (cfg.mode == "exact")
    return true;
  if (cfg.mode == "float")
    return false;
  throw std::invalid_argument("--mode must be exact or float");
}

std::string render(const Rational &v, bool exact) { return exact ? v.str() : format_double(v.to_double()); }

Rational require_open_unit_q(const Config &cfg) {
  const Rational q = Rational::parse(cfg.q);
  if (q.sign() <= 0 || q >= Rational(1))
    throw DomainError("q must satisfy 0<q<1");
  return q;
}

// qnum --------------------------------------------------------------------

int cmd_qnum(const std::string &which, const Config &cfg, std::ostream &out) {
  QContext ctx(Rational::parse(cfg.q));
  Rational v;
  if (which == "int") {
    v = q_integer(ctx, single_int(cfg.k, "--k"));
  } else if (which == "fact") {
    v = q_factorial(ctx, single_int(cfg.k, "--k"));
  } else if (which == "binom") {
    v = q_binomial(ctx, single_int(cfg.n, "--n"), single_int(cfg.k, "--k"));
  } else {
    v = q_beta(ctx, cfg.m, single_int(cfg.n, "--n"));
  }
  out << v.str();
  if (!exact_mode(cfg))
    out << ' ' << format_double(v.to_double());
  out << '\n';
  return kOk;
}

// basis -------------------------------------------------------------------

int cmd_basis(BasisFamily family, const Config &cfg, std::ostream &out) {
  QContext ctx(Rational::parse(cfg.q));
  const bool exact = exact_mode(cfg);
  const int n = single_int(cfg.n, "--n");
  const int k = single_int(cfg.k, "--k");
  if (cfg.x.empty())
    throw std::invalid_argument("--x is required");
  if (!is_grid(cfg.x)) {
    out << render(evaluate_basis(ctx, family, k, n, Rational::parse(cfg.x)).value, exact) << '\n';
    return kOk;
  }
  const auto xs = parse_grid(cfg.x);
  std::vector<Rational> values;
  values.reserve(xs.size());
  for (const auto &x : xs)
    values.push_back(evaluate_basis(ctx, family, k, n, x).value);
  out << "x,value\n";
  for (std::size_t i = 0; i < xs.size(); ++i)
    out << xs[i].str() << ',' << render(values[i], exact) << '\n';
  return kOk;
}

// op ----------------------------------------------------------------------

json result_json(const OperatorResult &r) {
  json j;
  if (r.exact)
    j["value"] = r.exact->str();
  else
    j["value"] = r.value;
  j["terms_used"] = r.terms_used;
  j["residual"] = r.residual_estimate;
  j["converged"] = r.converged;
  return j;
}

int cmd_op(BasisFamily family, const Config &cfg, std::ostream &out) {
  const Rational q = Rational::parse(cfg.q);
  static_cast<void>(QContext{q}); // validates q before any grid work
  const auto f = FunctionSpec::parse(cfg.f);
  if (!f)
    throw std::invalid_argument("unknown function '" + cfg.f + "'");
  if (cfg.x.empty())
    throw std::invalid_argument("--x is required");
  const bool exact = exact_mode(cfg);

  const auto ns = parse_int_range(cfg.n);
  const auto xs = parse_grid(cfg.x);
  std::vector<OperatorRequest> requests;
  for (int n : ns)
    for (const auto &x : xs) {
      OperatorRequest req;
      req.family = family;
      req.f = *f;
      req.n = n;
      req.x = x;
      req.mode = exact ? EvalMode::exact : EvalMode::floating;
      req.control = {cfg.tol, cfg.k_max};
      req.exact_terms = cfg.terms;
      requests.push_back(std::move(req));
    }
  const auto results =
      evaluate_operator_grid(q, requests, cfg.serial ? Execution::serial : Execution::parallel);

  const bool grid = requests.size() > 1;
  const std::string format = cfg.format.empty() ? (grid ? "csv" : "json") : cfg.format;
  if (format == "json") {
    if (grid) {
      json arr = json::array();
      for (std::size_t i = 0; i < results.size(); ++i) {
        json j;
        j["n"] = requests[i].n;
        j["x"] = requests[i].x.str();
        const json fields = result_json(results[i]);
        for (const auto &[key, val] : fields.items())
          j[key] = val;
        arr.push_back(std::move(j));
      }
      out << arr.dump() << '\n';
    } else {
      out << result_json(results.front()).dump() << '\n';
    }
  } else if (format == "csv") {
    out << "n,x,value,terms,residual\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto &r = results[i];
      out << requests[i].n << ',' << requests[i].x.str() << ','
          << (r.exact ? r.exact->str() : format_double(r.value)) << ',' << r.terms_used << ','
          << format_double(r.residual_estimate) << '\n';
    }
  } else {
    throw std::invalid_argument("--format must be json or csv");
  }

  for (const auto &r : results)
    if (!r.converged)
      return kNotConverged;
  return kOk;
}

// verify ------------------------------------------------------------------

json report_json(const VerificationReport &r) {
  json j;
  j["identity"] = std::string(to_string(r.identity));
  j["q"] = r.q.str();
  if (r.x)
    j["x"] = r.x->str();
  if (r.identity != Identity::exp_identity)
    j[r.identity == Identity::bernstein_gf ? "k" : "n"] = r.fixed_index;
  j["bound"] = r.bound;
  j["checks_run"] = r.checks_run;
  json failures = json::array();
  for (const auto &f : r.failures) {
    json fj;
    fj["index"] = f.index;
    fj["expected"] = f.expected.str();
    fj["got"] = f.got.str();
    if (!f.label.empty())
      fj["label"] = f.label;
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  j["passed"] = r.passed();
  return j;
}

std::vector<Rational> xs_or_default(const Config &cfg) {
  return cfg.x.empty() ? default_points() : parse_grid(cfg.x);
}

std::vector<VerifyTask> tasks_for(Identity id, const Config &cfg, bool defaults_only) {
  if (defaults_only) {
    auto tasks = default_tasks(id);
    if (id == Identity::exp_identity)
      tasks.front().bound = cfg.order;
    return tasks;
  }
  std::vector<VerifyTask> tasks;
  switch (id) {
  case Identity::bernstein_gf: {
    const auto ks = cfg.k.empty() ? parse_int_range("0:8") : parse_int_range(cfg.k);
    for (int k : ks)
      for (const auto &x : xs_or_default(cfg))
        tasks.push_back({id, k, x, cfg.n_max});
    break;
  }
  case Identity::mkz_gf:
  case Identity::beta_gf: {
    const auto ns = cfg.n.empty() ? parse_int_range(id == Identity::mkz_gf ? "0:16" : "1:16")
                                  : parse_int_range(cfg.n);
    const std::size_t bound = cfg.k_max ? cfg.k_max : 8;
    for (int n : ns)
      for (const auto &x : xs_or_default(cfg))
        tasks.push_back({id, n, x, bound});
    break;
  }
  case Identity::exp_identity:
    tasks.push_back({id, 0, Rational(0), cfg.order});
    break;
  }
  return tasks;
}

int cmd_verify(const std::string &which, const Config &cfg, std::ostream &out) {
  const Rational q = require_open_unit_q(cfg);
  std::vector<Identity> ids;
  if (which == "all")
    ids = {Identity::bernstein_gf, Identity::mkz_gf, Identity::beta_gf, Identity::exp_identity};
  else
    ids = {*identity_from_string(which)};

  const Execution exec = cfg.serial ? Execution::serial : Execution::parallel;
  std::vector<VerificationReport> reports;
  for (Identity id : ids) {
    const auto tasks = tasks_for(id, cfg, which == "all");
    auto part = run_verification(q, tasks, exec);
    std::move(part.begin(), part.end(), std::back_inserter(reports));
  }

  const SuiteSummary s = summarize(reports);
  const std::string suites = std::to_string(ids.size()) + (ids.size() == 1 ? " suite" : " suites");
  if (s.passed()) {
    out << "PASS (" << suites << ", " << s.checks << " checks)\n";
  } else {
    out << "FAIL (" << suites << ", " << s.checks << " checks, " << s.failures << " failures)\n";
    for (const auto &r : reports)
      for (const auto &f : r.failures) {
        out << "  " << to_string(r.identity);
        if (r.identity != Identity::exp_identity)
          out << (r.identity == Identity::bernstein_gf ? " k=" : " n=") << r.fixed_index;
        if (r.x)
          out << " x=" << r.x->str();
        if (!f.label.empty())
          out << " [" << f.label << ']';
        out << " index " << f.index << ": expected " << f.expected.str() << ", got " << f.got.str() << '\n';
      }
  }
  if (cfg.json_report) {
    json arr = json::array();
    for (const auto &r : reports)
      arr.push_back(report_json(r));
    out << arr.dump(2) << '\n';
  }
  return s.passed() ? kOk : kVerificationFailed;
}

} // namespace

std::vector<Rational> parse_grid(std::string_view spec) {
  const auto first = spec.find(':');
  if (first == std::string_view::npos)
    return {Rational::parse(spec)};
  const auto second = spec.find(':', first + 1);
  if (second == std::string_view::npos || spec.find(':', second + 1) != std::string_view::npos)
    throw std::invalid_argument("grid must look like a:b:steps, got '" + std::string(spec) + "'");
  const Rational a = Rational::parse(spec.substr(0, first));
  const Rational b = Rational::parse(spec.substr(first + 1, second - first - 1));
  const int steps = parse_int(spec.substr(second + 1));
  if (steps < 1)
    throw std::invalid_argument("grid needs at least one step");
  if (b < a)
    throw std::invalid_argument("grid end lies below its start");
  const Rational h = (b - a) / Rational(steps);
  std::vector<Rational> xs;
  xs.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i)
    xs.push_back(a + h * Rational(i));
  return xs;
}

std::vector<int> parse_int_range(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    return {parse_int(spec)};
  const int lo = parse_int(spec.substr(0, colon));
  const int hi = parse_int(spec.substr(colon + 1));
  if (hi < lo)
    throw std::invalid_argument("empty range '" + std::string(spec) + "'");
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v)
    out.push_back(v);
  return out;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc())
    throw std::runtime_error("cannot format double");
  return std::string(buf.data(), ptr);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"q-calculus primitives, q-Bernstein / q-MKZ / q-Beta bases and operators, and exact "
               "generating-function verification"};
  app.name(args.empty() ? "qgf" : args.front());
  app.require_subcommand(1);

  Config cfg;
  std::vector<std::pair<std::string, CLI::App *>> leaves;

  auto add_q = [&](CLI::App *sub) { sub->add_option("--q", cfg.q, "q as p/r or decimal")->required(); };

  auto *qnum = app.add_subcommand("qnum", "q-integer, q-factorial, q-binomial, q-Beta");
  qnum->require_subcommand(1);
  for (const char *name : {"int", "fact", "binom", "beta"}) {
    auto *sub = qnum->add_subcommand(name);
    add_q(sub);
    sub->add_option("--mode", cfg.mode, "exact or float");
    if (std::string_view(name) != "beta")
      sub->add_option("--k", cfg.k, "index");
    if (std::string_view(name) == "binom" || std::string_view(name) == "beta")
      sub->add_option("--n", cfg.n, "degree");
    if (std::string_view(name) == "beta")
      sub->add_option("--m", cfg.m, "first argument");
    leaves.emplace_back(std::string("qnum ") + name, sub);
  }

  auto *basis = app.add_subcommand("basis", "evaluate a basis function");
  basis->require_subcommand(1);
  for (const char *name : {"bernstein", "mkz", "beta"}) {
    auto *sub = basis->add_subcommand(name);
    add_q(sub);
    sub->add_option("--n", cfg.n, "degree");
    sub->add_option("--k", cfg.k, "index");
    sub->add_option("--x", cfg.x, "point or grid a:b:steps")->required();
    sub->add_option("--mode", cfg.mode, "exact or float");
    leaves.emplace_back(std::string("basis ") + name, sub);
  }

  auto *op = app.add_subcommand("op", "evaluate an operator on a catalog function");
  op->require_subcommand(1);
  for (const char *name : {"bernstein", "mkz", "beta"}) {
    auto *sub = op->add_subcommand(name);
    add_q(sub);
    sub->add_option("--f", cfg.f, "const1|identity|square|monomial:j|reciprocal1p|expneg");
    sub->add_option("--n", cfg.n, "degree or range a:b");
    sub->add_option("--x", cfg.x, "point or grid a:b:steps")->required();
    sub->add_option("--tol", cfg.tol, "truncation tolerance (float mode)");
    sub->add_option("--k-max", cfg.k_max, "term cap (0 = operator default)");
    sub->add_option("--terms", cfg.terms, "number of terms in exact mode");
    sub->add_option("--mode", cfg.mode, "exact or float");
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_flag("--serial", cfg.serial, "evaluate grid points sequentially");
    leaves.emplace_back(std::string("op ") + name, sub);
  }

  auto *verify = app.add_subcommand("verify", "check generating-function identities exactly");
  verify->require_subcommand(1);
  for (const char *name : {"bernstein-gf", "mkz-gf", "beta-gf", "exp-identity", "all"}) {
    auto *sub = verify->add_subcommand(name);
    add_q(sub);
    const std::string_view nm(name);
    if (nm == "bernstein-gf") {
      sub->add_option("--k", cfg.k, "index or range a:b");
      sub->add_option("--n-max", cfg.n_max, "largest coefficient index");
    }
    if (nm == "mkz-gf" || nm == "beta-gf") {
      sub->add_option("--n", cfg.n, "degree or range a:b");
      sub->add_option("--k-max", cfg.k_max, "largest coefficient index");
    }
    if (nm != "exp-identity" && nm != "all")
      sub->add_option("--x", cfg.x, "point or grid a:b:steps");
    if (nm == "exp-identity" || nm == "all")
      sub->add_option("--order", cfg.order, "series order for the exponential identity");
    sub->add_flag("--json", cfg.json_report, "print the full report as JSON");
    sub->add_flag("--serial", cfg.serial, "run the grid sequentially");
    leaves.emplace_back(std::string("verify ") + name, sub);
  }

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args)
    argv.push_back(a.c_str());
  if (argv.empty())
    argv.push_back("qgf");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  std::string leaf;
  for (const auto &[name, sub] : leaves)
    if (sub->parsed())
      leaf = name;

  try {
    const std::string group = leaf.substr(0, leaf.find(' '));
    const std::string which = leaf.substr(leaf.find(' ') + 1);
    if (group == "qnum") {
      if (cfg.mode.empty())
        cfg.mode = "exact";
      if (cfg.k.empty())
        cfg.k = "0";
      if (cfg.n.empty())
        cfg.n = "1";
      return cmd_qnum(which, cfg, out);
    }
    if (group == "basis") {
      if (cfg.mode.empty())
        cfg.mode = "exact";
      if (cfg.k.empty())
        cfg.k = "0";
      if (cfg.n.empty())
        cfg.n = "1";
      return cmd_basis(*basis_family_from_string(which), cfg, out);
    }
    if (group == "op") {
      if (cfg.mode.empty())
        cfg.mode = "float";
      if (cfg.n.empty())
        cfg.n = "1";
      return cmd_op(*basis_family_from_string(which), cfg, out);
    }
    return cmd_verify(which, cfg, out);
  } catch (const std::overflow_error &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

} // namespace qgf::cli
