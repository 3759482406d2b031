// Command-line front end. Exit codes: 0 success, 1 tolerance failure,
// 2 invalid input, 3 resource cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "maassforge/kernels.hpp"
#include "maassforge/parallel.hpp"
#include "maassforge/petersson.hpp"

using namespace maassforge;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;
constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  i64 disc = 229;
  int char_index = 1;
  i64 n_max = 100000;
  std::string format = "json";
  std::string output;
  int threads = 0;
};

// 15 significant digits; JSON serializes the shortest round-trip form.
double sig15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::shared_ptr<const ClassGroup> group_for(i64 D) {
  return std::make_shared<const ClassGroup>(ClassGroup::build(QuadField::make(D)));
}

HeckeCharacter character_for(const RunConfig& cfg) {
  auto cg = group_for(cfg.disc);
  if (cfg.char_index < 0 || cfg.char_index >= cg->h_narrow()) throw InvalidInput("character index out of range");
  return HeckeCharacter::make_class_character(cg, cfg.char_index,
                                              {HeckeCharacter::natural_epsilon(*cg, cfg.char_index), 0.0});
}

ordered_json report_json(const PeterssonReport& r) {
  ordered_json j;
  j["disc"] = r.D;
  j["char"] = r.char_index;
  j["order"] = r.order;
  j["c1"] = sig15(r.c1);
  j["c2"] = sig15(r.c2);
  j["c3"] = sig15(r.c3);
  j["res_zeta_f"] = sig15(r.res_zeta_f);
  j["l_value"] = sig15(r.l_value);
  j["l_error"] = sig15(r.l_error);
  j["total"] = sig15(r.total);
  j["paper_value"] = r.paper_value ? ordered_json(sig15(*r.paper_value)) : ordered_json(nullptr);
  j["rel_err"] = r.rel_err ? ordered_json(sig15(*r.rel_err)) : ordered_json(nullptr);
  return j;
}

// Writes flat "key: value" lines for scalars; arrays of objects become rows.
void print_table(std::ostream& os, const ordered_json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const auto& v = it.value();
    if (v.is_object()) {
      print_table(os, v, key);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << key << ":\n";
      std::vector<std::string> cols;
      for (auto c = v.front().begin(); c != v.front().end(); ++c) cols.push_back(c.key());
      for (const auto& c : cols) os << "  " << c;
      os << "\n";
      for (const auto& row : v) {
        for (const auto& c : cols) {
          const auto& cell = row[c];
          os << "  " << (cell.is_number_float() ? fmt15(cell.get<double>()) : cell.dump());
        }
        os << "\n";
      }
    } else if (v.is_number_float()) {
      os << key << ": " << fmt15(v.get<double>()) << "\n";
    } else {
      os << key << ": " << v.dump() << "\n";
    }
  }
}

void emit(const RunConfig& cfg, const ordered_json& j, const std::string& csv = "") {
  std::ostringstream os;
  if (cfg.format == "json") {
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    if (csv.empty()) throw InvalidInput("csv output is only available for ideals and coeffs");
    os << csv;
  } else {
    print_table(os, j);
  }
  if (cfg.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(cfg.output);
    if (!f) throw InvalidInput("cannot open output file " + cfg.output);
    f << os.str();
  }
}

ordered_json header(const std::string& command) {
  ordered_json j;
  j["command"] = command;
  j["version"] = kVersion;
  return j;
}

int cmd_field(const RunConfig& cfg) {
  const auto cg = group_for(cfg.disc);
  const auto& u = cg->unit();
  auto j = header("field");
  j["disc"] = cfg.disc;
  j["h_wide"] = cg->h_wide();
  j["h_narrow"] = cg->h_narrow();
  j["invariants"] = cg->invariants();
  j["unit"] = {{"x", u.x.str()}, {"y", u.y.str()}, {"norm", u.norm}};
  j["regulator"] = sig15(u.regulator);
  emit(cfg, j);
  return kExitOk;
}

int cmd_ideals(const RunConfig& cfg, i64 max_norm) {
  const auto cg = group_for(cfg.disc);
  auto j = header("ideals");
  j["disc"] = cfg.disc;
  j["max_norm"] = max_norm;
  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  csv << "norm,k,a,b,class\n";
  for (const auto& bucket : enumerate_ideals(cg->field(), max_norm)) {
    for (const auto& I : bucket.ideals) {
      const int cls = cg->ideal_to_class(I);
      rows.push_back({{"norm", I.norm}, {"k", I.k}, {"a", I.a}, {"b", I.b}, {"class", cls}});
      csv << I.norm << "," << I.k << "," << I.a << "," << I.b << "," << cls << "\n";
    }
  }
  j["ideals"] = rows;
  emit(cfg, j, csv.str());
  return kExitOk;
}

int cmd_coeffs(const RunConfig& cfg) {
  const auto psi = character_for(cfg);
  const auto f = MaassForm::build(psi, cfg.n_max, cfg.threads);
  auto j = header("coeffs");
  j["disc"] = cfg.disc;
  j["char"] = cfg.char_index;
  j["epsilon"] = f.epsilon();
  j["n_max"] = cfg.n_max;
  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  csv << "n,re,im\n";
  for (i64 n = 1; n <= cfg.n_max; ++n) {
    const cplx a = f.fourier_coeff(n);
    rows.push_back({{"n", n}, {"re", sig15(a.real())}, {"im", sig15(a.imag())}});
    csv << n << "," << fmt15(a.real()) << "," << fmt15(a.imag()) << "\n";
  }
  j["coeffs"] = rows;
  emit(cfg, j, csv.str());
  return kExitOk;
}

int cmd_theta_eval(RunConfig cfg, double x, double y) {
  const auto psi = character_for(cfg);
  if (!(y > 0.0)) throw InvalidInput("y must be positive");
  cfg.n_max = std::max(cfg.n_max, MaassForm::required_n(y));
  const auto f = MaassForm::build(psi, cfg.n_max, cfg.threads);
  const ThetaValue v = f.eval(EvalPoint::from_xy(x, y));
  auto j = header("theta-eval");
  j["disc"] = cfg.disc;
  j["char"] = cfg.char_index;
  j["x"] = x;
  j["y"] = y;
  j["re"] = sig15(v.value.real());
  j["im"] = sig15(v.value.imag());
  j["tail_bound"] = sig15(v.tail_bound);
  j["n_cut"] = v.n_cut;
  j["kernel"] = selected_kernel_name();
  emit(cfg, j);
  return kExitOk;
}

int cmd_check_automorphy(RunConfig cfg, i64 c, i64 d, int samples, double tol) {
  const auto psi = character_for(cfg);
  const i64 N = psi.field().D;
  if (c == 0 || c % N != 0) throw InvalidInput("c must be a nonzero multiple of the level");
  if (gcd(c, d) != 1) throw InvalidInput("c and d must be coprime");
  if (samples < 1) throw InvalidInput("samples must be positive");
  const ExtGcd g = ext_gcd(d, c);  // u d + v c = 1
  const Mat2 m{g.u, -g.v, c, d};
  std::vector<EvalPoint> pts;
  double y_min_image = 1e300;
  for (int i = 0; i < samples; ++i) {
    // Fixed points near -d/c keep the images high.
    const double x = -static_cast<double>(d) / static_cast<double>(c) + 1e-3 * (i - samples / 2);
    const double y = 0.3 + 0.1 * i / std::max(1, samples - 1);
    pts.push_back(EvalPoint::from_xy(x, y));
    y_min_image = std::min(y_min_image, act(m, pts.back()).y);
  }
  cfg.n_max = std::max(cfg.n_max, MaassForm::required_n(std::min(y_min_image, 0.3)));
  const auto f = MaassForm::build(psi, cfg.n_max, cfg.threads);
  const auto r = check_automorphy(f, m, pts);
  auto j = header("check-automorphy");
  j["disc"] = cfg.disc;
  j["char"] = cfg.char_index;
  j["matrix"] = {m.a, m.b, m.c, m.d};
  j["chi_d"] = r.character_value;
  j["n_max"] = cfg.n_max;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    rows.push_back({{"x", sig15(pts[i].x())}, {"y", sig15(pts[i].y)}, {"residual", sig15(r.residuals[i])}});
  }
  j["points"] = rows;
  j["max_residual"] = sig15(r.max_residual);
  j["tolerance"] = tol;
  j["pass"] = r.max_residual < tol;
  emit(cfg, j);
  return r.max_residual < tol ? kExitOk : kExitTolerance;
}

int cmd_lvalue(const RunConfig& cfg, double s, bool pair, double A) {
  auto psi = character_for(cfg);
  if (pair) psi = psi.product_with_conjugate_sigma();
  if (s == 1.0 && psi.is_trivial()) throw InvalidInput("trivial character: pole at s = 1");
  LSeries probe;
  probe.conductor = psi.field().D * psi.conductor_norm();
  const i64 N = std::max<i64>({afe_terms_needed(probe, A), afe_terms_needed(probe, 2.0 * A), 64});
  const auto L = hecke_l_coeffs(psi, N, cfg.threads);
  const LValue a = l_value_afe(L, s, A);
  const LValue b = l_value_afe(L, s, 2.0 * A);
  auto j = header("lvalue");
  j["disc"] = cfg.disc;
  j["char"] = cfg.char_index;
  j["pair"] = pair;
  j["s"] = s;
  j["re"] = sig15(a.value.real());
  j["im"] = sig15(a.value.imag());
  j["error_bound"] = sig15(std::abs(a.value - b.value) + a.error_bound + b.error_bound);
  j["terms"] = a.terms;
  emit(cfg, j);
  return kExitOk;
}

int cmd_petersson(const RunConfig& cfg) {
  const auto psi = character_for(cfg);
  PeterssonReport r = petersson_norm(psi, cfg.threads);
  auto j = header("petersson");
  j["report"] = report_json(r);
  emit(cfg, j);
  return kExitOk;
}

int cmd_reproduce(const RunConfig& cfg, i64 example) {
  const ExampleResult e = reproduce_example(example, cfg.threads);
  auto j = header("reproduce");
  j["example"] = example;
  ordered_json reps = ordered_json::array();
  for (const auto& r : e.reports) reps.push_back(report_json(r));
  j["reports"] = reps;
  j["value"] = sig15(e.value);
  j["paper_value"] = sig15(e.paper_value);
  j["rel_err"] = sig15(e.rel_err);
  j["pass"] = e.rel_err < 1e-6;
  emit(cfg, j);
  return e.rel_err < 1e-6 ? kExitOk : kExitTolerance;
}

int cmd_gauss_check(const RunConfig& cfg, i64 p, double tol) {
  const QuadField F = QuadField::make(cfg.disc);
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  auto j = header("gauss-check");
  j["disc"] = cfg.disc;
  j["p"] = p;
  ordered_json rows = ordered_json::array();
  double worst_abs = 0.0;
  double worst_rel = 0.0;
  const bool inert = kronecker_chi_D(F, p) == -1;
  for (int k = 1; k < p - 1; ++k) {
    const DirichletCharacter sigma = DirichletCharacter::from_prime(p, k);
    if (!sigma.is_primitive()) continue;
    const GaussSumResult tau = gauss_sum_rational(sigma);
    const double abs_res = std::abs(std::norm(tau.value) - static_cast<double>(p));
    worst_abs = std::max(worst_abs, abs_res);
    ordered_json row{{"k", k}, {"abs_sq_residual", sig15(abs_res)}};
    if (inert) {
      const auto g = check_gauss_relation(F, p, sigma);
      row["relation_residual"] = sig15(g.residual);
      worst_rel = std::max(worst_rel, g.residual);
    }
    rows.push_back(row);
  }
  j["inert"] = inert;
  j["characters"] = rows;
  j["max_abs_sq_residual"] = sig15(worst_abs);
  j["max_relation_residual"] = inert ? ordered_json(sig15(worst_rel)) : ordered_json(nullptr);
  const bool pass = worst_abs < tol * static_cast<double>(p) && worst_rel < tol;
  j["pass"] = pass;
  emit(cfg, j);
  return pass ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta series of real quadratic Hecke characters and their Petersson norms"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&cfg](CLI::App* sub, bool with_char) {
    sub->add_option("--disc", cfg.disc, "fundamental discriminant D > 1")->capture_default_str();
    if (with_char) sub->add_option("--char", cfg.char_index, "class character index")->capture_default_str();
    sub->add_option("--format", cfg.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "write to a file instead of stdout");
    sub->add_option("--threads", cfg.threads, "worker threads (default: MAASSFORGE_THREADS or all cores)");
  };

  auto* field = app.add_subcommand("field", "class groups and fundamental unit");
  common(field, false);

  i64 max_norm = 50;
  auto* ideals = app.add_subcommand("ideals", "integral ideals up to a norm");
  common(ideals, false);
  ideals->add_option("--max-norm", max_norm)->capture_default_str();

  auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients a(n) of the theta series");
  common(coeffs, true);
  coeffs->add_option("--n-max", cfg.n_max)->capture_default_str();

  double x = 0.0, y = 1.0;
  auto* theta = app.add_subcommand("theta-eval", "evaluate the theta series at x + iy");
  common(theta, true);
  theta->add_option("--x", x)->capture_default_str();
  theta->add_option("--y", y)->capture_default_str();
  theta->add_option("--n-max", cfg.n_max, "minimum table size")->capture_default_str();

  i64 c = 0, d = 1;
  int samples = 5;
  double tol = 1e-8;
  auto* autom = app.add_subcommand("check-automorphy", "residual of the transformation law under (a b; c d)");
  common(autom, true);
  autom->add_option("--c", c)->required();
  autom->add_option("--d", d)->required();
  autom->add_option("--samples", samples)->capture_default_str();
  autom->add_option("--tol", tol)->capture_default_str();
  autom->add_option("--n-max", cfg.n_max, "minimum table size")->capture_default_str();

  double s = 1.0, A = 1.0;
  bool pair = false;
  auto* lval = app.add_subcommand("lvalue", "L(s, psi) by the smoothed functional equation");
  common(lval, true);
  lval->add_option("--s", s)->capture_default_str();
  lval->add_option("--cutoff", A, "split point A; the error bound compares A and 2A")->capture_default_str();
  lval->add_flag("--pair", pair, "use psi (psi-bar o sigma) instead of psi");

  auto* pet = app.add_subcommand("petersson", "Petersson norm of the theta series");
  common(pet, true);

  i64 example = 229;
  auto* repro = app.add_subcommand("reproduce", "worked examples D = 229, 445, 401");
  common(repro, false);
  repro->add_option("--example", example)->required()->check(CLI::IsMember({229, 445, 401}));

  i64 p = 3;
  double gtol = 1e-9;
  auto* gauss = app.add_subcommand("gauss-check", "Gauss sum identities for characters mod p");
  common(gauss, false);
  gauss->add_option("--p", p)->required();
  gauss->add_option("--tol", gtol)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    cfg.threads = resolve_threads(cfg.threads);
    if (*field) return cmd_field(cfg);
    if (*ideals) return cmd_ideals(cfg, max_norm);
    if (*coeffs) return cmd_coeffs(cfg);
    if (*theta) return cmd_theta_eval(cfg, x, y);
    if (*autom) return cmd_check_automorphy(cfg, c, d, samples, tol);
    if (*lval) return cmd_lvalue(cfg, s, pair, A);
    if (*pet) return cmd_petersson(cfg);
    if (*repro) return cmd_reproduce(cfg, example);
    if (*gauss) return cmd_gauss_check(cfg, p, gtol);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource limit: out of memory\n";
    return kExitResource;
  }
  return kExitInvalid;
}
