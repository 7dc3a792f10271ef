#include "huygens/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "huygens/dalembert.hpp"
#include "huygens/errors.hpp"
#include "huygens/fdtd.hpp"
#include "huygens/profiles.hpp"
#include "huygens/spherical_means.hpp"

namespace huygens {

namespace {

// ---------------------------------------------------------------------------
// Config parsing

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParameterError("setting '" + key + "' expects a number, got '" + t + "'");
  }
  return v;
}

long long parse_integer(const std::string& key, const std::string& text) {
  const double v = parse_double(key, text);
  if (v != std::floor(v)) throw ParameterError("setting '" + key + "' expects an integer");
  return static_cast<long long>(v);
}

ProfileSpec& ensure(std::optional<ProfileSpec>& spec) {
  if (!spec) spec = ProfileSpec{};
  return *spec;
}

std::string json_scalar_text(const nlohmann::json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void apply_profile_json(ExperimentConfig& config, const std::string& prefix,
                        const nlohmann::json& j) {
  if (j.is_string()) {
    apply_setting(config, prefix, j.get<std::string>());
    return;
  }
  if (j.contains("name")) apply_setting(config, prefix, j.at("name").get<std::string>());
  for (const auto& [k, v] : j.items()) {
    if (k == "params") {
      for (const auto& [pk, pv] : v.items()) {
        apply_setting(config, prefix + "." + pk, json_scalar_text(pv));
      }
    } else if (k != "name") {
      apply_setting(config, prefix + "." + k, json_scalar_text(v));
    }
  }
}

ExperimentConfig parse_json_config(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError(std::string("config JSON: ") + e.what());
  }
  ExperimentConfig config;
  for (const auto& [key, value] : j.items()) {
    if (key == "parameters") {
      for (const auto& [k, v] : value.items()) apply_setting(config, k, json_scalar_text(v));
    } else if (key == "profile" || key == "psi") {
      apply_profile_json(config, key, value);
    } else if (key == "quadrature" || key == "grid" || key == "output") {
      for (const auto& [k, v] : value.items()) {
        apply_setting(config, key + "." + k, json_scalar_text(v));
      }
    } else if (key == "tol" && value.is_null()) {
      continue;
    } else {
      apply_setting(config, key, json_scalar_text(value));
    }
  }
  return config;
}

// ---------------------------------------------------------------------------
// Parameter access with defaults; records what was actually used.

class Params {
 public:
  Params(const ExperimentConfig& config, ExperimentReport& report)
      : given_(config.parameters), report_(report) {}

  double get(const std::string& key, double fallback) {
    auto it = given_.find(key);
    const double v = it == given_.end() ? fallback : it->second;
    report_.inputs[key] = v;
    return v;
  }

  int count(const std::string& key, int fallback) {
    const double v = get(key, fallback);
    if (v < 0.0 || v != std::floor(v)) throw ParameterError(key + " must be a whole number");
    return static_cast<int>(v);
  }

 private:
  const std::map<std::string, double>& given_;
  ExperimentReport& report_;
};

double tolerance(const ExperimentConfig& config, double fallback) {
  return config.tol.value_or(fallback);
}

Shape resolve_profile(const std::optional<ProfileSpec>& spec, const std::string& default_name,
                      const std::map<std::string, double>& default_params,
                      ExperimentReport& report, const std::string& label) {
  ProfileSpec chosen{default_name, default_params};
  if (spec) {
    if (!spec->name.empty()) chosen.name = spec->name;
    if (spec->name.empty() || spec->name == default_name) {
      for (const auto& [k, v] : spec->params) chosen.params[k] = v;
    } else {
      chosen.params = spec->params;
    }
  }
  std::string desc = chosen.name;
  for (const auto& [k, v] : chosen.params) desc += ";" + k + "=" + format_number(v);
  report.settings[label] = desc;
  return make_shape(chosen.name, chosen.params);
}

SphericalPulse pulse_from(Params& p) {
  return SphericalPulse(p.get("A", 1.0), p.get("omega", 1.0), p.get("c", 1.0));
}

std::map<std::string, double> pulse_params(const SphericalPulse& pulse, double R, double t1,
                                           double tau) {
  return {{"A", pulse.amplitude()}, {"omega", pulse.omega()}, {"c", pulse.c()},
          {"R", R},                 {"t1", t1},               {"tau", tau}};
}

// Uniform grid over the union of supports at t2, widened by 20%.
std::pair<double, double> sweep_window(const WaveProfile1D& w, double a, double t2) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Shape* s : {&w.phi, &w.psi}) {
    if (s->is_zero()) continue;
    auto sup = s->support().value_or(std::pair{-1.0, 1.0});
    lo = std::min(lo, sup.first - a * t2);
    hi = std::max(hi, sup.second + a * t2);
  }
  if (!(hi > lo)) {
    lo = -1.0 - a * t2;
    hi = 1.0 + a * t2;
  }
  const double mid = 0.5 * (lo + hi);
  const double half = 0.6 * (hi - lo);
  return {mid - half, mid + half};
}

// ---------------------------------------------------------------------------
// Experiments

void run_dalembert_check(const ExperimentConfig& config, ExperimentReport& report) {
  Params p(config, report);
  const double a = p.get("a", 1.0);
  const double t1 = p.get("t1", 0.7);
  const double t2 = p.get("t2", 1.9);
  const int points = p.count("points", 401);
  if (!(t1 > 0.0 && t2 >= t1)) throw ParameterError("dalembert-check needs 0 < t1 <= t2");
  if (points < 2) throw ParameterError("points must be at least 2");
  WaveProfile1D w{resolve_profile(config.profile, "gaussian", {{"width", 0.2}}, report, "profile"),
                  resolve_profile(config.psi, "zero", {}, report, "psi")};
  const double tol = tolerance(config, 1e-10);

  const State1D state = reinit_state(w, a, t1);
  const auto [lo, hi] = sweep_window(w, a, t2);
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    const double direct = dalembert_eval(w, a, x, t2);
    const double reseeded = dalembert_reinit_eval(state, a, x, t2);
    ReportRow row = make_row({{"a", a}, {"t1", t1}, {"t2", t2}, {"x", x}}, reseeded, direct,
                             "direct d'Alembert", tol, false, "1d");
    row.quantity = "reseeded_vs_direct";
    report.rows.push_back(std::move(row));
  }
}

void run_eight_term(const ExperimentConfig& config, ExperimentReport& report) {
  Params p(config, report);
  const double a = p.get("a", 1.0);
  const int samples = p.count("samples", 100);
  WaveProfile1D w{resolve_profile(config.profile, "gaussian", {{"width", 0.2}}, report, "profile")};
  const double tol = tolerance(config, 1e-13);

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < samples; ++i) {
    const double t1 = 0.05 + 1.95 * unit(rng);
    const double t2 = t1 + 0.01 + 1.99 * unit(rng);
    const auto [lo, hi] = sweep_window(w, a, t2);
    const double x = lo + (hi - lo) * unit(rng);

    const EightTermDecomposition d = eight_term_decomposition(w, a, t1, t2, x);
    const CancellationReport c = verify_cancellation(d);
    const double target = 0.5 * w.phi(x - a * t2) + 0.5 * w.phi(x + a * t2);
    const std::map<std::string, double> params{
        {"a", a}, {"sample", i}, {"t1", t1}, {"t2", t2}, {"x", x}};

    ReportRow sum = make_row(params, d.sum(), target, "half-sum of phi(x -+ a t2)", tol, false, "1d");
    sum.quantity = "sum_T";
    ReportRow p25 = make_row(params, d.terms[1] + d.terms[4], 0.0, "exact cancellation", 0.0,
                             false, "1d");
    p25.quantity = "T2+T5";
    ReportRow p38 = make_row(params, d.terms[2] + d.terms[7], 0.0, "exact cancellation", 0.0,
                             false, "1d");
    p38.quantity = "T3+T8";
    sum.pass = sum.pass && c.pass;
    report.rows.push_back(std::move(sum));
    report.rows.push_back(std::move(p25));
    report.rows.push_back(std::move(p38));
  }
}

struct PulseCase {
  SphericalPulse pulse;
  double R;
  double t1;
  double tau;
};

PulseCase random_case(std::mt19937_64& rng, SupportCase which) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const SphericalPulse pulse(0.5 + 1.5 * unit(rng), 0.5 + 2.5 * unit(rng), 0.5 + 1.5 * unit(rng));
  const double t1 = 1.0 + 3.0 * unit(rng);
  const double L = pulse.c() * t1;
  double R = 0.0;
  double c_tau = 0.0;
  if (which == SupportCase::CaseI) {
    R = L * (0.2 + 0.7 * unit(rng));
    c_tau = std::min(R, L - R) * (0.05 + 0.9 * unit(rng));
  } else {
    R = L * (0.55 + 0.85 * unit(rng));
    const double lo = std::abs(L - R);
    c_tau = lo + (R - lo) * (0.05 + 0.9 * unit(rng));
  }
  return {pulse, R, t1, c_tau / pulse.c()};
}

void run_kirchhoff_case(const ExperimentConfig& config, ExperimentReport& report,
                        SupportCase which) {
  Params p(config, report);
  const SphericalPulse pulse = pulse_from(p);
  const double R = p.get("R", which == SupportCase::CaseI ? 2.0 : 2.8);
  const double t1 = p.get("t1", 3.0);
  const double tau = p.get("tau", 0.5);
  const int samples = p.count("samples", 200);
  const double tol = tolerance(config, 1e-12);

  const IntegrationBounds b = integration_bounds(R, pulse.c() * tau, pulse.c() * t1);
  if (b.case_tag != which) {
    throw ParameterError(std::string("parameters fall in ") + to_string(b.case_tag) +
                         ", experiment expects " + to_string(which));
  }

  auto add = [&](const PulseCase& pc, double sample) {
    const RingReducedResult r = ring_reduced_eval(pc.pulse, pc.R, pc.t1, pc.tau);
    auto params = pulse_params(pc.pulse, pc.R, pc.t1, pc.tau);
    if (sample >= 0.0) params["sample"] = sample;
    ReportRow row = make_row(params, r.value, closed_form_target(pc.pulse, pc.R, pc.t1 + pc.tau),
                             "closed form (A/R) sin(omega t2 - k R)", tol, false,
                             to_string(r.bounds.case_tag), r.bounds.gamma);
    row.quantity = "ring_reduced";
    report.rows.push_back(std::move(row));
  };

  add({pulse, R, t1, tau}, -1.0);
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < samples; ++i) add(random_case(rng, which), i);
}

void run_branch_continuity(const ExperimentConfig& config, ExperimentReport& report) {
  Params p(config, report);
  const SphericalPulse pulse = pulse_from(p);
  const double t1 = p.get("t1", 3.0);
  const double tau = p.get("tau", 0.5);
  const double tol = tolerance(config, 1e-10);
  const double c = pulse.c();
  const double R_branch = c * t1 - c * tau;
  if (!(c * tau < R_branch)) throw DomainError("branch point needs c*tau < c*t1 - c*tau");

  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
    const RingReducedResult inner = ring_reduced_eval(pulse, R_branch - eps, t1, tau);
    const RingReducedResult outer = ring_reduced_eval(pulse, R_branch + eps, t1, tau);
    // The two sides sit 2 eps apart; allow the genuine change of u across that gap.
    const double R_min = R_branch - eps;
    const double lipschitz = pulse.amplitude() * (pulse.k() / R_min + 1.0 / (R_min * R_min));
    ReportRow row = make_row({{"A", pulse.amplitude()}, {"R_branch", R_branch}, {"c", c},
                              {"eps", eps}, {"omega", pulse.omega()}, {"t1", t1}, {"tau", tau}},
                             outer.value, inner.value, "Case I value at R_branch - eps",
                             tol + 2.02 * eps * lipschitz, false,
                             std::string(to_string(outer.bounds.case_tag)) + "|" +
                                 to_string(inner.bounds.case_tag),
                             outer.bounds.gamma);
    row.quantity = "caseII_minus_caseI";
    report.rows.push_back(std::move(row));
  }
}

double surface_value(const SphericalPulse& pulse, double R, double t1, double tau,
                     const SphereQuadratureRule& rule, double h) {
  return poisson_eval_surface(pulse_value_field(pulse, t1), pulse_rate_field(pulse, t1),
                              pulse.c(), Eigen::Vector3d(0.0, 0.0, R), tau, rule, h,
                              pulse.c() * t1);
}

void run_surface_vs_ring(const ExperimentConfig& config, ExperimentReport& report) {
  Params p(config, report);
  const SphericalPulse pulse = pulse_from(p);
  const double R = p.get("R", 2.0);
  const double t1 = p.get("t1", 3.0);
  const double tau = p.get("tau", 0.5);
  const double h = tau / p.get("h_divisor", 100.0);
  const int min_order = p.count("min_order", 30);
  const double tol = tolerance(config, 1e-6);

  const SphereQuadratureRule rule =
      build_sphere_rule(config.quadrature.family, config.quadrature.resolution, min_order);
  report.settings["quadrature"] = rule.family + ";resolution=" + std::to_string(rule.resolution) +
                                  ";order=" + std::to_string(rule.order);
  const RingReducedResult ring = ring_reduced_eval(pulse, R, t1, tau);
  const double surface = surface_value(pulse, R, t1, tau, rule, h);
  auto params = pulse_params(pulse, R, t1, tau);
  params["h"] = h;
  params["order"] = rule.order;
  const char* tag = to_string(ring.bounds.case_tag);

  ReportRow vs_closed = make_row(params, surface, closed_form_target(pulse, R, t1 + tau),
                                 "closed form (A/R) sin(omega t2 - k R)", tol, true, tag,
                                 ring.bounds.gamma);
  vs_closed.quantity = "surface_vs_closed_form";
  ReportRow vs_ring = make_row(params, surface, ring.value, "ring-reduced Poisson formula", 1e-5,
                               true, tag, ring.bounds.gamma);
  vs_ring.quantity = "surface_vs_ring";
  report.rows.push_back(std::move(vs_closed));
  report.rows.push_back(std::move(vs_ring));
}

void run_generalized_profile(const ExperimentConfig& config, ExperimentReport& report) {
  Params p(config, report);
  const double c = p.get("c", 1.0);
  const double R = p.get("R", 2.0);
  const double t1 = p.get("t1", 3.0);
  const double tau = p.get("tau", 0.5);
  const double tol = tolerance(config, 1e-8);
  const RadialProfile profile{
      resolve_profile(config.profile, "gaussian", {{"center", -1.5}, {"width", 0.3}}, report,
                      "profile"),
      c};
  const GeneralizedRingResult g = ring_reduced_eval_generalized(profile, R, t1, tau);
  ReportRow row = make_row({{"R", R}, {"c", c}, {"t1", t1}, {"tau", tau}}, g.value,
                           eval_generalized_radial(profile, R, t1 + tau),
                           "closed form f(R - c t2)/R", tol, false,
                           to_string(g.bounds.case_tag), g.bounds.gamma);
  row.quantity = "generalized_ring";
  report.rows.push_back(std::move(row));
}

void run_oracle_compare(const ExperimentConfig& config, ExperimentReport& report) {
  Params p(config, report);
  const SphericalPulse pulse = pulse_from(p);
  const double R = p.get("R", 2.8);
  const double t1 = p.get("t1", 3.0);
  const double tau = p.get("tau", 0.5);
  const double margin = p.get("r_margin", 0.5);
  const double tol = tolerance(config, 1e-3);
  const double c = pulse.c();

  const RingReducedResult ring = ring_reduced_eval(pulse, R, t1, tau);
  const double r_max = std::max(c * t1, R + c * tau) + margin;
  const Grid1D radial = Grid1D::make(0.0, r_max, config.grid.cells, config.grid.cfl, c);
  const double oracle = radial_oracle_eval(pulse, R, t1, t1 + tau, radial);
  auto params = pulse_params(pulse, R, t1, tau);
  params["cells"] = config.grid.cells;
  params["cfl"] = config.grid.cfl;
  ReportRow row3d = make_row(params, ring.value, oracle, "radial FDTD oracle (v = r u)", tol, true,
                             to_string(ring.bounds.case_tag), ring.bounds.gamma);
  row3d.quantity = "ring_vs_radial_fdtd";
  report.rows.push_back(std::move(row3d));

  // 1D: leapfrog against d'Alembert for the same profile family as dalembert-check.
  const double a = p.get("a", 1.0);
  const double t_end = p.get("t_end", 1.3);
  const double half_width = p.get("x_half_width", 4.0);
  const WaveProfile1D w{
      resolve_profile(config.profile, "gaussian", {{"width", 0.2}}, report, "profile")};
  const Grid1D line = Grid1D::make(-half_width, half_width, config.grid.cells, config.grid.cfl, a)
                          .fitted_to(t_end, a);
  std::vector<double> u0(line.size());
  std::vector<double> v0(line.size(), 0.0);
  for (std::size_t i = 0; i < u0.size(); ++i) u0[i] = w.phi(line.node(i));
  const FdtdHistory hist = fdtd1d_evolve(u0, v0, a, line, t_end, Boundary::ZeroDirichlet);
  const Snapshot& snap = hist.snapshots.back();
  double worst = -1.0;
  double at_fd = 0.0;
  double at_exact = 0.0;
  double at_x = 0.0;
  for (std::size_t i = 0; i < snap.values.size(); ++i) {
    const double exact = dalembert_eval(w, a, line.node(i), snap.time);
    const double err = std::abs(snap.values[i] - exact);
    if (err > worst) {
      worst = err;
      at_fd = snap.values[i];
      at_exact = exact;
      at_x = line.node(i);
    }
  }
  ReportRow row1d = make_row({{"a", a}, {"cells", config.grid.cells}, {"cfl", config.grid.cfl},
                              {"t_end", snap.time}, {"x_worst", at_x}},
                             at_fd, at_exact, "d'Alembert closed form", tol, false, "1d");
  row1d.quantity = "fdtd1d_max_abs";
  report.rows.push_back(std::move(row1d));
}

void run_convergence(const ExperimentConfig& config, ExperimentReport& report) {
  Params p(config, report);
  const SphericalPulse pulse = pulse_from(p);
  const double R = p.get("R", 2.0);
  const double t1 = p.get("t1", 3.0);
  const double tau = p.get("tau", 0.5);
  const double h = tau / p.get("h_divisor", 100.0);
  const int first = p.count("min_resolution", 2);
  const int last = p.count("max_resolution", 64);
  const double floor = tolerance(config, 1e-12);
  if (first < 2 || last < first) throw ParameterError("need 2 <= min_resolution <= max_resolution");

  const IntegrationBounds b = integration_bounds(R, pulse.c() * tau, pulse.c() * t1);
  const double target = closed_form_target(pulse, R, t1 + tau);
  double previous = std::numeric_limits<double>::infinity();
  for (int res = first; res <= last; res *= 2) {
    const SphereQuadratureRule rule = build_sphere_rule(config.quadrature.family, res);
    const double value = surface_value(pulse, R, t1, tau, rule, h);
    auto params = pulse_params(pulse, R, t1, tau);
    params["resolution"] = res;
    params["order"] = rule.order;
    params["h"] = h;
    // Error may not grow, except within the round-off floor.
    const double allowed = std::max(previous, floor);
    ReportRow row = make_row(params, value, target, "closed form (A/R) sin(omega t2 - k R)",
                             allowed, false, to_string(b.case_tag), b.gamma);
    row.quantity = "surface_error";
    if (2 * res > last) row.pass = row.pass && row.abs_err <= floor;
    previous = row.abs_err;
    report.rows.push_back(std::move(row));
  }
}

}  // namespace

void apply_setting(ExperimentConfig& config, const std::string& raw_key, const std::string& raw) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw);
  if (key.empty()) throw ParameterError("empty setting name");
  if (key == "experiment") {
    config.experiment = value;
  } else if (key == "seed") {
    const long long s = parse_integer(key, value);
    if (s < 0) throw ParameterError("seed must be non-negative");
    config.seed = static_cast<std::uint64_t>(s);
  } else if (key == "tol") {
    const double t = parse_double(key, value);
    if (!(t >= 0.0)) throw ParameterError("tol must be non-negative");
    config.tol = t;
  } else if (key == "profile" || key == "psi") {
    ensure(key == "profile" ? config.profile : config.psi).name = value;
  } else if (key.starts_with("profile.") || key.starts_with("psi.")) {
    const auto dot = key.find('.');
    auto& spec = ensure(key.starts_with("profile.") ? config.profile : config.psi);
    spec.params[key.substr(dot + 1)] = parse_double(key, value);
  } else if (key == "quadrature.family") {
    config.quadrature.family = value;
  } else if (key == "quadrature.resolution") {
    config.quadrature.resolution = static_cast<int>(parse_integer(key, value));
  } else if (key == "grid.cells") {
    config.grid.cells = static_cast<int>(parse_integer(key, value));
  } else if (key == "grid.cfl") {
    config.grid.cfl = parse_double(key, value);
  } else if (key == "output.path") {
    config.output.path = value;
  } else if (key == "output.format") {
    parse_report_format(value);
    config.output.format = value;
  } else {
    config.parameters[key] = parse_double(key, value);
  }
}

ExperimentConfig parse_config(std::string_view text) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json_config(body);

  ExperimentConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("config line " + std::to_string(number) + ": expected key = value");
    }
    apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ParameterError("cannot read config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

std::string config_to_json(const ExperimentConfig& config) {
  nlohmann::ordered_json j;
  j["experiment"] = config.experiment;
  j["parameters"] = config.parameters;
  for (const auto& [label, spec] : {std::pair{"profile", &config.profile},
                                    std::pair{"psi", &config.psi}}) {
    if (*spec) j[label] = {{"name", (*spec)->name}, {"params", (*spec)->params}};
  }
  j["quadrature"] = {{"family", config.quadrature.family},
                     {"resolution", config.quadrature.resolution}};
  j["grid"] = {{"cells", config.grid.cells}, {"cfl", config.grid.cfl}};
  j["output"] = {{"path", config.output.path}, {"format", config.output.format}};
  j["seed"] = config.seed;
  if (config.tol) j["tol"] = *config.tol;
  return j.dump(2);
}

const std::vector<ExperimentInfo>& experiment_catalog() {
  static const std::vector<ExperimentInfo> catalog{
      {"dalembert-check", "1D: direct d'Alembert vs re-seeded at t1, over a 401-point grid"},
      {"eight-term", "1D: eight-wave split, back-wave pairs cancel, sum = half-sum of phi"},
      {"kirchhoff-case1", "3D pulse, sampling sphere inside the lit ball (ring reduction)"},
      {"kirchhoff-case2", "3D pulse, sampling sphere crossing the front (ring reduction)"},
      {"branch-continuity", "3D: Case I and Case II values as R + c tau -> c t1"},
      {"surface-vs-ring", "3D: Poisson formula by sphere quadrature vs ring reduction"},
      {"generalized-profile", "3D: primary wave f(r - c t)/r with an arbitrary shape f"},
      {"oracle-compare", "radial and 1D leapfrog oracles vs the closed forms"},
      {"convergence", "3D: surface-quadrature error as the sphere rule resolution doubles"},
  };
  return catalog;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  using Runner = std::function<void(const ExperimentConfig&, ExperimentReport&)>;
  static const std::map<std::string, Runner> runners{
      {"dalembert-check", run_dalembert_check},
      {"eight-term", run_eight_term},
      {"kirchhoff-case1",
       [](const auto& c, auto& r) { run_kirchhoff_case(c, r, SupportCase::CaseI); }},
      {"kirchhoff-case2",
       [](const auto& c, auto& r) { run_kirchhoff_case(c, r, SupportCase::CaseII); }},
      {"branch-continuity", run_branch_continuity},
      {"surface-vs-ring", run_surface_vs_ring},
      {"generalized-profile", run_generalized_profile},
      {"oracle-compare", run_oracle_compare},
      {"convergence", run_convergence},
  };
  auto it = runners.find(config.experiment);
  if (it == runners.end()) {
    throw ParameterError("unknown experiment '" + config.experiment + "'");
  }
  ExperimentReport report;
  report.experiment = config.experiment;
  report.settings["seed"] = std::to_string(config.seed);
  const auto start = std::chrono::steady_clock::now();
  it->second(config, report);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace huygens
