// SPDX-License-Identifier: Apache-2.0

#include "spiralspec/kinetics.hpp"

#include <cmath>
#include <mutex>

#include "spiralspec/errors.hpp"
#include "spiralspec/fourier.hpp"
#include "spiralspec/wavetrain.hpp"

namespace spiralspec {

namespace {

double get(const std::map<std::string, double>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ConfigError("missing kinetics parameter '" + key + "'");
  return it->second;
}

std::pair<double, double> barkley_reaction(double u, double v,
                                           const std::map<std::string, double>& p) {
  const double a = get(p, "a"), b = get(p, "b"), eps = get(p, "epsilon");
  const double f = (1.0 / eps) * u * (1.0 - u) * (u - (v + b) / a);
  const double g = u - v;
  return {f, g};
}

Eigen::Matrix2d barkley_jacobian(double u, double v,
                                 const std::map<std::string, double>& p) {
  const double a = get(p, "a"), b = get(p, "b"), eps = get(p, "epsilon");
  const double w = (v + b) / a;
  Eigen::Matrix2d j;
  j(0, 0) = (1.0 / eps) * ((1.0 - 2.0 * u) * (u - w) + u * (1.0 - u));
  j(0, 1) = -(1.0 / (a * eps)) * u * (1.0 - u);
  j(1, 0) = 1.0;
  j(1, 1) = -1.0;
  return j;
}

double theta_s(double x, double s) { return 0.5 * (1.0 + std::tanh(s * x)); }

// Karma kinetics with smoothed Heaviside theta_s; the time-scale ratio 400,
// the gating rate 4, and the plateau constant 1.5414 are part of the model.
std::pair<double, double> karma_reaction(double u, double v,
                                         const std::map<std::string, double>& p) {
  const double mu = get(p, "mu_K"), s = get(p, "s");
  const double f =
      400.0 * (-u + (1.5414 - v * v * v * v) * (1.0 - std::tanh(u - 3.0)) * 0.5 * u * u);
  const double g = 4.0 * (theta_s(u - 1.0, s) / (1.0 - std::exp(-mu)) - v);
  return {f, g};
}

Eigen::Matrix2d karma_jacobian(double u, double v,
                               const std::map<std::string, double>& p) {
  const double mu = get(p, "mu_K"), s = get(p, "s");
  const double th = std::tanh(u - 3.0);
  const double sech2 = 1.0 - th * th;
  const double plateau = 1.5414 - v * v * v * v;
  Eigen::Matrix2d j;
  j(0, 0) = 400.0 * (-1.0 + plateau * ((1.0 - th) * u - 0.5 * sech2 * u * u));
  j(0, 1) = 400.0 * (-4.0 * v * v * v) * (1.0 - th) * 0.5 * u * u;
  const double ths = std::tanh(s * (u - 1.0));
  j(1, 0) = 4.0 / (1.0 - std::exp(-mu)) * 0.5 * s * (1.0 - ths * ths);
  j(1, 1) = -4.0;
  return j;
}

struct ModelDef {
  KineticsFunctions fns;
  std::map<std::string, double> defaults;
  double d_u = 1.0;
};

std::map<std::string, ModelDef>& registry() {
  static std::map<std::string, ModelDef> reg = {
      {"barkley",
       {{barkley_reaction, barkley_jacobian},
        {{"a", 0.7}, {"b", 0.001}, {"epsilon", 0.02}},
        1.0}},
      {"karma", {{karma_reaction, karma_jacobian}, {{"mu_K", 1.2}, {"s", 4.0}}, 1.1}},
  };
  return reg;
}

std::mutex registry_mutex;

const ModelDef& lookup(const std::string& name) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto it = registry().find(name);
  if (it == registry().end())
    throw ConfigError("unknown kinetics model '" + name + "'");
  return it->second;
}

}  // namespace

KineticsModel make_model(const std::string& name,
                         const std::map<std::string, double>& overrides,
                         double delta) {
  const ModelDef& def = lookup(name);
  KineticsModel m;
  m.name = name;
  m.params = def.defaults;
  m.d_u = def.d_u;
  m.delta = delta;
  for (const auto& [key, value] : overrides) {
    if (key == "d_u") {
      m.d_u = value;
      continue;
    }
    if (m.params.find(key) == m.params.end())
      throw ConfigError("unknown parameter '" + key + "' for model '" + name + "'");
    m.params[key] = value;
  }
  if (m.d_u <= 0.0) throw ConfigError("d_u must be positive");
  if (m.delta < 0.0) throw ConfigError("delta must be nonnegative");
  return m;
}

void register_model(const std::string& name, KineticsFunctions fns,
                    std::map<std::string, double> default_params,
                    double default_d_u) {
  if (!fns.reaction) throw ConfigError("registered model needs a reaction function");
  std::lock_guard<std::mutex> lock(registry_mutex);
  registry()[name] = ModelDef{std::move(fns), std::move(default_params), default_d_u};
}

bool is_known_model(const std::string& name) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  return registry().count(name) > 0;
}

std::pair<double, double> evaluate_kinetics(const KineticsModel& model, double u,
                                            double v) {
  return lookup(model.name).fns.reaction(u, v, model.params);
}

Eigen::Matrix2d evaluate_jacobian(const KineticsModel& model, double u, double v) {
  const ModelDef& def = lookup(model.name);
  if (def.fns.jacobian) return def.fns.jacobian(u, v, model.params);
  // Central differences for user models without an analytic Jacobian.
  const double h = 1e-6;
  auto f = [&](double uu, double vv) { return def.fns.reaction(uu, vv, model.params); };
  Eigen::Matrix2d j;
  auto [fp_u, gp_u] = f(u + h, v);
  auto [fm_u, gm_u] = f(u - h, v);
  auto [fp_v, gp_v] = f(u, v + h);
  auto [fm_v, gm_v] = f(u, v - h);
  j(0, 0) = (fp_u - fm_u) / (2 * h);
  j(1, 0) = (gp_u - gm_u) / (2 * h);
  j(0, 1) = (fp_v - fm_v) / (2 * h);
  j(1, 1) = (gp_v - gm_v) / (2 * h);
  return j;
}

void PeriodicCoefficients::validate() const {
  if (n < 8 || n % 2 != 0)
    throw ConfigError("coefficient grid must be even with n >= 8, got " +
                      std::to_string(n));
  if (f1.size() != n || f2.size() != n || g1.size() != n || g2.size() != n)
    throw ConfigError("coefficient arrays must all have length n");
  if (kappa <= 0.0) throw ConfigError("kappa must be positive");
  if (omega <= 0.0) throw ConfigError("omega must be positive");
  if (delta < 0.0) throw ConfigError("delta must be nonnegative");
  if (!g2.isFinite().all() || !g1.isFinite().all() || !f1.isFinite().all() ||
      !f2.isFinite().all())
    throw NumericalError("non-finite coefficient samples");
}

PeriodicCoefficients sample_coefficients(const KineticsModel& model,
                                         const WaveTrain& wavetrain) {
  const int n = wavetrain.n;
  if (wavetrain.u.size() != n || wavetrain.v.size() != n)
    throw ConfigError("wave-train profile length does not match n");
  if (!wavetrain.u.isFinite().all() || !wavetrain.v.isFinite().all())
    throw NumericalError("invalid wave train: non-finite profile values");

  PeriodicCoefficients c;
  c.n = n;
  const double root = std::sqrt(model.d_u);
  c.kappa = wavetrain.kappa * root;
  c.omega = wavetrain.omega / root;
  c.delta = model.delta / model.d_u;
  c.d_u_original = model.d_u;
  c.x = fourier::grid(n, 2.0 * M_PI / c.kappa);
  c.f1.resize(n);
  c.f2.resize(n);
  c.g1.resize(n);
  c.g2.resize(n);
  for (int j = 0; j < n; ++j) {
    const Eigen::Matrix2d jac =
        evaluate_jacobian(model, wavetrain.u[j], wavetrain.v[j]);
    c.f1[j] = jac(0, 0);
    c.f2[j] = jac(0, 1);
    c.g1[j] = jac(1, 0);
    c.g2[j] = jac(1, 1);
  }
  c.validate();
  return c;
}

PeriodicCoefficients make_coefficients(double kappa, double omega, double delta,
                                       const Eigen::ArrayXd& f1,
                                       const Eigen::ArrayXd& f2,
                                       const Eigen::ArrayXd& g1,
                                       const Eigen::ArrayXd& g2) {
  PeriodicCoefficients c;
  c.n = static_cast<int>(f1.size());
  c.kappa = kappa;
  c.omega = omega;
  c.delta = delta;
  c.x = fourier::grid(c.n, 2.0 * M_PI / kappa);
  c.f1 = f1;
  c.f2 = f2;
  c.g1 = g1;
  c.g2 = g2;
  c.validate();
  return c;
}

}  // namespace spiralspec
