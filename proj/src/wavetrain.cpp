// SPDX-License-Identifier: Apache-2.0

#include "spiralspec/wavetrain.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <cstdio>

#include "spiralspec/errors.hpp"
#include "spiralspec/fourier.hpp"

namespace spiralspec {

namespace {

struct Discretization {
  int n;
  double length;
  Eigen::MatrixXd d1, d2;
  Discretization(int n_, double kappa)
      : n(n_), length(2.0 * M_PI / kappa),
        d1(fourier::diff1(n_, length)),
        d2(fourier::diff2(n_, length)) {}
};

Eigen::VectorXd pde_residual(const KineticsModel& model, const Discretization& disc,
                             const Eigen::ArrayXd& u, const Eigen::ArrayXd& v,
                             double omega) {
  const int n = disc.n;
  Eigen::VectorXd uxx = disc.d2 * u.matrix();
  Eigen::VectorXd vxx = disc.d2 * v.matrix();
  Eigen::VectorXd ux = disc.d1 * u.matrix();
  Eigen::VectorXd vx = disc.d1 * v.matrix();
  Eigen::VectorXd r(2 * n);
  for (int j = 0; j < n; ++j) {
    auto [f, g] = evaluate_kinetics(model, u[j], v[j]);
    r[j] = model.d_u * uxx[j] + omega * ux[j] + f;
    r[n + j] = model.delta * vxx[j] + omega * vx[j] + g;
  }
  return r;
}

}  // namespace

double residual(const KineticsModel& model, const Eigen::ArrayXd& u,
                const Eigen::ArrayXd& v, double omega, double kappa) {
  if (u.size() != v.size()) throw ConfigError("profile arrays differ in length");
  Discretization disc(static_cast<int>(u.size()), kappa);
  return pde_residual(model, disc, u, v, omega).lpNorm<Eigen::Infinity>();
}

WaveTrain solve(const KineticsModel& model, double kappa, const Profile& seed,
                const NewtonOptions& opts) {
  const int n = static_cast<int>(seed.u.size());
  if (n < 8 || n % 2 != 0) throw ConfigError("seed grid must be even with n >= 8");
  if (seed.v.size() != n) throw ConfigError("seed arrays differ in length");
  Discretization disc(n, kappa);

  // Phase anchor: the seed derivative. A constant seed has no translation
  // phase to pin and the closing row vanishes.
  Eigen::VectorXd du_seed = disc.d1 * seed.u.matrix();
  Eigen::VectorXd dv_seed = disc.d1 * seed.v.matrix();
  const double anchor_norm =
      du_seed.lpNorm<Eigen::Infinity>() + dv_seed.lpNorm<Eigen::Infinity>();
  if (anchor_norm < 1e-8)
    throw DegenerateSolutionError("seed profile is constant; phase condition degenerate");

  Eigen::ArrayXd u = seed.u, v = seed.v;
  double omega = seed.omega_guess > 0.0 ? seed.omega_guess : 1.0;

  auto full_residual = [&](const Eigen::ArrayXd& uu, const Eigen::ArrayXd& vv,
                           double om) {
    Eigen::VectorXd r(2 * n + 1);
    r.head(2 * n) = pde_residual(model, disc, uu, vv, om);
    double phase = 0.0;
    for (int j = 0; j < n; ++j)
      phase += du_seed[j] * (uu[j] - seed.u[j]) + dv_seed[j] * (vv[j] - seed.v[j]);
    r[2 * n] = phase / n;
    return r;
  };

  Eigen::VectorXd r = full_residual(u, v, omega);
  double rnorm = r.lpNorm<Eigen::Infinity>();

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    if (opts.trace)
      std::fprintf(stderr, "  newton[%d] res=%.3e omega=%.6f\n", iter, rnorm, omega);
    if (rnorm < opts.tol) break;

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(2 * n + 1, 2 * n + 1);
    jac.block(0, 0, n, n) = model.d_u * disc.d2 + omega * disc.d1;
    jac.block(n, n, n, n) = model.delta * disc.d2 + omega * disc.d1;
    for (int j = 0; j < n; ++j) {
      const Eigen::Matrix2d k = evaluate_jacobian(model, u[j], v[j]);
      jac(j, j) += k(0, 0);
      jac(j, n + j) = k(0, 1);
      jac(n + j, j) = k(1, 0);
      jac(n + j, n + j) += k(1, 1);
    }
    jac.block(0, 2 * n, n, 1) = disc.d1 * u.matrix();
    jac.block(n, 2 * n, n, 1) = disc.d1 * v.matrix();
    jac.block(2 * n, 0, 1, n) = du_seed.transpose() / n;
    jac.block(2 * n, n, 1, n) = dv_seed.transpose() / n;

    Eigen::VectorXd step = jac.partialPivLu().solve(-r);

    // Damped update: halve until the residual decreases.
    double scale = 1.0;
    Eigen::ArrayXd u_new, v_new;
    double omega_new = omega, rnorm_new = rnorm;
    bool accepted = false;
    for (int d = 0; d <= opts.max_damping; ++d) {
      u_new = u + scale * step.head(n).array();
      v_new = v + scale * step.segment(n, n).array();
      omega_new = omega + scale * step[2 * n];
      Eigen::VectorXd r_new = full_residual(u_new, v_new, omega_new);
      rnorm_new = r_new.lpNorm<Eigen::Infinity>();
      if (std::isfinite(rnorm_new) && rnorm_new < rnorm) {
        r = r_new;
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted)
      throw NoConvergenceError("wave-train Newton stalled (no descent direction)", rnorm);
    u = u_new;
    v = v_new;
    omega = omega_new;
    rnorm = rnorm_new;
  }

  if (!(rnorm < opts.tol))
    throw NoConvergenceError("wave-train Newton did not converge", rnorm);
  if ((u.maxCoeff() - u.minCoeff()) + (v.maxCoeff() - v.minCoeff()) < 1e-8)
    throw DegenerateSolutionError("Newton collapsed onto a constant profile");
  if (omega <= 0.0)
    throw NoConvergenceError("converged to nonpositive omega", rnorm);

  WaveTrain wt;
  wt.n = n;
  wt.u = u;
  wt.v = v;
  wt.kappa = kappa;
  wt.omega = omega;
  wt.delta = model.delta;
  wt.residual_norm = pde_residual(model, disc, u, v, omega).lpNorm<Eigen::Infinity>();
  return wt;
}

namespace {

// Rest state near (0,0): a few Newton steps on the kinetics alone.
std::pair<double, double> rest_state(const KineticsModel& model) {
  double u = 0.0, v = 0.0;
  for (int it = 0; it < 50; ++it) {
    auto [f, g] = evaluate_kinetics(model, u, v);
    if (std::abs(f) + std::abs(g) < 1e-14) break;
    Eigen::Matrix2d j = evaluate_jacobian(model, u, v);
    Eigen::Vector2d step = j.partialPivLu().solve(Eigen::Vector2d(-f, -g));
    u += step[0];
    v += step[1];
  }
  return {u, v};
}

double smooth_box(double x, double lo, double hi, double w) {
  return 0.5 * (std::tanh((x - lo) / w) - std::tanh((x - hi) / w));
}

}  // namespace

Profile simulate_seed(const KineticsModel& model, double kappa, int n, double t_end,
                      const SimulateOptions& opts) {
  if (t_end < 0.0) throw ConfigError("t_end must be nonnegative");
  const double length = 2.0 * M_PI / kappa;
  Eigen::ArrayXd x = fourier::grid(n, length);
  auto [ur, vr] = rest_state(model);

  // Pulse ignition dressed with its own exponential recovery wake, as if
  // steady circulation were already underway. The wake decay rate comes
  // from the linearized v-relaxation at rest.
  const bool karma_like = model.name == "karma";
  double amp_u = opts.pulse_amp > 0 ? opts.pulse_amp : (karma_like ? 3.0 : 1.0);
  double amp_v = opts.wake_amp > 0 ? opts.wake_amp : (karma_like ? 1.15 : 0.5);
  double c_guess =
      opts.speed_guess > 0 ? opts.speed_guess : (karma_like ? 30.0 : 3.5);
  const double rate = std::max(0.1, -evaluate_jacobian(model, ur, vr)(1, 1));
  const double w = length / 200.0;
  const double x0 = 0.30 * length;
  Eigen::ArrayXd u(n), v(n);
  for (int j = 0; j < n; ++j) {
    u[j] = ur + amp_u * smooth_box(x[j], x0, x0 + 0.05 * length, w);
    double behind = x0 - x[j];
    while (behind < 0) behind += length;
    v[j] = vr;
    if (behind > 0.0 && behind < 0.85 * length)
      v[j] += amp_v * std::exp(-rate * behind / c_guess);
  }
  if (t_end == 0.0) return Profile{u, v, 0.0};

  // Surgical cleanup removes the counter-propagating pulse once the forward
  // pulse has a formed back; re-attempted on a short schedule because the
  // back-formation time is kinetics-dependent.
  int cleanup_attempt = 0;
  const int max_cleanup_attempts = 7;
  auto cleanup_time = [&](int k) { return (0.25 + 0.15 * k) * length / c_guess; };
  bool cleanup_done = cleanup_time(0) >= 0.6 * t_end;  // run too short; skip

  Eigen::MatrixXd d2 = fourier::diff2(n, length);

  double max_j = 1.0;
  auto stiffness = [&]() {
    double m = 1e-12;
    for (int j = 0; j < n; j += 4) {
      Eigen::Matrix2d k = evaluate_jacobian(model, u[j], v[j]);
      m = std::max(m, std::abs(k(0, 0)) + std::abs(k(0, 1)));
      m = std::max(m, std::abs(k(1, 0)) + std::abs(k(1, 1)));
    }
    return m;
  };

  double t = 0.0;
  int step_count = 0;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_u, lu_v;
  double dt = -1.0, dt_factored = -1.0;

  // Speed estimate from a fixed-point clock: successive upward crossings of
  // a threshold at probe x=0 give the ring rotation period L/|c|; the
  // crossing order at a second probe fixes the sign.
  const double u_threshold = ur + 0.5 * amp_u;
  double prev_probe = u[0], prev_probe_q = u[n / 4];
  double last_cross = -1.0, rotation_period = 0.0;
  double quarter_lag = 0.0, last_cross_q = -1.0;

  while (t < t_end) {
    if (step_count % 50 == 0) max_j = stiffness();
    double dt_new = std::min(opts.dt_safety / max_j, opts.dt_max);
    dt_new = std::min(dt_new, t_end - t);
    if (dt_new <= 0.0) break;
    if (dt_new != dt_factored) {
      dt = dt_new;
      Eigen::MatrixXd au =
          Eigen::MatrixXd::Identity(n, n) - dt * model.d_u * d2;
      lu_u.compute(au);
      if (model.delta > 0.0) {
        Eigen::MatrixXd av =
            Eigen::MatrixXd::Identity(n, n) - dt * model.delta * d2;
        lu_v.compute(av);
      }
      dt_factored = dt;
    }

    Eigen::ArrayXd fu(n), gv(n);
    for (int j = 0; j < n; ++j) {
      auto [f, g] = evaluate_kinetics(model, u[j], v[j]);
      fu[j] = f;
      gv[j] = g;
    }
    Eigen::VectorXd rhs_u = (u + dt * fu).matrix();
    u = lu_u.solve(rhs_u).array();
    if (model.delta > 0.0) {
      Eigen::VectorXd rhs_v = (v + dt * gv).matrix();
      v = lu_v.solve(rhs_v).array();
    } else {
      v = v + dt * gv;
    }
    t += dt;
    ++step_count;

    if (!cleanup_done && cleanup_attempt < max_cleanup_attempts &&
        t >= cleanup_time(cleanup_attempt)) {
      ++cleanup_attempt;
      if (cleanup_attempt == max_cleanup_attempts) cleanup_done = true;
      int front;
      u.maxCoeff(&front);
      const double xf = x[front];
      auto arc_behind = [&](int j) {
        double behind = xf - x[j];
        while (behind < 0) behind += length;
        return behind;
      };
      // A counter-propagating pulse shows up deep in the arc behind the
      // front, where the forward pulse cannot have reached yet. Slow-recovery
      // kinetics hold the wake blocker on their own and skip the cleanup.
      bool backward = false;
      for (int j = 0; j < n && !backward; ++j) {
        const double db = arc_behind(j);
        if (db > 0.45 * length && db < 0.88 * length && u[j] - ur > 0.3 * amp_u)
          backward = true;
      }
      if (backward) {
        // Cut just behind the forward pulse's back, where the wake is
        // freshest and the medium most refractory.
        double db_back = 0.0;
        for (int k = 0; k < n; ++k) {
          const double db = k * length / n;
          if (db > 0.05 * length) {
            const double xq = xf - db;
            const double uq = fourier::interp_point(
                Eigen::VectorXd(u.matrix()), length,
                xq < 0 ? xq + length : xq);
            if (uq - ur < 0.15 * amp_u) {
              db_back = db;
              break;
            }
          }
        }
        if (db_back > 0.0 && db_back < 0.55 * length) {
          for (int j = 0; j < n; ++j) {
            const double db = arc_behind(j);
            if (db >= db_back + 2.0 * length / n && db <= 0.97 * length)
              u[j] = ur;
          }
          cleanup_done = true;
        }
      }
    }

    if (step_count % opts.check_every == 0) {
      if (!u.isFinite().all() || !v.isFinite().all())
        throw SimulationFailureError("seed simulation blew up at t=" +
                                     std::to_string(t));
    }

    if (t > 0.35 * t_end) {
      if (prev_probe < u_threshold && u[0] >= u_threshold) {
        if (last_cross >= 0.0) rotation_period = t - last_cross;
        last_cross = t;
      }
      if (prev_probe_q < u_threshold && u[n / 4] >= u_threshold) {
        if (last_cross >= 0.0 && last_cross_q < last_cross)
          quarter_lag = t - last_cross;
        last_cross_q = t;
      }
      prev_probe = u[0];
      prev_probe_q = u[n / 4];
    }
  }

  if (!u.isFinite().all() || !v.isFinite().all())
    throw SimulationFailureError("seed simulation produced non-finite values");

  int peak;
  u.maxCoeff(&peak);
  Eigen::VectorXd us = fourier::roll_to_front(u.matrix(), peak);
  Eigen::VectorXd vs = fourier::roll_to_front(v.matrix(), peak);

  double speed = rotation_period > 0.0 ? length / rotation_period : 0.0;
  // Rightward motion reaches the quarter probe shortly after x=0.
  const bool leftward =
      rotation_period > 0.0 && quarter_lag > 0.5 * rotation_period;
  if (leftward) {
    Eigen::VectorXd um(n), vm(n);
    for (int j = 0; j < n; ++j) {
      um[j] = us[(n - j) % n];
      vm[j] = vs[(n - j) % n];
    }
    us = um;
    vs = vm;
  }
  return Profile{us.array(), vs.array(), speed};
}

std::vector<WaveTrain> continue_in_delta(const KineticsModel& model,
                                         const WaveTrain& start,
                                         const std::vector<double>& delta_targets,
                                         const ContinuationOptions& opts) {
  std::vector<WaveTrain> family;
  WaveTrain cur = start;
  WaveTrain prev = start;
  bool have_prev = false;

  auto correct = [&](double delta, const Profile& pred) {
    KineticsModel m = model;
    m.delta = delta;
    return solve(m, start.kappa, pred, opts.newton);
  };

  for (double target : delta_targets) {
    double from = cur.delta;
    double remaining = target - from;
    if (std::abs(remaining) < 1e-15) {
      Profile p{cur.u, cur.v, cur.omega};
      cur = correct(target, p);
      family.push_back(cur);
      continue;
    }
    double step = remaining;
    while (std::abs(target - cur.delta) > 1e-15) {
      step = (target - cur.delta >= 0.0) ? std::min(step, target - cur.delta)
                                         : std::max(step, target - cur.delta);
      if (std::abs(step) < opts.min_step)
        throw ContinuationStalledError("delta continuation stalled", cur.delta);
      const double next = cur.delta + step;
      Profile pred{cur.u, cur.v, cur.omega};
      if (have_prev && std::abs(cur.delta - prev.delta) > 1e-15) {
        const double r = step / (cur.delta - prev.delta);
        pred.u = cur.u + r * (cur.u - prev.u);
        pred.v = cur.v + r * (cur.v - prev.v);
        pred.omega_guess = cur.omega + r * (cur.omega - prev.omega);
        if (pred.omega_guess <= 0.0) pred.omega_guess = cur.omega;
      }
      try {
        WaveTrain sol = correct(next, pred);
        prev = cur;
        have_prev = true;
        cur = sol;
      } catch (const NumericalError&) {
        step *= 0.5;
        continue;
      }
    }
    family.push_back(cur);
  }
  return family;
}

std::vector<WaveTrain> continue_in_kappa(const KineticsModel& model,
                                         const WaveTrain& start,
                                         const std::vector<double>& kappa_targets,
                                         const ContinuationOptions& opts) {
  std::vector<WaveTrain> family;
  WaveTrain cur = start;
  WaveTrain prev = start;
  bool have_prev = false;

  auto correct = [&](double kappa, const Profile& pred) {
    return solve(model, kappa, pred, opts.newton);
  };

  for (double target : kappa_targets) {
    double step = target - cur.kappa;
    while (std::abs(target - cur.kappa) > 1e-15) {
      step = (target - cur.kappa >= 0.0) ? std::min(step, target - cur.kappa)
                                         : std::max(step, target - cur.kappa);
      if (std::abs(step) < opts.min_step)
        throw ContinuationStalledError("kappa continuation stalled", cur.kappa);
      const double next = cur.kappa + step;
      Profile pred{cur.u, cur.v, cur.omega};
      if (have_prev && std::abs(cur.kappa - prev.kappa) > 1e-15) {
        const double r = step / (cur.kappa - prev.kappa);
        pred.u = cur.u + r * (cur.u - prev.u);
        pred.v = cur.v + r * (cur.v - prev.v);
        pred.omega_guess = cur.omega + r * (cur.omega - prev.omega);
        if (pred.omega_guess <= 0.0) pred.omega_guess = cur.omega;
      }
      try {
        WaveTrain sol = correct(next, pred);
        prev = cur;
        have_prev = true;
        cur = sol;
      } catch (const NumericalError&) {
        step *= 0.5;
        continue;
      }
    }
    family.push_back(cur);
  }
  return family;
}

void save_profile_csv(const std::string& path, double kappa,
                      const Eigen::ArrayXd& u, const Eigen::ArrayXd& v) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  const int n = static_cast<int>(u.size());
  Eigen::ArrayXd x = fourier::grid(n, 2.0 * M_PI / kappa);
  out << "x,u,v\n";
  out.precision(17);
  for (int j = 0; j < n; ++j) out << x[j] << "," << u[j] << "," << v[j] << "\n";
  if (!out) throw IoError("write failed for '" + path + "'");
}

Profile load_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string line;
  std::vector<double> us, vs;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.find("x") != std::string::npos) continue;  // header
    }
    std::istringstream ss(line);
    std::string tok;
    double cols[3];
    for (int c = 0; c < 3; ++c) {
      if (!std::getline(ss, tok, ',')) throw IoError("malformed profile CSV row");
      cols[c] = std::stod(tok);
    }
    us.push_back(cols[1]);
    vs.push_back(cols[2]);
  }
  Profile p;
  p.u = Eigen::Map<Eigen::ArrayXd>(us.data(), us.size());
  p.v = Eigen::Map<Eigen::ArrayXd>(vs.data(), vs.size());
  return p;
}

}  // namespace spiralspec
