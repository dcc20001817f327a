#include "relosc/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <string>

#include "relosc/errors.hpp"
#include "relosc/geometry.hpp"
#include "relosc/oracle/fd_solver.hpp"
#include "relosc/spectra.hpp"
#include "relosc/wavefunctions.hpp"

namespace relosc::cli {

namespace {

constexpr unsigned kDefaultLevels = 5;
constexpr unsigned kDefaultValidateLevels = 6;
constexpr unsigned kDefaultPoints = 201;
constexpr unsigned kDefaultFdPoints = 4097;

ModelParams params_from(const Options& opts) {
  if (!opts.lambda) throw ParameterError("--lambda is required");
  return ModelParams(opts.m, opts.omega, *opts.lambda);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void echo_params(OutputRecord& rec, const Options& opts, const ModelParams& p) {
  rec.meta("m", p.m());
  rec.meta("omega", p.omega());
  rec.meta("lambda", p.lambda());
  const Regime regime = classify(p);
  rec.meta("regime", std::string(to_string(regime.tag)));
  rec.meta("is_rho", regime.is_rho);
  rec.meta("epsilon", p.epsilon());
  rec.meta("omega_hat", p.omega_hat());
  rec.meta("units", std::string("natural (hbar = c = 1)"));
  if (opts.timestamp) rec.meta("generated_at", utc_timestamp());
}

void add_shape_meta(OutputRecord& rec, const ModelParams& p) {
  switch (classify(p).tag) {
    case RegimeTag::PT:
      rec.meta("k", shape_k(p).value);
      rec.meta("well_half_width", domain(p).hi);
      break;
    case RegimeTag::RM:
      rec.meta("k_prime", shape_k_prime(p).value);
      rec.meta("threshold", continuum_threshold(p));
      rec.meta("n_max", static_cast<long long>(n_max(p)));
      break;
    case RegimeTag::Flat:
      break;
  }
}

std::vector<double> uniform_grid(double lo, double hi, unsigned points) {
  std::vector<double> xs(points);
  for (unsigned i = 0; i < points; ++i) {
    // symmetric construction keeps the grid exactly odd about 0
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    xs[i] = lo + t * (hi - lo);
  }
  if (points % 2 == 1 && lo == -hi) xs[points / 2] = 0.0;
  return xs;
}

// Sample half-width: strictly inside the PT walls, or the requested span.
double sample_half_width(const Options& opts, const ModelParams& p, double fallback) {
  if (p.lambda() < 0.0) {
    if (!(opts.margin > 0.0 && opts.margin < 1.0)) {
      throw ParameterError("--margin must lie in (0, 1)");
    }
    const double inner = domain(p).hi * (1.0 - opts.margin);
    return opts.xhat_max ? std::min(*opts.xhat_max, inner) : inner;
  }
  const double half = opts.xhat_max.value_or(fallback);
  if (!(half > 0.0) || !std::isfinite(half)) throw ParameterError("--xhat-max must be > 0");
  return half;
}

unsigned points_of(const Options& opts, unsigned fallback, unsigned minimum) {
  const unsigned pts = opts.points.value_or(fallback);
  if (pts < minimum) {
    throw ParameterError("--points must be >= " + std::to_string(minimum));
  }
  return pts;
}

}  // namespace

OutputRecord cmd_spectrum(const Options& opts) {
  const ModelParams p = params_from(opts);
  const bool rm = classify(p).tag == RegimeTag::RM;
  unsigned cap = opts.levels.value_or(kDefaultLevels);
  if (rm && !opts.levels) cap = static_cast<unsigned>(n_max(p) + 1);
  if (cap == 0) throw ParameterError("--levels must be positive");

  const SpectrumReport report = spectrum_report(p, cap);
  OutputRecord rec{"spectrum", {"n", "E_n", "E_n2", "regime"}, {}, {}};
  echo_params(rec, opts, p);
  rec.meta("levels", static_cast<long long>(cap));
  add_shape_meta(rec, p);
  const std::string regime(to_string(report.regime.tag));
  for (const Level& lvl : report.levels) {
    rec.rows.push_back({static_cast<long long>(lvl.n), lvl.energy, lvl.energy * lvl.energy, regime});
  }
  return rec;
}

OutputRecord cmd_potential(const Options& opts) {
  const ModelParams p = params_from(opts);
  const unsigned pts = points_of(opts, kDefaultPoints, 2);
  const double fallback = p.lambda() > 0.0 ? 5.0 / p.omega_hat() : 5.0 / std::sqrt(p.m() * p.omega());
  const double half = sample_half_width(opts, p, fallback);

  OutputRecord rec{"potential", {"xhat", "V", "conformal_factor"}, {}, {}};
  echo_params(rec, opts, p);
  rec.meta("points", static_cast<long long>(pts));
  rec.meta("xhat_max", half);
  if (p.lambda() < 0.0) rec.meta("margin", opts.margin);
  add_shape_meta(rec, p);
  if (p.lambda() > 0.0) rec.meta("V_asymptote", potential_asymptote(p));
  for (double x : uniform_grid(-half, half, pts)) {
    rec.rows.push_back({x, potential(p, x), conformal_factor(p, x)});
  }
  return rec;
}

OutputRecord cmd_wavefunction(const Options& opts) {
  const ModelParams p = params_from(opts);
  const unsigned pts = points_of(opts, kDefaultPoints, 3);
  OutputRecord rec{"wavefunction", {"xhat", "U"}, {}, {}};
  echo_params(rec, opts, p);
  rec.meta("points", static_cast<long long>(pts));

  if (opts.scattering) {
    if (!opts.energy) throw ParameterError("--scattering needs --energy");
    const ScatteringState st = make_scattering(p, opts.parity, *opts.energy);
    const double half = sample_half_width(opts, p, 5.0 / p.omega_hat());
    rec.meta("kind", std::string("scattering"));
    rec.meta("k_prime", st.shape());
    rec.meta("threshold", continuum_threshold(p));
    rec.meta("E", st.energy());
    rec.meta("nu", st.nu());
    rec.meta("parity", static_cast<long long>(st.parity()));
    rec.meta("N_nu", 1.0);
    rec.meta("xhat_max", half);
    for (double x : uniform_grid(-half, half, pts)) rec.rows.push_back({x, eval_scattering(st, x)});
    return rec;
  }

  if (!opts.n) throw ParameterError("wavefunction needs --n (or --scattering --energy)");
  const LevelIndex index{*opts.n};
  const BoundState st = normalize(p, index);
  const double half = sample_half_width(opts, p, decay_radius(p, index.n, 1e-8));
  rec.meta("kind", std::string("bound"));
  add_shape_meta(rec, p);
  rec.meta("n", static_cast<long long>(index.n));
  rec.meta("n_s", static_cast<long long>(index.n_s()));
  rec.meta("s", static_cast<long long>(index.s()));
  rec.meta("E_n", st.energy());
  rec.meta("E_n2", st.energy() * st.energy());
  rec.meta("norm", st.norm());
  rec.meta("norm_tolerance", st.norm_tolerance());
  rec.meta("nodes", static_cast<long long>(count_nodes(st, std::max(pts, 1024u))));
  if (p.lambda() >= 0.0) rec.meta("truncation_radius", st.support());
  rec.meta("xhat_max", half);
  for (double x : uniform_grid(-half, half, pts)) rec.rows.push_back({x, eval_bound(st, x)});
  return rec;
}

ValidationOutcome cmd_validate(const Options& opts) {
  const ModelParams p = params_from(opts);
  if (!(opts.tolerance > 0.0)) throw ParameterError("--tolerance must be > 0");
  const bool rm = classify(p).tag == RegimeTag::RM;
  unsigned count = opts.levels.value_or(kDefaultValidateLevels);
  if (rm) {
    const auto bound = static_cast<unsigned>(n_max(p) + 1);
    count = opts.levels ? std::min(*opts.levels, bound) : bound;
  }
  if (count == 0) throw ParameterError("--levels must be positive");

  oracle::FdConfig cfg;
  const unsigned coarse = points_of(opts, kDefaultFdPoints, 5);
  cfg.grid_sizes = {coarse, 2 * coarse - 1};
  cfg.count = count;
  const oracle::FdResult fd = oracle::fd_eigenvalues(p, cfg);

  OutputRecord rec{"validate", {"n", "E_closed", "E_fd", "abs_err", "rel_err", "pass"}, {}, {}};
  echo_params(rec, opts, p);
  add_shape_meta(rec, p);
  rec.meta("tolerance", opts.tolerance);
  rec.meta("grid_coarse", static_cast<long long>(cfg.grid_sizes[0]));
  rec.meta("grid_fine", static_cast<long long>(cfg.grid_sizes[1]));
  rec.meta("box_half_width", fd.hi);

  bool all = true;
  for (unsigned n = 0; n < count; ++n) {
    const double closed = level(p, {n});
    const double err = std::fabs(fd.energies[n] - closed);
    const double rel = err / closed;
    const bool ok = rel < opts.tolerance;
    all = all && ok;
    rec.rows.push_back({static_cast<long long>(n), closed, fd.energies[n], err, rel, ok});
  }
  if (rm) {
    const auto found = static_cast<long long>(oracle::fd_bound_count(p, cfg));
    const bool ok = found == n_max(p) + 1;
    rec.meta("fd_bound_count", found);
    rec.meta("bound_count_pass", ok);
    all = all && ok;
  }
  rec.meta("all_pass", all);
  return {std::move(rec), all};
}

OutputRecord cmd_limit(const Options& opts) {
  if (opts.eps_list.empty()) throw ParameterError("--eps-list must not be empty");
  for (std::size_t i = 0; i < opts.eps_list.size(); ++i) {
    const double e = opts.eps_list[i];
    if (!(e > 0.0) || !std::isfinite(e)) throw ParameterError("--eps-list values must be > 0");
    if (i > 0 && !(e < opts.eps_list[i - 1])) {
      throw ParameterError("--eps-list must be strictly decreasing");
    }
  }
  const bool want_pt = opts.branch == "pt" || opts.branch == "both";
  const bool want_rm = opts.branch == "rm" || opts.branch == "both";
  if (!want_pt && !want_rm) throw ParameterError("--branch must be pt, rm or both");
  const unsigned levels = opts.levels.value_or(3);
  if (levels == 0) throw ParameterError("--levels must be positive");

  const ModelParams flat(opts.m, opts.omega, 0.0);
  OutputRecord rec{"limit",
                   {"branch", "eps", "lambda", "eps2_shape", "m_over_omega", "n", "E_n", "E_flat",
                    "abs_dE2", "max_abs_dE2"},
                   {},
                   {}};
  rec.meta("m", opts.m);
  rec.meta("omega", opts.omega);
  rec.meta("branch", opts.branch);
  rec.meta("levels", static_cast<long long>(levels));
  if (opts.timestamp) rec.meta("generated_at", utc_timestamp());

  auto run = [&](const std::string& name, double sign) {
    double prev = INFINITY;
    bool monotone = true;
    for (double eps : opts.eps_list) {
      const ModelParams p(opts.m, opts.omega, sign * eps * eps);
      const double shape = sign < 0 ? shape_k(p).value : shape_k_prime(p).value;
      unsigned avail = levels;
      if (sign > 0) avail = static_cast<unsigned>(std::min<long>(levels, n_max(p) + 1));
      std::vector<std::vector<Cell>> rows;
      double worst = 0.0;
      for (unsigned n = 0; n < avail; ++n) {
        const double e = level(p, {n});
        const double ef = flat_level(flat, {n});
        const double d = std::fabs(e * e - ef * ef);
        worst = std::max(worst, d);
        rows.push_back({name, eps, p.lambda(), eps * eps * shape, opts.m / opts.omega,
                        static_cast<long long>(n), e, ef, d});
      }
      for (auto& r : rows) {
        r.push_back(worst);
        rec.rows.push_back(std::move(r));
      }
      monotone = monotone && worst < prev;
      prev = worst;
    }
    rec.meta("monotone_" + name, monotone);
  };
  if (want_pt) run("pt", -1.0);
  if (want_rm) run("rm", +1.0);
  return rec;
}

}  // namespace relosc::cli
