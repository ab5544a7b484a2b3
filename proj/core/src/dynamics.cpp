/*
   Copyright 2026 the fockdyn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fockdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fockdyn {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct LinFit {
  double intercept;
  double slope;
};

LinFit least_squares(const std::vector<double>& xs,
                     const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) return {ys.empty() ? 0.0 : ys[0], 0.0};
  return {(sy * sxx - sx * sxy) / det, (n * sxy - sx * sy) / det};
}

// Solve the 3x3 system for the model y = a + c*u + d*v by Cramer's rule.
bool solve3(const double u[3], const double v[3], const double y[3],
            double& a, double& c, double& d) {
  const double M[3][3] = {{1.0, u[0], v[0]}, {1.0, u[1], v[1]}, {1.0, u[2], v[2]}};
  auto det3 = [](const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const double det = det3(M);
  if (std::fabs(det) < 1e-300) return false;
  double Ma[3][3], Mc[3][3], Md[3][3];
  for (int i = 0; i < 3; ++i) {
    Ma[i][0] = y[i]; Ma[i][1] = u[i]; Ma[i][2] = v[i];
    Mc[i][0] = 1.0;  Mc[i][1] = y[i]; Mc[i][2] = v[i];
    Md[i][0] = 1.0;  Md[i][1] = u[i]; Md[i][2] = y[i];
  }
  a = det3(Ma) / det;
  c = det3(Mc) / det;
  d = det3(Md) / det;
  return true;
}

OrbitTrend classify_trend(const std::vector<NormSample>& norms,
                          double slope_tol) {
  const std::size_t n = norms.size();
  if (n < 4) return OrbitTrend::bounded_so_far;
  const std::size_t lo = (3 * n) / 4;
  bool nondecreasing = true, nonincreasing = true;
  double mean_diff = 0.0;
  std::size_t count = 0;
  for (std::size_t i = std::max<std::size_t>(lo, 1); i < n; ++i) {
    const double d = norms[i].log_norm - norms[i - 1].log_norm;
    nondecreasing = nondecreasing && d >= -1e-12;
    nonincreasing = nonincreasing && d <= 1e-12;
    mean_diff += d;
    ++count;
  }
  mean_diff /= static_cast<double>(std::max<std::size_t>(count, 1));
  if (nondecreasing && mean_diff > slope_tol) return OrbitTrend::growing;
  if (nonincreasing && mean_diff < -slope_tol) return OrbitTrend::decaying;
  return OrbitTrend::bounded_so_far;
}

// n-fold application with running rescaling, so coefficient magnitudes stay
// representable; returns the normalized series plus the dropped log factor.
struct ScaledSeries {
  TaylorSeries f;
  double log_scale;
};

ScaledSeries apply_scaled_once(const CoeffOperator& op, ScaledSeries s) {
  s.f = op.apply(s.f);
  double peak = 0.0;
  for (const auto& c : s.f.coeffs()) peak = std::max(peak, std::abs(c));
  if (peak > 0.0 && (peak > 1e100 || peak < 1e-100)) {
    s.f = s.f.scaled(cplx(1.0 / peak, 0.0));
    s.log_scale += std::log(peak);
  }
  return s;
}

double route_norm_log(const SpaceParams& space, const TaylorSeries& f,
                      const QuadratureConfig& qcfg) {
  if (f.is_zero()) return kNegInf;
  if (f.nonzero_count() == 1) {  // c z^n: ||f|| = |c| ||z^n|| in closed form
    const long n = f.degree();
    const double lc = std::log(std::abs(f.coeffs().back()));
    return lc + (space.sup_norm() ? monomial_norm_sup_log(space, n)
                                  : monomial_norm_log(space, n));
  }
  if (space.sup_norm()) return norm_sup(space, f).log_value;
  if (space.p == 2.0) return norm_parseval_log(space, f);
  return norm_quadrature_log(space, f, qcfg);
}

// Columns of T^n e_k maintained incrementally in orthonormal coordinates.
class PowerColumns {
 public:
  PowerColumns(const SpaceParams& space, const CoeffOperator& op, long cols,
               long nmax, const MonomialNormCache* cache)
      : coord_(space, op, cols + (nmax + 2) * std::max(op.max_shift(), 0L) + 2,
               cache),
        cols_(cols) {
    col_.resize(static_cast<std::size_t>(cols));
    for (long k = 0; k < cols; ++k) {
      col_[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k) + 1,
                                               cplx(0.0, 0.0));
      col_[static_cast<std::size_t>(k)].back() = cplx(1.0, 0.0);
    }
  }

  void step() {
    for (auto& c : col_) c = coord_.apply(c);
  }

  long cols() const { return cols_; }
  const std::vector<std::vector<cplx>>& columns() const { return col_; }

  SectionMatrix section() const {
    SectionMatrix M;
    M.cols = cols_;
    M.rows = 0;
    for (const auto& c : col_)
      M.rows = std::max(M.rows, static_cast<long>(c.size()));
    M.col.resize(static_cast<std::size_t>(cols_));
    for (long k = 0; k < cols_; ++k) {
      auto c = col_[static_cast<std::size_t>(k)];
      c.resize(static_cast<std::size_t>(M.rows), cplx(0.0, 0.0));
      M.col[static_cast<std::size_t>(k)] = std::move(c);
    }
    return M;
  }

 private:
  CoordOperator coord_;
  long cols_;
  std::vector<std::vector<cplx>> col_;
};

SectionMatrix combine(const SectionMatrix& A, double ca,
                      const SectionMatrix& B, double cb) {
  SectionMatrix M;
  M.cols = A.cols;
  M.rows = std::max(A.rows, B.rows);
  M.col.resize(static_cast<std::size_t>(M.cols));
  for (long k = 0; k < M.cols; ++k) {
    std::vector<cplx> c(static_cast<std::size_t>(M.rows), cplx(0.0, 0.0));
    const auto& a = A.col[static_cast<std::size_t>(k)];
    for (std::size_t r = 0; r < a.size(); ++r) c[r] += ca * a[r];
    if (k < B.cols) {
      const auto& b = B.col[static_cast<std::size_t>(k)];
      for (std::size_t r = 0; r < b.size(); ++r) c[r] += cb * b[r];
    }
    M.col[static_cast<std::size_t>(k)] = std::move(c);
  }
  return M;
}

}  // namespace

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::yes: return "true";
    case ProbeVerdict::no: return "false";
    case ProbeVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(OrbitTrend t) {
  switch (t) {
    case OrbitTrend::bounded_so_far: return "bounded-so-far";
    case OrbitTrend::growing: return "growing";
    case OrbitTrend::decaying: return "decaying";
  }
  return "?";
}

const char* to_string(NormMethod m) {
  switch (m) {
    case NormMethod::exact_shift: return "exact-shift";
    case NormMethod::matrix_section: return "matrix";
    case NormMethod::test_vector: return "test-vector";
  }
  return "?";
}

const char* to_string(RatioTrend t) {
  switch (t) {
    case RatioTrend::to_zero: return "ratio-to-0";
    case RatioTrend::to_infinity: return "ratio-to-inf";
    case RatioTrend::bounded: return "boundary-bounded-ratio";
  }
  return "?";
}

OrbitReport iterate_norm_sequence(const SpaceParams& space,
                                  const CoeffOperator& op, long nmax,
                                  NormMethod method, const ProbeConfig& cfg) {
  space.validate();
  if (nmax < 1) throw std::invalid_argument("iterate_norm_sequence: nmax < 1");

  OrbitReport report;
  report.method = method;
  report.norms.reserve(static_cast<std::size_t>(nmax));

  switch (method) {
    case NormMethod::exact_shift: {
      if (space.p != 2.0 || !op.single_term())
        throw std::invalid_argument(
            "iterate_norm_sequence: exact-shift needs p = 2 and a single term");
      MonomialNormCache cache(space);
      for (long n = 1; n <= nmax; ++n) {
        const auto r =
            shift_norm_exact_p2(space, op, n, cfg.shift_policy, &cache);
        report.norms.push_back({n, r.log_norm, r.certified});
      }
      break;
    }
    case NormMethod::matrix_section: {
      if (space.p != 2.0)
        throw std::invalid_argument(
            "iterate_norm_sequence: matrix route needs p = 2");
      MonomialNormCache cache(space);
      // Downward shifts annihilate the first n basis columns, so the
      // section must keep columns past n * |min shift|.
      const long cols = cfg.trunc_dim - nmax * std::min(op.min_shift(), 0L);
      PowerColumns powers(space, op, cols, nmax, &cache);
      std::vector<cplx> warm;
      for (long n = 1; n <= nmax; ++n) {
        powers.step();
        const auto M = powers.section();
        const auto pi = largest_singular_value(M, cfg.power_tol,
                                               cfg.power_max_iterations,
                                               warm.empty() ? nullptr : &warm,
                                               &warm);
        report.norms.push_back(
            {n, pi.sigma > 0.0 ? std::log(pi.sigma) : kNegInf, false});
      }
      break;
    }
    case NormMethod::test_vector: {
      // Monomial family: a fixed low-index set plus indices tied to n
      // (z^n is the natural witness for downward shifts).
      QuadratureConfig qcfg;
      for (long n = 1; n <= nmax; ++n) {
        std::vector<long> ks{0, 1, 2, 4, 8, 16, 32, 64};
        ks.push_back(n);
        ks.push_back(n + 8);
        ks.push_back(n + 32);
        double best = kNegInf;
        for (long k : ks) {
          if (k < 0 || k > cfg.trunc_dim + n + 64) continue;
          ScaledSeries s{TaylorSeries::monomial(k), 0.0};
          for (long i = 0; i < n; ++i) s = apply_scaled_once(op, s);
          const double num = route_norm_log(space, s.f, qcfg);
          if (num == kNegInf) continue;
          const double den =
              space.sup_norm() ? monomial_norm_sup_log(space, k)
                               : monomial_norm_log(space, k);
          best = std::max(best, s.log_scale + num - den);
        }
        report.norms.push_back({n, best, false});
      }
      break;
    }
  }

  report.sup_log_norm = kNegInf;
  for (const auto& s : report.norms)
    report.sup_log_norm = std::max(report.sup_log_norm, s.log_norm);
  report.verdict = classify_trend(report.norms, cfg.trend_slope_tol);
  return report;
}

SpectralReport gelfand_estimate(const SpaceParams& space,
                                const CoeffOperator& op, long nmax,
                                const ProbeConfig& cfg) {
  if (nmax < 8) throw std::invalid_argument("gelfand_estimate: nmax < 8");
  const NormMethod method = (space.p == 2.0 && op.single_term())
                                ? NormMethod::exact_shift
                                : NormMethod::matrix_section;
  const OrbitReport orbit = iterate_norm_sequence(space, op, nmax, method, cfg);

  SpectralReport report;
  report.gelfand.reserve(orbit.norms.size());
  for (const auto& s : orbit.norms)
    report.gelfand.push_back({s.n, s.log_norm / static_cast<double>(s.n)});

  // Monotonicity of the tail (last half), within a noise band.
  bool inc = true, dec = true;
  for (std::size_t i = report.gelfand.size() / 2 + 1;
       i < report.gelfand.size(); ++i) {
    const double d =
        report.gelfand[i].log_gelfand - report.gelfand[i - 1].log_gelfand;
    inc = inc && d >= -1e-9;
    dec = dec && d <= 1e-9;
  }
  if (!inc && !dec) {
    report.extrapolation_valid = false;
    report.extrapolated_radius =
        std::exp(report.gelfand.back().log_gelfand);
    report.note = "tail non-monotone: extrapolation refused, last value reported";
    return report;
  }

  auto L = [&](long n) { return report.gelfand[static_cast<std::size_t>(n - 1)].log_gelfand; };
  const long n3 = nmax, n2 = nmax / 2, n1 = nmax / 4;
  const double d_new = L(n3) - L(n2);
  const double d_old = L(n2) - L(n1);

  if (d_new < -0.05 && d_old < -0.05 &&
      std::fabs(d_new / d_old - 1.0) <= 0.5) {
    // Constant decrement per doubling: log-gelfand ~ -gamma log n, radius 0.
    report.extrapolation_valid = true;
    report.extrapolated_radius = 0.0;
    report.quasi_nilpotent = true;
    report.note = "log-divergent gelfand tail (constant dyadic decrement)";
    return report;
  }

  const double u[3] = {std::log(static_cast<double>(n1)) / n1,
                       std::log(static_cast<double>(n2)) / n2,
                       std::log(static_cast<double>(n3)) / n3};
  const double v[3] = {1.0 / n1, 1.0 / n2, 1.0 / n3};
  const double y[3] = {L(n1), L(n2), L(n3)};
  double a, c, d;
  if (!solve3(u, v, y, a, c, d)) {
    report.extrapolation_valid = false;
    report.extrapolated_radius = std::exp(L(n3));
    report.note = "degenerate dyadic system";
    return report;
  }
  report.extrapolation_valid = true;
  report.extrapolated_radius = std::exp(a);
  report.quasi_nilpotent =
      report.extrapolated_radius < cfg.qn_radius_threshold && dec;
  report.note = "dyadic fit a + c*log(n)/n + d/n";
  return report;
}

ErgodicReport cesaro_report(const SpaceParams& space, const CoeffOperator& op,
                            long nmax, const ProbeConfig& cfg) {
  space.validate();
  if (space.p != 2.0)
    throw std::invalid_argument("cesaro_report: matrix route needs p = 2");
  if (nmax < 8) throw std::invalid_argument("cesaro_report: nmax < 8");

  MonomialNormCache cache(space);
  const long K = cfg.trunc_dim;
  const long n0 = nmax / 2;
  const long n1 = 2 * n0;

  // Pass 1: running sums of T^n columns; snapshots at n0 and n1 give the
  // Richardson limit candidate P_hat = 2 A_{n1} - A_{n0}.
  SectionMatrix S0, S1;
  {
    PowerColumns powers(space, op, K, nmax, &cache);
    std::vector<std::vector<cplx>> sum(static_cast<std::size_t>(K));
    for (long n = 1; n <= n1; ++n) {
      powers.step();
      for (long k = 0; k < K; ++k) {
        const auto& c = powers.columns()[static_cast<std::size_t>(k)];
        auto& s = sum[static_cast<std::size_t>(k)];
        if (s.size() < c.size()) s.resize(c.size(), cplx(0.0, 0.0));
        for (std::size_t r = 0; r < c.size(); ++r) s[r] += c[r];
      }
      if (n == n0 || n == n1) {
        SectionMatrix M;
        M.cols = K;
        M.rows = 0;
        for (const auto& s : sum)
          M.rows = std::max(M.rows, static_cast<long>(s.size()));
        M.col.resize(static_cast<std::size_t>(K));
        for (long k = 0; k < K; ++k) {
          auto s = sum[static_cast<std::size_t>(k)];
          s.resize(static_cast<std::size_t>(M.rows), cplx(0.0, 0.0));
          M.col[static_cast<std::size_t>(k)] = std::move(s);
        }
        (n == n0 ? S0 : S1) = std::move(M);
      }
    }
  }
  const SectionMatrix P_hat =
      combine(S1, 2.0 / static_cast<double>(n1), S0,
              -1.0 / static_cast<double>(n0));

  ErgodicReport report;

  // Limit diagnostics on the K x K leading block.
  {
    SectionMatrix Pblock;
    Pblock.cols = K;
    Pblock.rows = K;
    Pblock.col.resize(static_cast<std::size_t>(K));
    for (long k = 0; k < K; ++k) {
      auto c = P_hat.col[static_cast<std::size_t>(k)];
      c.resize(static_cast<std::size_t>(K), cplx(0.0, 0.0));
      Pblock.col[static_cast<std::size_t>(k)] = std::move(c);
    }
    report.limit_block.resize(static_cast<std::size_t>(K));
    for (long k = 0; k < K; ++k)
      report.limit_block[static_cast<std::size_t>(k)] =
          Pblock.col[static_cast<std::size_t>(k)];

    report.limit_norm = largest_singular_value(Pblock, cfg.power_tol,
                                               cfg.power_max_iterations)
                            .sigma;

    // P^2 - P on the block.
    SectionMatrix P2;
    P2.cols = K;
    P2.rows = K;
    P2.col.resize(static_cast<std::size_t>(K));
    std::vector<cplx> y;
    for (long k = 0; k < K; ++k) {
      Pblock.apply(Pblock.col[static_cast<std::size_t>(k)], y);
      P2.col[static_cast<std::size_t>(k)] = y;
    }
    const SectionMatrix diff = combine(P2, 1.0, Pblock, -1.0);
    report.idempotence_residual =
        largest_singular_value(diff, cfg.power_tol, cfg.power_max_iterations)
            .sigma;

    // Classify the candidate.
    if (report.limit_norm < 1e-6) {
      report.limit_description = "zero";
    } else {
      SectionMatrix E00 = Pblock;  // reuse shape
      for (long k = 0; k < K; ++k)
        std::fill(E00.col[static_cast<std::size_t>(k)].begin(),
                  E00.col[static_cast<std::size_t>(k)].end(), cplx(0.0, 0.0));
      E00.col[0][0] = cplx(1.0, 0.0);
      const double dist =
          largest_singular_value(combine(Pblock, 1.0, E00, -1.0),
                                 cfg.power_tol, cfg.power_max_iterations)
              .sigma;
      report.limit_description =
          dist < 1e-6 ? "coefficient-0 projection" : "general";
    }
  }

  // Pass 2: residual and mean norms per n.
  {
    PowerColumns powers(space, op, K, nmax, &cache);
    std::vector<std::vector<cplx>> sum(static_cast<std::size_t>(K));
    std::vector<cplx> warm_res, warm_norm;
    for (long n = 1; n <= nmax; ++n) {
      powers.step();
      for (long k = 0; k < K; ++k) {
        const auto& c = powers.columns()[static_cast<std::size_t>(k)];
        auto& s = sum[static_cast<std::size_t>(k)];
        if (s.size() < c.size()) s.resize(c.size(), cplx(0.0, 0.0));
        for (std::size_t r = 0; r < c.size(); ++r) s[r] += c[r];
      }
      SectionMatrix A;
      A.cols = K;
      A.rows = 0;
      for (const auto& s : sum)
        A.rows = std::max(A.rows, static_cast<long>(s.size()));
      A.col.resize(static_cast<std::size_t>(K));
      const double inv_n = 1.0 / static_cast<double>(n);
      for (long k = 0; k < K; ++k) {
        auto s = sum[static_cast<std::size_t>(k)];
        s.resize(static_cast<std::size_t>(A.rows), cplx(0.0, 0.0));
        for (auto& cval : s) cval *= inv_n;
        A.col[static_cast<std::size_t>(k)] = std::move(s);
      }
      const double an =
          largest_singular_value(A, cfg.power_tol, cfg.power_max_iterations,
                                 warm_norm.empty() ? nullptr : &warm_norm,
                                 &warm_norm)
              .sigma;
      const double rn =
          largest_singular_value(combine(A, 1.0, P_hat, -1.0), cfg.power_tol,
                                 cfg.power_max_iterations,
                                 warm_res.empty() ? nullptr : &warm_res,
                                 &warm_res)
              .sigma;
      report.mean_norms.push_back({n, an});
      report.residuals.push_back({n, rn});
    }
  }

  // Rate fit over the tail, skipping residuals at rounding level.
  {
    std::vector<double> xs, ys;
    for (const auto& s : report.residuals) {
      if (s.n < std::max(4L, nmax / 4) || s.value <= 1e-15) continue;
      xs.push_back(std::log(static_cast<double>(s.n)));
      ys.push_back(std::log(s.value));
    }
    report.fitted_rate_exponent =
        xs.size() >= 3 ? -least_squares(xs, ys).slope : 0.0;
  }

  // Verdict: growing mean norms rule out operator-norm convergence; a
  // decreasing residual tail below tolerance supports it.
  {
    const std::size_t n = report.mean_norms.size();
    const std::size_t lo = (3 * n) / 4;
    bool growing = n >= 8;
    double mean_diff = 0.0;
    for (std::size_t i = std::max<std::size_t>(lo, 1); i < n && growing; ++i) {
      const double d = std::log(std::max(report.mean_norms[i].value, 1e-300)) -
                       std::log(std::max(report.mean_norms[i - 1].value, 1e-300));
      if (d < -1e-12) growing = false;
      mean_diff += d;
    }
    growing = growing && mean_diff / std::max<std::size_t>(n - lo, 1) > 1e-3;

    const double last = report.residuals.back().value;
    const double mid =
        report.residuals[report.residuals.size() * 3 / 4].value;
    const bool tail_decreasing = last <= mid * 1.05;

    if (growing)
      report.ume_verdict = ProbeVerdict::no;
    else if (tail_decreasing && last <= cfg.ume_residual_tol &&
             report.idempotence_residual <= cfg.ume_idempotence_tol)
      report.ume_verdict = ProbeVerdict::yes;
    else
      report.ume_verdict = ProbeVerdict::inconclusive;
  }

  return report;
}

std::vector<ErgodicSample> cesaro_vector_residuals(
    const SpaceParams& space, const CoeffOperator& op, long nmax,
    const TaylorSeries& f, const QuadratureConfig& qcfg) {
  space.validate();
  if (space.sup_norm())
    throw std::invalid_argument("cesaro_vector_residuals: finite p required");
  if (nmax < 8) throw std::invalid_argument("cesaro_vector_residuals: nmax < 8");

  const long n0 = nmax / 2, n1 = 2 * n0;
  std::vector<TaylorSeries> means;  // A_n f for n = 1..nmax
  TaylorSeries cur = f, sum;
  for (long n = 1; n <= std::max(nmax, n1); ++n) {
    cur = op.apply(cur);
    sum = sum.plus(cur);
    if (n <= nmax) means.push_back(sum.scaled(cplx(1.0 / n, 0.0)));
  }
  const TaylorSeries p_hat_f =
      means[static_cast<std::size_t>(n1 - 1)].scaled(cplx(2.0, 0.0)).plus(
          means[static_cast<std::size_t>(n0 - 1)].scaled(cplx(-1.0, 0.0)));

  std::vector<ErgodicSample> out;
  for (long n = 1; n <= nmax; ++n) {
    const TaylorSeries res =
        means[static_cast<std::size_t>(n - 1)].plus(p_hat_f.scaled(cplx(-1.0, 0.0)));
    const double v = res.is_zero() ? 0.0
                                   : std::exp(route_norm_log(space, res, qcfg));
    out.push_back({n, v});
  }
  return out;
}

RittReport ritt_sequence(const SpaceParams& space, const CoeffOperator& op,
                         long nmax, const ProbeConfig& cfg) {
  space.validate();
  if (nmax < 1) throw std::invalid_argument("ritt_sequence: nmax < 1");

  RittReport report;
  const bool diagonal = op.single_term() && op.terms()[0].shift == 0;

  if (diagonal && space.p == 2.0) {
    // T^{n+1} - T^n is diagonal with entries w_k^n (w_k - 1); the norm is
    // the sup of their moduli, scanned with doubling ranges.
    const WeightRule& rule = op.terms()[0].rule;
    report.certified = true;
    for (long n = 1; n <= nmax; ++n) {
      double sup = 0.0;
      long window = 256;
      long scanned = -1;
      int stable = 0;
      while (true) {
        const double before = sup;
        for (long k = scanned + 1; k <= window; ++k) {
          const cplx w = rule.weight(k);
          const double e =
              std::pow(std::abs(w), static_cast<double>(n)) * std::abs(w - 1.0);
          sup = std::max(sup, e);
        }
        scanned = window;
        if (std::fabs(sup - before) <= 1e-14) {
          if (++stable >= 2) break;
        } else {
          stable = 0;
        }
        if (window >= (1L << 22)) {
          report.certified = false;
          break;
        }
        window *= 2;
      }
      report.quantities.push_back({n, static_cast<double>(n) * sup});
    }
  } else {
    if (space.p != 2.0)
      throw std::invalid_argument("ritt_sequence: matrix route needs p = 2");
    MonomialNormCache cache(space);
    const long K = cfg.trunc_dim - (nmax + 1) * std::min(op.min_shift(), 0L);
    PowerColumns powers(space, op, K, nmax + 1, &cache);
    powers.step();  // -> T^1
    auto cur = powers.section();
    std::vector<cplx> warm;
    for (long n = 1; n <= nmax; ++n) {
      powers.step();  // -> T^{n+1}
      auto nxt = powers.section();
      const auto diff = combine(nxt, 1.0, cur, -1.0);
      const auto pi = largest_singular_value(diff, cfg.power_tol,
                                             cfg.power_max_iterations,
                                             warm.empty() ? nullptr : &warm,
                                             &warm);
      report.quantities.push_back({n, static_cast<double>(n) * pi.sigma});
      cur = std::move(nxt);
    }
    report.certified = false;
  }

  report.sup_estimate = 0.0;
  for (const auto& q : report.quantities)
    report.sup_estimate = std::max(report.sup_estimate, q.value);

  const std::size_t sz = report.quantities.size();
  bool bounded = report.sup_estimate <= cfg.ritt_cap;
  bool tail_nonincreasing = true;
  for (std::size_t i = std::max<std::size_t>((3 * sz) / 4, 1); i < sz; ++i)
    tail_nonincreasing =
        tail_nonincreasing &&
        report.quantities[i].value <=
            report.quantities[i - 1].value * (1.0 + 1e-9);
  if (!bounded)
    report.verdict = ProbeVerdict::no;
  else if (tail_nonincreasing)
    report.verdict = ProbeVerdict::yes;
  else
    report.verdict = ProbeVerdict::inconclusive;
  return report;
}

DhcReport d_hypercyclicity_sequence(const SpaceParams& space, long nmax) {
  space.validate();
  if (space.sup_norm())
    throw std::invalid_argument("d_hypercyclicity_sequence: finite p required");
  if (space.m != 1.0)
    throw std::invalid_argument("d_hypercyclicity_sequence: requires m = 1");
  if (nmax < 16) throw std::invalid_argument("d_hypercyclicity_sequence: nmax < 16");

  DhcReport report;
  report.sequence.reserve(static_cast<std::size_t>(nmax));
  for (long n = 1; n <= nmax; ++n) {
    const double t = monomial_norm_log(space, n) -
                     std::lgamma(static_cast<double>(n) + 1.0);
    report.sequence.push_back({n, t});
  }

  // Tail fits over the last half.
  std::vector<double> ns, ts;
  for (const auto& s : report.sequence) {
    if (s.n < nmax / 2) continue;
    ns.push_back(static_cast<double>(s.n));
    ts.push_back(s.value);
  }
  report.tail_slope = least_squares(ns, ts).slope;

  // Three-parameter fit t = a + b n + c log n via normal equations.
  double S[3][3] = {{0}}, rhs[3] = {0};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double basis[3] = {1.0, ns[i], std::log(ns[i])};
    for (int r = 0; r < 3; ++r) {
      rhs[r] += basis[r] * ts[i];
      for (int c = 0; c < 3; ++c) S[r][c] += basis[r] * basis[c];
    }
  }
  // Gaussian elimination, 3x3.
  {
    double M[3][4];
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) M[r][c] = S[r][c];
      M[r][3] = rhs[r];
    }
    for (int p = 0; p < 3; ++p) {
      int piv = p;
      for (int r = p + 1; r < 3; ++r)
        if (std::fabs(M[r][p]) > std::fabs(M[piv][p])) piv = r;
      std::swap(M[p], M[piv]);
      for (int r = 0; r < 3; ++r) {
        if (r == p || M[p][p] == 0.0) continue;
        const double fct = M[r][p] / M[p][p];
        for (int c = p; c < 4; ++c) M[r][c] -= fct * M[p][c];
      }
    }
    const double b = M[1][1] != 0.0 ? M[1][3] / M[1][1] : 0.0;
    const double c = M[2][2] != 0.0 ? M[2][3] / M[2][2] : 0.0;
    report.geometric_rate = b;
    report.log_power = c;
  }

  if (std::fabs(report.geometric_rate) > 1e-4)
    report.trend = report.geometric_rate < 0.0 ? RatioTrend::to_zero
                                               : RatioTrend::to_infinity;
  else if (std::fabs(report.log_power) > 0.02)
    report.trend =
        report.log_power < 0.0 ? RatioTrend::to_zero : RatioTrend::to_infinity;
  else
    report.trend = RatioTrend::bounded;
  return report;
}

}  // namespace fockdyn
