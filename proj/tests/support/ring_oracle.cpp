#include "support/ring_oracle.hpp"

#include <array>
#include <cmath>
#include <random>
#include <thread>

namespace ks::testing {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

struct SideProbs {
  double left, bottom, right;  // top = 1 - sum
};

// all four sides of (0,m) x (0,1) at the interior point (X, Y); transposes
// the rectangle when m < 1 so every series converges quickly
SideProbs rect_probs(double m, double X, double Y) {
  if (m < 1.0) {
    // conjugate rectangle (0, 1/m) x (0, 1), point (Y/m, X/m); sides map
    // left->bottom, bottom->left, right->top, top->right
    SideProbs t = rect_probs(1.0 / m, Y / m, X / m);
    double top = 1.0 - t.left - t.bottom - t.right;
    return {t.bottom, t.left, top};
  }
  double pl = rect_hm_left(m, 1.0, X, Y);
  double pr = rect_hm_left(m, 1.0, m - X, Y);
  double pb = rect_hm_left(1.0, m, Y, X);
  return {pl, pb, pr};
}

// half-plane harmonic measures of the four arcs cut by (-1, 0, x) seen from z0
SideProbs half_plane_probs(double x, cx z0) {
  auto psi = [&](double t) { return std::atan2(-z0.imag(), t - z0.real()); };
  double p_left = (psi(0.0) - psi(-1.0)) / kPi;
  double p_bottom = (psi(x) - psi(0.0)) / kPi;
  double p_right = (0.0 - psi(x)) / kPi;
  return {p_left, p_bottom, p_right};
}

SideProbs sampled_probs(double x, cx z0, long n, unsigned seed, double* sigma) {
  const int shards = 4;
  std::array<std::array<long, 4>, shards> counts{};
  long per = n / shards;
  auto work = [&](int s) {
    std::mt19937_64 rng(seed * 1000003ull + s);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    auto& c = counts[s];
    double X0 = z0.real(), Y0 = z0.imag();
    for (long i = 0; i < per; ++i) {
      double e = X0 + Y0 * std::tan(kPi * (uni(rng) - 0.5));
      if (e >= -1.0 && e < 0.0)
        ++c[0];
      else if (e >= 0.0 && e < x)
        ++c[1];
      else if (e >= x)
        ++c[2];
      else
        ++c[3];
    }
  };
  std::array<std::thread, shards> threads;
  for (int s = 0; s < shards; ++s) threads[s] = std::thread(work, s);
  for (auto& t : threads) t.join();
  std::array<double, 4> p{};
  double total = static_cast<double>(per) * shards;
  for (const auto& c : counts)
    for (int i = 0; i < 4; ++i) p[i] += static_cast<double>(c[i]) / total;
  *sigma = std::sqrt(0.25 / total);
  return {p[0], p[1], p[2]};
}

// Newton solve of rect_probs(m, X, Y) = target over (log m, X/m, Y)
bool solve_rectangle(const SideProbs& target, double& m, double& X, double& Y) {
  auto residual = [&](double lm, double u, double v, double r[3]) {
    double mm = std::exp(lm);
    SideProbs p = rect_probs(mm, u * mm, v);
    r[0] = p.left - target.left;
    r[1] = p.bottom - target.bottom;
    r[2] = p.right - target.right;
    return r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
  };
  const double inits[5] = {-1.5, -0.75, 0.0, 0.75, 1.5};
  for (double lm0 : inits) {
    double lm = lm0, u = 0.5, v = 0.5;
    double r[3];
    double err = residual(lm, u, v, r);
    bool ok = false;
    for (int iter = 0; iter < 80; ++iter) {
      if (err < 1e-26) {
        ok = true;
        break;
      }
      // numerical Jacobian
      double J[3][3];
      const double h = 1e-7;
      double rp[3], rm[3];
      double vars[3] = {lm, u, v};
      for (int c = 0; c < 3; ++c) {
        double save = vars[c];
        vars[c] = save + h;
        residual(vars[0], vars[1], vars[2], rp);
        vars[c] = save - h;
        residual(vars[0], vars[1], vars[2], rm);
        vars[c] = save;
        for (int rr = 0; rr < 3; ++rr) J[rr][c] = (rp[rr] - rm[rr]) / (2.0 * h);
      }
      // solve J d = -r by Cramer
      double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                   J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                   J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
      if (std::abs(det) < 1e-30) break;
      auto cram = [&](int col) {
        double A[3][3];
        for (int rr = 0; rr < 3; ++rr)
          for (int cc = 0; cc < 3; ++cc) A[rr][cc] = cc == col ? -r[cc * 0 + rr] : J[rr][cc];
        return (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])) /
               det;
      };
      double d0 = cram(0), d1 = cram(1), d2 = cram(2);
      double step = 1.0;
      double nlm = lm, nu = u, nv = v, nerr = err;
      for (int ls = 0; ls < 12; ++ls) {
        double tlm = lm + step * d0;
        double tu = std::clamp(u + step * d1, 0.02, 0.98);
        double tv = std::clamp(v + step * d2, 0.02, 0.98);
        tlm = std::clamp(tlm, -9.0, 9.0);
        double tr[3];
        double terr = residual(tlm, tu, tv, tr);
        if (terr < err) {
          nlm = tlm;
          nu = tu;
          nv = tv;
          nerr = terr;
          r[0] = tr[0];
          r[1] = tr[1];
          r[2] = tr[2];
          break;
        }
        step *= 0.5;
      }
      if (nerr >= err) break;  // stalled
      lm = nlm;
      u = nu;
      v = nv;
      err = nerr;
    }
    double rr[3];
    if (ok || residual(lm, u, v, rr) < 1e-22) {
      m = std::exp(lm);
      X = u * m;
      Y = v;
      return true;
    }
  }
  return false;
}

}  // namespace

double rect_hm_left(double a, double b, double X, double Y) {
  double sum = 0.0;
  for (int k = 1; k < 40001; k += 2) {
    double q = k * kPi / b;
    double amp = 4.0 / (k * kPi);
    double decay = std::exp(-q * X);
    if (amp * decay < 1e-18) break;
    double ratio = decay * (1.0 - std::exp(-2.0 * q * (a - X))) /
                   (1.0 - std::exp(-2.0 * q * a));
    sum += amp * std::sin(k * kPi * Y / b) * ratio;
  }
  return sum;
}

RingOracleResult oracle_modulus_from_x(double x, long n_samples, unsigned seed) {
  if (!(x > 0.0)) fail(errc::nonpositive_ratio, "oracle needs x > 0");
  cx z0(0.0, std::sqrt(x));
  double sigma = 0.0;
  SideProbs p = n_samples > 0 ? sampled_probs(x, z0, n_samples, seed, &sigma)
                              : half_plane_probs(x, z0);
  RingOracleResult res{};
  if (!solve_rectangle(p, res.quad_modulus, res.X, res.Y))
    fail(errc::numeric_failure, "rectangle inversion did not converge");
  res.modulus = 0.5 * res.quad_modulus;
  res.prob_sigma = sigma;
  return res;
}

RingOracleResult oracle_arc_ring_modulus(const FourPointConfig& cfg, long n_samples,
                                         unsigned seed) {
  // send (a1, a2, a4) -> (-1, 0, inf); a3 lands at the cross-ratio coordinate
  MoebiusMap h = map_to_standard(cfg.point(0), cfg.point(1), cfg.point(3));
  MoebiusMap shift(cx(-1.0), cx(-1.0), cx(0.0), cx(1.0));  // z -> -z - 1... no:
  // map_to_standard sends a1->0, a2->1, a4->inf; compose with z -> z - 1 to
  // put (a1, a2) at (-1, 0)
  MoebiusMap translate = MoebiusMap::translation(cx(-1.0));
  MoebiusMap full = translate * h;
  SpherePoint img = apply_moebius(full, cfg.point(2));
  if (img.is_infinity(1e-13)) fail(errc::degenerate_config, "degenerate image");
  cx xz = img.affine();
  if (std::abs(xz.imag()) > 1e-8 * std::max(1.0, std::abs(xz.real())) || xz.real() <= 0.0)
    fail(errc::degenerate_config, "configuration does not normalize to real slits");
  (void)shift;
  return oracle_modulus_from_x(xz.real(), n_samples, seed);
}

}  // namespace ks::testing
