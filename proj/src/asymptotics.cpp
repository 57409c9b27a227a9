#include "hecke/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "hecke/error.hpp"

namespace hecke {

namespace {

constexpr long double kSqrt2 = 1.41421356237309504880168872420969808L;

CharPoly family_poly(PolyFamily family, int m, long long constant) {
  CharPoly p{family, m, std::vector<long long>(m + 2, -2)};
  p.coeffs[0] = 1;
  p.coeffs[1] = 0;
  p.coeffs.back() = constant;
  return p;
}

}  // namespace

long long CharPoly::eval(long long x) const {
  long long acc = 0;
  for (long long c : coeffs) acc = acc * x + c;
  return acc;
}

long double CharPoly::eval(long double x) const {
  long double acc = 0;
  for (long long c : coeffs) acc = acc * x + static_cast<long double>(c);
  return acc;
}

Complex CharPoly::eval(Complex z) const {
  Complex acc = 0;
  for (long long c : coeffs) acc = acc * z + static_cast<long double>(c);
  return acc;
}

Complex CharPoly::derivative(Complex z) const {
  Complex acc = 0;
  const int n = degree();
  for (int i = 0; i < n; ++i) acc = acc * z + static_cast<long double>(coeffs[i] * (n - i));
  return acc;
}

std::string CharPoly::to_string() const {
  std::string out;
  const int n = degree();
  for (int i = 0; i <= n; ++i) {
    const long long c = coeffs[i];
    if (c == 0) continue;
    const int power = n - i;
    if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
    const long long mag = c < 0 ? -c : c;
    if (mag != 1 || power == 0) out += fmt::format("{}", mag);
    if (power >= 1) out += "x";
    if (power >= 2) out += fmt::format("^{}", power);
  }
  return out.empty() ? "0" : out;
}

CharPoly odd_poly(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidConfig, "odd_poly: m must be >= 1");
  if (m == 1) return CharPoly{PolyFamily::Z3, 1, {1, 0, -2}};
  return family_poly(PolyFamily::POdd, m, -2);
}

CharPoly even_poly(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidConfig, "even_poly: m must be >= 2");
  return family_poly(PolyFamily::QEven, m, -1);
}

CharPoly char_poly(const GroupParams& params, Base base) {
  validate_base(params, base);
  if (params.is_infinite()) return CharPoly{PolyFamily::ZInf, 0, {1, -1, -2}};
  return params.k() % 2 ? odd_poly(params.m()) : even_poly(params.m());
}

DominantRoot dominant_root(const CharPoly& p) {
  switch (p.family) {
    case PolyFamily::Z3:
      throw Error(ErrorCode::NoDominantRoot, "x^2-2 has two roots of equal modulus");
    case PolyFamily::ZInf:
      return {2.0L, 2.0L, 2.0L};
    default:
      break;
  }
  long double lo = kSqrt2, hi = 2.0L;
  if (!(p.eval(lo) < 0) || p.eval(hi) < 0) {
    throw Error(ErrorCode::ConvergenceFailure, "no sign change on [sqrt 2, 2] for " + p.to_string());
  }
  for (int it = 0; it < 200; ++it) {
    const long double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    (p.eval(mid) < 0 ? lo : hi) = mid;
  }
  return {hi, lo, hi};
}

long double RootSet::dominance_ratio() const {
  if (!dominant || roots.size() < 2) return 0;
  long double worst = 0;
  for (std::size_t j = 1; j < roots.size(); ++j) worst = std::max(worst, std::abs(roots[j]));
  return worst / *dominant;
}

RootSet all_roots(const CharPoly& p) {
  const int n = p.degree();
  std::vector<Complex> z(n);
  const Complex seed(0.4L, 0.9L);
  Complex cur = 1;
  for (int i = 0; i < n; ++i) {
    z[i] = cur;
    cur *= seed;
  }

  bool converged = false;
  for (int it = 0; it < 5000 && !converged; ++it) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      Complex denom = 1;
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const Complex step = p.eval(z[i]) / denom;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    converged = delta < 1e-16L;
  }
  if (!converged) throw Error(ErrorCode::ConvergenceFailure, "Durand-Kerner did not settle for " + p.to_string());

  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      const Complex d = p.derivative(r);
      if (std::abs(d) == 0) break;
      r -= p.eval(r) / d;
    }
    if (std::abs(r.imag()) < 1e-15L) r = {r.real(), 0};
  }

  RootSet out;
  if (p.family != PolyFamily::Z3) {
    const DominantRoot dom = dominant_root(p);
    auto best = std::min_element(z.begin(), z.end(), [&](const Complex& a, const Complex& b) {
      return std::abs(a - dom.value) < std::abs(b - dom.value);
    });
    if (std::abs(*best - dom.value) > 1e-10L) {
      throw Error(ErrorCode::ConvergenceFailure, "dominant root disagrees with bisection for " + p.to_string());
    }
    *best = dom.value;
    std::iter_swap(z.begin(), best);
    out.dominant = dom.value;
  }
  std::sort(z.begin() + (out.dominant ? 1 : 0), z.end(), [](const Complex& a, const Complex& b) {
    const long double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-12L) return ma > mb;
    return std::arg(a) > std::arg(b);
  });
  out.roots = std::move(z);

  const long double scale = std::pow(1.0L + out.dominant.value_or(2.0L), n);
  out.min_separation = std::numeric_limits<long double>::infinity();
  for (int i = 0; i < n; ++i) {
    out.residual = std::max(out.residual, std::abs(p.eval(out.roots[i])));
    for (int j = i + 1; j < n; ++j) {
      out.min_separation = std::min(out.min_separation, std::abs(out.roots[i] - out.roots[j]));
    }
  }
  if (out.residual > 1e-10L * scale) {
    throw Error(ErrorCode::ConvergenceFailure, fmt::format("residual {} too large for {}", (double)out.residual, p.to_string()));
  }
  if (out.min_separation < 1e-8L) {
    throw Error(ErrorCode::ConvergenceFailure, "repeated root in " + p.to_string());
  }
  return out;
}

Complex AsymptoticEstimate::reconstruct(int t) const {
  Complex acc = 0;
  for (std::size_t j = 0; j < roots.size(); ++j) acc += all_coeffs[j] * std::pow(roots[j], t);
  return acc;
}

AsymptoticEstimate solve_coefficients(const CharPoly& p, const Recurrence& rec) {
  if (p.family == PolyFamily::Z3) {
    throw Error(ErrorCode::NoDominantRoot, "k = 3 has no dominant root");
  }
  if (rec.order() != p.degree() || static_cast<int>(rec.initial.size()) != p.degree()) {
    throw Error(ErrorCode::InvalidConfig, "recurrence does not match " + p.to_string());
  }
  const RootSet rs = all_roots(p);
  const int n = p.degree();

  using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  Mat v(n, n);
  Vec b(n);
  AsymptoticEstimate est;
  int i = 0;
  for (const auto& [t, value] : rec.initial) {
    est.window.push_back(t);
    for (int j = 0; j < n; ++j) v(i, j) = std::pow(rs.roots[j], t);
    b(i) = to_long_double(value);
    ++i;
  }

  Eigen::PartialPivLU<Mat> lu(v);
  const Mat inv = lu.inverse();
  const long double norm_v = v.cwiseAbs().colwise().sum().maxCoeff();
  const long double norm_inv = inv.cwiseAbs().colwise().sum().maxCoeff();
  est.condition_estimate = norm_v * norm_inv;
  if (!std::isfinite(est.condition_estimate) || est.condition_estimate > 1e14L) {
    throw Error(ErrorCode::SingularSystem, "Vandermonde system is singular for " + p.to_string());
  }
  const Vec a = lu.solve(b);

  est.dominant_root = *rs.dominant;
  est.roots = rs.roots;
  est.all_coeffs.assign(a.data(), a.data() + n);
  if (std::abs(a(0).imag()) > 1e-8L) {
    throw Error(ErrorCode::SingularSystem, "leading coefficient is not real");
  }
  est.leading_coeff = a(0).real();
  return est;
}

long double empirical_coefficient(const CountSeq& counts, long double dominant, int t_probe) {
  return to_long_double(counts.at(t_probe)) / std::pow(dominant, t_probe);
}

int minimal_probe(const RootSet& roots, long double tol) {
  const long double ratio = roots.dominance_ratio();
  if (ratio <= 0) return 1;
  if (ratio >= 1) throw Error(ErrorCode::NoDominantRoot, "subdominant root is not smaller");
  int t = std::max(1, static_cast<int>(std::ceil(std::log(tol) / std::log(ratio))));
  while (t > 1 && std::pow(ratio, t - 1) < tol) --t;
  while (std::pow(ratio, t) >= tol) ++t;
  return t;
}

RootOrderReport root_order_check(int m_max, long double min_gap) {
  RootOrderReport rep;
  rep.difference_ok = true;
  rep.even_factor_ok = true;
  for (int m = 2; m <= m_max; ++m) {
    const CharPoly q = even_poly(m), p = odd_poly(m);
    rep.chain.push_back({fmt::format("beta_{}", 2 * m), 2 * m, dominant_root(q).value});
    rep.chain.push_back({fmt::format("alpha_{}", 2 * m + 1), 2 * m + 1, dominant_root(p).value});
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      const long long diff = p.coeffs[i] - q.coeffs[i];
      if (diff != (i + 1 == p.coeffs.size() ? -1 : 0)) rep.difference_ok = false;
    }
    if (q.eval(-1LL) != 0) rep.even_factor_ok = false;
  }
  long double prev = kSqrt2;
  rep.min_margin = std::numeric_limits<long double>::infinity();
  for (const auto& e : rep.chain) {
    rep.min_margin = std::min(rep.min_margin, e.root - prev);
    prev = e.root;
  }
  rep.min_margin = std::min(rep.min_margin, 2.0L - prev);
  rep.chain_ok = rep.min_margin > min_gap;
  return rep;
}

}  // namespace hecke
