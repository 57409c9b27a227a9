#include "hecke/hecke_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hecke {

double Mat2::norm_inf() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

bool psl_equal(const Mat2& m, const Mat2& n) {
  const Mat2 diff{m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
  const Mat2 sum{m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
  return std::min(diff.norm_inf(), sum.norm_inf()) < 1e-8 * std::max(1.0, m.norm_inf());
}

double b_trace(const GroupParams& params) {
  if (params.is_infinite()) return 2.0;
  return 2.0 * std::cos(std::numbers::pi / params.k());
}

Generators generators(const GroupParams& params) {
  return {Mat2{0, -1, 1, 0}, Mat2{0, -1, 1, b_trace(params)}};
}

Mat2 b_power(const GroupParams& params, long long x) {
  const double c = b_trace(params);
  Mat2 base = x >= 0 ? Mat2{0, -1, 1, c} : Mat2{c, 1, -1, 0};
  unsigned long long n = x >= 0 ? x : -x;
  Mat2 out = Mat2::identity();
  while (n) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

Mat2 evaluate(std::span<const Syllable> raw, const GroupParams& params) {
  const Mat2 A = generators(params).A;
  Mat2 out = Mat2::identity();
  for (const auto& s : raw) out = out * (s.is_a() ? A : b_power(params, s.exp));
  return out;
}

Mat2 evaluate(const Word& w) { return evaluate(w.syllables(), w.params()); }

std::string_view to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::Elliptic: return "ELLIPTIC";
    case TraceKind::Parabolic: return "PARABOLIC";
    case TraceKind::Hyperbolic: return "HYPERBOLIC";
  }
  return "?";
}

TraceClass classify(const Mat2& m, double eps) {
  TraceClass tc;
  tc.abs_trace = std::abs(m.trace());
  if (tc.abs_trace < 2 - eps) {
    tc.kind = TraceKind::Elliptic;
  } else if (tc.abs_trace <= 2 + eps) {
    tc.kind = TraceKind::Parabolic;
  } else {
    tc.kind = TraceKind::Hyperbolic;
    tc.geo_length = 2 * std::acosh(tc.abs_trace / 2);
  }
  return tc;
}

}  // namespace hecke
