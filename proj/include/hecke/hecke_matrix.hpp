#pragma once

// Words evaluated in the Hecke group representation
//   a -> A = [[0,-1],[1,0]],  b -> B = [[0,-1],[1,2cos(pi/k)]].

#include <optional>
#include <string_view>

#include "hecke/group.hpp"

namespace hecke {

struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]]

  static Mat2 identity() { return {}; }
  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  double norm_inf() const;

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
};

/// Equality in PSL(2,R): min(|M-N|, |M+N|) < 1e-8 max(1, |M|), sup norm on entries.
bool psl_equal(const Mat2& m, const Mat2& n);

struct Generators {
  Mat2 A;
  Mat2 B;
};

/// 2cos(pi/k), or 2 for k = infinity.
double b_trace(const GroupParams& params);
Generators generators(const GroupParams& params);

/// B^x for any integer x (negative powers use B^-1 = [[c,1],[-1,0]]).
Mat2 b_power(const GroupParams& params, long long x);

Mat2 evaluate(const Word& w);
Mat2 evaluate(std::span<const Syllable> raw, const GroupParams& params);

enum class TraceKind { Elliptic, Parabolic, Hyperbolic };
std::string_view to_string(TraceKind kind);

struct TraceClass {
  TraceKind kind = TraceKind::Elliptic;
  double abs_trace = 0;
  std::optional<double> geo_length;  // 2 acosh(|tr|/2), hyperbolic only
};

inline constexpr double kTraceEps = 1e-9;

TraceClass classify(const Mat2& m, double eps = kTraceEps);

}  // namespace hecke
