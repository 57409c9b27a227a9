#pragma once

// Characteristic polynomials of the counting recurrences, their roots, and the
// leading coefficient of the dominant root in the exact solution
//   |N_2t| = sum_j a_j lambda_j^t.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hecke/group.hpp"
#include "hecke/recurrence.hpp"

namespace hecke {

using Complex = std::complex<long double>;

enum class PolyFamily {
  POdd,   // x^{m+1} - 2x^{m-1} - ... - 2x - 2,  k = 2m+1, m >= 2
  QEven,  // x^{m+1} - 2x^{m-1} - ... - 2x - 1,  k = 2m
  ZInf,   // x^2 - x - 2,                         k = infinity
  Z3,     // x^2 - 2,                             k = 3 (no dominant root)
};

struct CharPoly {
  PolyFamily family = PolyFamily::POdd;
  int m = 0;
  std::vector<long long> coeffs;  // descending powers, coeffs.front() == 1

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long eval(long long x) const;
  long double eval(long double x) const;
  Complex eval(Complex z) const;
  Complex derivative(Complex z) const;
  /// Canonical text, e.g. "x^5-2x^3-2x^2-2x-1".
  std::string to_string() const;
};

CharPoly odd_poly(int m);
CharPoly even_poly(int m);
/// Throws Error(InvalidBase). Both bases of an even k give the same Q_{2m}.
CharPoly char_poly(const GroupParams& params, Base base);

/// Dominant root together with its sign-change bracket p(lower) < 0 <= p(upper).
struct DominantRoot {
  long double value = 0;
  long double lower = 0;
  long double upper = 0;
};

/// Bisection on [sqrt 2, 2]; ZInf returns exactly 2. Throws Error(NoDominantRoot) for Z3.
DominantRoot dominant_root(const CharPoly& p);

struct RootSet {
  std::vector<Complex> roots;          // dominant first, then by decreasing modulus
  std::optional<long double> dominant;
  long double residual = 0;            // max |p(root)|
  long double min_separation = 0;      // min pairwise |root_i - root_j|

  /// max_{j != 0} |lambda_j| / lambda_0.
  long double dominance_ratio() const;
};

/// Durand-Kerner iteration with Newton polishing. Throws Error(ConvergenceFailure)
/// on non-convergence, excess residual or coincident roots.
RootSet all_roots(const CharPoly& p);

struct AsymptoticEstimate {
  long double dominant_root = 0;
  long double leading_coeff = 0;
  std::vector<Complex> roots;
  std::vector<Complex> all_coeffs;  // coefficient of roots[j]
  std::vector<int> window;          // t-indices of the initial values
  long double condition_estimate = 0;

  /// sum_j a_j lambda_j^t
  Complex reconstruct(int t) const;
};

/// Solves the Vandermonde system V a = b with V_ij = lambda_j^{t_i} over the
/// recurrence's initial t-indices. Throws Error(NoDominantRoot) for k = 3 and
/// Error(SingularSystem) if the system is numerically singular.
AsymptoticEstimate solve_coefficients(const CharPoly& p, const Recurrence& rec);

/// counts(t_probe) / dominant^t_probe.
long double empirical_coefficient(const CountSeq& counts, long double dominant, int t_probe);

/// Smallest t with dominance_ratio()^t < tol.
int minimal_probe(const RootSet& roots, long double tol);

struct RootOrderEntry {
  std::string label;  // "beta_4", "alpha_5", ...
  int k = 0;
  long double root = 0;
};

struct RootOrderReport {
  std::vector<RootOrderEntry> chain;  // sqrt2 < beta_4 < alpha_5 < ... < 2, excluding the ends
  long double min_margin = 0;         // smallest gap along the chain including both ends
  bool chain_ok = false;
  bool difference_ok = false;         // P_{2m+1} - Q_{2m} == -1 for every m
  bool even_factor_ok = false;        // Q_{2m}(-1) == 0 for every m

  bool ok() const { return chain_ok && difference_ok && even_factor_ok; }
};

/// Checks the interleaving of the dominant roots for 2 <= m <= m_max.
RootOrderReport root_order_check(int m_max, long double min_gap = 1e-9L);

}  // namespace hecke
