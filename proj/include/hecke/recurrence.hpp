#pragma once

// Exact evaluation of the normal-form counts |N_2t| through their linear
// recurrences. All arithmetic is arbitrary precision.

#include <map>
#include <set>

#include "hecke/bigint.hpp"
#include "hecke/group.hpp"
#include "hecke/reciprocal.hpp"

namespace hecke {

struct Recurrence {
  GroupParams params;
  Base base = Base::Order2;
  std::map<int, int> lag_coeffs;   // lag -> coefficient
  std::map<int, BigInt> initial;   // consecutive t -> |N_2t|
  std::set<int> enumerated;        // initial t-values obtained by enumeration rather than closed form
  int t_start = 0;                 // first t produced by the recurrence

  int order() const { return lag_coeffs.empty() ? 0 : lag_coeffs.rbegin()->first; }
  int first_t() const { return initial.begin()->first; }
};

/// Throws Error(InvalidBase).
Recurrence build_recurrence(const GroupParams& params, Base base);

struct CountSeq {
  GroupParams params;
  Base base = Base::Order2;
  std::map<int, BigInt> values;

  /// Throws std::out_of_range for t outside the evaluated window.
  const BigInt& at(int t) const { return values.at(t); }
  int first_t() const { return values.begin()->first; }
  int last_t() const { return values.rbegin()->first; }
};

/// Unrolls the recurrence exactly for every t from the first initial index to t_max.
CountSeq eval_counts(const Recurrence& rec, int t_max);

/// (2^t + 2(-1)^t) / 3, the k = infinity count. t >= 1.
BigInt closed_form_zinf(int t);

/// Bijection-style reduction on k = infinity normal forms: N_2t -> N_2(t-1) u N_2(t-2).
/// The first two branches shrink |x_1| by one; the last drops the x_1 = +-1 pair.
/// Pre: infinite k, Order2, t >= 3.
NormalForm phi_map(const NormalForm& w);

/// Certified bound on the non-primitive reciprocal classes of length 2t:
/// sum over proper divisors s of t of |R_2s| = (|N_2s| + |B_2s|)/2, rounded up.
BigInt nonprimitive_upper_bound(const GroupParams& params, Base base, int t);

/// (1/6) t 2^{t/2}, the closed-form non-primitive bound for k = infinity.
long double nonprimitive_bound_zinf(int t);

}  // namespace hecke
