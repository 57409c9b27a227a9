#include "hecke/recurrence.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

namespace {

// (2^t + 2(-1)^t) / 3: the count of (bb)-words of length t-1 with unbounded exponents.
BigInt unbounded_count(int t) {
  BigInt p = BigInt(1) << t;
  p += (t % 2 == 0) ? 2 : -2;
  return p / 3;
}

}  // namespace

Recurrence build_recurrence(const GroupParams& params, Base base) {
  validate_base(params, base);
  Recurrence rec{params, base, {}, {}, {}, 0};

  if (params.is_infinite()) {
    rec.lag_coeffs = {{1, 1}, {2, 2}};
    rec.initial = {{1, 0}, {2, 2}};
    rec.t_start = 3;
    return rec;
  }

  const int m = params.m();
  const bool even = params.k() % 2 == 0;
  for (int lag = 2; lag <= m + 1; ++lag) rec.lag_coeffs[lag] = 2;
  // b^m = b^-m, so the longest first syllable has only one sign
  if (even) rec.lag_coeffs[m + 1] = 1;

  if (base == Base::Order2) {
    for (int t = 2; t <= m + 2; ++t) {
      BigInt v = unbounded_count(t);
      if (t == m + 2) v -= 2;
      if (even && t == m + 1) v -= 1;
      rec.initial[t] = v;
    }
    rec.t_start = m + 3;
    return rec;
  }

  rec.initial[m + 1] = 1;
  rec.initial[m + 2] = 0;
  rec.initial[m + 3] = 2;
  for (int t = m + 4; t <= 2 * m + 1; ++t) {
    rec.initial[t] = enumerate_normal_forms(params, base, t).size();
    rec.enumerated.insert(t);
  }
  rec.t_start = std::max(m + 4, 2 * m + 2);
  return rec;
}

CountSeq eval_counts(const Recurrence& rec, int t_max) {
  CountSeq seq{rec.params, rec.base, {}};
  for (const auto& [t, v] : rec.initial) {
    if (t <= t_max) seq.values[t] = v;
  }
  for (int t = rec.t_start; t <= t_max; ++t) {
    BigInt v = 0;
    for (const auto& [lag, coeff] : rec.lag_coeffs) v += coeff * seq.values.at(t - lag);
    seq.values[t] = std::move(v);
  }
  return seq;
}

BigInt closed_form_zinf(int t) {
  if (t < 1) throw std::invalid_argument("closed_form_zinf: t must be >= 1");
  return unbounded_count(t);
}

NormalForm phi_map(const NormalForm& w) {
  const GroupParams& params = w.word.params();
  if (!params.is_infinite() || w.base != Base::Order2) {
    throw std::invalid_argument("phi_map: defined on k = infinity order-2 normal forms only");
  }
  if (w.t < 3) throw std::invalid_argument("phi_map: needs t >= 3");

  std::vector<int> xs;
  for (const auto& s : w.h.syllables()) {
    if (!s.is_a()) xs.push_back(s.exp);
  }
  if (xs.front() > 1) {
    --xs.front();
  } else if (xs.front() < -1) {
    ++xs.front();
  } else {
    xs.erase(xs.begin());
  }

  std::vector<Syllable> raw;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) raw.push_back(Syllable::a());
    raw.push_back(Syllable::b(xs[i]));
  }
  return make_normal_form(reduce(raw, params), Base::Order2);
}

BigInt nonprimitive_upper_bound(const GroupParams& params, Base base, int t) {
  const Recurrence rec = build_recurrence(params, base);
  const CountSeq counts = eval_counts(rec, std::max(t, rec.first_t()));
  BigInt total = 0;
  for (int s = 1; s < t; ++s) {
    if (t % s != 0) continue;
    BigInt forms = counts.values.contains(s) ? counts.at(s) : BigInt(0);
    BigInt classes = forms + count_btype(params, s);
    total += (classes + 1) / 2;
  }
  return total;
}

long double nonprimitive_bound_zinf(int t) {
  return static_cast<long double>(t) * std::pow(2.0L, t / 2.0L) / 6.0L;
}

}  // namespace hecke
