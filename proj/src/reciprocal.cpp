#include "hecke/reciprocal.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "hecke/error.hpp"

namespace hecke {

namespace {

// Visits every exponent sequence (x_0..x_{n-1}), x_i in E_k, with
// sum(|x_i| + 1) == weight. The empty sequence is visited when weight == 0.
template <typename F>
void for_each_weighted(const std::vector<int>& alphabet, int weight, std::vector<int>& prefix, F&& visit) {
  if (weight == 0) {
    visit(std::as_const(prefix));
    return;
  }
  for (int x : alphabet) {
    const int cost = std::abs(x) + 1;
    if (cost > weight) continue;
    prefix.push_back(x);
    for_each_weighted(alphabet, weight - cost, prefix, visit);
    prefix.pop_back();
  }
}

template <typename F>
void for_each_weighted(const GroupParams& params, int weight, F&& visit) {
  if (weight < 0) return;
  const auto alphabet = params.exponents_up_to(std::max(weight, 1));
  std::vector<int> prefix;
  for_each_weighted(alphabet, weight, prefix, visit);
}

// -x canonicalized into E_k without the modular arithmetic.
inline int negate_exponent(int x, const GroupParams& params) {
  return params.is_finite_even() && x == params.m() ? x : -x;
}

Word bb_word(std::span<const int> xs, const GroupParams& params) {
  std::vector<Syllable> raw;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) raw.push_back(Syllable::a());
    raw.push_back(Syllable::b(xs[i]));
  }
  return reduce(raw, params);
}

Word aa_word(std::span<const int> xs, const GroupParams& params) {
  std::vector<Syllable> raw{Syllable::a()};
  for (int x : xs) {
    raw.push_back(Syllable::b(x));
    raw.push_back(Syllable::a());
  }
  return reduce(raw, params);
}

Word ba_word(std::span<const int> xs, const GroupParams& params) {
  std::vector<Syllable> raw;
  for (int x : xs) {
    raw.push_back(Syllable::b(x));
    raw.push_back(Syllable::a());
  }
  return reduce(raw, params);
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

std::string_view to_string(Base base) { return base == Base::Order2 ? "2" : "k"; }

Base parse_base(std::string_view text) {
  if (text == "2") return Base::Order2;
  if (text == "k") return Base::OrderK;
  throw Error(ErrorCode::InvalidConfig, "base must be '2' or 'k', got '" + std::string(text) + "'");
}

void validate_base(const GroupParams& params, Base base) {
  if (base == Base::OrderK && !params.is_finite_even()) {
    throw Error(ErrorCode::InvalidBase, "no order-k cone point involution for k = " + params.label());
  }
}

int min_normal_form_t(const GroupParams& params, Base base) {
  validate_base(params, base);
  return base == Base::Order2 ? 2 : params.m() + 1;
}

NormalForm make_normal_form(const Word& h, Base base) {
  const GroupParams& params = h.params();
  validate_base(params, base);
  if (base == Base::Order2) {
    if (!h.is_bb_word()) throw std::invalid_argument("make_normal_form: [a,h] needs a (bb)-word h");
    const Word a = letter_a(params);
    Word word = multiply(multiply(multiply(a, h), a), invert(h));
    return {base, h, std::move(word), 1 + h.length()};
  }
  if (!h.is_aa_word()) throw std::invalid_argument("make_normal_form: [b^m,h] needs an (aa)-word h");
  const Word bm = letter_b(params.m(), params);
  Word word = multiply(multiply(multiply(bm, h), invert(bm)), invert(h));
  return {base, h, std::move(word), params.m() + h.length()};
}

std::vector<NormalForm> enumerate_normal_forms(const GroupParams& params, Base base, int t) {
  validate_base(params, base);
  if (t < 1) throw std::invalid_argument("enumerate_normal_forms: t must be >= 1");
  std::vector<NormalForm> out;
  if (base == Base::Order2) {
    // h = b^{x0} a ... a b^{x_{n-1}}, |h| = t - 1  <=>  sum(|x_i| + 1) = t
    if (t < 2) return out;
    for_each_weighted(params, t, [&](const std::vector<int>& xs) {
      if (!xs.empty()) out.push_back(make_normal_form(bb_word(xs, params), base));
    });
  } else {
    // h = a b^{x0} a ... b^{x_{n-1}} a, |h| = t - m  <=>  sum(|x_i| + 1) = t - m - 1
    const int weight = t - params.m() - 1;
    if (weight < 0) return out;
    for_each_weighted(params, weight, [&](const std::vector<int>& xs) {
      out.push_back(make_normal_form(aa_word(xs, params), base));
    });
  }
  return out;
}

std::vector<BTypeWord> enumerate_btype(const GroupParams& params, int t) {
  validate_base(params, Base::OrderK);
  if (t < 1) throw std::invalid_argument("enumerate_btype: t must be >= 1");
  const int m = params.m();
  const Word a = letter_a(params);
  const Word bm = letter_b(m, params);

  std::vector<BTypeWord> out;
  std::set<std::vector<int>> seen;
  auto divs = divisors(t);
  // largest q first, so a repeated word keeps the representation with primitive a g b^m g^-1
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const int q = *it;
    const int rho_len = t / q;  // = 1 + m + 2|g|
    if (rho_len < m + 1 || (rho_len - 1 - m) % 2 != 0) continue;
    const int g_len = (rho_len - 1 - m) / 2;
    for_each_weighted(params, g_len, [&](const std::vector<int>& xs) {
      Word g = ba_word(xs, params);
      const Word rho = multiply(multiply(multiply(a, g), bm), invert(g));
      Word word = power(rho, 2 * q);
      std::vector<int> exps;
      for (const auto& s : word.syllables()) {
        if (!s.is_a()) exps.push_back(s.exp);
      }
      if (seen.insert(std::move(exps)).second) out.push_back({std::move(g), q, std::move(word), t});
    });
  }
  return out;
}

BigInt count_btype(const GroupParams& params, int t) {
  if (!params.is_finite_even() || t < 1) return 0;
  const int m = params.m();
  // ba_count[s] = number of (ba)-words (or the identity) of length s
  std::vector<BigInt> ba_count(static_cast<std::size_t>(t) + 1, 0);
  ba_count[0] = 1;
  const auto alphabet = params.exponents_up_to(std::max(t, 1));
  for (int s = 1; s <= t; ++s) {
    for (int x : alphabet) {
      const int cost = std::abs(x) + 1;
      if (cost <= s) ba_count[static_cast<std::size_t>(s)] += ba_count[static_cast<std::size_t>(s - cost)];
    }
  }
  // all[L]: words a g b^m g^-1 of length L; primitive[L] via Mobius over odd cofactors
  auto all = [&](int len) -> BigInt {
    if (len < m + 1 || (len - 1 - m) % 2 != 0) return 0;
    return ba_count[static_cast<std::size_t>((len - 1 - m) / 2)];
  };
  auto primitive = [&](int len) -> BigInt {
    BigInt total = 0;
    for (int d : divisors(len)) {
      const int cof = len / d;
      if (cof % 2 == 0) continue;
      const int mu = mobius(cof);
      if (mu == 1) total += all(d);
      if (mu == -1) total -= all(d);
    }
    return total;
  };
  BigInt count = 0;
  for (int q : divisors(t)) count += primitive(t / q);
  return count;
}

bool is_reciprocal_exponents(std::span<const int> exps, const GroupParams& params, Base base) {
  const std::size_t n = exps.size();
  if (n == 0 || n % 2 != 0) return false;
  const std::size_t half = n / 2;
  if (base == Base::Order2) {
    // axis through the a-syllable preceding e_i (and the one preceding e_{i+n/2})
    for (std::size_t i = 0; i < half; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < half && ok; ++j) {
        ok = exps[(i + j) % n] == negate_exponent(exps[(i + n - 1 - j) % n], params);
      }
      if (ok) return true;
    }
    return false;
  }
  if (!params.is_finite_even()) return false;
  const int m = params.m();
  // axis through e_i and e_{i+n/2}, both of which must be the involution b^m
  for (std::size_t i = 0; i < half; ++i) {
    if (exps[i] != m || exps[i + half] != m) continue;
    bool ok = true;
    for (std::size_t j = 1; j < half && ok; ++j) {
      ok = exps[(i + j) % n] == negate_exponent(exps[(i + n - j) % n], params);
    }
    if (ok) return true;
  }
  return false;
}

bool is_reciprocal(const Word& w, Base base) {
  validate_base(w.params(), base);
  const auto exps = cyclic_exponents(w);
  return is_reciprocal_exponents(exps, w.params(), base);
}

ConstructiveReciprocals::ConstructiveReciprocals(const GroupParams& params, Base base, int t_max)
    : params_(params), t_max_(t_max) {
  validate_base(params, base);
  for (int t = 1; t <= t_max; ++t) {
    for (int n : divisors(t)) {
      for (const auto& nf : enumerate_normal_forms(params, base, t / n)) {
        keys_.insert(conj_class_key(power(nf.word, n)));
      }
    }
    if (params.is_finite_even()) {
      for (const auto& bt : enumerate_btype(params, t)) keys_.insert(conj_class_key(bt.word));
    }
  }
}

std::set<ConjClassKey> ConstructiveReciprocals::keys_of_half_length(int t) const {
  std::set<ConjClassKey> out;
  for (const auto& key : keys_) {
    if (key.length() == 2 * t) out.insert(key);
  }
  return out;
}

bool is_reciprocal_constructive(const Word& w, Base base) {
  const ConjClassKey key = conj_class_key(w);
  const ConstructiveReciprocals oracle(w.params(), base, key.length() / 2);
  return oracle.contains(key);
}

BigInt count_ab_words(const GroupParams& params, int t) {
  if (t < 1) return 0;
  const int weight = 2 * t;
  std::vector<BigInt> count(static_cast<std::size_t>(weight) + 1, 0);
  count[0] = 1;
  const auto alphabet = params.exponents_up_to(weight);
  for (int w = 1; w <= weight; ++w) {
    for (int x : alphabet) {
      const int cost = std::abs(x) + 1;
      if (cost <= w) count[static_cast<std::size_t>(w)] += count[static_cast<std::size_t>(w - cost)];
    }
  }
  return count[static_cast<std::size_t>(weight)];
}

namespace {

// Runs `visit(exps)` on every (ab)-exponent sequence of length 2t, splitting the
// work by first exponent across threads. Each worker owns one State; results are
// returned in worker order for a deterministic merge.
template <typename State, typename Visit>
std::vector<State> parallel_ab_words(const GroupParams& params, int t, unsigned threads, Visit visit) {
  const int weight = 2 * t;
  const auto alphabet = params.exponents_up_to(weight);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(alphabet.size())));
  std::vector<State> states(workers);

  auto run = [&](unsigned worker) {
    State& state = states[worker];
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(weight));
    for (std::size_t i = worker; i < alphabet.size(); i += workers) {
      const int x0 = alphabet[i];
      const int cost = std::abs(x0) + 1;
      if (cost > weight) continue;
      prefix.assign(1, x0);
      for_each_weighted(alphabet, weight - cost, prefix,
                        [&](const std::vector<int>& exps) { visit(state, exps); });
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return states;
}

}  // namespace

ClassTally tally_classes(const GroupParams& params, int t, const CensusOptions& opts) {
  const bool even = params.is_finite_even();
  auto states = parallel_ab_words<ClassTally>(params, t, opts.threads, [&](ClassTally& s, const std::vector<int>& e) {
    ++s.words;
    if (!is_least_rotation(e)) return;
    ++s.classes;
    const bool primitive = smallest_period(e) == e.size();
    const bool at2 = is_reciprocal_exponents(e, params, Base::Order2);
    const bool atk = even && is_reciprocal_exponents(e, params, Base::OrderK);
    if (at2) {
      ++s.reciprocal[0];
      if (primitive) ++s.reciprocal_primitive[0];
    }
    if (atk) {
      ++s.reciprocal[1];
      if (primitive) ++s.reciprocal_primitive[1];
    }
    if (at2 && atk) ++s.reciprocal_both;
  });
  ClassTally total;
  total.t = t;
  for (const auto& s : states) {
    total.words += s.words;
    total.classes += s.classes;
    for (int b = 0; b < 2; ++b) {
      total.reciprocal[b] += s.reciprocal[b];
      total.reciprocal_primitive[b] += s.reciprocal_primitive[b];
    }
    total.reciprocal_both += s.reciprocal_both;
  }
  return total;
}

std::vector<std::vector<int>> enumerate_class_keys(const GroupParams& params, int t, const CensusOptions& opts) {
  using Keys = std::vector<std::vector<int>>;
  auto states = parallel_ab_words<Keys>(params, t, opts.threads, [](Keys& keys, const std::vector<int>& e) {
    if (is_least_rotation(e)) keys.push_back(e);
  });
  Keys out;
  for (auto& s : states) std::move(s.begin(), s.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), [&](const auto& lhs, const auto& rhs) {
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                        [](int x, int y) { return exponent_rank(x) < exponent_rank(y); });
  });
  return out;
}

std::vector<CensusRow> census(const GroupParams& params, Base base, int t_max, const CensusOptions& opts) {
  validate_base(params, base);
  BigInt total_words = 0;
  for (int t = 1; t <= t_max; ++t) total_words += count_ab_words(params, t);
  if (total_words > opts.budget) {
    throw Error(ErrorCode::BudgetExceeded, "census up to t=" + std::to_string(t_max) + " needs " +
                                               total_words.str() + " words, budget is " +
                                               std::to_string(opts.budget));
  }

  std::vector<CensusRow> rows;
  for (int t = 1; t <= t_max; ++t) {
    CensusRow row;
    row.t = t;
    const auto forms = enumerate_normal_forms(params, base, t);
    row.n_forms = forms.size();
    if (params.is_finite_even()) {
      std::set<std::vector<int>> form_words;
      for (const auto& nf : forms) form_words.insert(cyclic_exponents(nf.word));
      const auto btypes = enumerate_btype(params, t);
      row.n_btype = btypes.size();
      std::uint64_t outside = 0;
      for (const auto& bt : btypes) {
        // the order-k normal forms are (ba)-words; compare both at the level of (ab) rotations
        auto exps = cyclic_exponents(bt.word);
        if (base == Base::OrderK) {
          bool found = false;
          for (std::size_t r = 0; r < exps.size() && !found; ++r) {
            std::rotate(exps.begin(), exps.begin() + 1, exps.end());
            found = form_words.contains(exps);
          }
          if (!found) ++outside;
        } else if (!form_words.contains(exps)) {
          ++outside;
        }
      }
      row.n_btype_outside_forms = outside;
    }
    const ClassTally tally = tally_classes(params, t, opts);
    const int b = base == Base::Order2 ? 0 : 1;
    row.n_classes = tally.reciprocal[b];
    row.n_primitive = tally.reciprocal_primitive[b];
    rows.push_back(std::move(row));
  }
  return rows;
}

PairingReport pairing_check(const GroupParams& params, Base base, int t, const ClassTally& tally) {
  validate_base(params, base);
  PairingReport rep;
  rep.t = t;
  const int b = base == Base::Order2 ? 0 : 1;
  rep.census_classes = tally.reciprocal[b];
  rep.proper_powers = tally.reciprocal[b] - tally.reciprocal_primitive[b];

  std::map<ConjClassKey, int> btype_hits;
  if (params.is_finite_even()) {
    for (const auto& bt : enumerate_btype(params, t)) btype_hits.emplace(conj_class_key(bt.word), 0);
  }
  rep.btype_classes = btype_hits.size();

  std::map<ConjClassKey, int> buckets;
  for (const auto& nf : enumerate_normal_forms(params, base, t)) {
    ++rep.forms;
    ConjClassKey key = conj_class_key(nf.word);
    if (auto it = btype_hits.find(key); it != btype_hits.end()) {
      ++it->second;
      ++rep.btype_forms;
    } else {
      ++buckets[std::move(key)];
    }
  }
  rep.buckets = buckets.size();
  for (const auto& [key, size] : buckets) {
    if (size != 2 || !is_reciprocal_exponents(key.exponents(), params, base)) ++rep.bad_buckets;
  }
  std::uint64_t covered = rep.buckets;
  for (const auto& [key, hits] : btype_hits) {
    if (hits != 1) ++rep.bad_btype;
    if (hits > 0) ++covered;
  }
  rep.uncovered = rep.census_classes > covered ? rep.census_classes - covered : 0;
  return rep;
}

std::vector<BTypeBoundRow> btype_bound_check(const GroupParams& params, int t_max) {
  std::vector<BTypeBoundRow> rows;
  if (!params.is_finite_even()) return rows;
  for (int t = 1; t <= t_max; ++t) {
    BTypeBoundRow row;
    row.t = t;
    row.count = enumerate_btype(params, t).size();
    row.bound = (t / 8.0) * std::pow(std::sqrt(2.0), t);
    row.holds = to_long_double(row.count) <= static_cast<long double>(row.bound);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hecke
