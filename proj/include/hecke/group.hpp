#pragma once

// Word model for the free product Z2 * Zk (3 <= k <= infinity).
//
// Elements are alternating syllable sequences over {a, b^x}. Every B exponent
// is stored canonicalized into E_k = { -floor((k-1)/2) .. floor(k/2) } \ {0}
// (E_inf = Z \ {0}), and the word length is  #a + sum |x_i|.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

class GroupParams {
 public:
  /// Finite order k >= 3. Throws Error(InvalidConfig) otherwise.
  static GroupParams finite(int k);
  static GroupParams infinite() { return GroupParams(0); }
  /// Parses "inf" / "infinity" or a decimal integer >= 3.
  static GroupParams parse(std::string_view text);

  bool is_infinite() const noexcept { return k_ == 0; }
  bool is_finite_even() const noexcept { return k_ != 0 && k_ % 2 == 0; }
  /// Order of b; only meaningful for finite k.
  int k() const noexcept { return k_; }
  /// floor(k/2); 0 for k = infinity.
  int m() const noexcept { return k_ / 2; }

  /// Smallest and largest members of E_k (finite k only).
  int min_exponent() const noexcept { return -((k_ - 1) / 2); }
  int max_exponent() const noexcept { return k_ / 2; }
  bool in_exponent_set(long long x) const noexcept;

  /// Members of E_k with |x| <= bound, ordered by (|x|, positive first).
  std::vector<int> exponents_up_to(int bound) const;

  std::string label() const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  explicit GroupParams(int k) : k_(k) {}
  int k_;
};

/// The unique l in E_k with l = x (mod k); nullopt when x = 0 (mod k).
std::optional<int> canonicalize_exponent(long long x, const GroupParams& params);

enum class SyllableKind : std::uint8_t { A, B };

struct Syllable {
  SyllableKind kind = SyllableKind::A;
  int exp = 1;  // always 1 for A

  static constexpr Syllable a() { return {SyllableKind::A, 1}; }
  static constexpr Syllable b(int x) { return {SyllableKind::B, x}; }

  constexpr bool is_a() const noexcept { return kind == SyllableKind::A; }

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Rank used by the canonical syllable order: A < B, and B exponents by
/// (|x| ascending, positive before negative).
constexpr int syllable_rank(const Syllable& s) noexcept {
  if (s.is_a()) return 0;
  const int mag = s.exp < 0 ? -s.exp : s.exp;
  return 2 * mag + (s.exp < 0 ? 1 : 0);
}
constexpr int exponent_rank(int x) noexcept { return syllable_rank(Syllable::b(x)); }

/// Reduced word. Immutable value: every operation returns a fresh word.
class Word {
 public:
  explicit Word(GroupParams params) : params_(params) {}

  const GroupParams& params() const noexcept { return params_; }
  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool is_identity() const noexcept { return syllables_.empty(); }

  /// Word length: number of a syllables plus the sum of |b exponents|.
  int length() const noexcept;
  int a_count() const noexcept;

  bool starts_with_a() const noexcept { return !syllables_.empty() && syllables_.front().is_a(); }
  bool ends_with_a() const noexcept { return !syllables_.empty() && syllables_.back().is_a(); }
  bool is_ab_word() const noexcept { return starts_with_a() && !ends_with_a(); }
  bool is_ba_word() const noexcept { return !syllables_.empty() && !starts_with_a() && ends_with_a(); }
  bool is_aa_word() const noexcept { return starts_with_a() && ends_with_a(); }
  bool is_bb_word() const noexcept {
    return !syllables_.empty() && !starts_with_a() && !ends_with_a();
  }

  /// Text form, e.g. "a b^2 a b^-2"; the identity prints as "e".
  std::string to_string() const;

  friend bool operator==(const Word& lhs, const Word& rhs) {
    return lhs.params_ == rhs.params_ && lhs.syllables_ == rhs.syllables_;
  }

 private:
  friend Word reduce(std::span<const Syllable> raw, const GroupParams& params);
  friend Word word_from_ab_exponents(std::span<const int> exps, const GroupParams& params);

  GroupParams params_;
  std::vector<Syllable> syllables_;
};

/// Free-product normal form: merges adjacent same-kind syllables until none remain.
Word reduce(std::span<const Syllable> raw, const GroupParams& params);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
/// n >= 1.
Word power(const Word& w, int n);

Word letter_a(const GroupParams& params);
Word letter_b(int x, const GroupParams& params);

/// Builds a b^{e0} a b^{e1} ... a b^{e_{N-1}}; exponents are canonicalized and must be nonzero mod k.
Word word_from_ab_exponents(std::span<const int> exps, const GroupParams& params);

/// Parses whitespace-separated syllables `a`, `b`, `b^<int>`; the result is reduced.
Word parse_word(std::string_view text, const GroupParams& params);

/// A cyclically reduced word conjugate to w.
Word cyclically_reduce(const Word& w);

/// True when w is trivial or conjugate to a or to a power of b.
bool is_elliptic(const Word& w);

/// Exponent sequence (e0..e_{N-1}) of an (ab)-word conjugate to w by an even rotation.
/// Throws Error(EllipticInput) for elliptic w.
std::vector<int> cyclic_exponents(const Word& w);

/// Index of the least rotation of `exps` under exponent_rank order (Booth).
std::size_t least_rotation(std::span<const int> exps);
/// True when `exps` is itself a least rotation.
bool is_least_rotation(std::span<const int> exps);

/// Canonical representative of an infinite-order conjugacy class: the least
/// even cyclic permutation of its (ab)-word form.
class ConjClassKey {
 public:
  ConjClassKey(std::vector<int> canonical_exps, GroupParams params)
      : exps_(std::move(canonical_exps)), params_(params) {}

  std::span<const int> exponents() const noexcept { return exps_; }
  const GroupParams& params() const noexcept { return params_; }
  Word rep() const { return word_from_ab_exponents(exps_, params_); }
  int length() const noexcept;

  friend bool operator==(const ConjClassKey& lhs, const ConjClassKey& rhs) {
    return lhs.params_ == rhs.params_ && lhs.exps_ == rhs.exps_;
  }
  friend std::strong_ordering operator<=>(const ConjClassKey& lhs, const ConjClassKey& rhs);

 private:
  std::vector<int> exps_;
  GroupParams params_;
};

/// Throws Error(EllipticInput) when w is elliptic.
ConjClassKey conj_class_key(const Word& w);
ConjClassKey conj_class_key_from_exponents(std::span<const int> exps, const GroupParams& params);

struct PrimitiveRoot {
  Word root;
  int exponent = 1;
};

/// w = root^exponent with root primitive; pre: w a cyclically reduced (ab)-word.
PrimitiveRoot primitive_root(const Word& w);
bool is_primitive(const Word& w);
/// Smallest period p of the cyclic sequence with p | size.
std::size_t smallest_period(std::span<const int> exps);

}  // namespace hecke
