#pragma once

// Reciprocal normal forms [a,h] / [b^m,h], B-type words, the dihedral
// reciprocity test and the brute-force conjugacy-class census.

#include <cstdint>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "hecke/bigint.hpp"
#include "hecke/group.hpp"

namespace hecke {

/// Cone point a reciprocal class is based at: the order-2 point (involution a)
/// or, for even k = 2m, the order-k point (involution b^m).
enum class Base { Order2, OrderK };

std::string_view to_string(Base base);
/// "2" or "k".
Base parse_base(std::string_view text);
/// Throws Error(InvalidBase) unless the base exists for these parameters.
void validate_base(const GroupParams& params, Base base);

struct NormalForm {
  Base base = Base::Order2;
  Word h;     // (bb)-word for Order2, (aa)-word for OrderK
  Word word;  // [a,h] = a h a h^-1  or  [b^m,h] = b^m h b^-m h^-1
  int t = 0;  // word.length() == 2t
};

/// Half-length below which no normal form exists: 2 for Order2, m+1 for OrderK.
int min_normal_form_t(const GroupParams& params, Base base);

/// Builds [a,h] or [b^m,h] from a partner word of the right shape.
NormalForm make_normal_form(const Word& h, Base base);

/// Every normal form of length 2t, one per partner h. Returns an empty set for
/// 1 <= t < min_normal_form_t. Throws Error(InvalidBase).
std::vector<NormalForm> enumerate_normal_forms(const GroupParams& params, Base base, int t);

struct BTypeWord {
  Word g;     // (ba)-word or identity
  int q = 1;
  Word word;  // (a g b^m g^-1)^{2q}
  int t = 0;
};

/// All B-type words of length 2t, deduplicated as words. Throws Error(InvalidBase)
/// unless k is finite and even.
std::vector<BTypeWord> enumerate_btype(const GroupParams& params, int t);

/// |B_2t| by Mobius inversion over primitive a g b^m g^-1 words; exact for any t.
/// Zero for odd or infinite k.
BigInt count_btype(const GroupParams& params, int t);

/// Dihedral symmetry test on the cyclic exponent sequence of an (ab)-word.
/// Order2: a reflection fixing two a-syllables negates every exponent.
/// OrderK: a reflection fixing two b^m syllables negates every exponent.
bool is_reciprocal_exponents(std::span<const int> exps, const GroupParams& params, Base base);

/// Throws Error(EllipticInput) or Error(InvalidBase).
bool is_reciprocal(const Word& w, Base base);

/// Constructive membership oracle: class keys of every power of a normal form
/// together with every B-type word, for all half-lengths up to t_max.
class ConstructiveReciprocals {
 public:
  ConstructiveReciprocals(const GroupParams& params, Base base, int t_max);

  bool contains(const ConjClassKey& key) const { return keys_.contains(key); }
  const std::set<ConjClassKey>& keys() const noexcept { return keys_; }
  std::set<ConjClassKey> keys_of_half_length(int t) const;

 private:
  GroupParams params_;
  int t_max_;
  std::set<ConjClassKey> keys_;
};

/// Constructive reciprocity for a single word (builds the oracle up to its length).
bool is_reciprocal_constructive(const Word& w, Base base);

struct CensusOptions {
  unsigned threads = 1;
  /// Upper bound on the number of (ab)-words enumerated over the whole run.
  std::uint64_t budget = 100'000'000;
};

/// Number of (ab)-words (exponent sequences) of length exactly 2t.
BigInt count_ab_words(const GroupParams& params, int t);

/// Per-half-length tally over all conjugacy classes of cyclically reduced words.
struct ClassTally {
  int t = 0;
  std::uint64_t words = 0;
  std::uint64_t classes = 0;
  std::uint64_t reciprocal[2] = {0, 0};  // indexed by Base
  std::uint64_t reciprocal_primitive[2] = {0, 0};
  std::uint64_t reciprocal_both = 0;     // reciprocal at both cone points (B-type classes)
};

ClassTally tally_classes(const GroupParams& params, int t, const CensusOptions& opts = {});

/// Canonical exponent sequences of every class of length 2t, sorted by key.
std::vector<std::vector<int>> enumerate_class_keys(const GroupParams& params, int t,
                                                   const CensusOptions& opts = {});

struct CensusRow {
  int t = 0;
  BigInt n_forms;
  BigInt n_btype;
  BigInt n_classes;
  BigInt n_primitive;
  BigInt n_btype_outside_forms;  // |B_2t \ N_2t| as word sets, diagnostic
};

/// Brute-force census for 1 <= t <= t_max. Throws Error(BudgetExceeded) before
/// enumerating when the total word count exceeds opts.budget.
std::vector<CensusRow> census(const GroupParams& params, Base base, int t_max,
                              const CensusOptions& opts = {});

struct BTypeBoundRow {
  int t = 0;
  BigInt count;
  double bound = 0.0;  // (t/8) * sqrt(2)^t
  bool holds = false;
};

/// Conjugacy bookkeeping of N_2t against the census at one half-length.
struct PairingReport {
  int t = 0;
  std::uint64_t forms = 0;            // |N_2t|
  std::uint64_t btype_forms = 0;      // normal forms whose class is a B-type class
  std::uint64_t btype_classes = 0;    // distinct B-type classes of length 2t
  std::uint64_t buckets = 0;          // classes of the remaining forms
  std::uint64_t bad_buckets = 0;      // buckets of size != 2
  std::uint64_t bad_btype = 0;        // B-type classes without exactly one normal form
  std::uint64_t census_classes = 0;   // |R_2t| by direct classification
  std::uint64_t uncovered = 0;        // reciprocal classes with no normal-form representative
  std::uint64_t proper_powers = 0;    // non-primitive reciprocal classes (already among the buckets)

  bool ok() const {
    return bad_buckets == 0 && bad_btype == 0 && uncovered == 0 &&
           census_classes == (forms - btype_forms) / 2 + btype_classes;
  }
};

/// `tally` must come from tally_classes(params, t).
PairingReport pairing_check(const GroupParams& params, Base base, int t, const ClassTally& tally);

/// |B_2t| <= (t/8) sqrt(2)^t for 1 <= t <= t_max; empty for odd or infinite k.
std::vector<BTypeBoundRow> btype_bound_check(const GroupParams& params, int t_max);

}  // namespace hecke
