#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/reciprocal.hpp"

using namespace hecke;

namespace {

std::vector<std::size_t> form_counts(const GroupParams& p, Base base, int t_lo, int t_hi) {
  std::vector<std::size_t> out;
  for (int t = t_lo; t <= t_hi; ++t) out.push_back(enumerate_normal_forms(p, base, t).size());
  return out;
}

using V = std::vector<std::size_t>;

}  // namespace

TEST_CASE("base validation") {
  CHECK(parse_base("2") == Base::Order2);
  CHECK(parse_base("k") == Base::OrderK);
  CHECK_THROWS_AS(parse_base("3"), Error);
  CHECK_THROWS_AS(validate_base(GroupParams::finite(5), Base::OrderK), Error);
  CHECK_THROWS_AS(validate_base(GroupParams::infinite(), Base::OrderK), Error);
  CHECK_NOTHROW(validate_base(GroupParams::finite(6), Base::OrderK));
  CHECK(min_normal_form_t(GroupParams::finite(8), Base::OrderK) == 5);
}

TEST_CASE("normal form shapes") {
  const auto p = GroupParams::finite(6);
  for (const auto& nf : enumerate_normal_forms(p, Base::Order2, 6)) {
    CHECK(nf.h.is_bb_word());
    CHECK(nf.word.length() == 12);
    CHECK(nf.word.to_string().starts_with("a "));
  }
  for (const auto& nf : enumerate_normal_forms(p, Base::OrderK, 7)) {
    CHECK(nf.h.is_aa_word());
    CHECK(nf.word.length() == 14);
  }
  const auto nf = make_normal_form(parse_word("b", GroupParams::infinite()), Base::Order2);
  CHECK(nf.word.to_string() == "a b^1 a b^-1");
  CHECK(nf.t == 2);
}

TEST_CASE("frozen normal-form counts") {
  CHECK(form_counts(GroupParams::finite(4), Base::Order2, 2, 9) == V{2, 1, 4, 4, 9, 12, 22, 33});
  CHECK(form_counts(GroupParams::finite(5), Base::Order2, 2, 8) == V{2, 2, 4, 8, 12, 24, 40});
  CHECK(form_counts(GroupParams::finite(3), Base::Order2, 2, 8) == V{2, 0, 4, 0, 8, 0, 16});
  CHECK(form_counts(GroupParams::infinite(), Base::Order2, 1, 8) == V{0, 2, 2, 6, 10, 22, 42, 86});
  CHECK(form_counts(GroupParams::finite(4), Base::OrderK, 3, 10) == V{1, 0, 2, 1, 4, 4, 9, 12});
  CHECK(form_counts(GroupParams::finite(6), Base::OrderK, 4, 10) == V{1, 0, 2, 2, 5, 8, 16});
  CHECK(enumerate_normal_forms(GroupParams::finite(6), Base::OrderK, 2).empty());
}

TEST_CASE("B-type words") {
  const auto p4 = GroupParams::finite(4);
  const auto b3 = enumerate_btype(p4, 3);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].word.to_string() == "a b^2 a b^2");
  CHECK(b3[0].g.is_identity());
  CHECK_THROWS_AS(enumerate_btype(GroupParams::finite(5), 4), Error);
  CHECK(count_btype(GroupParams::finite(5), 4) == 0);

  const auto p6 = GroupParams::finite(6);
  const std::vector<int> frozen{0, 0, 0, 1, 0, 0, 0, 3, 0, 2, 0, 5};
  for (int t = 1; t <= 12; ++t) {
    CHECK(count_btype(p6, t) == frozen[t - 1]);
    CHECK(count_btype(p6, t) == enumerate_btype(p6, t).size());
  }
  for (int k : {4, 8, 10}) {
    const auto p = GroupParams::finite(k);
    for (int t = 1; t <= 16; ++t) CHECK(count_btype(p, t) == enumerate_btype(p, t).size());
  }
  for (const auto& row : btype_bound_check(p4, 16)) CHECK(row.holds);
}

TEST_CASE("reciprocity detector") {
  const auto p = GroupParams::finite(5);
  CHECK(is_reciprocal(parse_word("a b a b^-1", p), Base::Order2));
  CHECK_FALSE(is_reciprocal(parse_word("a b a b", p), Base::Order2));
  CHECK_FALSE(is_reciprocal(parse_word("a b a b^2", p), Base::Order2));
  CHECK(is_reciprocal(parse_word("b^2 a b a b^-3", p), Base::Order2));
  CHECK_THROWS_AS(is_reciprocal(parse_word("a b a", p), Base::Order2), Error);
  CHECK_THROWS_AS(is_reciprocal(parse_word("a b", p), Base::OrderK), Error);
  CHECK(is_reciprocal(parse_word("a b^2 a b^2", GroupParams::finite(4)), Base::OrderK));
  CHECK(is_reciprocal(parse_word("a b^2 a b^2", GroupParams::finite(4)), Base::Order2));
  // odd length sequences are never symmetric under a reflection through two a's
  CHECK_FALSE(is_reciprocal_exponents(std::vector<int>{1, -1, 2}, p, Base::Order2));
}

TEST_CASE("every normal form is reciprocal") {
  for (int k : {3, 4, 5, 6, 0}) {
    const auto p = k ? GroupParams::finite(k) : GroupParams::infinite();
    for (Base base : {Base::Order2, Base::OrderK}) {
      if (base == Base::OrderK && !p.is_finite_even()) continue;
      for (int t = 1; t <= 8; ++t) {
        for (const auto& nf : enumerate_normal_forms(p, base, t)) CHECK(is_reciprocal(nf.word, base));
      }
    }
  }
}

TEST_CASE("detector agrees with constructive membership") {
  for (int k : {4, 5}) {
    const auto p = GroupParams::finite(k);
    for (Base base : {Base::Order2, Base::OrderK}) {
      if (base == Base::OrderK && !p.is_finite_even()) continue;
      const ConstructiveReciprocals oracle(p, base, 8);
      for (int t = 1; t <= 8; ++t) {
        for (const auto& exps : enumerate_class_keys(p, t)) {
          const ConjClassKey key(exps, p);
          CHECK(is_reciprocal_exponents(exps, p, base) == oracle.contains(key));
        }
      }
    }
  }
  CHECK(is_reciprocal_constructive(parse_word("a b a b^-1", GroupParams::finite(7)), Base::Order2));
}

TEST_CASE("word counts") {
  const auto p = GroupParams::finite(4);
  for (int t = 1; t <= 7; ++t) {
    std::uint64_t n = 0;
    n = tally_classes(p, t).words;
    CHECK(count_ab_words(p, t) == n);
  }
}

TEST_CASE("census") {
  const auto p4 = GroupParams::finite(4);
  const auto rows = census(p4, Base::Order2, 8);
  const std::vector<int> classes{0, 1, 1, 2, 2, 5, 7, 11};
  const std::vector<int> primitive{0, 1, 0, 1, 2, 3, 5, 9};
  REQUIRE(rows.size() == 8);
  for (const auto& row : rows) {
    CHECK(row.n_classes == classes[row.t - 1]);
    CHECK(row.n_primitive == primitive[row.t - 1]);
    CHECK(row.n_btype_outside_forms == 0);
  }
  CHECK_THROWS_AS(census(p4, Base::Order2, 14, CensusOptions{1, 1000}), Error);
  try {
    census(p4, Base::Order2, 14, CensusOptions{1, 1000});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("census is independent of the thread count") {
  const auto p = GroupParams::finite(6);
  for (int t = 6; t <= 9; ++t) {
    const auto one = tally_classes(p, t, CensusOptions{1});
    const auto three = tally_classes(p, t, CensusOptions{3});
    CHECK(one.words == three.words);
    CHECK(one.classes == three.classes);
    CHECK(one.reciprocal[0] == three.reciprocal[0]);
    CHECK(one.reciprocal[1] == three.reciprocal[1]);
    CHECK(one.reciprocal_primitive[0] == three.reciprocal_primitive[0]);
    CHECK(enumerate_class_keys(p, t, CensusOptions{1}) == enumerate_class_keys(p, t, CensusOptions{4}));
  }
}

TEST_CASE("pairing") {
  for (int k : {4, 5, 6}) {
    const auto p = GroupParams::finite(k);
    for (int t = 1; t <= 9; ++t) {
      const auto tally = tally_classes(p, t);
      const auto rep = pairing_check(p, Base::Order2, t, tally);
      CHECK(rep.ok());
      if (p.is_finite_even()) CHECK(pairing_check(p, Base::OrderK, t, tally).ok());
    }
  }
  // [a,b]^2 = [a, b a b^-1]: proper powers already sit in the buckets
  const auto p = GroupParams::infinite();
  const auto rep = pairing_check(p, Base::Order2, 4, tally_classes(p, 4));
  CHECK(rep.proper_powers == 1);
  CHECK(rep.uncovered == 0);
  CHECK(rep.ok());
}
