#include "hecke/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

GroupParams GroupParams::finite(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidConfig, "group order k must be >= 3, got " + std::to_string(k));
  return GroupParams(k);
}

GroupParams GroupParams::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinite();
  int k = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, k);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidConfig, "cannot parse k from '" + std::string(text) + "'");
  }
  return finite(k);
}

bool GroupParams::in_exponent_set(long long x) const noexcept {
  if (x == 0) return false;
  if (is_infinite()) return true;
  return x >= min_exponent() && x <= max_exponent();
}

std::vector<int> GroupParams::exponents_up_to(int bound) const {
  std::vector<int> out;
  for (int mag = 1; mag <= bound; ++mag) {
    if (in_exponent_set(mag)) out.push_back(mag);
    if (in_exponent_set(-mag)) out.push_back(-mag);
  }
  return out;
}

std::string GroupParams::label() const { return is_infinite() ? "inf" : std::to_string(k_); }

std::optional<int> canonicalize_exponent(long long x, const GroupParams& params) {
  if (params.is_infinite()) {
    if (x == 0) return std::nullopt;
    return static_cast<int>(x);
  }
  const long long k = params.k();
  long long r = x % k;
  if (r < 0) r += k;
  if (r == 0) return std::nullopt;
  if (r > k / 2) r -= k;
  return static_cast<int>(r);
}

int Word::length() const noexcept {
  int len = 0;
  for (const auto& s : syllables_) len += s.is_a() ? 1 : std::abs(s.exp);
  return len;
}

int Word::a_count() const noexcept {
  return static_cast<int>(std::count_if(syllables_.begin(), syllables_.end(),
                                        [](const Syllable& s) { return s.is_a(); }));
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "e";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    if (s.is_a()) {
      out += 'a';
    } else {
      out += "b^";
      out += std::to_string(s.exp);
    }
  }
  return out;
}

Word reduce(std::span<const Syllable> raw, const GroupParams& params) {
  Word out(params);
  auto& stack = out.syllables_;
  stack.reserve(raw.size());
  for (Syllable s : raw) {
    if (!s.is_a()) {
      auto c = canonicalize_exponent(s.exp, params);
      if (!c) continue;
      s.exp = *c;
    } else {
      s.exp = 1;
    }
    if (stack.empty() || stack.back().kind != s.kind) {
      stack.push_back(s);
      continue;
    }
    if (s.is_a()) {
      stack.pop_back();
      continue;
    }
    auto merged = canonicalize_exponent(static_cast<long long>(stack.back().exp) + s.exp, params);
    stack.pop_back();
    if (merged) stack.push_back(Syllable::b(*merged));
  }
  return out;
}

Word multiply(const Word& u, const Word& v) {
  if (!(u.params() == v.params())) throw std::invalid_argument("multiply: mismatched group parameters");
  std::vector<Syllable> raw(u.syllables().begin(), u.syllables().end());
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return reduce(raw, u.params());
}

Word invert(const Word& w) {
  std::vector<Syllable> raw;
  raw.reserve(w.size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
    raw.push_back(it->is_a() ? *it : Syllable::b(-it->exp));
  }
  return reduce(raw, w.params());
}

Word power(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("power: exponent must be positive");
  std::vector<Syllable> raw;
  raw.reserve(w.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) raw.insert(raw.end(), w.syllables().begin(), w.syllables().end());
  return reduce(raw, w.params());
}

Word letter_a(const GroupParams& params) {
  const Syllable s = Syllable::a();
  return reduce(std::span(&s, 1), params);
}

Word letter_b(int x, const GroupParams& params) {
  const Syllable s = Syllable::b(x);
  return reduce(std::span(&s, 1), params);
}

Word word_from_ab_exponents(std::span<const int> exps, const GroupParams& params) {
  Word out(params);
  out.syllables_.reserve(2 * exps.size());
  for (int x : exps) {
    auto c = canonicalize_exponent(x, params);
    if (!c) throw std::invalid_argument("word_from_ab_exponents: exponent is 0 mod k");
    out.syllables_.push_back(Syllable::a());
    out.syllables_.push_back(Syllable::b(*c));
  }
  return out;
}

Word parse_word(std::string_view text, const GroupParams& params) {
  std::vector<Syllable> raw;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n') ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    if (tok == "a") {
      raw.push_back(Syllable::a());
    } else if (tok == "b") {
      raw.push_back(Syllable::b(1));
    } else if (tok == "e" || tok == "1") {
      continue;
    } else if (tok.starts_with("b^")) {
      std::string_view num = tok.substr(2);
      if (num.size() >= 2 && num.front() == '{' && num.back() == '}') num = num.substr(1, num.size() - 2);
      long long x = 0;
      const char* first = num.data();
      if (!num.empty() && num.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, num.data() + num.size(), x);
      if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
        throw Error(ErrorCode::ParseError, "bad exponent in syllable '" + std::string(tok) + "'");
      }
      if (!params.is_infinite()) x %= params.k();
      raw.push_back(Syllable::b(static_cast<int>(x)));
    } else {
      throw Error(ErrorCode::ParseError, "unknown syllable '" + std::string(tok) + "'");
    }
  }
  return reduce(raw, params);
}

Word cyclically_reduce(const Word& w) {
  std::vector<Syllable> s(w.syllables().begin(), w.syllables().end());
  std::size_t front = 0;  // live range is [front, s.size())
  while (s.size() - front >= 2 && s[front].kind == s.back().kind) {
    if (s[front].is_a()) {
      ++front;
      s.pop_back();
      continue;
    }
    // conjugate by b^{x_front}: merge the first B syllable into the last one
    auto merged = canonicalize_exponent(static_cast<long long>(s.back().exp) + s[front].exp, w.params());
    ++front;
    s.pop_back();
    if (merged) s.push_back(Syllable::b(*merged));
  }
  return reduce(std::span(s).subspan(front), w.params());
}

bool is_elliptic(const Word& w) { return cyclically_reduce(w).size() <= 1; }

std::vector<int> cyclic_exponents(const Word& w) {
  const Word c = cyclically_reduce(w);
  if (c.size() <= 1) throw Error(ErrorCode::EllipticInput, "'" + w.to_string() + "' has finite order");
  auto syl = c.syllables();
  std::vector<int> exps;
  exps.reserve(syl.size() / 2);
  // a cyclically reduced word of size >= 2 alternates with even size
  const std::size_t start = syl.front().is_a() ? 0 : 1;
  for (std::size_t i = 0; i < syl.size(); ++i) {
    const auto& s = syl[(start + i) % syl.size()];
    if (!s.is_a()) exps.push_back(s.exp);
  }
  return exps;
}

std::size_t least_rotation(std::span<const int> exps) {
  const std::size_t n = exps.size();
  if (n == 0) return 0;
  auto at = [&](std::size_t i) { return exponent_rank(exps[i % n]); };
  std::vector<long> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = at(j);
    long i = fail[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i + 1))) {
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

bool is_least_rotation(std::span<const int> exps) {
  const std::size_t n = exps.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const int lhs = exponent_rank(exps[(r + i) % n]);
      const int rhs = exponent_rank(exps[i]);
      if (lhs < rhs) return false;
      if (lhs > rhs) break;
    }
  }
  return true;
}

int ConjClassKey::length() const noexcept {
  int len = static_cast<int>(exps_.size());
  for (int x : exps_) len += std::abs(x);
  return len;
}

std::strong_ordering operator<=>(const ConjClassKey& lhs, const ConjClassKey& rhs) {
  if (auto c = lhs.params_.k() <=> rhs.params_.k(); c != 0) return c;
  const std::size_t n = std::min(lhs.exps_.size(), rhs.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = exponent_rank(lhs.exps_[i]) <=> exponent_rank(rhs.exps_[i]); c != 0) return c;
  }
  return lhs.exps_.size() <=> rhs.exps_.size();
}

ConjClassKey conj_class_key_from_exponents(std::span<const int> exps, const GroupParams& params) {
  const std::size_t shift = least_rotation(exps);
  std::vector<int> rotated(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) rotated[i] = exps[(shift + i) % exps.size()];
  return ConjClassKey(std::move(rotated), params);
}

ConjClassKey conj_class_key(const Word& w) {
  const auto exps = cyclic_exponents(w);
  return conj_class_key_from_exponents(exps, w.params());
}

std::size_t smallest_period(std::span<const int> exps) {
  const std::size_t n = exps.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = exps[i] == exps[i - p];
    if (periodic) return p;
  }
  return n;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (!w.is_ab_word()) throw std::invalid_argument("primitive_root: expected a cyclically reduced (ab)-word");
  std::vector<int> exps;
  for (const auto& s : w.syllables()) {
    if (!s.is_a()) exps.push_back(s.exp);
  }
  const std::size_t p = smallest_period(exps);
  return {word_from_ab_exponents(std::span(exps).first(p), w.params()),
          static_cast<int>(exps.size() / p)};
}

bool is_primitive(const Word& w) { return primitive_root(w).exponent == 1; }

}  // namespace hecke
