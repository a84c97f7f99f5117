#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maxatom {

/// Exact rational number. Always stored in canonical reduced form with a
/// positive denominator, so equality is value equality and comparisons are
/// never subject to rounding.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Accepts integers ("-3"), fractions ("7/2", "-7/2") and plain decimals
  /// ("1.5", "-.25"). Returns nullopt on anything else.
  static std::optional<Rat> parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Numerator/denominator as int64, throwing if they do not fit.
  std::int64_t num_i64() const;
  std::int64_t den_i64() const;

  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

inline std::int64_t Rat::num_i64() const {
  const mpz_class n = num();
  if (!n.fits_slong_p()) throw std::overflow_error("rational numerator does not fit in 64 bits");
  return n.get_si();
}

inline std::int64_t Rat::den_i64() const {
  const mpz_class d = den();
  if (!d.fits_slong_p()) throw std::overflow_error("rational denominator does not fit in 64 bits");
  return d.get_si();
}

inline std::optional<Rat> Rat::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const std::string_view ns = text.substr(0, slash);
    const std::string_view ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty()) return std::nullopt;
    mpz_class n, d;
    if (n.set_str(std::string(ns), 10) != 0) return std::nullopt;
    if (d.set_str(std::string(ds), 10) != 0) return std::nullopt;
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return Rat(q);
  }
  // Decimal literal: [-]digits[.digits], at least one digit overall.
  std::string_view s = text;
  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_dot = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    digits.push_back(c);
    if (seen_dot) ++frac_digits;
  }
  if (digits.empty()) return std::nullopt;
  mpz_class n(digits, 10);
  if (neg) n = -n;
  mpz_class d = 1;
  for (std::size_t i = 0; i < frac_digits; ++i) d *= 10;
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(q);
}

/// Value in Q ∪ {-inf}. -inf absorbs addition and is below every finite value.
class ExtValue {
 public:
  ExtValue() = default;  // -inf
  static ExtValue minus_inf() { return ExtValue(); }
  static ExtValue finite(Rat r) {
    ExtValue v;
    v.finite_ = true;
    v.v_ = std::move(r);
    return v;
  }

  bool is_finite() const { return finite_; }
  const Rat& value() const {
    if (!finite_) throw std::logic_error("value() on -inf");
    return v_;
  }

  ExtValue operator+(const Rat& r) const {
    if (!finite_) return minus_inf();
    return finite(v_ + r);
  }

  friend ExtValue max(const ExtValue& a, const ExtValue& b) { return a < b ? b : a; }

  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    return a.v_ <=> b.v_;
  }

  std::string str() const { return finite_ ? v_.str() : "-inf"; }

 private:
  bool finite_ = false;
  Rat v_;
};

}  // namespace maxatom
