#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace glattice {

/// Arbitrary-precision integer with an inline 64-bit fast path.
///
/// Values that fit in int64 are stored inline; any operation that would
/// overflow is redone in GMP and the result is demoted again when it fits.
/// Elimination over Z mostly touches small entries, so the common case never
/// allocates.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(int v) noexcept : small_(v) {}
  Integer(long v) noexcept : small_(v) {}
  Integer(long long v) noexcept : small_(v) {}
  explicit Integer(const mpz_class& z) { assign_mpz(z); }

  static Integer from_string(std::string_view text);

  Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? new mpz_class(*o.big_) : nullptr) {}
  Integer(Integer&& o) noexcept : small_(o.small_), big_(o.big_) {
    o.big_ = nullptr;
    o.small_ = 0;
  }
  Integer& operator=(const Integer& o) {
    if (this == &o) return *this;
    if (o.big_) {
      if (big_) {
        *big_ = *o.big_;
      } else {
        big_ = new mpz_class(*o.big_);
      }
    } else {
      delete big_;
      big_ = nullptr;
      small_ = o.small_;
    }
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    if (this == &o) return *this;
    delete big_;
    small_ = o.small_;
    big_ = o.big_;
    o.big_ = nullptr;
    o.small_ = 0;
    return *this;
  }
  ~Integer() { delete big_; }

  bool is_small() const noexcept { return big_ == nullptr; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  bool is_unit() const noexcept { return !big_ && (small_ == 1 || small_ == -1); }
  int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
  }

  /// Throws std::overflow_error when the value does not fit.
  std::int64_t to_int64() const;
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
  std::string str() const;

  Integer operator-() const {
    if (!big_ && small_ != INT64_MIN) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
  }

  Integer& operator+=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return slow_add(o);
  }
  Integer& operator-=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return slow_sub(o);
  }
  Integer& operator*=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return slow_mul(o);
  }

  /// this -= q * b
  void submul(const Integer& q, const Integer& b) {
    std::int64_t p, r;
    if (!big_ && !q.big_ && !b.big_ && !__builtin_mul_overflow(q.small_, b.small_, &p) &&
        !__builtin_sub_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
    slow_submul(q, b);
  }
  /// this += q * b
  void addmul(const Integer& q, const Integer& b) {
    std::int64_t p, r;
    if (!big_ && !q.big_ && !b.big_ && !__builtin_mul_overflow(q.small_, b.small_, &p) &&
        !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
    slow_addmul(q, b);
  }

  void negate() {
    if (!big_ && small_ != INT64_MIN) {
      small_ = -small_;
      return;
    }
    *this = -*this;
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return a.compare(b) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    return a.compare(b) <=> 0;
  }

  friend Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }
  /// Compares |a| with |b|.
  friend int cmp_abs(const Integer& a, const Integer& b);
  /// Quotient rounded toward negative infinity. Throws on division by zero.
  friend Integer floor_div(const Integer& a, const Integer& b);
  /// Remainder with the sign of b (so 0 <= r < b for b > 0).
  friend Integer floor_mod(const Integer& a, const Integer& b);
  /// Division known to be exact.
  friend Integer exact_div(const Integer& a, const Integer& b);
  friend bool divides(const Integer& d, const Integer& a);
  friend Integer gcd(const Integer& a, const Integer& b);

 private:
  void assign_mpz(const mpz_class& z);
  int compare(const Integer& o) const noexcept;
  Integer& slow_add(const Integer& o);
  Integer& slow_sub(const Integer& o);
  Integer& slow_mul(const Integer& o);
  void slow_submul(const Integer& q, const Integer& b);
  void slow_addmul(const Integer& q, const Integer& b);

  std::int64_t small_ = 0;
  mpz_class* big_ = nullptr;  // owned; set only when the value does not fit in int64
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

/// Extended gcd: returns g = gcd(a,b) >= 0 with s*a + t*b = g.
struct ExtGcd {
  Integer g, s, t;
};
ExtGcd ext_gcd(const Integer& a, const Integer& b);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace glattice
