#include "glattice/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace glattice {

namespace {

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

void Integer::assign_mpz(const mpz_class& z) {
  if (fits(z)) {
    delete big_;
    big_ = nullptr;
    small_ = z.get_si();
  } else if (big_) {
    *big_ = z;
  } else {
    big_ = new mpz_class(z);
  }
}

Integer Integer::from_string(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return Integer(z);
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits: " + big_->get_str());
  return small_;
}

std::string Integer::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

int Integer::compare(const Integer& o) const noexcept {
  if (!big_ && !o.big_) return (small_ > o.small_) - (small_ < o.small_);
  return cmp(to_mpz(), o.to_mpz());
}

Integer& Integer::slow_add(const Integer& o) {
  assign_mpz(to_mpz() + o.to_mpz());
  return *this;
}
Integer& Integer::slow_sub(const Integer& o) {
  assign_mpz(to_mpz() - o.to_mpz());
  return *this;
}
Integer& Integer::slow_mul(const Integer& o) {
  assign_mpz(to_mpz() * o.to_mpz());
  return *this;
}
void Integer::slow_submul(const Integer& q, const Integer& b) { assign_mpz(to_mpz() - q.to_mpz() * b.to_mpz()); }
void Integer::slow_addmul(const Integer& q, const Integer& b) { assign_mpz(to_mpz() + q.to_mpz() * b.to_mpz()); }

int cmp_abs(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small_ != INT64_MIN && b.small_ != INT64_MIN) {
    std::int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
    std::int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
    return (x > y) - (x < y);
  }
  return mpz_cmpabs(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    std::int64_t q = a.small_ / b.small_;
    std::int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) --q;
    return Integer(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    std::int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) r += b.small_;
    return Integer(r);
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() && !(a.small_ == INT64_MIN && b.small_ == -1)) return Integer(a.small_ / b.small_);
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

bool divides(const Integer& d, const Integer& a) {
  if (d.is_zero()) return a.is_zero();
  if (a.is_small() && d.is_small() && d.small_ != -1) return a.small_ % d.small_ == 0;
  return mpz_divisible_p(a.to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small_ != INT64_MIN && b.small_ != INT64_MIN) {
    std::int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
    std::int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return {Integer(g), Integer(s), Integer(t)};
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(exact_div(a, gcd(a, b)) * b);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

}  // namespace glattice
