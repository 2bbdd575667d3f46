// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_SCALAR_HPP_
#define CONFALG_SCALAR_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace confalg {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q);

  /// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or q = 0.
  static Scalar parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  const mpq_class& raw() const { return q_; }

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  /// Throws InvalidArgument on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Scalar pow(unsigned exponent) const;

 private:
  mpq_class q_;
};

/// Binomial coefficient C(n, k) as a Scalar; zero when k > n.
Scalar binomial(unsigned n, unsigned k);

}  // namespace confalg

#endif  // CONFALG_SCALAR_HPP_
