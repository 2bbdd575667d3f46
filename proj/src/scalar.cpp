// SPDX-License-Identifier: Apache-2.0
#include "confalg/scalar.hpp"

#include <cctype>

#include "confalg/errors.hpp"

namespace confalg {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) : q_(num, den) {
  if (den == 0) throw InvalidArgument("Scalar: zero denominator");
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                          : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("expected rational \"p\" or \"p/q\", got \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvalidArgument("Scalar: division by zero");
  q_ /= o.q_;
  return *this;
}

Scalar Scalar::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return Scalar(mpq_class(n, d));
}

Scalar binomial(unsigned n, unsigned k) {
  if (k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(mpq_class(r));
}

}  // namespace confalg
