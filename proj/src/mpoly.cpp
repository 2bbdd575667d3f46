// SPDX-License-Identifier: Apache-2.0
#include "confalg/mpoly.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace confalg {

MPoly::MPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0, 0}, c);
}

MPoly MPoly::var(Var v) {
  Exponents e{0, 0, 0};
  e[static_cast<int>(v)] = 1;
  return monomial(e, Scalar(1));
}

MPoly MPoly::monomial(const Exponents& e, const Scalar& c) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

Scalar MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
  return d;
}

bool MPoly::only_uses(std::initializer_list<Var> allowed) const {
  for (int i = 0; i < 3; ++i) {
    Var v = static_cast<Var>(i);
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end() && uses(v)) return false;
  }
  return true;
}

void MPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) { return MPoly::sum_of_products({{&a, &b}}); }

namespace {

struct IntTerm {
  Exponents e;
  mpz_class num;
};

// Integer numerators of p over the common denominator den.
void integer_form(const MPoly& p, std::vector<IntTerm>& out, mpz_class& den) {
  den = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
  out.clear();
  for (const auto& [e, c] : p.terms()) {
    IntTerm t{e, mpz_class()};
    mpz_divexact(t.num.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
    t.num *= c.raw().get_num();
    out.push_back(std::move(t));
  }
}

}  // namespace

MPoly MPoly::sum_of_products(const std::vector<Product>& products) {
  std::array<std::size_t, 3> extent{1, 1, 1};
  for (const auto& [a, b] : products) {
    if (a->is_zero() || b->is_zero()) continue;
    for (int v = 0; v < 3; ++v)
      extent[v] = std::max<std::size_t>(extent[v], a->degree(Var(v)) + b->degree(Var(v)) + 1);
  }
  const std::size_t size = extent[0] * extent[1] * extent[2];
  // index(e) is increasing in the lexicographic order of exponent arrays.
  auto index = [&](const Exponents& e) { return (e[0] * extent[1] + e[1]) * extent[2] + e[2]; };

  // Σ (A_k/a_k)(B_k/b_k) = (Σ A_k B_k · L/(a_k b_k)) / L with L = lcm(a_k b_k).
  thread_local std::vector<std::vector<IntTerm>> lhs, rhs;
  thread_local std::vector<mpz_class> scale;
  std::size_t count = 0;
  mpz_class common = 1;
  for (const auto& [a, b] : products) {
    if (a->is_zero() || b->is_zero()) continue;
    if (lhs.size() <= count) {
      lhs.resize(count + 1);
      rhs.resize(count + 1);
      scale.resize(count + 1);
    }
    mpz_class da, db;
    integer_form(*a, lhs[count], da);
    integer_form(*b, rhs[count], db);
    scale[count] = da * db;
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), scale[count].get_mpz_t());
    ++count;
  }

  thread_local std::vector<mpz_class> acc;
  thread_local std::vector<char> used;
  thread_local std::vector<std::size_t> touched;
  thread_local mpz_class left;
  if (acc.size() < size) {
    acc.resize(size);
    used.resize(size, 0);
  }
  touched.clear();
  for (std::size_t k = 0; k < count; ++k) {
    mpz_divexact(scale[k].get_mpz_t(), common.get_mpz_t(), scale[k].get_mpz_t());
    for (const auto& ta : lhs[k]) {
      mpz_mul(left.get_mpz_t(), ta.num.get_mpz_t(), scale[k].get_mpz_t());
      for (const auto& tb : rhs[k]) {
        const std::size_t i = index({ta.e[0] + tb.e[0], ta.e[1] + tb.e[1], ta.e[2] + tb.e[2]});
        if (!used[i]) {
          used[i] = 1;
          touched.push_back(i);
          mpz_mul(acc[i].get_mpz_t(), left.get_mpz_t(), tb.num.get_mpz_t());
        } else {
          mpz_addmul(acc[i].get_mpz_t(), left.get_mpz_t(), tb.num.get_mpz_t());
        }
      }
    }
  }
  std::sort(touched.begin(), touched.end());
  MPoly r;
  for (std::size_t i : touched) {
    used[i] = 0;
    if (sgn(acc[i]) == 0) continue;
    mpq_class q(acc[i], common);
    q.canonicalize();
    const Exponents e{static_cast<unsigned>(i / (extent[1] * extent[2])),
                      static_cast<unsigned>(i / extent[2] % extent[1]), static_cast<unsigned>(i % extent[2])};
    r.terms_.emplace_hint(r.terms_.end(), e, Scalar(std::move(q)));
  }
  return r;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result(Scalar(1));
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::substitute(Var v, const MPoly& replacement) const {
  const int idx = static_cast<int>(v);
  std::vector<MPoly> powers{MPoly(Scalar(1))};
  MPoly r;
  for (const auto& [e, c] : terms_) {
    const unsigned k = e[idx];
    while (powers.size() <= k) powers.push_back(powers.back() * replacement);
    Exponents rest = e;
    rest[idx] = 0;
    r += monomial(rest, c) * powers[k];
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"∂", "λ", "μ"};
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool unit_monomial = e == Exponents{0, 0, 0};
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (unit_monomial || !mag.is_one()) out += mag.str();
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      out += names[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

}  // namespace confalg
