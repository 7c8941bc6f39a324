#include "symdisc/polynomial.hpp"

#include <utility>

namespace symdisc {

namespace {

// Shared formatting for both coefficient types.
template <typename Coeff>
std::string poly_to_string(const std::vector<Coeff>& c) {
  if (c.empty()) return "0";
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    const bool neg = c[i] < 0;
    Coeff a = neg ? Coeff(-c[i]) : c[i];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (a == 1);
    if (i == 0 || !unit) out += a.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "u";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : c_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
  return IntPolynomial({c});
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int k) {
  std::vector<mpz_class> v(static_cast<size_t>(k) + 1);
  v[static_cast<size_t>(k)] = c;
  return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

mpz_class IntPolynomial::leading_coeff() const {
  return c_.empty() ? mpz_class(0) : c_.back();
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

double IntPolynomial::evaluate(double x) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<mpz_class> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) {
    d[i - 1] = c_[i] * static_cast<long>(i);
  }
  return IntPolynomial(std::move(d));
}

RatPolynomial IntPolynomial::to_rational() const {
  std::vector<mpq_class> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  return RatPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<mpz_class> v(std::max(p.c_.size(), q.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
  return p + (-q);
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return IntPolynomial();
  std::vector<mpz_class> v(p.c_.size() + q.c_.size() - 1);
  for (size_t i = 0; i < p.c_.size(); ++i) {
    for (size_t j = 0; j < q.c_.size(); ++j) {
      v[i + j] += p.c_[i] * q.c_[j];
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const mpz_class& s, const IntPolynomial& p) {
  std::vector<mpz_class> v(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) v[i] = s * p.c_[i];
  return IntPolynomial(std::move(v));
}

bool operator==(const IntPolynomial& p, const IntPolynomial& q) {
  return p.c_ == q.c_;
}

bool operator!=(const IntPolynomial& p, const IntPolynomial& q) {
  return !(p == q);
}

std::string IntPolynomial::to_string() const { return poly_to_string(c_); }

RatPolynomial::RatPolynomial(std::vector<mpq_class> coeffs)
    : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void RatPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPolynomial RatPolynomial::constant(const mpq_class& c) {
  return RatPolynomial({c});
}

RatPolynomial RatPolynomial::monomial(const mpq_class& c, int k) {
  std::vector<mpq_class> v(static_cast<size_t>(k) + 1);
  v[static_cast<size_t>(k)] = c;
  return RatPolynomial(std::move(v));
}

mpq_class RatPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

mpq_class RatPolynomial::leading_coeff() const {
  return c_.empty() ? mpq_class(0) : c_.back();
}

bool RatPolynomial::is_monic() const {
  return !c_.empty() && c_.back() == 1;
}

mpq_class RatPolynomial::evaluate(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

double RatPolynomial::evaluate(double x) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
  return r;
}

RatPolynomial RatPolynomial::derivative() const {
  if (c_.size() <= 1) return RatPolynomial();
  std::vector<mpq_class> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) {
    d[i - 1] = c_[i] * static_cast<long>(i);
  }
  return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::operator-() const {
  std::vector<mpq_class> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return RatPolynomial(std::move(v));
}

RatPolynomial operator+(const RatPolynomial& p, const RatPolynomial& q) {
  std::vector<mpq_class> v(std::max(p.c_.size(), q.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
  }
  return RatPolynomial(std::move(v));
}

RatPolynomial operator-(const RatPolynomial& p, const RatPolynomial& q) {
  return p + (-q);
}

RatPolynomial operator*(const RatPolynomial& p, const RatPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return RatPolynomial();
  std::vector<mpq_class> v(p.c_.size() + q.c_.size() - 1);
  for (size_t i = 0; i < p.c_.size(); ++i) {
    for (size_t j = 0; j < q.c_.size(); ++j) {
      v[i + j] += p.c_[i] * q.c_[j];
    }
  }
  return RatPolynomial(std::move(v));
}

RatPolynomial operator*(const mpq_class& s, const RatPolynomial& p) {
  std::vector<mpq_class> v(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) v[i] = s * p.c_[i];
  return RatPolynomial(std::move(v));
}

bool operator==(const RatPolynomial& p, const RatPolynomial& q) {
  return p.c_ == q.c_;
}

bool operator!=(const RatPolynomial& p, const RatPolynomial& q) {
  return !(p == q);
}

std::string RatPolynomial::to_string() const { return poly_to_string(c_); }

}  // namespace symdisc
