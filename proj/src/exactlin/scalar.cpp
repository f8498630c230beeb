#include "bhh/exactlin/scalar.hpp"

namespace bhh {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class m = v % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 62)) throw Error("prime too large");
  return FieldSpec(p);
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar::Scalar(const FieldSpec& f, long value) : p_(f.characteristic()) {
  if (p_ == 0)
    q_ = value;
  else
    r_ = reduce(mpz_class(value), p_);
}

Scalar::Scalar(const FieldSpec& f, const mpz_class& num, const mpz_class& den) : p_(f.characteristic()) {
  if (den == 0) throw Error("zero denominator");
  if (p_ == 0) {
    q_ = mpq_class(num, den);
    q_.canonicalize();
  } else {
    std::uint64_t d = reduce(den, p_);
    if (d == 0) throw Error("denominator vanishes in " + f.name());
    r_ = mulmod(reduce(num, p_), powmod(d, p_ - 2, p_), p_);
  }
}

FieldSpec Scalar::field() const { return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime(p_); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = p_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = mulmod(r_, o.r_, p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = powmod(r_, p_ - 2, p_);
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check(b);
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

mpz_class Scalar::numerator() const { return p_ == 0 ? mpz_class(q_.get_num()) : mpz_class(static_cast<unsigned long>(r_)); }

mpz_class Scalar::denominator() const { return p_ == 0 ? mpz_class(q_.get_den()) : mpz_class(1); }

std::string Scalar::str() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

}  // namespace bhh
