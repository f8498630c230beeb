#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bhh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("scalars from different fields combined") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Thrown when a computation would exceed a configured size cap.
class ResourceCap : public Error {
 public:
  using Error::Error;
};

/// Ground field: the rationals, or Z/p for a prime p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const FieldSpec& f, long value);
  Scalar(const FieldSpec& f, const mpz_class& num, const mpz_class& den);

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

  FieldSpec field() const;
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Numerator/denominator of the canonical form (residue/1 for prime fields).
  mpz_class numerator() const;
  mpz_class denominator() const;

  std::string str() const;

 private:
  void check(const Scalar& o) const {
    if (p_ != o.p_) throw FieldMismatch();
  }

  std::uint64_t p_ = 0;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

/// (-1)^n as a scalar of the given field.
inline Scalar sign_scalar(const FieldSpec& f, long n) { return Scalar(f, (n % 2 == 0) ? 1 : -1); }

}  // namespace bhh
