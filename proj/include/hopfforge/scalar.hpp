#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace hopfforge {

// The ground field: the rationals (characteristic 0) or a prime field F_p.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field(); }
  // Throws PreconditionFailed unless p is prime.
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  // "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit constexpr Field(std::uint64_t p) : p_(p) {}

  std::uint64_t p_ = 0;
};

// Parses "Q", "F7", "Fp:7" or "Fp 7".
Field parse_field(const std::string& text);

// An exact field element. Rationals are kept in lowest terms with a positive
// denominator; F_p elements are integers in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  // num/den reduced into the field; den must be nonzero (in the field).
  static Scalar fraction(Field field, const mpz_class& num,
                         const mpz_class& den);

  Field field() const noexcept { return field_; }
  const mpq_class& value() const noexcept { return value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  // True for the rational -1 and for p-1 in F_p.
  bool is_minus_one() const;
  // Rationals only: sign of the value. F_p elements are never negative.
  bool is_negative() const { return field_.is_rational() && sgn(value_) < 0; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
  }

  // "-3/2", "5", "0".
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& rhs) const;
  void reduce();

  mpq_class value_ = 0;
  Field field_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfforge
