#include "hopfforge/scalar.hpp"

#include <cctype>

#include "hopfforge/errors.hpp"

namespace hopfforge {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

mpz_class to_mpz(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw PreconditionFailed("field characteristic " + std::to_string(p)
                             + " is not prime");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Field parse_field(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      t.push_back(c);
    }
  }
  if (t == "Q") {
    return Field::rationals();
  }
  std::string digits;
  if (t.rfind("Fp:", 0) == 0) {
    digits = t.substr(3);
  } else if (t.rfind("Fp", 0) == 0) {
    digits = t.substr(2);
  } else if (t.rfind('F', 0) == 0) {
    digits = t.substr(1);
  }
  if (digits.empty() || digits.size() > 18) {
    throw PreconditionFailed("unknown field '" + text
                             + "' (expected Q or F<prime>)");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw PreconditionFailed("unknown field '" + text
                               + "' (expected Q or F<prime>)");
    }
  }
  return Field::prime(std::stoull(digits));
}

Scalar::Scalar(Field field, long value) : value_(value), field_(field) {
  reduce();
}

Scalar Scalar::fraction(Field field, const mpz_class& num,
                        const mpz_class& den) {
  Scalar out;
  out.field_ = field;
  if (field.is_rational()) {
    if (den == 0) {
      throw PreconditionFailed("zero denominator");
    }
    out.value_ = mpq_class(num, den);
    out.value_.canonicalize();
    return out;
  }
  mpz_class p = to_mpz(field.characteristic());
  mpz_class d = den % p;
  if (d < 0) {
    d += p;
  }
  mpz_class inv;
  if (d == 0 || mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw PreconditionFailed("denominator " + den.get_str()
                             + " vanishes in " + field.name());
  }
  mpz_class v = (num * inv) % p;
  if (v < 0) {
    v += p;
  }
  out.value_ = mpq_class(v);
  return out;
}

void Scalar::reduce() {
  if (field_.is_rational()) {
    value_.canonicalize();
    return;
  }
  // value_ is always integral in F_p mode.
  mpz_class p = to_mpz(field_.characteristic());
  mpz_class v = value_.get_num() % p;
  if (v < 0) {
    v += p;
  }
  value_ = mpq_class(v);
}

bool Scalar::is_minus_one() const {
  if (field_.is_rational()) {
    return value_ == -1;
  }
  return value_ + 1 == mpq_class(to_mpz(field_.characteristic()));
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw FieldMismatch("field mismatch: " + field_.name() + " vs "
                        + rhs.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) {
    throw PreconditionFailed("division by zero");
  }
  if (field_.is_rational()) {
    Scalar out = *this;
    out.value_ = 1 / value_;
    out.value_.canonicalize();
    return out;
  }
  return fraction(field_, 1, value_.get_num());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ += rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ -= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ *= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.value_ = -value_;
  out.reduce();
  return out;
}

std::string Scalar::to_string() const {
  return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace hopfforge
