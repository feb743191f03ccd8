#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "hopfforge/scalar.hpp"
#include "hopfforge/word.hpp"

namespace hopfforge {

// An element of the free associative algebra k<X>: a finite map from words to
// nonzero scalars. Zero coefficients are never stored, so equality of the maps
// is equality of the polynomials.
class FreePoly {
 public:
  using Terms = std::map<Word, Scalar, DegLex>;

  FreePoly() = default;
  FreePoly(AlphabetPtr alphabet, Field field)
      : alphabet_(std::move(alphabet)), field_(field) {}

  static FreePoly monomial(AlphabetPtr alphabet, Field field, Word w,
                           const Scalar& coeff);
  static FreePoly monomial(AlphabetPtr alphabet, Field field, Word w);
  static FreePoly constant(AlphabetPtr alphabet, Field field, long c);
  static FreePoly generator(AlphabetPtr alphabet, Field field, GenId g);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  Field field() const noexcept { return field_; }
  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && noexcept { return std::move(terms_); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Length of the longest word; 0 for constants and for zero.
  std::size_t degree() const;
  // Largest word in degree-lex order. Requires !is_zero().
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const Scalar& leading_coeff() const { return terms_.rbegin()->second; }
  Scalar coeff(const Word& w) const;

  Scalar zero_scalar() const { return Scalar(field_, 0); }
  Scalar one_scalar() const { return Scalar(field_, 1); }

  void add_term(const Word& w, const Scalar& c);
  void add_term(Word&& w, const Scalar& c);

  FreePoly& operator+=(const FreePoly& rhs);
  FreePoly& operator-=(const FreePoly& rhs);
  FreePoly& operator*=(const Scalar& c);

  friend FreePoly operator+(FreePoly lhs, const FreePoly& rhs) {
    return lhs += rhs;
  }
  friend FreePoly operator-(FreePoly lhs, const FreePoly& rhs) {
    return lhs -= rhs;
  }
  friend FreePoly operator*(FreePoly p, const Scalar& c) { return p *= c; }
  friend FreePoly operator*(const Scalar& c, FreePoly p) { return p *= c; }
  FreePoly operator-() const;

  // Noncommutative product: concatenation on words, bilinear on sums.
  friend FreePoly operator*(const FreePoly& lhs, const FreePoly& rhs);

  friend bool operator==(const FreePoly& lhs, const FreePoly& rhs);

  // Throws AlphabetMismatch / FieldMismatch when the operands live in
  // different algebras.
  void check_compatible(const FreePoly& rhs) const;

 private:
  AlphabetPtr alphabet_;
  Field field_;
  Terms terms_;
};

// Spec-facing name for the product.
inline FreePoly poly_mul(const FreePoly& p, const FreePoly& q) { return p * q; }

}  // namespace hopfforge
