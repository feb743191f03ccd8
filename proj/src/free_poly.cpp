#include "hopfforge/free_poly.hpp"

#include "hopfforge/errors.hpp"

namespace hopfforge {

FreePoly FreePoly::monomial(AlphabetPtr alphabet, Field field, Word w,
                            const Scalar& coeff) {
  FreePoly p(std::move(alphabet), field);
  p.add_term(std::move(w), coeff);
  return p;
}

FreePoly FreePoly::monomial(AlphabetPtr alphabet, Field field, Word w) {
  return monomial(std::move(alphabet), field, std::move(w), Scalar(field, 1));
}

FreePoly FreePoly::constant(AlphabetPtr alphabet, Field field, long c) {
  return monomial(std::move(alphabet), field, Word{}, Scalar(field, c));
}

FreePoly FreePoly::generator(AlphabetPtr alphabet, Field field, GenId g) {
  return monomial(std::move(alphabet), field, Word{g});
}

std::size_t FreePoly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

Scalar FreePoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? zero_scalar() : it->second;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
  add_term(Word(w), c);
}

void FreePoly::add_term(Word&& w, const Scalar& c) {
  if (c.is_zero()) {
    return;
  }
  if (c.field() != field_) {
    throw FieldMismatch("field mismatch: " + field_.name() + " vs "
                        + c.field().name());
  }
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

void FreePoly::check_compatible(const FreePoly& rhs) const {
  if (!same_alphabet(alphabet_, rhs.alphabet_)) {
    throw AlphabetMismatch("polynomials over different alphabets");
  }
  if (field_ != rhs.field_) {
    throw FieldMismatch("field mismatch: " + field_.name() + " vs "
                        + rhs.field_.name());
  }
}

FreePoly& FreePoly::operator+=(const FreePoly& rhs) {
  check_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) {
    add_term(w, c);
  }
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& rhs) {
  check_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) {
    add_term(w, -c);
  }
  return *this;
}

FreePoly& FreePoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) {
    coeff *= c;
  }
  return *this;
}

FreePoly FreePoly::operator-() const {
  FreePoly out = *this;
  for (auto& [w, c] : out.terms_) {
    c = -c;
  }
  return out;
}

FreePoly operator*(const FreePoly& lhs, const FreePoly& rhs) {
  lhs.check_compatible(rhs);
  FreePoly out(lhs.alphabet_, lhs.field_);
  for (const auto& [u, a] : lhs.terms_) {
    for (const auto& [v, b] : rhs.terms_) {
      out.add_term(concat(u, v), a * b);
    }
  }
  return out;
}

bool operator==(const FreePoly& lhs, const FreePoly& rhs) {
  return lhs.field_ == rhs.field_ && same_alphabet(lhs.alphabet_, rhs.alphabet_)
         && lhs.terms_ == rhs.terms_;
}

}  // namespace hopfforge
