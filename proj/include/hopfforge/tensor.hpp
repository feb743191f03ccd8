#pragma once

#include <array>
#include <cstddef>
#include <map>

#include "hopfforge/errors.hpp"
#include "hopfforge/free_poly.hpp"

namespace hopfforge {

// Lexicographic comparison of word tuples, each slot by DegLex.
template <std::size_t N>
struct TupleDegLex {
  bool operator()(const std::array<Word, N>& lhs,
                  const std::array<Word, N>& rhs) const {
    DegLex less;
    for (std::size_t i = 0; i < N; ++i) {
      if (less(lhs[i], rhs[i])) {
        return true;
      }
      if (less(rhs[i], lhs[i])) {
        return false;
      }
    }
    return false;
  }
};

// An element of the N-fold tensor power of k<X>: a finite map from word
// tuples to nonzero scalars.
template <std::size_t N>
class Tensor {
  static_assert(N >= 2);

 public:
  using Key = std::array<Word, N>;
  using Terms = std::map<Key, Scalar, TupleDegLex<N>>;

  Tensor() = default;
  Tensor(AlphabetPtr alphabet, Field field)
      : alphabet_(std::move(alphabet)), field_(field) {}

  // The unit 1 (x) ... (x) 1.
  static Tensor unit(AlphabetPtr alphabet, Field field) {
    Tensor t(std::move(alphabet), field);
    t.add_term(Key{}, Scalar(field, 1));
    return t;
  }

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  Field field() const noexcept { return field_; }
  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && noexcept { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Longest word appearing in any slot.
  std::size_t max_slot_degree() const {
    std::size_t d = 0;
    for (const auto& [key, c] : terms_) {
      for (const auto& w : key) {
        d = std::max(d, w.size());
      }
    }
    return d;
  }

  // Largest total length |w_1| + ... + |w_N| of a term.
  std::size_t total_degree() const {
    std::size_t d = 0;
    for (const auto& [key, c] : terms_) {
      std::size_t s = 0;
      for (const auto& w : key) {
        s += w.size();
      }
      d = std::max(d, s);
    }
    return d;
  }

  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(field_, 0) : it->second;
  }

  void add_term(const Key& key, const Scalar& c) {
    if (c.is_zero()) {
      return;
    }
    if (c.field() != field_) {
      throw FieldMismatch("field mismatch: " + field_.name() + " vs "
                          + c.field().name());
    }
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  void check_compatible(const Tensor& rhs) const {
    if (!same_alphabet(alphabet_, rhs.alphabet_)) {
      throw AlphabetMismatch("tensors over different alphabets");
    }
    if (field_ != rhs.field_) {
      throw FieldMismatch("field mismatch: " + field_.name() + " vs "
                          + rhs.field_.name());
    }
  }

  Tensor& operator+=(const Tensor& rhs) {
    check_compatible(rhs);
    for (const auto& [key, c] : rhs.terms_) {
      add_term(key, c);
    }
    return *this;
  }

  Tensor& operator-=(const Tensor& rhs) {
    check_compatible(rhs);
    for (const auto& [key, c] : rhs.terms_) {
      add_term(key, -c);
    }
    return *this;
  }

  Tensor& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, coeff] : terms_) {
      coeff *= c;
    }
    return *this;
  }

  friend Tensor operator+(Tensor lhs, const Tensor& rhs) { return lhs += rhs; }
  friend Tensor operator-(Tensor lhs, const Tensor& rhs) { return lhs -= rhs; }
  friend Tensor operator*(Tensor t, const Scalar& c) { return t *= c; }
  friend Tensor operator*(const Scalar& c, Tensor t) { return t *= c; }

  // Componentwise product: (a (x) b)(c (x) d) = ac (x) bd, bilinearly.
  friend Tensor operator*(const Tensor& lhs, const Tensor& rhs) {
    lhs.check_compatible(rhs);
    Tensor out(lhs.alphabet_, lhs.field_);
    for (const auto& [k1, a] : lhs.terms_) {
      for (const auto& [k2, b] : rhs.terms_) {
        Key key;
        for (std::size_t i = 0; i < N; ++i) {
          key[i] = concat(k1[i], k2[i]);
        }
        out.add_term(key, a * b);
      }
    }
    return out;
  }

  friend bool operator==(const Tensor& lhs, const Tensor& rhs) {
    return lhs.field_ == rhs.field_
           && same_alphabet(lhs.alphabet_, rhs.alphabet_)
           && lhs.terms_ == rhs.terms_;
  }

 private:
  AlphabetPtr alphabet_;
  Field field_;
  Terms terms_;
};

using TensorPoly = Tensor<2>;
using Tensor3 = Tensor<3>;

inline TensorPoly tensor_mul(const TensorPoly& s, const TensorPoly& t) {
  return s * t;
}

// p (x) q.
TensorPoly outer(const FreePoly& p, const FreePoly& q);

// The flip a (x) b -> b (x) a.
TensorPoly swap(const TensorPoly& t);

}  // namespace hopfforge
