#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hopfforge/free_poly.hpp"
#include "hopfforge/tensor.hpp"

namespace hopfforge {

// lead -> tail, where every word of tail is smaller than lead.
struct Rule {
  Word lead;
  FreePoly tail;
};

enum class Confluence {
  full,          // every overlap ambiguity resolves; normal forms are exact
  up_to_degree,  // overlaps longer than the degree bound were not examined
};

struct IdealMembership {
  bool contained = false;
  Confluence status = Confluence::full;

  // A negative answer is only definitive for a fully confluent system.
  bool definitive() const {
    return contained || status == Confluence::full;
  }
};

// A word on which two rules overlap (or one rule overlaps itself).
struct Ambiguity {
  Word word;
  std::size_t first_rule = 0;   // matches word at position 0
  std::size_t second_rule = 0;  // matches at second_pos, ending at the end
  std::size_t second_pos = 0;
};

// A noncommutative Groebner basis of a two-sided ideal of k<X>, completed up
// to a degree bound D under degree-lex order. Rules are monic, inter-reduced
// and sorted by leading word.
class RewriteSystem {
 public:
  RewriteSystem() = default;

  // Throws PreconditionFailed on a zero relation and DegreeOverflow when a
  // relation is longer than `degree_bound`.
  static RewriteSystem complete(AlphabetPtr alphabet, Field field,
                                std::span<const FreePoly> relations,
                                std::size_t degree_bound);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  Field field() const noexcept { return field_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t degree_bound() const noexcept { return bound_; }
  Confluence status() const noexcept { return status_; }
  bool fully_confluent() const noexcept { return status_ == Confluence::full; }

  // Rewrites leftmost occurrences (lowest rule index on ties) until no rule
  // applies. Throws DegreeOverflow when deg(p) > D.
  FreePoly normal_form(const FreePoly& p) const;
  // Normal form of every slot; zero iff t lies in I(x)T + T(x)I.
  TensorPoly tensor_normal_form(const TensorPoly& t) const;
  Tensor3 tensor_normal_form(const Tensor3& t) const;

  bool is_reducible(const Word& w) const;

  // Irreducible words of length <= d in degree-lex order. Requires d <= D.
  std::vector<Word> basis_up_to_degree(std::size_t d) const;

  IdealMembership ideal_contains(const FreePoly& p) const;

  // All overlaps between rule leading words with ambiguity length <= D.
  std::vector<Ambiguity> ambiguities() const;

  // One `lead => tail` line per rule, then `confluent: full` or
  // `confluent: up-to-degree D`.
  std::string dump() const;

  friend bool operator==(const RewriteSystem& lhs, const RewriteSystem& rhs);

 private:
  struct Match {
    std::size_t pos;
    std::size_t rule;
  };

  bool find_match(const Word& w, Match& m) const;
  FreePoly reduce_unchecked(const FreePoly& p) const;
  void reindex();

  AlphabetPtr alphabet_;
  Field field_;
  std::vector<Rule> rules_;
  std::size_t bound_ = 0;
  Confluence status_ = Confluence::full;
  // Rule indices grouped by the first letter of their leading word.
  std::vector<std::vector<std::size_t>> by_first_;
};

}  // namespace hopfforge
