#include "hopfforge/rewrite.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hopfforge/errors.hpp"
#include "hopfforge/text.hpp"

namespace hopfforge {

namespace {

void add_into(FreePoly::Terms& terms, Word&& w, const Scalar& c) {
  auto [it, inserted] = terms.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms.erase(it);
    }
  }
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
              w.begin() + static_cast<std::ptrdiff_t>(to));
}

// Every proper overlap of `lhs` followed by `rhs`: suffix of lhs == prefix of
// rhs, neither word contained in the other.
template <typename Fn>
void for_each_overlap(const std::vector<Rule>& rules, Fn&& fn) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lead;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lead;
      std::size_t max_k = std::min(li.size(), lj.size());
      for (std::size_t k = 1; k < max_k; ++k) {
        if (std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(),
                       lj.begin())) {
          Ambiguity a;
          a.word = concat(li, slice(lj, k, lj.size()));
          a.first_rule = i;
          a.second_rule = j;
          a.second_pos = li.size() - k;
          fn(a);
        }
      }
    }
  }
}

}  // namespace

void RewriteSystem::reindex() {
  std::sort(rules_.begin(), rules_.end(), [](const Rule& a, const Rule& b) {
    return DegLex{}(a.lead, b.lead);
  });
  by_first_.assign(alphabet_ ? alphabet_->size() : 0, {});
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (!rules_[i].lead.empty()) {
      by_first_[rules_[i].lead.front()].push_back(i);
    }
  }
}

bool RewriteSystem::find_match(const Word& w, Match& m) const {
  // Rules are sorted, so an empty leading word can only be rule 0.
  if (!rules_.empty() && rules_.front().lead.empty()) {
    m = {0, 0};
    return true;
  }
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r : by_first_[w[pos]]) {
      if (occurs_at(w, rules_[r].lead, pos)) {
        m = {pos, r};
        return true;
      }
    }
  }
  return false;
}

bool RewriteSystem::is_reducible(const Word& w) const {
  Match m;
  return find_match(w, m);
}

FreePoly RewriteSystem::reduce_unchecked(const FreePoly& p) const {
  FreePoly::Terms work = p.terms();
  FreePoly result(alphabet_, field_);
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    Scalar c = it->second;
    work.erase(it);
    Match m;
    if (!find_match(w, m)) {
      result.add_term(std::move(w), c);
      continue;
    }
    const Rule& rule = rules_[m.rule];
    for (const auto& [tw, tc] : rule.tail.terms()) {
      Word replaced = slice(w, 0, m.pos);
      replaced.insert(replaced.end(), tw.begin(), tw.end());
      replaced.insert(replaced.end(), w.begin() + static_cast<std::ptrdiff_t>(m.pos + rule.lead.size()), w.end());
      add_into(work, std::move(replaced), c * tc);
    }
  }
  return result;
}

FreePoly RewriteSystem::normal_form(const FreePoly& p) const {
  if (!same_alphabet(p.alphabet(), alphabet_)) {
    throw AlphabetMismatch("polynomial is not over the rewrite system's alphabet");
  }
  if (p.field() != field_) {
    throw FieldMismatch("polynomial field differs from the rewrite system's");
  }
  if (p.degree() > bound_) {
    throw DegreeOverflow(p.degree(), bound_);
  }
  return reduce_unchecked(p);
}

namespace {

template <std::size_t N>
Tensor<N> tensor_nf(const RewriteSystem& sys, const Tensor<N>& t) {
  if (!same_alphabet(t.alphabet(), sys.alphabet())) {
    throw AlphabetMismatch("tensor is not over the rewrite system's alphabet");
  }
  if (t.max_slot_degree() > sys.degree_bound()) {
    throw DegreeOverflow(t.max_slot_degree(), sys.degree_bound());
  }
  std::map<Word, FreePoly, DegLex> cache;
  auto nf_word = [&](const Word& w) -> const FreePoly& {
    auto it = cache.find(w);
    if (it == cache.end()) {
      it = cache.emplace(w, sys.normal_form(FreePoly::monomial(
                                sys.alphabet(), sys.field(), w)))
               .first;
    }
    return it->second;
  };
  Tensor<N> out(t.alphabet(), t.field());
  for (const auto& [key, c] : t.terms()) {
    // Expand the product of the slot normal forms.
    std::vector<std::pair<typename Tensor<N>::Key, Scalar>> partial{
        {typename Tensor<N>::Key{}, c}};
    for (std::size_t i = 0; i < N; ++i) {
      const FreePoly& slot = nf_word(key[i]);
      std::vector<std::pair<typename Tensor<N>::Key, Scalar>> next;
      for (const auto& [k, a] : partial) {
        for (const auto& [w, b] : slot.terms()) {
          auto k2 = k;
          k2[i] = w;
          next.emplace_back(std::move(k2), a * b);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [k, a] : partial) {
      out.add_term(k, a);
    }
  }
  return out;
}

}  // namespace

TensorPoly RewriteSystem::tensor_normal_form(const TensorPoly& t) const {
  return tensor_nf(*this, t);
}

Tensor3 RewriteSystem::tensor_normal_form(const Tensor3& t) const {
  return tensor_nf(*this, t);
}

std::vector<Word> RewriteSystem::basis_up_to_degree(std::size_t d) const {
  if (d > bound_) {
    throw DegreeOverflow(d, bound_);
  }
  std::vector<Word> out;
  if (!rules_.empty() && rules_.front().lead.empty()) {
    return out;
  }
  std::vector<Word> level{Word{}};
  out.push_back(Word{});
  for (std::size_t len = 1; len <= d && !level.empty(); ++len) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (GenId g = 0; g < alphabet_->size(); ++g) {
        Word ext = w;
        ext.push_back(g);
        // w is irreducible, so only a rule ending at the new letter can match.
        bool reducible = false;
        for (const Rule& r : rules_) {
          if (r.lead.size() <= ext.size()
              && occurs_at(ext, r.lead, ext.size() - r.lead.size())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) {
          next.push_back(std::move(ext));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

IdealMembership RewriteSystem::ideal_contains(const FreePoly& p) const {
  return {normal_form(p).is_zero(), status_};
}

std::vector<Ambiguity> RewriteSystem::ambiguities() const {
  std::vector<Ambiguity> out;
  for_each_overlap(rules_, [&](const Ambiguity& a) {
    if (a.word.size() <= bound_) {
      out.push_back(a);
    }
  });
  return out;
}

RewriteSystem RewriteSystem::complete(AlphabetPtr alphabet, Field field,
                                      std::span<const FreePoly> relations,
                                      std::size_t degree_bound) {
  RewriteSystem sys;
  sys.alphabet_ = std::move(alphabet);
  sys.field_ = field;
  sys.bound_ = degree_bound;
  sys.reindex();

  for (const FreePoly& r : relations) {
    if (!same_alphabet(r.alphabet(), sys.alphabet_)) {
      throw AlphabetMismatch("relation is not over the declared alphabet");
    }
    if (r.field() != field) {
      throw FieldMismatch("relation field differs from the declared field");
    }
    if (r.is_zero()) {
      throw PreconditionFailed("zero relation supplied");
    }
    if (r.degree() > degree_bound) {
      throw DegreeOverflow(r.degree(), degree_bound);
    }
  }

  // Adds a nonzero polynomial that is irreducible under the current rules,
  // then restores inter-reducedness.
  auto insert = [&sys](const FreePoly& r) {
    std::vector<FreePoly> queue{r};
    while (!queue.empty()) {
      FreePoly p = sys.reduce_unchecked(queue.back());
      queue.pop_back();
      if (p.is_zero()) {
        continue;
      }
      Scalar inv = p.leading_coeff().inverse();
      Word lead = p.leading_word();
      FreePoly tail = -(p * inv);
      tail.add_term(lead, Scalar(sys.field_, 1));
      // Rules whose leading word contains the new one become polynomials
      // again and are re-inserted.
      std::vector<Rule> kept;
      for (Rule& old : sys.rules_) {
        bool contains = false;
        for (std::size_t pos = 0; pos + lead.size() <= old.lead.size(); ++pos) {
          if (occurs_at(old.lead, lead, pos)) {
            contains = true;
            break;
          }
        }
        if (contains) {
          FreePoly back = FreePoly::monomial(sys.alphabet_, sys.field_, old.lead);
          back -= old.tail;
          queue.push_back(std::move(back));
        } else {
          kept.push_back(std::move(old));
        }
      }
      kept.push_back({std::move(lead), std::move(tail)});
      sys.rules_ = std::move(kept);
      sys.reindex();
    }
    for (Rule& rule : sys.rules_) {
      rule.tail = sys.reduce_unchecked(rule.tail);
    }
  };

  std::vector<FreePoly> pending(relations.begin(), relations.end());
  while (!pending.empty()) {
    for (const FreePoly& p : pending) {
      FreePoly r = sys.reduce_unchecked(p);
      if (!r.is_zero()) {
        insert(r);
      }
    }
    pending.clear();
    for_each_overlap(sys.rules_, [&](const Ambiguity& a) {
      if (a.word.size() > sys.bound_) {
        return;
      }
      const Rule& first = sys.rules_[a.first_rule];
      const Rule& second = sys.rules_[a.second_rule];
      FreePoly suffix = FreePoly::monomial(
          sys.alphabet_, sys.field_,
          slice(a.word, first.lead.size(), a.word.size()));
      FreePoly prefix = FreePoly::monomial(sys.alphabet_, sys.field_,
                                           slice(a.word, 0, a.second_pos));
      FreePoly s = sys.reduce_unchecked(first.tail * suffix - prefix * second.tail);
      if (!s.is_zero()) {
        pending.push_back(std::move(s));
      }
    });
  }

  sys.status_ = Confluence::full;
  for_each_overlap(sys.rules_, [&](const Ambiguity& a) {
    if (a.word.size() > sys.bound_) {
      sys.status_ = Confluence::up_to_degree;
    }
  });
  return sys;
}

std::string RewriteSystem::dump() const {
  std::ostringstream os;
  for (const Rule& r : rules_) {
    os << word_to_string(r.lead, *alphabet_) << " => " << to_string(r.tail)
       << '\n';
  }
  if (fully_confluent()) {
    os << "confluent: full\n";
  } else {
    os << "confluent: up-to-degree " << bound_ << '\n';
  }
  return os.str();
}

bool operator==(const RewriteSystem& lhs, const RewriteSystem& rhs) {
  if (!same_alphabet(lhs.alphabet_, rhs.alphabet_) || lhs.field_ != rhs.field_
      || lhs.bound_ != rhs.bound_ || lhs.status_ != rhs.status_
      || lhs.rules_.size() != rhs.rules_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < lhs.rules_.size(); ++i) {
    if (lhs.rules_[i].lead != rhs.rules_[i].lead
        || !(lhs.rules_[i].tail == rhs.rules_[i].tail)) {
      return false;
    }
  }
  return true;
}

}  // namespace hopfforge
