#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hopfforge {

using GenId = std::uint32_t;

// A monomial of the free algebra: a sequence of generator indices. The empty
// word is the unit.
using Word = std::vector<GenId>;

// Degree-lexicographic order: shorter words first, then lexicographic by the
// declared generator order.
struct DegLex {
  bool operator()(const Word& lhs, const Word& rhs) const {
    if (lhs.size() != rhs.size()) {
      return lhs.size() < rhs.size();
    }
    return lhs < rhs;
  }
};

Word concat(const Word& lhs, const Word& rhs);

// True when `needle` occurs in `hay` starting at `pos`.
bool occurs_at(const Word& hay, const Word& needle, std::size_t pos);

// An ordered, duplicate-free list of generator names.
class Alphabet {
 public:
  Alphabet() = default;
  // Throws PreconditionFailed on duplicate or malformed names.
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(GenId id) const { return names_.at(id); }
  std::optional<GenId> find(std::string_view name) const;

  friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
    return lhs.names_ == rhs.names_;
  }

  // Generator names are identifiers: a letter or '_' followed by letters,
  // digits, '_', '@' or '\''.
  static bool is_valid_name(std::string_view name);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, GenId> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

// Same alphabet by content (pointer equality is a fast path).
bool same_alphabet(const AlphabetPtr& lhs, const AlphabetPtr& rhs);

// "g*x*g", or "1" for the empty word.
std::string word_to_string(const Word& w, const Alphabet& alphabet);

}  // namespace hopfforge
