#include "hopfforge/word.hpp"

#include <algorithm>
#include <cctype>

#include "hopfforge/errors.hpp"

namespace hopfforge {

Word concat(const Word& lhs, const Word& rhs) {
  Word out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

bool occurs_at(const Word& hay, const Word& needle, std::size_t pos) {
  if (pos + needle.size() > hay.size()) {
    return false;
  }
  return std::equal(needle.begin(), needle.end(), hay.begin() + pos);
}

bool Alphabet::is_valid_name(std::string_view name) {
  if (name.empty()) {
    return false;
  }
  auto c0 = static_cast<unsigned char>(name[0]);
  if (!std::isalpha(c0) && c0 != '_') {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '@' || c == '\'';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_name(names_[i])) {
      throw PreconditionFailed("invalid generator name '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], static_cast<GenId>(i)).second) {
      throw PreconditionFailed("duplicate generator '" + names_[i] + "'");
    }
  }
}

std::optional<GenId> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

bool same_alphabet(const AlphabetPtr& lhs, const AlphabetPtr& rhs) {
  return lhs == rhs || (lhs && rhs && *lhs == *rhs);
}

std::string word_to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += '*';
    }
    out += alphabet.name(w[i]);
  }
  return out;
}

}  // namespace hopfforge
