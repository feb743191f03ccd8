#include "hopfforge/text.hpp"

#include <cctype>
#include <vector>

#include "hopfforge/errors.hpp"

namespace hopfforge {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, tensor, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end:
      return "end of input";
    case Tok::tensor:
      return "'(#)'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (s.substr(i, 3) == "(#)") {
      out.push_back({Tok::tensor, "(#)", col});
      i += 3;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        ++j;
      }
      if (j + 1 < s.size() && s[j] == '/'
          && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
      }
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < s.size()) {
        auto u = static_cast<unsigned char>(s[j]);
        if (!(std::isalnum(u) || s[j] == '_' || s[j] == '@' || s[j] == '\'')) {
          break;
        }
        ++j;
      }
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), col});
      i = j;
    } else {
      Tok kind;
      switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", 1,
                           col, {"number", "generator", "'+'", "'-'", "'('"});
      }
      out.push_back({kind, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::end, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const AlphabetPtr& alphabet, Field field)
      : tokens_(tokenize(text)), alphabet_(alphabet), field_(field) {}

  FreePoly parse_poly_to_end() {
    FreePoly p = poly();
    expect_end();
    return p;
  }

  TensorPoly parse_tensor_to_end() {
    TensorPoly out(alphabet_, field_);
    bool first = true;
    while (true) {
      bool negate = false;
      if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
        negate = next().kind == Tok::minus;
      } else if (!first) {
        break;
      }
      FreePoly left = term();
      if (peek().kind != Tok::tensor) {
        fail({"'(#)'"});
      }
      next();
      FreePoly right = term();
      TensorPoly t = outer(left, right);
      out += negate ? t * Scalar(field_, -1) : t;
      first = false;
    }
    expect_end();
    return out;
  }

  Scalar parse_scalar_to_end() {
    bool negate = false;
    if (peek().kind == Tok::minus || peek().kind == Tok::plus) {
      negate = next().kind == Tok::minus;
    }
    if (peek().kind != Tok::number) {
      fail({"number"});
    }
    Scalar s = number(next());
    expect_end();
    return negate ? -s : s;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError("unexpected " + describe(peek()), 1, peek().column,
                     std::move(expected));
  }

  void expect_end() {
    if (peek().kind != Tok::end) {
      fail({"'+'", "'-'", "end of input"});
    }
  }

  Scalar number(const Token& t) {
    auto slash = t.text.find('/');
    mpz_class num(t.text.substr(0, slash));
    mpz_class den = slash == std::string::npos
                        ? mpz_class(1)
                        : mpz_class(t.text.substr(slash + 1));
    try {
      return Scalar::fraction(field_, num, den);
    } catch (const Error& e) {
      throw ParseError(e.what(), 1, t.column);
    }
  }

  FreePoly poly() {
    FreePoly out(alphabet_, field_);
    bool negate = false;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      negate = next().kind == Tok::minus;
    }
    FreePoly t = term();
    out += negate ? -t : t;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = next().kind == Tok::minus;
      FreePoly u = term();
      out += minus ? -u : u;
    }
    return out;
  }

  bool starts_factor() const {
    Tok k = peek().kind;
    return k == Tok::number || k == Tok::ident || k == Tok::lparen;
  }

  FreePoly term() {
    FreePoly out = factor();
    while (true) {
      if (peek().kind == Tok::star) {
        next();
        out = out * factor();
      } else if (starts_factor()) {
        out = out * factor();
      } else {
        return out;
      }
    }
  }

  FreePoly factor() {
    FreePoly base = atom();
    if (peek().kind != Tok::caret) {
      return base;
    }
    next();
    if (peek().kind != Tok::number || peek().text.find('/') != std::string::npos) {
      fail({"nonnegative integer exponent"});
    }
    const Token& e = next();
    if (e.text.size() > 4) {
      throw ParseError("exponent too large", 1, e.column);
    }
    int n = std::stoi(e.text);
    FreePoly out = FreePoly::constant(alphabet_, field_, 1);
    for (int i = 0; i < n; ++i) {
      out = out * base;
    }
    return out;
  }

  FreePoly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        next();
        return FreePoly::monomial(alphabet_, field_, Word{}, number(t));
      }
      case Tok::ident: {
        next();
        auto id = alphabet_->find(t.text);
        if (!id) {
          throw ParseError("unknown generator '" + t.text + "'", 1, t.column);
        }
        return FreePoly::generator(alphabet_, field_, *id);
      }
      case Tok::lparen: {
        next();
        FreePoly inner = poly();
        if (peek().kind != Tok::rparen) {
          fail({"')'"});
        }
        next();
        return inner;
      }
      default:
        fail({"number", "generator", "'('"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const AlphabetPtr& alphabet_;
  Field field_;
};

// Coefficient and word of one term, without the joining sign. Returns whether
// the term is negative.
bool format_term(const Scalar& c, const std::string& word, bool word_is_unit,
                 std::string& out) {
  bool negative = c.is_negative();
  Scalar mag = negative ? -c : c;
  if (word_is_unit) {
    out += mag.to_string();
  } else if (mag.is_one()) {
    out += word;
  } else {
    out += mag.to_string() + "*" + word;
  }
  return negative;
}

void append_term(std::string& out, bool first, const Scalar& c,
                 const std::string& body_word, bool word_is_unit,
                 const std::string& suffix) {
  std::string body;
  bool negative = format_term(c, body_word, word_is_unit, body);
  if (first) {
    out += negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
  out += suffix;
}

}  // namespace

FreePoly parse_poly(std::string_view text, const AlphabetPtr& alphabet,
                    Field field) {
  return Parser(text, alphabet, field).parse_poly_to_end();
}

TensorPoly parse_tensor(std::string_view text, const AlphabetPtr& alphabet,
                        Field field) {
  return Parser(text, alphabet, field).parse_tensor_to_end();
}

Scalar parse_scalar(std::string_view text, Field field) {
  static const AlphabetPtr empty = make_alphabet({});
  return Parser(text, empty, field).parse_scalar_to_end();
}

std::string to_string(const FreePoly& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    append_term(out, first, c, word_to_string(w, *p.alphabet()), w.empty(), "");
    first = false;
  }
  return out;
}

namespace {

template <std::size_t N>
std::string tensor_to_string(const Tensor<N>& t) {
  if (t.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    const auto& [key, c] = *it;
    std::string rest;
    for (std::size_t i = 1; i < N; ++i) {
      rest += " (#) " + word_to_string(key[i], *t.alphabet());
    }
    append_term(out, first, c, word_to_string(key[0], *t.alphabet()),
                key[0].empty(), rest);
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const TensorPoly& t) { return tensor_to_string(t); }
std::string to_string(const Tensor3& t) { return tensor_to_string(t); }

}  // namespace hopfforge
