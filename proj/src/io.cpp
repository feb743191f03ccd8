#include "hopfforge/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "hopfforge/errors.hpp"
#include "hopfforge/text.hpp"

namespace hopfforge {

namespace {

struct Line {
  std::size_t number;
  std::string text;    // without leading/trailing whitespace
  std::size_t column;  // 1-based column of text[0] in the file line
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++number;
    std::string_view raw = text.substr(start, end - start);
    std::size_t b = 0;
    while (b < raw.size() && std::isspace(static_cast<unsigned char>(raw[b]))) {
      ++b;
    }
    std::size_t e = raw.size();
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) {
      --e;
    }
    if (e > b && raw[b] != '#') {
      out.push_back({number, std::string(raw.substr(b, e - b)), b + 1});
    }
    start = end + 1;
  }
  return out;
}

struct Section {
  std::string name;
  Line header;
  std::string inline_value;
  std::size_t value_column = 0;
  std::vector<Line> items;
};

// Splits into header-led sections. Lines before the first header are errors.
std::vector<Section> split_sections(const std::vector<Line>& lines,
                                    const std::set<std::string>& headers,
                                    const std::string& stop_header = "") {
  std::vector<Section> out;
  for (const Line& line : lines) {
    std::size_t colon = line.text.find(':');
    if (colon != std::string::npos) {
      std::string name = line.text.substr(0, colon);
      if (headers.count(name)) {
        if (name == stop_header) {
          break;
        }
        std::size_t v = colon + 1;
        while (v < line.text.size()
               && std::isspace(static_cast<unsigned char>(line.text[v]))) {
          ++v;
        }
        out.push_back({name, line, line.text.substr(v), line.column + v, {}});
        continue;
      }
      if (line.column == 1 && Alphabet::is_valid_name(name)) {
        std::vector<std::string> expected;
        for (const auto& h : headers) {
          expected.push_back("'" + h + ":'");
        }
        throw ParseError("unknown section '" + name + "'", line.number,
                         line.column, expected);
      }
    }
    if (out.empty()) {
      std::vector<std::string> expected;
      for (const auto& h : headers) {
        expected.push_back("'" + h + ":'");
      }
      throw ParseError("content before the first section header",
                       line.number, line.column, expected);
    }
    out.back().items.push_back(line);
  }
  return out;
}

const Section* find_section(const std::vector<Section>& sections,
                            const std::string& name) {
  const Section* found = nullptr;
  for (const Section& s : sections) {
    if (s.name == name) {
      if (found) {
        throw ParseError("duplicate section '" + name + "'", s.header.number,
                         s.header.column);
      }
      found = &s;
    }
  }
  return found;
}

template <typename Fn>
auto relocate(const Line& line, std::size_t offset, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw e.at_line(line.number, line.column - 1 + offset);
  } catch (const DegreeOverflow&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), line.number, line.column + offset);
  }
}

struct Assignment {
  std::string lhs;
  std::string rhs;
  std::size_t rhs_offset;  // offset of rhs inside line.text
};

Assignment split_arrow(const Line& line) {
  std::size_t arrow = line.text.find("->");
  if (arrow == std::string::npos) {
    throw ParseError("missing '->'", line.number, line.column, {"'->'"});
  }
  std::string lhs = line.text.substr(0, arrow);
  while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) {
    lhs.pop_back();
  }
  std::size_t v = arrow + 2;
  while (v < line.text.size()
         && std::isspace(static_cast<unsigned char>(line.text[v]))) {
    ++v;
  }
  if (v == line.text.size()) {
    throw ParseError("missing right-hand side", line.number,
                     line.column + line.text.size(), {"expression"});
  }
  return {lhs, line.text.substr(v), v};
}

// Reads `gen -> value` entries into a per-generator table.
template <typename T, typename ParseFn>
std::vector<T> read_table(const Section& section, const Alphabet& alphabet,
                          ParseFn&& parse_value) {
  std::vector<std::optional<T>> slots(alphabet.size());
  for (const Line& line : section.items) {
    Assignment a = split_arrow(line);
    auto id = alphabet.find(a.lhs);
    if (!id) {
      throw ParseError("unknown generator '" + a.lhs + "'", line.number,
                       line.column, {"generator"});
    }
    if (slots[*id]) {
      throw ParseError("duplicate " + section.name + " entry for '" + a.lhs
                           + "'",
                       line.number, line.column);
    }
    slots[*id] = relocate(line, a.rhs_offset,
                          [&] { return parse_value(a.rhs); });
  }
  std::vector<T> out;
  for (GenId g = 0; g < alphabet.size(); ++g) {
    if (!slots[g]) {
      throw ParseError(section.name + " entry missing for generator '"
                           + alphabet.name(g) + "'",
                       section.header.number, section.header.column);
    }
    out.push_back(std::move(*slots[g]));
  }
  return out;
}

std::size_t parse_count(const Section& s) {
  const std::string& v = s.inline_value;
  if (v.empty() || v.size() > 9
      || !std::all_of(v.begin(), v.end(),
                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("expected a nonnegative integer", s.header.number,
                     s.value_column, {"integer"});
  }
  return std::stoul(v);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) {
    out.push_back(tok);
  }
  return out;
}

}  // namespace

PresentationPtr parse_presentation(std::string_view text,
                                   const PresentationOptions& options) {
  static const std::set<std::string> headers{
      "field", "generators", "relations", "delta", "counit",
      "antipode", "degree_bound", "labeling"};
  auto sections = split_sections(split_lines(text), headers, "labeling");

  Field field = Field::rationals();
  if (const Section* s = find_section(sections, "field")) {
    if (!s->items.empty()) {
      throw ParseError("unexpected content in field section",
                       s->items[0].number, s->items[0].column);
    }
    Line at{s->header.number, s->inline_value, s->value_column};
    field = relocate(at, 0, [&] { return parse_field(s->inline_value); });
  }
  if (options.field) {
    field = *options.field;
  }

  const Section* gens = find_section(sections, "generators");
  if (!gens) {
    throw ParseError("missing 'generators:' section", 1, 1, {"'generators:'"});
  }
  std::vector<std::string> names = split_ws(gens->inline_value);
  for (const Line& l : gens->items) {
    for (auto& n : split_ws(l.text)) {
      names.push_back(std::move(n));
    }
  }
  AlphabetPtr alphabet = relocate(
      Line{gens->header.number, gens->inline_value, gens->value_column}, 0,
      [&] { return make_alphabet(names); });

  PresentationData data;
  data.alphabet = alphabet;
  data.field = field;
  if (const Section* s = find_section(sections, "relations")) {
    if (!s->inline_value.empty()) {
      throw ParseError("relations go on their own lines", s->header.number,
                       s->value_column);
    }
    for (const Line& line : s->items) {
      FreePoly r = relocate(line, 0, [&] {
        return parse_poly(line.text, alphabet, field);
      });
      if (r.is_zero()) {
        throw ParseError("relation is zero", line.number, line.column);
      }
      data.relations.push_back(std::move(r));
    }
  }

  const Section* delta = find_section(sections, "delta");
  if (!delta) {
    throw ParseError("missing 'delta:' section", 1, 1, {"'delta:'"});
  }
  data.delta = read_table<TensorPoly>(*delta, *alphabet, [&](const std::string& v) {
    return parse_tensor(v, alphabet, field);
  });
  const Section* counit = find_section(sections, "counit");
  if (!counit) {
    throw ParseError("missing 'counit:' section", 1, 1, {"'counit:'"});
  }
  data.counit = read_table<Scalar>(*counit, *alphabet, [&](const std::string& v) {
    return parse_scalar(v, field);
  });
  if (const Section* s = find_section(sections, "antipode")) {
    data.antipode = read_table<FreePoly>(*s, *alphabet, [&](const std::string& v) {
      return parse_poly(v, alphabet, field);
    });
  }

  std::optional<std::size_t> bound = options.default_degree_bound;
  const Section* db = find_section(sections, "degree_bound");
  if (db) {
    bound = parse_count(*db);
  }
  if (options.degree_bound) {
    bound = options.degree_bound;
  }
  data.degree_bound = bound;

  return make_presentation(std::move(data));
}

std::string print_presentation(const HopfPresentation& P) {
  std::ostringstream os;
  const Alphabet& alpha = *P.alphabet();
  os << "field: " << P.field().name() << '\n';
  os << "generators:";
  for (const auto& n : alpha.names()) {
    os << ' ' << n;
  }
  os << '\n';
  os << "relations:\n";
  for (const FreePoly& r : P.relations()) {
    os << "  " << to_string(r) << '\n';
  }
  os << "delta:\n";
  for (GenId g = 0; g < alpha.size(); ++g) {
    os << "  " << alpha.name(g) << " -> " << to_string(P.delta_table()[g])
       << '\n';
  }
  os << "counit:\n";
  for (GenId g = 0; g < alpha.size(); ++g) {
    os << "  " << alpha.name(g) << " -> " << P.counit_table()[g] << '\n';
  }
  if (P.has_antipode()) {
    os << "antipode:\n";
    for (GenId g = 0; g < alpha.size(); ++g) {
      os << "  " << alpha.name(g) << " -> "
         << to_string((*P.antipode_table())[g]) << '\n';
    }
  }
  os << "degree_bound: " << P.degree_bound() << '\n';
  return os.str();
}

std::string print_labeling(const Coproduct& coprod) {
  std::ostringstream os;
  os << "labeling:\n";
  const Alphabet& target = *coprod.presentation->alphabet();
  for (std::size_t l = 0; l < coprod.labeling.injections.size(); ++l) {
    const Alphabet& source =
        *coprod.labeling.injections[l].source()->alphabet();
    os << "  q_" << (l + 1) << ":";
    const auto& renaming = coprod.labeling.renaming[l];
    for (GenId g = 0; g < renaming.size(); ++g) {
      os << (g == 0 ? " " : ", ") << source.name(g) << " -> "
         << target.name(renaming[g]);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<Scalar> parse_row(const Line& line, Field field, std::size_t n,
                              const std::string& what) {
  std::vector<std::string> toks = split_ws(line.text);
  if (toks.size() != n) {
    throw ParseError(what + " row needs " + std::to_string(n) + " entries, got "
                         + std::to_string(toks.size()),
                     line.number, line.column);
  }
  std::vector<Scalar> out;
  for (const auto& t : toks) {
    out.push_back(relocate(line, 0, [&] { return parse_scalar(t, field); }));
  }
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t n, const Line& line) {
  if (tok.empty() || tok.size() > 9
      || !std::all_of(tok.begin(), tok.end(),
                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("expected a basis index, got '" + tok + "'", line.number,
                     line.column, {"index"});
  }
  std::size_t i = std::stoul(tok);
  if (i >= n) {
    throw ParseError("basis index " + tok + " out of range", line.number,
                     line.column);
  }
  return i;
}

void read_sparse(const Section& s, StructureTable& T, bool is_delta) {
  for (const Line& line : s.items) {
    auto toks = split_ws(line.text);
    if (toks.size() != 4) {
      throw ParseError(s.name + " entries are 'i j k coefficient'", line.number,
                       line.column, {"i j k c"});
    }
    std::size_t i = parse_index(toks[0], T.dim, line);
    std::size_t j = parse_index(toks[1], T.dim, line);
    std::size_t k = parse_index(toks[2], T.dim, line);
    Scalar c = relocate(line, 0, [&] { return parse_scalar(toks[3], T.field); });
    (is_delta ? T.delta(i, j, k) : T.mul(i, j, k)) = c;
  }
}

const Section& require(const std::vector<Section>& sections,
                       const std::string& name) {
  const Section* s = find_section(sections, name);
  if (!s) {
    throw ParseError("missing '" + name + ":' section", 1, 1,
                     {"'" + name + ":'"});
  }
  return *s;
}

}  // namespace

StructureTable parse_table(std::string_view text) {
  static const std::set<std::string> headers{
      "field", "dim", "basis", "mul", "unit", "delta", "counit", "antipode"};
  auto sections = split_sections(split_lines(text), headers);
  Field field = Field::rationals();
  if (const Section* s = find_section(sections, "field")) {
    Line at{s->header.number, s->inline_value, s->value_column};
    field = relocate(at, 0, [&] { return parse_field(s->inline_value); });
  }
  std::size_t n = parse_count(require(sections, "dim"));
  StructureTable T(n, field);
  if (const Section* s = find_section(sections, "basis")) {
    T.basis = split_ws(s->inline_value);
    if (T.basis.size() != n) {
      throw ParseError("basis needs " + std::to_string(n) + " labels",
                       s->header.number, s->value_column);
    }
  }
  read_sparse(require(sections, "mul"), T, false);
  read_sparse(require(sections, "delta"), T, true);
  auto dense = [&](const std::string& name) {
    const Section& s = require(sections, name);
    if (!s.inline_value.empty()) {
      return parse_row(Line{s.header.number, s.inline_value, s.value_column},
                       field, n, name);
    }
    if (s.items.size() != 1) {
      throw ParseError(name + " needs exactly one row", s.header.number,
                       s.header.column);
    }
    return parse_row(s.items[0], field, n, name);
  };
  T.unit = dense("unit");
  T.counit = dense("counit");
  if (const Section* s = find_section(sections, "antipode")) {
    if (s->items.size() != n) {
      throw ParseError("antipode needs " + std::to_string(n) + " rows",
                       s->header.number, s->header.column);
    }
    Matrix S(n, n, field);
    for (std::size_t r = 0; r < n; ++r) {
      auto row = parse_row(s->items[r], field, n, "antipode");
      for (std::size_t c = 0; c < n; ++c) {
        S.at(r, c) = row[c];
      }
    }
    T.antipode = std::move(S);
  }
  return T;
}

std::string print_matrix(const Matrix& M) {
  std::ostringstream os;
  for (std::size_t r = 0; r < M.rows(); ++r) {
    os << ' ';
    for (std::size_t c = 0; c < M.cols(); ++c) {
      os << ' ' << M.at(r, c);
    }
    os << '\n';
  }
  return os.str();
}

std::string print_table(const StructureTable& T) {
  std::ostringstream os;
  const std::size_t n = T.dim;
  os << "field: " << T.field.name() << '\n';
  os << "dim: " << n << '\n';
  if (!T.basis.empty()) {
    os << "basis:";
    for (const auto& b : T.basis) {
      os << ' ' << b;
    }
    os << '\n';
  }
  auto sparse = [&](const char* name, bool is_delta) {
    os << name << ":\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& c = is_delta ? T.delta(i, j, k) : T.mul(i, j, k);
          if (!c.is_zero()) {
            os << "  " << i << ' ' << j << ' ' << k << ' ' << c << '\n';
          }
        }
      }
    }
  };
  auto dense = [&](const char* name, const std::vector<Scalar>& v) {
    os << name << ":\n ";
    for (const Scalar& c : v) {
      os << ' ' << c;
    }
    os << '\n';
  };
  sparse("mul", false);
  dense("unit", T.unit);
  sparse("delta", true);
  dense("counit", T.counit);
  if (T.antipode) {
    os << "antipode:\n" << print_matrix(*T.antipode);
  }
  return os.str();
}

const MapSection* MapFile::find(const std::string& name) const {
  for (const MapSection& s : sections) {
    if (s.name == name) {
      return &s;
    }
  }
  return nullptr;
}

MapFile parse_map_file(std::string_view text) {
  MapFile out;
  bool have_source = false;
  bool have_target = false;
  for (const Line& line : split_lines(text)) {
    std::size_t arrow = line.text.find("->");
    std::size_t colon = line.text.find(':');
    bool header = colon != std::string::npos
                  && (arrow == std::string::npos || colon < arrow);
    if (header) {
      std::string name = line.text.substr(0, colon);
      std::string value = line.text.substr(colon + 1);
      auto ws = split_ws(value);
      if (name == "source" || name == "target") {
        if (ws.size() != 1) {
          throw ParseError(name + " needs exactly one file reference",
                           line.number, line.column + colon + 1, {"path"});
        }
        (name == "source" ? out.source : out.target) = ws[0];
        (name == "source" ? have_source : have_target) = true;
        continue;
      }
      if (!Alphabet::is_valid_name(name) || !ws.empty()) {
        throw ParseError("malformed section header", line.number, line.column,
                         {"'source:'", "'target:'", "'<name>:'"});
      }
      out.sections.push_back({name, line.number, {}});
      continue;
    }
    if (out.sections.empty()) {
      throw ParseError("map entry outside a named section", line.number,
                       line.column, {"'<name>:'"});
    }
    Assignment a = split_arrow(line);
    out.sections.back().entries.push_back(
        {a.lhs, a.rhs, line.number, line.column + a.rhs_offset});
  }
  if (!have_source) {
    throw ParseError("missing 'source:'", 1, 1, {"'source:'"});
  }
  if (!have_target) {
    throw ParseError("missing 'target:'", 1, 1, {"'target:'"});
  }
  return out;
}

HopfMap build_map(const MapSection& section, const PresentationPtr& source,
                  const PresentationPtr& target) {
  const Alphabet& alpha = *source->alphabet();
  std::vector<std::optional<FreePoly>> images(alpha.size());
  for (const MapEntry& e : section.entries) {
    auto id = alpha.find(e.generator);
    if (!id) {
      throw ParseError("unknown source generator '" + e.generator + "'",
                       e.line, 1, {"generator"});
    }
    if (images[*id]) {
      throw ParseError("duplicate image for '" + e.generator + "'", e.line, 1);
    }
    try {
      images[*id] = parse_poly(e.image, target->alphabet(), target->field());
    } catch (const ParseError& err) {
      throw err.at_line(e.line, e.column - 1);
    }
  }
  std::vector<FreePoly> out;
  for (GenId g = 0; g < alpha.size(); ++g) {
    if (!images[g]) {
      throw ParseError("map '" + section.name + "' has no image for generator '"
                           + alpha.name(g) + "'",
                       section.line, 1);
    }
    out.push_back(std::move(*images[g]));
  }
  return HopfMap(source, target, std::move(out));
}

std::string print_map_section(const std::string& name, const HopfMap& phi) {
  std::ostringstream os;
  os << name << ":\n";
  const Alphabet& alpha = *phi.source()->alphabet();
  for (GenId g = 0; g < alpha.size(); ++g) {
    os << "  " << alpha.name(g) << " -> " << to_string(phi.image(g)) << '\n';
  }
  return os.str();
}

}  // namespace hopfforge
