#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfforge/constructions.hpp"
#include "hopfforge/findim.hpp"
#include "hopfforge/presentation.hpp"

namespace hopfforge {

struct PresentationOptions {
  std::optional<Field> field;                     // overrides `field:`
  std::optional<std::size_t> degree_bound;        // overrides `degree_bound:`
  std::optional<std::size_t> default_degree_bound;  // used when neither is set
};

// Line-oriented presentation file:
//
//   field: Q                 (or F<p>)
//   generators: g x
//   relations:
//     g*g - 1
//   delta:
//     g -> g (#) g
//   counit:
//     g -> 1
//   antipode:                (optional section)
//     g -> g
//   degree_bound: 8          (optional)
//
// Lines starting with '#' are comments. A trailing `labeling:` section (as
// emitted for coproducts) is ignored. Errors carry line and column.
PresentationPtr parse_presentation(std::string_view text,
                                   const PresentationOptions& options = {});

// Canonical text; always includes the effective degree bound, so
// print(parse(print(P))) == print(P).
std::string print_presentation(const HopfPresentation& P);

// `labeling:` section listing q_l: x -> x@l, ...
std::string print_labeling(const Coproduct& coprod);

// Table file: `field:`, `dim:`, optional `basis:` labels, sparse `mul:` and
// `delta:` entries `i j k c`, dense `unit:` and `counit:` rows, optional
// `antipode:` as n matrix rows (column i is S(e_i)).
StructureTable parse_table(std::string_view text);
std::string print_table(const StructureTable& T);

std::string print_matrix(const Matrix& M);

// Map file: `source:` and `target:` references followed by one or more named
// sections of `generator -> image` lines.
struct MapEntry {
  std::string generator;
  std::string image;
  std::size_t line = 0;
  std::size_t column = 0;  // column of the image text
};

struct MapSection {
  std::string name;
  std::size_t line = 0;
  std::vector<MapEntry> entries;
};

struct MapFile {
  std::string source;
  std::string target;
  std::vector<MapSection> sections;

  const MapSection* find(const std::string& name) const;
};

MapFile parse_map_file(std::string_view text);

// Builds a map from one section; every source generator needs an entry.
HopfMap build_map(const MapSection& section, const PresentationPtr& source,
                  const PresentationPtr& target);

std::string print_map_section(const std::string& name, const HopfMap& phi);

}  // namespace hopfforge
