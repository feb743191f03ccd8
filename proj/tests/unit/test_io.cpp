#include <doctest.h>

#include "../support.hpp"
#include "hopfforge/errors.hpp"
#include "hopfforge/io.hpp"
#include "hopfforge/stdlib.hpp"

using namespace hopfforge;
using test_support::data_files;
using test_support::read_text;

TEST_CASE("minimal presentation parses and validates") {
  auto P = parse_presentation(
      "generators: x\ndelta:\n  x -> x (#) x\ncounit:\n  x -> 1\n");
  CHECK(P->field() == Field::rationals());
  CHECK(validate(*P).passed());
}

TEST_CASE("missing delta entry names the generator") {
  try {
    parse_presentation(
        "generators: g x\ndelta:\n  g -> g (#) g\ncounit:\n  g -> 1\n"
        "  x -> 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_presentation("generators: g\nrelations:\n  g*g - 1\n  g*y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 5);
  }
  try {
    parse_presentation("generators: g\nbogus:\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_presentation("field: F4\ngenerators: g\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: g\ndegree_bound: x\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_table("dim: 2\nmul:\n  0 0 5 1\n"), ParseError);
}

TEST_CASE("degree bound precedence") {
  std::string text =
      "generators: g\nrelations:\n  g*g - 1\ndelta:\n  g -> g (#) g\n"
      "counit:\n  g -> 1\n";
  CHECK(parse_presentation(text)->degree_bound() == 8);
  PresentationOptions env;
  env.default_degree_bound = 6;
  CHECK(parse_presentation(text, env)->degree_bound() == 6);
  CHECK(parse_presentation(text + "degree_bound: 5\n", env)->degree_bound()
        == 5);
  PresentationOptions flag = env;
  flag.degree_bound = 9;
  CHECK(parse_presentation(text + "degree_bound: 5\n", flag)->degree_bound()
        == 9);
}

TEST_CASE("field override") {
  PresentationOptions opts;
  opts.field = Field::prime(5);
  auto P = parse_presentation(read_text(test_support::data_dir() / "sweedler.hopf"),
                              opts);
  CHECK(P->field() == Field::prime(5));
  CHECK(validate(*P).passed());
}

TEST_CASE("presentations round-trip byte-exactly") {
  for (const auto& path : data_files(".hopf")) {
    CAPTURE(path.string());
    std::string text = read_text(path);
    auto P = parse_presentation(text);
    std::string printed = print_presentation(*P);
    CHECK(printed == text);
    auto again = parse_presentation(printed);
    CHECK(*again == *P);
    CHECK(print_presentation(*again) == printed);
  }
  for (const std::string& name : example_names()) {
    std::string printed = print_presentation(*example(name));
    CHECK(print_presentation(*parse_presentation(printed)) == printed);
  }
}

TEST_CASE("tables round-trip byte-exactly") {
  for (const auto& path : data_files(".table")) {
    CAPTURE(path.string());
    std::string text = read_text(path);
    StructureTable T = parse_table(text);
    CHECK(print_table(T) == text);
    CHECK(parse_table(print_table(T)) == T);
  }
}

TEST_CASE("map files") {
  MapFile m = parse_map_file(read_text(test_support::data_dir() / "z_times4.map"));
  CHECK(m.source == "z.hopf");
  CHECK(m.target == "z.hopf");
  REQUIRE(m.find("f"));
  CHECK(m.find("f")->entries.size() == 2);
  CHECK(m.find("h") == nullptr);
  CHECK_THROWS_AS(parse_map_file("f:\n  t -> t\n"), ParseError);
  CHECK_THROWS_AS(parse_map_file("source: a\ntarget: b\n  t -> t\n"),
                  ParseError);

  auto z = test_support::load("z.hopf");
  MapFile partial = parse_map_file("source: z\ntarget: z\nf:\n  t -> t\n");
  CHECK_THROWS_AS(build_map(partial.sections[0], z, z), ParseError);
}
