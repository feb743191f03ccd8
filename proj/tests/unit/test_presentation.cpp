#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "hopfforge/errors.hpp"
#include "hopfforge/stdlib.hpp"

using namespace hopfforge;
using test_support::load;
using test_support::poly;
using test_support::tensor;

namespace {

std::string statuses(const ValidationReport& r) {
  std::string out;
  for (const CheckResult& c : r.checks) {
    const char* s = c.status == CheckStatus::pass   ? "P"
                    : c.status == CheckStatus::fail ? "F"
                                                    : "S";
    out += c.name + "=" + s + " ";
  }
  return out;
}

std::string names(const std::vector<Word>& ws, const HopfPresentation& P) {
  std::string out;
  for (const Word& w : ws) {
    out += (out.empty() ? "" : " ") + word_to_string(w, *P.alphabet());
  }
  return out;
}

}  // namespace

TEST_CASE("validate: Sweedler passes everything") {
  auto P = load("sweedler.hopf");
  ValidationReport r = validate(*P);
  CHECK(statuses(r)
        == "relations=P coassociativity=P counit=P coideal=P hopf-ideal=P "
           "antipode=P ");
  CHECK(r.passed());
  CHECK(r.confluence == Confluence::full);
}

TEST_CASE("validate: grouplike-x skips antipode checks") {
  auto P = load("grouplike-x.hopf");
  ValidationReport r = validate(*P);
  CHECK(r.passed());
  CHECK(r.find("antipode")->status == CheckStatus::skipped);
  CHECK(r.find("hopf-ideal")->status == CheckStatus::skipped);
}

TEST_CASE("validate: broken counit fails the counit check") {
  auto P = load("broken-counit.hopf");
  ValidationReport r = validate(*P);
  CHECK_FALSE(r.passed());
  CHECK(r.find("counit")->status == CheckStatus::fail);
  CHECK(r.find("counit")->detail.find("x") != std::string::npos);
  CHECK(r.find("coassociativity")->status == CheckStatus::pass);
}

TEST_CASE("validate: failing coideal, hopf-ideal and antipode") {
  auto bad_eps = parse_presentation(
      "generators: g\nrelations:\n  g*g - 2\ndelta:\n  g -> g (#) g\n"
      "counit:\n  g -> 1\n");
  CHECK(validate(*bad_eps).find("coideal")->status == CheckStatus::fail);

  auto bad_s = parse_presentation(
      "generators: g x\nrelations:\n  g*g - 1\n  x*x\n  x*g + g*x\n"
      "delta:\n  g -> g (#) g\n  x -> x (#) 1 + g (#) x\n"
      "counit:\n  g -> 1\n  x -> 0\nantipode:\n  g -> g\n  x -> x\n");
  ValidationReport r = validate(*bad_s);
  CHECK(r.find("antipode")->status == CheckStatus::fail);
  CHECK(r.find("antipode")->detail.find("x") != std::string::npos);

  // S(g) = x*x sends g*g - 1 to a nonzero element.
  auto bad_ideal = parse_presentation(
      "generators: g x\nrelations:\n  g*g - 1\n"
      "delta:\n  g -> g (#) g\n  x -> x (#) x\n"
      "counit:\n  g -> 1\n  x -> 1\nantipode:\n  g -> x\n  x -> g\n");
  CHECK(validate(*bad_ideal).find("hopf-ideal")->status == CheckStatus::fail);
}

TEST_CASE("validate: degree bound too small") {
  auto P = load("sweedler.hopf", 3);
  try {
    validate(*P);
    FAIL("expected DegreeOverflow");
  } catch (const DegreeOverflow& e) {
    CHECK(e.required() == 4);
    CHECK(e.bound() == 3);
  }
}

TEST_CASE("delta_of, eps_of, s_of") {
  auto z2 = load("z2.hopf");
  CHECK(delta_of(*z2, poly(*z2, "g")) == tensor(*z2, "g (#) g"));
  CHECK(s_of(*z2, poly(*z2, "g")) == poly(*z2, "g"));

  auto h4 = load("sweedler.hopf");
  CHECK(s_of(*h4, poly(*h4, "x*g")) == poly(*h4, "-x"));
  CHECK(delta_of(*h4, poly(*h4, "x*x")).is_zero());
  for (const char* name : {"z2.hopf", "sweedler.hopf", "grouplike-x.hopf",
                           "primitive.hopf", "trivial.hopf"}) {
    auto P = load(name);
    CHECK(eps_of(*P, P->one()).is_one());
  }
  CHECK_THROWS_AS(s_of(*load("grouplike-x.hopf"), poly(*z2, "1")), Error);
}

TEST_CASE("antipode_axiom_check") {
  auto h4 = load("sweedler.hopf");
  CHECK(antipode_axiom_check(*h4, poly(*h4, "g")));
  CHECK(antipode_axiom_check(*h4, poly(*h4, "x")));
  CHECK(antipode_axiom_check(*h4, h4->one()));
  CHECK_THROWS_AS(antipode_axiom_check(*h4, poly(*h4, "g*x*g*x*g")),
                  DegreeOverflow);

  std::mt19937 rng(29);
  for (int i = 0; i < 30; ++i) {
    FreePoly h = h4->word(test_support::random_normal_word(rng, *h4, 2));
    FreePoly k = h4->word(test_support::random_normal_word(rng, *h4, 2));
    REQUIRE(antipode_axiom_check(*h4, h));
    REQUIRE(antipode_axiom_check(*h4, k));
    CHECK(antipode_axiom_check(*h4, h * k));
  }
}

TEST_CASE("structural properties on random elements") {
  std::mt19937 rng(31);
  for (const char* name : {"sweedler.hopf", "z3.hopf", "z.hopf",
                           "primitive.hopf"}) {
    auto P = load(name, 12);
    const auto& alpha = P->alphabet();
    for (int i = 0; i < 25; ++i) {
      FreePoly p = test_support::random_poly(rng, alpha, P->field(), 3);
      FreePoly q = test_support::random_poly(rng, alpha, P->field(), 3);
      CHECK(P->nf(s_of(*P, p * q)) == P->nf(s_of(*P, q) * s_of(*P, p)));
      CHECK(eps_of(*P, p * q) == eps_of(*P, p) * eps_of(*P, q));

      // Coassociativity and counit on p itself.
      TensorPoly d = delta_of(*P, p);
      Tensor3 left(alpha, P->field()), right(alpha, P->field());
      FreePoly via_left(alpha, P->field()), via_right(alpha, P->field());
      for (const auto& [key, c] : d.terms()) {
        for (const auto& [k2, c2] : delta_of(*P, P->word(key[0])).terms()) {
          left.add_term({k2[0], k2[1], key[1]}, c * c2);
        }
        for (const auto& [k2, c2] : delta_of(*P, P->word(key[1])).terms()) {
          right.add_term({key[0], k2[0], k2[1]}, c * c2);
        }
        via_left += P->word(key[1]) * (c * eps_of(*P, P->word(key[0])));
        via_right += P->word(key[0]) * (c * eps_of(*P, P->word(key[1])));
      }
      CHECK(P->nf(left) == P->nf(right));
      CHECK(via_left == P->nf(p));
      CHECK(via_right == P->nf(p));
    }
    // S is a coalgebra map into the coopposite on generators.
    for (GenId g = 0; g < alpha->size(); ++g) {
      FreePoly x = P->generator(g);
      TensorPoly rhs(alpha, P->field());
      for (const auto& [key, c] : delta_of(*P, x).terms()) {
        rhs += outer(s_of(*P, P->word(key[1])), s_of(*P, P->word(key[0]))) * c;
      }
      CHECK(delta_of(*P, s_of(*P, x)) == P->nf(rhs));
    }
  }
}

TEST_CASE("check_hopf_map") {
  auto z2 = load("z2.hopf");
  auto z3 = load("z3.hopf");
  auto h4 = load("sweedler.hopf");
  CHECK(check_hopf_map(HopfMap::identity(h4)));
  CHECK(check_hopf_map(HopfMap(z2, h4, {poly(*h4, "g"), poly(*h4, "g")})));
  MapCheck bad = check_hopf_map(HopfMap(z2, z3, {poly(*z3, "g"), poly(*z3, "g_inv")}));
  CHECK_FALSE(bad);
  CHECK(bad.failure.find("relation") != std::string::npos);
  // Preserves relations but not the counit.
  auto gx = load("grouplike-x.hopf");
  CHECK_FALSE(check_hopf_map(HopfMap(gx, gx, {poly(*gx, "0")})));
}

TEST_CASE("grouplikes") {
  auto z2 = load("z2.hopf");
  CHECK(names(grouplikes(*z2, 2), *z2) == "1 g");
  auto h4 = load("sweedler.hopf");
  CHECK(names(grouplikes(*h4, 3), *h4) == "1 g");
  auto z = load("z.hopf");
  CHECK(names(grouplikes(*z, 3), *z)
        == "1 t t_inv t*t t_inv*t_inv t*t*t t_inv*t_inv*t_inv");
  CHECK_THROWS_AS(grouplikes(*z2, 5), DegreeOverflow);
}

TEST_CASE("presentation construction errors") {
  CHECK_THROWS_AS(parse_presentation("generators: g\ndelta:\n  g -> g (#) g\n"),
                  Error);
  PresentationData d;
  d.alphabet = make_alphabet({"g"});
  d.field = Field::rationals();
  CHECK_THROWS_AS(make_presentation(d), PreconditionFailed);
}

TEST_CASE("default degree bound") {
  CHECK(load("z2.hopf")->degree_bound() == 8);
  CHECK(load("z3.hopf")->degree_bound() == 10);
  auto a = make_alphabet({"g"});
  std::vector<FreePoly> rels = {parse_poly("g^3 - 1", a, Field::rationals())};
  CHECK(HopfPresentation::default_degree_bound(rels) == 10);
}
