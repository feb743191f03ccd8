#include <doctest.h>

#include <random>

#include "../oracles/groups.hpp"
#include "../support.hpp"
#include "hopfforge/constructions.hpp"
#include "hopfforge/errors.hpp"
#include "hopfforge/stdlib.hpp"

using namespace hopfforge;
using test_support::load;
using test_support::poly;

namespace {

std::string words(const std::vector<Word>& ws, const HopfPresentation& P) {
  std::string out;
  for (const Word& w : ws) {
    out += (out.empty() ? "" : " ") + word_to_string(w, *P.alphabet());
  }
  return out;
}

HopfMap map_from(const PresentationPtr& src, const PresentationPtr& dst,
                 std::vector<std::string> images) {
  std::vector<FreePoly> polys;
  for (const auto& s : images) {
    polys.push_back(poly(*dst, s));
  }
  return HopfMap(src, dst, std::move(polys));
}

}  // namespace

TEST_CASE("coproduct of one factor is the factor") {
  auto h4 = load("sweedler.hopf");
  std::vector<PresentationPtr> one = {h4};
  Coproduct c = coproduct(one);
  CHECK(c.presentation->alphabet()->names() == h4->alphabet()->names());
  CHECK(c.presentation->relations() == h4->relations());
  CHECK(c.presentation->rewrite().rules().size() == h4->rewrite().rules().size());
  CHECK(c.presentation->degree_bound() == h4->degree_bound() + 2);
  CHECK(validate(*c.presentation).passed());
}

TEST_CASE("coproduct of two copies of Z/2") {
  auto a = cyclic_group_algebra(2, "a");
  auto b = cyclic_group_algebra(2, "b");
  std::vector<PresentationPtr> f = {a, b};
  Coproduct c = coproduct(f);
  const HopfPresentation& P = *c.presentation;
  CHECK(P.alphabet()->names()
        == std::vector<std::string>{"a", "a_inv", "b", "b_inv"});
  CHECK(validate(P).passed());
  CHECK(words(grouplikes(P, 3), P) == "1 a b a*b b*a a*b*a b*a*b");
  for (const HopfMap& q : c.labeling.injections) {
    CHECK(check_hopf_map(q));
  }
}

TEST_CASE("coproduct renames colliding generators") {
  auto z2 = load("z2.hopf");
  auto h4 = load("sweedler.hopf");
  std::vector<PresentationPtr> f = {h4, z2};
  Coproduct c = coproduct(f);
  CHECK(c.presentation->alphabet()->names()
        == std::vector<std::string>{"g@1", "x@1", "g@2", "g_inv@2"});
  ValidationReport r = validate(*c.presentation);
  CHECK(r.passed());
  for (GenId g = 0; g < 4; ++g) {
    CHECK(antipode_axiom_check(*c.presentation, c.presentation->generator(g)));
  }
  CHECK(c.labeling.renaming[0] == std::vector<GenId>{0, 1});
  CHECK(c.labeling.renaming[1] == std::vector<GenId>{2, 3});
  // S(x@1) by hand: -g@1*x@1.
  CHECK(s_of(*c.presentation, poly(*c.presentation, "x@1"))
        == poly(*c.presentation, "-g@1*x@1"));
}

TEST_CASE("coproduct errors and antipode presence") {
  auto q = load("z2.hopf");
  auto f3 = load("sweedler-f3.hopf");
  std::vector<PresentationPtr> mixed = {q, f3};
  CHECK_THROWS_AS(coproduct(mixed), FieldMismatch);
  auto gx = load("grouplike-x.hopf");
  std::vector<PresentationPtr> bialg = {q, gx};
  Coproduct c = coproduct(bialg);
  CHECK_FALSE(c.presentation->has_antipode());
  CHECK(validate(*c.presentation).passed());
}

TEST_CASE("coproduct is associative up to renaming") {
  auto z2 = load("z2.hopf");
  auto z3 = load("z3.hopf");
  auto h4 = load("sweedler.hopf");
  std::vector<PresentationPtr> left_in = {z2, z3};
  auto left = coproduct(left_in).presentation;
  std::vector<PresentationPtr> l2 = {left, h4};
  auto lhs = coproduct(l2, 8).presentation;
  std::vector<PresentationPtr> right_in = {z3, h4};
  auto right = coproduct(right_in).presentation;
  std::vector<PresentationPtr> r2 = {z2, right};
  auto rhs = coproduct(r2, 8).presentation;
  for (std::size_t d = 0; d <= 4; ++d) {
    auto bl = lhs->rewrite().basis_up_to_degree(d);
    auto br = rhs->rewrite().basis_up_to_degree(d);
    CHECK(bl.size() == br.size());
  }
  CHECK(validate(*lhs).passed() == validate(*rhs).passed());
}

TEST_CASE("free product grouplikes match the dihedral census") {
  auto z2 = load("z2.hopf");
  std::vector<PresentationPtr> f = {z2, z2};
  Coproduct c = coproduct(f, 10);
  auto census = oracle::dihedral_ball_sizes(5);
  for (std::size_t d = 0; d <= 5; ++d) {
    CHECK(grouplikes(*c.presentation, d).size() == census[d]);
  }
}

TEST_CASE("coequalizer of equal maps changes nothing") {
  auto z2 = load("z2.hopf");
  HopfMap id = HopfMap::identity(z2);
  Coequalizer q = coequalizer(id, id);
  CHECK(q.added_relations.empty());
  CHECK(q.quotient->rewrite().basis_up_to_degree(4)
        == z2->rewrite().basis_up_to_degree(4));
  CHECK(q.hopf_ideal());
}

TEST_CASE("coequalizer of t -> t^4 and the identity is Z/3") {
  auto z = load("z.hopf");
  HopfMap f = map_from(z, z, {"t^4", "t_inv^4"});
  HopfMap g = HopfMap::identity(z);
  Coequalizer q = coequalizer(f, g);
  std::size_t order = oracle::cyclic_coequalizer_order(4, 1);
  for (std::size_t d = 2; d <= q.quotient->degree_bound(); ++d) {
    CHECK(q.quotient->rewrite().basis_up_to_degree(d).size() == order);
  }
  CHECK(words(q.quotient->rewrite().basis_up_to_degree(3), *q.quotient)
        == "1 t t_inv");
  CHECK(q.hopf_ideal());
  CHECK(validate(*q.quotient).passed());
  for (GenId b = 0; b < 2; ++b) {
    FreePoly x = z->generator(b);
    CHECK(q.quotient->nf(q.projection(f(x)) - q.projection(g(x))).is_zero());
  }

  // The quotient ideal contains f(w) - g(w) for products, not only generators.
  std::mt19937 rng(37);
  for (int i = 0; i < 20; ++i) {
    FreePoly w = z->word(test_support::random_normal_word(rng, *z, 2));
    FreePoly diff = f(w) - g(w);
    CHECK(q.quotient->rewrite().ideal_contains(diff).contained);
  }
}

TEST_CASE("coequalizer of id and the trivial map is the base field") {
  auto z2 = load("z2.hopf");
  HopfMap f = HopfMap::identity(z2);
  HopfMap g = map_from(z2, z2, {"1", "1"});
  Coequalizer q = coequalizer(f, g);
  CHECK(q.quotient->rewrite().basis_up_to_degree(4).size() == 1);
  CHECK(q.hopf_ideal());
  CHECK(validate(*q.quotient).passed());
}

TEST_CASE("coequalizer preconditions") {
  auto z2 = load("z2.hopf");
  auto z3 = load("z3.hopf");
  auto h4 = load("sweedler.hopf");
  HopfMap a = HopfMap::identity(z2);
  HopfMap b = map_from(z2, h4, {"g", "g"});
  CHECK_THROWS_AS(coequalizer(a, b), PreconditionFailed);
  HopfMap bad = map_from(z2, z3, {"g", "g_inv"});
  HopfMap good = map_from(z2, z3, {"1", "1"});
  CHECK_THROWS_AS(coequalizer(bad, good), PreconditionFailed);
}

TEST_CASE("induced_from_coeq") {
  auto z = load("z.hopf");
  auto z3 = load("z3.hopf");
  HopfMap f = map_from(z, z, {"t^4", "t_inv^4"});
  Coequalizer q = coequalizer(f, HopfMap::identity(z));

  HopfMap self = induced_from_coeq(q.projection, q);
  for (GenId g = 0; g < 2; ++g) {
    CHECK(self.image(g) == q.quotient->generator(g));
  }

  HopfMap h = map_from(z, z3, {"g", "g_inv"});
  HopfMap hp = induced_from_coeq(h, q);
  CHECK(check_hopf_map(hp));
  std::mt19937 rng(41);
  for (int i = 0; i < 25; ++i) {
    FreePoly w = z->word(test_support::random_normal_word(rng, *z, 3));
    CHECK(hp(q.projection(w)) == h(w));
  }

  try {
    induced_from_coeq(HopfMap::identity(z), q);
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(std::string(e.what()).find("'t'") != std::string::npos);
  }
}

TEST_CASE("induced_from_cocone") {
  auto z2 = load("z2.hopf");
  std::vector<PresentationPtr> f = {z2, z2};
  Coproduct c = coproduct(f);

  // The structure maps themselves induce the identity of the quotient.
  HopfMap u = induced_from_cocone(c.labeling.injections, c);
  const HopfPresentation& P = *c.presentation;
  for (const Word& w : P.rewrite().basis_up_to_degree(4)) {
    CHECK(u(P.word(w)) == P.word(w));
  }

  std::vector<HopfMap> codiag = {HopfMap::identity(z2), HopfMap::identity(z2)};
  HopfMap v = induced_from_cocone(codiag, c);
  CHECK(check_hopf_map(v));
  CHECK(v(poly(P, "g@1")) == poly(*z2, "g"));
  CHECK(v(poly(P, "g@2")) == poly(*z2, "g"));

  // Any map agreeing on generators agrees on basis words.
  HopfMap w(c.presentation, z2, {poly(*z2, "g"), poly(*z2, "g_inv"),
                                 poly(*z2, "g"), poly(*z2, "g_inv")});
  for (const Word& word : P.rewrite().basis_up_to_degree(4)) {
    CHECK(w(P.word(word)) == v(P.word(word)));
  }

  auto z3 = load("z3.hopf");
  std::vector<HopfMap> broken = {map_from(z2, z3, {"g", "g_inv"}),
                                 map_from(z2, z3, {"1", "1"})};
  CHECK_THROWS_AS(induced_from_cocone(broken, c), PreconditionFailed);
  std::vector<HopfMap> mismatch = {HopfMap::identity(z2),
                                   map_from(z2, z3, {"1", "1"})};
  CHECK_THROWS_AS(induced_from_cocone(mismatch, c), PreconditionFailed);
}
