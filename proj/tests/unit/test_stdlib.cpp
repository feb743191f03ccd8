#include <doctest.h>

#include "hopfforge/errors.hpp"
#include "hopfforge/findim.hpp"
#include "hopfforge/stdlib.hpp"
#include "hopfforge/text.hpp"

using namespace hopfforge;

namespace {

std::string basis(const HopfPresentation& P, std::size_t d) {
  std::string out;
  for (const Word& w : P.rewrite().basis_up_to_degree(d)) {
    out += (out.empty() ? "" : " ") + word_to_string(w, *P.alphabet());
  }
  return out;
}

}  // namespace

TEST_CASE("group algebras") {
  auto z2 = cyclic_group_algebra(2);
  CHECK(basis(*z2, 3) == "1 g");
  CHECK(z2->nf(parse_poly("g_inv", z2->alphabet(), z2->field()))
        == parse_poly("g", z2->alphabet(), z2->field()));
  CHECK(validate(*z2).passed());

  auto z = laurent_algebra("t");
  CHECK(grouplikes(*z, 3).size() == 7);
  CHECK(validate(*z).passed());

  auto trivial = group_algebra({});
  CHECK(basis(*trivial, 4) == "1");
  CHECK(validate(*trivial).passed());

  // S_3 = <a, b | a^2, b^2, (ab)^3> has 6 elements.
  GroupPresentation s3{{"a", "b"},
                       {{{0, false}, {0, false}},
                        {{1, false}, {1, false}},
                        {{0, false}, {1, false}, {0, false},
                         {1, false}, {0, false}, {1, false}}}};
  auto ks3 = group_algebra(s3, Field::rationals(), 12);
  CHECK(validate(*ks3).passed());
  CHECK(ks3->rewrite().basis_up_to_degree(6).size() == 6);
  CHECK(grouplikes(*ks3, 6).size() == 6);

  GroupPresentation unreduced{{"a"}, {{{0, false}, {0, true}}}};
  CHECK_THROWS_AS(group_algebra(unreduced), PreconditionFailed);
  GroupPresentation empty_rel{{"a"}, {{}}};
  CHECK_THROWS_AS(group_algebra(empty_rel), PreconditionFailed);
}

TEST_CASE("monoid bialgebras") {
  auto x = monoid_bialgebra({"x"}, {});
  CHECK_FALSE(x->has_antipode());
  CHECK(validate(*x).passed());
  auto idem = monoid_bialgebra({"e"}, {{"e*e", "e"}});
  CHECK(basis(*idem, 3) == "1 e");
  CHECK(validate(*idem).passed());
  auto nxn = monoid_bialgebra({"x", "y"}, {{"y*x", "x*y"}});
  CHECK(nxn->rewrite().basis_up_to_degree(3).size() == 10);
  CHECK(validate(*nxn).passed());
}

TEST_CASE("Sweedler algebra") {
  auto h4 = sweedler_h4();
  CHECK(validate(*h4).passed());
  auto T = compile(*h4, 3);
  REQUIRE(T);
  CHECK(T->dim == 4);
  Matrix S = *solve_antipode(*T);
  Matrix I = Matrix::identity(4, Field::rationals());
  CHECK_FALSE(S.pow(2) == I);
  CHECK(S.pow(4) == I);

  auto f3 = sweedler_h4(Field::prime(3));
  CHECK(validate(*f3).passed());
  CHECK_THROWS_AS(sweedler_h4(Field::prime(2)), PreconditionFailed);
}

TEST_CASE("every Hopf example validates") {
  for (const std::string& name : example_names()) {
    CAPTURE(name);
    auto P = example(name);
    CHECK(validate(*P).passed());
  }
  CHECK_THROWS_AS(example("nope"), PreconditionFailed);
}

TEST_CASE("group-algebra grouplikes are the group elements") {
  auto z3 = cyclic_group_algebra(3, "g", Field::rationals(), 12);
  for (std::size_t d = 0; d <= 6; ++d) {
    // Elements of word length <= d in Z/3: 1, then all three.
    CHECK(grouplikes(*z3, d).size() == (d == 0 ? 1u : 3u));
  }
}
