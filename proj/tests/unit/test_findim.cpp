#include <doctest.h>

#include "../support.hpp"
#include "hopfforge/errors.hpp"
#include "hopfforge/findim.hpp"
#include "hopfforge/stdlib.hpp"

using namespace hopfforge;
using test_support::load;
using test_support::load_table;

namespace {

const Field Q = Field::rationals();

std::string statuses(const std::vector<CheckResult>& checks) {
  std::string out;
  for (const CheckResult& c : checks) {
    out += c.name + (c.status == CheckStatus::pass ? "=P " : "=F ");
  }
  return out;
}

// Direct check that S reverses products: S(e_i e_j) = S(e_j) S(e_i).
bool anti_multiplicative(const StructureTable& T, const Matrix& S) {
  std::size_t n = T.dim;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        Scalar lhs(T.field, 0), rhs(T.field, 0);
        for (std::size_t k = 0; k < n; ++k) {
          lhs += T.mul(i, j, k) * S.at(r, k);
        }
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            rhs += S.at(a, j) * S.at(b, i) * T.mul(a, b, r);
          }
        }
        if (!(lhs == rhs)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool closed(const StructureTable& T, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(T.dim, false);
  for (std::size_t i : subset) in[i] = true;
  for (std::size_t i : subset) {
    for (std::size_t k = 0; k < T.dim; ++k) {
      for (std::size_t j : subset) {
        if (!in[k] && !T.mul(i, j, k).is_zero()) return false;
      }
      for (std::size_t j = 0; j < T.dim; ++j) {
        if ((!in[j] || !in[k]) && !T.delta(i, j, k).is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("linear solver") {
  Matrix A(2, 2, Q);
  A.at(0, 0) = Scalar(Q, 2);
  A.at(0, 1) = Scalar(Q, 1);
  A.at(1, 0) = Scalar(Q, 1);
  A.at(1, 1) = Scalar(Q, 3);
  auto s = solve_linear_system(A, {Scalar(Q, 1), Scalar(Q, 2)});
  REQUIRE(s);
  CHECK(s->unique);
  CHECK(s->x[0] == Scalar::fraction(Q, 1, 5));
  CHECK(s->x[1] == Scalar::fraction(Q, 3, 5));

  Matrix B(2, 2, Q);
  B.at(0, 0) = Scalar(Q, 1);
  B.at(1, 0) = Scalar(Q, 2);
  CHECK_FALSE(solve_linear_system(B, {Scalar(Q, 1), Scalar(Q, 1)}));
  auto under = solve_linear_system(B, {Scalar(Q, 1), Scalar(Q, 2)});
  REQUIRE(under);
  CHECK_FALSE(under->unique);
  CHECK(under->rank == 1);

  Field F5 = Field::prime(5);
  Matrix C(1, 1, F5);
  C.at(0, 0) = Scalar(F5, 3);
  CHECK(solve_linear_system(C, {Scalar(F5, 1)})->x[0] == Scalar(F5, 2));
}

TEST_CASE("check_bialgebra_axioms") {
  CHECK(statuses(check_bialgebra_axioms(load_table("z2.table")))
        == "associativity=P unit=P coassociativity=P counit=P "
           "compatibility=P antipode=P ");
  CHECK(statuses(check_bialgebra_axioms(load_table("h4.table")))
        == "associativity=P unit=P coassociativity=P counit=P "
           "compatibility=P antipode=P ");
  auto broken = check_bialgebra_axioms(load_table("broken-compat.table"));
  CHECK(broken[4].name == "compatibility");
  CHECK(broken[4].status == CheckStatus::fail);
  CHECK(broken[4].detail.find("(1,1)") != std::string::npos);

  StructureTable bad = load_table("z2.table");
  bad.mul_data.pop_back();
  CHECK_THROWS_AS(check_bialgebra_axioms(bad), PreconditionFailed);
}

TEST_CASE("solve_antipode") {
  auto z2 = load_table("z2.table");
  CHECK(*solve_antipode(z2) == Matrix::identity(2, Q));

  auto h4 = load_table("h4.table");
  Matrix S = *solve_antipode(h4);
  CHECK(S == *h4.antipode);
  // Columns in basis 1 g x g*x. S(g*x) = S(x)S(g) = -g*x*g = x.
  CHECK(S.at(3, 2) == Scalar(Q, -1));
  CHECK(S.at(2, 3) == Scalar(Q, 1));
  CHECK_FALSE(S.pow(2) == Matrix::identity(4, Q));
  CHECK(S.pow(4) == Matrix::identity(4, Q));
  CHECK(satisfies_antipode_axiom(h4, S));
  CHECK(anti_multiplicative(h4, S));

  CHECK_FALSE(solve_antipode(load_table("idempotent.table")));
}

TEST_CASE("compile") {
  auto T = compile(*load("sweedler.hopf"), 3);
  REQUIRE(T);
  CHECK(T->dim == 4);
  CHECK(T->basis == std::vector<std::string>{"1", "g", "x", "g*x"});
  for (const CheckResult& c : check_bialgebra_axioms(*T)) {
    CHECK(c.status == CheckStatus::pass);
  }
  CHECK(*solve_antipode(*T) == *T->antipode);

  auto Z3 = compile(*load("z3.hopf"), 4);
  REQUIRE(Z3);
  CHECK(Z3->dim == 3);

  auto prim = load("primitive.hopf", 12);
  for (std::size_t d = 0; d <= 6; ++d) {
    CHECK_FALSE(compile(*prim, d));
  }
  CHECK_THROWS_AS(compile(*load("z3.hopf"), 10), DegreeOverflow);
}

TEST_CASE("compiled antipodes agree with presented ones") {
  for (const char* name : {"sweedler.hopf", "z2.hopf", "z3.hopf",
                           "trivial.hopf", "sweedler-f3.hopf"}) {
    CAPTURE(name);
    auto P = load(name);
    auto T = compile(*P, 3);
    REQUIRE(T);
    auto S = solve_antipode(*T);
    REQUIRE(S);
    CHECK(*S == *T->antipode);
    CHECK(anti_multiplicative(*T, *S));
  }
}

TEST_CASE("coreflection_probe") {
  auto idem = load_table("idempotent.table");
  auto p = coreflection_probe(idem);
  REQUIRE(p);
  CHECK(p->subset == std::vector<std::size_t>{0});

  auto h4 = load_table("h4.table");
  auto full = coreflection_probe(h4);
  REQUIRE(full);
  CHECK(full->subset == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(full->antipode == *solve_antipode(h4));

  auto z2 = load_table("z2.table");
  CHECK(coreflection_probe(z2)->subset.size() == 2);
  CHECK_THROWS_AS(coreflection_probe(h4, 3), PreconditionFailed);

  // k{1, e} (x) k[Z/2]: the largest Hopf coordinate piece is k[Z/2].
  auto mixed = parse_presentation(
      "generators: e g\nrelations:\n  e*e - e\n  g*g - 1\n  g*e - e*g\n"
      "delta:\n  e -> e (#) e\n  g -> g (#) g\ncounit:\n  e -> 1\n  g -> 1\n");
  auto T = compile(*mixed, 3);
  REQUIRE(T);
  CHECK(T->dim == 4);
  auto q = coreflection_probe(*T);
  REQUIRE(q);
  CHECK(q->subset.size() == 2);
  CHECK(closed(*T, q->subset));
  CHECK(satisfies_antipode_axiom(restrict_table(*T, q->subset), q->antipode));
}
