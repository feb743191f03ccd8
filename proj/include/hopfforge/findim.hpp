#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfforge/linear_solve.hpp"
#include "hopfforge/presentation.hpp"

namespace hopfforge {

// A finite-dimensional bialgebra by structure constants in a basis e_0..e_{n-1}:
//   e_i e_j = sum_k mul(i,j,k) e_k
//   Delta(e_i) = sum_{j,k} delta(i,j,k) e_j (x) e_k
// The antipode, when present, is stored by columns: S(e_i) = sum_r S(r,i) e_r.
struct StructureTable {
  std::size_t dim = 0;
  Field field;
  std::vector<Scalar> mul_data;    // dim^3
  std::vector<Scalar> unit;        // dim
  std::vector<Scalar> delta_data;  // dim^3
  std::vector<Scalar> counit;      // dim
  std::optional<Matrix> antipode;
  // Optional labels for the basis vectors (e.g. the words they come from).
  std::vector<std::string> basis;

  StructureTable() = default;
  StructureTable(std::size_t n, Field f);

  Scalar& mul(std::size_t i, std::size_t j, std::size_t k) {
    return mul_data[(i * dim + j) * dim + k];
  }
  const Scalar& mul(std::size_t i, std::size_t j, std::size_t k) const {
    return mul_data[(i * dim + j) * dim + k];
  }
  Scalar& delta(std::size_t i, std::size_t j, std::size_t k) {
    return delta_data[(i * dim + j) * dim + k];
  }
  const Scalar& delta(std::size_t i, std::size_t j, std::size_t k) const {
    return delta_data[(i * dim + j) * dim + k];
  }

  friend bool operator==(const StructureTable&, const StructureTable&) = default;
};

// associativity, unit, coassociativity, counit, compatibility (Delta and eps
// are algebra maps), and antipode when the table carries one. Throws
// PreconditionFailed on inconsistent tensor sizes.
std::vector<CheckResult> check_bialgebra_axioms(const StructureTable& T);

// Both sides of m(id(x)S)Delta = m(S(x)id)Delta = eta eps hold for S.
bool satisfies_antipode_axiom(const StructureTable& T, const Matrix& S);

// The antipode as the solution of the 2n^2 linear equations in n^2 unknowns
// given by the convolution identities; nullopt when no antipode exists.
std::optional<Matrix> solve_antipode(const StructureTable& T);

// Structure constants over the normal words of length <= d. nullopt when
// the basis still grows from length d to d+1. Requires d + 1 <= D. The
// antipode table, if any, is evaluated on the basis.
std::optional<StructureTable> compile(const HopfPresentation& P, std::size_t d);

struct ProbeResult {
  std::vector<std::size_t> subset;  // basis indices, ascending
  Matrix antipode;                  // antipode of the restricted table
};

// Among coordinate subspaces containing the unit that are closed under m and
// Delta, a largest one whose restricted table has an antipode (ties: the
// lexicographically smallest index set). Experimental: searches coordinate
// subspaces of the given basis only. Throws PreconditionFailed when
// dim > max_dim.
std::optional<ProbeResult> coreflection_probe(const StructureTable& T,
                                              std::size_t max_dim = 12);

// The table restricted to the span of `subset` (assumed closed).
StructureTable restrict_table(const StructureTable& T,
                              const std::vector<std::size_t>& subset);

}  // namespace hopfforge
