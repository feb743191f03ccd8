#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfforge/presentation.hpp"

namespace hopfforge {

struct GroupLetter {
  std::size_t generator = 0;
  bool inverse = false;

  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};

// A finitely presented group <generators | relators>.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<GroupLetter>> relators;
};

// The group algebra k[G]. Each generator g gets a formal inverse `g_inv`
// with g*g_inv = g_inv*g = 1; both are grouplike and S swaps them. Relators
// must be nonempty freely reduced words.
PresentationPtr group_algebra(const GroupPresentation& group,
                              Field field = Field::rationals(),
                              std::optional<std::size_t> degree_bound = {});

// The cyclic group Z/n on generator `name`, and Z (no relator).
PresentationPtr cyclic_group_algebra(std::size_t n, const std::string& name = "g",
                                     Field field = Field::rationals(),
                                     std::optional<std::size_t> degree_bound = {});
PresentationPtr laurent_algebra(const std::string& name = "t",
                                Field field = Field::rationals(),
                                std::optional<std::size_t> degree_bound = {});

// Monoid bialgebra: grouplike generators, relations lhs = rhs, no antipode.
PresentationPtr monoid_bialgebra(
    const std::vector<std::string>& generators,
    const std::vector<std::pair<std::string, std::string>>& relations,
    Field field = Field::rationals(),
    std::optional<std::size_t> degree_bound = {});

// Sweedler's 4-dimensional Hopf algebra: g*g = 1, x*x = 0, x*g = -g*x,
// Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x, S(g) = g, S(x) = -g*x.
// Throws PreconditionFailed in characteristic 2.
PresentationPtr sweedler_h4(Field field = Field::rationals(),
                            std::optional<std::size_t> degree_bound = {});

// k<x> with x primitive: Delta(x) = x(x)1 + 1(x)x, S(x) = -x.
PresentationPtr primitive_line(Field field = Field::rationals(),
                               std::optional<std::size_t> degree_bound = {});

// Names accepted by example(): trivial, z2, z3, z, sweedler, grouplike-x,
// idempotent, free-monoid-xy, nxn, primitive.
std::vector<std::string> example_names();
PresentationPtr example(const std::string& name,
                        Field field = Field::rationals());

}  // namespace hopfforge
