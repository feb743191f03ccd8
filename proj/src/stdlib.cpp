#include "hopfforge/stdlib.hpp"

#include "hopfforge/errors.hpp"
#include "hopfforge/text.hpp"

namespace hopfforge {

namespace {

// Builds a presentation from textual tables; every entry goes through the
// polynomial grammar so the stdlib objects print exactly as written here.
PresentationPtr from_text(const std::vector<std::string>& names, Field field,
                          const std::vector<std::string>& relations,
                          const std::vector<std::string>& delta,
                          const std::vector<std::string>& counit,
                          const std::optional<std::vector<std::string>>& antipode,
                          std::optional<std::size_t> degree_bound) {
  PresentationData data;
  data.alphabet = make_alphabet(names);
  data.field = field;
  for (const auto& r : relations) {
    data.relations.push_back(parse_poly(r, data.alphabet, field));
  }
  for (const auto& d : delta) {
    data.delta.push_back(parse_tensor(d, data.alphabet, field));
  }
  for (const auto& e : counit) {
    data.counit.push_back(parse_scalar(e, field));
  }
  if (antipode) {
    data.antipode.emplace();
    for (const auto& s : *antipode) {
      data.antipode->push_back(parse_poly(s, data.alphabet, field));
    }
  }
  data.degree_bound = degree_bound;
  return make_presentation(std::move(data));
}

std::string inverse_name(const std::string& g) { return g + "_inv"; }

}  // namespace

PresentationPtr group_algebra(const GroupPresentation& group, Field field,
                              std::optional<std::size_t> degree_bound) {
  std::vector<std::string> names;
  for (const auto& g : group.generators) {
    names.push_back(g);
    names.push_back(inverse_name(g));
  }
  PresentationData data;
  data.alphabet = make_alphabet(names);
  data.field = field;
  const AlphabetPtr& alpha = data.alphabet;
  FreePoly one = FreePoly::constant(alpha, field, 1);
  auto gen = [&](std::size_t g, bool inv) {
    return FreePoly::generator(alpha, field, static_cast<GenId>(2 * g + (inv ? 1 : 0)));
  };
  for (std::size_t g = 0; g < group.generators.size(); ++g) {
    data.relations.push_back(gen(g, false) * gen(g, true) - one);
    data.relations.push_back(gen(g, true) * gen(g, false) - one);
  }
  for (const auto& rel : group.relators) {
    if (rel.empty()) {
      throw PreconditionFailed("group relator must be nonempty");
    }
    FreePoly word = one;
    for (std::size_t i = 0; i < rel.size(); ++i) {
      if (rel[i].generator >= group.generators.size()) {
        throw PreconditionFailed("group relator uses an unknown generator");
      }
      if (i > 0 && rel[i].generator == rel[i - 1].generator
          && rel[i].inverse != rel[i - 1].inverse) {
        throw PreconditionFailed("group relator is not freely reduced");
      }
      word = word * gen(rel[i].generator, rel[i].inverse);
    }
    data.relations.push_back(word - one);
  }
  data.antipode.emplace();
  for (std::size_t g = 0; g < group.generators.size(); ++g) {
    for (bool inv : {false, true}) {
      FreePoly x = gen(g, inv);
      data.delta.push_back(outer(x, x));
      data.counit.push_back(Scalar(field, 1));
      data.antipode->push_back(gen(g, !inv));
    }
  }
  data.degree_bound = degree_bound;
  return make_presentation(std::move(data));
}

PresentationPtr cyclic_group_algebra(std::size_t n, const std::string& name,
                                     Field field,
                                     std::optional<std::size_t> degree_bound) {
  if (n == 0) {
    throw PreconditionFailed("cyclic group order must be positive");
  }
  GroupPresentation G{{name}, {std::vector<GroupLetter>(n, GroupLetter{0, false})}};
  return group_algebra(G, field, degree_bound);
}

PresentationPtr laurent_algebra(const std::string& name, Field field,
                                std::optional<std::size_t> degree_bound) {
  return group_algebra(GroupPresentation{{name}, {}}, field, degree_bound);
}

PresentationPtr monoid_bialgebra(
    const std::vector<std::string>& generators,
    const std::vector<std::pair<std::string, std::string>>& relations,
    Field field, std::optional<std::size_t> degree_bound) {
  PresentationData data;
  data.alphabet = make_alphabet(generators);
  data.field = field;
  for (const auto& [lhs, rhs] : relations) {
    FreePoly p = parse_poly(lhs, data.alphabet, field)
                 - parse_poly(rhs, data.alphabet, field);
    if (p.is_zero()) {
      throw PreconditionFailed("monoid relation " + lhs + " = " + rhs
                               + " is trivial");
    }
    data.relations.push_back(std::move(p));
  }
  for (GenId g = 0; g < generators.size(); ++g) {
    FreePoly x = FreePoly::generator(data.alphabet, field, g);
    data.delta.push_back(outer(x, x));
    data.counit.push_back(Scalar(field, 1));
  }
  data.degree_bound = degree_bound;
  return make_presentation(std::move(data));
}

PresentationPtr sweedler_h4(Field field, std::optional<std::size_t> degree_bound) {
  if (field.characteristic() == 2) {
    throw PreconditionFailed("Sweedler's algebra needs characteristic != 2");
  }
  return from_text({"g", "x"}, field, {"g*g - 1", "x*x", "x*g + g*x"},
                   {"g (#) g", "x (#) 1 + g (#) x"}, {"1", "0"},
                   std::vector<std::string>{"g", "-g*x"}, degree_bound);
}

PresentationPtr primitive_line(Field field,
                               std::optional<std::size_t> degree_bound) {
  return from_text({"x"}, field, {}, {"x (#) 1 + 1 (#) x"}, {"0"},
                   std::vector<std::string>{"-x"}, degree_bound);
}

std::vector<std::string> example_names() {
  return {"trivial",  "z2",          "z3",         "z",
          "sweedler", "grouplike-x", "idempotent", "free-monoid-xy",
          "nxn",      "primitive"};
}

PresentationPtr example(const std::string& name, Field field) {
  if (name == "trivial") {
    return group_algebra(GroupPresentation{}, field);
  }
  if (name == "z2") {
    return cyclic_group_algebra(2, "g", field);
  }
  if (name == "z3") {
    return cyclic_group_algebra(3, "g", field);
  }
  if (name == "z") {
    return laurent_algebra("t", field);
  }
  if (name == "sweedler") {
    return sweedler_h4(field);
  }
  if (name == "grouplike-x") {
    return monoid_bialgebra({"x"}, {}, field);
  }
  if (name == "idempotent") {
    return monoid_bialgebra({"e"}, {{"e*e", "e"}}, field);
  }
  if (name == "free-monoid-xy") {
    return monoid_bialgebra({"x", "y"}, {}, field);
  }
  if (name == "nxn") {
    return monoid_bialgebra({"x", "y"}, {{"y*x", "x*y"}}, field);
  }
  if (name == "primitive") {
    return primitive_line(field);
  }
  std::string known;
  for (const auto& n : example_names()) {
    known += (known.empty() ? "" : ", ") + n;
  }
  throw PreconditionFailed("unknown example '" + name + "' (known: " + known + ")");
}

}  // namespace hopfforge
