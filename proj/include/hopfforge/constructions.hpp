#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hopfforge/presentation.hpp"

namespace hopfforge {

// How each factor sits inside a coproduct: a renaming of its generators into
// the coproduct alphabet and the induced structure map q_l.
struct CoproductLabeling {
  std::vector<std::vector<GenId>> renaming;
  std::vector<HopfMap> injections;
};

struct Coproduct {
  PresentationPtr presentation;
  CoproductLabeling labeling;
};

// Coproduct of a finite family in the presented model: disjoint union of the
// generators (factor-l generator `x` becomes `x@l` when names collide), union
// of the renamed relations, renamed Delta/eps/S tables. The antipode table is
// renamed generator-wise and extended anti-multiplicatively, so
// S(q_l(x)) = q_l(S_l(x)). Unit identifications are automatic because every
// factor uses the empty word as its unit. The degree bound defaults to the
// largest factor bound plus 2.
Coproduct coproduct(std::span<const PresentationPtr> factors,
                    std::optional<std::size_t> degree_bound = {});

struct Coequalizer {
  HopfMap f;
  HopfMap g;
  PresentationPtr quotient;
  HopfMap projection;
  // f(b) - g(b) for the source generators b where the images differ.
  std::vector<FreePoly> added_relations;
  // counit, coideal and hopf-ideal checks on the added relations, in the
  // quotient.
  std::vector<CheckResult> hopf_ideal_checks;

  bool hopf_ideal() const;
};

// The quotient A/I with I generated by {f(b) - g(b)}. Generator differences
// suffice: f(xy) - g(xy) = f(x)(f(y) - g(y)) + (f(x) - g(x))g(y). The degree
// bound defaults to max(D_A, D_B) + 2. Throws PreconditionFailed when f and g
// are not parallel Hopf maps.
Coequalizer coequalizer(const HopfMap& f, const HopfMap& g,
                        std::optional<std::size_t> degree_bound = {});

// The factorization h' : A/I -> H with h' o pi = h. Throws PreconditionFailed
// naming the first source generator b with h(f(b)) != h(g(b)).
HopfMap induced_from_coeq(const HopfMap& h, const Coequalizer& coeq);

// The map u out of the coproduct with u o q_l = h_l. Throws
// PreconditionFailed when some h_l is not a Hopf map or the targets differ.
HopfMap induced_from_cocone(std::span<const HopfMap> maps,
                            const Coproduct& coprod);

}  // namespace hopfforge
