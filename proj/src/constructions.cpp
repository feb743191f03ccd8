#include "hopfforge/constructions.hpp"

#include <algorithm>
#include <set>

#include "hopfforge/errors.hpp"
#include "hopfforge/text.hpp"

namespace hopfforge {

namespace {

Word rename_word(const Word& w, const std::vector<GenId>& renaming) {
  Word out;
  out.reserve(w.size());
  for (GenId g : w) {
    out.push_back(renaming[g]);
  }
  return out;
}

FreePoly rename(const FreePoly& p, const std::vector<GenId>& renaming,
                const AlphabetPtr& target) {
  FreePoly out(target, p.field());
  for (const auto& [w, c] : p.terms()) {
    out.add_term(rename_word(w, renaming), c);
  }
  return out;
}

TensorPoly rename(const TensorPoly& t, const std::vector<GenId>& renaming,
                  const AlphabetPtr& target) {
  TensorPoly out(target, t.field());
  for (const auto& [key, c] : t.terms()) {
    out.add_term({rename_word(key[0], renaming), rename_word(key[1], renaming)},
                 c);
  }
  return out;
}

}  // namespace

Coproduct coproduct(std::span<const PresentationPtr> factors,
                    std::optional<std::size_t> degree_bound) {
  if (factors.empty()) {
    throw PreconditionFailed("coproduct needs at least one factor");
  }
  const Field field = factors.front()->field();
  bool disjoint = true;
  std::set<std::string> seen;
  for (const auto& P : factors) {
    if (P->field() != field) {
      throw FieldMismatch("coproduct factors over different fields: "
                          + field.name() + " vs " + P->field().name());
    }
    for (const auto& name : P->alphabet()->names()) {
      disjoint = seen.insert(name).second && disjoint;
    }
  }

  std::vector<std::string> names;
  Coproduct out;
  std::size_t bound = 0;
  for (std::size_t l = 0; l < factors.size(); ++l) {
    std::vector<GenId> renaming;
    for (const auto& name : factors[l]->alphabet()->names()) {
      renaming.push_back(static_cast<GenId>(names.size()));
      names.push_back(disjoint ? name : name + "@" + std::to_string(l + 1));
    }
    out.labeling.renaming.push_back(std::move(renaming));
    bound = std::max(bound, factors[l]->degree_bound());
  }

  PresentationData data;
  data.alphabet = make_alphabet(names);
  data.field = field;
  data.degree_bound = degree_bound.value_or(bound + 2);
  bool all_hopf = std::all_of(factors.begin(), factors.end(),
                              [](const auto& P) { return P->has_antipode(); });
  if (all_hopf) {
    data.antipode.emplace();
  }
  for (std::size_t l = 0; l < factors.size(); ++l) {
    const HopfPresentation& P = *factors[l];
    const auto& renaming = out.labeling.renaming[l];
    for (const FreePoly& r : P.relations()) {
      data.relations.push_back(rename(r, renaming, data.alphabet));
    }
    for (GenId g = 0; g < P.alphabet()->size(); ++g) {
      data.delta.push_back(rename(P.delta_table()[g], renaming, data.alphabet));
      data.counit.push_back(P.counit_table()[g]);
      if (all_hopf) {
        data.antipode->push_back(
            rename((*P.antipode_table())[g], renaming, data.alphabet));
      }
    }
  }
  out.presentation = make_presentation(std::move(data));

  for (std::size_t l = 0; l < factors.size(); ++l) {
    std::vector<FreePoly> images;
    for (GenId id : out.labeling.renaming[l]) {
      images.push_back(out.presentation->generator(id));
    }
    out.labeling.injections.emplace_back(factors[l], out.presentation,
                                         std::move(images));
  }
  return out;
}

bool Coequalizer::hopf_ideal() const {
  return std::none_of(hopf_ideal_checks.begin(), hopf_ideal_checks.end(),
                      [](const CheckResult& c) {
                        return c.status == CheckStatus::fail;
                      });
}

Coequalizer coequalizer(const HopfMap& f, const HopfMap& g,
                        std::optional<std::size_t> degree_bound) {
  if (!(*f.source() == *g.source()) || !(*f.target() == *g.target())) {
    throw PreconditionFailed("coequalizer needs parallel maps B -> A");
  }
  if (MapCheck c = check_hopf_map(f); !c) {
    throw PreconditionFailed("f is not a bialgebra map: " + c.failure);
  }
  if (MapCheck c = check_hopf_map(g); !c) {
    throw PreconditionFailed("g is not a bialgebra map: " + c.failure);
  }
  const HopfPresentation& A = *f.target();
  const HopfPresentation& B = *f.source();

  Coequalizer out{f, g, nullptr, {}, {}, {}};
  for (GenId b = 0; b < B.alphabet()->size(); ++b) {
    FreePoly diff = f(B.generator(b)) - g(B.generator(b));
    bool repeated = std::find(out.added_relations.begin(),
                              out.added_relations.end(),
                              diff) != out.added_relations.end();
    if (!diff.is_zero() && !repeated) {
      out.added_relations.push_back(std::move(diff));
    }
  }

  PresentationData data = A.data();
  data.relations.insert(data.relations.end(), out.added_relations.begin(),
                        out.added_relations.end());
  data.degree_bound = degree_bound.value_or(
      std::max(A.degree_bound(), B.degree_bound()) + 2);
  out.quotient = make_presentation(std::move(data));
  const HopfPresentation& Q = *out.quotient;

  std::vector<FreePoly> images;
  for (GenId a = 0; a < A.alphabet()->size(); ++a) {
    images.push_back(Q.generator(a));
  }
  out.projection = HopfMap(f.target(), out.quotient, std::move(images));

  CheckResult counit{"counit", CheckStatus::pass, ""};
  CheckResult coideal{"coideal", CheckStatus::pass, ""};
  CheckResult stable{"hopf-ideal", CheckStatus::pass, ""};
  if (!Q.has_antipode()) {
    stable.status = CheckStatus::skipped;
    stable.detail = "no antipode table";
  }
  for (const FreePoly& r : out.added_relations) {
    if (Scalar e = eps_of(Q, r); !e.is_zero() && counit.status == CheckStatus::pass) {
      counit = {"counit", CheckStatus::fail,
                "eps(" + to_string(r) + ") = " + e.to_string()};
    }
    if (TensorPoly d = delta_of(Q, r);
        !d.is_zero() && coideal.status == CheckStatus::pass) {
      coideal = {"coideal", CheckStatus::fail,
                 "Delta(" + to_string(r) + ") = " + to_string(d)};
    }
    if (Q.has_antipode()) {
      if (FreePoly s = s_of(Q, r);
          !s.is_zero() && stable.status == CheckStatus::pass) {
        stable = {"hopf-ideal", CheckStatus::fail,
                  "S(" + to_string(r) + ") = " + to_string(s)};
      }
    }
  }
  out.hopf_ideal_checks = {counit, coideal, stable};
  return out;
}

HopfMap induced_from_coeq(const HopfMap& h, const Coequalizer& coeq) {
  if (!(*h.source() == *coeq.projection.source())) {
    throw PreconditionFailed("h must start at the coequalizer's target A");
  }
  const HopfPresentation& B = *coeq.f.source();
  for (GenId b = 0; b < B.alphabet()->size(); ++b) {
    FreePoly via_f = h(coeq.f(B.generator(b)));
    FreePoly via_g = h(coeq.g(B.generator(b)));
    if (!(via_f == via_g)) {
      throw PreconditionFailed("h o f != h o g at generator '"
                               + B.alphabet()->name(b) + "': "
                               + to_string(via_f) + " vs " + to_string(via_g));
    }
  }
  std::vector<FreePoly> images;
  for (GenId a = 0; a < h.source()->alphabet()->size(); ++a) {
    images.push_back(h(h.source()->generator(a)));
  }
  HopfMap induced(coeq.quotient, h.target(), std::move(images));
  if (MapCheck c = check_hopf_map(induced); !c) {
    throw PreconditionFailed("induced map is not a bialgebra map: " + c.failure);
  }
  return induced;
}

HopfMap induced_from_cocone(std::span<const HopfMap> maps,
                            const Coproduct& coprod) {
  const auto& injections = coprod.labeling.injections;
  if (maps.size() != injections.size()) {
    throw PreconditionFailed("cocone has " + std::to_string(maps.size())
                             + " maps for " + std::to_string(injections.size())
                             + " factors");
  }
  if (maps.empty()) {
    throw PreconditionFailed("empty cocone");
  }
  const PresentationPtr& target = maps.front().target();
  std::vector<FreePoly> images(coprod.presentation->alphabet()->size());
  for (std::size_t l = 0; l < maps.size(); ++l) {
    const HopfMap& h = maps[l];
    if (!(*h.target() == *target)) {
      throw PreconditionFailed("cocone maps have different targets");
    }
    if (!(*h.source() == *injections[l].source())) {
      throw PreconditionFailed("cocone map " + std::to_string(l + 1)
                               + " does not start at factor "
                               + std::to_string(l + 1));
    }
    if (MapCheck c = check_hopf_map(h); !c) {
      throw PreconditionFailed("cocone map " + std::to_string(l + 1)
                               + " is not a bialgebra map: " + c.failure);
    }
    const auto& renaming = coprod.labeling.renaming[l];
    for (GenId g = 0; g < renaming.size(); ++g) {
      images[renaming[g]] = h(h.source()->generator(g));
    }
  }
  HopfMap u(coprod.presentation, target, std::move(images));
  if (MapCheck c = check_hopf_map(u); !c) {
    throw PreconditionFailed("induced map is not a bialgebra map: " + c.failure);
  }
  return u;
}

}  // namespace hopfforge
