#include "hopfforge/presentation.hpp"

#include <algorithm>

#include "hopfforge/errors.hpp"
#include "hopfforge/text.hpp"

namespace hopfforge {

HopfPresentation::HopfPresentation(PresentationData data)
    : data_(std::move(data)) {
  if (!data_.alphabet) {
    throw PreconditionFailed("presentation has no alphabet");
  }
  const Alphabet& alpha = *data_.alphabet;
  if (data_.delta.size() != alpha.size()) {
    throw PreconditionFailed("delta table has "
                             + std::to_string(data_.delta.size())
                             + " entries for " + std::to_string(alpha.size())
                             + " generators");
  }
  if (data_.counit.size() != alpha.size()) {
    throw PreconditionFailed("counit table has "
                             + std::to_string(data_.counit.size())
                             + " entries for " + std::to_string(alpha.size())
                             + " generators");
  }
  if (data_.antipode && data_.antipode->size() != alpha.size()) {
    throw PreconditionFailed("antipode table has "
                             + std::to_string(data_.antipode->size())
                             + " entries for " + std::to_string(alpha.size())
                             + " generators");
  }
  for (GenId g = 0; g < alpha.size(); ++g) {
    const TensorPoly& d = data_.delta[g];
    if (!same_alphabet(d.alphabet(), data_.alphabet) || d.field() != data_.field) {
      throw PreconditionFailed("delta entry of '" + alpha.name(g)
                               + "' is not over the presentation's algebra");
    }
    if (data_.counit[g].field() != data_.field) {
      throw FieldMismatch("counit entry of '" + alpha.name(g)
                          + "' is over a different field");
    }
    if (data_.antipode) {
      const FreePoly& s = (*data_.antipode)[g];
      if (!same_alphabet(s.alphabet(), data_.alphabet) || s.field() != data_.field) {
        throw PreconditionFailed("antipode entry of '" + alpha.name(g)
                                 + "' is not over the presentation's algebra");
      }
    }
  }
  std::size_t bound =
      data_.degree_bound.value_or(default_degree_bound(data_.relations));
  data_.degree_bound = bound;
  rewrite_ = RewriteSystem::complete(data_.alphabet, data_.field,
                                     data_.relations, bound);
}

std::size_t HopfPresentation::default_degree_bound(
    const std::vector<FreePoly>& relations) {
  std::size_t max_deg = 0;
  for (const FreePoly& r : relations) {
    max_deg = std::max(max_deg, r.degree());
  }
  return 2 * max_deg + 4;
}

bool operator==(const HopfPresentation& lhs, const HopfPresentation& rhs) {
  const PresentationData& a = lhs.data_;
  const PresentationData& b = rhs.data_;
  return same_alphabet(a.alphabet, b.alphabet) && a.field == b.field
         && a.relations == b.relations && a.delta == b.delta
         && a.counit == b.counit && a.antipode == b.antipode
         && lhs.rewrite_ == rhs.rewrite_;
}

PresentationPtr make_presentation(PresentationData data) {
  return std::make_shared<const HopfPresentation>(std::move(data));
}

namespace {

void check_element(const HopfPresentation& P, const FreePoly& p) {
  if (!same_alphabet(p.alphabet(), P.alphabet())) {
    throw AlphabetMismatch("element is not over the presentation's alphabet");
  }
  if (p.field() != P.field()) {
    throw FieldMismatch("element field differs from the presentation's");
  }
  if (p.degree() > P.degree_bound()) {
    throw DegreeOverflow(p.degree(), P.degree_bound());
  }
}

const std::vector<FreePoly>& antipode_or_throw(const HopfPresentation& P) {
  if (!P.has_antipode()) {
    throw PreconditionFailed("presentation has no antipode table");
  }
  return *P.antipode_table();
}

}  // namespace

TensorPoly delta_of(const HopfPresentation& P, const FreePoly& p) {
  check_element(P, p);
  const RewriteSystem& R = P.rewrite();
  return R.tensor_normal_form(apply_tensor_map(
      P.delta_table(), p,
      [&R](const TensorPoly& t) { return R.tensor_normal_form(t); }));
}

Scalar eps_of(const HopfPresentation& P, const FreePoly& p) {
  check_element(P, p);
  return apply_character(P.counit_table(), p);
}

FreePoly s_of(const HopfPresentation& P, const FreePoly& p) {
  check_element(P, p);
  GenMap S(P.alphabet(), P.alphabet(), P.field(), antipode_or_throw(P),
           MapMode::anti_homomorphic);
  const RewriteSystem& R = P.rewrite();
  return R.normal_form(
      apply_map(S, p, [&R](const FreePoly& q) { return R.normal_form(q); }));
}

namespace {

// Sum of c * a * S(b) (left) or c * S(a) * b (right) over Delta(p).
FreePoly convolution(const HopfPresentation& P, const FreePoly& p, bool left) {
  TensorPoly d = delta_of(P, p);
  FreePoly out(P.alphabet(), P.field());
  for (const auto& [key, c] : d.terms()) {
    FreePoly a = P.word(key[0]);
    FreePoly b = P.word(key[1]);
    FreePoly term = left ? a * s_of(P, b) : s_of(P, a) * b;
    out += P.nf(term) * c;
  }
  return P.nf(out);
}

}  // namespace

FreePoly antipode_left_convolution(const HopfPresentation& P,
                                   const FreePoly& p) {
  return convolution(P, p, true);
}

FreePoly antipode_right_convolution(const HopfPresentation& P,
                                    const FreePoly& p) {
  return convolution(P, p, false);
}

bool antipode_axiom_check(const HopfPresentation& P, const FreePoly& p) {
  antipode_or_throw(P);
  check_element(P, p);
  if (2 * p.degree() > P.degree_bound()) {
    throw DegreeOverflow(2 * p.degree(), P.degree_bound());
  }
  FreePoly expected = P.one() * eps_of(P, p);
  return antipode_left_convolution(P, p) == expected
         && antipode_right_convolution(P, p) == expected;
}

bool ValidationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::fail;
  });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) {
      return &c;
    }
  }
  return nullptr;
}

namespace {

// (Delta (x) id) or (id (x) Delta) applied to a normal-form tensor.
Tensor3 expand_slot(const HopfPresentation& P, const TensorPoly& t,
                    bool left_slot) {
  Tensor3 out(P.alphabet(), P.field());
  for (const auto& [key, c] : t.terms()) {
    TensorPoly d = delta_of(P, P.word(left_slot ? key[0] : key[1]));
    for (const auto& [dk, dc] : d.terms()) {
      Tensor3::Key k3 = left_slot ? Tensor3::Key{dk[0], dk[1], key[1]}
                                  : Tensor3::Key{key[0], dk[0], dk[1]};
      out.add_term(k3, c * dc);
    }
  }
  return P.nf(out);
}

// (eps (x) id) (slot 1 survives) or (id (x) eps) (slot 0 survives).
FreePoly contract(const HopfPresentation& P, const TensorPoly& t,
                  std::size_t keep) {
  FreePoly out(P.alphabet(), P.field());
  for (const auto& [key, c] : t.terms()) {
    Scalar e = eps_of(P, P.word(key[1 - keep]));
    out.add_term(key[keep], c * e);
  }
  return P.nf(out);
}

std::size_t required_bound(const HopfPresentation& P) {
  std::size_t need = 0;
  for (const TensorPoly& d : P.delta_table()) {
    need = std::max(need, d.total_degree());
  }
  for (const FreePoly& r : P.relations()) {
    need = std::max(need, r.degree());
  }
  return 2 * need;
}

void fail(CheckResult& check, const std::string& detail) {
  if (check.status != CheckStatus::fail) {
    check.status = CheckStatus::fail;
    check.detail = detail;
  }
}

}  // namespace

ValidationReport validate(const HopfPresentation& P) {
  std::size_t need = required_bound(P);
  if (P.degree_bound() < need) {
    throw DegreeOverflow(need, P.degree_bound());
  }
  const Alphabet& alpha = *P.alphabet();
  ValidationReport report;
  report.confluence = P.rewrite().status();
  report.degree_bound = P.degree_bound();

  CheckResult relations{"relations", CheckStatus::pass, ""};
  for (const FreePoly& r : P.relations()) {
    if (!P.nf(r).is_zero()) {
      fail(relations, "relation " + to_string(r) + " does not reduce to 0");
    }
  }
  report.checks.push_back(relations);

  CheckResult coassoc{"coassociativity", CheckStatus::pass, ""};
  CheckResult counit{"counit", CheckStatus::pass, ""};
  for (GenId g = 0; g < alpha.size(); ++g) {
    FreePoly x = P.generator(g);
    TensorPoly d = delta_of(P, x);
    Tensor3 lhs = expand_slot(P, d, true);
    Tensor3 rhs = expand_slot(P, d, false);
    if (!(lhs == rhs)) {
      fail(coassoc, "generator " + alpha.name(g) + ": (Delta (#) id)Delta = "
                        + to_string(lhs) + " but (id (#) Delta)Delta = "
                        + to_string(rhs));
    }
    FreePoly nx = P.nf(x);
    FreePoly left = contract(P, d, 1);
    FreePoly right = contract(P, d, 0);
    if (!(left == nx)) {
      fail(counit, "generator " + alpha.name(g) + ": (eps (#) id)Delta = "
                       + to_string(left) + ", expected " + to_string(nx));
    } else if (!(right == nx)) {
      fail(counit, "generator " + alpha.name(g) + ": (id (#) eps)Delta = "
                       + to_string(right) + ", expected " + to_string(nx));
    }
  }
  report.checks.push_back(coassoc);
  report.checks.push_back(counit);

  CheckResult coideal{"coideal", CheckStatus::pass, ""};
  for (const FreePoly& r : P.relations()) {
    TensorPoly d = delta_of(P, r);
    if (!d.is_zero()) {
      fail(coideal, "Delta(" + to_string(r) + ") = " + to_string(d)
                        + " is not in I (#) A + A (#) I");
    } else if (Scalar e = eps_of(P, r); !e.is_zero()) {
      fail(coideal, "eps(" + to_string(r) + ") = " + e.to_string());
    }
  }
  report.checks.push_back(coideal);

  CheckResult hopf_ideal{"hopf-ideal", CheckStatus::pass, ""};
  CheckResult antipode{"antipode", CheckStatus::pass, ""};
  if (!P.has_antipode()) {
    hopf_ideal.status = CheckStatus::skipped;
    hopf_ideal.detail = "no antipode table";
    antipode.status = CheckStatus::skipped;
    antipode.detail = "no antipode table";
  } else {
    for (const FreePoly& r : P.relations()) {
      FreePoly s = s_of(P, r);
      if (!s.is_zero()) {
        fail(hopf_ideal, "S(" + to_string(r) + ") = " + to_string(s)
                             + " is not in I");
      }
    }
    for (GenId g = 0; g < alpha.size(); ++g) {
      FreePoly x = P.generator(g);
      FreePoly expected = P.one() * eps_of(P, x);
      FreePoly left = antipode_left_convolution(P, x);
      FreePoly right = antipode_right_convolution(P, x);
      if (!(left == expected)) {
        fail(antipode, "generator " + alpha.name(g) + ": m(id (#) S)Delta = "
                           + to_string(left) + ", expected "
                           + to_string(expected));
      } else if (!(right == expected)) {
        fail(antipode, "generator " + alpha.name(g) + ": m(S (#) id)Delta = "
                           + to_string(right) + ", expected "
                           + to_string(expected));
      }
    }
  }
  report.checks.push_back(hopf_ideal);
  report.checks.push_back(antipode);
  return report;
}

std::vector<Word> grouplikes(const HopfPresentation& P, std::size_t d) {
  if (2 * d > P.degree_bound()) {
    throw DegreeOverflow(2 * d, P.degree_bound());
  }
  std::vector<Word> out;
  for (const Word& w : P.rewrite().basis_up_to_degree(d)) {
    FreePoly x = P.word(w);
    if (!eps_of(P, x).is_one()) {
      continue;
    }
    TensorPoly diagonal(P.alphabet(), P.field());
    diagonal.add_term({w, w}, Scalar(P.field(), 1));
    if (delta_of(P, x) == diagonal) {
      out.push_back(w);
    }
  }
  return out;
}

HopfMap::HopfMap(PresentationPtr source, PresentationPtr target,
                 std::vector<FreePoly> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_) {
    throw PreconditionFailed("map needs a source and a target presentation");
  }
  if (source_->field() != target_->field()) {
    throw FieldMismatch("map between presentations over different fields");
  }
  map_ = GenMap(source_->alphabet(), target_->alphabet(), source_->field(),
                std::move(images));
}

HopfMap HopfMap::identity(const PresentationPtr& P) {
  return HopfMap(P, P, GenMap::identity(P->alphabet(), P->field()).images());
}

FreePoly HopfMap::operator()(const FreePoly& p) const {
  const RewriteSystem& R = target_->rewrite();
  return R.normal_form(apply_map(
      map_, p, [&R](const FreePoly& q) { return R.normal_form(q); }));
}

HopfMap compose(const HopfMap& outer, const HopfMap& inner) {
  if (!(*inner.target() == *outer.source())) {
    throw PreconditionFailed("cannot compose: inner target is not outer source");
  }
  std::vector<FreePoly> images;
  images.reserve(inner.source()->alphabet()->size());
  for (const FreePoly& img : inner.gen_map().images()) {
    images.push_back(outer(img));
  }
  return HopfMap(inner.source(), outer.target(), std::move(images));
}

MapCheck check_hopf_map(const HopfMap& phi) {
  const HopfPresentation& S = *phi.source();
  const HopfPresentation& T = *phi.target();
  const Alphabet& alpha = *S.alphabet();
  MapCheck out;
  auto failed = [&out](std::string why) {
    out.ok = false;
    out.failure = std::move(why);
    return out;
  };
  for (const FreePoly& r : S.relations()) {
    FreePoly img = phi(r);
    if (!img.is_zero()) {
      return failed("relation " + to_string(r) + " maps to " + to_string(img)
                    + ", not in the target ideal");
    }
  }
  for (GenId g = 0; g < alpha.size(); ++g) {
    const std::string& name = alpha.name(g);
    FreePoly img = phi(S.generator(g));
    TensorPoly lhs = delta_of(T, img);
    TensorPoly pushed(T.alphabet(), T.field());
    for (const auto& [key, c] : delta_of(S, S.generator(g)).terms()) {
      pushed += outer(phi(S.word(key[0])), phi(S.word(key[1]))) * c;
    }
    TensorPoly rhs = T.nf(pushed);
    if (!(lhs == rhs)) {
      return failed("generator " + name + ": Delta(phi(" + name + ")) = "
                    + to_string(lhs) + " but (phi (#) phi)Delta(" + name
                    + ") = " + to_string(rhs));
    }
    Scalar et = eps_of(T, img);
    Scalar es = eps_of(S, S.generator(g));
    if (!(et == es)) {
      return failed("generator " + name + ": eps(phi(" + name + ")) = "
                    + et.to_string() + " but eps(" + name + ") = "
                    + es.to_string());
    }
    if (S.has_antipode() && T.has_antipode()) {
      FreePoly st = s_of(T, img);
      FreePoly ss = phi(s_of(S, S.generator(g)));
      if (!(st == ss)) {
        return failed("generator " + name + ": S(phi(" + name + ")) = "
                      + to_string(st) + " but phi(S(" + name + ")) = "
                      + to_string(ss));
      }
    }
  }
  return out;
}

}  // namespace hopfforge
