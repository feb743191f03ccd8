#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/free_poly.hpp"
#include "hopfforge/gen_map.hpp"
#include "hopfforge/rewrite.hpp"
#include "hopfforge/tensor.hpp"

namespace hopfforge {

// Raw ingredients of a finitely presented bialgebra: k<X>/I with Delta and
// epsilon given on generators, and optionally an antipode table.
struct PresentationData {
  AlphabetPtr alphabet;
  Field field;
  std::vector<FreePoly> relations;
  std::vector<TensorPoly> delta;    // one entry per generator
  std::vector<Scalar> counit;       // one entry per generator
  std::optional<std::vector<FreePoly>> antipode;
  std::optional<std::size_t> degree_bound;
};

// A bialgebra (no antipode table) or Hopf algebra presentation together with
// its completed rewrite system. Immutable once built.
class HopfPresentation {
 public:
  // Throws PreconditionFailed when a table does not cover the alphabet and
  // forwards completion errors.
  explicit HopfPresentation(PresentationData data);

  // 2 * (max relation degree) + 4.
  static std::size_t default_degree_bound(const std::vector<FreePoly>& relations);

  const AlphabetPtr& alphabet() const noexcept { return data_.alphabet; }
  Field field() const noexcept { return data_.field; }
  const std::vector<FreePoly>& relations() const noexcept {
    return data_.relations;
  }
  const std::vector<TensorPoly>& delta_table() const noexcept {
    return data_.delta;
  }
  const std::vector<Scalar>& counit_table() const noexcept {
    return data_.counit;
  }
  const std::optional<std::vector<FreePoly>>& antipode_table() const noexcept {
    return data_.antipode;
  }
  bool has_antipode() const noexcept { return data_.antipode.has_value(); }
  std::size_t degree_bound() const noexcept { return rewrite_.degree_bound(); }
  const RewriteSystem& rewrite() const noexcept { return rewrite_; }
  const PresentationData& data() const noexcept { return data_; }

  FreePoly one() const { return FreePoly::constant(alphabet(), field(), 1); }
  FreePoly generator(GenId g) const {
    return FreePoly::generator(alphabet(), field(), g);
  }
  FreePoly word(const Word& w) const {
    return FreePoly::monomial(alphabet(), field(), w);
  }

  FreePoly nf(const FreePoly& p) const { return rewrite_.normal_form(p); }
  TensorPoly nf(const TensorPoly& t) const {
    return rewrite_.tensor_normal_form(t);
  }
  Tensor3 nf(const Tensor3& t) const { return rewrite_.tensor_normal_form(t); }

  // Same data and same completed system.
  friend bool operator==(const HopfPresentation& lhs,
                         const HopfPresentation& rhs);

 private:
  PresentationData data_;
  RewriteSystem rewrite_;
};

using PresentationPtr = std::shared_ptr<const HopfPresentation>;

PresentationPtr make_presentation(PresentationData data);

// Multiplicative extension of the Delta table, in normal form.
TensorPoly delta_of(const HopfPresentation& P, const FreePoly& p);
// Multiplicative extension of the counit table.
Scalar eps_of(const HopfPresentation& P, const FreePoly& p);
// Anti-multiplicative extension of the antipode table, in normal form.
// Throws PreconditionFailed without an antipode table.
FreePoly s_of(const HopfPresentation& P, const FreePoly& p);

// m(id (x) S)Delta(p) and m(S (x) id)Delta(p), in normal form.
FreePoly antipode_left_convolution(const HopfPresentation& P, const FreePoly& p);
FreePoly antipode_right_convolution(const HopfPresentation& P, const FreePoly& p);

// Both convolution identities m(id(x)S)Delta = m(S(x)id)Delta = eta eps at p.
// Requires 2 * deg(p) <= D.
bool antipode_axiom_check(const HopfPresentation& P, const FreePoly& p);

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  Confluence confluence = Confluence::full;
  std::size_t degree_bound = 0;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

// Generator-level bialgebra and Hopf checks, all modulo the rewrite system:
// relations, coassociativity, counit, coideal, hopf-ideal, antipode.
// Throws DegreeOverflow when D < 2 * max(deg Delta-images, deg relations).
ValidationReport validate(const HopfPresentation& P);

// Basis words w of length <= d with Delta(w) = w (x) w and eps(w) = 1.
// Requires 2 * d <= D.
std::vector<Word> grouplikes(const HopfPresentation& P, std::size_t d);

// A bialgebra map between presentations, given on generators.
class HopfMap {
 public:
  HopfMap() = default;
  HopfMap(PresentationPtr source, PresentationPtr target,
          std::vector<FreePoly> images);

  static HopfMap identity(const PresentationPtr& P);

  const PresentationPtr& source() const noexcept { return source_; }
  const PresentationPtr& target() const noexcept { return target_; }
  const GenMap& gen_map() const noexcept { return map_; }
  const FreePoly& image(GenId g) const { return map_.image(g); }

  // Image of a source element, in the target's normal form.
  FreePoly operator()(const FreePoly& p) const;

 private:
  PresentationPtr source_;
  PresentationPtr target_;
  GenMap map_;
};

// outer o inner.
HopfMap compose(const HopfMap& outer, const HopfMap& inner);

struct MapCheck {
  bool ok = true;
  std::string failure;
  explicit operator bool() const { return ok; }
};

// Relations go into the target ideal; Delta, epsilon and (when both sides
// have one) S commute with the map on every source generator.
MapCheck check_hopf_map(const HopfMap& phi);

}  // namespace hopfforge
