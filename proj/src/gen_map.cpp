#include "hopfforge/gen_map.hpp"

#include <string>

#include "hopfforge/errors.hpp"

namespace hopfforge {

GenMap::GenMap(AlphabetPtr source, AlphabetPtr target, Field field,
               std::vector<FreePoly> images, MapMode mode)
    : source_(std::move(source)),
      target_(std::move(target)),
      field_(field),
      images_(std::move(images)),
      mode_(mode) {
  if (images_.size() != source_->size()) {
    throw PreconditionFailed("generator map has "
                             + std::to_string(images_.size())
                             + " images for " + std::to_string(source_->size())
                             + " generators");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!same_alphabet(images_[i].alphabet(), target_)) {
      throw AlphabetMismatch("image of '" + source_->name(i)
                             + "' is not over the target alphabet");
    }
    if (images_[i].field() != field_) {
      throw FieldMismatch("image of '" + source_->name(i)
                          + "' is over a different field");
    }
  }
}

GenMap GenMap::identity(AlphabetPtr alphabet, Field field) {
  std::vector<FreePoly> images;
  images.reserve(alphabet->size());
  for (GenId g = 0; g < alphabet->size(); ++g) {
    images.push_back(FreePoly::generator(alphabet, field, g));
  }
  return GenMap(alphabet, alphabet, field, std::move(images));
}

namespace {

void check_source(const GenMap& phi, const FreePoly& p) {
  if (!same_alphabet(phi.source(), p.alphabet())) {
    throw AlphabetMismatch("polynomial is not over the map's source alphabet");
  }
  if (phi.field() != p.field()) {
    throw FieldMismatch("polynomial field differs from the map's field");
  }
}

}  // namespace

FreePoly apply_map(const GenMap& phi, const FreePoly& p,
                   const PolyReducer& reduce) {
  check_source(phi, p);
  FreePoly out(phi.target(), phi.field());
  const bool anti = phi.mode() == MapMode::anti_homomorphic;
  for (const auto& [w, c] : p.terms()) {
    FreePoly image = FreePoly::constant(phi.target(), phi.field(), 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const FreePoly& g = phi.image(anti ? w[w.size() - 1 - i] : w[i]);
      image = image * g;
      if (reduce) {
        image = reduce(image);
      }
    }
    out += image * c;
  }
  return out;
}

GenMap compose(const GenMap& outer, const GenMap& inner,
               const PolyReducer& reduce) {
  if (!same_alphabet(inner.target(), outer.source())) {
    throw AlphabetMismatch("cannot compose: inner target is not outer source");
  }
  std::vector<FreePoly> images;
  images.reserve(inner.source()->size());
  for (const FreePoly& img : inner.images()) {
    images.push_back(apply_map(outer, img, reduce));
  }
  MapMode mode = outer.mode() == inner.mode() ? MapMode::homomorphic
                                              : MapMode::anti_homomorphic;
  return GenMap(inner.source(), outer.target(), outer.field(),
                std::move(images), mode);
}

TensorPoly apply_tensor_map(const std::vector<TensorPoly>& table,
                            const FreePoly& p, const TensorReducer& reduce) {
  if (p.alphabet() && table.size() != p.alphabet()->size()) {
    throw PreconditionFailed("tensor table does not cover the alphabet");
  }
  TensorPoly out(p.alphabet(), p.field());
  for (const auto& [w, c] : p.terms()) {
    TensorPoly image = TensorPoly::unit(p.alphabet(), p.field());
    for (GenId g : w) {
      image = image * table.at(g);
      if (reduce) {
        image = reduce(image);
      }
    }
    out += image * c;
  }
  return out;
}

Scalar apply_character(const std::vector<Scalar>& table, const FreePoly& p) {
  if (p.alphabet() && table.size() != p.alphabet()->size()) {
    throw PreconditionFailed("scalar table does not cover the alphabet");
  }
  Scalar out = p.zero_scalar();
  for (const auto& [w, c] : p.terms()) {
    Scalar v = c;
    for (GenId g : w) {
      v *= table.at(g);
    }
    out += v;
  }
  return out;
}

}  // namespace hopfforge
