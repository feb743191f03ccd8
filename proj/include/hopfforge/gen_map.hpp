#pragma once

#include <functional>
#include <vector>

#include "hopfforge/free_poly.hpp"
#include "hopfforge/tensor.hpp"

namespace hopfforge {

enum class MapMode { homomorphic, anti_homomorphic };

// A map out of a free algebra determined by the images of its generators.
// Homomorphic extension sends g1...gn to phi(g1)...phi(gn); anti-homomorphic
// extension sends it to phi(gn)...phi(g1). Both send 1 to 1.
class GenMap {
 public:
  GenMap() = default;
  // Throws PreconditionFailed unless there is exactly one image per source
  // generator, each over `target`.
  GenMap(AlphabetPtr source, AlphabetPtr target, Field field,
         std::vector<FreePoly> images,
         MapMode mode = MapMode::homomorphic);

  static GenMap identity(AlphabetPtr alphabet, Field field);

  const AlphabetPtr& source() const noexcept { return source_; }
  const AlphabetPtr& target() const noexcept { return target_; }
  Field field() const noexcept { return field_; }
  MapMode mode() const noexcept { return mode_; }
  const std::vector<FreePoly>& images() const noexcept { return images_; }
  const FreePoly& image(GenId g) const { return images_.at(g); }

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  Field field_;
  std::vector<FreePoly> images_;
  MapMode mode_ = MapMode::homomorphic;
};

// Applied after every partial product when extending a map, so that images
// can be computed inside a quotient without word-length blowup.
using PolyReducer = std::function<FreePoly(const FreePoly&)>;
using TensorReducer = std::function<TensorPoly(const TensorPoly&)>;

FreePoly apply_map(const GenMap& phi, const FreePoly& p,
                   const PolyReducer& reduce = {});

// outer o inner, on generator tables. Modes compose like signs: two
// anti-homomorphisms give a homomorphism.
GenMap compose(const GenMap& outer, const GenMap& inner,
               const PolyReducer& reduce = {});

// The multiplicative extension of a generator -> tensor table.
TensorPoly apply_tensor_map(const std::vector<TensorPoly>& table,
                            const FreePoly& p,
                            const TensorReducer& reduce = {});

// The multiplicative extension of a generator -> scalar table (a character).
Scalar apply_character(const std::vector<Scalar>& table, const FreePoly& p);

}  // namespace hopfforge
