#include "hopfforge/tensor.hpp"

namespace hopfforge {

TensorPoly outer(const FreePoly& p, const FreePoly& q) {
  p.check_compatible(q);
  TensorPoly out(p.alphabet(), p.field());
  for (const auto& [u, a] : p.terms()) {
    for (const auto& [v, b] : q.terms()) {
      out.add_term({u, v}, a * b);
    }
  }
  return out;
}

TensorPoly swap(const TensorPoly& t) {
  TensorPoly out(t.alphabet(), t.field());
  for (const auto& [key, c] : t.terms()) {
    out.add_term({key[1], key[0]}, c);
  }
  return out;
}

}  // namespace hopfforge
