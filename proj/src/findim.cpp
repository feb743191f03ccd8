#include "hopfforge/findim.hpp"

#include <map>

#include "hopfforge/errors.hpp"
#include "hopfforge/text.hpp"

namespace hopfforge {

StructureTable::StructureTable(std::size_t n, Field f)
    : dim(n),
      field(f),
      mul_data(n * n * n, Scalar(f, 0)),
      unit(n, Scalar(f, 0)),
      delta_data(n * n * n, Scalar(f, 0)),
      counit(n, Scalar(f, 0)) {}

namespace {

struct Entry {
  std::size_t a;
  std::size_t b;
  Scalar c;
};

// Nonzero (j, k, c) of a rank-3 tensor slice at fixed first index.
std::vector<std::vector<Entry>> sparse_slices(const StructureTable& T,
                                              bool of_delta) {
  const std::size_t n = T.dim;
  std::vector<std::vector<Entry>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = of_delta ? T.delta(i, j, k) : T.mul(i, j, k);
        if (!c.is_zero()) {
          out[i].push_back({j, k, c});
        }
      }
    }
  }
  return out;
}

std::string idx(std::size_t i) { return "e" + std::to_string(i); }

void check_sizes(const StructureTable& T) {
  const std::size_t n = T.dim;
  if (T.mul_data.size() != n * n * n || T.delta_data.size() != n * n * n
      || T.unit.size() != n || T.counit.size() != n
      || (T.antipode && (T.antipode->rows() != n || T.antipode->cols() != n))) {
    throw PreconditionFailed("structure table sizes do not match dim "
                             + std::to_string(n));
  }
}

}  // namespace

std::vector<CheckResult> check_bialgebra_axioms(const StructureTable& T) {
  check_sizes(T);
  const std::size_t n = T.dim;
  const Field F = T.field;
  const Scalar zero(F, 0);
  const Scalar one(F, 1);
  auto kron = [&](std::size_t a, std::size_t b) { return a == b ? one : zero; };

  CheckResult assoc{"associativity", CheckStatus::pass, ""};
  for (std::size_t i = 0; i < n && assoc.status == CheckStatus::pass; ++i) {
    for (std::size_t j = 0; j < n && assoc.status == CheckStatus::pass; ++j) {
      for (std::size_t k = 0; k < n && assoc.status == CheckStatus::pass; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
          Scalar lhs = zero;
          Scalar rhs = zero;
          for (std::size_t a = 0; a < n; ++a) {
            lhs += T.mul(i, j, a) * T.mul(a, k, r);
            rhs += T.mul(j, k, a) * T.mul(i, a, r);
          }
          if (!(lhs == rhs)) {
            assoc.status = CheckStatus::fail;
            assoc.detail = "(" + idx(i) + " " + idx(j) + ") " + idx(k)
                           + " != " + idx(i) + " (" + idx(j) + " " + idx(k)
                           + ")";
            break;
          }
        }
      }
    }
  }

  CheckResult unit{"unit", CheckStatus::pass, ""};
  for (std::size_t i = 0; i < n && unit.status == CheckStatus::pass; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      Scalar left = zero;
      Scalar right = zero;
      for (std::size_t a = 0; a < n; ++a) {
        left += T.unit[a] * T.mul(a, i, r);
        right += T.unit[a] * T.mul(i, a, r);
      }
      if (!(left == kron(i, r)) || !(right == kron(i, r))) {
        unit.status = CheckStatus::fail;
        unit.detail = "1 * " + idx(i) + " != " + idx(i);
        break;
      }
    }
  }

  CheckResult coassoc{"coassociativity", CheckStatus::pass, ""};
  for (std::size_t i = 0; i < n && coassoc.status == CheckStatus::pass; ++i) {
    for (std::size_t a = 0; a < n && coassoc.status == CheckStatus::pass; ++a) {
      for (std::size_t b = 0; b < n && coassoc.status == CheckStatus::pass; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          Scalar lhs = zero;
          Scalar rhs = zero;
          for (std::size_t p = 0; p < n; ++p) {
            lhs += T.delta(i, p, c) * T.delta(p, a, b);
            rhs += T.delta(i, a, p) * T.delta(p, b, c);
          }
          if (!(lhs == rhs)) {
            coassoc.status = CheckStatus::fail;
            coassoc.detail = "at " + idx(i);
            break;
          }
        }
      }
    }
  }

  CheckResult counit{"counit", CheckStatus::pass, ""};
  for (std::size_t i = 0; i < n && counit.status == CheckStatus::pass; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Scalar left = zero;
      Scalar right = zero;
      for (std::size_t p = 0; p < n; ++p) {
        left += T.counit[p] * T.delta(i, p, k);
        right += T.counit[p] * T.delta(i, k, p);
      }
      if (!(left == kron(i, k)) || !(right == kron(i, k))) {
        counit.status = CheckStatus::fail;
        counit.detail = "at " + idx(i);
        break;
      }
    }
  }

  CheckResult compat{"compatibility", CheckStatus::pass, ""};
  auto m_rows = sparse_slices(T, false);
  auto d_rows = sparse_slices(T, true);
  // m_pair[p][r] lists the nonzero (k, c) of e_p e_r.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> m_pair(
      n, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (const Entry& e : m_rows[p]) {
      m_pair[p][e.a].emplace_back(e.b, e.c);
    }
  }
  for (std::size_t i = 0; i < n && compat.status == CheckStatus::pass; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> lhs(n * n, zero);
      std::vector<Scalar> rhs(n * n, zero);
      for (const Entry& e : m_rows[i]) {
        if (e.a != j) {
          continue;
        }
        for (const Entry& d : d_rows[e.b]) {
          lhs[d.a * n + d.b] += e.c * d.c;
        }
      }
      for (const Entry& di : d_rows[i]) {
        for (const Entry& dj : d_rows[j]) {
          Scalar c = di.c * dj.c;
          for (const auto& [a, ca] : m_pair[di.a][dj.a]) {
            for (const auto& [b, cb] : m_pair[di.b][dj.b]) {
              rhs[a * n + b] += c * ca * cb;
            }
          }
        }
      }
      if (lhs != rhs) {
        compat.status = CheckStatus::fail;
        compat.detail = "Delta(" + idx(i) + " " + idx(j) + ") != Delta("
                        + idx(i) + ") Delta(" + idx(j) + ") at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
      Scalar e_prod = zero;
      for (std::size_t k = 0; k < n; ++k) {
        e_prod += T.mul(i, j, k) * T.counit[k];
      }
      if (!(e_prod == T.counit[i] * T.counit[j])) {
        compat.status = CheckStatus::fail;
        compat.detail = "eps(" + idx(i) + " " + idx(j) + ") != eps(" + idx(i)
                        + ") eps(" + idx(j) + ") at (" + std::to_string(i)
                        + "," + std::to_string(j) + ")";
        break;
      }
    }
  }
  if (compat.status == CheckStatus::pass) {
    Scalar e_unit = zero;
    for (std::size_t a = 0; a < n; ++a) {
      e_unit += T.unit[a] * T.counit[a];
    }
    if (!e_unit.is_one()) {
      compat.status = CheckStatus::fail;
      compat.detail = "eps(1) != 1";
    }
    for (std::size_t b = 0; b < n && compat.status == CheckStatus::pass; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Scalar d = zero;
        for (std::size_t a = 0; a < n; ++a) {
          d += T.unit[a] * T.delta(a, b, c);
        }
        if (!(d == T.unit[b] * T.unit[c])) {
          compat.status = CheckStatus::fail;
          compat.detail = "Delta(1) != 1 (#) 1";
          break;
        }
      }
    }
  }

  std::vector<CheckResult> out{assoc, unit, coassoc, counit, compat};
  if (T.antipode) {
    CheckResult s{"antipode", CheckStatus::pass, ""};
    if (!satisfies_antipode_axiom(T, *T.antipode)) {
      s.status = CheckStatus::fail;
      s.detail = "m(id (#) S)Delta or m(S (#) id)Delta differs from eta eps";
    }
    out.push_back(s);
  }
  return out;
}

namespace {

// Coefficient matrix of the convolution identities: row (side, i, r),
// column (l, q) for the unknown S(l, q).
Matrix antipode_system(const StructureTable& T) {
  const std::size_t n = T.dim;
  Matrix A(2 * n * n, n * n, T.field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& d = T.delta(i, p, q);
        if (d.is_zero()) {
          continue;
        }
        for (std::size_t l = 0; l < n; ++l) {
          for (std::size_t r = 0; r < n; ++r) {
            // e_p S(e_q): S(l, q) e_p e_l.
            if (const Scalar& m = T.mul(p, l, r); !m.is_zero()) {
              A.at(i * n + r, l * n + q) += d * m;
            }
            // S(e_p) e_q: S(l, p) e_l e_q.
            if (const Scalar& m = T.mul(l, q, r); !m.is_zero()) {
              A.at(n * n + i * n + r, l * n + p) += d * m;
            }
          }
        }
      }
    }
  }
  return A;
}

std::vector<Scalar> antipode_rhs(const StructureTable& T) {
  const std::size_t n = T.dim;
  std::vector<Scalar> b(2 * n * n, Scalar(T.field, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      b[i * n + r] = T.counit[i] * T.unit[r];
      b[n * n + i * n + r] = T.counit[i] * T.unit[r];
    }
  }
  return b;
}

}  // namespace

bool satisfies_antipode_axiom(const StructureTable& T, const Matrix& S) {
  check_sizes(T);
  const std::size_t n = T.dim;
  if (S.rows() != n || S.cols() != n) {
    return false;
  }
  Matrix A = antipode_system(T);
  std::vector<Scalar> b = antipode_rhs(T);
  for (std::size_t row = 0; row < A.rows(); ++row) {
    Scalar acc(T.field, 0);
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t q = 0; q < n; ++q) {
        if (!A.at(row, l * n + q).is_zero()) {
          acc += A.at(row, l * n + q) * S.at(l, q);
        }
      }
    }
    if (!(acc == b[row])) {
      return false;
    }
  }
  return true;
}

std::optional<Matrix> solve_antipode(const StructureTable& T) {
  check_sizes(T);
  const std::size_t n = T.dim;
  auto sol = solve_linear_system(antipode_system(T), antipode_rhs(T));
  if (!sol) {
    return std::nullopt;
  }
  Matrix S(n, n, T.field);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t q = 0; q < n; ++q) {
      S.at(l, q) = sol->x[l * n + q];
    }
  }
  return S;
}

std::optional<StructureTable> compile(const HopfPresentation& P,
                                      std::size_t d) {
  const RewriteSystem& R = P.rewrite();
  if (d + 1 > R.degree_bound()) {
    throw DegreeOverflow(d + 1, R.degree_bound());
  }
  std::vector<Word> basis = R.basis_up_to_degree(d);
  if (R.basis_up_to_degree(d + 1).size() != basis.size()) {
    return std::nullopt;
  }
  const std::size_t n = basis.size();
  std::map<Word, std::size_t, DegLex> index;
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(basis[i], i);
  }
  auto coord = [&](const Word& w) {
    auto it = index.find(w);
    if (it == index.end()) {
      throw PreconditionFailed("normal word " + word_to_string(w, *P.alphabet())
                               + " escapes the compiled basis");
    }
    return it->second;
  };

  StructureTable T(n, P.field());
  for (std::size_t i = 0; i < n; ++i) {
    T.basis.push_back(word_to_string(basis[i], *P.alphabet()));
  }
  if (n > 0) {
    T.unit[coord(Word{})] = Scalar(P.field(), 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Multiply letter by letter so no intermediate word exceeds d + 1.
      FreePoly prod = P.word(basis[i]);
      for (GenId g : basis[j]) {
        prod = P.nf(prod * P.generator(g));
      }
      for (const auto& [w, c] : prod.terms()) {
        T.mul(i, j, coord(w)) = c;
      }
    }
    FreePoly e = P.word(basis[i]);
    TensorPoly de = delta_of(P, e);
    for (const auto& [key, c] : de.terms()) {
      T.delta(i, coord(key[0]), coord(key[1])) = c;
    }
    T.counit[i] = eps_of(P, e);
  }
  if (P.has_antipode()) {
    Matrix S(n, n, P.field());
    for (std::size_t i = 0; i < n; ++i) {
      FreePoly si = s_of(P, P.word(basis[i]));
      for (const auto& [w, c] : si.terms()) {
        S.at(coord(w), i) = c;
      }
    }
    T.antipode = std::move(S);
  }
  return T;
}

StructureTable restrict_table(const StructureTable& T,
                              const std::vector<std::size_t>& subset) {
  const std::size_t k = subset.size();
  StructureTable out(k, T.field);
  for (std::size_t a = 0; a < k; ++a) {
    out.unit[a] = T.unit[subset[a]];
    out.counit[a] = T.counit[subset[a]];
    if (!T.basis.empty()) {
      out.basis.push_back(T.basis[subset[a]]);
    }
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        out.mul(a, b, c) = T.mul(subset[a], subset[b], subset[c]);
        out.delta(a, b, c) = T.delta(subset[a], subset[b], subset[c]);
      }
    }
  }
  return out;
}

namespace {

bool closed(const StructureTable& T, const std::vector<bool>& in) {
  const std::size_t n = T.dim;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) {
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!T.delta(i, j, k).is_zero() && (!in[j] || !in[k])) {
          return false;
        }
        if (in[j] && !T.mul(i, j, k).is_zero() && !in[k]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Visits the size-k subsets of {0..n-1} in lexicographic order until fn
// returns true.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) {
    c[i] = i;
  }
  while (true) {
    if (fn(c)) {
      return true;
    }
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) {
      --i;
    }
    if (i == 0) {
      return false;
    }
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) {
      c[j] = c[j - 1] + 1;
    }
  }
}

}  // namespace

std::optional<ProbeResult> coreflection_probe(const StructureTable& T,
                                              std::size_t max_dim) {
  check_sizes(T);
  const std::size_t n = T.dim;
  if (n > max_dim) {
    throw PreconditionFailed("dimension " + std::to_string(n)
                             + " exceeds the exhaustive probe limit "
                             + std::to_string(max_dim));
  }
  std::vector<bool> unit_support(n);
  for (std::size_t i = 0; i < n; ++i) {
    unit_support[i] = !T.unit[i].is_zero();
  }
  std::optional<ProbeResult> found;
  for (std::size_t k = n; k >= 1 && !found; --k) {
    for_each_combination(n, k, [&](const std::vector<std::size_t>& subset) {
      std::vector<bool> in(n, false);
      for (std::size_t i : subset) {
        in[i] = true;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (unit_support[i] && !in[i]) {
          return false;
        }
      }
      if (!closed(T, in)) {
        return false;
      }
      if (auto S = solve_antipode(restrict_table(T, subset))) {
        found = ProbeResult{subset, std::move(*S)};
        return true;
      }
      return false;
    });
  }
  return found;
}

}  // namespace hopfforge
