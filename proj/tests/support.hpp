#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfforge/io.hpp"
#include "hopfforge/presentation.hpp"
#include "hopfforge/text.hpp"

namespace test_support {

using namespace hopfforge;

inline std::filesystem::path data_dir() { return HOPFFORGE_DATA_DIR; }

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PresentationPtr load(const std::string& name,
                            std::optional<std::size_t> bound = {}) {
  PresentationOptions opts;
  opts.degree_bound = bound;
  return parse_presentation(read_text(data_dir() / name), opts);
}

inline StructureTable load_table(const std::string& name) {
  return parse_table(read_text(data_dir() / name));
}

inline std::vector<std::filesystem::path> data_files(const std::string& ext) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(data_dir())) {
    if (e.path().extension() == ext) {
      out.push_back(e.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline FreePoly poly(const HopfPresentation& P, const std::string& text) {
  return parse_poly(text, P.alphabet(), P.field());
}

inline TensorPoly tensor(const HopfPresentation& P, const std::string& text) {
  return parse_tensor(text, P.alphabet(), P.field());
}

// Uniform word over the alphabet with length in [0, max_len].
inline Word random_word(std::mt19937& rng, std::size_t alphabet_size,
                        std::size_t max_len) {
  Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  if (alphabet_size == 0) {
    w.clear();
    return w;
  }
  std::uniform_int_distribution<GenId> letter(0, alphabet_size - 1);
  for (GenId& g : w) {
    g = letter(rng);
  }
  return w;
}

// A few words with small nonzero integer coefficients.
inline FreePoly random_poly(std::mt19937& rng, const AlphabetPtr& alpha,
                            Field field, std::size_t max_len,
                            std::size_t max_terms = 3) {
  FreePoly p(alpha, field);
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (std::size_t i = terms(rng); i > 0; --i) {
    long c = coeff(rng);
    p.add_term(random_word(rng, alpha->size(), max_len),
               Scalar(field, c == 0 ? 1 : c));
  }
  return p;
}

// A normal word of length <= d, uniformly among the basis words.
inline Word random_normal_word(std::mt19937& rng, const HopfPresentation& P,
                               std::size_t d) {
  auto basis = P.rewrite().basis_up_to_degree(d);
  return basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
}

}  // namespace test_support
