#pragma once

#include <cstdint>
#include <random>

#include "superreal/lie.hpp"
#include "superreal/super_linear.hpp"

namespace superreal {

// Seeded draws with coefficients in {0, 1, -1, i, -i, 1+i, 1-i}.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  GaussianRational scalar();
  GaussianRational nonzero_scalar();
  // Homogeneous element; soul_only drops the constant term.
  GrassmannElement element(GrassmannSpec spec, int parity, bool soul_only = false);
  // Diagonal blocks even, off-diagonal blocks odd.
  GrassmannMatrix even_matrix(SuperDim dim, GrassmannSpec spec, bool soul_only = false);
  // Off-diagonal blocks only.
  GrassmannMatrix odd_block_matrix(SuperDim dim, GrassmannSpec spec);
  GrassmannMatrix block_diagonal_matrix(SuperDim dim, GrassmannSpec spec);
  // Even matrix with invertible body blocks; redraws until invertible.
  GrassmannMatrix invertible_point(SuperDim dim, GrassmannSpec spec);
  ScalarMatrix scalar_matrix(std::size_t rows, std::size_t cols);
  // sum a_k e_k with a_k of parity |e_k|, as a matrix.
  GrassmannMatrix lie_valued(const LieSuperAlgebra& g, GrassmannSpec spec, bool soul_only = false);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace superreal
