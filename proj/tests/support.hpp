#pragma once

// Random inputs and independent reference computations for the tests.

#include "bihom/algebra.hpp"

#include <random>
#include <vector>

namespace testing {

using bihom::BiHomTrialgebra;
using bihom::LinearMap;
using bihom::Matrix;
using bihom::Scalar;
using bihom::Vector;

// Gaussian rationals with small numerators and denominators; zero with probability `zero`.
Scalar random_scalar(std::mt19937& rng, double zero = 0.3);
Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double zero = 0.3);
// Entries in {-2..2}, retried until invertible.
LinearMap random_invertible(std::mt19937& rng, std::size_t n);
LinearMap random_integer_map(std::mt19937& rng, std::size_t n, int bound);

// Fraction-free Bareiss elimination on a copy; returns the rank.
std::size_t naive_rank(const Matrix& m);
// Determinant by cofactor expansion.
Scalar naive_det(const Matrix& m);
// Inverse by adjugate; requires a nonzero determinant.
Matrix naive_inverse(const Matrix& m);

// Derivation conditions written as index sums over the structure constants.
bool index_form_derivation(const BiHomTrialgebra& a, const LinearMap& d);

// All invertible maps with entries in {-1, 0, 1} that are automorphisms.
std::vector<LinearMap> automorphisms_pm1(const BiHomTrialgebra& a);

// Two-dimensional algebra carrying the Rota-Baxter example:
// e1⊣e2 = e2⊣e1 = e1⊢e2 = e1⊥e2 = e2⊥e2 = e1, α(e2) = β(e2) = e1.
BiHomTrialgebra example_algebra();

}  // namespace testing
