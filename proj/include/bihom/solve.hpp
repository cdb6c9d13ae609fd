#pragma once

// Solution spaces of linear conditions on n×n maps.

#include "bihom/algebra.hpp"

#include <functional>
#include <vector>

namespace bihom {

// Linear in the map: residual(a·f + b·g) = a·residual(f) + b·residual(g).
using MapResidual = std::function<Vector(const LinearMap&)>;

// Canonical basis of {d : residual(d) = 0}, searched inside span(basis) (all
// n×n maps when basis is empty). Elements are indexed by the row-major
// flattening of their matrices and returned in RREF order.
std::vector<LinearMap> solve_maps(std::size_t n, const MapResidual& residual, const std::vector<LinearMap>& basis = {});

// All n² unit maps E_{qp}, in flattening order.
std::vector<LinearMap> unit_maps(std::size_t n);

LinearMap combine(const std::vector<LinearMap>& basis, std::span<const Scalar> coeffs);

// Canonical (RREF) basis of the span of maps, compared through their flattening.
std::vector<LinearMap> canonical_maps(std::size_t n, const std::vector<LinearMap>& maps);
bool in_span(const std::vector<LinearMap>& basis, const LinearMap& m);
std::vector<LinearMap> intersect(std::size_t n, const std::vector<LinearMap>& a, const std::vector<LinearMap>& b);
bool same_span(std::size_t n, const std::vector<LinearMap>& a, const std::vector<LinearMap>& b);

}  // namespace bihom
