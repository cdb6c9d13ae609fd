#pragma once

// Polynomials of degree ≤ 2 in parameters t1..tm and their common zeros.

#include "bihom/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bihom {

// tᵀ·quad·t + lin·t + constant, quad symmetric.
struct QuadPoly {
    Matrix quad;
    Vector lin;
    Scalar constant;

    static QuadPoly zero(std::size_t m);

    std::size_t vars() const { return lin.size(); }
    bool is_zero() const;
    bool is_homogeneous_quadratic() const;
    Scalar operator()(std::span<const Scalar> t) const;

    // Adds c·t_a·t_b, splitting the coefficient symmetrically.
    void add_monomial(std::size_t a, std::size_t b, const Scalar& c);

    // Substitution t = p0 + U·s, where the columns of U are the given vectors.
    QuadPoly substitute(std::span<const Scalar> p0, const std::vector<Vector>& directions) const;

    // Monomial keys "t1*t2", "t1^2", "t1", "1" (1-based) mapped to nonzero coefficients.
    std::map<std::string, Scalar> coefficients() const;
    std::string str() const;

    friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

// Nonzero polynomials, each scaled so its first nonzero coefficient is 1, without repeats.
std::vector<QuadPoly> normalize(const std::vector<QuadPoly>& polys);

// Basis of a largest linear subspace W ⊆ ℚ(i)^m on which every polynomial
// vanishes identically. Empty when only {0} qualifies; nullopt when the origin
// itself is not a common zero. Throws ObstructionTooLarge when the quadratic
// forms left after all reductions have rank ≥ 3.
std::optional<std::vector<Vector>> max_linear_subspace(std::size_t m, const std::vector<QuadPoly>& polys);

struct VanishingComponent {
    enum class Kind { Everything, Line, Point, Conic, Finite };
    Kind kind = Kind::Everything;
    Vector point;                     // Line: base point; Point: coordinates
    Vector direction;                 // Line
    std::vector<QuadPoly> equations;  // Conic, Finite: the defining polynomials
};

std::string_view kind_name(VanishingComponent::Kind k);

// Exact common zero set over ℚ(i) for m ≤ 2. Finite components whose points
// are not all in ℚ(i) are kept as their defining equations.
std::vector<VanishingComponent> describe_vanishing_set(std::size_t m, const std::vector<QuadPoly>& polys);

}  // namespace bihom
