#pragma once

// Centralizers, central derivations and the (α,β)-centroid.
//
// ψ is a centroid element when it commutes with α, β and, for each product,
//   ψ(x)•αβ(y) = ψ(x)•ψ(y) = αβ(x)•ψ(y).
// The outer equality is linear in ψ; the middle term makes the set a
// quadratic variety. It is computed in two stages: the linear space cut out
// by the linear conditions, then the quadratic obstruction on that space.

#include "bihom/checks.hpp"
#include "bihom/quadratic.hpp"
#include "bihom/tables.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bihom {

struct CentralizerSpace {
    std::vector<Vector> generators;
    std::vector<Vector> basis;
};

// Linear conditions αβ(x)•h = 0 and h•αβ(x) = 0, one row per coordinate, in
// the n coordinates of x.
Matrix centralizer_system(const BiHomTrialgebra& a, const std::vector<Vector>& h);

// Z_A(H); with restrict_to_h only x ∈ span H is searched.
CentralizerSpace centralizer(const BiHomTrialgebra& a, const std::vector<Vector>& h, bool restrict_to_h = false);

// Which equality the ⊢ chain uses: ψ(x)⊢αβ(y), or ψ(x)⊢αψ(y) as an alternative reading.
enum class CentroidReading { Standard, LiteralRight };

CheckReport is_centroid_element(const BiHomTrialgebra& a, const LinearMap& psi,
                                CentroidReading reading = CentroidReading::Standard);

// Stage 1: the linear conditions, searched inside span(within) when given.
std::vector<LinearMap> centroid_linear_space(const BiHomTrialgebra& a, const std::vector<LinearMap>* within = nullptr);

// Stage 2: ψ = Σ tₐBₐ substituted into ψ(x)•ψ(y) − ψ(x)•αβ(y), one polynomial per
// product, basis pair and coordinate, normalized and without repeats.
std::vector<QuadPoly> centroid_obstruction(const BiHomTrialgebra& a, const std::vector<LinearMap>& basis);

struct CentroidSpace {
    std::string algebra;
    std::vector<LinearMap> linear_basis;
    std::vector<QuadPoly> obstruction;
    bool identically_zero = true;
    // A largest linear subspace of maps inside the variety, RREF-canonical.
    std::vector<LinearMap> max_subspace;
    // Exact common zero set in the parameters, when there are at most two.
    std::optional<std::vector<VanishingComponent>> description;

    std::size_t parameters() const { return linear_basis.size(); }
    std::size_t dim() const { return max_subspace.size(); }
};

// Throws ObstructionTooLarge when the largest linear subspace cannot be
// determined exactly.
CentroidSpace centroid_space(const BiHomTrialgebra& a, const std::vector<LinearMap>* within = nullptr);

// Maps with image in Z_A(A) that vanish on every product e_i•e_j.
std::vector<LinearMap> central_derivations(const BiHomTrialgebra& a);

struct CentroidRow {
    std::string algebra;
    std::size_t computed_dim = 0;
    std::size_t stage1_dim = 0;
    bool identically_zero = true;
    std::optional<std::size_t> paper_dim;
    TableStatus status = TableStatus::PaperSilent;
    std::vector<LinearMap> basis;
    std::vector<ClaimedEntry> claims;
};

CentroidRow centroid_table_row(const BiHomTrialgebra& a, const std::optional<PaperRow>& paper);

struct CentDerFinding {
    std::string check;
    LinearMap phi;
    LinearMap d;
    std::string detail;
};

struct CentDerReport {
    std::string algebra;
    std::size_t centroid_elements = 0;
    std::size_t derivations = 0;
    std::vector<LinearMap> central;        // C(A)
    std::vector<LinearMap> cent_cap_der;   // largest linear subspace of Cent ∩ Der
    bool cent_cap_der_linear = true;       // Cent ∩ Der is itself a linear space
    bool central_equals_cent_cap_der = false;
    std::vector<CentDerFinding> hard_failures;
    std::vector<CentDerFinding> observations;

    bool clean() const { return hard_failures.empty(); }
};

CentDerReport cent_der_property_suite(const BiHomTrialgebra& a);

}  // namespace bihom
