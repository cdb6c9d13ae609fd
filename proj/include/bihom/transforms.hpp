#pragma once

// Morphisms, transport of structure and the constructions that build new
// trialgebras (or single-product algebras) out of old ones.

#include "bihom/algebra.hpp"
#include "bihom/checks.hpp"

namespace bihom {

// (A, ∗, α, β) with a single product.
struct BiHomAlgebra {
    std::size_t dim = 0;
    MulTensor mu;
    LinearMap alpha;
    LinearMap beta;

    friend bool operator==(const BiHomAlgebra&, const BiHomAlgebra&) = default;
};

// (x∗y)∗β(z) = α(x)∗(y∗z) on all basis triples.
CheckReport check_bihom_associativity(const BiHomAlgebra& a);

// A candidate structure together with its axiom report; the constructions
// below never assume the result is a trialgebra.
struct Construction {
    BiHomTrialgebra algebra;
    AxiomReport report;
};

// ψ : A -> B. Commutation with the twists and ψ(x•y) = ψ(x)•'ψ(y) for all products.
CheckReport is_morphism(const LinearMap& psi, const BiHomTrialgebra& a, const BiHomTrialgebra& b);
bool is_automorphism(const LinearMap& psi, const BiHomTrialgebra& a);

// (A, ψ∘•∘(ψ⁻¹⊗ψ⁻¹), ψαψ⁻¹, ψβψ⁻¹). Throws SingularMatrix.
BiHomTrialgebra transport(const BiHomTrialgebra& a, const LinearMap& psi);

// Whether ψφψ⁻¹ is an automorphism of transport(a, ψ). Throws SingularMatrix when ψ
// is singular and PreconditionFailed when φ is not an automorphism of a.
bool conjugate_automorphism_check(const BiHomTrialgebra& a, const LinearMap& psi, const LinearMap& phi);

// x∗'y = α⁻¹(x)∗β⁻¹(y) with identity twists. Throws SingularMatrix.
Construction untwist(const BiHomTrialgebra& a);

BiHomTrialgebra direct_sum(const BiHomTrialgebra& a, const BiHomTrialgebra& b);

// Closure of Γ_ξ = {(x, ξx)} ⊆ A⊕B under the three products and both twists.
bool graph_subalgebra_check(const LinearMap& xi, const BiHomTrialgebra& a, const BiHomTrialgebra& b);

struct RotaBaxterData {
    LinearMap op;
    Scalar weight;
};

// Rα=αR, Rβ=βR and
//   R(x)⊢R(y) = R(R(x)⊣y + x⊣R(y) + λ x⊣y)
//   R(x)⊣R(y) = R(R(x)⊢y + x⊢R(y) + λ x⊢y)
//   R(x)⊥R(y) = R(R(x)⊥y + x⊥R(y) + λ x⊥y)
CheckReport rota_baxter_check(const BiHomTrialgebra& a, const RotaBaxterData& rb);
// Single-product form R(x)∗R(y) = R(R(x)∗y + x∗R(y) + λ x∗y) with the commutations.
CheckReport rota_baxter_check(const BiHomAlgebra& a, const RotaBaxterData& rb);

struct RbInduced {
    Construction construction;
    CheckReport precondition;  // rota_baxter_check on the single product
};

// x⊣y = x∗R(y), x⊢y = R(x)∗y, x⊥y = λ x∗y.
RbInduced rb_induced(const BiHomAlgebra& a, const RotaBaxterData& rb);

struct SwapHypotheses {
    bool alpha_involution = false;  // α² = id
    bool beta_involution = false;   // β² = id
    bool twists_inverse = false;    // αβ = βα = id
    bool all() const { return alpha_involution && beta_involution && twists_inverse; }
};

struct SwapResult {
    BiHomTrialgebra algebra;
    SwapHypotheses hypotheses;
};

SwapResult swap_maps(const BiHomTrialgebra& a);

// (A, ⊣, ⊥, ∗) with ∗ = ⊢ + ⊥, read positionally as (left, right, middle).
Construction sum_middle_right(const BiHomTrialgebra& a);

struct BracketPair {
    MulTensor star;     // x∗y = x⊣y − y⊢x
    MulTensor bracket;  // [x,y] = x⊥y − y⊥x
};

struct CommutatorResult {
    BracketPair pair;
    CheckReport beta_form;        // [x,y]∗β(z) = [x∗z, β(y)] + [α(x), y∗z]
    CheckReport alpha_beta_form;  // [x,y]∗αβ(z) = [x∗z, β(y)] + [α(x), y∗z]
};

CommutatorResult commutator_construct(const BiHomTrialgebra& a);

// x∗y = x⊢y + x⊣y + x⊥y.
BiHomAlgebra total_sum(const BiHomTrialgebra& a);

// ξα=αξ, ξβ=βξ and ξ(ξ(x)•y) = ξ(x)•ξ(y) = ξ(x•ξ(y)) for all products.
CheckReport averaging_check(const BiHomTrialgebra& a, const LinearMap& xi);
CheckReport averaging_check(const BiHomAlgebra& a, const LinearMap& xi);

// x⊣y = α(x)·y, x⊢y = x·β(y), x⊥y = α(x)·β(y). Throws PreconditionFailed
// unless α and β are averaging operators of the product.
Construction averaging_induced(const BiHomAlgebra& a);

}  // namespace bihom
