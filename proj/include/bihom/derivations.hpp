#pragma once

// αβ-derivations: d commuting with α, β and
//   d(x•y) = d(x)•αβ(y) + αβ(x)•d(y)   for • ∈ {⊣, ⊢, ⊥}.

#include "bihom/checks.hpp"
#include "bihom/tables.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bihom {

struct DerivationSpace {
    std::string algebra;
    std::vector<LinearMap> basis;  // RREF-canonical in the row-major flattening
    std::size_t dim() const { return basis.size(); }
};

CheckReport is_derivation(const BiHomTrialgebra& a, const LinearMap& d);

// Stacked left-minus-right sides of every derivation condition; linear in d.
Vector derivation_residual(const BiHomTrialgebra& a, const LinearMap& d);

DerivationSpace derivation_space(const BiHomTrialgebra& a);

struct DerivationRow {
    std::string algebra;
    std::size_t computed_dim = 0;
    std::optional<std::size_t> paper_dim;
    TableStatus status = TableStatus::PaperSilent;
    std::vector<LinearMap> basis;
    std::vector<ClaimedEntry> claims;
};

DerivationRow derivation_table_row(const BiHomTrialgebra& a, const std::optional<PaperRow>& paper);

}  // namespace bihom
