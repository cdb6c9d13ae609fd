#pragma once

// The classified two- and three-dimensional algebras, their published
// derivation and centroid rows, and the verification harness.

#include "bihom/centroids.hpp"
#include "bihom/derivations.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bihom {

struct Reading {
    std::string label;  // "a", "b", ...
    BiHomTrialgebra algebra;
};

struct CatalogEntry {
    std::string id;           // e.g. "BTas_3^17"
    BiHomTrialgebra algebra;  // the primary reading
    std::optional<PaperRow> paper_der;
    std::optional<PaperRow> paper_cent;
    std::vector<std::string> ambiguity_notes;
    std::vector<Reading> alternates;  // further readings of an ambiguous listing

    std::optional<std::size_t> paper_der_dim() const;
    std::optional<std::size_t> paper_cent_dim() const;
};

const std::vector<CatalogEntry>& catalog();
std::vector<std::string> catalog_list();
// Throws UnknownId.
const CatalogEntry& catalog_get(std::string_view id);

// {entry, check, expected, computed, witness}
struct ErrataRecord {
    std::string entry;
    std::string check;
    std::string expected;
    std::string computed;
    std::string witness;

    friend bool operator==(const ErrataRecord&, const ErrataRecord&) = default;
};

struct ReadingCheck {
    std::string label;
    AxiomReport axioms;
    bool coordinate_form_holds = false;
};

struct EntryVerification {
    std::string id;
    std::size_t dim = 0;
    AxiomReport axioms;  // structural and multiplicativity
    bool coordinate_form_holds = false;
    std::vector<ReadingCheck> readings;  // one per reading when the listing is ambiguous
    DerivationRow der;
    std::optional<CentroidRow> cent;
    std::string cent_error;
    // Single edits to the listing that make every axiom hold. Conjectural.
    std::vector<std::string> conjectured_fixes;
    std::vector<ErrataRecord> errata;

    bool paths_agree() const { return coordinate_form_holds == axioms.all_hold(); }
};

EntryVerification catalog_verify(std::string_view id);
std::vector<EntryVerification> catalog_verify_all();

// Edits that change one index or one product symbol of a single listed line
// ("e_i•e_j = ..." or "α(e_i) = ...") and make every axiom hold.
std::vector<std::string> single_edit_fixes(const BiHomTrialgebra& a);

// "e_1⊣e_2 = e_1+e_3" lines, zero-completion omitted.
std::vector<std::string> listing(const BiHomTrialgebra& a);

struct Fingerprint {
    std::uint32_t axiom_profile = 0;
    std::size_t der_dim = 0;
    std::size_t cent_linear_dim = 0;
    std::array<std::size_t, 3> product_ranks{};
    std::array<std::size_t, 2> twist_ranks{};
    std::size_t squared_dim = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const BiHomTrialgebra& a);

// Name of the first invariant that differs, in the order der_dim,
// cent_linear_dim, product_ranks, twist_ranks, squared_dim, axiom_profile;
// nullopt when all agree (which says nothing about isomorphism).
std::optional<std::string> distinguish(const Fingerprint& a, const Fingerprint& b);
std::optional<std::string> distinguish(std::string_view a, std::string_view b);

// ψ invertible and a morphism a -> b. Throws DimensionMismatch.
bool verify_isomorphism(const BiHomTrialgebra& a, const BiHomTrialgebra& b, const LinearMap& psi);

}  // namespace bihom
