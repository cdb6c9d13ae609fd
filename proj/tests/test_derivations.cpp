#include "doctest.h"
#include "support.hpp"

#include "bihom/catalog.hpp"
#include "bihom/derivations.hpp"
#include "bihom/solve.hpp"

using namespace bihom;

TEST_CASE("solve_maps on simple conditions") {
    // Trace-free maps.
    auto traceless = solve_maps(2, [](const LinearMap& m) { return Vector{m.matrix()(0, 0) + m.matrix()(1, 1)}; });
    CHECK(traceless.size() == 3);
    // Searching inside a span.
    auto diag = solve_maps(2, [](const LinearMap& m) { return Vector{m.matrix()(0, 0) + m.matrix()(1, 1)}; },
                           {LinearMap::identity(2), LinearMap::unit(2, 0, 0)});
    REQUIRE(diag.size() == 1);
    CHECK(diag[0] == LinearMap(Matrix{{1, 0}, {0, -1}}));
    CHECK(unit_maps(2).size() == 4);
    CHECK(unit_maps(2)[1] == LinearMap::unit(2, 0, 1));
    CHECK(same_span(2, traceless, canonical_maps(2, traceless)));
    CHECK(intersect(2, traceless, {LinearMap::identity(2)}).empty());
    CHECK(in_span(traceless, LinearMap::unit(2, 1, 0)));
}

TEST_CASE("zero algebra: every map commuting with zero twists is a derivation") {
    CHECK(derivation_space(BiHomTrialgebra::zero(2)).dim() == 4);
    CHECK(derivation_space(BiHomTrialgebra::zero(3)).dim() == 9);
}

TEST_CASE("derivation spaces of catalog entries") {
    const auto d21 = derivation_space(catalog_get("BTas_2^1").algebra);
    REQUIRE(d21.dim() == 1);
    CHECK(d21.basis[0] == LinearMap::unit(2, 0, 1));
    CHECK(map_label(d21.basis[0]) == "E12");

    CHECK(derivation_space(catalog_get("BTas_3^1").algebra).dim() == 2);
    CHECK(derivation_space(catalog_get("BTas_3^2").algebra).dim() == 1);
    CHECK(derivation_space(catalog_get("BTas_3^19").algebra).dim() == 2);
    CHECK(derivation_space(catalog_get("BTas_2^3").algebra).dim() == 0);
}

TEST_CASE("derivation spaces agree with the index-form oracle") {
    std::mt19937 rng(31);
    for (const auto& e : catalog()) {
        const auto& a = e.algebra;
        const std::size_t n = a.dim;
        const auto space = derivation_space(a);
        CHECK(space.basis == canonical_maps(n, space.basis));
        for (const auto& d : space.basis) {
            CHECK(testing::index_form_derivation(a, d));
            CHECK(is_derivation(a, d).holds());
            CHECK(is_zero(derivation_residual(a, d)));
        }
        // Unit maps and random combinations: oracle membership matches span membership.
        for (const auto& u : unit_maps(n)) CHECK(testing::index_form_derivation(a, u) == in_span(space.basis, u));
        for (int t = 0; t < 10; ++t) {
            Vector coeffs;
            for (std::size_t k = 0; k < space.dim(); ++k) coeffs.push_back(testing::random_scalar(rng));
            if (!space.basis.empty()) CHECK(testing::index_form_derivation(a, combine(space.basis, coeffs)));
            auto m = testing::random_integer_map(rng, n, 1);
            CHECK(testing::index_form_derivation(a, m) == in_span(space.basis, m));
            CHECK(is_derivation(a, m).holds() == in_span(space.basis, m));
        }
    }
}
