#include "doctest.h"
#include "support.hpp"

#include "bihom/catalog.hpp"
#include "bihom/centroids.hpp"
#include "bihom/error.hpp"
#include "bihom/solve.hpp"

using namespace bihom;
using K = VanishingComponent::Kind;

namespace {

// Monomials as (a, b, c): c·t_a·t_b, with b = npos for a linear term.
QuadPoly poly(std::size_t m, std::initializer_list<std::tuple<std::size_t, std::size_t, long>> terms, long constant = 0) {
    QuadPoly p = QuadPoly::zero(m);
    for (auto [a, b, c] : terms) {
        if (b == std::size_t(-1)) p.lin[a] += c;
        else p.add_monomial(a, b, c);
    }
    p.constant = constant;
    return p;
}

constexpr std::size_t L = std::size_t(-1);

bool vanishes_on(const std::vector<QuadPoly>& polys, const std::vector<Vector>& basis, std::mt19937& rng) {
    for (int t = 0; t < 8; ++t) {
        Vector x(polys.empty() ? 0 : polys.front().vars());
        for (const auto& b : basis) axpy(x, testing::random_scalar(rng, 0.0), b);
        for (const auto& p : polys)
            if (!p(x).is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("quadratic polynomials") {
    auto p = poly(2, {{0, 1, 2}, {0, 0, 1}, {1, L, -3}}, 5);
    CHECK(p(Vector{1, 1}) == Scalar(5));
    CHECK(p.coefficients().at("t1*t2") == Scalar(2));
    CHECK(p.coefficients().at("t1^2") == Scalar(1));
    CHECK(p.coefficients().at("t2") == Scalar(-3));
    CHECK(p.coefficients().at("1") == Scalar(5));
    CHECK_FALSE(p.is_homogeneous_quadratic());

    // t = (1, 0) + s·(1, 1)
    auto s = p.substitute(Vector{1, 0}, {Vector{1, 1}});
    for (long v : {-2L, 0L, 3L}) CHECK(s(Vector{v}) == p(Vector{1 + v, v}));

    auto n = normalize({poly(2, {{0, 1, 4}}), poly(2, {{0, 1, -2}}), QuadPoly::zero(2)});
    REQUIRE(n.size() == 1);
    CHECK(n[0].coefficients().at("t1*t2") == Scalar(1));
}

TEST_CASE("largest linear subspaces of fixed systems") {
    std::mt19937 rng(1);
    CHECK(max_linear_subspace(2, {})->size() == 2);
    CHECK_FALSE(max_linear_subspace(2, {poly(2, {}, 1)}).has_value());
    // t1·t2 = 0: either axis.
    auto w = max_linear_subspace(2, {poly(2, {{0, 1, 1}})});
    REQUIRE(w);
    CHECK(w->size() == 1);
    // t1² + t2² = 0 splits over Q(i).
    auto c = max_linear_subspace(2, {poly(2, {{0, 0, 1}, {1, 1, 1}})});
    REQUIRE(c);
    CHECK(c->size() == 1);
    CHECK(vanishes_on({poly(2, {{0, 0, 1}, {1, 1, 1}})}, *c, rng));
    // t1² − 2t2² = 0 has only the origin.
    CHECK(max_linear_subspace(2, {poly(2, {{0, 0, 1}, {1, 1, -2}})})->empty());
    // Linear part restricts first: t1 = 0 and t2·t3 = 0 leaves a line.
    std::vector<QuadPoly> sys{poly(3, {{0, L, 1}}), poly(3, {{1, 2, 1}})};
    auto l = max_linear_subspace(3, sys);
    REQUIRE(l);
    CHECK(l->size() == 1);
    CHECK(vanishes_on(sys, *l, rng));
    // t1² = 0 restricts to its radical.
    CHECK(max_linear_subspace(3, {poly(3, {{0, 0, 1}})})->size() == 2);
    // A nondegenerate form in three variables is outside the exact search.
    CHECK_THROWS_AS(max_linear_subspace(3, {poly(3, {{0, 0, 1}, {1, 1, 1}, {2, 2, -2}})}), ObstructionTooLarge);
}

TEST_CASE("vanishing sets in at most two parameters") {
    auto all = describe_vanishing_set(2, {});
    REQUIRE(all.size() == 1);
    CHECK(all[0].kind == K::Everything);

    auto axes = describe_vanishing_set(2, {poly(2, {{0, 1, 1}})});
    REQUIRE(axes.size() == 2);
    CHECK(axes[0].kind == K::Line);
    CHECK(axes[1].kind == K::Line);

    // t1·t2 = 0 and t1 + t2 − 1 = 0: two points.
    auto pts = describe_vanishing_set(2, {poly(2, {{0, 1, 1}}), poly(2, {{0, L, 1}, {1, L, 1}}, -1)});
    REQUIRE(pts.size() == 2);
    for (const auto& c : pts) {
        CHECK(c.kind == K::Point);
        CHECK((c.point == Vector{1, 0} || c.point == Vector{0, 1}));
    }

    auto conic = describe_vanishing_set(2, {poly(2, {{0, 0, 1}, {1, 1, -2}}, 0)});
    REQUIRE(conic.size() == 1);
    CHECK(conic[0].kind == K::Conic);

    // t² − 2 has no roots in Q(i); t² + 1 has two.
    auto irr = describe_vanishing_set(1, {poly(1, {{0, 0, 1}}, -2)});
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].kind == K::Finite);
    CHECK(describe_vanishing_set(1, {poly(1, {{0, 0, 1}}, 1)}).size() == 2);
    CHECK(describe_vanishing_set(1, {poly(1, {}, 1)}).empty());
    CHECK(kind_name(K::Line) == "line");
    CHECK_THROWS_AS(describe_vanishing_set(3, {}), ObstructionTooLarge);
}

TEST_CASE("centralizers") {
    // Zero twists: αβ(x) = 0, so everything centralizes.
    const auto& a = catalog_get("BTas_2^1").algebra;
    CHECK(centralizer(a, {unit_vector(2, 0), unit_vector(2, 1)}).basis.size() == 2);
    auto restricted = centralizer(a, {unit_vector(2, 0)}, true);
    CHECK(restricted.basis.size() == 1);

    BiHomTrialgebra b = BiHomTrialgebra::zero(2);
    b.left.at(0, 0, 0) = 1;
    b.alpha = LinearMap::identity(2);
    b.beta = LinearMap::identity(2);
    auto z = centralizer(b, {unit_vector(2, 0), unit_vector(2, 1)});
    REQUIRE(z.basis.size() == 1);
    CHECK(z.basis[0] == unit_vector(2, 1));
    CHECK(centralizer_system(b, {unit_vector(2, 0)}).cols() == 2);
}

TEST_CASE("centroid of small fixed algebras") {
    // Zero algebra: every map commuting with the twists, no obstruction.
    auto z = centroid_space(BiHomTrialgebra::zero(2));
    CHECK(z.parameters() == 4);
    CHECK(z.identically_zero);
    CHECK(z.dim() == 4);

    auto c = centroid_space(catalog_get("BTas_3^1").algebra);
    CHECK(c.parameters() == 3);
    CHECK_FALSE(c.identically_zero);
    CHECK(c.dim() == 2);

    auto c11 = centroid_space(catalog_get("BTas_3^11").algebra);
    CHECK(c11.dim() == 1);
}

TEST_CASE("centroid spaces are verified elementwise") {
    std::mt19937 rng(44);
    for (const auto& e : catalog()) {
        const auto& a = e.algebra;
        CentroidSpace s;
        try {
            s = centroid_space(a);
        } catch (const ObstructionTooLarge&) {
            continue;
        }
        CHECK(s.max_subspace == canonical_maps(a.dim, s.max_subspace));
        for (const auto& m : s.max_subspace) CHECK(in_span(s.linear_basis, m));
        for (int t = 0; t < 5 && !s.max_subspace.empty(); ++t) {
            Vector coeffs;
            for (std::size_t k = 0; k < s.dim(); ++k) coeffs.push_back(testing::random_scalar(rng, 0.0));
            CHECK_MESSAGE(is_centroid_element(a, combine(s.max_subspace, coeffs)).holds(), e.id);
        }
        // Stage 1 contains every centroid element, and the obstruction is exact on it.
        for (int t = 0; t < 5 && !s.linear_basis.empty(); ++t) {
            Vector coeffs;
            for (std::size_t k = 0; k < s.parameters(); ++k) coeffs.push_back(testing::random_scalar(rng));
            bool zero = true;
            for (const auto& p : s.obstruction) zero = zero && p(coeffs).is_zero();
            CHECK(is_centroid_element(a, combine(s.linear_basis, coeffs)).holds() == zero);
        }
        if (s.parameters() <= 2) CHECK(s.description.has_value());
    }
}

TEST_CASE("central derivations") {
    for (const auto& e : catalog()) {
        const auto& a = e.algebra;
        const std::size_t n = a.dim;
        for (const auto& d : central_derivations(a)) {
            for (Role r : kRoles)
                for (std::size_t i = 0; i < n; ++i) {
                    const Vector abd = a.alpha(a.beta(d.image(i)));
                    for (std::size_t j = 0; j < n; ++j) {
                        CHECK(is_zero(d(a.product(r).product(i, j))));
                        CHECK(is_zero(evaluate(a, r, abd, unit_vector(n, j))));
                        CHECK(is_zero(evaluate(a, r, unit_vector(n, j), abd)));
                    }
                }
        }
    }
    CHECK(central_derivations(BiHomTrialgebra::zero(2)).size() == 4);
}

TEST_CASE("centroid and derivation interaction") {
    for (const auto& e : catalog()) {
        auto r = cent_der_property_suite(e.algebra);
        for (const auto& f : r.hard_failures) CHECK_MESSAGE(f.check != "φ∘d ∈ Der(A)", e.id);
        CHECK(r.derivations == derivation_space(e.algebra).dim());
    }
}
