#include "doctest.h"
#include "support.hpp"

#include "bihom/catalog.hpp"
#include "bihom/error.hpp"
#include "bihom/transforms.hpp"

using namespace bihom;

namespace {

const BiHomTrialgebra& entry(std::string_view id) {
    return catalog_get(id).algebra;
}

BiHomAlgebra single(const MulTensor& mu, LinearMap alpha, LinearMap beta) {
    return {mu.dim(), mu, std::move(alpha), std::move(beta)};
}

// Structure constants only; the role tag is ignored.
bool same_table(const MulTensor& x, const MulTensor& y) {
    if (x.dim() != y.dim()) return false;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j)
            for (std::size_t k = 0; k < x.dim(); ++k)
                if (x.at(i, j, k) != y.at(i, j, k)) return false;
    return true;
}

// The 2x2 upper triangular matrices e11, e12, e22 as an associative algebra.
MulTensor upper_triangular() {
    MulTensor mu(3, Role::Middle);
    mu.at(0, 0, 0) = 1;
    mu.at(0, 1, 1) = 1;
    mu.at(1, 2, 1) = 1;
    mu.at(2, 2, 2) = 1;
    return mu;
}

}  // namespace

TEST_CASE("identity and zero maps are morphisms") {
    for (const auto& e : catalog()) {
        CHECK(is_morphism(LinearMap::identity(e.algebra.dim), e.algebra, e.algebra).holds());
        CHECK(is_morphism(LinearMap::zero(e.algebra.dim), e.algebra, e.algebra).holds());
    }
    const auto& a = entry("BTas_2^1");
    const auto& b = entry("BTas_3^1");
    CHECK(is_morphism(LinearMap::zero(3, 2), a, b).holds());
    CHECK_THROWS_AS(is_morphism(LinearMap::zero(2, 2), a, b), DimensionMismatch);
}

TEST_CASE("transport of structure") {
    const auto& a = entry("BTas_2^1");
    CHECK(transport(a, LinearMap::identity(2)) == a);
    LinearMap swap(Matrix{{0, 1}, {1, 0}});
    auto b = transport(a, swap);
    CHECK(check_all(b).all_hold());
    CHECK(is_morphism(swap, a, b).holds());
    CHECK(derivation_space(b).dim() == derivation_space(a).dim());
    CHECK_THROWS_AS(transport(a, LinearMap(Matrix{{1, 1}, {1, 1}})), SingularMatrix);

    // Structure constants in the basis ψ(e_i) are those of a.
    std::mt19937 rng(21);
    for (const char* id : {"BTas_3^1", "BTas_3^7", "BTas_3^12"}) {
        const auto& x = entry(id);
        auto psi = testing::random_invertible(rng, 3);
        auto y = transport(x, psi);
        for (Role r : kRoles)
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    CHECK(evaluate(y, r, psi.image(i), psi.image(j)) == psi(x.product(r).product(i, j)));
        CHECK(y.alpha * psi == psi * x.alpha);
        CHECK(y.beta * psi == psi * x.beta);
    }
}

TEST_CASE("conjugated automorphisms") {
    const auto& a = entry("BTas_2^1");
    std::mt19937 rng(6);
    auto psi = testing::random_invertible(rng, 2);
    CHECK(conjugate_automorphism_check(a, psi, LinearMap::identity(2)));
    auto autos = testing::automorphisms_pm1(a);
    // Only the identity survives: ψ(e_2)⊣ψ(e_2) = ψ(e_1) forces the diagonal to 1.
    CHECK(autos.size() == 1);
    for (const auto& phi : autos) {
        CHECK(is_automorphism(phi, a));
        CHECK(conjugate_automorphism_check(a, LinearMap::identity(2), phi));
        CHECK(conjugate_automorphism_check(a, psi, phi));
    }
    CHECK_THROWS_AS(conjugate_automorphism_check(a, psi, LinearMap(Matrix{{0, 1}, {1, 0}})), PreconditionFailed);
    CHECK_THROWS_AS(conjugate_automorphism_check(a, LinearMap::zero(2), LinearMap::identity(2)), SingularMatrix);
}

TEST_CASE("untwist") {
    BiHomTrialgebra a = BiHomTrialgebra::zero(2);
    a.left.at(0, 0, 0) = 1;
    a.right.at(0, 0, 0) = 1;
    a.middle.at(0, 0, 0) = 1;
    a.alpha = LinearMap::identity(2);
    a.beta = LinearMap::identity(2);
    auto u = untwist(a);
    CHECK(u.algebra == a);
    CHECK(u.report.all_hold());
    CHECK_THROWS_AS(untwist(entry("BTas_3^3")), SingularMatrix);

    // Invertible twists that are automorphisms: the untwisted products are
    // again an identity-twist trialgebra.
    BiHomTrialgebra b = BiHomTrialgebra::zero(2);
    b.left.at(0, 0, 0) = 1;
    b.right.at(0, 0, 0) = 1;
    b.middle.at(0, 0, 0) = 1;
    b.alpha = LinearMap(Matrix{{1, 0}, {0, -1}});
    b.beta = LinearMap(Matrix{{1, 0}, {0, 2}});
    REQUIRE(check_all(b).all_hold());
    auto ub = untwist(b);
    CHECK(ub.algebra.alpha == LinearMap::identity(2));
    CHECK(ub.report.all_hold());
}

TEST_CASE("direct sums") {
    const auto& a = entry("BTas_2^1");
    auto z = direct_sum(a, BiHomTrialgebra::zero(1));
    CHECK(z.dim == 3);
    for (Role r : kRoles)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k) CHECK(z.product(r).at(i, j, k) == a.product(r).at(i, j, k));
    CHECK(check_all(z).all_hold());

    auto s = direct_sum(a, entry("BTas_2^2"));
    CHECK(s.dim == 4);
    CHECK(check_all(s).all_hold());
    CHECK(derivation_space(s).dim() >= derivation_space(a).dim() + derivation_space(entry("BTas_2^2")).dim());

    // A failing summand makes the sum fail.
    auto f = direct_sum(a, entry("BTas_2^3"));
    CHECK_FALSE(check_all(f).all_hold());
}

TEST_CASE("graph criterion agrees with the morphism test") {
    const auto& a = entry("BTas_2^1");
    CHECK(graph_subalgebra_check(LinearMap::zero(2), a, a));
    CHECK(graph_subalgebra_check(LinearMap::identity(2), a, a));
    std::mt19937 rng(77);
    const char* ids[] = {"BTas_2^1", "BTas_2^2", "BTas_2^6", "BTas_3^1", "BTas_3^4"};
    for (const char* x : ids)
        for (const char* y : ids) {
            const auto& p = entry(x);
            const auto& q = entry(y);
            for (int t = 0; t < 10; ++t) {
                Matrix m = testing::random_matrix(rng, q.dim, p.dim, 0.7);
                LinearMap xi(m);
                CHECK(graph_subalgebra_check(xi, p, q) == is_morphism(xi, p, q).holds());
            }
        }
    for (const auto& phi : testing::automorphisms_pm1(a)) CHECK(graph_subalgebra_check(phi, a, a));
}

TEST_CASE("Rota-Baxter operators") {
    for (const auto& e : catalog())
        CHECK(rota_baxter_check(e.algebra, {LinearMap::zero(e.algebra.dim), 0}).holds());

    // R = −λ·id: both sides of the crossed identities are λ²(x⊢y) and λ²(x⊣y).
    auto ex = testing::example_algebra();
    CHECK(check_all(ex).all_hold());
    CHECK(rota_baxter_check(ex, {LinearMap::zero(2), 0}).holds());
    for (long lambda : {1L, -2L}) {
        auto r = rota_baxter_check(ex, {Scalar(-lambda) * LinearMap::identity(2), lambda});
        REQUIRE_FALSE(r.holds());
        CHECK(r.violations.front().basis == std::vector<std::size_t>{1, 0});
    }

    // R = id with λ = −1 reduces to ⊢ = ⊣.
    std::mt19937 rng(12);
    for (int t = 0; t < 20; ++t) {
        BiHomTrialgebra a = BiHomTrialgebra::zero(2);
        for (std::size_t i = 0; i < 8; ++i) {
            a.left.at(i / 4, (i / 2) % 2, i % 2) = testing::random_scalar(rng, 0.5);
            a.middle.at(i / 4, (i / 2) % 2, i % 2) = testing::random_scalar(rng, 0.5);
        }
        a.right = a.left;
        CHECK(rota_baxter_check(a, {LinearMap::identity(2), -1}).holds());
        if (!a.left.is_zero()) {
            a.right.at(0, 0, 0) += 1;
            CHECK_FALSE(rota_baxter_check(a, {LinearMap::identity(2), -1}).holds());
        }
    }
}

TEST_CASE("Rota-Baxter induced trialgebra") {
    BiHomAlgebra zero = single(MulTensor(2, Role::Middle), LinearMap::identity(2), LinearMap::identity(2));
    auto z = rb_induced(zero, {LinearMap::identity(2), 1});
    CHECK(z.construction.algebra.left.is_zero());
    CHECK(z.construction.report.all_hold());

    BiHomAlgebra ut = single(upper_triangular(), LinearMap::identity(3), LinearMap::identity(3));
    CHECK(check_bihom_associativity(ut).holds());
    auto r = rb_induced(ut, {LinearMap::zero(3), 0});
    CHECK(r.precondition.holds());
    CHECK(r.construction.algebra.middle.is_zero());
    CHECK(r.construction.report.all_hold());

    // λ = 0 always gives a zero middle product.
    auto w = rb_induced(ut, {LinearMap::identity(3), 0});
    CHECK(w.construction.algebra.middle.is_zero());

    auto ex = total_sum(testing::example_algebra());
    auto e = rb_induced(ex, {Scalar(-1) * LinearMap::identity(2), 1});
    CHECK(e.construction.algebra.dim == 2);
}

TEST_CASE("swapping the twists") {
    BiHomTrialgebra a = BiHomTrialgebra::zero(2);
    a.left.at(0, 0, 0) = 1;
    a.alpha = LinearMap::identity(2);
    a.beta = LinearMap::identity(2);
    auto s = swap_maps(a);
    CHECK(s.algebra == a);
    CHECK(s.hypotheses.all());

    auto b = swap_maps(entry("BTas_2^1"));
    CHECK_FALSE(b.hypotheses.alpha_involution);
    CHECK_FALSE(b.hypotheses.beta_involution);
    CHECK_FALSE(b.hypotheses.twists_inverse);

    // α = β an involution: the swap is the same algebra.
    BiHomTrialgebra c = BiHomTrialgebra::zero(2);
    c.left.at(0, 0, 0) = 1;
    c.right.at(0, 0, 0) = 1;
    c.alpha = LinearMap(Matrix{{1, 0}, {0, -1}});
    c.beta = c.alpha;
    auto sc = swap_maps(c);
    CHECK(sc.hypotheses.all());
    CHECK(is_morphism(LinearMap::identity(2), c, sc.algebra).holds());
}

TEST_CASE("sum of the middle and right products") {
    auto z = sum_middle_right(BiHomTrialgebra::zero(2));
    CHECK(z.report.all_hold());
    const auto& a = entry("BTas_2^1");
    auto s = sum_middle_right(a);
    CHECK(same_table(s.algebra.left, a.left));
    CHECK(same_table(s.algebra.right, a.middle));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(Vector(s.algebra.middle.product(i, j).begin(), s.algebra.middle.product(i, j).end()) ==
                  add(a.right.product(i, j), a.middle.product(i, j)));
    CHECK(s.report.results.size() == structural_axioms().size());

    BiHomTrialgebra b = BiHomTrialgebra::zero(2);
    b.left.at(0, 1, 0) = 1;
    auto t = sum_middle_right(b);
    CHECK(t.algebra.right.is_zero());
    CHECK(t.algebra.middle.is_zero());
}

TEST_CASE("commutator construction") {
    auto c = commutator_construct(BiHomTrialgebra::zero(2));
    CHECK(c.pair.star.is_zero());
    CHECK(c.pair.bracket.is_zero());
    CHECK(c.beta_form.holds());

    // A symmetric middle product has a zero bracket, and the identity then holds.
    for (const auto& e : catalog()) {
        const auto& m = e.algebra.middle;
        bool symmetric = true;
        for (std::size_t i = 0; i < e.algebra.dim; ++i)
            for (std::size_t j = 0; j < e.algebra.dim; ++j)
                for (std::size_t k = 0; k < e.algebra.dim; ++k) symmetric = symmetric && m.at(i, j, k) == m.at(j, i, k);
        auto r = commutator_construct(e.algebra);
        if (symmetric) {
            CHECK(r.pair.bracket.is_zero());
            CHECK(r.beta_form.holds());
            CHECK(r.alpha_beta_form.holds());
        }
        for (std::size_t i = 0; i < e.algebra.dim; ++i)
            for (std::size_t j = 0; j < e.algebra.dim; ++j)
                CHECK(Vector(r.pair.star.product(i, j).begin(), r.pair.star.product(i, j).end()) ==
                      sub(e.algebra.left.product(i, j), e.algebra.right.product(j, i)));
    }
}

TEST_CASE("total sum is BiHom-associative") {
    CHECK(check_bihom_associativity(total_sum(BiHomTrialgebra::zero(2))).holds());
    CHECK(check_bihom_associativity(total_sum(entry("BTas_2^1"))).holds());
    CHECK(check_bihom_associativity(total_sum(entry("BTas_3^7"))).holds());
    std::size_t passing = 0;
    for (const auto& e : catalog()) {
        if (!check_axioms(e.algebra).all_hold()) continue;
        ++passing;
        CHECK_MESSAGE(check_bihom_associativity(total_sum(e.algebra)).holds(), e.id);
    }
    CHECK(passing >= 15);
}

TEST_CASE("averaging operators") {
    for (const auto& e : catalog()) {
        const std::size_t n = e.algebra.dim;
        CHECK(averaging_check(e.algebra, LinearMap::identity(n)).holds());
        CHECK(averaging_check(e.algebra, LinearMap::zero(n)).holds());
        // Every side of the identities scales by c², so scalar maps always qualify.
        for (long c : {2L, -1L, 3L}) CHECK(averaging_check(e.algebra, Scalar(c) * LinearMap::identity(n)).holds());
    }
    const auto& a = entry("BTas_2^1");
    CHECK_FALSE(averaging_check(a, LinearMap::unit(2, 1, 1)).holds());
}

TEST_CASE("averaging induced trialgebra") {
    BiHomAlgebra ut = single(upper_triangular(), LinearMap::identity(3), LinearMap::identity(3));
    auto c = averaging_induced(ut);
    CHECK(same_table(c.algebra.left, c.algebra.right));
    CHECK(same_table(c.algebra.right, c.algebra.middle));
    CHECK(c.report.all_hold());

    BiHomAlgebra z = single(upper_triangular(), LinearMap::zero(3), LinearMap::zero(3));
    auto d = averaging_induced(z);
    CHECK(d.algebra.left.is_zero());
    CHECK(d.algebra.middle.is_zero());
    CHECK(d.report.all_hold());

    BiHomAlgebra bad = single(upper_triangular(), LinearMap::unit(3, 0, 1), LinearMap::identity(3));
    CHECK_THROWS_AS(averaging_induced(bad), PreconditionFailed);
}
