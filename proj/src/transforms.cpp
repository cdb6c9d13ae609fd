#include "bihom/transforms.hpp"

#include "bihom/error.hpp"

#include <string>

namespace bihom {

namespace {

std::string sym(Role r) {
    return std::string(role_symbol(r));
}

void require_square(const LinearMap& m, std::size_t n, const char* what) {
    if (m.domain_dim() != n || m.codomain_dim() != n)
        throw DimensionMismatch(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

// Records f∘g = g∘f on basis vectors.
void check_commutes(CheckReport& report, const std::string& condition, const LinearMap& f, const LinearMap& g) {
    const Matrix fg = (f * g).matrix(), gf = (g * f).matrix();
    for (std::size_t i = 0; i < fg.cols(); ++i) report.expect_equal(condition, {i}, fg.column(i), gf.column(i));
}

MulTensor build_tensor(std::size_t n, Role role, auto&& product) {
    MulTensor t(n, role);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.set_product(i, j, product(i, j));
    return t;
}

BiHomAlgebra single_product(const BiHomTrialgebra& a, MulTensor mu) {
    return {a.dim, std::move(mu), a.alpha, a.beta};
}

// Trialgebra whose three products are built from one single-product algebra.
BiHomTrialgebra from_products(const BiHomAlgebra& a, MulTensor l, MulTensor r, MulTensor m, std::string name) {
    return {std::move(name), a.dim, std::move(l), std::move(r), std::move(m), a.alpha, a.beta};
}

}  // namespace

CheckReport check_bihom_associativity(const BiHomAlgebra& a) {
    CheckReport report;
    const std::size_t n = a.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector lhs = a.mu.apply(a.mu.product(i, j), a.beta.image(k));
                Vector rhs = a.mu.apply(a.alpha.image(i), a.mu.product(j, k));
                report.expect_equal("(x∗y)∗β(z) = α(x)∗(y∗z)", {i, j, k}, std::move(lhs), std::move(rhs));
            }
    return report;
}

CheckReport is_morphism(const LinearMap& psi, const BiHomTrialgebra& a, const BiHomTrialgebra& b) {
    validate(a);
    validate(b);
    if (psi.domain_dim() != a.dim || psi.codomain_dim() != b.dim)
        throw DimensionMismatch("morphism must be " + std::to_string(b.dim) + "x" + std::to_string(a.dim));
    CheckReport report;
    const Matrix pa = (psi * a.alpha).matrix(), ap = (b.alpha * psi).matrix();
    const Matrix pb = (psi * a.beta).matrix(), bp = (b.beta * psi).matrix();
    for (std::size_t i = 0; i < a.dim; ++i) {
        report.expect_equal("ψα = α'ψ", {i}, pa.column(i), ap.column(i));
        report.expect_equal("ψβ = β'ψ", {i}, pb.column(i), bp.column(i));
    }
    for (Role r : kRoles)
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j)
                report.expect_equal("ψ(x" + sym(r) + "y) = ψ(x)" + sym(r) + "'ψ(y)", {i, j},
                                    psi(a.product(r).product(i, j)),
                                    b.product(r).apply(psi.image(i), psi.image(j)));
    return report;
}

bool is_automorphism(const LinearMap& psi, const BiHomTrialgebra& a) {
    require_square(psi, a.dim, "automorphism");
    if (rank(psi.matrix()) != a.dim) return false;
    return is_morphism(psi, a, a).holds();
}

BiHomTrialgebra transport(const BiHomTrialgebra& a, const LinearMap& psi) {
    validate(a);
    require_square(psi, a.dim, "transport map");
    const LinearMap inv(inverse(psi.matrix()));
    const std::size_t n = a.dim;
    std::vector<Vector> pre(n);
    for (std::size_t i = 0; i < n; ++i) pre[i] = inv.image(i);
    BiHomTrialgebra out{a.name, n, {}, {}, {}, psi * a.alpha * inv, psi * a.beta * inv};
    for (Role r : kRoles)
        out.product(r) = build_tensor(n, r, [&](std::size_t i, std::size_t j) {
            return psi(a.product(r).apply(pre[i], pre[j]));
        });
    return out;
}

bool conjugate_automorphism_check(const BiHomTrialgebra& a, const LinearMap& psi, const LinearMap& phi) {
    require_square(psi, a.dim, "ψ");
    require_square(phi, a.dim, "φ");
    if (!is_automorphism(phi, a)) throw PreconditionFailed("φ is not an automorphism of " + a.name);
    const LinearMap inv(inverse(psi.matrix()));
    return is_automorphism(psi * phi * inv, transport(a, psi));
}

Construction untwist(const BiHomTrialgebra& a) {
    validate(a);
    const LinearMap ai(inverse(a.alpha.matrix()));
    const LinearMap bi(inverse(a.beta.matrix()));
    const std::size_t n = a.dim;
    BiHomTrialgebra out{a.name, n, {}, {}, {}, LinearMap::identity(n), LinearMap::identity(n)};
    for (Role r : kRoles)
        out.product(r) = build_tensor(n, r, [&](std::size_t i, std::size_t j) {
            return a.product(r).apply(ai.image(i), bi.image(j));
        });
    return {out, check_axioms(out)};
}

BiHomTrialgebra direct_sum(const BiHomTrialgebra& a, const BiHomTrialgebra& b) {
    validate(a);
    validate(b);
    const std::size_t n = a.dim + b.dim;
    BiHomTrialgebra out = BiHomTrialgebra::zero(n, a.name + "⊕" + b.name);
    for (Role r : kRoles) {
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j)
                for (std::size_t k = 0; k < a.dim; ++k) out.product(r).at(i, j, k) = a.product(r).at(i, j, k);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j)
                for (std::size_t k = 0; k < b.dim; ++k)
                    out.product(r).at(a.dim + i, a.dim + j, a.dim + k) = b.product(r).at(i, j, k);
    }
    Matrix al(n, n), be(n, n);
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c) {
            al(r, c) = a.alpha.matrix()(r, c);
            be(r, c) = a.beta.matrix()(r, c);
        }
    for (std::size_t r = 0; r < b.dim; ++r)
        for (std::size_t c = 0; c < b.dim; ++c) {
            al(a.dim + r, a.dim + c) = b.alpha.matrix()(r, c);
            be(a.dim + r, a.dim + c) = b.beta.matrix()(r, c);
        }
    out.alpha = LinearMap(std::move(al));
    out.beta = LinearMap(std::move(be));
    return out;
}

bool graph_subalgebra_check(const LinearMap& xi, const BiHomTrialgebra& a, const BiHomTrialgebra& b) {
    validate(a);
    validate(b);
    if (xi.domain_dim() != a.dim || xi.codomain_dim() != b.dim)
        throw DimensionMismatch("graph map must be " + std::to_string(b.dim) + "x" + std::to_string(a.dim));
    const BiHomTrialgebra sum = direct_sum(a, b);
    const std::size_t n = sum.dim;

    // g_i = (e_i, ξ e_i) spans Γ_ξ.
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < a.dim; ++i) {
        Vector g(n);
        g[i] = 1;
        Vector img = xi.image(i);
        for (std::size_t k = 0; k < b.dim; ++k) g[a.dim + k] = img[k];
        gens.push_back(std::move(g));
    }
    auto in_graph = [&](const Vector& v) {
        Vector u(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(a.dim));
        Vector w(v.begin() + static_cast<std::ptrdiff_t>(a.dim), v.end());
        return xi(u) == w;
    };
    for (const auto& g : gens)
        if (!in_graph(sum.alpha(g)) || !in_graph(sum.beta(g))) return false;
    for (Role r : kRoles)
        for (const auto& g : gens)
            for (const auto& h : gens)
                if (!in_graph(sum.product(r).apply(g, h))) return false;
    return true;
}

CheckReport rota_baxter_check(const BiHomTrialgebra& a, const RotaBaxterData& rb) {
    validate(a);
    require_square(rb.op, a.dim, "Rota-Baxter operator");
    CheckReport report;
    check_commutes(report, "Rα = αR", rb.op, a.alpha);
    check_commutes(report, "Rβ = βR", rb.op, a.beta);
    const LinearMap& R = rb.op;
    // Product on the left of each identity, product inside R on the right.
    const std::pair<Role, Role> pairs[] = {{Role::Right, Role::Left}, {Role::Left, Role::Right}, {Role::Middle, Role::Middle}};
    for (auto [outer, inner] : pairs) {
        const MulTensor& po = a.product(outer);
        const MulTensor& pi = a.product(inner);
        std::string cond = "R(x)" + sym(outer) + "R(y) = R(R(x)" + sym(inner) + "y + x" + sym(inner) + "R(y) + λ x" +
                           sym(inner) + "y)";
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                Vector lhs = po.apply(R.image(i), R.image(j));
                Vector inside = pi.apply(R.image(i), unit_vector(a.dim, j));
                inside = add(inside, pi.apply(unit_vector(a.dim, i), R.image(j)));
                axpy(inside, rb.weight, pi.product(i, j));
                report.expect_equal(cond, {i, j}, std::move(lhs), R(inside));
            }
    }
    return report;
}

CheckReport rota_baxter_check(const BiHomAlgebra& a, const RotaBaxterData& rb) {
    require_square(rb.op, a.dim, "Rota-Baxter operator");
    CheckReport report;
    check_commutes(report, "Rα = αR", rb.op, a.alpha);
    check_commutes(report, "Rβ = βR", rb.op, a.beta);
    const LinearMap& R = rb.op;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vector lhs = a.mu.apply(R.image(i), R.image(j));
            Vector inside = add(a.mu.apply(R.image(i), unit_vector(a.dim, j)), a.mu.apply(unit_vector(a.dim, i), R.image(j)));
            axpy(inside, rb.weight, a.mu.product(i, j));
            report.expect_equal("R(x)∗R(y) = R(R(x)∗y + x∗R(y) + λ x∗y)", {i, j}, std::move(lhs), R(inside));
        }
    return report;
}

RbInduced rb_induced(const BiHomAlgebra& a, const RotaBaxterData& rb) {
    require_square(rb.op, a.dim, "Rota-Baxter operator");
    require_square(a.alpha, a.dim, "α");
    require_square(a.beta, a.dim, "β");
    const std::size_t n = a.dim;
    const LinearMap& R = rb.op;
    MulTensor l = build_tensor(n, Role::Left, [&](std::size_t i, std::size_t j) {
        return a.mu.apply(unit_vector(n, i), R.image(j));
    });
    MulTensor r = build_tensor(n, Role::Right, [&](std::size_t i, std::size_t j) {
        return a.mu.apply(R.image(i), unit_vector(n, j));
    });
    MulTensor m = build_tensor(n, Role::Middle, [&](std::size_t i, std::size_t j) {
        return scale(rb.weight, a.mu.product(i, j));
    });
    BiHomTrialgebra out = from_products(a, std::move(l), std::move(r), std::move(m), "rb-induced");
    AxiomReport report = check_axioms(out);
    return {{std::move(out), std::move(report)}, rota_baxter_check(a, rb)};
}

SwapResult swap_maps(const BiHomTrialgebra& a) {
    validate(a);
    const Matrix id = Matrix::identity(a.dim);
    const Matrix& al = a.alpha.matrix();
    const Matrix& be = a.beta.matrix();
    SwapHypotheses h;
    h.alpha_involution = al * al == id;
    h.beta_involution = be * be == id;
    h.twists_inverse = al * be == id && be * al == id;
    BiHomTrialgebra out = a;
    std::swap(out.alpha, out.beta);
    return {std::move(out), h};
}

Construction sum_middle_right(const BiHomTrialgebra& a) {
    validate(a);
    const std::size_t n = a.dim;
    MulTensor star = build_tensor(n, Role::Middle, [&](std::size_t i, std::size_t j) {
        return add(a.right.product(i, j), a.middle.product(i, j));
    });
    MulTensor right = build_tensor(n, Role::Right, [&](std::size_t i, std::size_t j) {
        auto p = a.middle.product(i, j);
        return Vector(p.begin(), p.end());
    });
    BiHomTrialgebra out{a.name, n, a.left, std::move(right), std::move(star), a.alpha, a.beta};
    AxiomReport report = check_axioms(out);
    return {std::move(out), std::move(report)};
}

CommutatorResult commutator_construct(const BiHomTrialgebra& a) {
    validate(a);
    const std::size_t n = a.dim;
    CommutatorResult out;
    out.pair.star = build_tensor(n, Role::Left, [&](std::size_t i, std::size_t j) {
        return sub(a.left.product(i, j), a.right.product(j, i));
    });
    out.pair.bracket = build_tensor(n, Role::Middle, [&](std::size_t i, std::size_t j) {
        return sub(a.middle.product(i, j), a.middle.product(j, i));
    });
    const MulTensor& star = out.pair.star;
    const MulTensor& br = out.pair.bracket;
    const LinearMap ab = a.alpha * a.beta;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector rhs = add(br.apply(star.product(i, k), a.beta.image(j)), br.apply(a.alpha.image(i), star.product(j, k)));
                out.beta_form.expect_equal("[x,y]∗β(z) = [x∗z,β(y)] + [α(x),y∗z]", {i, j, k},
                                           star.apply(br.product(i, j), a.beta.image(k)), rhs);
                out.alpha_beta_form.expect_equal("[x,y]∗αβ(z) = [x∗z,β(y)] + [α(x),y∗z]", {i, j, k},
                                                 star.apply(br.product(i, j), ab.image(k)), rhs);
            }
    return out;
}

BiHomAlgebra total_sum(const BiHomTrialgebra& a) {
    validate(a);
    MulTensor mu = build_tensor(a.dim, Role::Left, [&](std::size_t i, std::size_t j) {
        return add(add(a.right.product(i, j), a.left.product(i, j)), a.middle.product(i, j));
    });
    return single_product(a, std::move(mu));
}

namespace {

void averaging_identities(CheckReport& report, const MulTensor& mu, const LinearMap& xi, const std::string& s) {
    const std::size_t n = mu.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector mid = mu.apply(xi.image(i), xi.image(j));
            report.expect_equal("ξ(ξ(x)" + s + "y) = ξ(x)" + s + "ξ(y)", {i, j},
                                xi(mu.apply(xi.image(i), unit_vector(n, j))), mid);
            report.expect_equal("ξ(x)" + s + "ξ(y) = ξ(x" + s + "ξ(y))", {i, j}, mid,
                                xi(mu.apply(unit_vector(n, i), xi.image(j))));
        }
}

}  // namespace

CheckReport averaging_check(const BiHomTrialgebra& a, const LinearMap& xi) {
    validate(a);
    require_square(xi, a.dim, "averaging operator");
    CheckReport report;
    check_commutes(report, "ξα = αξ", xi, a.alpha);
    check_commutes(report, "ξβ = βξ", xi, a.beta);
    for (Role r : kRoles) averaging_identities(report, a.product(r), xi, sym(r));
    return report;
}

CheckReport averaging_check(const BiHomAlgebra& a, const LinearMap& xi) {
    require_square(xi, a.dim, "averaging operator");
    CheckReport report;
    check_commutes(report, "ξα = αξ", xi, a.alpha);
    check_commutes(report, "ξβ = βξ", xi, a.beta);
    averaging_identities(report, a.mu, xi, "·");
    return report;
}

Construction averaging_induced(const BiHomAlgebra& a) {
    for (auto [name, map] : {std::pair<const char*, const LinearMap*>{"α", &a.alpha}, {"β", &a.beta}}) {
        CheckReport pre = averaging_check(a, *map);
        if (!pre.holds()) {
            const Violation& v = pre.violations.front();
            throw PreconditionFailed(std::string(name) + " is not an averaging operator: " + v.condition);
        }
    }
    const std::size_t n = a.dim;
    MulTensor l = build_tensor(n, Role::Left, [&](std::size_t i, std::size_t j) {
        return a.mu.apply(a.alpha.image(i), unit_vector(n, j));
    });
    MulTensor r = build_tensor(n, Role::Right, [&](std::size_t i, std::size_t j) {
        return a.mu.apply(unit_vector(n, i), a.beta.image(j));
    });
    MulTensor m = build_tensor(n, Role::Middle, [&](std::size_t i, std::size_t j) {
        return a.mu.apply(a.alpha.image(i), a.beta.image(j));
    });
    BiHomTrialgebra out = from_products(a, std::move(l), std::move(r), std::move(m), "averaging-induced");
    AxiomReport report = check_axioms(out);
    return {std::move(out), std::move(report)};
}

}  // namespace bihom
