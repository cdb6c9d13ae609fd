#include "bihom/centroids.hpp"

#include "bihom/derivations.hpp"
#include "bihom/error.hpp"
#include "bihom/solve.hpp"

namespace bihom {

namespace {

void require_square(const LinearMap& m, std::size_t n) {
    if (m.domain_dim() != n || m.codomain_dim() != n)
        throw DimensionMismatch("map must be " + std::to_string(n) + "x" + std::to_string(n));
}

void append(Vector& out, std::span<const Scalar> v) {
    out.insert(out.end(), v.begin(), v.end());
}

void append_commutator(Vector& out, const LinearMap& f, const LinearMap& g) {
    append(out, (f * g - g * f).flat());
}

}  // namespace

Matrix centralizer_system(const BiHomTrialgebra& a, const std::vector<Vector>& h) {
    validate(a);
    const std::size_t n = a.dim;
    for (const auto& v : h)
        if (v.size() != n) throw DimensionMismatch("centralizer generators must have length " + std::to_string(n));
    const LinearMap ab = a.alpha * a.beta;
    std::vector<Vector> cols;
    for (std::size_t u = 0; u < n; ++u) {
        const Vector x = ab.image(u);
        Vector col;
        for (Role r : kRoles)
            for (const auto& v : h) {
                append(col, a.product(r).apply(x, v));
                append(col, a.product(r).apply(v, x));
            }
        cols.push_back(std::move(col));
    }
    const std::size_t rows = cols.front().size();
    if (rows == 0) return Matrix(0, n);
    return Matrix::from_columns(rows, cols);
}

CentralizerSpace centralizer(const BiHomTrialgebra& a, const std::vector<Vector>& h, bool restrict_to_h) {
    const std::size_t n = a.dim;
    const Matrix sys = centralizer_system(a, h);
    CentralizerSpace out{h, {}};
    if (!restrict_to_h) {
        if (sys.rows() == 0) {
            for (std::size_t i = 0; i < n; ++i) out.basis.push_back(unit_vector(n, i));
        } else {
            out.basis = canonical_span_basis(n, nullspace(sys));
        }
        return out;
    }
    const std::vector<Vector> span = canonical_span_basis(n, h);
    if (span.empty()) return out;
    const Matrix hm = Matrix::from_columns(n, span);
    std::vector<Vector> coeffs;
    if (sys.rows() == 0) {
        for (std::size_t i = 0; i < span.size(); ++i) coeffs.push_back(unit_vector(span.size(), i));
    } else {
        coeffs = nullspace(sys * hm);
    }
    std::vector<Vector> xs;
    for (const auto& c : coeffs) xs.push_back(hm.apply(c));
    out.basis = canonical_span_basis(n, xs);
    return out;
}

CheckReport is_centroid_element(const BiHomTrialgebra& a, const LinearMap& psi, CentroidReading reading) {
    validate(a);
    require_square(psi, a.dim);
    const std::size_t n = a.dim;
    CheckReport report;
    const Matrix pa = (psi * a.alpha).matrix(), ap = (a.alpha * psi).matrix();
    const Matrix pb = (psi * a.beta).matrix(), bp = (a.beta * psi).matrix();
    for (std::size_t i = 0; i < n; ++i) report.expect_equal("αψ = ψα", {i}, ap.column(i), pa.column(i));
    for (std::size_t i = 0; i < n; ++i) report.expect_equal("βψ = ψβ", {i}, bp.column(i), pb.column(i));
    const LinearMap ab = a.alpha * a.beta;
    const LinearMap ap_map = a.alpha * psi;
    for (Role r : kRoles) {
        const MulTensor& mu = a.product(r);
        const std::string s(role_symbol(r));
        const bool literal = reading == CentroidReading::LiteralRight && r == Role::Right;
        const std::string outer = literal ? "ψ(x)" + s + "αψ(y)" : "ψ(x)" + s + "αβ(y)";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vector pi = psi.image(i), pj = psi.image(j);
                Vector lhs = mu.apply(pi, literal ? ap_map.image(j) : ab.image(j));
                Vector mid = mu.apply(pi, pj);
                Vector rhs = mu.apply(ab.image(i), pj);
                report.expect_equal(outer + " = ψ(x)" + s + "ψ(y)", {i, j}, std::move(lhs), mid);
                report.expect_equal("ψ(x)" + s + "ψ(y) = αβ(x)" + s + "ψ(y)", {i, j}, std::move(mid), std::move(rhs));
            }
    }
    return report;
}

std::vector<LinearMap> centroid_linear_space(const BiHomTrialgebra& a, const std::vector<LinearMap>* within) {
    validate(a);
    if (within && within->empty()) return {};
    const std::size_t n = a.dim;
    const LinearMap ab = a.alpha * a.beta;
    auto residual = [&](const LinearMap& psi) {
        Vector out;
        append_commutator(out, a.alpha, psi);
        append_commutator(out, a.beta, psi);
        for (Role r : kRoles) {
            const MulTensor& mu = a.product(r);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    append(out, sub(mu.apply(psi.image(i), ab.image(j)), mu.apply(ab.image(i), psi.image(j))));
        }
        return out;
    };
    return solve_maps(n, residual, within ? *within : std::vector<LinearMap>{});
}

std::vector<QuadPoly> centroid_obstruction(const BiHomTrialgebra& a, const std::vector<LinearMap>& basis) {
    validate(a);
    const std::size_t n = a.dim;
    const std::size_t m = basis.size();
    const LinearMap ab = a.alpha * a.beta;
    std::vector<std::vector<Vector>> img(m);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < n; ++i) img[t].push_back(basis[t].image(i));
    std::vector<QuadPoly> polys;
    for (Role r : kRoles) {
        const MulTensor& mu = a.product(r);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<QuadPoly> coord(n, QuadPoly::zero(m));
                for (std::size_t s = 0; s < m; ++s) {
                    const Vector outer = mu.apply(img[s][i], ab.image(j));
                    for (std::size_t k = 0; k < n; ++k) coord[k].lin[s] -= outer[k];
                    for (std::size_t t = 0; t < m; ++t) {
                        const Vector v = mu.apply(img[s][i], img[t][j]);
                        for (std::size_t k = 0; k < n; ++k)
                            if (!v[k].is_zero()) coord[k].add_monomial(s, t, v[k]);
                    }
                }
                for (auto& p : coord)
                    if (!p.is_zero()) polys.push_back(std::move(p));
            }
    }
    return normalize(polys);
}

CentroidSpace centroid_space(const BiHomTrialgebra& a, const std::vector<LinearMap>* within) {
    CentroidSpace out;
    out.algebra = a.name;
    out.linear_basis = centroid_linear_space(a, within);
    const std::size_t m = out.linear_basis.size();
    out.obstruction = centroid_obstruction(a, out.linear_basis);
    out.identically_zero = out.obstruction.empty();
    const auto w = max_linear_subspace(m, out.obstruction);
    if (w) {
        std::vector<LinearMap> maps;
        for (const auto& coeffs : *w) maps.push_back(combine(out.linear_basis, coeffs));
        out.max_subspace = canonical_maps(a.dim, maps);
    }
    if (m <= 2) out.description = describe_vanishing_set(m, out.obstruction);
    return out;
}

std::vector<LinearMap> central_derivations(const BiHomTrialgebra& a) {
    validate(a);
    const std::size_t n = a.dim;
    std::vector<Vector> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
    const Matrix z = centralizer_system(a, all);
    auto residual = [&](const LinearMap& psi) {
        Vector out;
        for (std::size_t i = 0; i < n; ++i) append(out, z.apply(psi.image(i)));
        for (Role r : kRoles)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) append(out, psi(a.product(r).product(i, j)));
        return out;
    };
    return solve_maps(n, residual);
}

CentroidRow centroid_table_row(const BiHomTrialgebra& a, const std::optional<PaperRow>& paper) {
    CentroidSpace space = centroid_space(a);
    CentroidRow row;
    row.algebra = a.name;
    row.computed_dim = space.dim();
    row.stage1_dim = space.parameters();
    row.identically_zero = space.identically_zero;
    row.basis = std::move(space.max_subspace);
    if (!paper) return row;
    row.paper_dim = paper->dim;
    row.status = row.computed_dim == paper->dim ? TableStatus::Match : TableStatus::Mismatch;
    for (auto [r, c] : paper->entries)
        row.claims.push_back({r, c, is_centroid_element(a, literal_unit(a.dim, r, c)).holds(),
                              is_centroid_element(a, transposed_unit(a.dim, r, c)).holds()});
    return row;
}

CentDerReport cent_der_property_suite(const BiHomTrialgebra& a) {
    const std::size_t n = a.dim;
    CentDerReport out;
    out.algebra = a.name;
    const std::vector<LinearMap> der = derivation_space(a).basis;
    const CentroidSpace cent = centroid_space(a);
    out.centroid_elements = cent.max_subspace.size();
    out.derivations = der.size();
    out.central = central_derivations(a);

    const CentroidSpace cap = centroid_space(a, &der);
    out.cent_cap_der = cap.max_subspace;
    out.cent_cap_der_linear = cap.identically_zero;
    out.central_equals_cent_cap_der = cap.identically_zero && same_span(n, out.central, cap.linear_basis);
    if (!out.central_equals_cent_cap_der) {
        std::string detail = "dim C(A) = " + std::to_string(out.central.size()) + ", Cent∩Der ";
        detail += cap.identically_zero ? "= linear space of dim " + std::to_string(cap.parameters())
                                       : "is quadratic; largest linear subspace dim " + std::to_string(cap.dim());
        out.hard_failures.push_back({"C(A) = Cent(A) ∩ Der(A)", {}, {}, detail});
    }

    auto in_central = [&](const LinearMap& m) { return in_span(out.central, m); };
    for (const auto& phi : cent.max_subspace)
        for (const auto& d : der) {
            const LinearMap phid = phi * d;
            const LinearMap dphi = d * phi;
            const LinearMap bracket = dphi - phid;
            if (!is_derivation(a, phid).holds())
                out.hard_failures.push_back({"φ∘d ∈ Der(A)", phi, d, map_label(phid)});
            const bool i_lhs = is_centroid_element(a, dphi).holds();
            const bool i_rhs = in_central(phid);
            if (i_lhs != i_rhs)
                out.observations.push_back({"d∘φ ∈ Cent(A) ⇔ φ∘d ∈ C(A)", phi, d,
                                            std::string(i_lhs ? "left holds" : "left fails") + ", " +
                                                (i_rhs ? "right holds" : "right fails")});
            const bool ii_lhs = is_derivation(a, dphi).holds();
            const bool ii_rhs = in_central(bracket);
            if (ii_lhs != ii_rhs)
                out.observations.push_back({"d∘φ ∈ Der(A) ⇔ [d,φ] ∈ C(A)", phi, d,
                                            std::string(ii_lhs ? "left holds" : "left fails") + ", " +
                                                (ii_rhs ? "right holds" : "right fails")});
            if (!is_centroid_element(a, bracket).holds())
                out.observations.push_back({"[Cent(A), Der(A)] ⊆ Cent(A)", phi, d, map_label(bracket)});
        }
    return out;
}

}  // namespace bihom
