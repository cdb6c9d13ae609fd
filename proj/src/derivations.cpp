#include "bihom/derivations.hpp"

#include "bihom/error.hpp"
#include "bihom/solve.hpp"

#include <sstream>

namespace bihom {

std::string_view status_name(TableStatus s) {
    switch (s) {
        case TableStatus::Match: return "match";
        case TableStatus::Mismatch: return "mismatch";
        case TableStatus::PaperSilent: return "paper-silent";
    }
    return "?";
}

std::string map_label(const LinearMap& m) {
    std::ostringstream out;
    bool first = true;
    const Matrix& x = m.matrix();
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) {
            const Scalar& v = x(r, c);
            if (v.is_zero()) continue;
            if (!first) out << '+';
            if (v != Scalar(1)) out << '(' << v << ')';
            out << 'E' << r + 1 << c + 1;
            first = false;
        }
    return first ? "0" : out.str();
}

namespace {

template <class Sink>
void derivation_conditions(const BiHomTrialgebra& a, const LinearMap& d, Sink&& sink) {
    validate(a);
    if (d.domain_dim() != a.dim || d.codomain_dim() != a.dim)
        throw DimensionMismatch("derivation must be " + std::to_string(a.dim) + "x" + std::to_string(a.dim));
    const std::size_t n = a.dim;
    const Matrix da = (d * a.alpha).matrix(), ad = (a.alpha * d).matrix();
    const Matrix db = (d * a.beta).matrix(), bd = (a.beta * d).matrix();
    for (std::size_t i = 0; i < n; ++i) sink("αd = dα", {i}, ad.column(i), da.column(i));
    for (std::size_t i = 0; i < n; ++i) sink("βd = dβ", {i}, bd.column(i), db.column(i));
    const LinearMap ab = a.alpha * a.beta;
    for (Role r : kRoles) {
        const MulTensor& mu = a.product(r);
        const std::string s(role_symbol(r));
        const std::string cond = "d(x" + s + "y) = d(x)" + s + "αβ(y) + αβ(x)" + s + "d(y)";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                sink(cond, {i, j}, d(mu.product(i, j)),
                     add(mu.apply(d.image(i), ab.image(j)), mu.apply(ab.image(i), d.image(j))));
    }
}

}  // namespace

CheckReport is_derivation(const BiHomTrialgebra& a, const LinearMap& d) {
    CheckReport report;
    derivation_conditions(a, d, [&](const std::string& c, std::vector<std::size_t> b, Vector l, Vector r) {
        report.expect_equal(c, std::move(b), std::move(l), std::move(r));
    });
    return report;
}

Vector derivation_residual(const BiHomTrialgebra& a, const LinearMap& d) {
    Vector out;
    derivation_conditions(a, d, [&](const std::string&, const std::vector<std::size_t>&, const Vector& l, const Vector& r) {
        for (std::size_t k = 0; k < l.size(); ++k) out.push_back(l[k] - r[k]);
    });
    return out;
}

DerivationSpace derivation_space(const BiHomTrialgebra& a) {
    validate(a);
    return {a.name, solve_maps(a.dim, [&](const LinearMap& d) { return derivation_residual(a, d); })};
}

DerivationRow derivation_table_row(const BiHomTrialgebra& a, const std::optional<PaperRow>& paper) {
    DerivationSpace space = derivation_space(a);
    DerivationRow row{a.name, space.dim(), std::nullopt, TableStatus::PaperSilent, std::move(space.basis), {}};
    if (!paper) return row;
    row.paper_dim = paper->dim;
    row.status = row.computed_dim == paper->dim ? TableStatus::Match : TableStatus::Mismatch;
    for (auto [r, c] : paper->entries)
        row.claims.push_back({r, c, is_derivation(a, literal_unit(a.dim, r, c)).holds(),
                              is_derivation(a, transposed_unit(a.dim, r, c)).holds()});
    return row;
}

}  // namespace bihom
