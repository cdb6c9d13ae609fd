#include "bihom/solve.hpp"

namespace bihom {

namespace {

std::vector<Vector> flatten(const std::vector<LinearMap>& maps) {
    std::vector<Vector> out;
    out.reserve(maps.size());
    for (const auto& m : maps) out.push_back(m.flat());
    return out;
}

std::vector<LinearMap> unflatten(std::size_t n, const std::vector<Vector>& flats) {
    std::vector<LinearMap> out;
    out.reserve(flats.size());
    for (const auto& f : flats) out.push_back(LinearMap::from_flat(n, f));
    return out;
}

}  // namespace

std::vector<LinearMap> unit_maps(std::size_t n) {
    std::vector<LinearMap> out;
    out.reserve(n * n);
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p) out.push_back(LinearMap::unit(n, q, p));
    return out;
}

LinearMap combine(const std::vector<LinearMap>& basis, std::span<const Scalar> coeffs) {
    if (basis.empty()) return {};
    LinearMap out = LinearMap::zero(basis.front().dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!coeffs[i].is_zero()) out = out + coeffs[i] * basis[i];
    return out;
}

std::vector<LinearMap> solve_maps(std::size_t n, const MapResidual& residual, const std::vector<LinearMap>& basis) {
    const bool full = basis.empty();
    const std::vector<LinearMap> gens = full ? unit_maps(n) : canonical_maps(n, basis);
    if (gens.empty()) return {};
    std::vector<Vector> cols;
    cols.reserve(gens.size());
    for (const auto& g : gens) cols.push_back(residual(g));
    const std::size_t rows = cols.front().size();
    std::vector<Vector> kernel = rows == 0 ? std::vector<Vector>{} : nullspace(Matrix::from_columns(rows, cols));
    if (rows == 0)
        for (std::size_t i = 0; i < gens.size(); ++i) kernel.push_back(unit_vector(gens.size(), i));
    std::vector<LinearMap> out;
    for (const auto& k : kernel) out.push_back(combine(gens, k));
    return canonical_maps(n, out);
}

std::vector<LinearMap> canonical_maps(std::size_t n, const std::vector<LinearMap>& maps) {
    return unflatten(n, canonical_span_basis(n * n, flatten(maps)));
}

bool in_span(const std::vector<LinearMap>& basis, const LinearMap& m) {
    return in_span(flatten(basis), m.flat());
}

std::vector<LinearMap> intersect(std::size_t n, const std::vector<LinearMap>& a, const std::vector<LinearMap>& b) {
    return unflatten(n, intersect_spans(n * n, flatten(a), flatten(b)));
}

bool same_span(std::size_t n, const std::vector<LinearMap>& a, const std::vector<LinearMap>& b) {
    return canonical_maps(n, a) == canonical_maps(n, b);
}

}  // namespace bihom
