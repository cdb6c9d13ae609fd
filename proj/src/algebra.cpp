#include "bihom/algebra.hpp"

#include "bihom/error.hpp"

namespace bihom {

std::string_view role_name(Role r) {
    switch (r) {
        case Role::Left: return "left";
        case Role::Right: return "right";
        case Role::Middle: return "middle";
    }
    return "?";
}

std::string_view role_symbol(Role r) {
    switch (r) {
        case Role::Left: return "⊣";
        case Role::Right: return "⊢";
        case Role::Middle: return "⊥";
    }
    return "?";
}

MulTensor::MulTensor(std::size_t dim, Role role) : dim_(dim), role_(role), c_(dim * dim * dim) {}

void MulTensor::set_product(std::size_t i, std::size_t j, std::span<const Scalar> v) {
    if (v.size() != dim_) throw DimensionMismatch("product vector has wrong length");
    for (std::size_t k = 0; k < dim_; ++k) at(i, j, k) = v[k];
}

Vector MulTensor::apply(std::span<const Scalar> x, std::span<const Scalar> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("operand length differs from algebra dimension");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            auto p = product(i, j);
            if (bihom::is_zero(p)) continue;
            axpy(out, x[i] * y[j], p);
        }
    }
    return out;
}

std::size_t MulTensor::nonzero_products() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!bihom::is_zero(product(i, j))) ++n;
    return n;
}

LinearMap LinearMap::unit(std::size_t n, std::size_t q, std::size_t p) {
    Matrix m(n, n);
    m(q, p) = 1;
    return LinearMap(std::move(m));
}

LinearMap LinearMap::from_flat(std::size_t n, std::span<const Scalar> flat) {
    if (flat.size() != n * n) throw DimensionMismatch("flattened map has wrong length");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = flat[r * n + c];
    return LinearMap(std::move(m));
}

BiHomTrialgebra BiHomTrialgebra::zero(std::size_t n, std::string name) {
    return {std::move(name), n, MulTensor(n, Role::Left), MulTensor(n, Role::Right), MulTensor(n, Role::Middle),
            LinearMap::zero(n), LinearMap::zero(n)};
}

const MulTensor& BiHomTrialgebra::product(Role r) const {
    switch (r) {
        case Role::Left: return left;
        case Role::Right: return right;
        case Role::Middle: return middle;
    }
    return left;
}

MulTensor& BiHomTrialgebra::product(Role r) {
    return const_cast<MulTensor&>(std::as_const(*this).product(r));
}

void validate(const BiHomTrialgebra& a) {
    if (a.dim == 0) throw DimensionMismatch("algebra dimension must be positive");
    for (Role r : kRoles)
        if (a.product(r).dim() != a.dim) throw DimensionMismatch("product tensor dimension differs from algebra");
    for (const LinearMap* m : {&a.alpha, &a.beta})
        if (m->codomain_dim() != a.dim || m->domain_dim() != a.dim)
            throw DimensionMismatch("twisting map dimension differs from algebra");
}

Vector evaluate(const BiHomTrialgebra& a, Role role, std::span<const Scalar> x, std::span<const Scalar> y) {
    return a.product(role).apply(x, y);
}

// ---------------------------------------------------------------------------

namespace {

// One side of a ternary identity: either (x inner y) outer β(z) or α(x) outer (y inner z).
struct Side {
    bool left_nested;
    Role inner;
    Role outer;
};

struct TernaryAxiom {
    AxiomId id;
    Side lhs;
    Side rhs;
    std::string_view statement;
};

constexpr Role L = Role::Left, R = Role::Right, M = Role::Middle;

constexpr Side lnest(Role inner, Role outer) { return {true, inner, outer}; }
constexpr Side rnest(Role inner, Role outer) { return {false, inner, outer}; }

const std::array<TernaryAxiom, 11> kTernary{{
    {AxiomId::A1, lnest(L, L), rnest(L, L), "(x⊣y)⊣β(z) = α(x)⊣(y⊣z)"},
    {AxiomId::A2a, lnest(L, L), rnest(R, L), "(x⊣y)⊣β(z) = α(x)⊣(y⊢z)"},
    {AxiomId::A2b, lnest(L, L), rnest(M, L), "(x⊣y)⊣β(z) = α(x)⊣(y⊥z)"},
    {AxiomId::A3, lnest(L, L), rnest(L, R), "(x⊣y)⊣β(z) = α(x)⊢(y⊣z)"},
    {AxiomId::A4a, lnest(L, R), rnest(R, R), "(x⊣y)⊢β(z) = α(x)⊢(y⊢z)"},
    {AxiomId::A4b, lnest(L, R), lnest(M, R), "(x⊣y)⊢β(z) = (x⊥y)⊢β(z)"},
    {AxiomId::A5, lnest(R, R), rnest(R, R), "(x⊢y)⊢β(z) = α(x)⊢(y⊢z)"},
    {AxiomId::A6, lnest(M, L), rnest(L, M), "(x⊥y)⊣β(z) = α(x)⊥(y⊣z)"},
    {AxiomId::A7, lnest(L, M), rnest(R, M), "(x⊣y)⊥β(z) = α(x)⊥(y⊢z)"},
    {AxiomId::A8, lnest(R, M), rnest(M, R), "(x⊢y)⊥β(z) = α(x)⊢(y⊥z)"},
    {AxiomId::A9, lnest(M, M), rnest(M, M), "(x⊥y)⊥β(z) = α(x)⊥(y⊥z)"},
}};

struct Endomorphism {
    AxiomId id;
    bool use_beta;
    Role role;
    std::string_view statement;
};

const std::array<Endomorphism, 6> kEndo{{
    {AxiomId::M1, false, L, "α(x⊣y) = α(x)⊣α(y)"},
    {AxiomId::M2, false, R, "α(x⊢y) = α(x)⊢α(y)"},
    {AxiomId::M3, false, M, "α(x⊥y) = α(x)⊥α(y)"},
    {AxiomId::M4, true, L, "β(x⊣y) = β(x)⊣β(y)"},
    {AxiomId::M5, true, R, "β(x⊢y) = β(x)⊢β(y)"},
    {AxiomId::M6, true, M, "β(x⊥y) = β(x)⊥β(y)"},
}};

// Basis products and twist images, computed once per check.
struct Tables {
    const BiHomTrialgebra& a;
    std::vector<Vector> alpha_img, beta_img;

    explicit Tables(const BiHomTrialgebra& alg) : a(alg) {
        validate(alg);
        for (std::size_t i = 0; i < alg.dim; ++i) {
            alpha_img.push_back(alg.alpha.image(i));
            beta_img.push_back(alg.beta.image(i));
        }
    }

    Vector side(const Side& s, std::size_t i, std::size_t j, std::size_t k) const {
        const auto& inner = a.product(s.inner);
        const auto& outer = a.product(s.outer);
        if (s.left_nested) {
            auto xy = inner.product(i, j);
            return outer.apply(xy, beta_img[k]);
        }
        auto yz = inner.product(j, k);
        return outer.apply(alpha_img[i], yz);
    }
};

}  // namespace

std::string_view axiom_name(AxiomId id) {
    static constexpr std::array<std::string_view, kAxiomCount> names{
        "C0", "A1", "A2a", "A2b", "A3", "A4a", "A4b", "A5", "A6", "A7", "A8", "A9",
        "M1", "M2", "M3", "M4", "M5", "M6"};
    return names[static_cast<std::size_t>(id)];
}

std::optional<AxiomId> axiom_from_name(std::string_view name) {
    for (std::size_t k = 0; k < kAxiomCount; ++k)
        if (axiom_name(static_cast<AxiomId>(k)) == name) return static_cast<AxiomId>(k);
    return std::nullopt;
}

std::string_view axiom_statement(AxiomId id) {
    if (id == AxiomId::C0) return "αβ = βα";
    for (const auto& t : kTernary)
        if (t.id == id) return t.statement;
    for (const auto& e : kEndo)
        if (e.id == id) return e.statement;
    return "";
}

const std::vector<AxiomId>& structural_axioms() {
    static const std::vector<AxiomId> ids{AxiomId::C0, AxiomId::A1, AxiomId::A2a, AxiomId::A2b,
                                          AxiomId::A3, AxiomId::A4a, AxiomId::A4b, AxiomId::A5,
                                          AxiomId::A6, AxiomId::A7, AxiomId::A8, AxiomId::A9};
    return ids;
}

const std::vector<AxiomId>& multiplicativity_axioms() {
    static const std::vector<AxiomId> ids{AxiomId::M1, AxiomId::M2, AxiomId::M3,
                                          AxiomId::M4, AxiomId::M5, AxiomId::M6};
    return ids;
}

bool AxiomReport::all_hold() const {
    for (const auto& r : results)
        if (!r.holds) return false;
    return true;
}

const AxiomResult* AxiomReport::find(AxiomId id) const {
    for (const auto& r : results)
        if (r.id == id) return &r;
    return nullptr;
}

bool AxiomReport::holds(AxiomId id) const {
    const AxiomResult* r = find(id);
    return r && r->holds;
}

std::vector<AxiomId> AxiomReport::failing() const {
    std::vector<AxiomId> out;
    for (const auto& r : results)
        if (!r.holds) out.push_back(r.id);
    return out;
}

std::uint32_t AxiomReport::profile() const {
    std::uint32_t bits = 0;
    for (const auto& r : results)
        if (r.holds) bits |= 1u << static_cast<unsigned>(r.id);
    return bits;
}

void AxiomReport::merge(const AxiomReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
}

AxiomReport check_axioms(const BiHomTrialgebra& a) {
    Tables t(a);
    const std::size_t n = a.dim;
    AxiomReport report;

    AxiomResult c0{AxiomId::C0, true, {}};
    for (std::size_t i = 0; i < n; ++i) {
        Vector ab = a.alpha(t.beta_img[i]);
        Vector ba = a.beta(t.alpha_img[i]);
        if (ab != ba) c0.witnesses.push_back({i, 0, 0, 1, std::move(ab), std::move(ba)});
    }
    c0.holds = c0.witnesses.empty();
    report.results.push_back(std::move(c0));

    for (const auto& ax : kTernary) {
        AxiomResult res{ax.id, true, {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vector l = t.side(ax.lhs, i, j, k);
                    Vector r = t.side(ax.rhs, i, j, k);
                    if (l != r) res.witnesses.push_back({i, j, k, 3, std::move(l), std::move(r)});
                }
        res.holds = res.witnesses.empty();
        report.results.push_back(std::move(res));
    }
    return report;
}

AxiomReport check_multiplicativity(const BiHomTrialgebra& a) {
    Tables t(a);
    const std::size_t n = a.dim;
    AxiomReport report;
    for (const auto& e : kEndo) {
        const LinearMap& f = e.use_beta ? a.beta : a.alpha;
        const auto& img = e.use_beta ? t.beta_img : t.alpha_img;
        const MulTensor& mu = a.product(e.role);
        AxiomResult res{e.id, true, {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vector l = f(mu.product(i, j));
                Vector r = mu.apply(img[i], img[j]);
                if (l != r) res.witnesses.push_back({i, j, 0, 2, std::move(l), std::move(r)});
            }
        res.holds = res.witnesses.empty();
        report.results.push_back(std::move(res));
    }
    return report;
}

AxiomReport check_all(const BiHomTrialgebra& a) {
    AxiomReport r = check_axioms(a);
    r.merge(check_multiplicativity(a));
    return r;
}

}  // namespace bihom
