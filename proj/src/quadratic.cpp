#include "bihom/quadratic.hpp"

#include "bihom/error.hpp"

#include <algorithm>
#include <sstream>

namespace bihom {

QuadPoly QuadPoly::zero(std::size_t m) {
    return {Matrix(m, m), Vector(m), Scalar()};
}

bool QuadPoly::is_zero() const {
    return quad.is_zero() && bihom::is_zero(lin) && constant.is_zero();
}

bool QuadPoly::is_homogeneous_quadratic() const {
    return bihom::is_zero(lin) && constant.is_zero();
}

Scalar QuadPoly::operator()(std::span<const Scalar> t) const {
    Scalar v = constant;
    const std::size_t m = vars();
    for (std::size_t a = 0; a < m; ++a) {
        if (t[a].is_zero()) continue;
        v += lin[a] * t[a];
        for (std::size_t b = 0; b < m; ++b) v += quad(a, b) * t[a] * t[b];
    }
    return v;
}

void QuadPoly::add_monomial(std::size_t a, std::size_t b, const Scalar& c) {
    if (a == b) {
        quad(a, a) += c;
        return;
    }
    const Scalar half = c / Scalar(2);
    quad(a, b) += half;
    quad(b, a) += half;
}

QuadPoly QuadPoly::substitute(std::span<const Scalar> p0, const std::vector<Vector>& directions) const {
    const std::size_t m = vars();
    const std::size_t u = directions.size();
    QuadPoly out = zero(u);
    out.constant = (*this)(p0);
    const Vector qp = quad.apply(p0);
    for (std::size_t x = 0; x < u; ++x) {
        const Vector& dx = directions[x];
        const Vector qdx = quad.apply(dx);
        for (std::size_t a = 0; a < m; ++a) out.lin[x] += (lin[a] + Scalar(2) * qp[a]) * dx[a];
        for (std::size_t y = 0; y < u; ++y)
            for (std::size_t a = 0; a < m; ++a) out.quad(y, x) += directions[y][a] * qdx[a];
    }
    return out;
}

std::map<std::string, Scalar> QuadPoly::coefficients() const {
    std::map<std::string, Scalar> out;
    const std::size_t m = vars();
    for (std::size_t a = 0; a < m; ++a) {
        if (!quad(a, a).is_zero()) out["t" + std::to_string(a + 1) + "^2"] = quad(a, a);
        for (std::size_t b = a + 1; b < m; ++b)
            if (!quad(a, b).is_zero())
                out["t" + std::to_string(a + 1) + "*t" + std::to_string(b + 1)] = Scalar(2) * quad(a, b);
    }
    for (std::size_t a = 0; a < m; ++a)
        if (!lin[a].is_zero()) out["t" + std::to_string(a + 1)] = lin[a];
    if (!constant.is_zero()) out["1"] = constant;
    return out;
}

namespace {

void write_term(std::ostringstream& out, bool& first, const Scalar& c, const std::string& mono) {
    const bool negative = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    const Scalar mag = negative ? -c : c;
    std::string coeff = mag.str();
    if (!mag.is_real() && sgn(mag.re()) != 0) coeff = "(" + coeff + ")";
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    first = false;
    if (mono.empty()) out << coeff;
    else if (coeff == "1") out << mono;
    else out << coeff << '*' << mono;
}

}  // namespace

std::string QuadPoly::str() const {
    std::ostringstream out;
    bool first = true;
    const std::size_t m = vars();
    for (std::size_t a = 0; a < m; ++a) {
        if (!quad(a, a).is_zero()) write_term(out, first, quad(a, a), "t" + std::to_string(a + 1) + "^2");
        for (std::size_t b = a + 1; b < m; ++b)
            if (!quad(a, b).is_zero())
                write_term(out, first, Scalar(2) * quad(a, b), "t" + std::to_string(a + 1) + "*t" + std::to_string(b + 1));
    }
    for (std::size_t a = 0; a < m; ++a)
        if (!lin[a].is_zero()) write_term(out, first, lin[a], "t" + std::to_string(a + 1));
    if (!constant.is_zero()) write_term(out, first, constant, "");
    return first ? "0" : out.str();
}

std::vector<QuadPoly> normalize(const std::vector<QuadPoly>& polys) {
    std::vector<QuadPoly> out;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        Scalar lead;
        const std::size_t m = p.vars();
        for (std::size_t a = 0; a < m && lead.is_zero(); ++a)
            for (std::size_t b = a; b < m && lead.is_zero(); ++b) lead = a == b ? p.quad(a, a) : Scalar(2) * p.quad(a, b);
        for (std::size_t a = 0; a < m && lead.is_zero(); ++a) lead = p.lin[a];
        if (lead.is_zero()) lead = p.constant;
        const Scalar inv = lead.inverse();
        QuadPoly q{inv * p.quad, scale(inv, p.lin), inv * p.constant};
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
    }
    return out;
}

namespace {

std::vector<Vector> pull_back(const std::vector<Vector>& basis, const std::vector<Vector>& coords, std::size_t m) {
    std::vector<Vector> out;
    for (const auto& w : coords) {
        Vector v(m);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!w[i].is_zero()) axpy(v, w[i], basis[i]);
        out.push_back(std::move(v));
    }
    return out;
}

// Isotropic directions of a symmetric rank-2 form, one per linear factor, as
// vectors completing the radical to the factor's kernel. Empty when the form
// does not split over ℚ(i).
std::vector<Vector> isotropic_lines(const Matrix& g) {
    const std::size_t u = g.rows();
    const RrefResult r = rref(g);
    const std::size_t p1 = r.pivots[0], p2 = r.pivots[1];
    const Scalar& a = g(p1, p1);
    const Scalar& b = g(p1, p2);
    const Scalar& c = g(p2, p2);
    auto vec = [&](const Scalar& x, const Scalar& y) {
        Vector v(u);
        v[p1] = x;
        v[p2] = y;
        return v;
    };
    if (a.is_zero()) {
        if (c.is_zero()) return {vec(1, 0), vec(0, 1)};
        return {vec(1, 0), vec(c, Scalar(-2) * b)};
    }
    auto root = (b * b - a * c).sqrt();
    if (!root) return {};
    return {vec(-b + *root, a), vec(-b - *root, a)};
}

std::vector<Vector> search(std::size_t m, const std::vector<Vector>& subspace, const std::vector<Matrix>& forms) {
    if (subspace.empty()) return {};
    const Matrix u = Matrix::from_columns(m, subspace);
    const Matrix ut = u.transpose();
    std::vector<Matrix> restricted;
    for (const auto& q : forms) {
        Matrix g = ut * q * u;
        if (!g.is_zero()) restricted.push_back(std::move(g));
    }
    if (restricted.empty()) return subspace;
    for (const auto& g : restricted)
        if (rank(g) == 1) return search(m, pull_back(subspace, nullspace(g), m), forms);
    for (const auto& g : restricted) {
        if (rank(g) != 2) continue;
        std::vector<Vector> radical = nullspace(g);
        const std::vector<Vector> lines = isotropic_lines(g);
        if (lines.empty()) return search(m, pull_back(subspace, radical, m), forms);
        std::vector<Vector> best;
        bool have = false;
        for (const auto& v : lines) {
            std::vector<Vector> branch = radical;
            branch.push_back(v);
            std::vector<Vector> cand = search(m, pull_back(subspace, branch, m), forms);
            if (!have || cand.size() > best.size()) best = std::move(cand);
            have = true;
        }
        return best;
    }
    throw ObstructionTooLarge("quadratic obstruction of rank " + std::to_string(rank(restricted.front())) +
                              " on a " + std::to_string(subspace.size()) + "-dimensional parameter space");
}

}  // namespace

std::optional<std::vector<Vector>> max_linear_subspace(std::size_t m, const std::vector<QuadPoly>& polys) {
    std::vector<Vector> lins;
    std::vector<Matrix> forms;
    for (const auto& p : polys) {
        if (!p.constant.is_zero()) return std::nullopt;
        if (!is_zero(p.lin)) lins.push_back(p.lin);
        if (!p.quad.is_zero()) forms.push_back(p.quad);
    }
    if (m == 0) return std::vector<Vector>{};
    std::vector<Vector> kernel;
    if (lins.empty())
        for (std::size_t a = 0; a < m; ++a) kernel.push_back(unit_vector(m, a));
    else
        kernel = nullspace(Matrix::from_rows(m, lins));
    return canonical_span_basis(m, search(m, kernel, forms));
}

std::string_view kind_name(VanishingComponent::Kind k) {
    using K = VanishingComponent::Kind;
    switch (k) {
        case K::Everything: return "everything";
        case K::Line: return "line";
        case K::Point: return "point";
        case K::Conic: return "conic";
        case K::Finite: return "finite";
    }
    return "?";
}

namespace {

using Univariate = std::vector<Scalar>;  // low degree first

void trim(Univariate& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Univariate univariate(const QuadPoly& p) {
    Univariate u{p.constant, p.lin[0], p.quad(0, 0)};
    trim(u);
    return u;
}

Univariate poly_mod(Univariate a, const Univariate& b) {
    while (a.size() >= b.size()) {
        const Scalar f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

Univariate poly_gcd(Univariate a, Univariate b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Univariate r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Scalar inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

// Common zeros of univariate polynomials: nullopt for "every value", otherwise
// the rational roots, with `irrational` set when the gcd has roots outside ℚ(i).
std::optional<std::vector<Scalar>> common_roots(const std::vector<Univariate>& polys, Univariate& g) {
    g.clear();
    for (const auto& p : polys) g = poly_gcd(g, p);
    if (g.empty()) return std::nullopt;
    std::vector<Scalar> roots;
    if (g.size() == 2) roots.push_back(-g[0]);
    if (g.size() == 3) {
        const Scalar disc = g[1] * g[1] - Scalar(4) * g[0];
        if (auto s = disc.sqrt()) {
            roots.push_back((-g[1] + *s) / Scalar(2));
            if (!s->is_zero()) roots.push_back((-g[1] - *s) / Scalar(2));
        }
    }
    return roots;
}

QuadPoly univariate_poly(const Univariate& g) {
    QuadPoly p = QuadPoly::zero(1);
    if (g.size() > 0) p.constant = g[0];
    if (g.size() > 1) p.lin[0] = g[1];
    if (g.size() > 2) p.quad(0, 0) = g[2];
    return p;
}

struct Line {
    Vector point;
    Vector direction;
    QuadPoly equation;
};

// ℓ1·t1 + ℓ2·t2 + ℓ0 = 0; nullopt for the line at infinity.
std::optional<Line> affine_line(const Scalar& l1, const Scalar& l2, const Scalar& l0) {
    if (l1.is_zero() && l2.is_zero()) return std::nullopt;
    Line line;
    line.direction = {-l2, l1};
    line.point = l1.is_zero() ? Vector{Scalar(), -l0 / l2} : Vector{-l0 / l1, Scalar()};
    line.equation = QuadPoly::zero(2);
    line.equation.lin = {l1, l2};
    line.equation.constant = l0;
    return line;
}

// Splits a polynomial in two variables into affine line factors when it
// factors over ℚ(i); nullopt when it is an irreducible conic.
std::optional<std::vector<Line>> split_lines(const QuadPoly& p) {
    if (p.quad.is_zero()) {
        std::vector<Line> out;
        if (auto l = affine_line(p.lin[0], p.lin[1], p.constant)) out.push_back(*l);
        return out;
    }
    Matrix h(3, 3);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) h(a, b) = p.quad(a, b);
        h(a, 2) = h(2, a) = p.lin[a] / Scalar(2);
    }
    h(2, 2) = p.constant;
    const std::size_t r = rank(h);
    std::vector<Line> out;
    if (r == 1) {
        const RrefResult red = rref(h);
        const auto row = h.row(red.pivots[0]);
        if (auto l = affine_line(row[0], row[1], row[2])) out.push_back(*l);
        return out;
    }
    if (r == 3) return std::nullopt;
    const std::vector<Vector> radical = nullspace(h);
    const std::vector<Vector> lines = isotropic_lines(h);
    if (lines.empty()) return std::nullopt;
    for (const auto& v : lines) {
        const Vector normal = nullspace(Matrix::from_rows(3, {radical[0], v}))[0];
        if (auto l = affine_line(normal[0], normal[1], normal[2])) out.push_back(*l);
    }
    return out;
}

bool on_line(const Vector& pt, const VanishingComponent& line) {
    const Vector d = sub(pt, line.point);
    return (d[0] * line.direction[1] - d[1] * line.direction[0]).is_zero();
}

std::vector<VanishingComponent> describe_two(const std::vector<QuadPoly>& polys) {
    using K = VanishingComponent::Kind;
    // Prefer a polynomial that splits into lines.
    std::size_t pick = 0;
    std::optional<std::vector<Line>> lines;
    for (std::size_t i = 0; i < polys.size(); ++i)
        if ((lines = split_lines(polys[i]))) {
            pick = i;
            break;
        }
    std::vector<VanishingComponent> out;
    if (!lines) {
        if (polys.size() == 1) out.push_back({K::Conic, {}, {}, polys});
        else out.push_back({K::Finite, {}, {}, polys});
        return out;
    }
    std::vector<VanishingComponent> points;
    for (const auto& line : *lines) {
        std::vector<Univariate> rest;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (i != pick) rest.push_back(univariate(polys[i].substitute(line.point, {line.direction})));
        Univariate g;
        const auto roots = common_roots(rest, g);
        if (!roots) {
            out.push_back({K::Line, line.point, line.direction, {}});
            continue;
        }
        for (const auto& s : *roots) {
            Vector pt = line.point;
            axpy(pt, s, line.direction);
            points.push_back({K::Point, std::move(pt), {}, {}});
        }
        if (g.size() == 3 && roots->empty()) {
            std::vector<QuadPoly> eqs{line.equation};
            for (std::size_t i = 0; i < polys.size(); ++i)
                if (i != pick) eqs.push_back(polys[i]);
            out.push_back({K::Finite, {}, {}, std::move(eqs)});
        }
    }
    for (auto& pt : points) {
        bool covered = false;
        for (const auto& c : out)
            if ((c.kind == K::Line && on_line(pt.point, c)) || (c.kind == K::Point && c.point == pt.point)) covered = true;
        if (!covered) out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace

std::vector<VanishingComponent> describe_vanishing_set(std::size_t m, const std::vector<QuadPoly>& polys) {
    using K = VanishingComponent::Kind;
    if (m > 2) throw ObstructionTooLarge("vanishing sets are described for at most two parameters");
    const std::vector<QuadPoly> eqs = normalize(polys);
    if (eqs.empty()) return {{K::Everything, {}, {}, {}}};
    if (m == 0) return {};
    if (m == 1) {
        std::vector<Univariate> us;
        for (const auto& p : eqs) us.push_back(univariate(p));
        Univariate g;
        const auto roots = common_roots(us, g);
        std::vector<VanishingComponent> out;
        for (const auto& s : *roots) out.push_back({K::Point, {s}, {}, {}});
        if (g.size() == 3 && roots->empty()) out.push_back({K::Finite, {}, {}, {univariate_poly(g)}});
        return out;
    }
    return describe_two(eqs);
}

}  // namespace bihom
