// Structure-constant form of the trialgebra identities. Each family is a
// direct index sum over γ (⊣), δ (⊢), ξ (⊥), a (α) and b (β); nothing here
// goes through MulTensor::apply or LinearMap application, so it serves as an
// independent check of check_axioms/check_multiplicativity.

#include "bihom/algebra.hpp"

namespace bihom {

namespace {

enum T { G, D, X };  // γ, δ, ξ

struct Consts {
    std::size_t n;
    const MulTensor* t[3];
    const Matrix& a;
    const Matrix& b;

    const Scalar& c(T which, std::size_t i, std::size_t j, std::size_t k) const { return t[which]->at(i, j, k); }
};

// Σ_{p,q} P_ij^p b_qk Q_pq^r
Scalar left_nested(const Consts& s, T P, T Q, std::size_t i, std::size_t j, std::size_t k, std::size_t r) {
    Scalar sum;
    for (std::size_t p = 0; p < s.n; ++p) {
        const Scalar& x = s.c(P, i, j, p);
        if (x.is_zero()) continue;
        for (std::size_t q = 0; q < s.n; ++q) {
            if (s.b(q, k).is_zero()) continue;
            const Scalar& y = s.c(Q, p, q, r);
            if (!y.is_zero()) sum += x * s.b(q, k) * y;
        }
    }
    return sum;
}

// Σ_{p,q} a_pi T_jk^q S_pq^r
Scalar right_nested(const Consts& s, T Tn, T S, std::size_t i, std::size_t j, std::size_t k, std::size_t r) {
    Scalar sum;
    for (std::size_t p = 0; p < s.n; ++p) {
        if (s.a(p, i).is_zero()) continue;
        for (std::size_t q = 0; q < s.n; ++q) {
            const Scalar& x = s.c(Tn, j, k, q);
            if (x.is_zero()) continue;
            const Scalar& y = s.c(S, p, q, r);
            if (!y.is_zero()) sum += s.a(p, i) * x * y;
        }
    }
    return sum;
}

struct Family {
    bool lhs_left;
    T l1, l2;
    bool rhs_left;
    T r1, r2;
};

// Each side is (inner, outer): left-nested sides read (x inner y) outer β(z),
// right-nested sides read α(x) outer (y inner z).
constexpr Family kFamilies[] = {
    {true, G, G, false, G, G},  // γγ = aγγ
    {true, G, G, false, D, G},  // γγ = aδγ
    {true, G, G, false, X, G},  // γγ = aξγ
    {true, G, G, false, G, D},  // γγ = aγδ
    {true, G, D, false, D, D},  // γδ = aδδ
    {true, G, D, true, X, D},   // γδ = ξδ
    {true, D, D, false, D, D},  // δδ = aδδ
    {true, X, G, false, G, X},  // ξγ = aγξ
    {true, G, X, false, D, X},  // γξ = aδξ
    {true, D, X, false, X, D},  // δξ = aξδ
    {true, X, X, false, X, X},  // ξξ = aξξ
};

Scalar side(const Consts& s, bool left, T t1, T t2, std::size_t i, std::size_t j, std::size_t k, std::size_t r) {
    return left ? left_nested(s, t1, t2, i, j, k, r) : right_nested(s, t1, t2, i, j, k, r);
}

}  // namespace

bool check_coordinate_form(const BiHomTrialgebra& alg) {
    validate(alg);
    const std::size_t n = alg.dim;
    const Matrix& a = alg.alpha.matrix();
    const Matrix& b = alg.beta.matrix();
    Consts s{n, {&alg.left, &alg.right, &alg.middle}, a, b};

    // Σ_j b_ji a_kj = Σ_j a_ji b_kj
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Scalar l, r;
            for (std::size_t j = 0; j < n; ++j) {
                l += b(j, i) * a(k, j);
                r += a(j, i) * b(k, j);
            }
            if (l != r) return false;
        }

    for (const auto& f : kFamilies)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t r = 0; r < n; ++r)
                        if (side(s, f.lhs_left, f.l1, f.l2, i, j, k, r) != side(s, f.rhs_left, f.r1, f.r2, i, j, k, r))
                            return false;

    // Σ_k c_ij^k m_qk = Σ_{k,p} m_ki m_pj c_kp^q for m = a, b and every product.
    for (const Matrix* m : {&a, &b})
        for (T t : {G, D, X})
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t q = 0; q < n; ++q) {
                        Scalar l, r;
                        for (std::size_t k = 0; k < n; ++k) {
                            l += s.c(t, i, j, k) * (*m)(q, k);
                            for (std::size_t p = 0; p < n; ++p) r += (*m)(k, i) * (*m)(p, j) * s.c(t, k, p, q);
                        }
                        if (l != r) return false;
                    }
    return true;
}

}  // namespace bihom
