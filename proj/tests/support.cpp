#include "support.hpp"

#include "bihom/transforms.hpp"

namespace testing {

using namespace bihom;

Scalar random_scalar(std::mt19937& rng, double zero) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(rng) < zero) return {};
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    Rational re(mpz_class(num(rng)), mpz_class(den(rng))), im(0);
    if (coin(rng) < 0.5) im = Rational(mpz_class(num(rng)), mpz_class(den(rng)));
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double zero) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, zero);
    return m;
}

LinearMap random_integer_map(std::mt19937& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
    return LinearMap(std::move(m));
}

LinearMap random_invertible(std::mt19937& rng, std::size_t n) {
    for (;;) {
        LinearMap m = random_integer_map(rng, n, 2);
        if (!naive_det(m.matrix()).is_zero()) return m;
    }
}

std::size_t naive_rank(const Matrix& input) {
    Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    Scalar prev(1);
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(rank, k));
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) m(r, k) = (m(rank, c) * m(r, k) - m(r, c) * m(rank, k)) / prev;
            m(r, c) = Scalar();
        }
        prev = m(rank, c);
        ++rank;
    }
    return rank;
}

Scalar naive_det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Scalar det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        const Scalar term = m(0, c) * naive_det(minor);
        det = c % 2 ? det - term : det + term;
    }
    return det;
}

Matrix naive_inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    const Scalar det = naive_det(m);
    Matrix inv(n, n);
    if (n == 1) {
        inv(0, 0) = det.inverse();
        return inv;
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Matrix minor(n - 1, n - 1);
            for (std::size_t i = 0, ii = 0; i < n; ++i) {
                if (i == r) continue;
                for (std::size_t k = 0, kk = 0; k < n; ++k)
                    if (k != c) minor(ii, kk++) = m(i, k);
                ++ii;
            }
            const Scalar cof = naive_det(minor);
            inv(c, r) = ((r + c) % 2 ? -cof : cof) / det;
        }
    return inv;
}

bool index_form_derivation(const BiHomTrialgebra& a, const LinearMap& dm) {
    const std::size_t n = a.dim;
    const Matrix& d = dm.matrix();
    const Matrix& al = a.alpha.matrix();
    const Matrix& be = a.beta.matrix();
    // Σ_p d_qp a_pi = Σ_p a_qp d_pi and the same for b.
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t i = 0; i < n; ++i) {
            Scalar l1, r1, l2, r2;
            for (std::size_t p = 0; p < n; ++p) {
                l1 += d(q, p) * al(p, i);
                r1 += al(q, p) * d(p, i);
                l2 += d(q, p) * be(p, i);
                r2 += be(q, p) * d(p, i);
            }
            if (l1 != r1 || l2 != r2) return false;
        }
    Matrix ab(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < n; ++k) ab(r, c) += al(r, k) * be(k, c);
    // Σ_k γ_ij^k d_rk = Σ_{p,q} d_pi ab_qj γ_pq^r + Σ_{p,q} ab_pi d_qj γ_pq^r
    for (Role role : kRoles) {
        const MulTensor& g = a.product(role);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t r = 0; r < n; ++r) {
                    Scalar lhs, rhs;
                    for (std::size_t k = 0; k < n; ++k) lhs += g.at(i, j, k) * d(r, k);
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q)
                            rhs += (d(p, i) * ab(q, j) + ab(p, i) * d(q, j)) * g.at(p, q, r);
                    if (lhs != rhs) return false;
                }
    }
    return true;
}

std::vector<LinearMap> automorphisms_pm1(const BiHomTrialgebra& a) {
    const std::size_t n = a.dim;
    const std::size_t cells = n * n;
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= 3;
    std::vector<LinearMap> out;
    for (std::size_t code = 0; code < total; ++code) {
        Matrix m(n, n);
        std::size_t c = code;
        for (std::size_t k = 0; k < cells; ++k, c /= 3) m(k / n, k % n) = static_cast<long>(c % 3) - 1;
        if (naive_det(m).is_zero()) continue;
        LinearMap psi(std::move(m));
        if (is_morphism(psi, a, a).holds()) out.push_back(std::move(psi));
    }
    return out;
}

BiHomTrialgebra example_algebra() {
    BiHomTrialgebra a = BiHomTrialgebra::zero(2, "example");
    a.left.at(0, 1, 0) = 1;
    a.left.at(1, 0, 0) = 1;
    a.right.at(0, 1, 0) = 1;
    a.middle.at(0, 1, 0) = 1;
    a.middle.at(1, 1, 0) = 1;
    a.alpha = LinearMap::unit(2, 0, 1);
    a.beta = LinearMap::unit(2, 0, 1);
    return a;
}

}  // namespace testing
