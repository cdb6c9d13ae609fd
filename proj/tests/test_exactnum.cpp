#include "doctest.h"
#include "support.hpp"

#include "bihom/error.hpp"
#include "bihom/matrix.hpp"

using namespace bihom;

namespace {

Rational q(long n, long d = 1) {
    return Rational(mpz_class(n), mpz_class(d));
}

}  // namespace

TEST_CASE("scalar parsing reduces to canonical form") {
    CHECK(Scalar::parse("1") == Scalar(1));
    CHECK(Scalar::parse("-3/2") == Scalar(q(-3, 2)));
    CHECK(Scalar::parse("2/4") == Scalar(q(1, 2)));
    CHECK(Scalar::parse("1/2+1/3i") == Scalar(q(1, 2), q(1, 3)));
    CHECK(Scalar::parse("1/2-1/3i") == Scalar(q(1, 2), q(-1, 3)));
    CHECK(Scalar::parse("-1i") == Scalar(0, -1));
    CHECK(Scalar::parse("6/4i") == Scalar(0, q(3, 2)));
    CHECK(Scalar::parse("-0") == Scalar());
    for (const char* bad : {"", "i", "1/0", "1.5", "1+i", "a", "1/-2", "1+-2i", "--1"})
        CHECK_THROWS_AS(Scalar::parse(bad), ParseError);
}

TEST_CASE("scalar text round trip") {
    for (const char* text : {"0", "7", "-3/2", "1i", "-1i", "1/2+1/3i", "-5/7-2i"}) {
        CHECK(Scalar::parse(text).str() == text);
    }
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
        Scalar s = testing::random_scalar(rng, 0.1);
        CHECK(Scalar::parse(s.str()) == s);
    }
}

TEST_CASE("field arithmetic of Q(i)") {
    const Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    CHECK(Scalar(1, 1) * Scalar(1, -1) == Scalar(2));
    CHECK(Scalar(3, 4).inverse() == Scalar(q(3, 25), q(-4, 25)));
    CHECK_THROWS_AS(Scalar().inverse(), Error);

    std::mt19937 rng(5);
    for (int k = 0; k < 300; ++k) {
        Scalar a = testing::random_scalar(rng), b = testing::random_scalar(rng), c = testing::random_scalar(rng);
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK((a * a.conj()).is_real());
    }
}

TEST_CASE("square roots inside Q(i)") {
    CHECK(Scalar(4).sqrt().value() * Scalar(4).sqrt().value() == Scalar(4));
    CHECK(Scalar(-1).sqrt().has_value());
    CHECK(Scalar(0, 2).sqrt().value() * Scalar(0, 2).sqrt().value() == Scalar(0, 2));
    CHECK(Scalar(q(9, 4)).sqrt().has_value());
    CHECK_FALSE(Scalar(2).sqrt().has_value());
    CHECK_FALSE(Scalar(0, 1).sqrt().has_value());
    std::mt19937 rng(17);
    for (int k = 0; k < 200; ++k) {
        Scalar a = testing::random_scalar(rng, 0.0);
        auto r = (a * a).sqrt();
        REQUIRE(r.has_value());
        CHECK((*r == a || *r == -a));
    }
}

TEST_CASE("rref of fixed matrices") {
    auto id = rref(Matrix::identity(3));
    CHECK(id.reduced == Matrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    auto p = rref(Matrix{{1, 1}, {2, 2}});
    CHECK(p.reduced == Matrix{{1, 1}, {0, 0}});
    CHECK(p.rank == 1);
    CHECK(p.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("nullspace of fixed matrices") {
    auto z = nullspace(Matrix(2, 3));
    REQUIRE(z.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) CHECK(z[k] == unit_vector(3, k));
    auto one = nullspace(Matrix{{1, 1}});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Vector{-1, 1});
}

TEST_CASE("inverse of fixed matrices") {
    CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(inverse(Matrix{{0, 1}, {1, 0}}) == Matrix{{0, 1}, {1, 0}});
    CHECK(inverse(Matrix{{1, 1}, {0, 1}}) == Matrix{{1, -1}, {0, 1}});
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("linear algebra against the elimination oracle") {
    std::mt19937 rng(2024);
    for (int k = 0; k < 100; ++k) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        Matrix m = testing::random_matrix(rng, rows, cols, k % 3 ? 0.3 : 0.7);
        auto r = rref(m);
        CHECK(r.rank == testing::naive_rank(m));
        CHECK(rref(r.reduced).reduced == r.reduced);
        for (std::size_t p = 1; p < r.pivots.size(); ++p) CHECK(r.pivots[p - 1] < r.pivots[p]);
        auto ker = nullspace(m);
        CHECK(r.rank + ker.size() == cols);
        for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
        if (!ker.empty()) CHECK(testing::naive_rank(Matrix::from_columns(cols, ker)) == ker.size());
        if (rows == cols) {
            if (testing::naive_det(m).is_zero()) {
                CHECK_THROWS_AS(inverse(m), SingularMatrix);
            } else {
                Matrix inv = inverse(m);
                CHECK(inv == testing::naive_inverse(m));
                CHECK(inv * m == Matrix::identity(rows));
                CHECK(m * inv == Matrix::identity(rows));
            }
        }
    }
}

TEST_CASE("span helpers") {
    std::vector<Vector> a{{1, 0, 0}, {0, 1, 0}};
    std::vector<Vector> b{{0, 1, 1}, {0, 0, 1}};
    auto meet = intersect_spans(3, a, b);
    REQUIRE(meet.size() == 1);
    CHECK(meet[0] == Vector{0, 1, 0});
    CHECK(in_span(a, Vector{2, 3, 0}));
    CHECK_FALSE(in_span(a, Vector{0, 0, 1}));
    auto basis = canonical_span_basis(3, {{2, 2, 0}, {1, 1, 0}, {0, 0, 3}});
    CHECK(basis == std::vector<Vector>{{1, 1, 0}, {0, 0, 1}});
}
