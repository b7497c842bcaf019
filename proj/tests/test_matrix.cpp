#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ekr/matrix.hpp"
#include "ekr/polynomial.hpp"

using namespace ekr;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("bareiss rank and determinant") {
    CHECK(bareiss_det(from_rows({{2, 1, 0}, {1, 2, 0}, {0, 0, 5}})) == 15);
    CHECK(bareiss_det(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(bareiss_rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(bareiss_rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(bareiss_rank(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(bareiss_rank(from_rows({{0, 1}, {1, 0}, {1, 1}})) == 2);
    // Hilbert-like integer matrix with known determinant sign
    CHECK(bareiss_det(from_rows({{1, 1, 1}, {1, 2, 3}, {1, 3, 6}})) == 1);
}

TEST_CASE("solve_square") {
    RatMatrix a(2, 2);
    a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 3;
    const auto x = solve_square(a, {Rat(5), Rat(10)});
    REQUIRE(x);
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(3));
    RatMatrix s(2, 2);
    s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
    CHECK_FALSE(solve_square(s, {Rat(1), Rat(1)}));
}

TEST_CASE("solve_full_column_rank verifies consistency") {
    const IntMatrix a = from_rows({{1, 0}, {0, 1}, {1, 1}});
    std::vector<Int> good{Int(2), Int(3), Int(5)};
    const auto x = solve_full_column_rank(a, good);
    REQUIRE(x);
    CHECK((*x)[0] == Rat(2));
    CHECK((*x)[1] == Rat(3));
    std::vector<Int> bad{Int(2), Int(3), Int(6)};
    CHECK_FALSE(solve_full_column_rank(a, bad));
}

TEST_CASE("LDLT positive-semidefinite certificates") {
    // PSD: the all-ones matrix
    RatMatrix ones(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ones(i, j) = 1;
    CHECK(ldlt_psd_certificate(ones).psd);
    // indefinite: zero diagonal with nonzero off-diagonal
    RatMatrix swap2(2, 2);
    swap2(0, 1) = swap2(1, 0) = 1;
    const auto c1 = ldlt_psd_certificate(swap2);
    CHECK_FALSE(c1.psd);
    CHECK(c1.reason == "zero pivot with nonzero residual column");
    // indefinite: negative after elimination
    RatMatrix m(2, 2);
    m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 2; m(1, 1) = 1;
    const auto c2 = ldlt_psd_certificate(m);
    CHECK_FALSE(c2.psd);
    // PSD with zero rows
    RatMatrix z(2, 2);
    z(0, 0) = 1;
    CHECK(ldlt_psd_certificate(z).psd);
    // K_w + I = J + ... complete-graph shift at the tight bound
    const int w = 5;
    RatMatrix kw(w, w);
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j) kw(i, j) = i == j ? 1 : 1;  // A(K_w) + I = J
    CHECK(ldlt_psd_certificate(kw).psd);
}

TEST_CASE("characteristic polynomial") {
    const IntMatrix m = from_rows({{2, 1, 0}, {1, 2, 0}, {0, 0, 5}});
    const Poly p = charpoly(m.cast<Rat>());
    // roots 1, 3, 5: x^3 - 9x^2 + 23x - 15
    REQUIRE(p.degree() == 3);
    CHECK(p.c[3] == 1);
    CHECK(p.c[2] == -9);
    CHECK(p.c[1] == 23);
    CHECK(p.c[0] == -15);
    CHECK(p.eval(Rat(1)) == 0);
    CHECK(p.eval(Rat(3)) == 0);
    CHECK(p.eval(Rat(5)) == 0);
}

TEST_CASE("root counting and isolation") {
    // (x^2 - 2)(x - 3): roots -sqrt2, sqrt2, 3
    Poly p;
    p.c = {Rat(6), Rat(-2), Rat(-3), Rat(1)};
    CHECK(distinct_roots_at_most(p, Rat(0)) == 1);
    CHECK(distinct_roots_at_most(p, Rat(2)) == 2);
    CHECK(distinct_roots_at_most(p, Rat(4)) == 3);
    CHECK(distinct_roots_below(p, Rat(3)) == 2);
    CHECK(distinct_roots_below(p, Rat(-10)) == 0);
    const LeastRoot lr = least_real_root(p);
    REQUIRE(lr.exists);
    CHECK_FALSE(lr.exact);
    CHECK(lr.lo < lr.hi);
    CHECK(lr.lo > Rat(-15, 10));
    CHECK(lr.hi < Rat(-14, 10));

    Poly q;  // (x+2)(x-1)(x-7)
    q.c = {Rat(14), Rat(-9), Rat(-6), Rat(1)};
    const LeastRoot lq = least_real_root(q);
    REQUIRE(lq.exists);
    REQUIRE(lq.exact);
    CHECK(*lq.exact == Rat(-2));

    Poly none;  // x^2 + 1
    none.c = {Rat(1), Rat(0), Rat(1)};
    CHECK_FALSE(least_real_root(none).exists);

    Poly multi;  // (x+1)^2 (x - 2), repeated least root
    multi.c = {Rat(-2), Rat(-3), Rat(0), Rat(1)};
    const LeastRoot lm = least_real_root(multi);
    REQUIRE(lm.exists);
    REQUIRE(lm.exact);
    CHECK(*lm.exact == Rat(-1));
}

TEST_CASE("poly deflate") {
    Poly p;  // (x-1)(x-2) = x^2 - 3x + 2
    p.c = {Rat(2), Rat(-3), Rat(1)};
    const Poly q = poly_deflate(p, Rat(1));
    REQUIRE(q.degree() == 1);
    CHECK(q.eval(Rat(2)) == 0);
    CHECK_THROWS_AS(poly_deflate(p, Rat(5)), std::invalid_argument);
}

TEST_CASE("matrix text export") {
    std::ostringstream os;
    RatMatrix m(2, 2);
    m(0, 0) = Rat(1, 2); m(0, 1) = 3;
    write_matrix_text(os, m);
    CHECK(os.str() == "2 2\n1/2 3\n0 0\n");
}
