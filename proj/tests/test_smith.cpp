#include <doctest.h>

#include <random>

#include "k3inv/isometry.hpp"
#include "k3inv/smith.hpp"

using namespace k3inv;

namespace {

bool divisibility_chain(const std::vector<Int>& d) {
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0) return false;
        if (d[i] != 0 && d[i + 1] % d[i] != 0) return false;
        if (d[i] == 0 && d[i + 1] != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("smith normal form on small fixed inputs") {
    SUBCASE("diag(2,3) becomes diag(1,6)") {
        IntMat m{{2, 0}, {0, 3}};
        SmithResult r = smith_normal_form(m);
        CHECK(r.s == IntMat{{1, 0}, {0, 6}});
        CHECK(r.u * m * r.v == r.s);
        CHECK(divisibility_chain(r.divisors()));
    }
    SUBCASE("identity is its own form") {
        IntMat m = IntMat::identity(3);
        SmithResult r = smith_normal_form(m);
        CHECK(r.s == m);
        CHECK(r.rank == 3);
    }
    SUBCASE("1x1 zero matrix") {
        IntMat m(1, 1);
        SmithResult r = smith_normal_form(m);
        CHECK(r.s == m);
        CHECK(r.rank == 0);
    }
}

TEST_CASE("smith normal form round trip on random matrices") {
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> dim(1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = dim(rng), cols = dim(rng);
        IntMat m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m(r, c) = entry(rng);
        SmithResult result = smith_normal_form(m);
        CHECK(result.u * m * result.v == result.s);
        CHECK(divisibility_chain(result.divisors()));
        Int du = determinant(result.u);
        Int dv = determinant(result.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        CHECK(result.u * result.u_inv == IntMat::identity(rows));
        CHECK(result.v * result.v_inv == IntMat::identity(cols));
    }
}

TEST_CASE("integer kernel") {
    SUBCASE("fixed space of the first hyperbolic involution") {
        LatticeIsometry rho = generator_rho1(1);
        IntMat k = integer_kernel(rho.matrix - IntMat::identity(6));
        CHECK(k.rows() == 2);
        Sublattice kernel{rho.ambient, k};
        Sublattice expected = span_sublattice(rho.ambient, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
        CHECK(same_span(kernel, expected));
    }
    SUBCASE("zero map has full kernel") {
        IntMat zero(4, 4);
        CHECK(integer_kernel(zero).rows() == 4);
    }
    SUBCASE("single relation") {
        IntMat m{{1, 1}};
        IntMat k = integer_kernel(m);
        REQUIRE(k.rows() == 1);
        CHECK(((k(0, 0) == 1 && k(0, 1) == -1) || (k(0, 0) == -1 && k(0, 1) == 1)));
    }
}

TEST_CASE("integer kernels are saturated") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> dim(1, 8);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = dim(rng), cols = dim(rng);
        IntMat m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m(r, c) = entry(rng);
        IntMat k = integer_kernel(m);
        if (k.rows() == 0) continue;
        for (const Int& e : smith_normal_form(k).divisors()) CHECK(e == 1);
        // kernel property itself
        IntMat prod = m * k.transpose();
        for (int r = 0; r < prod.rows(); ++r)
            for (int c = 0; c < prod.cols(); ++c) CHECK(prod(r, c) == 0);
    }
}

TEST_CASE("hermite form is canonical for equal spans") {
    IntMat a{{2, 4, 6}, {1, 1, 1}};
    IntMat b{{1, 1, 1}, {3, 5, 7}}; // row space equal to a's
    CHECK(hermite_normal_form(a) == hermite_normal_form(b));
    CHECK(in_row_span(a, {1, 3, 5}));
    CHECK(!in_row_span(a, {0, 0, 1}));
}
