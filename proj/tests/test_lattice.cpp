#include <doctest.h>

#include "k3inv/isometry.hpp"
#include "k3inv/lattice.hpp"

using namespace k3inv;

TEST_CASE("standard lattices") {
    SUBCASE("hyperbolic plane") {
        IntegerLattice h = standard_lattice("H");
        CHECK(h.gram == IntMat{{0, 1}, {1, 0}});
        CHECK(signature(h) == LatticeSignature{1, 1, 0});
        CHECK(is_even(h));
    }
    SUBCASE("minusE8 gram matches the fixed presentation") {
        IntegerLattice e8 = standard_lattice("minusE8");
        CHECK(e8.rank == 8);
        CHECK(e8.gram(0, 0) == -2);
        CHECK(e8.gram(0, 2) == 1);
        CHECK(e8.gram(3, 4) == 1);
        CHECK(e8.gram.is_symmetric());
        CHECK(signature(e8) == LatticeSignature{0, 8, 0});
        CHECK(is_even(e8));
        Int det = determinant(e8.gram);
        CHECK(det == 1); // unimodular
    }
    SUBCASE("K3 lattice") {
        IntegerLattice k3 = standard_lattice("K3");
        CHECK(k3.rank == 22);
        CHECK(signature(k3) == LatticeSignature{3, 19, 0});
        CHECK(is_even(k3));
        CHECK(k3.labels[0] == "u_1^1");
        CHECK(k3.labels[6] == "v_1^1");
        CHECK(k3.labels[21] == "v_8^2");
        CHECK(k3.gram == standard_lattice("3H+2minusE8").gram);
    }
    SUBCASE("unknown names are rejected") {
        CHECK_THROWS_AS(standard_lattice("E8"), Error);
        CHECK_THROWS_AS(standard_lattice(""), Error);
    }
}

TEST_CASE("signature on odd and degenerate inputs") {
    CHECK(signature(IntegerLattice(IntMat{{1}})) == LatticeSignature{1, 0, 0});
    CHECK(signature(IntegerLattice(IntMat{{0}})) == LatticeSignature{0, 0, 1});
    // zero diagonal resolved by the off-diagonal fold
    CHECK(signature(IntegerLattice(IntMat{{0, 2}, {2, 0}})) == LatticeSignature{1, 1, 0});
}

TEST_CASE("is_even") {
    CHECK(is_even(standard_lattice("H")));
    CHECK(!is_even(IntegerLattice(IntMat{{1}})));
    CHECK(is_even(standard_lattice("minusE8")));
}

TEST_CASE("discriminant invariants") {
    SUBCASE("minusE8 is unimodular") {
        DiscriminantData d = discriminant_invariants(standard_lattice("minusE8"));
        CHECK(d.order == 1);
        CHECK(d.ell == 0);
        CHECK(d.a == 0);
        CHECK(d.is_two_elementary);
        CHECK(d.delta == 0);
    }
    SUBCASE("minusE8 scaled by two") {
        IntegerLattice e8 = standard_lattice("minusE8");
        IntMat doubled = e8.gram;
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) doubled(r, c) *= 2;
        DiscriminantData d = discriminant_invariants(IntegerLattice(doubled));
        CHECK(d.order == 256);
        CHECK(d.is_two_elementary);
        CHECK(d.a == 8);
        CHECK(d.delta == 0);
    }
    SUBCASE("rank one lattice of norm two") {
        DiscriminantData d = discriminant_invariants(IntegerLattice(IntMat{{2}}));
        CHECK(d.is_two_elementary);
        CHECK(d.a == 1);
        CHECK(d.delta == 1); // the half class has norm 1/2
    }
    SUBCASE("degenerate lattice is rejected") {
        CHECK_THROWS_AS(discriminant_invariants(IntegerLattice(IntMat{{0}})), Error);
    }
    SUBCASE("order equals |det| on assorted lattices") {
        for (const char* name : {"H", "A1", "minusE8", "K3", "2H+A1"}) {
            IntegerLattice l = standard_lattice(name);
            DiscriminantData d = discriminant_invariants(l);
            Int det = determinant(l.gram);
            CHECK(d.order == boost::multiprecision::abs(det));
        }
    }
    SUBCASE("class enumeration bound") {
        const int n = 21;
        IntMat big(n, n);
        for (int i = 0; i < n; ++i) big(i, i) = 2;
        CHECK_THROWS_AS(discriminant_invariants(IntegerLattice(big)), Error);
    }
}

TEST_CASE("orthogonal complement") {
    IntegerLattice k3 = standard_lattice("K3");
    SUBCASE("complement of the canonical period span") {
        RatVec x(22, Rat(0)), y(22, Rat(0)), z(22, Rat(0));
        x[2] = x[3] = 1;
        y[4] = y[5] = 1;
        z[0] = z[1] = 1;
        Sublattice n = orthogonal_complement(k3, {x, y, z});
        CHECK(n.rank() == 19);
        std::vector<IntVec> expected_basis;
        for (int k = 0; k < 3; ++k) {
            IntVec v(22, Int(0));
            v[2 * k] = 1;
            v[2 * k + 1] = -1;
            expected_basis.push_back(v);
        }
        for (int c = 6; c < 22; ++c) {
            IntVec v(22, Int(0));
            v[c] = 1;
            expected_basis.push_back(v);
        }
        CHECK(same_span(n, span_sublattice(k3, expected_basis)));
    }
    SUBCASE("no constraints yields everything") {
        Sublattice all = orthogonal_complement(k3, {});
        CHECK(all.rank() == 22);
    }
    SUBCASE("isotropic vector lies in its own complement") {
        IntegerLattice h = standard_lattice("H");
        RatVec u1{1, 0};
        Sublattice c = orthogonal_complement(h, {u1});
        CHECK(c.rank() == 1);
        CHECK(span_contains(c, {1, 0}));
    }
    SUBCASE("complement of the complement contains the saturated constraints") {
        RatVec c1{1, 2, 0, 0, 0, 0, Rat(1, 2), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
        RatVec c2{0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
        Sublattice first = orthogonal_complement(k3, {c1, c2});
        std::vector<RatVec> second_constraints;
        for (int r = 0; r < first.basis.rows(); ++r)
            second_constraints.push_back(to_rational(first.basis.row(r)));
        Sublattice second = orthogonal_complement(k3, second_constraints);
        Sublattice constraint_span =
            span_sublattice(k3, {primitive_integer_vector(c1), primitive_integer_vector(c2)});
        for (int r = 0; r < constraint_span.basis.rows(); ++r)
            CHECK(span_contains(second, constraint_span.basis.row(r)));
    }
}

TEST_CASE("primitive sublattices") {
    IntegerLattice k3 = standard_lattice("K3");
    SUBCASE("u pair is primitive") {
        Sublattice s{k3, IntMat(2, 22)};
        s.basis(0, 0) = 1;
        s.basis(1, 1) = 1;
        CHECK(is_primitive_sublattice(s));
    }
    SUBCASE("doubled vector is not primitive") {
        IntegerLattice h = standard_lattice("H");
        Sublattice s{h, IntMat(1, 2)};
        s.basis(0, 0) = 2;
        CHECK(!is_primitive_sublattice(s));
    }
    SUBCASE("fixed lattices of involutions are primitive") {
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 4; ++j)
                CHECK(is_primitive_sublattice(fixed_lattice(simple_involution({i, j}))));
    }
}

TEST_CASE("invariant sum rule over direct sums of the generator fixed lattices") {
    // fixed lattices of the 3H generators and the 2(-E8) generators combine
    // additively in r and a, and delta is the maximum
    struct Item {
        IntegerLattice l;
        InvariantTriple t;
    };
    std::vector<Item> h_parts, e_parts;
    for (int i = 1; i <= 7; ++i) {
        Sublattice f = fixed_lattice(generator_rho1(i));
        IntegerLattice induced = f.induced();
        DiscriminantData d = discriminant_invariants(induced);
        h_parts.push_back({induced, {induced.rank, d.a, d.delta}});
    }
    for (int j = 1; j <= 4; ++j) {
        Sublattice f = fixed_lattice(generator_rho2(j));
        if (f.rank() == 0) {
            e_parts.push_back({IntegerLattice(), {0, 0, 0}});
            continue;
        }
        IntegerLattice induced = f.induced();
        DiscriminantData d = discriminant_invariants(induced);
        e_parts.push_back({induced, {induced.rank, d.a, d.delta}});
    }
    for (const Item& h : h_parts)
        for (const Item& e : e_parts) {
            IntegerLattice sum = e.l.rank == 0 ? h.l : h.l.direct_sum(e.l);
            DiscriminantData d = discriminant_invariants(sum);
            CHECK(sum.rank == h.t.r + e.t.r);
            CHECK(d.a == h.t.a + e.t.a);
            CHECK(d.delta == std::max(h.t.delta, e.t.delta));
        }
}
