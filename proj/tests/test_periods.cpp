#include <doctest.h>

#include "k3inv/pairs.hpp"
#include "k3inv/periods.hpp"

using namespace k3inv;

namespace {

std::set<int> all_nodes_except(const std::set<int>& removed) {
    std::set<int> out;
    for (int k = 0; k < 19; ++k)
        if (!removed.count(k)) out.insert(k);
    return out;
}

} // namespace

TEST_CASE("canonical period specs") {
    SUBCASE("bases for i <= 6") {
        PeriodSpec spec = canonical_period_spec(1);
        IntegerLattice k3 = standard_lattice("K3");
        CHECK(k3.form(spec.x.base, spec.x.base) == 2);
        CHECK(k3.form(spec.y.base, spec.y.base) == 2);
        CHECK(k3.form(spec.z.base, spec.z.base) == 2);
        CHECK(k3.form(spec.x.base, spec.y.base) == 0);
        CHECK(k3.form(spec.x.base, spec.z.base) == 0);
        CHECK(k3.form(spec.y.base, spec.z.base) == 0);
        CHECK(spec.z.base[0] == 1);
        CHECK(spec.z.base[1] == 1);
        CHECK(!spec.norm_balance_required());
    }
    SUBCASE("the i=7 triple has norm four on x and z") {
        PeriodSpec spec = canonical_period_spec(7);
        IntegerLattice k3 = standard_lattice("K3");
        CHECK(k3.form(spec.x.base, spec.x.base) == 4);
        CHECK(k3.form(spec.z.base, spec.z.base) == 4);
        CHECK(k3.form(spec.x.base, spec.z.base) == 0);
    }
    SUBCASE("index range") {
        CHECK_THROWS_AS(canonical_period_spec(0), Error);
        CHECK_THROWS_AS(canonical_period_spec(8), Error);
    }
}

TEST_CASE("equivariance checks") {
    PeriodSpec spec = canonical_period_spec(1);
    LatticeIsometry rho = simple_involution({1, 1});
    CHECK(check_equivariance(rho, SignTriple{-1, -1, 1}, spec));
    CHECK(!check_equivariance(rho, SignTriple{-1, 1, -1}, spec));
    LatticeIsometry id{standard_lattice("K3"), IntMat::identity(22)};
    CHECK(check_equivariance(id, SignTriple{1, 1, 1}, spec));
    for (int i = 1; i <= 7; ++i) {
        LatticeIsometry m = simple_involution({i, 2});
        CHECK(check_equivariance(m, SignTriple{-1, -1, 1}, canonical_period_spec(i)));
    }
}

TEST_CASE("singular roots of the canonical periods") {
    for (int i : {1, 4, 7}) {
        SingularReport report = singular_roots(canonical_period_spec(i));
        CHECK(report.config.str() == "3A1+2E8");
        CHECK(report.root_count == 486);
        CHECK(report.simple_root_count == 19);
    }
}

TEST_CASE("appending a root direction by hand removes that node") {
    PeriodSpec spec = canonical_period_spec(1);
    spec.z.perturb.push_back(to_rational(wtilde_basis()[0]));
    SingularReport report = singular_roots(spec);
    CHECK(report.config.str() == "2A1+2E8");
    CHECK(report.root_count == 484);
}

TEST_CASE("rescaling a base direction changes nothing") {
    PeriodSpec spec = canonical_period_spec(1);
    for (Rat& c : spec.x.base) c *= Rat(3, 2);
    SingularReport report = singular_roots(spec);
    CHECK(report.config.str() == "3A1+2E8");
    CHECK(report.root_count == 486);
}

TEST_CASE("single involution orbits") {
    SUBCASE("identity-like involution splits into fixed and negated nodes") {
        LatticeIsometry rho = simple_involution({1, 1});
        std::vector<SingleOrbit> orbits = single_orbits(rho);
        REQUIRE(orbits.size() == 19);
        CHECK(orbits[0].kind == OrbitKind::fixed);   // u_1^1 - u_2^1
        CHECK(orbits[1].kind == OrbitKind::negated); // u_1^2 - u_2^2
        CHECK(orbits[2].kind == OrbitKind::negated);
        for (size_t k = 3; k < 19; ++k) CHECK(orbits[k].kind == OrbitKind::fixed);
    }
    SUBCASE("(7,4) pairs the A1 nodes and the two E8 blocks") {
        LatticeIsometry rho = simple_involution({7, 4});
        std::vector<SingleOrbit> orbits = single_orbits(rho);
        REQUIRE(orbits.size() == 10);
        CHECK(orbits[0].kind == OrbitKind::swapped_pair);
        CHECK(orbits[0].nodes == std::vector<int>{0, 1});
        CHECK(orbits[1].kind == OrbitKind::negated);
        CHECK(orbits[1].nodes == std::vector<int>{2});
        for (size_t k = 2; k < 10; ++k) {
            CHECK(orbits[k].kind == OrbitKind::swapped_pair);
            CHECK(orbits[k].nodes[1] - orbits[k].nodes[0] == 8);
        }
    }
}

TEST_CASE("perturb_single") {
    LatticeIsometry rho74 = simple_involution({7, 4});
    PeriodSpec spec7 = canonical_period_spec(7);

    SUBCASE("empty choice is the identity") {
        PeriodSpec out = perturb_single(rho74, spec7, {}, {}, {}, {});
        CHECK(singular_roots(out).config.str() == "3A1+2E8");
    }
    SUBCASE("deleting the branch-node orbit leaves 5A1+2A2+2A4") {
        // node 6 is v_4^1, the trivalent node; its orbit partner is v_4^2
        PeriodSpec out = perturb_single(rho74, spec7, {}, {}, {6}, {});
        SingularReport report = singular_roots(out);
        CHECK(report.config.str() == "5A1+2A2+2A4");
        CHECK(report.root_count == 62);
        CHECK(check_equivariance(rho74, SignTriple{-1, -1, 1}, out));
    }
    SUBCASE("resolving every orbit empties the configuration") {
        std::set<int> m3 = {0, 3, 4, 5, 6, 7, 8, 9, 10};
        PeriodSpec out = perturb_single(rho74, spec7, {}, {2}, m3, {});
        SingularReport report = singular_roots(out);
        CHECK(report.config.empty());
        CHECK(report.root_count == 0);
    }
    SUBCASE("misplaced orbits are rejected") {
        CHECK_THROWS_AS(perturb_single(rho74, spec7, {2}, {}, {}, {}), Error); // negated in m1
        CHECK_THROWS_AS(perturb_single(rho74, spec7, {}, {}, {1}, {}), Error); // 1 is not an orbit id
        CHECK_THROWS_AS(perturb_single(rho74, spec7, {}, {2}, {}, {2}), Error); // chosen twice
    }
    SUBCASE("closed form matches the enumeration for a mixed choice") {
        LatticeIsometry rho = simple_involution({1, 1});
        PeriodSpec out = perturb_single(rho, canonical_period_spec(1), {0, 5}, {1}, {}, {});
        SingularReport report = singular_roots(out);
        CHECK(report.config == config_of_nodes(all_nodes_except({0, 5, 1})));
    }
}

TEST_CASE("orbit analysis of a commuting pair") {
    BuiltPair pair = build_pair(PairId::parse("1,1/1,1"));
    OrbitTypeReport report = orbit_analysis(pair.rho1, pair.rho2);

    CHECK(report.entries[0].eps1 == 1);
    CHECK(report.entries[0].eps2 == -1);
    CHECK(report.entries[0].partner == 0);
    CHECK(report.entries[0].wprime == wtilde_basis()[0]);

    CHECK(report.entries[1].eps1 == -1);
    CHECK(report.entries[1].eps2 == -1);

    CHECK(report.entries[2].eps1 == -1);
    CHECK(report.entries[2].eps2 == 1);

    std::vector<int> fixed = report.nodes_of_type(1, 1);
    CHECK(fixed.size() == 16); // both E8 blocks are pointwise fixed
    for (int node : fixed) CHECK(node >= 3);
}

TEST_CASE("perturb_pair") {
    BuiltPair pair = build_pair(PairId::parse("1,1/1,1"));

    SUBCASE("empty choice keeps the full configuration") {
        SingularReport report = singular_roots(pair.spec);
        CHECK(report.config.str() == "3A1+2E8");
    }
    SUBCASE("choosing every movable node leaves the two E8 blocks") {
        PeriodSpec out = perturb_pair(pair.rho1, pair.rho2, pair.spec, {1}, {2}, {0});
        SingularReport report = singular_roots(out);
        CHECK(report.config.str() == "2E8");
        CHECK(report.root_count == 480);
        CHECK(check_equivariance(pair.rho1, SignTriple{-1, -1, 1}, out));
        CHECK(check_equivariance(pair.rho2, SignTriple{-1, 1, -1}, out));
    }
    SUBCASE("one node drops the count by its orbit size") {
        PeriodSpec out = perturb_pair(pair.rho1, pair.rho2, pair.spec, {1}, {}, {});
        SingularReport report = singular_roots(out);
        CHECK(report.config == config_of_nodes(all_nodes_except({1})));
        CHECK(report.config.str() == "2A1+2E8");
    }
    SUBCASE("type mismatches are rejected") {
        CHECK_THROWS_AS(perturb_pair(pair.rho1, pair.rho2, pair.spec, {0}, {}, {}), Error);
        CHECK_THROWS_AS(perturb_pair(pair.rho1, pair.rho2, pair.spec, {}, {}, {3}), Error);
    }
    SUBCASE("overlapping orbits are rejected") {
        BuiltPair swap_pair = build_pair(PairId::parse("7,1/1,1"));
        OrbitTypeReport report = orbit_analysis(swap_pair.rho1, swap_pair.rho2);
        REQUIRE(report.entries[0].eps1 == -1);
        REQUIRE(report.entries[0].eps2 == -1);
        REQUIRE(report.entries[0].partner == 1);
        CHECK_THROWS_AS(
            perturb_pair(swap_pair.rho1, swap_pair.rho2, swap_pair.spec, {0, 1}, {}, {}),
            Error);
        // the orbit counts once, through either node
        PeriodSpec out =
            perturb_pair(swap_pair.rho1, swap_pair.rho2, swap_pair.spec, {0}, {}, {});
        SingularReport report2 = singular_roots(out);
        CHECK(report2.config == config_of_nodes(all_nodes_except({0, 1})));
    }
}

TEST_CASE("node component map") {
    CHECK(wtilde_component(0) == 0);
    CHECK(wtilde_component(2) == 2);
    CHECK(wtilde_component(3) == 3);
    CHECK(wtilde_component(10) == 3);
    CHECK(wtilde_component(11) == 4);
    CHECK(wtilde_component(18) == 4);
    CHECK_THROWS_AS(wtilde_component(19), Error);
}

TEST_CASE("config_of_nodes closed forms") {
    std::set<int> all;
    for (int k = 0; k < 19; ++k) all.insert(k);
    CHECK(config_of_nodes(all).str() == "3A1+2E8");
    CHECK(config_of_nodes({}).empty());
    CHECK(config_of_nodes({0, 1, 2}).str() == "3A1");
    std::set<int> one_e8_minus_branch;
    for (int k = 3; k < 11; ++k)
        if (k != 6) one_e8_minus_branch.insert(k);
    CHECK(config_of_nodes(one_e8_minus_branch).str() == "A1+A2+A4");
}
