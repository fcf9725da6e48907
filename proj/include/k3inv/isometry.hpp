#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3inv/lattice.hpp"

namespace k3inv {

/// An automorphism of a lattice; column j of the matrix is the image of basis
/// vector j.
struct LatticeIsometry {
    IntegerLattice ambient;
    IntMat matrix;

    bool is_involution() const;
};

/// mTGm = G and |det m| = 1.
bool verify_isometry(const IntMat& m, const IntegerLattice& l);

enum class Rho2Variant { standard, alt };

/// Identifies one of the 28 simple involution types: rho_1^i + rho_2^j.
/// The alt variant replaces rho_2^j by its conjugate signed-permutation form
/// and is only defined for j in {2, 4}.
struct SimpleInvolutionId {
    int i = 1; // 1..7
    int j = 1; // 1..4
    Rho2Variant variant = Rho2Variant::standard;

    std::string str() const;                       // "i,j" or "i,j,alt"
    static SimpleInvolutionId parse(const std::string& s);

    bool operator==(const SimpleInvolutionId&) const = default;
};

struct InvariantTriple {
    int r = 0;
    int a = 0;
    int delta = 0;
    bool operator==(const InvariantTriple&) const = default;
    auto operator<=>(const InvariantTriple&) const = default;
};

/// The seven involutions of 3H that act by signed permutation of the standard
/// basis and fix exactly one positive direction.
LatticeIsometry generator_rho1(int i);

/// The involutions of 2(-E8): identity, negate-first, negate-both, swap; plus
/// the two conjugate variants (alt) for j = 2 and j = 4.
LatticeIsometry generator_rho2(int j, Rho2Variant variant = Rho2Variant::standard);

/// Conjugation by the swap of the first and third hyperbolic summands,
/// u_k^l -> u_k^{4-l}. Accepts a 6x6 map of 3H or a 22x22 map of the K3
/// lattice (extended by the identity on 2(-E8)).
LatticeIsometry tau_conjugate(const LatticeIsometry& m);

/// Block-diagonal involution rho_1^i + rho_2^j of the K3 lattice.
LatticeIsometry simple_involution(const SimpleInvolutionId& id);

/// Saturated kernel of (m - 1). Requires m^2 = 1.
Sublattice fixed_lattice(const LatticeIsometry& m);

/// Saturated kernel of (m + 1). Requires m^2 = 1.
Sublattice anti_fixed_lattice(const LatticeIsometry& m);

/// (r, a, delta) of the fixed lattice. The fixed lattice must be hyperbolic of
/// signature (1, r-1) and 2-elementary.
InvariantTriple involution_invariants(const LatticeIsometry& m);

/// All 28 entries (i,j) -> (r,a,delta), computed from the generators and
/// sorted by (i,j).
std::vector<std::pair<SimpleInvolutionId, InvariantTriple>> classification_table();

enum class FixedLocusKind { empty, two_elliptic_curves, general };

struct FixedLocusTopology {
    FixedLocusKind kind = FixedLocusKind::general;
    int genus = 0;                // general case only
    int rational_curve_count = 0; // general case only
};

/// Topology of the fixed point set determined by (r, a, delta):
/// empty for (10,10,0), two elliptic curves for (10,8,0), otherwise a genus
/// (22-r-a)/2 curve plus (r-a)/2 rational curves.
FixedLocusTopology fixed_locus_topology(const InvariantTriple& t);

} // namespace k3inv
