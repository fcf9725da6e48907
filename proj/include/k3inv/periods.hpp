#pragma once

#include <array>
#include <set>
#include <vector>

#include "k3inv/isometry.hpp"
#include "k3inv/roots.hpp"

namespace k3inv {

/// One slot of a hyper-Kahler period triple: a rational base direction plus
/// perturbation directions. The realized class is the base scaled positively
/// plus a generic small combination of the perturbation directions with
/// coefficients that are Q-linearly independent together with 1; orthogonality
/// against such a class is therefore orthogonality against every direction
/// separately, which keeps the whole calculus rational.
struct PeriodSlot {
    RatVec base;
    std::vector<RatVec> perturb;
};

struct PeriodSpec {
    PeriodSlot x, y, z;

    /// Base and perturbation vectors of all three slots, stacked.
    std::vector<RatVec> all_constraints() const;

    /// True when any slot carries perturbations, in which case the three slot
    /// norms are equalized by a suitable (always existing) choice of the
    /// perturbation coefficients; the spec itself only fixes directions.
    bool norm_balance_required() const;
};

struct SignTriple {
    int x = 1, y = 1, z = 1; // each +1 or -1
};

/// The degenerate period triple attached to rho_1^i: all three base classes
/// are fixed-or-negated by the involution and their common orthogonal
/// complement carries the 3A1+2E8 root system.
PeriodSpec canonical_period_spec(int i);

/// A period triple equivariant under both involutions of a pair built from
/// rho_1^{i1} and the tau-conjugate of rho_1^{i2} (signs (-,-,+) and (-,+,-)).
PeriodSpec canonical_pair_period_spec(int i1, int i2);

/// Exact check that m maps every base and perturbation direction of each slot
/// to sign * itself.
bool check_equivariance(const LatticeIsometry& m, const SignTriple& signs, const PeriodSpec& spec);

struct SingularReport {
    AdeConfig config;
    long root_count = 0;
    long simple_root_count = 0;
};

/// Root system orthogonal to every direction of the spec, classified.
SingularReport singular_roots(const PeriodSpec& spec);

/// The 19 norm -2 vectors (u_1^1-u_2^1, u_1^2-u_2^2, u_1^3-u_2^3,
/// v_1^1..v_8^1, v_1^2..v_8^2) spanning the orthogonal complement of the
/// canonical period span; index is 0-based.
const std::vector<IntVec>& wtilde_basis();

/// Dual basis of the wtilde lattice, as rational vectors of the K3 lattice.
/// Stacking dual directions onto a period slot deletes the matching nodes
/// from the root diagram, which is what a partial resolution does.
const std::vector<RatVec>& wtilde_dual_basis();

/// Connected component (0..2 the A1 nodes, 3 and 4 the two E8 blocks) of a
/// 0-based node index.
int wtilde_component(int node);

/// Closed-form configuration of a subset of the 19 nodes (node-deletion
/// route, no enumeration).
AdeConfig config_of_nodes(const std::set<int>& nodes);

// --- single involution orbits -------------------------------------------

enum class OrbitKind { fixed, negated, swapped_pair, antiswapped_pair };

struct SingleOrbit {
    OrbitKind kind;
    std::vector<int> nodes; // one or two 0-based node indices, ascending
    int id() const { return nodes.front(); }
};

/// Orbits of a simple involution acting on the wtilde basis. Throws
/// Errc::not_signed_permutation if the action is not a signed permutation.
std::vector<SingleOrbit> single_orbits(const LatticeIsometry& rho);

/// Adds the resolution directions for the chosen orbits: fixed orbits (m1)
/// perturb z, negated orbits (m2) and both pair kinds (m3 swapped, m4
/// anti-swapped) perturb x. Sets hold orbit ids (smallest node index, 0-based)
/// and must be disjoint and type-correct.
PeriodSpec perturb_single(const LatticeIsometry& rho, const PeriodSpec& spec,
                          const std::set<int>& m1, const std::set<int>& m2,
                          const std::set<int>& m3, const std::set<int>& m4);

// --- commuting pair orbits ------------------------------------------------

/// Eigen-sign pattern of a node under (rho1, rho2): +1 means fixed pointwise.
struct PairOrbitEntry {
    int eps1 = 1, eps2 = 1;
    int partner = -1;          // other node of the orbit, or the node itself
    IntVec wprime;             // primitive eigenvector attached to the node
    RatVec wprime_dual;        // matching combination of dual vectors
};

struct OrbitTypeReport {
    std::array<PairOrbitEntry, 19> entries;

    std::vector<int> nodes_of_type(int eps1, int eps2) const;
};

/// Per-node type, orbit partner and attached eigenvector for a commuting pair
/// of simple involutions.
OrbitTypeReport orbit_analysis(const LatticeIsometry& rho1, const LatticeIsometry& rho2);

/// Adds resolution directions for a commuting pair: indices in p (type
/// (-1,-1)) perturb x, q (type (-1,1)) perturb y, r (type (1,-1)) perturb z.
/// Orbits of distinct chosen indices must not overlap. The result is
/// re-verified against both sign patterns.
PeriodSpec perturb_pair(const LatticeIsometry& rho1, const LatticeIsometry& rho2,
                        const PeriodSpec& spec, const std::set<int>& p,
                        const std::set<int>& q, const std::set<int>& r);

} // namespace k3inv
