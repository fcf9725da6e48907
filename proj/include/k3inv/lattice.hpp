#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3inv/matrix.hpp"
#include "k3inv/smith.hpp"

namespace k3inv {

/// A free abelian group of finite rank with a symmetric integer Gram matrix.
/// Immutable after construction.
struct IntegerLattice {
    int rank = 0;
    IntMat gram;
    std::vector<std::string> labels; // cosmetic; may be empty

    IntegerLattice() = default;
    IntegerLattice(IntMat g, std::vector<std::string> lab = {});

    /// Bilinear form of two vectors given in this basis.
    Int form(const IntVec& a, const IntVec& b) const;
    Rat form(const RatVec& a, const RatVec& b) const;

    IntegerLattice direct_sum(const IntegerLattice& other) const;
};

/// A sublattice given by basis rows in the coordinates of the ambient lattice.
struct Sublattice {
    IntegerLattice ambient;
    IntMat basis; // k x rank(ambient), rows rationally independent

    int rank() const { return basis.rows(); }
    IntegerLattice induced() const; // basis * G * basis^T, no labels
};

struct DiscriminantData {
    std::vector<Int> elementary_divisors; // the nontrivial ones too; full chain
    Int order;                            // product of divisors = |det G|
    int ell = 0;                          // count of divisors > 1
    bool is_two_elementary = false;
    int a = 0;       // count of divisors equal to 2 (meaningful when 2-elementary)
    int delta = -1;  // 0 or 1 when defined (2-elementary and even), else -1
};

struct LatticeSignature {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    bool operator==(const LatticeSignature&) const = default;
};

/// Inertia indices of the Gram form, by exact rational congruent diagonalization.
LatticeSignature signature(const IntegerLattice& l);

bool is_even(const IntegerLattice& l);

inline constexpr unsigned kDiscriminantEnumerationBound = 20; // classes capped at 2^20

/// Elementary divisors, group order, ell, and the 2-elementary invariants a and
/// delta of a non-degenerate lattice. delta is computed by testing the norms of
/// all 2^a discriminant-class representatives against integrality.
DiscriminantData discriminant_invariants(const IntegerLattice& l);

/// Saturated sublattice {v in l : v.c = 0 for every constraint c}. Constraint
/// vectors are rational and expressed in the basis of l.
Sublattice orthogonal_complement(const IntegerLattice& l, const std::vector<RatVec>& constraints);

bool is_primitive_sublattice(const Sublattice& s);

/// Saturated sublattice spanned by the given vectors.
Sublattice span_sublattice(const IntegerLattice& l, const std::vector<IntVec>& vectors);

/// Span equality of two sublattices of the same ambient lattice.
bool same_span(const Sublattice& a, const Sublattice& b);

/// Whether v lies in the (saturated) span of s.
bool span_contains(const Sublattice& s, const IntVec& v);

/// Named lattices with the fixed Gram matrices and basis ordering used
/// throughout: "H", "A1", "minusE8", "K3", and direct sums such as
/// "3H+2minusE8". K3 = 3H + 2(-E8) with basis (u_1^1,u_2^1,...,v_8^2).
IntegerLattice standard_lattice(const std::string& name);

IntegerLattice lattice_H();
IntegerLattice lattice_A1();
IntegerLattice lattice_minus_e8();
IntegerLattice lattice_K3();

} // namespace k3inv
