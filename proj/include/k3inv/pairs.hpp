#pragma once

#include <string>
#include <vector>

#include "k3inv/periods.hpp"

namespace k3inv {

/// A candidate commuting pair: the second involution's 3H part is
/// tau-conjugated at build time, and its 2(-E8) part may use the alt variant.
struct PairId {
    SimpleInvolutionId first;
    SimpleInvolutionId second;

    std::string str() const; // "i1,j1/i2,j2" with "+alt" when the second is alt
    static PairId parse(const std::string& s);

    bool operator==(const PairId&) const = default;
};

/// Exclusion lists pass, the two matrices commute, and both satisfy their
/// sign patterns on the canonical period spec.
bool pair_admissible(const PairId& id);

struct BuiltPair {
    LatticeIsometry rho1;
    LatticeIsometry rho2;
    PeriodSpec spec;
};

/// rho1 = rho_1^{i1} + rho_2^{j1}, rho2 = (tau rho_1^{i2} tau) + rho_2^{j2},
/// with the canonical period spec satisfying both equivariances. Throws
/// Errc::not_admissible otherwise.
BuiltPair build_pair(const PairId& id);

struct PairRow {
    PairId id;
    InvariantTriple t1, t2;
    AdeConfig residual;
};

struct PairEnumeration {
    std::vector<PairRow> rows;           // ordered by (i1, j1, i2, j2)
    std::size_t distinct_invariant_sets; // unordered {t1, t2} dedup
};

/// All admissible standard-variant tuples (i1,j1,i2,j2) in 7x4x7x4.
PairEnumeration enumerate_pairs();

enum class Verdict { guaranteed, not_implied };

/// Sufficient-condition outcomes only; not_implied never asserts
/// non-existence.
struct EmbeddingVerdict {
    Verdict exists = Verdict::not_implied;
    Verdict unique = Verdict::not_implied;
};

/// Primitive-embedding criteria for an even lattice K into an even unimodular
/// lattice L: existence from signature fit plus 2 rank(K) <= rank(L) or
/// rank(K) + ell(K) < rank(L); uniqueness from the strict signature fit plus
/// the same bounds tightened by 2.
EmbeddingVerdict nikulin_embedding_check(int k_rank, int k_plus, int k_minus, int k_ell,
                                         int l_rank, int l_plus, int l_minus);

/// r1+r2 <= 11 or r1+r2+a1+a2 < 22.
bool smooth_pair_exists(const InvariantTriple& t1, const InvariantTriple& t2);

/// Configuration spanned by the nodes fixed pointwise by both involutions:
/// the part of 3A1+2E8 that no equivariant perturbation can remove.
AdeConfig minimal_residual_singularity(const PairId& id);

} // namespace k3inv
