#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3inv/lattice.hpp"

namespace k3inv {

/// The complete set of norm -2 vectors of a negative definite lattice,
/// lexicographically sorted and closed under negation.
struct RootSet {
    IntegerLattice lattice;
    std::vector<IntVec> roots;
};

/// A multiset of simply laced Dynkin types with multiplicities.
class AdeConfig {
public:
    struct Component {
        char family = 'A'; // 'A', 'D' or 'E'
        int n = 1;
        auto operator<=>(const Component&) const = default;
    };

    AdeConfig() = default;

    void add(char family, int n, int count = 1);
    int count(char family, int n) const;
    int total_nodes() const;
    bool empty() const { return counts_.empty(); }

    /// Sorted by (family, n), multiplicities prefixed when > 1, e.g. "3A1+2E8".
    /// The empty configuration prints as "smooth".
    std::string str() const;

    const std::map<Component, int>& components() const { return counts_; }

    /// Whether every multiplicity is bounded by the one in `other`.
    bool submultiset_of(const AdeConfig& other) const;

    bool operator==(const AdeConfig&) const = default;

private:
    std::map<Component, int> counts_;
};

/// Exact Fincke-Pohst enumeration of {d : d.d = -2} over a negative definite
/// lattice. Refuses rank > 24 or |det| > 10^9.
RootSet enumerate_roots(const IntegerLattice& l);

/// Reduces a root set to simple roots: a deterministic generic linear
/// functional selects the positive roots, and the simple ones are those not
/// expressible as a sum of two positive roots.
std::vector<IntVec> extract_simple_roots(const RootSet& rs);

/// Recognizes the disjoint union of simply laced Dynkin diagrams on a set of
/// simple roots (pairwise products in {0,1}, norms -2).
AdeConfig classify_dynkin(const std::vector<IntVec>& simple_roots, const IntegerLattice& l);

/// enumerate_roots, extract_simple_roots and classify_dynkin composed over the
/// induced form of a negative definite sublattice.
AdeConfig singularity_configuration(const Sublattice& s);

/// Number of roots of the simply laced root system X_n: A_n has n(n+1),
/// D_n has 2n(n-1), E6/E7/E8 have 72/126/240.
long ade_root_count(char family, int n);

} // namespace k3inv
