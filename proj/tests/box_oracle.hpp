#pragma once

// Independent brute-force oracle for root enumeration tests: walks the whole
// coordinate box [-bound, bound]^n and keeps the vectors of norm -2. Shares
// nothing with the Fincke-Pohst path. Partial inner products are carried down
// the recursion and the last coordinate is evaluated in place, which changes
// the cost, not the set.

#include <algorithm>
#include <vector>

#include "k3inv/lattice.hpp"

namespace k3inv::testing {

inline std::vector<IntVec> box_roots(const IntegerLattice& l, int bound) {
    const int n = l.rank;
    std::vector<long long> g(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[size_t(i) * n + j] = l.gram(i, j).convert_to<long long>();

    std::vector<IntVec> out;
    std::vector<long long> x(n, 0);
    // cross[d*n + j] = sum_{i < d} G[j][i] x[i]
    std::vector<long long> cross(size_t(n + 1) * n, 0);

    auto emit = [&]() {
        IntVec v(n);
        for (int i = 0; i < n; ++i) v[i] = x[i];
        out.push_back(std::move(v));
    };

    auto rec = [&](auto&& self, int depth, long long norm) -> void {
        if (depth == n - 1) {
            const long long gd = g[size_t(depth) * n + depth];
            const long long c = cross[size_t(depth) * n + depth];
            for (long long v = -bound; v <= bound; ++v)
                if (norm + gd * v * v + 2 * c * v == -2) {
                    x[depth] = v;
                    emit();
                }
            x[depth] = 0;
            return;
        }
        const long long gd = g[size_t(depth) * n + depth];
        const long long c = cross[size_t(depth) * n + depth];
        for (long long v = -bound; v <= bound; ++v) {
            x[depth] = v;
            for (int j = 0; j < n; ++j)
                cross[size_t(depth + 1) * n + j] =
                    cross[size_t(depth) * n + j] + g[size_t(j) * n + depth] * v;
            self(self, depth + 1, norm + gd * v * v + 2 * c * v);
        }
        x[depth] = 0;
    };
    if (n == 0) return out;
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace k3inv::testing
