#include "k3inv/roots.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>
#include <unordered_set>

namespace k3inv {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// floor(sqrt(t)) for rational t >= 0
Int floor_sqrt(const Rat& t) {
    Int fl = numerator(t) / denominator(t);
    return boost::multiprecision::sqrt(fl);
}

Int floor_rat(const Rat& t) {
    Int q = numerator(t) / denominator(t);
    if (numerator(t) < 0 && numerator(t) % denominator(t) != 0) q -= 1;
    return q;
}

struct Ldl {
    std::vector<RatVec> l; // strictly lower part, unit diagonal implied
    RatVec d;
};

// A = L D L^T for a positive definite rational matrix; throws otherwise.
Ldl ldl_decompose(const RatMat& a) {
    const int n = a.rows();
    Ldl out;
    out.l.assign(n, RatVec(n, Rat(0)));
    out.d.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        Rat di = a(i, i);
        for (int j = 0; j < i; ++j) di -= out.d[j] * out.l[i][j] * out.l[i][j];
        if (di <= 0)
            throw Error(Errc::not_negative_definite, "lattice form is not negative definite");
        out.d[i] = di;
        for (int r = i + 1; r < n; ++r) {
            Rat v = a(r, i);
            for (int j = 0; j < i; ++j) v -= out.d[j] * out.l[r][j] * out.l[i][j];
            out.l[r][i] = v / di;
        }
    }
    return out;
}

// All x with x^T A x = target, A positive definite; plain depth-first
// Fincke-Pohst over the exact LDL^T data.
void fp_enumerate(const Ldl& ldl, const Rat& target, std::vector<IntVec>& out) {
    const int n = int(ldl.d.size());
    IntVec x(n, Int(0));
    // descend from the last coordinate; rem = budget left for levels <= i
    auto rec = [&](auto&& self, int i, const Rat& rem) -> void {
        if (i < 0) {
            if (rem == 0) {
                bool nonzero = false;
                for (const Int& c : x)
                    if (c != 0) { nonzero = true; break; }
                if (nonzero) out.push_back(x);
            }
            return;
        }
        Rat c(0);
        for (int j = i + 1; j < n; ++j)
            if (x[j] != 0) c += ldl.l[j][i] * Rat(x[j]);
        Rat t = rem / ldl.d[i];
        Int half = floor_sqrt(t);
        Int lo = floor_rat(-c) - half - 1;
        Int hi = floor_rat(-c) + half + 1;
        for (Int xi = lo; xi <= hi; ++xi) {
            Rat shifted = Rat(xi) + c;
            Rat used = ldl.d[i] * shifted * shifted;
            if (used > rem) continue;
            x[i] = xi;
            self(self, i - 1, rem - used);
        }
        x[i] = 0;
    };
    rec(rec, n - 1, target);
}

struct VecHash {
    size_t operator()(const IntVec& v) const {
        size_t h = 1469598103934665603ull;
        for (const Int& x : v) {
            h ^= std::hash<long long>()(x.convert_to<long long>());
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct GramSchmidt {
    std::vector<RatVec> mu; // strictly lower triangle
    RatVec b;               // squared lengths of the orthogonalized basis
};

GramSchmidt gram_schmidt(const IntMat& a) {
    const int n = a.rows();
    GramSchmidt gs;
    gs.mu.assign(n, RatVec(n, Rat(0)));
    gs.b.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            Rat t(a(i, j));
            for (int l = 0; l < j; ++l) t -= gs.mu[i][l] * gs.mu[j][l] * gs.b[l];
            gs.mu[i][j] = t / gs.b[j];
        }
        Rat v(a(i, i));
        for (int j = 0; j < i; ++j) v -= gs.mu[i][j] * gs.mu[i][j] * gs.b[j];
        if (v <= 0)
            throw Error(Errc::not_negative_definite, "lattice form is not negative definite");
        gs.b[i] = v;
    }
    return gs;
}

Int round_rat(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    Int q = num / den, rem = num % den;
    if (2 * abs(rem) >= den) q += (num >= 0 ? 1 : -1);
    return q;
}

// Exact LLL (delta = 3/4) on a positive definite Gram matrix; returns the
// unimodular transform u with reduced = u * a * u^T. Fincke-Pohst is only
// practical on a reduced basis.
IntMat lll_reduce(IntMat& a) {
    const int n = a.rows();
    IntMat u = IntMat::identity(n);
    auto row_op = [&](int dst, int src, const Int& c) { // b_dst -= c * b_src
        for (int k = 0; k < n; ++k) {
            a(dst, k) -= c * a(src, k);
            u(dst, k) -= c * u(src, k);
        }
        for (int k = 0; k < n; ++k) a(k, dst) -= c * a(k, src);
    };
    auto row_swap = [&](int x, int y) {
        for (int k = 0; k < n; ++k) {
            std::swap(a(x, k), a(y, k));
            std::swap(u(x, k), u(y, k));
        }
        for (int k = 0; k < n; ++k) std::swap(a(k, x), a(k, y));
    };
    const Rat delta(3, 4);
    int k = 1;
    GramSchmidt gs = gram_schmidt(a);
    while (k < n) {
        for (int j = k - 1; j >= 0; --j) {
            Int r = round_rat(gs.mu[k][j]);
            if (r != 0) {
                row_op(k, j, r);
                gs = gram_schmidt(a);
            }
        }
        if (gs.b[k] >= (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.b[k - 1]) {
            ++k;
        } else {
            row_swap(k, k - 1);
            gs = gram_schmidt(a);
            k = std::max(k - 1, 1);
        }
    }
    return u;
}

int rank_of(const std::vector<IntVec>& vectors, int cols) {
    IntMat m(int(vectors.size()), cols);
    for (size_t r = 0; r < vectors.size(); ++r)
        for (int c = 0; c < cols; ++c) m(int(r), c) = vectors[r][c];
    return smith_normal_form(m).rank;
}

// first ~60 primes, used as deterministic generic functional weights
constexpr int kPrimes[] = {2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,
                           41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,
                           97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
                           157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
                           227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281};

} // namespace

void AdeConfig::add(char family, int n, int count) {
    if ((family != 'A' && family != 'D' && family != 'E') || count < 1)
        throw Error(Errc::not_ade, "invalid component");
    counts_[Component{family, n}] += count;
}

int AdeConfig::count(char family, int n) const {
    auto it = counts_.find(Component{family, n});
    return it == counts_.end() ? 0 : it->second;
}

int AdeConfig::total_nodes() const {
    int total = 0;
    for (const auto& [comp, count] : counts_) total += comp.n * count;
    return total;
}

std::string AdeConfig::str() const {
    if (counts_.empty()) return "smooth";
    std::string out;
    for (const auto& [comp, count] : counts_) {
        if (!out.empty()) out += "+";
        if (count > 1) out += std::to_string(count);
        out += comp.family;
        out += std::to_string(comp.n);
    }
    return out;
}

bool AdeConfig::submultiset_of(const AdeConfig& other) const {
    for (const auto& [comp, count] : counts_)
        if (count > other.count(comp.family, comp.n)) return false;
    return true;
}

long ade_root_count(char family, int n) {
    switch (family) {
    case 'A': return long(n) * (n + 1);
    case 'D': return 2L * n * (n - 1);
    case 'E':
        if (n == 6) return 72;
        if (n == 7) return 126;
        if (n == 8) return 240;
        break;
    }
    throw Error(Errc::not_ade, "unknown component type");
}

RootSet enumerate_roots(const IntegerLattice& l) {
    if (l.rank > 24)
        throw Error(Errc::resource_limit, "root enumeration refused beyond rank 24");
    if (l.rank == 0) return RootSet{l, {}};
    Int det = determinant(l.gram);
    if (abs(det) > 1000000000)
        throw Error(Errc::resource_limit, "root enumeration refused beyond |det| 10^9");

    IntMat pos(l.rank, l.rank);
    for (int i = 0; i < l.rank; ++i)
        for (int j = 0; j < l.rank; ++j) pos(i, j) = -l.gram(i, j);
    gram_schmidt(pos); // definiteness check before any basis change
    IntMat transform = lll_reduce(pos);
    IntMat back = transform.transpose(); // original coords of a reduced-coord vector

    RatMat a(l.rank, l.rank);
    for (int i = 0; i < l.rank; ++i)
        for (int j = 0; j < l.rank; ++j) a(i, j) = Rat(pos(i, j));
    Ldl ldl = ldl_decompose(a);

    std::vector<IntVec> reduced_roots;
    fp_enumerate(ldl, Rat(2), reduced_roots);
    std::vector<IntVec> roots;
    roots.reserve(reduced_roots.size());
    for (const IntVec& y : reduced_roots) roots.push_back(back * y);
    std::sort(roots.begin(), roots.end());
    return RootSet{l, std::move(roots)};
}

std::vector<IntVec> extract_simple_roots(const RootSet& rs) {
    if (rs.roots.empty()) return {};
    const int n = rs.lattice.rank;
    constexpr int kMaxAttempts = 32;

    std::vector<Int> values(rs.roots.size());
    int attempt = 0;
    for (; attempt < kMaxAttempts; ++attempt) {
        bool ok = true;
        std::set<Int> positives_seen;
        for (size_t k = 0; k < rs.roots.size() && ok; ++k) {
            Int f = 0;
            for (int c = 0; c < n; ++c) f += Int(kPrimes[attempt + c]) * rs.roots[k][c];
            values[k] = f;
            if (f == 0) ok = false;
            if (f > 0 && !positives_seen.insert(f).second) ok = false;
        }
        if (ok) break;
    }
    if (attempt == kMaxAttempts)
        throw Error(Errc::degenerate_functional, "no separating functional found");

    std::vector<IntVec> positive;
    for (size_t k = 0; k < rs.roots.size(); ++k)
        if (values[k] > 0) positive.push_back(rs.roots[k]);

    std::unordered_set<IntVec, VecHash> positive_set(positive.begin(), positive.end());
    std::vector<IntVec> simple;
    for (const IntVec& d : positive) {
        bool decomposable = false;
        for (const IntVec& d1 : positive) {
            IntVec d2(n);
            for (int c = 0; c < n; ++c) d2[c] = d[c] - d1[c];
            if (d2 == d1 || positive_set.count(d2) == 0) continue;
            bool zero = true;
            for (const Int& v : d2)
                if (v != 0) { zero = false; break; }
            if (zero) continue;
            decomposable = true;
            break;
        }
        if (!decomposable) simple.push_back(d);
    }
    std::sort(simple.begin(), simple.end());
    if (int(simple.size()) != rank_of(rs.roots, n))
        throw Error(Errc::degenerate_functional, "simple root count does not match root span rank");
    return simple;
}

AdeConfig classify_dynkin(const std::vector<IntVec>& simple_roots, const IntegerLattice& l) {
    const int m = int(simple_roots.size());
    for (const IntVec& d : simple_roots)
        if (l.form(d, d) != -2)
            throw Error(Errc::not_ade, "simple root of norm != -2");
    std::vector<std::vector<int>> adj(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Int p = l.form(simple_roots[a], simple_roots[b]);
            if (p != 0 && p != 1)
                throw Error(Errc::not_simply_laced,
                            "simple root product outside {0,1}: " + p.str());
            if (p == 1) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }

    AdeConfig config;
    std::vector<bool> seen(m, false);
    for (int start = 0; start < m; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        const int nn = int(comp.size());
        int edges = 0;
        std::vector<int> branch;
        for (int u : comp) {
            edges += int(adj[u].size());
            if (adj[u].size() > 3)
                throw Error(Errc::not_ade, "node of degree > 3");
            if (adj[u].size() == 3) branch.push_back(u);
        }
        edges /= 2;
        if (edges != nn - 1)
            throw Error(Errc::not_ade, "component contains a cycle");
        if (branch.empty()) {
            config.add('A', nn);
            continue;
        }
        if (branch.size() > 1)
            throw Error(Errc::not_ade, "more than one branch node");
        // measure the three leg lengths from the branch node
        std::vector<int> legs;
        for (int first : adj[branch[0]]) {
            int len = 1, prev = branch[0], cur = first;
            while (true) {
                int next = -1;
                for (int v : adj[cur])
                    if (v != prev) next = v;
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++len;
            }
            legs.push_back(len);
        }
        std::sort(legs.begin(), legs.end());
        if (legs[0] == 1 && legs[1] == 1)
            config.add('D', nn);
        else if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
            config.add('E', nn);
        else
            throw Error(Errc::not_ade, "branch legs do not match any simply laced diagram");
    }
    return config;
}

AdeConfig singularity_configuration(const Sublattice& s) {
    IntegerLattice induced = s.induced();
    RootSet roots = enumerate_roots(induced);
    return classify_dynkin(extract_simple_roots(roots), induced);
}

} // namespace k3inv
