#include "k3inv/pairs.hpp"

#include <algorithm>
#include <set>

namespace k3inv {

namespace {

bool excluded_i_pair(int i1, int i2) {
    static const std::set<std::pair<int, int>> bad = {
        {2, 7}, {5, 7}, {7, 2}, {7, 5}, {7, 7}};
    return bad.count({i1, i2}) > 0;
}

bool excluded_j_pair(int j1, int j2) {
    return (j1 == 2 && j2 == 4) || (j1 == 4 && j2 == 2);
}

LatticeIsometry assemble(const LatticeIsometry& h_part, const LatticeIsometry& e_part) {
    IntMat m(22, 22);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = h_part.matrix(i, j);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) m(6 + i, 6 + j) = e_part.matrix(i, j);
    return LatticeIsometry{lattice_K3(), std::move(m)};
}

struct BuildOutcome {
    bool ok = false;
    BuiltPair pair;
};

BuildOutcome try_build(const PairId& id) {
    BuildOutcome out;
    if (id.first.i < 1 || id.first.i > 7 || id.second.i < 1 || id.second.i > 7 ||
        id.first.j < 1 || id.first.j > 4 || id.second.j < 1 || id.second.j > 4)
        return out;
    if (id.first.variant != Rho2Variant::standard)
        return out; // the marking is adjusted so the first rho2 part is standard
    if (excluded_i_pair(id.first.i, id.second.i)) return out;
    if (excluded_j_pair(id.first.j, id.second.j)) return out;
    if (id.second.variant == Rho2Variant::alt && id.second.j != 2 && id.second.j != 4)
        return out;

    LatticeIsometry rho1 = assemble(generator_rho1(id.first.i), generator_rho2(id.first.j));
    LatticeIsometry rho2 = assemble(tau_conjugate(generator_rho1(id.second.i)),
                                    generator_rho2(id.second.j, id.second.variant));
    if (rho1.matrix * rho2.matrix != rho2.matrix * rho1.matrix) return out;

    PeriodSpec spec = canonical_pair_period_spec(id.first.i, id.second.i);
    if (!check_equivariance(rho1, SignTriple{-1, -1, 1}, spec)) return out;
    if (!check_equivariance(rho2, SignTriple{-1, 1, -1}, spec)) return out;

    out.ok = true;
    out.pair = BuiltPair{std::move(rho1), std::move(rho2), std::move(spec)};
    return out;
}

AdeConfig residual_of(const BuiltPair& pair) {
    OrbitTypeReport report = orbit_analysis(pair.rho1, pair.rho2);
    std::vector<int> fixed_nodes = report.nodes_of_type(1, 1);
    return config_of_nodes(std::set<int>(fixed_nodes.begin(), fixed_nodes.end()));
}

} // namespace

std::string PairId::str() const {
    std::string s = std::to_string(first.i) + "," + std::to_string(first.j) + "/" +
                    std::to_string(second.i) + "," + std::to_string(second.j);
    if (second.variant == Rho2Variant::alt) s += "+alt";
    return s;
}

PairId PairId::parse(const std::string& s) {
    std::string body = s;
    bool alt = false;
    if (body.size() > 4 && body.substr(body.size() - 4) == "+alt") {
        alt = true;
        body = body.substr(0, body.size() - 4);
    }
    size_t slash = body.find('/');
    if (slash == std::string::npos)
        throw Error(Errc::bad_input, "expected 'i1,j1/i2,j2[+alt]', got '" + s + "'");
    PairId id;
    id.first = SimpleInvolutionId::parse(body.substr(0, slash));
    id.second = SimpleInvolutionId::parse(body.substr(slash + 1));
    if (alt) id.second.variant = Rho2Variant::alt;
    return id;
}

bool pair_admissible(const PairId& id) { return try_build(id).ok; }

BuiltPair build_pair(const PairId& id) {
    BuildOutcome out = try_build(id);
    if (!out.ok)
        throw Error(Errc::not_admissible, "pair " + id.str() + " is not admissible");
    return std::move(out.pair);
}

PairEnumeration enumerate_pairs() {
    PairEnumeration result;
    std::set<std::pair<InvariantTriple, InvariantTriple>> invariant_sets;

    std::map<std::pair<int, int>, InvariantTriple> table;
    for (const auto& [id, t] : classification_table()) table[{id.i, id.j}] = t;

    for (int i1 = 1; i1 <= 7; ++i1)
        for (int j1 = 1; j1 <= 4; ++j1)
            for (int i2 = 1; i2 <= 7; ++i2)
                for (int j2 = 1; j2 <= 4; ++j2) {
                    PairId id{SimpleInvolutionId{i1, j1}, SimpleInvolutionId{i2, j2}};
                    BuildOutcome out = try_build(id);
                    if (!out.ok) continue;
                    PairRow row;
                    row.id = id;
                    row.t1 = table[{i1, j1}];
                    row.t2 = table[{i2, j2}];
                    row.residual = residual_of(out.pair);
                    invariant_sets.insert(row.t1 <= row.t2 ? std::pair{row.t1, row.t2}
                                                           : std::pair{row.t2, row.t1});
                    result.rows.push_back(std::move(row));
                }
    result.distinct_invariant_sets = invariant_sets.size();
    return result;
}

EmbeddingVerdict nikulin_embedding_check(int k_rank, int k_plus, int k_minus, int k_ell,
                                         int l_rank, int l_plus, int l_minus) {
    EmbeddingVerdict verdict;
    const bool sig_fits = k_plus <= l_plus && k_minus <= l_minus;
    if (sig_fits && (2 * k_rank <= l_rank || k_rank + k_ell < l_rank))
        verdict.exists = Verdict::guaranteed;
    const bool sig_strict = k_plus < l_plus && k_minus < l_minus;
    if (verdict.exists == Verdict::guaranteed && sig_strict &&
        (2 * k_rank <= l_rank - 2 || k_rank + k_ell <= l_rank - 2))
        verdict.unique = Verdict::guaranteed;
    return verdict;
}

bool smooth_pair_exists(const InvariantTriple& t1, const InvariantTriple& t2) {
    return t1.r + t2.r <= 11 || t1.r + t2.r + t1.a + t2.a < 22;
}

AdeConfig minimal_residual_singularity(const PairId& id) {
    return residual_of(build_pair(id));
}

} // namespace k3inv
