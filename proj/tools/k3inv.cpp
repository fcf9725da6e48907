// Command-line surface over the k3inv library. Every subcommand is a thin
// adapter: parsing and formatting only, all computation happens in the
// library. Output is deterministic; identical invocations print identical
// bytes.

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "k3inv/json_io.hpp"

namespace {

using namespace k3inv;

std::set<int> parse_node_list(const std::string& text) {
    std::set<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v;
        try {
            v = std::stoi(item);
        } catch (const std::exception&) {
            throw Error(Errc::bad_input, "bad orbit index '" + item + "'");
        }
        if (v < 1 || v > 19)
            throw Error(Errc::index_out_of_range, "orbit index " + item + " outside 1..19");
        out.insert(v - 1);
    }
    return out;
}

std::string config_line(const AdeConfig& config, long roots) {
    return config.str() + " (roots: " + std::to_string(roots) + ")";
}

int run_classify(const std::string& format) {
    auto table = classification_table();
    if (format == "json") {
        json rows = json::array();
        for (const auto& [id, t] : table)
            rows.push_back(json{{"i", id.i}, {"j", id.j}, {"r", t.r}, {"a", t.a}, {"delta", t.delta}});
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& [id, t] : table)
            std::cout << id.i << " " << id.j << " " << t.r << " " << t.a << " " << t.delta << "\n";
    }
    return 0;
}

int run_invariants(const std::string& simple, const std::string& file) {
    LatticeIsometry m = simple.empty() ? load_isometry_file(file)
                                       : simple_involution(SimpleInvolutionId::parse(simple));
    InvariantTriple t = involution_invariants(m);
    std::cout << t.r << " " << t.a << " " << t.delta << "\n";
    return 0;
}

int run_fixed_locus(int r, int a, int delta) {
    if (delta != 0 && delta != 1)
        throw Error(Errc::bad_input, "delta must be 0 or 1");
    FixedLocusTopology top = fixed_locus_topology(InvariantTriple{r, a, delta});
    switch (top.kind) {
    case FixedLocusKind::empty:
        std::cout << "kind: empty\n";
        break;
    case FixedLocusKind::two_elliptic_curves:
        std::cout << "kind: two-elliptic-curves\n";
        break;
    case FixedLocusKind::general:
        std::cout << "kind: general\n"
                  << "genus: " << top.genus << "\n"
                  << "rational_curves: " << top.rational_curve_count << "\n";
        break;
    }
    return 0;
}

int run_singularities(const std::string& simple, const std::string& resolve) {
    SimpleInvolutionId id = SimpleInvolutionId::parse(simple);
    LatticeIsometry rho = simple_involution(id);
    PeriodSpec spec = canonical_period_spec(id.i);
    if (!resolve.empty()) {
        std::set<int> chosen = parse_node_list(resolve);
        std::set<int> m1, m2, m3, m4;
        std::map<int, const SingleOrbit*> by_id;
        std::vector<SingleOrbit> orbits = single_orbits(rho);
        for (const SingleOrbit& o : orbits) by_id[o.id()] = &o;
        for (int idx : chosen) {
            auto it = by_id.find(idx);
            if (it == by_id.end())
                throw Error(Errc::type_mismatch,
                            "index " + std::to_string(idx + 1) +
                                " is not the smallest index of an orbit");
            switch (it->second->kind) {
            case OrbitKind::fixed: m1.insert(idx); break;
            case OrbitKind::negated: m2.insert(idx); break;
            case OrbitKind::swapped_pair: m3.insert(idx); break;
            case OrbitKind::antiswapped_pair: m4.insert(idx); break;
            }
        }
        spec = perturb_single(rho, spec, m1, m2, m3, m4);
    }
    SingularReport report = singular_roots(spec);
    std::cout << config_line(report.config, report.root_count) << "\n";
    return 0;
}

int run_pairs_enumerate(bool count_only, const std::string& format) {
    PairEnumeration e = enumerate_pairs();
    if (count_only) {
        std::cout << e.distinct_invariant_sets << "\n";
        return 0;
    }
    if (format == "json") {
        json rows = json::array();
        for (const PairRow& row : e.rows)
            rows.push_back(json{{"i1", row.id.first.i},
                                {"j1", row.id.first.j},
                                {"i2", row.id.second.i},
                                {"j2", row.id.second.j},
                                {"t1", {row.t1.r, row.t1.a, row.t1.delta}},
                                {"t2", {row.t2.r, row.t2.a, row.t2.delta}},
                                {"residual", row.residual.str()}});
        json out{{"rows", std::move(rows)},
                 {"distinct_invariant_sets", e.distinct_invariant_sets}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const PairRow& row : e.rows)
            std::cout << row.id.first.i << " " << row.id.first.j << " " << row.id.second.i
                      << " " << row.id.second.j << " " << row.t1.r << " " << row.t1.a << " "
                      << row.t1.delta << " " << row.t2.r << " " << row.t2.a << " "
                      << row.t2.delta << " " << row.residual.str() << "\n";
        std::cout << "distinct_invariant_sets: " << e.distinct_invariant_sets << "\n";
    }
    return 0;
}

int run_pair(const std::string& id_text, const std::string& resolve, bool residual) {
    PairId id = PairId::parse(id_text);
    BuiltPair pair = build_pair(id);
    if (resolve.empty() && !residual) {
        SingularReport report = singular_roots(pair.spec);
        std::cout << "config: " << config_line(report.config, report.root_count) << "\n";
        return 0;
    }
    if (!resolve.empty()) {
        std::vector<std::string> parts;
        std::stringstream ss(resolve);
        std::string seg;
        while (std::getline(ss, seg, ';')) parts.push_back(seg);
        if (parts.size() > 3)
            throw Error(Errc::bad_input, "--resolve expects at most three ';'-separated lists");
        parts.resize(3);
        PeriodSpec spec = perturb_pair(pair.rho1, pair.rho2, pair.spec,
                                       parse_node_list(parts[0]), parse_node_list(parts[1]),
                                       parse_node_list(parts[2]));
        SingularReport report = singular_roots(spec);
        std::cout << "resolved: " << config_line(report.config, report.root_count) << "\n";
    }
    if (residual)
        std::cout << "residual: " << minimal_residual_singularity(id).str() << "\n";
    return 0;
}

int run_roots(const std::string& path) {
    IntegerLattice l = load_lattice_file(path);
    RootSet roots = enumerate_roots(l);
    AdeConfig config = classify_dynkin(extract_simple_roots(roots), l);
    std::cout << config_line(config, long(roots.roots.size())) << "\n";
    return 0;
}

std::vector<int> parse_int_tuple(const std::string& text, size_t n, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw Error(Errc::bad_input, flag + " expects integers, got '" + item + "'");
        }
    }
    if (out.size() != n)
        throw Error(Errc::bad_input, flag + " expects " + std::to_string(n) + " comma-separated values");
    return out;
}

int run_embed_check(const std::string& k_text, const std::string& l_text) {
    std::vector<int> k = parse_int_tuple(k_text, 4, "--k");
    std::vector<int> l = parse_int_tuple(l_text, 3, "--l");
    EmbeddingVerdict v = nikulin_embedding_check(k[0], k[1], k[2], k[3], l[0], l[1], l[2]);
    auto word = [](Verdict w) { return w == Verdict::guaranteed ? "guaranteed" : "not_implied"; };
    std::cout << "exists: " << word(v.exists) << "\n"
              << "unique: " << word(v.unique) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice computations for K3 involutions and ADE degenerations"};
    app.require_subcommand(1);

    std::string format = "tsv";
    auto* classify = app.add_subcommand("classify", "The 28-row simple involution table");
    classify->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

    std::string simple_id, iso_file;
    auto* invariants = app.add_subcommand("invariants", "Invariants (r, a, delta) of an involution");
    auto* simple_opt = invariants->add_option("--simple", simple_id, "involution id 'i,j[,alt]'");
    invariants->add_option("--file", iso_file, "isometry JSON file")->excludes(simple_opt);

    int fl_r = 0, fl_a = 0, fl_delta = 0;
    auto* fixed_locus = app.add_subcommand("fixed-locus", "Fixed locus topology of a triple");
    fixed_locus->add_option("r", fl_r)->required();
    fixed_locus->add_option("a", fl_a)->required();
    fixed_locus->add_option("delta", fl_delta)->required();

    std::string sing_id, sing_resolve;
    auto* singularities = app.add_subcommand("singularities", "Singularity configuration of the canonical period");
    singularities->add_option("--simple", sing_id, "involution id 'i,j[,alt]'")->required();
    singularities->add_option("--resolve", sing_resolve, "orbit ids to resolve, comma-separated");

    bool count_only = false;
    std::string pairs_format = "tsv";
    auto* pairs = app.add_subcommand("pairs", "Commuting pair enumeration");
    auto* enumerate = pairs->add_subcommand("enumerate", "All admissible pairs");
    enumerate->add_flag("--count-only", count_only, "print the distinct invariant set count");
    enumerate->add_option("--format", pairs_format)->check(CLI::IsMember({"tsv", "json"}));
    pairs->require_subcommand(1);

    std::string pair_id, pair_resolve;
    bool pair_residual = false;
    auto* pair = app.add_subcommand("pair", "A single commuting pair");
    pair->add_option("--id", pair_id, "'i1,j1/i2,j2[+alt]'")->required();
    pair->add_option("--resolve", pair_resolve, "node lists 'P;Q;R'");
    pair->add_flag("--residual", pair_residual, "print the unresolvable core");

    std::string lattice_path;
    auto* roots = app.add_subcommand("roots", "Roots and configuration of a lattice file");
    roots->add_option("--lattice", lattice_path)->required();

    std::string embed_k, embed_l;
    auto* embed = app.add_subcommand("embed-check", "Primitive embedding criteria");
    embed->add_option("--k", embed_k, "RANK,SPLUS,SMINUS,ELL")->required();
    embed->add_option("--l", embed_l, "RANK,SPLUS,SMINUS")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return run_classify(format);
        if (invariants->parsed()) {
            if (simple_id.empty() && iso_file.empty())
                throw Error(Errc::bad_input, "one of --simple or --file is required");
            return run_invariants(simple_id, iso_file);
        }
        if (fixed_locus->parsed()) return run_fixed_locus(fl_r, fl_a, fl_delta);
        if (singularities->parsed()) return run_singularities(sing_id, sing_resolve);
        if (pairs->parsed()) return run_pairs_enumerate(count_only, pairs_format);
        if (pair->parsed()) return run_pair(pair_id, pair_resolve, pair_residual);
        if (roots->parsed()) return run_roots(lattice_path);
        if (embed->parsed()) return run_embed_check(embed_k, embed_l);
    } catch (const Error& e) {
        std::cerr << e.code_name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "E_INTERNAL: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
