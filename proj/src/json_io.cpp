#include "k3inv/json_io.hpp"

#include <fstream>

namespace k3inv {

namespace {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error(Errc::bad_input, "expected an integer, got " + j.dump());
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(Int(s));
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) throw Error(Errc::bad_input, "zero denominator in '" + s + "'");
            return Rat(num, den);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(Errc::bad_input, "malformed rational '" + s + "'");
        }
    }
    throw Error(Errc::bad_input, "expected a rational, got " + j.dump());
}

json rat_to_json(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

RatVec rat_vector_from_json(const json& j, int expected) {
    if (!j.is_array() || int(j.size()) != expected)
        throw Error(Errc::bad_input,
                    "expected an array of length " + std::to_string(expected));
    RatVec out;
    for (const json& x : j) out.push_back(rat_from_json(x));
    return out;
}

json rat_vector_to_json(const RatVec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(rat_to_json(x));
    return out;
}

} // namespace

IntegerLattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gram"))
        throw Error(Errc::bad_input, "lattice document must contain a 'gram' array");
    const json& g = j["gram"];
    if (!g.is_array())
        throw Error(Errc::bad_input, "'gram' must be an array of rows");
    const int n = int(g.size());
    IntMat gram(n, n);
    for (int r = 0; r < n; ++r) {
        if (!g[r].is_array() || int(g[r].size()) != n)
            throw Error(Errc::bad_input,
                        "gram row " + std::to_string(r) + " must have length " + std::to_string(n));
        for (int c = 0; c < n; ++c) gram(r, c) = int_from_json(g[r][c]);
    }
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
            if (gram(r, c) != gram(c, r))
                throw Error(Errc::bad_input,
                            "gram is not symmetric: gram[" + std::to_string(r) + "][" +
                                std::to_string(c) + "] = " + gram(r, c).str() + " but gram[" +
                                std::to_string(c) + "][" + std::to_string(r) + "] = " +
                                gram(c, r).str());
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const json& l : j["labels"]) labels.push_back(l.get<std::string>());
        if (int(labels.size()) != n)
            throw Error(Errc::bad_input, "label count must match rank");
    }
    return IntegerLattice(std::move(gram), std::move(labels));
}

json lattice_to_json(const IntegerLattice& l, const std::string& name) {
    json g = json::array();
    for (int r = 0; r < l.rank; ++r) {
        json row = json::array();
        for (int c = 0; c < l.rank; ++c) row.push_back(l.gram(r, c).convert_to<long long>());
        g.push_back(std::move(row));
    }
    json out{{"name", name}, {"gram", std::move(g)}};
    if (!l.labels.empty()) out["labels"] = l.labels;
    return out;
}

LatticeIsometry isometry_from_json(const json& j) {
    if (!j.is_object() || !j.contains("matrix"))
        throw Error(Errc::bad_input, "isometry document must contain a 'matrix' array");
    const json& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != 22)
        throw Error(Errc::bad_input, "matrix must have 22 rows");
    IntMat m(22, 22);
    for (int r = 0; r < 22; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 22)
            throw Error(Errc::bad_input,
                        "matrix row " + std::to_string(r) + " must have length 22");
        for (int c = 0; c < 22; ++c) m(r, c) = int_from_json(rows[r][c]);
    }
    IntegerLattice k3 = lattice_K3();
    IntMat check = m.transpose() * k3.gram * m;
    for (int r = 0; r < 22; ++r)
        for (int c = 0; c < 22; ++c)
            if (check(r, c) != k3.gram(r, c))
                throw Error(Errc::bad_input,
                            "not an isometry: image inner product w_" + std::to_string(r + 1) +
                                " . w_" + std::to_string(c + 1) + " = " + check(r, c).str() +
                                ", expected " + k3.gram(r, c).str());
    return LatticeIsometry{std::move(k3), std::move(m)};
}

json isometry_to_json(const LatticeIsometry& m) {
    json rows = json::array();
    for (int r = 0; r < m.matrix.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.matrix.cols(); ++c)
            row.push_back(m.matrix(r, c).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return json{{"matrix", std::move(rows)}};
}

json ade_config_to_json(const AdeConfig& c) {
    json comps = json::array();
    for (const auto& [comp, count] : c.components())
        comps.push_back(json{{"type", std::string(1, comp.family)}, {"n", comp.n}, {"count", count}});
    return json{{"components", std::move(comps)}};
}

PeriodSpec period_spec_from_json(const json& j) {
    PeriodSpec spec;
    const std::pair<const char*, PeriodSlot*> slots[3] = {
        {"x", &spec.x}, {"y", &spec.y}, {"z", &spec.z}};
    for (const auto& [key, slot] : slots) {
        if (!j.contains(key))
            throw Error(Errc::bad_input, std::string("missing slot '") + key + "'");
        const json& s = j[key];
        slot->base = rat_vector_from_json(s.at("base"), 22);
        if (s.contains("perturb"))
            for (const json& p : s["perturb"])
                slot->perturb.push_back(rat_vector_from_json(p, 22));
    }
    return spec;
}

json period_spec_to_json(const PeriodSpec& spec) {
    auto slot_to_json = [](const PeriodSlot& slot) {
        json perturb = json::array();
        for (const RatVec& p : slot.perturb) perturb.push_back(rat_vector_to_json(p));
        return json{{"base", rat_vector_to_json(slot.base)}, {"perturb", std::move(perturb)}};
    };
    return json{{"x", slot_to_json(spec.x)}, {"y", slot_to_json(spec.y)}, {"z", slot_to_json(spec.z)}};
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::bad_input, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error(Errc::bad_input, "malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace

IntegerLattice load_lattice_file(const std::string& path) {
    return lattice_from_json(parse_file(path));
}

LatticeIsometry load_isometry_file(const std::string& path) {
    return isometry_from_json(parse_file(path));
}

} // namespace k3inv
