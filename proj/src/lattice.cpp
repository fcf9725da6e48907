#include "k3inv/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>

namespace k3inv {

IntegerLattice::IntegerLattice(IntMat g, std::vector<std::string> lab)
    : rank(g.rows()), gram(std::move(g)), labels(std::move(lab)) {
    if (gram.rows() != gram.cols())
        throw Error(Errc::dimension_mismatch, "gram matrix must be square");
    if (!gram.is_symmetric())
        throw Error(Errc::bad_input, "gram matrix must be symmetric");
    if (!labels.empty() && int(labels.size()) != rank)
        throw Error(Errc::dimension_mismatch, "label count must match rank");
}

Int IntegerLattice::form(const IntVec& a, const IntVec& b) const {
    if (int(a.size()) != rank || int(b.size()) != rank)
        throw Error(Errc::dimension_mismatch, "vector length vs lattice rank");
    Int s = 0;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            if (b[j] != 0) s += a[i] * gram(i, j) * b[j];
    }
    return s;
}

Rat IntegerLattice::form(const RatVec& a, const RatVec& b) const {
    if (int(a.size()) != rank || int(b.size()) != rank)
        throw Error(Errc::dimension_mismatch, "vector length vs lattice rank");
    Rat s = 0;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            if (b[j] != 0) s += a[i] * Rat(gram(i, j)) * b[j];
    }
    return s;
}

IntegerLattice IntegerLattice::direct_sum(const IntegerLattice& other) const {
    IntMat g(rank + other.rank, rank + other.rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = gram(i, j);
    for (int i = 0; i < other.rank; ++i)
        for (int j = 0; j < other.rank; ++j) g(rank + i, rank + j) = other.gram(i, j);
    std::vector<std::string> lab;
    if (!labels.empty() && !other.labels.empty()) {
        lab = labels;
        lab.insert(lab.end(), other.labels.begin(), other.labels.end());
    }
    return IntegerLattice(std::move(g), std::move(lab));
}

IntegerLattice Sublattice::induced() const {
    IntMat bt = basis.transpose();
    return IntegerLattice(basis * ambient.gram * bt);
}

LatticeSignature signature(const IntegerLattice& l) {
    const int n = l.rank;
    RatMat a = to_rational(l.gram);
    LatticeSignature sig;
    for (int k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            int jd = -1, jo = -1;
            for (int j = k + 1; j < n; ++j) {
                if (jd < 0 && a(j, j) != 0) jd = j;
                if (jo < 0 && a(k, j) != 0) jo = j;
            }
            if (jd >= 0) {
                for (int c = 0; c < n; ++c) std::swap(a(k, c), a(jd, c));
                for (int r = 0; r < n; ++r) std::swap(a(r, k), a(r, jd));
            } else if (jo >= 0) {
                // zero diagonal block: fold a nonzero off-diagonal entry in
                for (int c = 0; c < n; ++c) a(k, c) += a(jo, c);
                for (int r = 0; r < n; ++r) a(r, k) += a(r, jo);
            } else {
                ++sig.n_zero;
                continue;
            }
        }
        Rat pivot = a(k, k);
        if (pivot > 0)
            ++sig.n_plus;
        else
            ++sig.n_minus;
        for (int i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / pivot;
            for (int c = k; c < n; ++c) a(i, c) -= f * a(k, c);
            for (int r = k; r < n; ++r) a(r, i) -= f * a(r, k);
        }
    }
    return sig;
}

bool is_even(const IntegerLattice& l) {
    for (int i = 0; i < l.rank; ++i)
        if (l.gram(i, i) % 2 != 0) return false;
    return true;
}

DiscriminantData discriminant_invariants(const IntegerLattice& l) {
    SmithResult snf = smith_normal_form(l.gram);
    DiscriminantData d;
    d.order = 1;
    for (const Int& e : snf.divisors()) {
        if (e == 0)
            throw Error(Errc::degenerate_lattice, "degenerate gram matrix");
        d.elementary_divisors.push_back(e);
        d.order *= e;
        if (e > 1) ++d.ell;
    }
    d.is_two_elementary = true;
    for (const Int& e : d.elementary_divisors) {
        if (e == 2) ++d.a;
        if (e != 1 && e != 2) d.is_two_elementary = false;
    }
    if (!d.is_two_elementary) {
        d.a = 0;
        return d;
    }
    if (!is_even(l)) return d; // delta undefined, stays -1
    if (d.a == 0) {
        d.delta = 0; // trivial group, every class norm is integral
        return d;
    }
    if (unsigned(d.a) > kDiscriminantEnumerationBound)
        throw Error(Errc::group_too_large, "discriminant class enumeration beyond 2^20");

    // Generators of L*/L in dual-basis coordinates: columns of u_inv at the
    // divisor-2 positions. Class norms live in Q/Z since l is even.
    RatMat dual_form = rational_inverse(to_rational(l.gram));
    std::vector<IntVec> gens;
    for (size_t i = 0; i < d.elementary_divisors.size(); ++i)
        if (d.elementary_divisors[i] == 2) gens.push_back(snf.u_inv.col(int(i)));

    d.delta = 0;
    const size_t total = size_t(1) << d.a;
    for (size_t mask = 1; mask < total; ++mask) {
        RatVec t(l.rank, Rat(0));
        for (int g = 0; g < d.a; ++g)
            if (mask & (size_t(1) << g))
                for (int k = 0; k < l.rank; ++k) t[k] += Rat(gens[g][k]);
        Rat norm = 0;
        for (int i = 0; i < l.rank; ++i) {
            if (t[i] == 0) continue;
            for (int j = 0; j < l.rank; ++j)
                if (t[j] != 0) norm += t[i] * dual_form(i, j) * t[j];
        }
        if (boost::multiprecision::denominator(norm) != 1) {
            d.delta = 1;
            break;
        }
    }
    return d;
}

Sublattice orthogonal_complement(const IntegerLattice& l, const std::vector<RatVec>& constraints) {
    IntMat rows(int(constraints.size()), l.rank);
    for (size_t k = 0; k < constraints.size(); ++k) {
        IntVec c = primitive_integer_vector(constraints[k]);
        if (int(c.size()) != l.rank)
            throw Error(Errc::dimension_mismatch, "constraint length vs lattice rank");
        // row_k = (G c)^T so that row_k . v = c . v in the lattice form
        for (int i = 0; i < l.rank; ++i) {
            Int s = 0;
            for (int j = 0; j < l.rank; ++j) s += l.gram(i, j) * c[j];
            rows(int(k), i) = s;
        }
    }
    return Sublattice{l, integer_kernel(rows)};
}

bool is_primitive_sublattice(const Sublattice& s) {
    for (const Int& e : smith_normal_form(s.basis).divisors())
        if (e != 1) return false;
    return true;
}

Sublattice span_sublattice(const IntegerLattice& l, const std::vector<IntVec>& vectors) {
    IntMat rows(int(vectors.size()), l.rank);
    for (size_t r = 0; r < vectors.size(); ++r) {
        if (int(vectors[r].size()) != l.rank)
            throw Error(Errc::dimension_mismatch, "vector length vs lattice rank");
        for (int c = 0; c < l.rank; ++c) rows(int(r), c) = vectors[r][c];
    }
    return Sublattice{l, saturate_rows(rows)};
}

bool same_span(const Sublattice& a, const Sublattice& b) {
    if (a.ambient.gram != b.ambient.gram) return false;
    return hermite_normal_form(saturate_rows(a.basis)) == hermite_normal_form(saturate_rows(b.basis));
}

bool span_contains(const Sublattice& s, const IntVec& v) {
    return in_row_span(s.basis, v);
}

IntegerLattice lattice_H() {
    return IntegerLattice(IntMat{{0, 1}, {1, 0}}, {"u_1", "u_2"});
}

IntegerLattice lattice_A1() {
    return IntegerLattice(IntMat{{-2}}, {"e"});
}

IntegerLattice lattice_minus_e8() {
    IntMat g{{-2, 0, 1, 0, 0, 0, 0, 0},
             {0, -2, 0, 1, 0, 0, 0, 0},
             {1, 0, -2, 1, 0, 0, 0, 0},
             {0, 1, 1, -2, 1, 0, 0, 0},
             {0, 0, 0, 1, -2, 1, 0, 0},
             {0, 0, 0, 0, 1, -2, 1, 0},
             {0, 0, 0, 0, 0, 1, -2, 1},
             {0, 0, 0, 0, 0, 0, 1, -2}};
    std::vector<std::string> labels;
    for (int k = 1; k <= 8; ++k) labels.push_back("v_" + std::to_string(k));
    return IntegerLattice(std::move(g), std::move(labels));
}

IntegerLattice lattice_K3() {
    IntegerLattice l = lattice_H();
    l = l.direct_sum(lattice_H()).direct_sum(lattice_H());
    l = l.direct_sum(lattice_minus_e8()).direct_sum(lattice_minus_e8());
    std::vector<std::string> labels;
    for (int i = 1; i <= 3; ++i) {
        labels.push_back("u_1^" + std::to_string(i));
        labels.push_back("u_2^" + std::to_string(i));
    }
    for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 8; ++k)
            labels.push_back("v_" + std::to_string(k) + "^" + std::to_string(i));
    l.labels = std::move(labels);
    return l;
}

IntegerLattice standard_lattice(const std::string& name) {
    std::vector<IntegerLattice> parts;
    std::stringstream ss(name);
    std::string term;
    while (std::getline(ss, term, '+')) {
        size_t pos = 0;
        while (pos < term.size() && std::isspace(static_cast<unsigned char>(term[pos]))) ++pos;
        size_t digits = pos;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
        int mult = 1;
        if (digits > pos) mult = std::stoi(term.substr(pos, digits - pos));
        std::string base = term.substr(digits);
        while (!base.empty() && std::isspace(static_cast<unsigned char>(base.back()))) base.pop_back();
        if (mult < 1) throw Error(Errc::unknown_name, "bad multiplicity in '" + term + "'");
        IntegerLattice piece;
        if (base == "H")
            piece = lattice_H();
        else if (base == "A1")
            piece = lattice_A1();
        else if (base == "minusE8")
            piece = lattice_minus_e8();
        else if (base == "K3")
            piece = lattice_K3();
        else
            throw Error(Errc::unknown_name, "unknown lattice name '" + base + "'");
        for (int k = 0; k < mult; ++k) parts.push_back(piece);
    }
    if (parts.empty())
        throw Error(Errc::unknown_name, "empty lattice name");
    IntegerLattice out = parts.front();
    for (size_t k = 1; k < parts.size(); ++k) out = out.direct_sum(parts[k]);
    if (parts.size() > 1) out.labels.clear();
    return out;
}

} // namespace k3inv
