#include "k3inv/isometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>

namespace k3inv {

namespace {

IntegerLattice lattice_3H() { return standard_lattice("3H"); }
IntegerLattice lattice_2mE8() { return standard_lattice("2minusE8"); }

// 2x2 building blocks for the hyperbolic summands
IntMat block_I() { return IntMat{{1, 0}, {0, 1}}; }
IntMat block_mI() { return IntMat{{-1, 0}, {0, -1}}; }
IntMat block_S() { return IntMat{{0, 1}, {1, 0}}; }
IntMat block_mS() { return IntMat{{0, -1}, {-1, 0}}; }

IntMat block_diag6(const IntMat& a, const IntMat& b, const IntMat& c) {
    IntMat m(6, 6);
    const IntMat* bs[3] = {&a, &b, &c};
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(2 * k + i, 2 * k + j) = (*bs[k])(i, j);
    return m;
}

IntMat tau_matrix6() {
    IntMat t(6, 6);
    t(4, 0) = t(5, 1) = t(2, 2) = t(3, 3) = t(0, 4) = t(1, 5) = 1;
    return t;
}

} // namespace

bool LatticeIsometry::is_involution() const {
    return matrix * matrix == IntMat::identity(matrix.rows());
}

bool verify_isometry(const IntMat& m, const IntegerLattice& l) {
    if (m.rows() != l.rank || m.cols() != l.rank)
        throw Error(Errc::dimension_mismatch, "matrix shape vs lattice rank");
    if (m.transpose() * l.gram * m != l.gram) return false;
    Int d = determinant(m);
    return d == 1 || d == -1;
}

std::string SimpleInvolutionId::str() const {
    std::string s = std::to_string(i) + "," + std::to_string(j);
    if (variant == Rho2Variant::alt) s += ",alt";
    return s;
}

SimpleInvolutionId SimpleInvolutionId::parse(const std::string& s) {
    std::stringstream ss(s);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ',')) parts.push_back(part);
    if (parts.size() != 2 && parts.size() != 3)
        throw Error(Errc::bad_input, "expected 'i,j' or 'i,j,alt', got '" + s + "'");
    SimpleInvolutionId id;
    try {
        id.i = std::stoi(parts[0]);
        id.j = std::stoi(parts[1]);
    } catch (const std::exception&) {
        throw Error(Errc::bad_input, "non-numeric involution id '" + s + "'");
    }
    if (parts.size() == 3) {
        if (parts[2] != "alt")
            throw Error(Errc::bad_input, "unknown variant '" + parts[2] + "'");
        id.variant = Rho2Variant::alt;
    }
    return id;
}

LatticeIsometry generator_rho1(int i) {
    IntMat m(6, 6);
    switch (i) {
    case 1: m = block_diag6(block_I(), block_mI(), block_mI()); break;
    case 2: m = block_diag6(block_I(), block_mS(), block_mI()); break;
    case 3: m = block_diag6(block_I(), block_mS(), block_mS()); break;
    case 4: m = block_diag6(block_S(), block_mI(), block_mI()); break;
    case 5: m = block_diag6(block_S(), block_mS(), block_mI()); break;
    case 6: m = block_diag6(block_S(), block_mS(), block_mS()); break;
    case 7:
        // H1 <-> H2 exchanged, -1 on H3
        m(2, 0) = m(3, 1) = m(0, 2) = m(1, 3) = 1;
        m(4, 4) = m(5, 5) = -1;
        break;
    default:
        throw Error(Errc::index_out_of_range, "rho1 index must be in 1..7");
    }
    return LatticeIsometry{lattice_3H(), std::move(m)};
}

LatticeIsometry generator_rho2(int j, Rho2Variant variant) {
    if (j < 1 || j > 4)
        throw Error(Errc::index_out_of_range, "rho2 index must be in 1..4");
    if (variant == Rho2Variant::alt && j != 2 && j != 4)
        throw Error(Errc::invalid_variant, "alt variant only defined for j in {2,4}");
    IntMat m(16, 16);
    for (int k = 0; k < 8; ++k) {
        switch (j) {
        case 1:
            m(k, k) = 1;
            m(8 + k, 8 + k) = 1;
            break;
        case 2:
            if (variant == Rho2Variant::standard) {
                m(k, k) = -1;
                m(8 + k, 8 + k) = 1;
            } else { // (x1, x2) -> (x1, -x2)
                m(k, k) = 1;
                m(8 + k, 8 + k) = -1;
            }
            break;
        case 3:
            m(k, k) = -1;
            m(8 + k, 8 + k) = -1;
            break;
        case 4:
            if (variant == Rho2Variant::standard) { // (x1, x2) -> (x2, x1)
                m(8 + k, k) = 1;
                m(k, 8 + k) = 1;
            } else { // (x1, x2) -> (-x2, -x1)
                m(8 + k, k) = -1;
                m(k, 8 + k) = -1;
            }
            break;
        }
    }
    return LatticeIsometry{lattice_2mE8(), std::move(m)};
}

LatticeIsometry tau_conjugate(const LatticeIsometry& m) {
    const int n = m.matrix.rows();
    if (n == 6) {
        IntMat t = tau_matrix6();
        return LatticeIsometry{m.ambient, t * m.matrix * t};
    }
    if (n == 22) {
        IntMat t(22, 22);
        IntMat t6 = tau_matrix6();
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) t(i, j) = t6(i, j);
        for (int i = 6; i < 22; ++i) t(i, i) = 1;
        return LatticeIsometry{m.ambient, t * m.matrix * t};
    }
    throw Error(Errc::dimension_mismatch, "tau conjugation expects a map of 3H or of the K3 lattice");
}

LatticeIsometry simple_involution(const SimpleInvolutionId& id) {
    LatticeIsometry r1 = generator_rho1(id.i);
    LatticeIsometry r2 = generator_rho2(id.j, id.variant);
    IntMat m(22, 22);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = r1.matrix(i, j);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) m(6 + i, 6 + j) = r2.matrix(i, j);
    LatticeIsometry out{lattice_K3(), std::move(m)};
    if (!verify_isometry(out.matrix, out.ambient) || !out.is_involution())
        throw Error(Errc::not_involution, "generator composition failed verification");
    return out;
}

Sublattice fixed_lattice(const LatticeIsometry& m) {
    if (!m.is_involution())
        throw Error(Errc::not_involution, "fixed lattice requires an involution");
    return Sublattice{m.ambient, integer_kernel(m.matrix - IntMat::identity(m.matrix.rows()))};
}

Sublattice anti_fixed_lattice(const LatticeIsometry& m) {
    if (!m.is_involution())
        throw Error(Errc::not_involution, "anti-fixed lattice requires an involution");
    return Sublattice{m.ambient, integer_kernel(m.matrix + IntMat::identity(m.matrix.rows()))};
}

InvariantTriple involution_invariants(const LatticeIsometry& m) {
    Sublattice fixed = fixed_lattice(m);
    IntegerLattice f = fixed.induced();
    LatticeSignature sig = signature(f);
    if (sig.n_plus != 1 || sig.n_zero != 0)
        throw Error(Errc::not_hyperbolic, "fixed lattice signature is not (1, r-1)");
    DiscriminantData d = discriminant_invariants(f);
    if (!d.is_two_elementary)
        throw Error(Errc::not_two_elementary, "fixed lattice discriminant group is not 2-elementary");
    return InvariantTriple{f.rank, d.a, d.delta};
}

std::vector<std::pair<SimpleInvolutionId, InvariantTriple>> classification_table() {
    std::vector<std::pair<SimpleInvolutionId, InvariantTriple>> out;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 4; ++j) {
            SimpleInvolutionId id{i, j};
            out.emplace_back(id, involution_invariants(simple_involution(id)));
        }
    return out;
}

FixedLocusTopology fixed_locus_topology(const InvariantTriple& t) {
    if (t.r == 10 && t.a == 10 && t.delta == 0)
        return FixedLocusTopology{FixedLocusKind::empty, 0, 0};
    if (t.r == 10 && t.a == 8 && t.delta == 0)
        return FixedLocusTopology{FixedLocusKind::two_elliptic_curves, 0, 0};
    if ((22 - t.r - t.a) % 2 != 0 || (t.r - t.a) % 2 != 0)
        throw Error(Errc::parity, "22-r-a and r-a must both be even");
    int genus = (22 - t.r - t.a) / 2;
    int k = (t.r - t.a) / 2;
    if (genus < 0 || k < 0)
        throw Error(Errc::parity, "triple outside the admissible range");
    return FixedLocusTopology{FixedLocusKind::general, genus, k};
}

} // namespace k3inv
