#include "k3inv/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace k3inv {

RatMat to_rational(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = Rat(m(r, c));
    return out;
}

RatVec to_rational(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

IntVec primitive_integer_vector(const RatVec& v) {
    Int lcm = 1;
    for (const Rat& x : v) {
        Int den = boost::multiprecision::denominator(x);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    IntVec out(v.size());
    Int content = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = boost::multiprecision::numerator(v[i]) * (lcm / boost::multiprecision::denominator(v[i]));
        content = boost::multiprecision::gcd(content, out[i]);
    }
    if (content > 1)
        for (Int& x : out) x /= content;
    return out;
}

RatMat rational_inverse(const RatMat& m) {
    if (m.rows() != m.cols())
        throw Error(Errc::dimension_mismatch, "inverse of non-square matrix");
    const int n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c) != 0) { pivot = r; break; }
        if (pivot < 0)
            throw Error(Errc::degenerate_lattice, "singular matrix");
        if (pivot != c)
            for (int k = 0; k < n; ++k) {
                std::swap(a(pivot, k), a(c, k));
                std::swap(inv(pivot, k), inv(c, k));
            }
        Rat p = a(c, c);
        for (int k = 0; k < n; ++k) {
            a(c, k) /= p;
            inv(c, k) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rat f = a(r, c);
            for (int k = 0; k < n; ++k) {
                a(r, k) -= f * a(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols())
        throw Error(Errc::dimension_mismatch, "determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a(r, k) != 0) { pivot = r; break; }
            if (pivot < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

} // namespace k3inv
