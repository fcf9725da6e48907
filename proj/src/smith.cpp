#include "k3inv/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace k3inv {

namespace {

using boost::multiprecision::abs;

struct SnfState {
    IntMat m, u, v, u_inv, v_inv;

    void row_swap(int a, int b) {
        for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u(a, c), u(b, c));
        for (int r = 0; r < u_inv.rows(); ++r) std::swap(u_inv(r, a), u_inv(r, b));
    }
    void col_swap(int a, int b) {
        for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
        for (int r = 0; r < v.rows(); ++r) std::swap(v(r, a), v(r, b));
        for (int c = 0; c < v_inv.cols(); ++c) std::swap(v_inv(a, c), v_inv(b, c));
    }
    // row a += k * row b
    void row_add(int a, int b, const Int& k) {
        for (int c = 0; c < m.cols(); ++c) m(a, c) += k * m(b, c);
        for (int c = 0; c < u.cols(); ++c) u(a, c) += k * u(b, c);
        for (int r = 0; r < u_inv.rows(); ++r) u_inv(r, b) -= k * u_inv(r, a);
    }
    // col a += k * col b
    void col_add(int a, int b, const Int& k) {
        for (int r = 0; r < m.rows(); ++r) m(r, a) += k * m(r, b);
        for (int r = 0; r < v.rows(); ++r) v(r, a) += k * v(r, b);
        for (int c = 0; c < v_inv.cols(); ++c) v_inv(b, c) -= k * v_inv(a, c);
    }
    void row_negate(int a) {
        for (int c = 0; c < m.cols(); ++c) m(a, c) = -m(a, c);
        for (int c = 0; c < u.cols(); ++c) u(a, c) = -u(a, c);
        for (int r = 0; r < u_inv.rows(); ++r) u_inv(r, a) = -u_inv(r, a);
    }
};

} // namespace

std::vector<Int> SmithResult::divisors() const {
    std::vector<Int> d;
    for (int i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
    return d;
}

SmithResult smith_normal_form(const IntMat& input) {
    const int rows = input.rows(), cols = input.cols();
    SnfState st{input, IntMat::identity(rows), IntMat::identity(cols),
                IntMat::identity(rows), IntMat::identity(cols)};
    IntMat& m = st.m;

    int t = 0;
    const int bound = std::min(rows, cols);
    while (t < bound) {
        // smallest nonzero entry of the trailing block as pivot
        int pr = -1, pc = -1;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (m(r, c) != 0 && (pr < 0 || abs(m(r, c)) < abs(m(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        if (pr != t) st.row_swap(t, pr);
        if (pc != t) st.col_swap(t, pc);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int r = t + 1; r < rows; ++r) {
                if (m(r, t) == 0) continue;
                Int q = m(r, t) / m(t, t);
                st.row_add(r, t, -q);
                if (m(r, t) != 0) { // remainder became the smaller pivot
                    st.row_swap(t, r);
                    dirty = true;
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                if (m(t, c) == 0) continue;
                Int q = m(t, c) / m(t, t);
                st.col_add(c, t, -q);
                if (m(t, c) != 0) {
                    st.col_swap(t, c);
                    dirty = true;
                }
            }
            if (!dirty) {
                // enforce divisibility of the trailing block by the pivot
                for (int r = t + 1; r < rows && !dirty; ++r)
                    for (int c = t + 1; c < cols && !dirty; ++c)
                        if (m(r, c) % m(t, t) != 0) {
                            st.row_add(t, r, 1);
                            dirty = true;
                        }
            }
        }
        if (m(t, t) < 0) st.row_negate(t);
        ++t;
    }

    SmithResult out{std::move(st.m), std::move(st.u), std::move(st.v),
                    std::move(st.u_inv), std::move(st.v_inv), 0};
    for (int i = 0; i < bound; ++i)
        if (out.s(i, i) != 0) ++out.rank;
    return out;
}

IntMat integer_kernel(const IntMat& m) {
    SmithResult snf = smith_normal_form(m);
    const int n = m.cols();
    const int k = n - snf.rank;
    IntMat basis(k, n);
    for (int i = 0; i < k; ++i)
        for (int r = 0; r < n; ++r) basis(i, r) = snf.v(r, snf.rank + i);
    return basis;
}

IntMat hermite_normal_form(const IntMat& input) {
    IntMat m = input;
    const int rows = m.rows(), cols = m.cols();
    int pivot_row = 0;
    std::vector<int> pivot_cols;
    for (int c = 0; c < cols && pivot_row < rows; ++c) {
        // gcd-reduce the column below pivot_row
        while (true) {
            int nz = -1;
            for (int r = pivot_row; r < rows; ++r)
                if (m(r, c) != 0 && (nz < 0 || abs(m(r, c)) < abs(m(nz, c)))) nz = r;
            if (nz < 0) break;
            if (nz != pivot_row)
                for (int k = 0; k < cols; ++k) std::swap(m(nz, k), m(pivot_row, k));
            bool reduced = true;
            for (int r = pivot_row + 1; r < rows; ++r) {
                if (m(r, c) == 0) continue;
                Int q = m(r, c) / m(pivot_row, c);
                for (int k = 0; k < cols; ++k) m(r, k) -= q * m(pivot_row, k);
                if (m(r, c) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (m(pivot_row, c) == 0) continue;
        if (m(pivot_row, c) < 0)
            for (int k = 0; k < cols; ++k) m(pivot_row, k) = -m(pivot_row, k);
        // reduce entries above the pivot into [0, pivot)
        for (int r = 0; r < pivot_row; ++r) {
            Int q = m(r, c) / m(pivot_row, c);
            if (m(r, c) % m(pivot_row, c) < 0) q -= 1;
            if (q != 0)
                for (int k = 0; k < cols; ++k) m(r, k) -= q * m(pivot_row, k);
        }
        pivot_cols.push_back(c);
        ++pivot_row;
    }
    IntMat out(pivot_row, cols);
    for (int r = 0; r < pivot_row; ++r)
        for (int c = 0; c < cols; ++c) out(r, c) = m(r, c);
    return out;
}

IntMat saturate_rows(const IntMat& m) {
    SmithResult snf = smith_normal_form(m);
    // row space of m = row space of s * v_inv; a saturated basis is the first
    // `rank` rows of v_inv, since v_inv is unimodular
    IntMat basis(snf.rank, m.cols());
    for (int r = 0; r < snf.rank; ++r)
        for (int c = 0; c < m.cols(); ++c) basis(r, c) = snf.v_inv(r, c);
    return hermite_normal_form(basis);
}

bool in_row_span(const IntMat& rows, const IntVec& v) {
    IntMat h = hermite_normal_form(rows);
    IntVec w = v;
    const int cols = h.cols();
    if (int(w.size()) != cols)
        throw Error(Errc::dimension_mismatch, "vector length vs row span");
    for (int r = 0; r < h.rows(); ++r) {
        int c = 0;
        while (c < cols && h(r, c) == 0) ++c;
        if (c == cols || w[c] == 0) continue;
        if (w[c] % h(r, c) != 0) return false;
        Int q = w[c] / h(r, c);
        for (int k = 0; k < cols; ++k) w[k] -= q * h(r, k);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

} // namespace k3inv
