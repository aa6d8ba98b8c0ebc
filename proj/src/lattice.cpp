#include "gring/lattice.hpp"

#include <algorithm>

namespace gring {

namespace {

// In-place column HNF with optional transform tracking: returns the list of
// pivot (row, col) pairs after echelonization.
std::vector<std::pair<unsigned, unsigned>> echelonize(IntMat& cols, unsigned n,
                                                      IntMat* transform) {
    unsigned m = (unsigned)cols.size();
    if (transform) {
        transform->assign(m, std::vector<Int>(m, Int(0)));
        for (unsigned j = 0; j < m; ++j) (*transform)[j][j] = 1;
    }
    std::vector<std::pair<unsigned, unsigned>> pivots;
    unsigned col = 0;
    for (unsigned row = 0; row < n && col < m; ++row) {
        // gcd-reduce row entries across columns col..m-1
        while (true) {
            unsigned nz = m;
            for (unsigned j = col; j < m; ++j)
                if (cols[j][row] != 0 && (nz == m || abs(cols[j][row]) < abs(cols[nz][row])))
                    nz = j;
            if (nz == m) break;  // row is zero beyond col
            std::swap(cols[col], cols[nz]);
            if (transform) std::swap((*transform)[col], (*transform)[nz]);
            bool cleared = true;
            for (unsigned j = col + 1; j < m; ++j) {
                if (cols[j][row] == 0) continue;
                Int q = cols[j][row] / cols[col][row];  // truncated division
                if (q != 0) {
                    for (unsigned i = 0; i < n; ++i) cols[j][i] -= q * cols[col][i];
                    if (transform)
                        for (unsigned i = 0; i < m; ++i)
                            (*transform)[j][i] -= q * (*transform)[col][i];
                }
                if (cols[j][row] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (cols[col][row] == 0) continue;
        if (cols[col][row] < 0) {
            for (auto& x : cols[col]) x = -x;
            if (transform)
                for (auto& x : (*transform)[col]) x = -x;
        }
        // reduce earlier columns at this pivot row into [0, pivot)
        for (unsigned j = 0; j < col; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), cols[j][row].get_mpz_t(), cols[col][row].get_mpz_t());
            if (q != 0) {
                for (unsigned i = 0; i < n; ++i) cols[j][i] -= q * cols[col][i];
                if (transform)
                    for (unsigned i = 0; i < m; ++i)
                        (*transform)[j][i] -= q * (*transform)[col][i];
            }
        }
        pivots.push_back({row, col});
        ++col;
    }
    return pivots;
}

}  // namespace

IntMat hnf(IntMat cols, unsigned n) {
    echelonize(cols, n, nullptr);
    IntMat out;
    for (auto& c : cols) {
        bool zero = std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
        if (!zero) out.push_back(std::move(c));
    }
    // echelonize keeps pivot columns in order at the front
    return out;
}

bool hnf_contains(const IntMat& basis, unsigned n, const std::vector<Int>& v) {
    std::vector<int> col_at_row(n, -1);
    for (unsigned j = 0; j < basis.size(); ++j) {
        unsigned pr = 0;
        while (pr < n && basis[j][pr] == 0) ++pr;
        if (pr < n) col_at_row[pr] = (int)j;
    }
    std::vector<Int> x = v;
    for (unsigned row = 0; row < n; ++row) {
        if (x[row] == 0) continue;
        int j = col_at_row[row];
        if (j < 0) return false;
        if (x[row] % basis[j][row] != 0) return false;
        Int q = x[row] / basis[j][row];
        for (unsigned i = row; i < n; ++i) x[i] -= q * basis[j][i];
    }
    return std::all_of(x.begin(), x.end(), [](const Int& t) { return t == 0; });
}

bool lattice_subset(const IntMat& sub, const IntMat& super, unsigned n) {
    IntMat basis = hnf(super, n);
    for (const auto& c : sub)
        if (!hnf_contains(basis, n, c)) return false;
    return true;
}

Int lattice_index(const IntMat& sub, const IntMat& super, unsigned n) {
    IntMat b1 = hnf(sub, n), b2 = hnf(super, n);
    if (b1.size() != b2.size()) return Int(0);
    if (!lattice_subset(sub, super, n)) return Int(0);
    auto pivot_product = [n](const IntMat& b) {
        Int p(1);
        for (const auto& c : b)
            for (unsigned i = 0; i < n; ++i)
                if (c[i] != 0) {
                    p *= c[i];
                    break;
                }
        return p;
    };
    return pivot_product(b1) / pivot_product(b2);
}

std::optional<std::vector<Int>> solve_integer(const IntMat& A, unsigned n,
                                              const std::vector<Int>& b) {
    IntMat cols = A;
    IntMat U;
    echelonize(cols, n, &U);
    // solve H y = b by pivot rows, then map back through the transform
    std::vector<Int> y(cols.size(), Int(0));
    std::vector<Int> x = b;
    for (unsigned j = 0; j < cols.size(); ++j) {
        unsigned pr = 0;
        while (pr < n && cols[j][pr] == 0) ++pr;
        if (pr == n) continue;
        if (x[pr] == 0) continue;
        if (x[pr] % cols[j][pr] != 0) return std::nullopt;
        Int q = x[pr] / cols[j][pr];
        y[j] = q;
        for (unsigned i = 0; i < n; ++i) x[i] -= q * cols[j][i];
    }
    if (!std::all_of(x.begin(), x.end(), [](const Int& t) { return t == 0; }))
        return std::nullopt;
    // solution in original generators: z = U * y (columns of U express the
    // echelon columns in terms of the input columns)
    std::vector<Int> z(A.size(), Int(0));
    for (unsigned j = 0; j < cols.size(); ++j) {
        if (y[j] == 0) continue;
        for (unsigned i = 0; i < A.size(); ++i) z[i] += y[j] * U[j][i];
    }
    return z;
}

}  // namespace gring
