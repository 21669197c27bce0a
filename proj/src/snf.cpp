#include "adic/snf.hpp"

#include "adic/error.hpp"

namespace adic {

IntMat int_identity(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat int_zero(std::size_t rows, std::size_t cols) {
    return IntMat(rows, IntVec(cols, 0));
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = n ? a[0].size() : 0, m = b.empty() ? 0 : b[0].size();
    if (b.size() != k) throw Error("int_mul: shape mismatch");
    IntMat r = int_zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

IntVec int_apply(const IntMat& a, const IntVec& v) {
    IntVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
    return r;
}

bool int_equal(const IntMat& a, const IntMat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

namespace {

struct SnfWork {
    IntMat a, u, v;
    std::size_t rows, cols;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    }
    void add_row(std::size_t dst, std::size_t src, const mpz_class& c) { // row dst += c*row src
        for (std::size_t j = 0; j < cols; ++j) a[dst][j] += c * a[src][j];
        for (std::size_t j = 0; j < rows; ++j) u[dst][j] += c * u[src][j];
    }
    void add_col(std::size_t dst, std::size_t src, const mpz_class& c) {
        for (std::size_t i = 0; i < rows; ++i) a[i][dst] += c * a[i][src];
        for (std::size_t i = 0; i < cols; ++i) v[i][dst] += c * v[i][src];
    }
    void negate_row(std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    }

    // true if any nonzero entry remains in the submatrix starting at (k,k)
    bool find_pivot(std::size_t k, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        mpz_class best;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                mpz_class ab = abs(a[i][j]);
                if (!found || ab < best) {
                    found = true;
                    best = ab;
                    pi = i; pj = j;
                }
            }
        return found;
    }
};

} // namespace

SnfResult smith_normal_form(const IntMat& a_in) {
    SnfWork w;
    w.rows = a_in.size();
    w.cols = w.rows ? a_in[0].size() : 0;
    w.a = a_in;
    w.u = int_identity(w.rows);
    w.v = int_identity(w.cols);

    std::size_t k = 0;
    std::size_t limit = std::min(w.rows, w.cols);
    while (k < limit) {
        std::size_t pi = k, pj = k;
        if (!w.find_pivot(k, pi, pj)) break;
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            // clear column k
            for (std::size_t i = k + 1; i < w.rows; ++i) {
                if (w.a[i][k] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.a[i][k].get_mpz_t(), w.a[k][k].get_mpz_t());
                w.add_row(i, k, -q);
                if (w.a[i][k] != 0) { // remainder smaller than pivot: swap up and restart
                    w.swap_rows(k, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            // clear row k
            for (std::size_t j = k + 1; j < w.cols; ++j) {
                if (w.a[k][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.a[k][j].get_mpz_t(), w.a[k][k].get_mpz_t());
                w.add_col(j, k, -q);
                if (w.a[k][j] != 0) {
                    w.swap_cols(k, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every remaining entry; if not, fold the
            // offending row in and redo
            for (std::size_t i = k + 1; i < w.rows && clean; ++i)
                for (std::size_t j = k + 1; j < w.cols && clean; ++j) {
                    if (w.a[i][j] % w.a[k][k] != 0) {
                        w.add_row(k, i, 1);
                        clean = false;
                    }
                }
        }
        if (w.a[k][k] < 0) w.negate_row(k);
        ++k;
    }
    // normalize signs of untouched diagonal (all zero) — nothing to do;
    // divisibility holds by construction
    return SnfResult{w.u, w.a, w.v};
}

IntVec invariant_factors(const IntMat& a) {
    SnfResult s = smith_normal_form(a);
    IntVec f;
    std::size_t limit = std::min(a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < limit; ++i)
        if (s.d[i][i] != 0) f.push_back(s.d[i][i]);
    return f;
}

IntMat column_hermite(const IntMat& a_in) {
    std::size_t rows = a_in.size();
    std::size_t cols = rows ? a_in[0].size() : 0;
    IntMat a = a_in;
    // column echelon via integer gcd elimination, processing rows top-down
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows && lead < cols; ++r) {
        // gcd-out all entries in row r among columns lead..cols-1
        while (true) {
            std::size_t piv = cols;
            mpz_class best;
            for (std::size_t j = lead; j < cols; ++j) {
                if (a[r][j] == 0) continue;
                mpz_class ab = abs(a[r][j]);
                if (piv == cols || ab < best) { piv = j; best = ab; }
            }
            if (piv == cols) break; // row r zero in remaining columns
            // move pivot column to position lead
            if (piv != lead)
                for (auto& row : a) std::swap(row[piv], row[lead]);
            bool done = true;
            for (std::size_t j = lead + 1; j < cols; ++j) {
                if (a[r][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][lead].get_mpz_t());
                for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][lead];
                if (a[r][j] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][lead] == 0) continue; // no pivot in this row
        if (a[r][lead] < 0)
            for (std::size_t i = 0; i < rows; ++i) a[i][lead] = -a[i][lead];
        // reduce earlier columns against this pivot
        for (std::size_t j = 0; j < lead; ++j) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][lead].get_mpz_t());
            if (q != 0)
                for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][lead];
        }
        ++lead;
    }
    // keep the first `lead` columns (the rest are zero)
    IntMat h(rows, IntVec(lead, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < lead; ++j) h[i][j] = a[i][j];
    return h;
}

IntVec hermite_reduce(const IntMat& h, const IntVec& v) {
    IntVec r = v;
    std::size_t rows = h.size();
    std::size_t cols = rows ? h[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        // pivot row of column j: first nonzero entry from the top at/after `row`
        while (row < rows && h[row][j] == 0) ++row;
        if (row >= rows) break;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), r[row].get_mpz_t(), h[row][j].get_mpz_t());
        if (q != 0)
            for (std::size_t i = 0; i < rows; ++i) r[i] -= q * h[i][j];
        ++row;
    }
    return r;
}

IntMat int_kernel(const IntMat& a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    if (cols == 0) return IntMat(0, IntVec{});
    if (rows == 0) return int_identity(cols);
    SnfResult s = smith_normal_form(a);
    std::vector<std::size_t> zero_idx;
    for (std::size_t j = 0; j < cols; ++j) {
        bool dz = j >= rows || s.d[j][j] == 0;
        if (dz) zero_idx.push_back(j);
    }
    IntMat k(cols, IntVec(zero_idx.size(), 0));
    for (std::size_t t = 0; t < zero_idx.size(); ++t)
        for (std::size_t i = 0; i < cols; ++i)
            k[i][t] = s.v[i][zero_idx[t]];
    return k;
}

std::optional<IntVec> int_solve(const IntMat& a, const IntVec& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    if (rows == 0) return IntVec(cols, 0);
    SnfResult s = smith_normal_form(a);
    IntVec ub = int_apply(s.u, b);
    IntVec y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class di = (i < cols) ? s.d[i][i] : mpz_class(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    return int_apply(s.v, y);
}

mpz_class int_det(const IntMat& a_in) {
    std::size_t n = a_in.size();
    if (n == 0) return 1;
    if (a_in[0].size() != n) throw Error("int_det: not square");
    IntMat a = a_in;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

std::size_t int_rank(const IntMat& a) {
    return invariant_factors(a).size();
}

} // namespace adic
