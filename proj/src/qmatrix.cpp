#include "pie/qmatrix.hpp"

#include <stdexcept>

namespace pie {

qmatrix qmatrix::identity(int n) {
    qmatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool qmatrix::is_zero() const {
    for (const rat& v : a_)
        if (v != 0) return false;
    return true;
}

qmatrix qmatrix::transpose() const {
    qmatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<rat> qmatrix::col(int c) const {
    std::vector<rat> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void qmatrix::set_col(int c, const std::vector<rat>& v) {
    if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("set_col: size mismatch");
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

std::vector<rat> qmatrix::apply(const std::vector<rat>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<rat> out(rows_, rat(0));
    for (int r = 0; r < rows_; ++r) {
        rat s = 0;
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0 && v[c] != 0) s += at(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

qmatrix operator*(const qmatrix& a, const qmatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    qmatrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const rat& v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (b.at(k, j) != 0) m.at(i, j) += v * b.at(k, j);
        }
    return m;
}

qmatrix operator+(const qmatrix& a, const qmatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    qmatrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
}

qmatrix operator-(const qmatrix& a, const qmatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix diff: shape mismatch");
    qmatrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
}

bool operator==(const qmatrix& a, const qmatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

long long rank(const qmatrix& m) {
    const int R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;

    // Integerize rows so the elimination stays fraction-free.
    std::vector<std::vector<bigint>> a(R, std::vector<bigint>(C));
    for (int r = 0; r < R; ++r) {
        bigint l = 1;
        for (int c = 0; c < C; ++c) l = boost::multiprecision::lcm(l, denominator(m.at(r, c)));
        for (int c = 0; c < C; ++c) a[r][c] = numerator(m.at(r, c)) * (l / denominator(m.at(r, c)));
    }

    std::vector<char> row_done(R, 0), col_done(C, 0);
    bigint prev = 1;
    long long rk = 0;
    for (;;) {
        int pr = -1, pc = -1;
        bigint best;
        for (int c = 0; c < C && pr < 0; ++c) {
            if (col_done[c]) continue;
            // magnitude 1 is always optimal, stop at the first one
            for (int r = 0; r < R; ++r)
                if (!row_done[r] && (a[r][c] == 1 || a[r][c] == -1)) {
                    pr = r;
                    pc = c;
                    break;
                }
        }
        if (pr < 0) {
            for (int c = 0; c < C; ++c) {
                if (col_done[c]) continue;
                for (int r = 0; r < R; ++r) {
                    if (row_done[r] || a[r][c] == 0) continue;
                    bigint av = abs(a[r][c]);
                    if (pr < 0 || av < best) {
                        best = av;
                        pr = r;
                        pc = c;
                    }
                }
            }
        }
        if (pr < 0) break;

        const bigint piv = a[pr][pc];
        for (int r = 0; r < R; ++r) {
            if (row_done[r] || r == pr) continue;
            const bigint lead = a[r][pc];
            if (lead == 0) {
                if (piv != prev)
                    for (int c = 0; c < C; ++c)
                        if (!col_done[c] && a[r][c] != 0) a[r][c] = a[r][c] * piv / prev;
            } else {
                for (int c = 0; c < C; ++c) {
                    if (col_done[c] || c == pc) continue;
                    a[r][c] = (a[r][c] * piv - lead * a[pr][c]) / prev;
                }
                a[r][pc] = 0;
            }
        }
        row_done[pr] = 1;
        col_done[pc] = 1;
        prev = piv;
        ++rk;
    }
    return rk;
}

qmatrix rref(const qmatrix& m, std::vector<int>* pivot_cols) {
    qmatrix a = m;
    const int R = a.rows(), C = a.cols();
    int row = 0;
    for (int c = 0; c < C && row < R; ++c) {
        int p = -1;
        for (int r = row; r < R; ++r)
            if (a.at(r, c) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < C; ++j) std::swap(a.at(p, j), a.at(row, j));
        const rat inv = rat(1) / a.at(row, c);
        for (int j = c; j < C; ++j) a.at(row, j) *= inv;
        for (int r = 0; r < R; ++r) {
            if (r == row || a.at(r, c) == 0) continue;
            const rat f = a.at(r, c);
            for (int j = c; j < C; ++j) a.at(r, j) -= f * a.at(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++row;
    }
    return a;
}

qmatrix kernel_basis(const qmatrix& m) {
    std::vector<int> pivots;
    qmatrix r = rref(m, &pivots);
    const int C = m.cols();
    std::vector<char> is_pivot(C, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < C; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    qmatrix k(C, static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        const int f = free_cols[j];
        k.at(f, static_cast<int>(j)) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) k.at(pivots[i], static_cast<int>(j)) = -r.at(static_cast<int>(i), f);
    }
    return k;
}

std::optional<std::vector<rat>> solve(const qmatrix& m, const std::vector<rat>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    qmatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    std::vector<int> pivots;
    qmatrix r = rref(aug, &pivots);
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == m.cols()) return std::nullopt;
    std::vector<rat> x(m.cols(), rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(static_cast<int>(i), m.cols());
    return x;
}

std::pair<std::vector<rat>, std::vector<rat>> column_space::reduce(const std::vector<rat>& v) const {
    std::vector<rat> w = v;
    std::vector<rat> combo(basis_.size(), rat(0));
    for (size_t i = 0; i < echelon_.size(); ++i) {
        const rat f = w[lead_[i]];
        if (f == 0) continue;
        for (int j = 0; j < dim_; ++j)
            if (echelon_[i][j] != 0) w[j] -= f * echelon_[i][j];
        for (size_t j = 0; j < combo_[i].size(); ++j)
            if (combo_[i][j] != 0) combo[j] += f * combo_[i][j];
    }
    return {std::move(w), std::move(combo)};
}

bool column_space::add(const std::vector<rat>& v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("column_space::add: size mismatch");
    auto [w, combo] = reduce(v);
    int lead = -1;
    for (int j = 0; j < dim_; ++j)
        if (w[j] != 0) {
            lead = j;
            break;
        }
    if (lead < 0) return false;

    basis_.push_back(v);
    const rat scale = w[lead];
    std::vector<rat> row(dim_);
    for (int j = 0; j < dim_; ++j) row[j] = w[j] / scale;
    std::vector<rat> rc(basis_.size(), rat(0));
    for (size_t j = 0; j < combo.size(); ++j) rc[j] = -combo[j] / scale;
    rc.back() = rat(1) / scale;

    // keep the echelon rows mutually reduced so reduce() is a single pass
    for (size_t i = 0; i < echelon_.size(); ++i) {
        const rat f = echelon_[i][lead];
        if (f == 0) continue;
        for (int j = 0; j < dim_; ++j)
            if (row[j] != 0) echelon_[i][j] -= f * row[j];
        combo_[i].resize(rc.size(), rat(0));
        for (size_t j = 0; j < rc.size(); ++j)
            if (rc[j] != 0) combo_[i][j] -= f * rc[j];
    }
    for (auto& c : combo_) c.resize(rc.size(), rat(0));
    echelon_.push_back(std::move(row));
    combo_.push_back(std::move(rc));
    lead_.push_back(lead);
    return true;
}

bool column_space::contains(const std::vector<rat>& v) const {
    auto [w, combo] = reduce(v);
    (void)combo;
    for (const rat& x : w)
        if (x != 0) return false;
    return true;
}

std::optional<std::vector<rat>> column_space::coordinates(const std::vector<rat>& v) const {
    auto [w, combo] = reduce(v);
    for (const rat& x : w)
        if (x != 0) return std::nullopt;
    combo.resize(basis_.size(), rat(0));
    return combo;
}

}
