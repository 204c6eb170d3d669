#pragma once

#include <optional>
#include <vector>

#include "pie/numbers.hpp"

namespace pie {

// Dense matrix over the rationals. All eliminations are exact.
class qmatrix {
public:
    qmatrix() = default;
    qmatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static qmatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    qmatrix transpose() const;

    std::vector<rat> col(int c) const;
    void set_col(int c, const std::vector<rat>& v);

    std::vector<rat> apply(const std::vector<rat>& v) const;

    friend qmatrix operator*(const qmatrix& a, const qmatrix& b);
    friend qmatrix operator+(const qmatrix& a, const qmatrix& b);
    friend qmatrix operator-(const qmatrix& a, const qmatrix& b);
    friend bool operator==(const qmatrix& a, const qmatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<rat> a_;
};

// Rank by fraction-free elimination on the integerized matrix. Pivot choice:
// smallest nonzero magnitude, ties by lowest column then lowest row.
long long rank(const qmatrix& m);

// Reduced row echelon form; pivot columns appended to *pivot_cols if given.
qmatrix rref(const qmatrix& m, std::vector<int>* pivot_cols = nullptr);

// Columns span the kernel of m.
qmatrix kernel_basis(const qmatrix& m);

// One solution of m x = b, if any.
std::optional<std::vector<rat>> solve(const qmatrix& m, const std::vector<rat>& b);

// Incremental column span with coordinates relative to the independent
// columns in insertion order.
class column_space {
public:
    explicit column_space(int ambient_dim) : dim_(ambient_dim) {}

    // Returns true when v enlarges the span; v is then kept as a basis column.
    bool add(const std::vector<rat>& v);
    int rank() const { return static_cast<int>(basis_.size()); }
    int ambient_dim() const { return dim_; }
    const std::vector<std::vector<rat>>& basis() const { return basis_; }

    bool contains(const std::vector<rat>& v) const;
    // Coefficients of v against the kept basis columns; nullopt when outside.
    std::optional<std::vector<rat>> coordinates(const std::vector<rat>& v) const;

private:
    int dim_;
    std::vector<std::vector<rat>> basis_;    // original independent columns
    std::vector<std::vector<rat>> echelon_;  // reduced spanning set
    std::vector<int> lead_;                  // pivot position per echelon row
    std::vector<std::vector<rat>> combo_;    // echelon row as combo of basis_
    // reduce v against echelon_; returns residue and combo expressing the
    // removed part over basis_
    std::pair<std::vector<rat>, std::vector<rat>> reduce(const std::vector<rat>& v) const;
};

}
