#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lipcoh/bigint.hpp"
#include "lipcoh/errors.hpp"

namespace lipcoh {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

    std::vector<Int> apply(const std::vector<Int>& x) const; // A x

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SmithResult {
    IntMatrix U, D, V; // U * A * V = D, U and V unimodular, D diagonal with d_i | d_{i+1}, d_i >= 0
    int rank = 0;
    std::vector<Int> invariant_factors() const; // nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& A);

/// rank over Q (= free rank of the image), via fraction-free elimination
int matrix_rank(IntMatrix A);

/// determinant (square matrices), Bareiss fraction-free
Int determinant(IntMatrix A);

/// Z-basis of { x : A x = 0 }
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& A);

/// one integral solution of A x = b, or nullopt when none exists
std::optional<std::vector<Int>> solve_integer(const IntMatrix& A, const std::vector<Int>& b);

/**
 * Sparse system of integer linear equations.  Rows with a +-1 coefficient are
 * eliminated by substitution (no divisions), the residual core is finished by
 * Smith reduction.  Deterministic: pivots are chosen in insertion order.
 */
class IntLinearSystem {
  public:
    explicit IntLinearSystem(int nvars) : nvars_(nvars) {}

    void add_row(std::map<int, Int> coeffs, Int rhs);
    int nvars() const { return nvars_; }
    std::size_t nrows() const { return rows_.size(); }

    /// particular integer solution (free variables set to 0), nullopt if UNSAT
    std::optional<std::vector<Int>> solve() const;

    /// rank of the coefficient matrix
    int rank() const;

  private:
    struct Row {
        std::map<int, Int> a;
        Int rhs;
    };
    int nvars_;
    std::vector<Row> rows_;

    struct Reduction;
    Reduction reduce() const;
};

} // namespace lipcoh
