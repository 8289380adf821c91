#pragma once
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cdga/scalar.hpp"

namespace cdga {

using Vec = std::vector<Scalar>;

// Sparse matrix over Q, row-major storage of nonzero entries only.
class SparseMatrix {
public:
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, Scalar v);
    Scalar at(int r, int c) const;
    const std::map<int, Scalar>& row(int r) const { return data_[r]; }

    Vec apply(const Vec& x) const; // matrix * column vector

private:
    int rows_, cols_;
    std::vector<std::map<int, Scalar>> data_;
};

struct RrefResult {
    SparseMatrix reduced;
    std::vector<int> pivot_cols; // increasing
    int rank = 0;
};

// Reduced row echelon form with deterministic pivoting: the pivot for each
// step is the smallest eligible column, within it the smallest row.
RrefResult rref(const SparseMatrix& m);

// Subspace of Q^n held as the unique reduced row echelon basis, so two
// subspaces are equal iff their representations are equal.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient) {}
    static Subspace span(int ambient, const std::vector<Vec>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    Vec reduce(Vec v) const;    // remainder after eliminating pivot coordinates
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    // componentwise sum of subspaces
    Subspace operator+(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

private:
    int ambient_;
    std::vector<Vec> rows_;   // RREF, sorted by pivot
    std::vector<int> pivots_;
};

Subspace kernel_basis(const SparseMatrix& m); // subspace of Q^cols
Subspace image_basis(const SparseMatrix& m);  // subspace of Q^rows

// Canonical solution of m*x = target with every free variable set to zero;
// nullopt when target is outside the image.
std::optional<Vec> solve_in_image(const SparseMatrix& m, const Vec& target);

// numerator / divisor, divisor must be contained in numerator. Representatives
// are the nonzero remainders of the numerator basis after reduction by the
// divisor, re-echelonized; they are canonical for the pair of subspaces.
class QuotientSpace {
public:
    QuotientSpace(Subspace numerator, Subspace divisor);

    int dim() const { return static_cast<int>(reps_.size()); }
    const Subspace& numerator() const { return numerator_; }
    const Subspace& divisor() const { return divisor_; }
    const std::vector<Vec>& representatives() const { return reps_; }

    // Coordinates of [v] in the representative basis; nullopt if v is not in
    // the numerator subspace.
    std::optional<Vec> coordinates(const Vec& v) const;
    Vec lift(const Vec& coords) const;

private:
    Subspace numerator_, divisor_;
    std::vector<Vec> reps_;
    std::vector<int> rep_pivots_;
};

} // namespace cdga
