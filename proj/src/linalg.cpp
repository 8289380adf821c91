#include "cdga/linalg.hpp"

#include <algorithm>

#include "cdga/errors.hpp"

namespace cdga {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw precondition_error("matrix dimensions must be nonnegative");
}

void SparseMatrix::set(int r, int c, Scalar v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw precondition_error("matrix index out of range");
    if (v == 0)
        data_[r].erase(c);
    else
        data_[r][c] = std::move(v);
}

Scalar SparseMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw precondition_error("matrix index out of range");
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Scalar(0) : it->second;
}

Vec SparseMatrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw precondition_error("vector length does not match column count");
    Vec y(rows_, Scalar(0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
    return y;
}

namespace {

// dense rows are fine at this scale and keep the elimination code plain
using DenseRows = std::vector<Vec>;

DenseRows to_dense(const SparseMatrix& m) {
    DenseRows rows(m.rows(), Vec(m.cols(), Scalar(0)));
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) rows[r][c] = v;
    return rows;
}

// in-place RREF; returns pivot columns in increasing order
std::vector<int> eliminate(DenseRows& rows, int cols) {
    std::vector<int> pivots;
    std::size_t next_row = 0;
    for (int col = 0; col < cols && next_row < rows.size(); ++col) {
        std::size_t piv = next_row;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[next_row], rows[piv]);
        Scalar lead = rows[next_row][col];
        for (auto& x : rows[next_row]) x /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || rows[r][col] == 0) continue;
            Scalar f = rows[r][col];
            for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[next_row][c];
        }
        pivots.push_back(col);
        ++next_row;
    }
    rows.resize(next_row);
    return pivots;
}

} // namespace

RrefResult rref(const SparseMatrix& m) {
    DenseRows rows = to_dense(m);
    std::vector<int> pivots = eliminate(rows, m.cols());
    SparseMatrix red(m.rows(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (rows[r][c] != 0) red.set(static_cast<int>(r), c, rows[r][c]);
    return RrefResult{std::move(red), std::move(pivots), static_cast<int>(rows.size())};
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    DenseRows rows;
    for (const Vec& v : vectors) {
        if (static_cast<int>(v.size()) != ambient)
            throw precondition_error("vector length does not match ambient dimension");
        rows.push_back(v);
    }
    s.pivots_ = eliminate(rows, ambient);
    s.rows_ = std::move(rows);
    return s;
}

Vec Subspace::reduce(Vec v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw precondition_error("vector length does not match ambient dimension");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& f = v[pivots_[r]];
        if (f == 0) continue;
        Scalar c = f; // copy before v mutates
        for (int j = 0; j < ambient_; ++j) v[j] -= c * rows_[r][j];
    }
    return v;
}

bool Subspace::contains(const Vec& v) const {
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (const Vec& v : other.rows_)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw precondition_error("subspaces live in different ambient spaces");
    std::vector<Vec> all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    return span(ambient_, all);
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && rows_ == other.rows_;
}

Subspace kernel_basis(const SparseMatrix& m) {
    DenseRows rows = to_dense(m);
    std::vector<int> pivots = eliminate(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Scalar(0));
        v[f] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = -rows[r][f];
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), basis);
}

Subspace image_basis(const SparseMatrix& m) {
    std::vector<Vec> cols(m.cols(), Vec(m.rows(), Scalar(0)));
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) cols[c][r] = v;
    return Subspace::span(m.rows(), cols);
}

std::optional<Vec> solve_in_image(const SparseMatrix& m, const Vec& target) {
    if (static_cast<int>(target.size()) != m.rows())
        throw precondition_error("target length does not match row count");
    DenseRows rows = to_dense(m);
    for (int r = 0; r < m.rows(); ++r) rows[r].push_back(target[r]);
    std::vector<int> pivots = eliminate(rows, m.cols() + 1);
    Vec x(m.cols(), Scalar(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (pivots[r] == m.cols()) return std::nullopt; // row (0 ... 0 | 1)
        x[pivots[r]] = rows[r][m.cols()];
    }
    return x;
}

QuotientSpace::QuotientSpace(Subspace numerator, Subspace divisor)
    : numerator_(std::move(numerator)), divisor_(std::move(divisor)) {
    if (numerator_.ambient() != divisor_.ambient())
        throw precondition_error("numerator and divisor live in different ambient spaces");
    if (!numerator_.contains(divisor_))
        throw precondition_error("divisor is not contained in numerator");
    std::vector<Vec> rem;
    for (const Vec& v : numerator_.basis()) {
        Vec r = divisor_.reduce(v);
        if (std::any_of(r.begin(), r.end(), [](const Scalar& x) { return x != 0; }))
            rem.push_back(std::move(r));
    }
    Subspace canon = Subspace::span(numerator_.ambient(), rem);
    reps_ = canon.basis();
    rep_pivots_ = canon.pivots();
}

std::optional<Vec> QuotientSpace::coordinates(const Vec& v) const {
    if (!numerator_.contains(v)) return std::nullopt;
    Vec r = divisor_.reduce(v);
    Vec coords(reps_.size(), Scalar(0));
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        Scalar c = r[rep_pivots_[i]];
        coords[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * reps_[i][j];
    }
    // remainder must vanish because v reduced into span(reps) + divisor
    for (const Scalar& x : r)
        if (x != 0) throw internal_error("quotient reduction left a nonzero remainder");
    return coords;
}

Vec QuotientSpace::lift(const Vec& coords) const {
    if (coords.size() != reps_.size())
        throw precondition_error("coordinate length does not match quotient dimension");
    Vec v(numerator_.ambient(), Scalar(0));
    for (std::size_t i = 0; i < reps_.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += coords[i] * reps_[i][j];
    return v;
}

} // namespace cdga
