#pragma once

#include "lcsk/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lcsk::linalg {

// Dense matrix over Q. Plenty for the desk-scale systems the solvers emit;
// the big sparse eliminations go through SparseEliminator below.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0)) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const RatMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Row-reduced basis of a subspace of Q^ambient. `basis` rows are in reduced
// row echelon form (pivot entries 1, pivot columns otherwise zero), so equal
// subspaces produce identical objects.
struct SolutionSpace {
    int ambient = 0;
    std::vector<std::vector<Rat>> basis;
    std::vector<int> pivots; // pivot column of each basis row
    int dim() const { return static_cast<int>(basis.size()); }
};

struct RrefResult {
    RatMatrix m;
    std::vector<int> pivot_cols;
    int rank = 0;
};

// Exact Gaussian elimination. Pivot rule: first nonzero column, among its
// rows the lowest index — fully deterministic, so row-equivalent inputs give
// byte-identical reduced forms.
RrefResult rref(RatMatrix m);

// Kernel {v : Mv = 0}, basis RREF-normalized.
SolutionSpace nullspace(const RatMatrix& m);

// Span of the given vectors, RREF-normalized.
SolutionSpace span_of(int ambient, const std::vector<std::vector<Rat>>& vecs);

// Coordinates of v in the (normalized) basis, or nullopt when v is outside.
std::optional<std::vector<Rat>> in_span(const std::vector<Rat>& v, const SolutionSpace& s);

// One particular solution of Ax = b with free variables set to zero, or
// nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b);

// Incremental exact elimination for large sparse homogeneous systems.
// Rows are added one at a time and reduced against the pivots found so far;
// the kernel basis is extracted at the end. Column count is fixed up front.
class SparseEliminator {
public:
    explicit SparseEliminator(int ncols) : ncols_(ncols) {}

    using Row = std::vector<std::pair<int, Rat>>; // sorted by column, nonzero

    void add_row(Row row);
    int rank() const { return static_cast<int>(pivots_.size()); }
    int ncols() const { return ncols_; }
    SolutionSpace kernel() const;

private:
    int ncols_;
    std::map<int, Row> pivots_; // leading column -> row scaled to lead 1
};

} // namespace lcsk::linalg
