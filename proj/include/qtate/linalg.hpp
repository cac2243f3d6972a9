#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qtate/gf.hpp"

namespace qtate {

/* Dense matrix over GF(4), rows packed as two bit planes (lo, hi).  Row
 * operations are word-wide xors, so elimination stays fast even for the
 * larger homotopy systems (a few thousand unknowns). */
class PackedMatrix {
public:
    PackedMatrix() : rows_(0), cols_(0), words_(0) {}
    PackedMatrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Gf get(size_t r, size_t c) const;
    void set(size_t r, size_t c, Gf v);

    void add_row(size_t dst, size_t src);          // row[dst] += row[src]
    void add_scaled_row(size_t dst, size_t src, Gf lambda);
    void scale_row(size_t r, Gf lambda);
    void swap_rows(size_t r1, size_t r2);
    bool row_is_zero(size_t r, size_t from_col = 0) const;
    void append_zero_row();

private:
    size_t rows_, cols_, words_;
    std::vector<uint64_t> lo_, hi_;

    size_t w0(size_t r) const { return r * words_; }
};

/* A sparse-input linear system A x = b over GF(2) or GF(4).  Rows are added
 * as (column, coefficient) lists.  solve() runs Gaussian elimination; when
 * certificate tracking is on and the system is inconsistent, it returns a
 * left null vector u of the rows with u . b != 0. */
class LinearSystem {
public:
    explicit LinearSystem(size_t n_unknowns) : n_(n_unknowns) {}

    size_t unknowns() const { return n_; }
    size_t equations() const { return rows_.size(); }

    void add_term(std::vector<std::pair<size_t, Gf>>& row, size_t col, Gf v) const;
    void add_equation(std::vector<std::pair<size_t, Gf>> row, Gf rhs);

    struct Result {
        bool feasible = false;
        size_t rank = 0;
        std::vector<Gf> solution;              // one particular solution (if feasible)
        std::vector<std::vector<Gf>> kernel;   // basis of the homogeneous solutions (if requested)
        std::vector<Gf> certificate;           // left null vector with nonzero rhs pairing (if infeasible)
    };

    Result solve(bool want_kernel = false, bool want_certificate = false) const;

private:
    size_t n_;
    std::vector<std::vector<std::pair<size_t, Gf>>> rows_;
    std::vector<Gf> rhs_;
};

// rank of a dense matrix given as row vectors of Gf
size_t gf_rank(const std::vector<std::vector<Gf>>& rows, size_t cols);

/* Incremental span: add vectors, query dimension, test membership.  Used for
 * degreewise image/kernel comparisons and basis extension. */
class Span {
public:
    explicit Span(size_t dim) : dim_(dim) {}

    // returns true if v was independent of the span (and got added)
    bool add(const std::vector<Gf>& v);
    bool contains(const std::vector<Gf>& v) const;
    size_t rank() const { return basis_.size(); }

private:
    size_t dim_;
    // reduced rows together with their pivot columns
    std::vector<std::vector<Gf>> basis_;
    std::vector<size_t> pivots_;

    // reduce v against the basis; returns the residual
    std::vector<Gf> residual(std::vector<Gf> v) const;
};

}  // namespace qtate
