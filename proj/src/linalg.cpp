#include "qtate/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtate {

PackedMatrix::PackedMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      lo_(rows * words_, 0), hi_(rows * words_, 0) {}

Gf PackedMatrix::get(size_t r, size_t c) const {
    const size_t w = w0(r) + c / 64;
    const uint64_t m = uint64_t(1) << (c % 64);
    uint8_t v = static_cast<uint8_t>(((lo_[w] & m) ? 1 : 0) | ((hi_[w] & m) ? 2 : 0));
    return Gf(v);
}

void PackedMatrix::set(size_t r, size_t c, Gf v) {
    const size_t w = w0(r) + c / 64;
    const uint64_t m = uint64_t(1) << (c % 64);
    if (v.lo()) lo_[w] |= m; else lo_[w] &= ~m;
    if (v.hi()) hi_[w] |= m; else hi_[w] &= ~m;
}

void PackedMatrix::add_row(size_t dst, size_t src) {
    const size_t d = w0(dst), s = w0(src);
    for (size_t k = 0; k < words_; ++k) {
        lo_[d + k] ^= lo_[s + k];
        hi_[d + k] ^= hi_[s + k];
    }
}

void PackedMatrix::add_scaled_row(size_t dst, size_t src, Gf lambda) {
    if (lambda.is_zero()) return;
    const size_t d = w0(dst), s = w0(src);
    switch (lambda.bits()) {
        case 1:
            add_row(dst, src);
            break;
        case 2:  // a * (l + h a) = h + (l + h) a
            for (size_t k = 0; k < words_; ++k) {
                const uint64_t l = lo_[s + k], h = hi_[s + k];
                lo_[d + k] ^= h;
                hi_[d + k] ^= l ^ h;
            }
            break;
        case 3:  // (a+1) * (l + h a) = (l + h) + l a
            for (size_t k = 0; k < words_; ++k) {
                const uint64_t l = lo_[s + k], h = hi_[s + k];
                lo_[d + k] ^= l ^ h;
                hi_[d + k] ^= l;
            }
            break;
    }
}

void PackedMatrix::scale_row(size_t r, Gf lambda) {
    const size_t s = w0(r);
    switch (lambda.bits()) {
        case 0:
            std::fill(lo_.begin() + s, lo_.begin() + s + words_, 0);
            std::fill(hi_.begin() + s, hi_.begin() + s + words_, 0);
            break;
        case 1:
            break;
        case 2:
            for (size_t k = 0; k < words_; ++k) {
                const uint64_t l = lo_[s + k], h = hi_[s + k];
                lo_[s + k] = h;
                hi_[s + k] = l ^ h;
            }
            break;
        case 3:
            for (size_t k = 0; k < words_; ++k) {
                const uint64_t l = lo_[s + k], h = hi_[s + k];
                lo_[s + k] = l ^ h;
                hi_[s + k] = l;
            }
            break;
    }
}

void PackedMatrix::swap_rows(size_t r1, size_t r2) {
    if (r1 == r2) return;
    const size_t a = w0(r1), b = w0(r2);
    for (size_t k = 0; k < words_; ++k) {
        std::swap(lo_[a + k], lo_[b + k]);
        std::swap(hi_[a + k], hi_[b + k]);
    }
}

bool PackedMatrix::row_is_zero(size_t r, size_t from_col) const {
    for (size_t c = from_col; c < cols_; ++c)
        if (!get(r, c).is_zero()) return false;
    return true;
}

void PackedMatrix::append_zero_row() {
    ++rows_;
    lo_.resize(rows_ * words_, 0);
    hi_.resize(rows_ * words_, 0);
}

void LinearSystem::add_term(std::vector<std::pair<size_t, Gf>>& row, size_t col, Gf v) const {
    if (v.is_zero()) return;
    if (col >= n_) throw std::out_of_range("LinearSystem: column out of range");
    row.emplace_back(col, v);
}

void LinearSystem::add_equation(std::vector<std::pair<size_t, Gf>> row, Gf rhs) {
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs);
}

LinearSystem::Result LinearSystem::solve(bool want_kernel, bool want_certificate) const {
    const size_t m = rows_.size();
    // columns: unknowns, then rhs
    PackedMatrix A(m, n_ + 1);
    for (size_t r = 0; r < m; ++r) {
        for (auto [c, v] : rows_[r]) A.set(r, c, A.get(r, c) + v);
        A.set(r, n_, rhs_[r]);
    }
    // certificate tracker: T holds the combination of original rows making up each current row
    PackedMatrix T(want_certificate ? m : 0, want_certificate ? m : 0);
    if (want_certificate)
        for (size_t r = 0; r < m; ++r) T.set(r, r, Gf::one());

    Result res;
    std::vector<size_t> pivot_col_of_row;
    std::vector<std::optional<size_t>> pivot_row_of_col(n_);
    size_t rank = 0;
    for (size_t c = 0; c < n_ && rank < m; ++c) {
        size_t p = rank;
        while (p < m && A.get(p, c).is_zero()) ++p;
        if (p == m) continue;
        A.swap_rows(rank, p);
        if (want_certificate) T.swap_rows(rank, p);
        const Gf inv = A.get(rank, c).inv();
        A.scale_row(rank, inv);
        if (want_certificate) T.scale_row(rank, inv);
        for (size_t r = 0; r < m; ++r) {
            if (r == rank) continue;
            const Gf f = A.get(r, c);
            if (f.is_zero()) continue;
            A.add_scaled_row(r, rank, f);
            if (want_certificate) T.add_scaled_row(r, rank, f);
        }
        pivot_col_of_row.push_back(c);
        pivot_row_of_col[c] = rank;
        ++rank;
    }
    res.rank = rank;

    // inconsistent row: all-zero coefficients, nonzero rhs
    for (size_t r = rank; r < m; ++r) {
        if (!A.get(r, n_).is_zero()) {
            res.feasible = false;
            if (want_certificate) {
                res.certificate.resize(m);
                for (size_t k = 0; k < m; ++k) res.certificate[k] = T.get(r, k);
            }
            return res;
        }
    }

    res.feasible = true;
    res.solution.assign(n_, Gf::zero());
    for (size_t r = 0; r < rank; ++r)
        res.solution[pivot_col_of_row[r]] = A.get(r, n_);

    if (want_kernel) {
        for (size_t c = 0; c < n_; ++c) {
            if (pivot_row_of_col[c]) continue;
            std::vector<Gf> v(n_, Gf::zero());
            v[c] = Gf::one();
            for (size_t r = 0; r < rank; ++r)
                v[pivot_col_of_row[r]] = A.get(r, c);  // char 2: no sign
            res.kernel.push_back(std::move(v));
        }
    }
    return res;
}

size_t gf_rank(const std::vector<std::vector<Gf>>& rows, size_t cols) {
    Span sp(cols);
    for (const auto& r : rows) sp.add(r);
    return sp.rank();
}

std::vector<Gf> Span::residual(std::vector<Gf> v) const {
    for (size_t i = 0; i < basis_.size(); ++i) {
        const Gf f = v[pivots_[i]];
        if (f.is_zero()) continue;
        for (size_t c = 0; c < dim_; ++c) v[c] += f * basis_[i][c];
    }
    return v;
}

bool Span::add(const std::vector<Gf>& v) {
    if (v.size() != dim_) throw std::invalid_argument("Span: dimension mismatch");
    std::vector<Gf> r = residual(v);
    size_t p = 0;
    while (p < dim_ && r[p].is_zero()) ++p;
    if (p == dim_) return false;
    const Gf inv = r[p].inv();
    for (auto& x : r) x *= inv;
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool Span::contains(const std::vector<Gf>& v) const {
    std::vector<Gf> r = residual(v);
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace qtate
