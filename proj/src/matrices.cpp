#include "lrc/matrices.hpp"

#include <algorithm>

namespace lrc {

GFMatrix GFMatrix::transposed() const {
    GFMatrix out(*field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

GFMatrix GFMatrix::columns(const std::vector<uint32_t>& picks) const {
    GFMatrix out(*field_, rows_, picks.size());
    for (size_t r = 0; r < rows_; ++r)
        for (size_t j = 0; j < picks.size(); ++j) out.at(r, j) = at(r, picks[j]);
    return out;
}

size_t rref_in_place(GFMatrix& m, std::vector<size_t>* pivots) {
    const FiniteField& f = m.field();
    size_t rank = 0;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            std::swap_ranges(m.row(pivot), m.row(pivot) + m.cols(), m.row(rank));
        uint32_t scale = f.inv(m.at(rank, col));
        if (scale != 1)
            for (size_t c = col; c < m.cols(); ++c) m.at(rank, c) = f.mul(m.at(rank, c), scale);
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            uint32_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (size_t c = col; c < m.cols(); ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

size_t rank(GFMatrix m) { return rref_in_place(m); }

GFMatrix kernel_basis(const GFMatrix& m) {
    const FiniteField& f = m.field();
    GFMatrix r = m;
    std::vector<size_t> pivots;
    size_t rk = rref_in_place(r, &pivots);
    std::vector<char> is_pivot(m.cols(), 0);
    for (size_t p : pivots) is_pivot[p] = 1;

    GFMatrix out(f, m.cols() - rk, m.cols());
    size_t idx = 0;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        out.at(idx, free_col) = 1;
        for (size_t i = 0; i < rk; ++i)
            out.at(idx, pivots[i]) = f.neg(r.at(i, free_col));
        ++idx;
    }
    return out;
}

GFMatrix left_kernel_basis(const GFMatrix& m) { return kernel_basis(m.transposed()); }

std::optional<GFMatrix> inverse(const GFMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const FiniteField& f = m.field();
    size_t n = m.rows();
    GFMatrix aug(f, n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    // The identity block keeps the augmented rank at n no matter what m
    // is; singularity shows up as a pivot escaping the left block.
    std::vector<size_t> pivots;
    rref_in_place(aug, &pivots);
    if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
    GFMatrix out(f, n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return out;
}

LinearSolve solve(const GFMatrix& a, const std::vector<uint32_t>& b) {
    const FiniteField& f = a.field();
    if (b.size() != a.rows()) raise(ErrorKind::LengthMismatch, "right-hand side length mismatch");
    GFMatrix aug(f, a.rows(), a.cols() + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<size_t> pivots;
    size_t rk = rref_in_place(aug, &pivots);
    // A pivot in the augmented column means no solution at all.
    if (!pivots.empty() && pivots.back() == a.cols())
        return {LinearSolve::Status::Inconsistent, {}};
    if (rk < a.cols()) return {LinearSolve::Status::Underdetermined, {}};
    std::vector<uint32_t> x(a.cols(), 0);
    for (size_t i = 0; i < rk; ++i) x[pivots[i]] = aug.at(i, a.cols());
    return {LinearSolve::Status::Unique, std::move(x)};
}

std::vector<uint32_t> mat_vec(const GFMatrix& a, const std::vector<uint32_t>& x) {
    const FiniteField& f = a.field();
    if (x.size() != a.cols()) raise(ErrorKind::LengthMismatch, "vector length mismatch");
    std::vector<uint32_t> out(a.rows(), 0);
    for (size_t r = 0; r < a.rows(); ++r) {
        uint32_t acc = 0;
        const uint32_t* row = a.row(r);
        for (size_t c = 0; c < a.cols(); ++c)
            if (x[c]) acc = f.add(acc, f.mul(row[c], x[c]));
        out[r] = acc;
    }
    return out;
}

}  // namespace lrc
