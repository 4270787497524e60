#ifndef LRC_MATRICES_HPP
#define LRC_MATRICES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lrc/fields.hpp"

namespace lrc {

// Dense matrix over one finite field, entries stored as element codes in
// row-major order. Exact arithmetic throughout; no pivoting heuristics
// beyond first-nonzero, which is canonical for a field.
class GFMatrix {
  public:
    GFMatrix(const FiniteField& field, size_t rows, size_t cols)
        : field_(&field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const FiniteField& field() const { return *field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    uint32_t* row(size_t r) { return a_.data() + r * cols_; }
    const uint32_t* row(size_t r) const { return a_.data() + r * cols_; }

    GFMatrix transposed() const;
    GFMatrix columns(const std::vector<uint32_t>& picks) const;

    bool operator==(const GFMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    const FiniteField* field_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

// Reduced row echelon form in place. Returns the rank; pivot columns are
// appended to *pivots when given.
size_t rref_in_place(GFMatrix& m, std::vector<size_t>* pivots = nullptr);

size_t rank(GFMatrix m);

// Rows of the result span the right kernel {x : m x = 0}.
GFMatrix kernel_basis(const GFMatrix& m);

// Rows spanning {y : y m = 0}.
GFMatrix left_kernel_basis(const GFMatrix& m);

// Square inverse; nullopt when singular.
std::optional<GFMatrix> inverse(const GFMatrix& m);

struct LinearSolve {
    enum class Status { Unique, Underdetermined, Inconsistent };
    Status status;
    std::vector<uint32_t> solution;  // valid when status == Unique
};

// Solves A x = b for a single right-hand side.
LinearSolve solve(const GFMatrix& a, const std::vector<uint32_t>& b);

std::vector<uint32_t> mat_vec(const GFMatrix& a, const std::vector<uint32_t>& x);

}  // namespace lrc

#endif
