#pragma once
// Hankel and Jacobi-Trudi matrices over a finite field, with exact rank,
// determinant and left-kernel dimension.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/gf.hpp"

namespace hankel {

/// A tuple (x_0, ..., x_N) of field elements. Also used for prefixes and for
/// the Jacobi-Trudi inputs (y_1, ..., y_{u+v-1}).
class SeqTuple {
public:
    SeqTuple(Field field, std::vector<Elem> entries);

    /// Comma-separated element literals; empty text gives the empty tuple.
    static SeqTuple parse(const Field& field, std::string_view text);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& entries() const noexcept { return entries_; }
    std::span<const Elem> span() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    Elem operator[](std::size_t i) const { return entries_[i]; }

    std::string to_string() const;

    friend bool operator==(const SeqTuple& a, const SeqTuple& b) noexcept {
        return a.entries_ == b.entries_ && a.field_ == b.field_;
    }

private:
    Field field_;
    std::vector<Elem> entries_;
};

/// A row vector v = (v_0, ..., v_m).
using RowVector = SeqTuple;

/// H_{rdeg,cdeg}: (rdeg+1) x (cdeg+1). Either degree may be -1 (empty matrix).
struct HankelShape {
    int rdeg = 0;
    int cdeg = 0;

    std::size_t rows() const noexcept { return static_cast<std::size_t>(rdeg + 1); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(cdeg + 1); }
    bool valid_for(std::size_t tuple_length) const noexcept {
        return rdeg >= -1 && cdeg >= -1 &&
               static_cast<long long>(rdeg) + cdeg + 1 <= static_cast<long long>(tuple_length);
    }
};

class DenseMatrix {
public:
    DenseMatrix(Field field, std::size_t rows, std::size_t cols);
    DenseMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

    static DenseMatrix identity(const Field& field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    const std::vector<Elem>& data() const noexcept { return data_; }

    Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::span<const Elem> row(std::size_t i) const {
        return std::span<const Elem>(data_).subspan(i * cols_, cols_);
    }

    DenseMatrix transpose() const;
    DenseMatrix submatrix(std::span<const std::size_t> row_idx,
                          std::span<const std::size_t> col_idx) const;
    /// Rows taken in reverse order ("upside down").
    DenseMatrix flipped_rows() const;

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
               a.field_ == b.field_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

DenseMatrix materialize_hankel(const SeqTuple& x, HankelShape shape);

std::size_t rank_gauss(const DenseMatrix& m);

/// Throws UsageError for non-square input. The empty matrix has determinant 1.
FieldElement det(const DenseMatrix& m);

/// rows - rank.
std::size_t left_kernel_dim(const DenseMatrix& m);

/// v * M == 0. v must have M.rows() entries.
bool left_annihilates(const RowVector& v, const DenseMatrix& m);

/// x_{[0,k)}.
SeqTuple prefix(const SeqTuple& x, std::size_t k);

/// J_{u,v}(y) = (y_{u-i+j})_{1<=i,j<=v} with y_0 = 1 and y_{<0} = 0.
/// y holds (y_1, ..., y_{u+v-1}).
DenseMatrix jt_matrix(const SeqTuple& y, int u, int v);

/// The (2v-1)-tuple x with x_t = y_{u-v+1+t}; H_{v-1,v-1}(x) is J_{u,v}(y)
/// with its rows reversed. Requires u, v >= 1.
SeqTuple jt_to_hankel(const SeqTuple& y, int u, int v);

/// det J_{u,v}(y) = jt_flip_sign(v) * det H_{v-1,v-1}(jt_to_hankel(y)).
int jt_flip_sign(int v) noexcept;

// Allocation-free paths for the enumeration engine. `scratch` is resized as
// needed and may be reused across calls.

/// Row-reduces `data` (rows x cols, row-major) in place and returns the rank.
std::size_t rank_in_place(const Field& field, std::span<Elem> data, std::size_t rows,
                          std::size_t cols);

/// Determinant of the n x n row-major `data`, destroyed in the process.
Elem det_in_place(const Field& field, std::span<Elem> data, std::size_t n);

std::size_t hankel_rank(const Field& field, std::span<const Elem> x, HankelShape shape,
                        std::vector<Elem>& scratch);

Elem hankel_det(const Field& field, std::span<const Elem> x, int deg, std::vector<Elem>& scratch);

void fill_hankel(std::span<const Elem> x, HankelShape shape, std::span<Elem> out);

}  // namespace hankel
