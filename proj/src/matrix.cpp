#include "hankel/matrix.hpp"

#include <algorithm>
#include <utility>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

void require_elements(const Field& field, std::span<const Elem> values) {
    for (Elem e : values) {
        if (!field.contains(e)) {
            throw UsageError("entry " + std::to_string(e) + " outside field of order " +
                             std::to_string(field.order()));
        }
    }
}

// Forward elimination on rows x cols. Pivot = first nonzero entry in the
// column. Returns the rank; `swaps` counts row exchanges and `pivot_product`
// accumulates the pivots (only meaningful for square full-rank input).
std::size_t eliminate(const Field& field, std::span<Elem> a, std::size_t rows, std::size_t cols,
                      std::size_t* swaps, Elem* pivot_product) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
            if (swaps != nullptr) {
                ++*swaps;
            }
        }
        const Elem p = a[rank * cols + c];
        if (pivot_product != nullptr) {
            *pivot_product = field.mul(*pivot_product, p);
        }
        const Elem neg_inv = field.neg(field.inv(p));
        const auto pivot_row = std::span<const Elem>(a.subspan(rank * cols + c, cols - c));
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Elem lead = a[r * cols + c];
            if (lead != 0) {
                field.axpy(field.mul(lead, neg_inv), pivot_row, a.subspan(r * cols + c, cols - c));
            }
        }
        ++rank;
    }
    return rank;
}

Elem jt_entry(const SeqTuple& y, int index) {
    if (index < 0) {
        return Field::zero();
    }
    if (index == 0) {
        return Field::one();
    }
    return y[static_cast<std::size_t>(index - 1)];
}

}  // namespace

SeqTuple::SeqTuple(Field field, std::vector<Elem> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
    require_elements(field_, entries_);
}

SeqTuple SeqTuple::parse(const Field& field, std::string_view text) {
    std::vector<Elem> out;
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return {field, {}};
    }
    while (true) {
        const auto comma = text.find(',');
        out.push_back(field.parse_element(text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return {field, std::move(out)};
}

std::string SeqTuple::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += field_.format(entries_[i]);
    }
    return out;
}

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Field::zero()) {}

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw UsageError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                         std::to_string(rows_ * cols_));
    }
    require_elements(field_, data_);
}

DenseMatrix DenseMatrix::identity(const Field& field, std::size_t n) {
    DenseMatrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.at(i, i) = Field::one();
    }
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out.at(j, i) = at(i, j);
        }
    }
    return out;
}

DenseMatrix DenseMatrix::submatrix(std::span<const std::size_t> row_idx,
                                   std::span<const std::size_t> col_idx) const {
    DenseMatrix out(field_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (row_idx[i] >= rows_ || col_idx[j] >= cols_) {
                throw UsageError("submatrix index out of range");
            }
            out.at(i, j) = at(row_idx[i], col_idx[j]);
        }
    }
    return out;
}

DenseMatrix DenseMatrix::flipped_rows() const {
    DenseMatrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out.at(rows_ - 1 - i, j) = at(i, j);
        }
    }
    return out;
}

void fill_hankel(std::span<const Elem> x, HankelShape shape, std::span<Elem> out) {
    const std::size_t rows = shape.rows();
    const std::size_t cols = shape.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy_n(x.begin() + static_cast<std::ptrdiff_t>(i), cols,
                    out.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
}

DenseMatrix materialize_hankel(const SeqTuple& x, HankelShape shape) {
    if (!shape.valid_for(x.size())) {
        throw UsageError("Hankel shape (" + std::to_string(shape.rdeg) + "," +
                         std::to_string(shape.cdeg) + ") does not fit a tuple of length " +
                         std::to_string(x.size()));
    }
    std::vector<Elem> data(shape.rows() * shape.cols());
    fill_hankel(x.span(), shape, data);
    return DenseMatrix(x.field(), shape.rows(), shape.cols(), std::move(data));
}

std::size_t rank_in_place(const Field& field, std::span<Elem> data, std::size_t rows,
                          std::size_t cols) {
    return eliminate(field, data, rows, cols, nullptr, nullptr);
}

Elem det_in_place(const Field& field, std::span<Elem> data, std::size_t n) {
    std::size_t swaps = 0;
    Elem product = Field::one();
    if (eliminate(field, data, n, n, &swaps, &product) < n) {
        return Field::zero();
    }
    return swaps % 2 == 0 ? product : field.neg(product);
}

std::size_t hankel_rank(const Field& field, std::span<const Elem> x, HankelShape shape,
                        std::vector<Elem>& scratch) {
    const std::size_t rows = shape.rows();
    const std::size_t cols = shape.cols();
    if (rows == 0 || cols == 0) {
        return 0;
    }
    scratch.resize(rows * cols);
    fill_hankel(x, shape, scratch);
    return rank_in_place(field, std::span<Elem>(scratch.data(), rows * cols), rows, cols);
}

Elem hankel_det(const Field& field, std::span<const Elem> x, int deg, std::vector<Elem>& scratch) {
    const HankelShape shape{deg, deg};
    const std::size_t n = shape.rows();
    if (n == 0) {
        return Field::one();
    }
    scratch.resize(n * n);
    fill_hankel(x, shape, scratch);
    return det_in_place(field, std::span<Elem>(scratch.data(), n * n), n);
}

std::size_t rank_gauss(const DenseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    std::vector<Elem> work = m.data();
    return rank_in_place(m.field(), work, m.rows(), m.cols());
}

FieldElement det(const DenseMatrix& m) {
    if (!m.square()) {
        throw UsageError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    }
    std::vector<Elem> work = m.data();
    return {m.field(), m.rows() == 0 ? Field::one() : det_in_place(m.field(), work, m.rows())};
}

std::size_t left_kernel_dim(const DenseMatrix& m) { return m.rows() - rank_gauss(m); }

bool left_annihilates(const RowVector& v, const DenseMatrix& m) {
    if (v.size() != m.rows()) {
        throw UsageError("row vector of length " + std::to_string(v.size()) +
                         " cannot multiply a matrix with " + std::to_string(m.rows()) + " rows");
    }
    const Field& f = m.field();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Elem acc = Field::zero();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            acc = f.add(acc, f.mul(v[i], m.at(i, j)));
        }
        if (acc != 0) {
            return false;
        }
    }
    return true;
}

SeqTuple prefix(const SeqTuple& x, std::size_t k) {
    if (k > x.size()) {
        throw UsageError("prefix length " + std::to_string(k) + " exceeds tuple length " +
                         std::to_string(x.size()));
    }
    return {x.field(), std::vector<Elem>(x.entries().begin(),
                                         x.entries().begin() + static_cast<std::ptrdiff_t>(k))};
}

DenseMatrix jt_matrix(const SeqTuple& y, int u, int v) {
    if (u < 0 || v < 0 || u + v < 1) {
        throw UsageError("Jacobi-Trudi matrix needs u, v >= 0 and u + v >= 1");
    }
    if (y.size() != static_cast<std::size_t>(u + v - 1)) {
        throw UsageError("J_{u,v} needs exactly u+v-1 = " + std::to_string(u + v - 1) +
                         " entries, got " + std::to_string(y.size()));
    }
    DenseMatrix out(y.field(), static_cast<std::size_t>(v), static_cast<std::size_t>(v));
    for (int i = 1; i <= v; ++i) {
        for (int j = 1; j <= v; ++j) {
            out.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                jt_entry(y, u - i + j);
        }
    }
    return out;
}

SeqTuple jt_to_hankel(const SeqTuple& y, int u, int v) {
    if (u < 1 || v < 1) {
        throw UsageError("J_{u,v} with u = 0 or v = 0 is unitriangular or empty; "
                         "the flip to a Hankel matrix needs u, v >= 1");
    }
    if (y.size() != static_cast<std::size_t>(u + v - 1)) {
        throw UsageError("J_{u,v} needs exactly u+v-1 = " + std::to_string(u + v - 1) +
                         " entries, got " + std::to_string(y.size()));
    }
    std::vector<Elem> x(static_cast<std::size_t>(2 * v - 1));
    for (int t = 0; t < 2 * v - 1; ++t) {
        x[static_cast<std::size_t>(t)] = jt_entry(y, u - v + 1 + t);
    }
    return {y.field(), std::move(x)};
}

int jt_flip_sign(int v) noexcept { return (v / 2) % 2 == 0 ? 1 : -1; }

}  // namespace hankel
