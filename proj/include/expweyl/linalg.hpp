#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "expweyl/scalars.hpp"

namespace expweyl
{

using Vector = std::vector<Scalar>;

// Dense row-major matrix over Scalar.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    std::size_t rows() const noexcept { return m_rows; }
    std::size_t cols() const noexcept { return m_cols; }
    Scalar &operator()(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
    const Scalar &operator()(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }

    Vector apply(const Vector &v) const;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Scalar> m_data;
};

struct RowEchelon
{
    Matrix reduced;                     // reduced row echelon form
    std::vector<std::size_t> pivot_cols; // one per nonzero row
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

// Exact Gauss-Jordan elimination. Within a column the first invertible entry
// is the pivot; hbar-series columns whose nonzero entries are all
// non-invertible raise NonInvertibleSeries.
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix &m);
// Some x with A x = b, or nullopt when b is outside the column space.
std::optional<Vector> solve(const Matrix &a, const Vector &b);
// Basis of the null space {x : A x = 0}.
std::vector<Vector> kernel(const Matrix &a);

// Coordinates of sparse vectors on the union of their supports, in key
// order. Column j of the result is vectors[j].
template <typename Key>
Matrix columns_matrix(const std::vector<std::map<Key, Scalar>> &vectors, std::vector<Key> &keys)
{
    std::map<Key, std::size_t> index;
    for (const auto &v : vectors)
        for (const auto &[k, c] : v)
            index.emplace(k, 0);
    keys.clear();
    for (auto &[k, pos] : index)
    {
        pos = keys.size();
        keys.push_back(k);
    }
    Matrix m(keys.size(), vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j)
        for (const auto &[k, c] : vectors[j])
            m(index.at(k), j) = c;
    return m;
}

} // namespace expweyl
