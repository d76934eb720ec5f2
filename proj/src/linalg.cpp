#include "expweyl/linalg.hpp"

#include "expweyl/errors.hpp"

namespace expweyl
{

Vector Matrix::apply(const Vector &v) const
{
    if (v.size() != m_cols)
        throw Error(ErrorCode::InvalidArgument, "matrix/vector size mismatch");
    Vector out(m_rows);
    for (std::size_t r = 0; r < m_rows; ++r)
        for (std::size_t c = 0; c < m_cols; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero())
                out[r] += (*this)(r, c) * v[c];
    return out;
}

namespace
{

bool invertible(const Scalar &s)
{
    return !s.is_zero() && !s.coeff(0).is_zero();
}

} // namespace

RowEchelon row_reduce(Matrix m)
{
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col)
    {
        std::size_t pivot = m.rows();
        bool any_nonzero = false;
        for (std::size_t r = row; r < m.rows(); ++r)
        {
            if (m(r, col).is_zero())
                continue;
            any_nonzero = true;
            if (invertible(m(r, col)))
            {
                pivot = r;
                break;
            }
        }
        if (pivot == m.rows())
        {
            if (any_nonzero)
                throw Error(ErrorCode::NonInvertibleSeries, "no invertible pivot in column " + std::to_string(col));
            continue;
        }
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));
        const Scalar inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero())
                m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r)
        {
            if (r == row || m(r, col).is_zero())
                continue;
            const Scalar factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero())
                    m(r, c) -= factor * m(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix &m)
{
    return row_reduce(m).rank();
}

std::optional<Vector> solve(const Matrix &a, const Vector &b)
{
    if (b.size() != a.rows())
        throw Error(ErrorCode::InvalidArgument, "right-hand side has the wrong length");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r)
    {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const RowEchelon e = row_reduce(std::move(aug));
    Vector x(a.cols());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    {
        if (e.pivot_cols[i] == a.cols())
            return std::nullopt; // inconsistent row 0 = 1
        x[e.pivot_cols[i]] = e.reduced(i, a.cols());
    }
    return x;
}

std::vector<Vector> kernel(const Matrix &a)
{
    const RowEchelon e = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivot_cols)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free)
    {
        if (is_pivot[free])
            continue;
        Vector v(a.cols());
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace expweyl
