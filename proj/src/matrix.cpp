#include "elim/matrix.hpp"

namespace elim {

RationalMatrix matrix_from_rows(const std::vector<std::vector<Rational>>& rows) {
    Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows[0].size());
    RationalMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw Error(ErrorCode::LengthMismatch, "ragged rows");
        for (Eigen::Index j = 0; j < c; ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return Rational(1);

    // Integer working copy; `cleared` collects the per-row denominator lcms.
    std::vector<Integer> a(static_cast<std::size_t>(n * n));
    Integer cleared(1);
    for (Eigen::Index i = 0; i < n; ++i) {
        Integer l(1);
        for (Eigen::Index j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (Eigen::Index j = 0; j < n; ++j) {
            Integer scaled = m(i, j).get_num() * (l / m(i, j).get_den());
            a[static_cast<std::size_t>(i * n + j)] = scaled;
        }
        cleared *= l;
    }

    auto at = [&](Eigen::Index i, Eigen::Index j) -> Integer& {
        return a[static_cast<std::size_t>(i * n + j)];
    };

    int sign = 1;
    Integer prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = k; i < n; ++i) {
            if (at(i, k) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != k) {
            for (Eigen::Index j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Integer t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }

    Rational det(at(n - 1, n - 1), cleared);
    det.canonicalize();
    return sign < 0 ? Rational(-det) : det;
}

namespace {

void check_index_set(const std::vector<Eigen::Index>& keep, Eigen::Index bound,
                     const char* what) {
    Eigen::Index last = -1;
    for (Eigen::Index i : keep) {
        if (i < 0 || i >= bound)
            throw Error(ErrorCode::IndexOutOfRange,
                        std::string(what) + " index out of range");
        if (i <= last)
            throw Error(ErrorCode::InvalidArgument,
                        std::string(what) + " indices must be strictly increasing");
        last = i;
    }
}

} // namespace

RationalMatrix submatrix(const RationalMatrix& m,
                         const std::vector<Eigen::Index>& row_keep,
                         const std::vector<Eigen::Index>& col_keep) {
    check_index_set(row_keep, m.rows(), "row");
    check_index_set(col_keep, m.cols(), "column");
    RationalMatrix r(static_cast<Eigen::Index>(row_keep.size()),
                     static_cast<Eigen::Index>(col_keep.size()));
    for (std::size_t i = 0; i < row_keep.size(); ++i)
        for (std::size_t j = 0; j < col_keep.size(); ++j)
            r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(row_keep[i], col_keep[j]);
    return r;
}

} // namespace elim
