#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <vector>

#include "elim/error.hpp"
#include "elim/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

} // namespace Eigen

namespace elim {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

RationalMatrix matrix_from_rows(const std::vector<std::vector<Rational>>& rows);

// Exact determinant by single-step fraction-free Bareiss elimination over
// the integers: each row is scaled by the lcm of its denominators first and
// the accumulated factor is divided out of the final pivot.  det of the 0x0
// matrix is 1.
Rational determinant(const RationalMatrix& m);

// Keeps the selected rows/columns in their original relative order; index
// sets must be strictly increasing.
RationalMatrix submatrix(const RationalMatrix& m,
                         const std::vector<Eigen::Index>& row_keep,
                         const std::vector<Eigen::Index>& col_keep);

} // namespace elim
