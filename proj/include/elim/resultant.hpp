#pragma once

#include <vector>

#include "elim/matrix.hpp"
#include "elim/polynomial.hpp"

namespace elim {

// n+1 homogeneous forms in n+1 variables, with their degrees and the
// Macaulay degree nu = 1 + sum(d_i - 1).
struct MacaulaySystem {
    int n = 0;
    std::vector<Polynomial> forms;
    std::vector<int> degrees;
    int nu = 0;
};

// Validates shape, homogeneity and (when given) the expected degrees.
MacaulaySystem make_system(const std::vector<Polynomial>& forms);
MacaulaySystem make_system(const std::vector<Polynomial>& forms,
                           const std::vector<int>& degrees);

enum class ResultantMethod { Sylvester, Macaulay, Poisson };

const char* to_string(ResultantMethod method);

struct ResultantValue {
    Rational value;
    ResultantMethod method = ResultantMethod::Macaulay;
    std::vector<Integer> degrees_certificate;  // k_i = prod_{j != i} d_j
};

// k_i = prod_{j != i} d_j.
std::vector<Integer> resultant_degrees(const std::vector<int>& degrees);

// Classical Sylvester determinant of two binary forms, signed so that
// sylvester_resultant(a*x0 + b*x1, c*x0 + d*x1) = a*d - b*c.
Rational sylvester_resultant(const Polynomial& f, const Polynomial& g);

// The Macaulay matrix in degree nu together with the index set of the
// extraneous minor (monomials divisible by x_i^{d_i} for two or more i).
struct MacaulayData {
    std::vector<Monomial> monomials;       // row and column labels
    std::vector<int> row_form;             // which form fills each row
    RationalMatrix m;
    std::vector<Eigen::Index> minor_rows;
    std::vector<Eigen::Index> minor_cols;  // same set as minor_rows
};

MacaulayData macaulay_matrix(const MacaulaySystem& sys);

// det(M) / det(M'), normalized so the pure monomial system gives 1.
ResultantValue macaulay_resultant(const MacaulaySystem& sys);

// The Poisson recursion: eliminate the last variable, raise the restricted
// resultant to d_{n+1}, and multiply by the norm of the last form on the
// quotient by the dehomogenized others.
ResultantValue poisson_resultant(const MacaulaySystem& sys);

enum class ResultantMode { Auto, Macaulay, Poisson, Crosscheck };

// auto: Macaulay first, Poisson when the extraneous minor degenerates.
// crosscheck: run both and insist on agreement.
ResultantValue resultant(const MacaulaySystem& sys,
                         ResultantMode mode = ResultantMode::Auto);

}  // namespace elim
