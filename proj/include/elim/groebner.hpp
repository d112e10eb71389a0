#pragma once

#include <map>
#include <vector>

#include "elim/matrix.hpp"
#include "elim/polynomial.hpp"

namespace elim {

enum class MonomialOrder { Grevlex, Lex };

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order);

// Leading data of a nonzero polynomial under the given order.
const Monomial& leading_monomial(const Polynomial& p, MonomialOrder order);
Rational leading_coefficient(const Polynomial& p, MonomialOrder order);

struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::Grevlex;
    int n_vars = 0;
    std::vector<Polynomial> generators;  // monic, mutually reduced
};

// Reduced Groebner basis of the ideal generated by gens.  Buchberger with
// the normal selection strategy; pairs are discarded by the coprimality and
// chain criteria.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         MonomialOrder order = MonomialOrder::Grevlex);

// The unique remainder of p modulo gb: no term of the result is divisible by
// a leading monomial of the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// The staircase: all monomials outside the leading-term ideal, listed by
// ascending total degree and descending grevlex within a degree.  Throws
// NotZeroDimensional when the staircase is infinite.
std::vector<Monomial> quotient_basis(const GroebnerBasis& gb);

// The quotient ring as a finite-dimensional vector space with one
// multiplication table per variable.
struct QuotientAlgebra {
    std::vector<Monomial> basis;
    std::map<Monomial, int, GrevlexLess> index;
    std::vector<RationalMatrix> var_tables;
};

QuotientAlgebra quotient_algebra(const GroebnerBasis& gb);

// Matrix of b |-> normal_form(p * b) on the staircase basis; column j holds
// the image of basis element j.
RationalMatrix multiplication_matrix(const QuotientAlgebra& alg,
                                     const GroebnerBasis& gb,
                                     const Polynomial& p);

// Determinant of the multiplication matrix: the norm of p down to the base
// field.
Rational norm(const QuotientAlgebra& alg, const GroebnerBasis& gb,
              const Polynomial& p);

}  // namespace elim
