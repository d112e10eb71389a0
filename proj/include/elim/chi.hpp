#pragma once

#include <functional>
#include <vector>

#include "elim/rational.hpp"

namespace elim {

// Multidegree of a tensor product of tagged line bundles: one integer per
// generator symbol.  Entries may be negative (duals are allowed everywhere).
using DegreeVector = std::vector<long long>;

// An Euler characteristic seen as a function on the degree lattice.  `arity`
// is the number of slots the function expects; `eval` must be total on all
// integer vectors of that length.
struct ChiFunction {
    int arity = 0;
    std::function<Rational(const DegreeVector&)> eval;

    Rational operator()(const DegreeVector& d) const;
};

// chi(P^n, O(d)) = prod_{k=1..n} (d+k) / n!, valid as a polynomial identity
// for every integer d (so n = 2, d = -3 gives 1, not a special case).
Rational chi_projective(int n, long long d);

// The chi of P^n read off the total degree of a multidegree vector; `arity`
// fixes how many slots the resulting function accepts.
ChiFunction chi_projective_fn(int n, int arity);

// <c_1, ..., c_p> = (-1)^p chi(0) + sum_{k=1..p} (-1)^{p-k} sum over
// i_1 < ... < i_k of chi(c_{i_1} + ... + c_{i_k}).  Requires p >= 1 and every
// class of length chi.arity.
Rational intersection_number(const ChiFunction& chi,
                             const std::vector<DegreeVector>& classes);

// Number of lattice points with 0 <= alpha_i < d_i, i.e. the product of the
// degrees; the length of the zero scheme cut out by x_i^{d_i}.
Integer koszul_length(const std::vector<long long>& degrees);

// t |-> chi(t + direction) - chi(t), same arity as chi.
ChiFunction difference_operator(const ChiFunction& chi,
                                const DegreeVector& direction);

}  // namespace elim
