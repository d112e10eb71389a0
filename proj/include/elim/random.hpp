#pragma once

#include <cstdint>
#include <random>

#include "elim/polynomial.hpp"

namespace elim {

// Seeded deterministic source for every randomized suite.  mt19937_64 output
// is pinned by the standard, and the modulo draw below avoids the
// implementation-defined std::uniform_int_distribution, so identical seeds
// give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Inclusive bounds.
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() %
                                     static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (next() & 1u) != 0; }

    // Uniform-ish nonzero numerator in [-max_num, max_num], denominator in
    // [1, max_den].
    Rational rational(int max_num, int max_den) {
        int num = range(1, max_num);
        if (coin()) num = -num;
        Rational q(num, range(1, max_den));
        q.canonicalize();
        return q;
    }

    Rational rational_or_zero(int max_num, int max_den) {
        if (range(0, 4) == 0) return Rational(0);
        return rational(max_num, max_den);
    }

private:
    std::mt19937_64 gen_;
};

inline Monomial random_monomial(Rng& rng, int n_vars, int max_degree) {
    Monomial m(n_vars);
    int d = rng.range(0, max_degree);
    for (int k = 0; k < d; ++k)
        ++m.exp[static_cast<std::size_t>(rng.range(0, n_vars - 1))];
    return m;
}

inline Polynomial random_polynomial(Rng& rng, int n_vars, int max_degree,
                                    int max_terms, int coeff_bound) {
    Polynomial p(n_vars);
    int t = rng.range(0, max_terms);
    for (int k = 0; k < t; ++k)
        p.add_term(random_monomial(rng, n_vars, max_degree),
                   rng.rational(coeff_bound, 1));
    return p;
}

// Homogeneous of exactly the given degree with every coefficient nonzero.
inline Polynomial random_dense_form(Rng& rng, int n_vars, int degree,
                                    int num_bound, int den_bound = 1) {
    Polynomial p(n_vars);
    for (const Monomial& m : monomials_of_degree(n_vars, degree))
        p.add_term(m, rng.rational(num_bound, den_bound));
    return p;
}

} // namespace elim
