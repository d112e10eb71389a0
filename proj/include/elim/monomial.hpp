#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "elim/error.hpp"

namespace elim {

struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(int n_vars) : exp(static_cast<std::size_t>(n_vars), 0) {}

    static Monomial one(int n_vars) { return Monomial(n_vars); }

    static Monomial variable(int n_vars, int i, int e = 1) {
        Monomial m(n_vars);
        m.exp[static_cast<std::size_t>(i)] = e;
        return m;
    }

    int n_vars() const { return static_cast<int>(exp.size()); }

    int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

    bool is_one() const {
        for (int e : exp)
            if (e != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exp == o.exp; }
    bool operator!=(const Monomial& o) const { return exp != o.exp; }
};

inline void require_same_arity(const Monomial& a, const Monomial& b) {
    if (a.n_vars() != b.n_vars())
        throw Error(ErrorCode::ArityMismatch, "monomial arity mismatch");
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
    return r;
}

// a | b
inline bool divides(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

// b / a, defined when divides(a, b)
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    require_same_arity(a, b);
    Monomial r = b;
    for (std::size_t i = 0; i < r.exp.size(); ++i) {
        r.exp[i] -= a.exp[i];
        if (r.exp[i] < 0)
            throw Error(ErrorCode::InvalidArgument, "monomial quotient undefined");
    }
    return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.exp.size(); ++i)
        if (b.exp[i] > r.exp[i]) r.exp[i] = b.exp[i];
    return r;
}

// Graded reverse lexicographic order with x0 > x1 > ... : compare total
// degree, then the last nonzero entry of exp(a)-exp(b) decides (negative
// entry means the greater monomial).
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = a.exp.size(); i-- > 0;) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
    }
    return false;
}

inline bool lex_less(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
    return false;
}

// Canonical listing order used for serialization, staircase bases and
// Macaulay row/column indexing: ascending total degree, descending grevlex
// within a degree.  On 0/1 exponent vectors this is the cube vertex order.
inline bool listing_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return grevlex_less(b, a);
}

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_less(a, b);
    }
};

// All monomials of the given total degree, in the canonical listing order.
std::vector<Monomial> monomials_of_degree(int n_vars, int degree);

std::string to_string(const Monomial& m);

} // namespace elim
