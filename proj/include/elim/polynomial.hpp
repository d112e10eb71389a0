#pragma once

#include <map>
#include <string>
#include <vector>

#include "elim/monomial.hpp"
#include "elim/rational.hpp"

namespace elim {

// Sparse exact multivariate polynomial over the rationals.  Terms are kept
// in a map ordered by grevlex, so iteration order (and therefore every
// serialized form) is deterministic.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexLess>;

    Polynomial() : n_vars_(0) {}
    explicit Polynomial(int n_vars);

    static Polynomial zero(int n_vars) { return Polynomial(n_vars); }
    static Polynomial constant(int n_vars, const Rational& c);
    static Polynomial variable(int n_vars, int i);
    static Polynomial term(const Monomial& m, const Rational& c);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial.
    int total_degree() const;

    Rational coefficient(const Monomial& m) const;
    Rational constant_coefficient() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

    bool operator==(const Polynomial& o) const {
        return n_vars_ == o.n_vars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rational evaluate(const std::vector<Rational>& point) const;

private:
    int n_vars_;
    TermMap terms_;
};

Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial pow(const Polynomial& p, unsigned e);

struct HomogeneousDegree {
    enum class Kind { Homogeneous, NotHomogeneous, ZeroPoly };
    Kind kind;
    int degree; // meaningful only when Kind::Homogeneous
};

HomogeneousDegree homogeneous_degree(const Polynomial& p);

// x_i := 0; arity unchanged.
Polynomial restrict_to_hyperplane(const Polynomial& p, int i);

// x_i := 1; variable i removed, arity drops by one.
Polynomial dehomogenize(const Polynomial& p, int i);

Polynomial parse_polynomial(const std::string& text, int n_vars);

// Canonical text form; parse_polynomial(to_text(p), p.n_vars()) == p.
std::string to_text(const Polynomial& p);

} // namespace elim
