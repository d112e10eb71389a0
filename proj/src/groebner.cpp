#include "elim/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "elim/error.hpp"

namespace elim {

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    return order == MonomialOrder::Grevlex ? grevlex_less(a, b)
                                           : lex_less(a, b);
}

const Monomial& leading_monomial(const Polynomial& p, MonomialOrder order) {
    if (p.is_zero())
        throw Error(ErrorCode::InvalidArgument,
                    "the zero polynomial has no leading monomial");
    if (order == MonomialOrder::Grevlex) return p.terms().rbegin()->first;
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || lex_less(*best, m)) best = &m;
    return *best;
}

Rational leading_coefficient(const Polynomial& p, MonomialOrder order) {
    return p.coefficient(leading_monomial(p, order));
}

namespace {

Polynomial times_term(const Polynomial& p, const Rational& c,
                      const Monomial& m) {
    Polynomial r = Polynomial::zero(p.n_vars());
    for (const auto& [mm, cc] : p.terms()) r.add_term(mm * m, cc * c);
    return r;
}

Polynomial make_monic(const Polynomial& p, MonomialOrder order) {
    return scale(p, 1 / leading_coefficient(p, order));
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                  MonomialOrder order) {
    Polynomial rem = Polynomial::zero(p.n_vars());
    Polynomial work = p;
    while (!work.is_zero()) {
        const Monomial lm = leading_monomial(work, order);
        const Rational lc = leading_coefficient(work, order);
        const Polynomial* reducer = nullptr;
        for (const Polynomial& g : basis)
            if (!g.is_zero() && divides(leading_monomial(g, order), lm)) {
                reducer = &g;
                break;
            }
        if (reducer) {
            Rational factor = lc / leading_coefficient(*reducer, order);
            work -= times_term(*reducer, factor,
                               quotient(lm, leading_monomial(*reducer, order)));
        } else {
            rem.add_term(lm, lc);
            work.add_term(lm, -lc);
        }
    }
    return rem;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         MonomialOrder order) {
    if (gens.empty())
        throw Error(ErrorCode::InvalidArgument, "no generators given");
    int n_vars = gens.front().n_vars();
    std::vector<Polynomial> g;
    for (const Polynomial& p : gens) {
        if (p.n_vars() != n_vars)
            throw Error(ErrorCode::ArityMismatch,
                        "generators live in different polynomial rings");
        if (p.is_zero())
            throw Error(ErrorCode::InvalidArgument,
                        "generators must be nonzero");
        g.push_back(make_monic(p, order));
    }

    std::set<std::pair<int, int>> pending;
    auto add_pairs = [&](int upto) {
        for (int i = 0; i < upto; ++i) pending.insert({i, upto});
    };
    for (int j = 1; j < static_cast<int>(g.size()); ++j) add_pairs(j);

    auto lm = [&](int i) -> const Monomial& {
        return leading_monomial(g[i], order);
    };

    while (!pending.empty()) {
        // Normal selection: smallest lcm degree, ties by the order, then by
        // the pair indices.
        auto best = pending.begin();
        Monomial best_lcm = monomial_lcm(lm(best->first), lm(best->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = monomial_lcm(lm(it->first), lm(it->second));
            if (l.degree() < best_lcm.degree() ||
                (l.degree() == best_lcm.degree() &&
                 monomial_less(l, best_lcm, order))) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        if (best_lcm == lm(i) * lm(j)) continue;  // coprime leading terms

        bool chained = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
            if (k == i || k == j || !divides(lm(k), best_lcm)) continue;
            auto key = [](int a, int b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending.count(key(i, k)) && !pending.count(key(j, k)))
                chained = true;
        }
        if (chained) continue;

        Polynomial s =
            times_term(g[i], 1, quotient(best_lcm, lm(i))) -
            times_term(g[j], 1, quotient(best_lcm, lm(j)));
        Polynomial r = reduce(s, g, order);
        if (!r.is_zero()) {
            g.push_back(make_monic(r, order));
            add_pairs(static_cast<int>(g.size()) - 1);
        }
    }

    // Inter-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t k = 0; k < g.size(); ++k)
                if (k != i && !g[k].is_zero()) others.push_back(g[k]);
            Polynomial r = reduce(g[i], others, order);
            if (!r.is_zero()) r = make_monic(r, order);
            if (!(r == g[i])) {
                g[i] = r;
                changed = true;
            }
        }
    }
    std::erase_if(g, [](const Polynomial& p) { return p.is_zero(); });
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_less(leading_monomial(a, order),
                             leading_monomial(b, order), order);
    });

    GroebnerBasis gb;
    gb.order = order;
    gb.n_vars = n_vars;
    gb.generators = std::move(g);
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.n_vars() != gb.n_vars)
        throw Error(ErrorCode::ArityMismatch,
                    "polynomial arity differs from the basis");
    return reduce(p, gb.generators, gb.order);
}

std::vector<Monomial> quotient_basis(const GroebnerBasis& gb) {
    std::vector<Monomial> lms;
    for (const Polynomial& p : gb.generators)
        lms.push_back(leading_monomial(p, gb.order));
    for (const Monomial& m : lms)
        if (m.degree() == 0) return {};  // the whole ring is the ideal

    int n = gb.n_vars;
    std::vector<int> bound(n, -1);
    for (const Monomial& m : lms) {
        int support = -1;
        bool pure = true;
        for (int v = 0; v < n; ++v)
            if (m.exp[v] > 0) {
                if (support >= 0) pure = false;
                support = v;
            }
        if (pure && support >= 0 &&
            (bound[support] < 0 || m.exp[support] < bound[support]))
            bound[support] = m.exp[support];
    }
    for (int v = 0; v < n; ++v)
        if (bound[v] < 0)
            throw Error(ErrorCode::NotZeroDimensional,
                        "no pure power of x" + std::to_string(v) +
                            " among the leading monomials");

    std::vector<Monomial> basis;
    Monomial m = Monomial::one(n);
    while (true) {
        bool inside = true;
        for (const Monomial& l : lms)
            if (divides(l, m)) {
                inside = false;
                break;
            }
        if (inside) basis.push_back(m);
        int v = 0;
        while (v < n && m.exp[v] + 1 == bound[v]) m.exp[v++] = 0;
        if (v == n) break;
        ++m.exp[v];
    }
    std::sort(basis.begin(), basis.end(), listing_less);
    return basis;
}

namespace {

RationalVector coordinates(const Polynomial& p, const QuotientAlgebra& alg) {
    RationalVector col = RationalVector::Zero(alg.basis.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = alg.index.find(m);
        if (it == alg.index.end())
            throw Error(ErrorCode::UnassignedMonomial,
                        "monomial " + to_string(m) +
                            " is outside the staircase basis");
        col(it->second) = c;
    }
    return col;
}

}  // namespace

QuotientAlgebra quotient_algebra(const GroebnerBasis& gb) {
    QuotientAlgebra alg;
    alg.basis = quotient_basis(gb);
    for (int i = 0; i < static_cast<int>(alg.basis.size()); ++i)
        alg.index.emplace(alg.basis[i], i);
    const auto dim = static_cast<Eigen::Index>(alg.basis.size());
    for (int v = 0; v < gb.n_vars; ++v) {
        RationalMatrix table(dim, dim);
        for (Eigen::Index j = 0; j < dim; ++j) {
            Monomial shifted = alg.basis[j];
            ++shifted.exp[v];
            table.col(j) =
                coordinates(normal_form(Polynomial::term(shifted, 1), gb), alg);
        }
        alg.var_tables.push_back(std::move(table));
    }
    return alg;
}

RationalMatrix multiplication_matrix(const QuotientAlgebra& alg,
                                     const GroebnerBasis& gb,
                                     const Polynomial& p) {
    if (p.n_vars() != gb.n_vars)
        throw Error(ErrorCode::ArityMismatch,
                    "polynomial arity differs from the basis");
    const auto dim = static_cast<Eigen::Index>(alg.basis.size());
    RationalMatrix m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        m.col(j) = coordinates(
            normal_form(p * Polynomial::term(alg.basis[j], 1), gb), alg);
    return m;
}

Rational norm(const QuotientAlgebra& alg, const GroebnerBasis& gb,
              const Polynomial& p) {
    return determinant(multiplication_matrix(alg, gb, p));
}

}  // namespace elim
