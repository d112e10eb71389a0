#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <string>
#include <vector>

#include "elim/error.hpp"
#include "elim/matrix.hpp"
#include "elim/random.hpp"
#include "elim/resultant.hpp"

using namespace elim;

namespace {

Polynomial pp(const std::string& text, int n_vars) {
    return parse_polynomial(text, n_vars);
}

MacaulaySystem sys_of(const std::vector<std::string>& forms, int n_vars) {
    std::vector<Polynomial> ps;
    for (const std::string& t : forms) ps.push_back(pp(t, n_vars));
    return make_system(ps);
}

// f(images[0], ..., images[k-1]); used for linear changes of coordinates.
Polynomial compose(const Polynomial& f, const std::vector<Polynomial>& images) {
    int out_vars = images.front().n_vars();
    Polynomial out = Polynomial::zero(out_vars);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(out_vars, c);
        for (int v = 0; v < f.n_vars(); ++v)
            t = t * pow(images[v], static_cast<unsigned>(m.exp[v]));
        out += t;
    }
    return out;
}

std::vector<Polynomial> apply_permutation(const std::vector<Polynomial>& forms,
                                          const std::array<int, 3>& perm) {
    std::vector<Polynomial> out;
    for (int i : perm) out.push_back(forms[i]);
    return out;
}

Rational eval_at_ones(const Polynomial& p) {
    std::vector<Rational> ones(p.n_vars(), Rational(1));
    return p.evaluate(ones);
}

}  // namespace

TEST_CASE("degree certificates follow the product rule") {
    CHECK(resultant_degrees({2, 3, 4}) ==
          std::vector<Integer>{Integer(12), Integer(8), Integer(6)});
    CHECK(resultant_degrees({1, 1}) ==
          std::vector<Integer>{Integer(1), Integer(1)});
    CHECK(resultant_degrees({5, 7}) ==
          std::vector<Integer>{Integer(7), Integer(5)});
    CHECK_THROWS_AS(resultant_degrees({}), Error);
    CHECK_THROWS_AS(resultant_degrees({2, 0}), Error);
}

TEST_CASE("system validation catches shape mistakes") {
    MacaulaySystem s = sys_of({"x0^2+x1^2", "x0-x1"}, 2);
    CHECK(s.n == 1);
    CHECK(s.degrees == std::vector<int>{2, 1});
    CHECK(s.nu == 2);
    CHECK(sys_of({"x0^2", "x1^3", "x2^4"}, 3).nu == 7);

    CHECK_THROWS_AS(make_system({}), Error);
    try {
        make_system({pp("x0+x1", 2), pp("x0+x1+x2", 3)});
        FAIL("expected WrongArity");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongArity);
    }
    try {
        make_system({pp("x0^2+x1", 2), pp("x0", 2)});
        FAIL("expected NotHomogeneous");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotHomogeneous);
    }
    try {
        make_system({Polynomial::zero(1)});
        FAIL("expected InvalidSystem");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidSystem);
    }
    CHECK_THROWS_AS(make_system({pp("2", 1)}), Error);
    CHECK_THROWS_AS(
        make_system({pp("x0+x1", 2), pp("x0-x1", 2)}, {1, 2}), Error);
}

TEST_CASE("sylvester matches the closed forms") {
    Rng rng(201);
    for (int iter = 0; iter < 40; ++iter) {
        Rational a = rng.rational(9, 2), b = rng.rational(9, 2);
        Rational c = rng.rational(9, 2), d = rng.rational(9, 2);
        Polynomial f = scale(pp("x0", 2), a) + scale(pp("x1", 2), b);
        Polynomial g = scale(pp("x0", 2), c) + scale(pp("x1", 2), d);
        CHECK(sylvester_resultant(f, g) == a * d - b * c);
    }

    CHECK(sylvester_resultant(pp("x0^2+x1^2", 2), pp("x0-x1", 2)) ==
          Rational(2));
    // Roots 2 and 3 against the root 4:  (2-4)(3-4) = 2.
    CHECK(sylvester_resultant(pp("x0^2-5*x0*x1+6*x1^2", 2),
                              pp("x0-4*x1", 2)) == Rational(2));

    for (int iter = 0; iter < 10; ++iter) {
        Polynomial f = random_dense_form(rng, 2, rng.range(1, 4), 9, 2);
        CHECK(sylvester_resultant(f, f) == Rational(0));
    }

    CHECK_THROWS_AS(sylvester_resultant(pp("x0+x1+x2", 3), pp("x0", 3)), Error);
    try {
        sylvester_resultant(pp("x0^2+x1", 2), pp("x0", 2));
        FAIL("expected NotHomogeneous");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotHomogeneous);
    }
    CHECK_THROWS_AS(sylvester_resultant(Polynomial::zero(2), pp("x0", 2)),
                    Error);
}

TEST_CASE("macaulay layout on the pinned examples") {
    MacaulayData lin = macaulay_matrix(sys_of({"x0+x1", "x0-x1"}, 2));
    CHECK(lin.m.rows() == 2);
    CHECK(lin.minor_rows.empty());
    CHECK(macaulay_resultant(sys_of({"x0+x1", "x0-x1"}, 2)).value ==
          Rational(-2));

    MacaulayData quad = macaulay_matrix(sys_of({"x0^2+x1^2", "x0-x1"}, 2));
    CHECK(quad.m.rows() == 3);
    CHECK(quad.row_form == std::vector<int>{0, 1, 1});
    CHECK(macaulay_resultant(sys_of({"x0^2+x1^2", "x0-x1"}, 2)).value ==
          Rational(2));

    MacaulaySystem ternary =
        sys_of({"x0^2+x1*x2", "x1^2-x0*x2", "x2^2+x0*x1"}, 3);
    MacaulayData td = macaulay_matrix(ternary);
    CHECK(td.m.rows() == 15);
    CHECK(td.minor_rows.size() == 3);
    CHECK(td.minor_rows == td.minor_cols);

    // Each row belongs to the smallest i whose pure power divides its label.
    for (std::size_t r = 0; r < td.monomials.size(); ++r) {
        int owner = td.row_form[r];
        CHECK(td.monomials[r].exp[owner] >= ternary.degrees[owner]);
        for (int i = 0; i < owner; ++i)
            CHECK(td.monomials[r].exp[i] < ternary.degrees[i]);
    }

    MacaulaySystem mixed = sys_of({"x0^2", "x1^3", "x2^4"}, 3);
    MacaulayData md = macaulay_matrix(mixed);
    std::vector<Eigen::Index> expected_minor;
    for (std::size_t r = 0; r < md.monomials.size(); ++r) {
        int owners = 0;
        for (int i = 0; i < 3; ++i)
            if (md.monomials[r].exp[i] >= mixed.degrees[i]) ++owners;
        if (owners >= 2)
            expected_minor.push_back(static_cast<Eigen::Index>(r));
    }
    CHECK(md.minor_rows == expected_minor);
}

TEST_CASE("monomial and linear systems have closed-form values") {
    for (ResultantMode mode : {ResultantMode::Macaulay, ResultantMode::Poisson,
                               ResultantMode::Auto}) {
        CHECK(resultant(sys_of({"x0^2", "x1^3"}, 2), mode).value ==
              Rational(1));
        CHECK(resultant(sys_of({"x0^2", "x1^3", "x2^2"}, 3), mode).value ==
              Rational(1));
    }

    Rng rng(202);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Polynomial> forms;
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < 3; ++i) {
            forms.push_back(random_dense_form(rng, 3, 1, 9, 2));
            std::vector<Rational> row;
            for (int j = 0; j < 3; ++j)
                row.push_back(forms[i].coefficient(Monomial::variable(3, j)));
            rows.push_back(row);
        }
        CHECK(macaulay_resultant(make_system(forms)).value ==
              determinant(matrix_from_rows(rows)));
    }
}

TEST_CASE("macaulay equals the sylvester oracle on binary systems") {
    Rng rng(203);
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial f = random_dense_form(rng, 2, rng.range(1, 4), 9, 2);
        Polynomial g = random_dense_form(rng, 2, rng.range(1, 4), 9, 2);
        ResultantValue v = macaulay_resultant(make_system({f, g}));
        CHECK(v.value == sylvester_resultant(f, g));
        CHECK(v.degrees_certificate ==
              resultant_degrees({f.total_degree(), g.total_degree()}));
    }
}

TEST_CASE("poisson follows the sylvester oracle too") {
    Rng rng(204);
    for (int iter = 0; iter < 30; ++iter) {
        Polynomial f = random_dense_form(rng, 2, rng.range(1, 3), 9, 2);
        Polynomial g = random_dense_form(rng, 2, rng.range(1, 3), 9, 2);
        ResultantValue v = poisson_resultant(make_system({f, g}));
        CHECK(v.value == sylvester_resultant(f, g));
        CHECK(std::string(to_string(v.method)) == "poisson");
    }

    ResultantValue base = poisson_resultant(sys_of({"3*x0^2"}, 1));
    CHECK(base.value == Rational(3));
    CHECK(resultant(sys_of({"3*x0^2"}, 1), ResultantMode::Macaulay).value ==
          Rational(3));
}

TEST_CASE("crosscheck agrees on ternary systems") {
    Rng rng(205);
    int skipped = 0, checked = 0;
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Polynomial> forms;
        for (int i = 0; i < 3; ++i)
            forms.push_back(random_dense_form(rng, 3, rng.range(1, 2), 5, 1));
        try {
            ResultantValue v =
                resultant(make_system(forms), ResultantMode::Crosscheck);
            CHECK(std::string(to_string(v.method)) == "macaulay");
            ++checked;
        } catch (const Error& e) {
            bool degenerate =
                e.code() == ErrorCode::DegenerateMinor ||
                e.code() == ErrorCode::PoissonPreconditionFailed;
            CHECK(degenerate);
            ++skipped;
        }
    }
    CHECK(checked >= 12);
    CHECK(skipped <= 8);
}

TEST_CASE("scaling one form scales the value by its certificate degree") {
    Rng rng(206);
    int skipped = 0;
    for (int iter = 0; iter < 20; ++iter) {
        int n = iter % 2 == 0 ? 1 : 2;
        int max_d = n == 1 ? 3 : 2;
        std::vector<Polynomial> forms;
        for (int i = 0; i <= n; ++i)
            forms.push_back(
                random_dense_form(rng, n + 1, rng.range(1, max_d), 5, 1));
        ResultantValue base;
        try {
            base = resultant(make_system(forms));
        } catch (const Error&) {
            ++skipped;
            continue;
        }
        Rational lambda = rng.rational(5, 3);
        for (std::size_t i = 0; i < forms.size(); ++i) {
            std::vector<Polynomial> scaled = forms;
            scaled[i] = scale(forms[i], lambda);
            ResultantValue v = resultant(make_system(scaled));
            long k = base.degrees_certificate[i].get_si();
            CHECK(v.value == rational_pow(lambda, k) * base.value);
        }
    }
    CHECK(skipped <= 6);
}

TEST_CASE("multiplicativity in one slot") {
    Rng rng(207);
    for (int iter = 0; iter < 25; ++iter) {
        Polynomial f = random_dense_form(rng, 2, rng.range(1, 2), 5, 1);
        Polynomial g = random_dense_form(rng, 2, rng.range(1, 2), 5, 1);
        Polynomial h = random_dense_form(rng, 2, rng.range(1, 3), 5, 1);
        CHECK(sylvester_resultant(f * g, h) ==
              sylvester_resultant(f, h) * sylvester_resultant(g, h));
        CHECK(macaulay_resultant(make_system({f * g, h})).value ==
              sylvester_resultant(f, h) * sylvester_resultant(g, h));
    }

    int skipped = 0;
    for (int iter = 0; iter < 12; ++iter) {
        Polynomial f = random_dense_form(rng, 3, rng.range(1, 2), 3, 1);
        Polynomial g = random_dense_form(rng, 3, rng.range(1, 2), 3, 1);
        Polynomial p = random_dense_form(rng, 3, rng.range(1, 2), 3, 1);
        Polynomial q = random_dense_form(rng, 3, rng.range(1, 2), 3, 1);
        try {
            Rational lhs = resultant(make_system({f * g, p, q})).value;
            Rational rf = resultant(make_system({f, p, q})).value;
            Rational rg = resultant(make_system({g, p, q})).value;
            CHECK(lhs == rf * rg);
        } catch (const Error&) {
            ++skipped;
        }
    }
    CHECK(skipped <= 4);
}

TEST_CASE("permuting forms preserves magnitude with a constant sign") {
    Rng rng(208);
    for (int iter = 0; iter < 30; ++iter) {
        int df = rng.range(1, 3), dg = rng.range(1, 3);
        Polynomial f = random_dense_form(rng, 2, df, 9, 2);
        Polynomial g = random_dense_form(rng, 2, dg, 9, 2);
        Rational sign = df * dg % 2 == 0 ? Rational(1) : Rational(-1);
        CHECK(sylvester_resultant(g, f) ==
              sign * sylvester_resultant(f, g));
    }

    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    std::array<Rational, 6> first_ratio;
    std::array<bool, 6> seen{};
    int usable = 0;
    for (int iter = 0; iter < 8; ++iter) {
        std::vector<Polynomial> forms = {
            random_dense_form(rng, 3, 1, 5, 1),
            random_dense_form(rng, 3, 2, 5, 1),
            random_dense_form(rng, 3, 2, 5, 1),
        };
        Rational base;
        std::array<Rational, 6> ratio;
        try {
            base = resultant(make_system(forms)).value;
            if (base == 0) continue;
            for (std::size_t k = 0; k < perms.size(); ++k)
                ratio[k] =
                    resultant(make_system(apply_permutation(forms, perms[k])))
                        .value /
                    base;
        } catch (const Error&) {
            continue;
        }
        ++usable;
        for (std::size_t k = 0; k < perms.size(); ++k) {
            CHECK((ratio[k] == 1 || ratio[k] == -1));
            if (!seen[k]) {
                first_ratio[k] = ratio[k];
                seen[k] = true;
            } else {
                CHECK(ratio[k] == first_ratio[k]);
            }
        }
    }
    CHECK(usable >= 5);
}

TEST_CASE("a common zero forces the resultant to vanish") {
    Rng rng(209);
    int skipped = 0;
    for (int iter = 0; iter < 20; ++iter) {
        int n = iter % 2 == 0 ? 1 : 2;
        int max_d = n == 1 ? 3 : 2;
        std::vector<Polynomial> forms;
        bool bad = false;
        for (int i = 0; i <= n && !bad; ++i) {
            Polynomial f = random_dense_form(rng, n + 1, rng.range(1, max_d), 5, 1);
            // Cancel the coefficient sum so (1 : 1 : ... : 1) is a zero.
            f -= Polynomial::term(
                Monomial::variable(n + 1, 0, f.total_degree()), eval_at_ones(f));
            if (f.is_zero()) bad = true;
            forms.push_back(f);
        }
        if (bad) continue;
        if (n == 1)
            CHECK(sylvester_resultant(forms[0], forms[1]) == Rational(0));
        try {
            Rational value = resultant(make_system(forms)).value;
            CHECK(value == Rational(0));
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BothPathsDegenerate);
            ++skipped;
        }
    }
    CHECK(skipped <= 6);
}

TEST_CASE("degenerate minors fall back to poisson") {
    MacaulaySystem sys = sys_of(
        {"x0^2+x0*x1+x1^2+x0*x2", "x0^2+x1^2+x1*x2+x2^2", "x0*x1+x2^2"}, 3);
    try {
        macaulay_resultant(sys);
        FAIL("expected DegenerateMinor");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateMinor);
    }
    try {
        resultant(sys, ResultantMode::Crosscheck);
        FAIL("expected DegenerateMinor");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateMinor);
    }

    ResultantValue v = resultant(sys);
    CHECK(std::string(to_string(v.method)) == "poisson");

    // A unimodular change of coordinates fixes the minor without changing
    // the value, which confirms the fallback independently.
    std::vector<Polynomial> images = {pp("x0", 3), pp("x0+x1", 3),
                                      pp("x2", 3)};
    std::vector<Polynomial> moved;
    for (const Polynomial& f : sys.forms) moved.push_back(compose(f, images));
    CHECK(macaulay_resultant(make_system(moved)).value == v.value);
}

TEST_CASE("both elimination paths can fail honestly") {
    MacaulaySystem sys = sys_of({"x0*x1+x2^2", "x0^2+x0*x1", "x1^2"}, 3);
    try {
        resultant(sys);
        FAIL("expected BothPathsDegenerate");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BothPathsDegenerate);
        CHECK(std::string(e.what()).find("minor") != std::string::npos);
    }
}
