#include "elim/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "elim/chi.hpp"
#include "elim/cube.hpp"
#include "elim/error.hpp"
#include "elim/groebner.hpp"
#include "elim/random.hpp"
#include "elim/resultant.hpp"

namespace elim {

namespace {

class Property {
public:
    explicit Property(const std::string& name) { result_.name = name; }

    void instance(int index, bool ok, const std::string& message = "mismatch") {
        ++result_.checked;
        if (ok) return;
        ++result_.failed;
        if (result_.failures.size() < 5)
            result_.failures.emplace_back(index, message);
    }

    void skip() { ++result_.skipped; }

    int checked() const { return result_.checked; }

    PropertyResult finish(int required) {
        result_.pass = result_.failed == 0 && result_.checked >= required;
        return result_;
    }

    // Degenerate draws must also stay a minority.
    PropertyResult finish_minority(int required) {
        result_.pass = result_.failed == 0 && result_.checked >= required &&
                       result_.skipped < result_.checked;
        return result_;
    }

private:
    PropertyResult result_;
};

bool is_degenerate(const Error& e) {
    return e.code() == ErrorCode::DegenerateMinor ||
           e.code() == ErrorCode::PoissonPreconditionFailed ||
           e.code() == ErrorCode::BothPathsDegenerate;
}

PropertyResult bezout_intersection(std::uint64_t seed) {
    Property prop("bezout-intersection");
    Rng rng(seed);
    int index = 0;
    for (int n = 1; n <= 3; ++n) {
        ChiFunction chi = chi_projective_fn(n, 1);
        for (int iter = 0; iter < 200; ++iter, ++index) {
            std::vector<DegreeVector> classes;
            std::vector<long long> degrees;
            long long expected = 1;
            for (int i = 0; i < n; ++i) {
                long long d = rng.range(1, 4);
                classes.push_back({d});
                degrees.push_back(d);
                expected *= d;
            }
            bool ok =
                intersection_number(chi, classes) ==
                    Rational(to_integer(expected)) &&
                koszul_length(degrees) == to_integer(expected);
            prop.instance(index, ok);
        }
    }
    return prop.finish(600);
}

PropertyResult vanishing_bilinearity(std::uint64_t seed) {
    Property prop("vanishing-and-bilinearity");
    Rng rng(seed);
    int index = 0;
    for (int n = 1; n <= 3; ++n) {
        ChiFunction chi = chi_projective_fn(n, 1);
        for (int iter = 0; iter < 200; ++iter, ++index) {
            // n+1 twists on P^n: the alternating sum collapses to zero.
            std::vector<DegreeVector> overfull;
            for (int i = 0; i <= n; ++i)
                overfull.push_back({static_cast<long long>(rng.range(-5, 5))});
            bool ok = intersection_number(chi, overfull) == 0;

            // Additivity in one slot of the n-fold bracket, which is what
            // the vanishing buys.
            std::vector<DegreeVector> slots(overfull.begin(),
                                            overfull.end() - 1);
            int j = rng.range(0, n - 1);
            std::vector<DegreeVector> left = slots, right = slots;
            left[j][0] = rng.range(-5, 5);
            right[j][0] = slots[j][0] - left[j][0];
            ok = ok && intersection_number(chi, slots) ==
                           intersection_number(chi, left) +
                               intersection_number(chi, right);
            prop.instance(index, ok);
        }
    }
    return prop.finish(600);
}

PropertyResult sylvester_agreement(std::uint64_t seed) {
    Property prop("sylvester-agreement");
    Rng rng(seed);
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial f = random_dense_form(rng, 2, rng.range(1, 4), 9, 2);
        Polynomial g = random_dense_form(rng, 2, rng.range(1, 4), 9, 2);
        try {
            Rational s = sylvester_resultant(f, g);
            MacaulaySystem sys = make_system({f, g});
            bool ok = macaulay_resultant(sys).value == s &&
                      poisson_resultant(sys).value == s;
            prop.instance(iter, ok);
        } catch (const Error& e) {
            prop.instance(iter, false, e.what());
        }
    }
    return prop.finish(100);
}

PropertyResult macaulay_poisson_crosscheck(std::uint64_t seed) {
    Property prop("macaulay-poisson-crosscheck");
    Rng rng(seed);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Polynomial> forms;
        for (int i = 0; i < 3; ++i)
            forms.push_back(random_dense_form(rng, 3, rng.range(1, 3), 9, 2));
        try {
            resultant(make_system(forms), ResultantMode::Crosscheck);
            prop.instance(iter, true);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::DegenerateMinor ||
                e.code() == ErrorCode::PoissonPreconditionFailed)
                prop.skip();
            else
                prop.instance(iter, false, e.what());
        }
    }
    return prop.finish_minority(1);
}

PropertyResult quasi_homogeneity(std::uint64_t seed) {
    Property prop("quasi-homogeneity");
    Rng rng(seed);
    int index = 0;
    while (prop.checked() < 50 && index < 150) {
        int cur = index++;
        int n = rng.range(1, 2);
        int max_d = n == 1 ? 3 : 2;
        std::vector<Polynomial> forms;
        for (int i = 0; i <= n; ++i)
            forms.push_back(
                random_dense_form(rng, n + 1, rng.range(1, max_d), 5, 2));
        try {
            ResultantValue base = resultant(make_system(forms));
            Rational lambda = rng.rational(5, 3);
            bool ok = true;
            for (std::size_t i = 0; i < forms.size() && ok; ++i) {
                std::vector<Polynomial> scaled = forms;
                scaled[i] = scale(forms[i], lambda);
                Rational expect =
                    rational_pow(lambda, base.degrees_certificate[i].get_si()) *
                    base.value;
                ok = resultant(make_system(scaled)).value == expect;
            }
            prop.instance(cur, ok);
        } catch (const Error& e) {
            if (is_degenerate(e))
                prop.skip();
            else
                prop.instance(cur, false, e.what());
        }
    }
    return prop.finish(50);
}

PropertyResult multiplicativity(std::uint64_t seed) {
    Property prop("multiplicativity");
    Rng rng(seed);
    int index = 0;
    while (prop.checked() < 50 && index < 150) {
        int cur = index++;
        int n = rng.range(1, 2);
        Polynomial f = random_dense_form(rng, n + 1, rng.range(1, 2), 4, 1);
        Polynomial g = random_dense_form(rng, n + 1, rng.range(1, 2), 4, 1);
        std::vector<Polynomial> rest;
        for (int i = 0; i < n; ++i)
            rest.push_back(random_dense_form(rng, n + 1, rng.range(1, 2), 4, 1));
        auto with_first = [&](const Polynomial& first) -> Rational {
            std::vector<Polynomial> forms = {first};
            forms.insert(forms.end(), rest.begin(), rest.end());
            return resultant(make_system(forms)).value;
        };
        try {
            bool ok = with_first(f * g) == with_first(f) * with_first(g);
            prop.instance(cur, ok);
        } catch (const Error& e) {
            if (is_degenerate(e))
                prop.skip();
            else
                prop.instance(cur, false, e.what());
        }
    }
    return prop.finish(50);
}

PropertyResult symmetry(std::uint64_t seed) {
    Property prop("symmetry");
    Rng rng(seed);
    int index = 0;

    static const std::array<std::array<int, 2>, 3> binary_profiles = {{
        {1, 2}, {2, 2}, {2, 3},
    }};
    for (const auto& profile : binary_profiles) {
        for (int iter = 0; iter < 30; ++iter, ++index) {
            Polynomial f = random_dense_form(rng, 2, profile[0], 9, 2);
            Polynomial g = random_dense_form(rng, 2, profile[1], 9, 2);
            Rational sign =
                profile[0] * profile[1] % 2 == 0 ? Rational(1) : Rational(-1);
            prop.instance(index, sylvester_resultant(g, f) ==
                                     sign * sylvester_resultant(f, g));
        }
    }

    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    static const std::array<std::array<int, 3>, 2> ternary_profiles = {{
        {1, 1, 2}, {1, 2, 2},
    }};
    for (const auto& profile : ternary_profiles) {
        std::array<Rational, 6> first_ratio;
        std::array<bool, 6> seen{};
        int usable = 0, draws = 0;
        while (usable < 30 && draws < 90) {
            ++draws;
            int cur = index++;
            std::vector<Polynomial> forms;
            for (int d : profile)
                forms.push_back(random_dense_form(rng, 3, d, 5, 1));
            try {
                Rational base = resultant(make_system(forms)).value;
                if (base == 0) {
                    prop.skip();
                    continue;
                }
                bool ok = true;
                std::string msg = "mismatch";
                for (std::size_t k = 0; k < perms.size() && ok; ++k) {
                    std::vector<Polynomial> permuted;
                    for (int t : perms[k]) permuted.push_back(forms[t]);
                    Rational ratio =
                        resultant(make_system(permuted)).value / base;
                    if (ratio != 1 && ratio != -1) {
                        ok = false;
                        msg = "magnitude changed under permutation";
                    } else if (!seen[k]) {
                        first_ratio[k] = ratio;
                        seen[k] = true;
                    } else if (ratio != first_ratio[k]) {
                        ok = false;
                        msg = "permutation sign not constant";
                    }
                }
                prop.instance(cur, ok, msg);
                ++usable;
            } catch (const Error& e) {
                if (is_degenerate(e))
                    prop.skip();
                else
                    prop.instance(cur, false, e.what());
            }
        }
    }
    return prop.finish(150);
}

PropertyResult normalization_zero_witnesses(std::uint64_t seed) {
    Property prop("normalization-and-zero-witnesses");
    Rng rng(seed);
    int index = 0;

    for (int iter = 0; iter < 20; ++iter, ++index) {
        int n = rng.range(1, 2);
        std::vector<Polynomial> forms;
        for (int i = 0; i <= n; ++i)
            forms.push_back(Polynomial::term(
                Monomial::variable(n + 1, i, rng.range(1, 3)), Rational(1)));
        prop.instance(index, resultant(make_system(forms)).value == 1);
    }

    int witnessed = 0, draws = 0;
    while (witnessed < 20 && draws < 60) {
        ++draws;
        int cur = index++;
        int n = rng.range(1, 2);
        int max_d = n == 1 ? 3 : 2;
        std::vector<Polynomial> forms;
        for (int i = 0; i <= n; ++i) {
            Polynomial f =
                random_dense_form(rng, n + 1, rng.range(1, max_d), 5, 1);
            // Cancel the coefficient sum, planting a zero at (1:1:...:1).
            std::vector<Rational> ones(n + 1, Rational(1));
            f -= Polynomial::term(
                Monomial::variable(n + 1, 0, f.total_degree()), f.evaluate(ones));
            forms.push_back(f);
        }
        try {
            Rational value = resultant(make_system(forms)).value;
            prop.instance(cur, value == 0);
            ++witnessed;
        } catch (const Error& e) {
            if (is_degenerate(e))
                prop.skip();
            else
                prop.instance(cur, false, e.what());
        }
    }

    for (int iter = 0; iter < 20; ++iter, ++index) {
        int n = rng.range(1, 3);
        std::vector<Polynomial> forms;
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i <= n; ++i) {
            forms.push_back(random_dense_form(rng, n + 1, 1, 9, 2));
            std::vector<Rational> row;
            for (int j = 0; j <= n; ++j)
                row.push_back(forms[i].coefficient(Monomial::variable(n + 1, j)));
            rows.push_back(row);
        }
        prop.instance(index, macaulay_resultant(make_system(forms)).value ==
                                 determinant(matrix_from_rows(rows)));
    }
    return prop.finish(60);
}

PropertyResult norm_suite(std::uint64_t seed) {
    Property prop("norm-suite");
    Rng rng(seed);
    for (int iter = 0; iter < 50; ++iter) {
        int n = rng.range(1, 3);
        std::vector<Polynomial> gens;
        for (int v = 0; v < n; ++v) {
            int e = rng.range(1, 3);
            Polynomial g =
                Polynomial::term(Monomial::variable(n, v, e), Rational(1)) +
                random_polynomial(rng, n, e - 1, 3, 4);
            gens.push_back(g);
        }
        try {
            GroebnerBasis gb = buchberger(gens);
            QuotientAlgebra alg = quotient_algebra(gb);
            bool ok = norm(alg, gb, Polynomial::constant(n, Rational(1))) == 1;

            Polynomial p = random_polynomial(rng, n, 2, 3, 5);
            Polynomial q = random_polynomial(rng, n, 2, 3, 5);
            ok = ok && norm(alg, gb, p * q) ==
                           norm(alg, gb, p) * norm(alg, gb, q);

            std::vector<Polynomial> pures;
            std::vector<long long> exps;
            for (int v = 0; v < n; ++v) {
                int e = rng.range(1, 3);
                exps.push_back(e);
                pures.push_back(Polynomial::term(Monomial::variable(n, v, e),
                                                 Rational(1)));
            }
            ok = ok && Integer(quotient_basis(buchberger(pures)).size()) ==
                           koszul_length(exps);
            prop.instance(iter, ok);
        } catch (const Error& e) {
            prop.instance(iter, false, e.what());
        }
    }
    return prop.finish(50);
}

PropertyResult cube_calculus(std::uint64_t seed) {
    Property prop("cube-calculus");
    Rng rng(seed);

    auto random_object = [&rng](bool graded) {
        FormalObject o;
        for (int i = 0; i < 3; ++i) {
            long long c = rng.range(-2, 2);
            if (c != 0) o.coefficients["g" + std::to_string(i)] = c;
        }
        if (graded) o.grade = rng.range(-2, 2);
        return o;
    };
    auto random_arrangement = [&](int n, bool graded) {
        CubeArrangement k(n);
        for (unsigned mask = 0; mask < k.vertex_count(); ++mask)
            k.at_mask(mask) = random_object(graded);
        return k;
    };

    for (int iter = 0; iter < 500; ++iter) {
        bool ok = true;
        std::string msg = "mismatch";
        try {
            switch (iter % 7) {
                case 0: {
                    int n = rng.range(1, 4);
                    int i = rng.range(0, n - 1);
                    CubeArrangement a = random_arrangement(n, true);
                    CubeArrangement b =
                        stack(face(a, i, FaceSide::Front),
                              random_arrangement(n - 1, true), i);
                    ok = delta(glue(a, b, i)) == delta(a) + delta(b);
                    msg = "delta not additive across glue";
                    break;
                }
                case 1: {
                    int n = rng.range(1, 4);
                    CubeArrangement r = random_arrangement(n, true);
                    std::vector<int> perm(n);
                    for (int i = 0; i < n; ++i) perm[i] = i;
                    for (int i = n - 1; i > 0; --i)
                        std::swap(perm[i], perm[rng.range(0, i)]);
                    ok = delta(permute(r, perm)) == delta(r);
                    msg = "delta changed under permutation";
                    break;
                }
                case 2: {
                    int ambient = rng.range(1, 3);
                    int arity = rng.range(1, 2);
                    ChiFunction chi = chi_projective_fn(ambient, arity);
                    std::vector<Symbol> universe;
                    for (int j = 0; j < arity; ++j)
                        universe.push_back("g" + std::to_string(j));
                    int p = rng.range(1, 3);
                    std::vector<DegreeVector> classes;
                    std::vector<FormalObject> sides;
                    for (int s = 0; s < p; ++s) {
                        DegreeVector c;
                        FormalObject obj;
                        for (int j = 0; j < arity; ++j) {
                            long long v = rng.range(-3, 3);
                            c.push_back(v);
                            if (v != 0) obj.coefficients[universe[j]] = v;
                        }
                        classes.push_back(c);
                        sides.push_back(obj);
                    }
                    CubeArrangement k =
                        standard_cube(FormalObject::zero(), sides);
                    ok = chi_delta(k, universe, chi) ==
                         intersection_number(chi, classes);
                    msg = "inclusion-exclusion disagrees with the bracket";
                    break;
                }
                case 3: {
                    int n = rng.range(1, 4);
                    int i = rng.range(0, n - 1);
                    CubeArrangement k = random_arrangement(n, true);
                    ok = stack(face(k, i, FaceSide::Back),
                               face(k, i, FaceSide::Front), i) == k;
                    msg = "face split does not reassemble";
                    break;
                }
                case 4: {
                    int n = rng.range(1, 3);
                    int i = rng.range(0, n - 1);
                    CubeArrangement a = random_arrangement(n, false);
                    CubeArrangement b = stack(face(a, i, FaceSide::Front),
                                              random_arrangement(n - 1, false), i);
                    CubeArrangement c = stack(face(b, i, FaceSide::Front),
                                              random_arrangement(n - 1, false), i);
                    ok = glue(glue(a, b, i), c, i) ==
                         glue(a, glue(b, c, i), i);
                    msg = "gluing not associative";
                    break;
                }
                case 5: {
                    long long d1 = rng.range(-3, 3), d2 = rng.range(-3, 3);
                    long long e1 = rng.range(-3, 3), e2 = rng.range(-3, 3);
                    ok = graded_swap_sign(d1 + d2, e1) ==
                             graded_swap_sign(d1, e1) *
                                 graded_swap_sign(d2, e1) &&
                         graded_swap_sign(d1, e1 + e2) ==
                             graded_swap_sign(d1, e1) *
                                 graded_swap_sign(d1, e2) &&
                         graded_swap_sign(d1, e1) *
                                 graded_swap_sign(e1, d1) ==
                             1;
                    msg = "swap sign not bilinear";
                    break;
                }
                default: {
                    int ambient = rng.range(1, 2);
                    ChiFunction chi = chi_projective_fn(ambient, 1);
                    int count = ambient + 2;
                    std::vector<long long> d;
                    for (int t = 0; t < count; ++t) d.push_back(rng.range(-3, 3));
                    // An all-zero cube has an empty symbol universe, which
                    // epsilon_ij rightly rejects; keep one honest degree.
                    if (std::all_of(d.begin(), d.end(),
                                    [](long long v) { return v == 0; }))
                        d.back() = 1;
                    std::vector<FormalObject> sides;
                    for (long long dt : d)
                        sides.push_back(FormalObject::generator("g", dt));
                    CubeArrangement k =
                        standard_cube(FormalObject::zero(), sides);
                    int i = rng.range(0, count - 1);
                    int j = rng.range(0, count - 2);
                    if (j >= i) ++j;
                    long long prod = 1;
                    for (int t = 0; t < count; ++t)
                        if (t != i && t != j) prod *= d[t];
                    int expect = prod % 2 != 0 ? -1 : 1;
                    ok = epsilon_ij(k, i, j, chi) == expect;
                    msg = "square decomposition sign off";
                    break;
                }
            }
        } catch (const Error& e) {
            ok = false;
            msg = e.what();
        }
        prop.instance(iter, ok, msg);
    }
    return prop.finish(500);
}

}  // namespace

std::vector<PropertyResult> run_selftest(std::uint64_t seed) {
    using Step = PropertyResult (*)(std::uint64_t);
    static const std::array<Step, 10> steps = {
        bezout_intersection,     vanishing_bilinearity,
        sylvester_agreement,     macaulay_poisson_crosscheck,
        quasi_homogeneity,       multiplicativity,
        symmetry,                normalization_zero_witnesses,
        norm_suite,              cube_calculus,
    };
    std::vector<PropertyResult> out;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        PropertyResult r =
            steps[k](seed + 0x9e3779b97f4a7c15ULL * (k + 1));
        r.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace elim
