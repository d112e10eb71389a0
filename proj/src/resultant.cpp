#include "elim/resultant.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "elim/error.hpp"
#include "elim/groebner.hpp"

namespace elim {

namespace {

int checked_form_degree(const Polynomial& f, int index) {
    HomogeneousDegree h = homogeneous_degree(f);
    if (h.kind == HomogeneousDegree::Kind::ZeroPoly)
        throw Error(ErrorCode::InvalidSystem,
                    "form " + std::to_string(index) + " is zero");
    if (h.kind == HomogeneousDegree::Kind::NotHomogeneous)
        throw Error(ErrorCode::NotHomogeneous,
                    "form " + std::to_string(index) + " is not homogeneous");
    if (h.degree < 1)
        throw Error(ErrorCode::InvalidSystem,
                    "form " + std::to_string(index) + " is a constant");
    return h.degree;
}

// The restriction to the hyperplane x_{n-1} = 0 leaves a dead slot behind;
// this removes it so the recursion genuinely shrinks.
Polynomial drop_last_variable(const Polynomial& p) {
    int n = p.n_vars();
    Polynomial out = Polynomial::zero(n - 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial shrunk(n - 1);
        for (int v = 0; v + 1 < n; ++v) shrunk.exp[v] = m.exp[v];
        out.add_term(shrunk, c);
    }
    return out;
}

}  // namespace

MacaulaySystem make_system(const std::vector<Polynomial>& forms) {
    if (forms.empty())
        throw Error(ErrorCode::InvalidSystem, "a system needs at least one form");
    MacaulaySystem sys;
    sys.n = static_cast<int>(forms.size()) - 1;
    sys.forms = forms;
    int vars = sys.n + 1;
    sys.nu = 1;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].n_vars() != vars)
            throw Error(ErrorCode::WrongArity,
                        std::to_string(forms.size()) + " forms need " +
                            std::to_string(vars) + " variables, form " +
                            std::to_string(i) + " has " +
                            std::to_string(forms[i].n_vars()));
        int d = checked_form_degree(forms[i], static_cast<int>(i));
        sys.degrees.push_back(d);
        sys.nu += d - 1;
    }
    return sys;
}

MacaulaySystem make_system(const std::vector<Polynomial>& forms,
                           const std::vector<int>& degrees) {
    MacaulaySystem sys = make_system(forms);
    if (degrees != sys.degrees)
        throw Error(ErrorCode::InvalidSystem,
                    "declared degrees do not match the forms");
    return sys;
}

const char* to_string(ResultantMethod method) {
    switch (method) {
        case ResultantMethod::Sylvester: return "sylvester";
        case ResultantMethod::Macaulay: return "macaulay";
        case ResultantMethod::Poisson: return "poisson";
    }
    return "?";
}

std::vector<Integer> resultant_degrees(const std::vector<int>& degrees) {
    if (degrees.empty())
        throw Error(ErrorCode::InvalidSystem, "empty degree list");
    for (int d : degrees)
        if (d < 1)
            throw Error(ErrorCode::InvalidSystem, "degrees must be positive");
    std::vector<Integer> out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        Integer k(1);
        for (std::size_t j = 0; j < degrees.size(); ++j)
            if (j != i) k *= degrees[j];
        out.push_back(k);
    }
    return out;
}

Rational sylvester_resultant(const Polynomial& f, const Polynomial& g) {
    if (f.n_vars() != 2 || g.n_vars() != 2)
        throw Error(ErrorCode::WrongArity, "sylvester needs binary forms");
    HomogeneousDegree hf = homogeneous_degree(f);
    HomogeneousDegree hg = homogeneous_degree(g);
    if (hf.kind != HomogeneousDegree::Kind::Homogeneous ||
        hg.kind != HomogeneousDegree::Kind::Homogeneous)
        throw Error(ErrorCode::NotHomogeneous,
                    "sylvester needs nonzero homogeneous inputs");
    int df = hf.degree;
    int dg = hg.degree;
    // Coefficients by falling x0-power, so row r of the f block carries
    // f shifted r columns to the right.
    std::vector<Rational> a(df + 1), b(dg + 1);
    for (int k = 0; k <= df; ++k)
        a[k] = f.coefficient(Monomial::variable(2, 0, df - k) *
                             Monomial::variable(2, 1, k));
    for (int k = 0; k <= dg; ++k)
        b[k] = g.coefficient(Monomial::variable(2, 0, dg - k) *
                             Monomial::variable(2, 1, k));
    int size = df + dg;
    RationalMatrix m = RationalMatrix::Zero(size, size);
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) m(r, r + k) = a[k];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k) m(dg + r, r + k) = b[k];
    return determinant(m);
}

MacaulayData macaulay_matrix(const MacaulaySystem& sys) {
    int vars = sys.n + 1;
    MacaulayData data;
    data.monomials = monomials_of_degree(vars, sys.nu);
    int size = static_cast<int>(data.monomials.size());

    std::map<Monomial, int, GrevlexLess> column;
    for (int j = 0; j < size; ++j) column[data.monomials[j]] = j;

    data.m = RationalMatrix::Zero(size, size);
    data.row_form.resize(size);
    for (int r = 0; r < size; ++r) {
        const Monomial& mono = data.monomials[r];
        int owner = -1;
        int owners = 0;
        for (int i = 0; i < vars; ++i) {
            if (mono.exp[i] >= sys.degrees[i]) {
                ++owners;
                if (owner < 0) owner = i;
            }
        }
        if (owner < 0)
            throw Error(ErrorCode::UnassignedMonomial,
                        "no x_i^{d_i} divides " + to_string(mono));
        data.row_form[r] = owner;
        if (owners >= 2) {
            data.minor_rows.push_back(r);
            data.minor_cols.push_back(r);
        }
        Monomial shift =
            quotient(mono, Monomial::variable(vars, owner, sys.degrees[owner]));
        Polynomial row = sys.forms[owner] * Polynomial::term(shift, Rational(1));
        for (const auto& [mm, c] : row.terms()) data.m(r, column.at(mm)) = c;
    }
    return data;
}

ResultantValue macaulay_resultant(const MacaulaySystem& sys) {
    MacaulayData data = macaulay_matrix(sys);
    Rational minor = determinant(submatrix(data.m, data.minor_rows, data.minor_cols));
    if (minor == 0)
        throw Error(ErrorCode::DegenerateMinor,
                    "extraneous minor vanishes; the poisson path may still apply");
    ResultantValue out;
    out.value = determinant(data.m) / minor;
    out.method = ResultantMethod::Macaulay;
    out.degrees_certificate = resultant_degrees(sys.degrees);
    return out;
}

ResultantValue poisson_resultant(const MacaulaySystem& sys) {
    ResultantValue out;
    out.method = ResultantMethod::Poisson;
    out.degrees_certificate = resultant_degrees(sys.degrees);

    if (sys.n == 0) {
        out.value =
            sys.forms[0].coefficient(Monomial::variable(1, 0, sys.degrees[0]));
        return out;
    }

    int last = sys.n;
    std::vector<Polynomial> restricted;
    std::vector<int> restricted_degrees(sys.degrees.begin(),
                                        sys.degrees.end() - 1);
    for (int i = 0; i < last; ++i) {
        Polynomial r = restrict_to_hyperplane(sys.forms[i], last);
        if (r.is_zero())
            throw Error(ErrorCode::PoissonPreconditionFailed,
                        "form " + std::to_string(i) +
                            " vanishes on the hyperplane at infinity");
        restricted.push_back(drop_last_variable(r));
    }
    ResultantValue rec =
        poisson_resultant(make_system(restricted, restricted_degrees));
    if (rec.value == 0)
        throw Error(ErrorCode::PoissonPreconditionFailed,
                    "restricted system has resultant zero");

    std::vector<Polynomial> affine;
    for (int i = 0; i < last; ++i)
        affine.push_back(dehomogenize(sys.forms[i], last));
    GroebnerBasis gb = buchberger(affine);
    QuotientAlgebra alg;
    try {
        alg = quotient_algebra(gb);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotZeroDimensional)
            throw Error(ErrorCode::PoissonPreconditionFailed,
                        std::string("dehomogenized ideal is not "
                                    "zero-dimensional: ") +
                            e.what());
        throw;
    }
    Rational factor = norm(alg, gb, dehomogenize(sys.forms[last], last));
    out.value = rational_pow(rec.value, sys.degrees[last]) * factor;
    return out;
}

ResultantValue resultant(const MacaulaySystem& sys, ResultantMode mode) {
    switch (mode) {
        case ResultantMode::Macaulay:
            return macaulay_resultant(sys);
        case ResultantMode::Poisson:
            return poisson_resultant(sys);
        case ResultantMode::Auto: {
            try {
                return macaulay_resultant(sys);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::DegenerateMinor) throw;
                try {
                    return poisson_resultant(sys);
                } catch (const Error& p) {
                    if (p.code() != ErrorCode::PoissonPreconditionFailed) throw;
                    throw Error(ErrorCode::BothPathsDegenerate,
                                std::string(e.what()) + "; " + p.what());
                }
            }
        }
        case ResultantMode::Crosscheck: {
            ResultantValue a = macaulay_resultant(sys);
            ResultantValue b = poisson_resultant(sys);
            if (a.value != b.value)
                throw Error(ErrorCode::CrosscheckMismatch,
                            "macaulay gives " + to_string(a.value) +
                                ", poisson gives " + to_string(b.value));
            return a;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown resultant mode");
}

}  // namespace elim
