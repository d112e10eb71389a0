#include "elim/chi.hpp"

#include <cstdint>

#include "elim/error.hpp"

namespace elim {

Rational ChiFunction::operator()(const DegreeVector& d) const {
    if (static_cast<int>(d.size()) != arity)
        throw Error(ErrorCode::ArityMismatch,
                    "degree vector has " + std::to_string(d.size()) +
                        " slots, chi expects " + std::to_string(arity));
    return eval(d);
}

Rational chi_projective(int n, long long d) {
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "dimension must be >= 0");
    Integer num = 1;
    Integer fact = 1;
    for (int k = 1; k <= n; ++k) {
        num *= to_integer(d) + k;
        fact *= k;
    }
    Rational r(num, fact);
    r.canonicalize();
    return r;
}

ChiFunction chi_projective_fn(int n, int arity) {
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "dimension must be >= 0");
    if (arity < 1)
        throw Error(ErrorCode::InvalidArgument, "arity must be >= 1");
    ChiFunction chi;
    chi.arity = arity;
    chi.eval = [n](const DegreeVector& d) -> Rational {
        long long total = 0;
        for (long long di : d) total += di;
        return chi_projective(n, total);
    };
    return chi;
}

Rational intersection_number(const ChiFunction& chi,
                             const std::vector<DegreeVector>& classes) {
    const std::size_t p = classes.size();
    if (p < 1)
        throw Error(ErrorCode::InvalidArgument,
                    "intersection number needs at least one class");
    if (p > 62)
        throw Error(ErrorCode::InvalidArgument, "too many classes");
    for (const auto& c : classes)
        if (static_cast<int>(c.size()) != chi.arity)
            throw Error(ErrorCode::ArityMismatch,
                        "class arity differs from chi arity");

    Rational total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p); ++mask) {
        DegreeVector sum(chi.arity, 0);
        int k = 0;
        for (std::size_t i = 0; i < p; ++i) {
            if (mask >> i & 1) {
                ++k;
                for (int j = 0; j < chi.arity; ++j) sum[j] += classes[i][j];
            }
        }
        Rational term = chi(sum);
        if ((p - k) % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

Integer koszul_length(const std::vector<long long>& degrees) {
    Integer len = 1;
    for (long long d : degrees) {
        if (d < 1)
            throw Error(ErrorCode::InvalidArgument,
                        "koszul_length needs degrees >= 1");
        len *= to_integer(d);
    }
    return len;
}

ChiFunction difference_operator(const ChiFunction& chi,
                                const DegreeVector& direction) {
    if (static_cast<int>(direction.size()) != chi.arity)
        throw Error(ErrorCode::ArityMismatch,
                    "direction arity differs from chi arity");
    ChiFunction out;
    out.arity = chi.arity;
    out.eval = [chi, direction](const DegreeVector& t) -> Rational {
        DegreeVector shifted = t;
        for (std::size_t i = 0; i < shifted.size(); ++i)
            shifted[i] += direction[i];
        return chi(shifted) - chi(t);
    };
    return out;
}

}  // namespace elim
