#include "elim/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace elim {

std::vector<Monomial> monomials_of_degree(int n_vars, int degree) {
    std::vector<Monomial> out;
    Monomial m(n_vars);
    // Odometer over exponent vectors of the given total degree.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n_vars - 1) {
            m.exp[static_cast<std::size_t>(var)] = remaining;
            out.push_back(m);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            m.exp[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
        m.exp[static_cast<std::size_t>(var)] = 0;
    };
    if (n_vars == 0) {
        if (degree == 0) out.push_back(Monomial(0));
        return out;
    }
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), listing_less);
    return out;
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.n_vars(); ++i) {
        int e = m.exp[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(i);
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

Polynomial::Polynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 0)
        throw Error(ErrorCode::InvalidArgument, "negative variable count");
}

Polynomial Polynomial::constant(int n_vars, const Rational& c) {
    Polynomial p(n_vars);
    p.add_term(Monomial(n_vars), c);
    return p;
}

Polynomial Polynomial::variable(int n_vars, int i) {
    if (i < 0 || i >= n_vars)
        throw Error(ErrorCode::VariableOutOfRange,
                    "variable x" + std::to_string(i) + " out of range");
    Polynomial p(n_vars);
    p.add_term(Monomial::variable(n_vars, i), 1);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.n_vars());
    p.add_term(m, c);
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_coefficient() const {
    return coefficient(Monomial(n_vars_));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.n_vars() != n_vars_)
        throw Error(ErrorCode::ArityMismatch, "term arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    if (n_vars_ != q.n_vars_)
        throw Error(ErrorCode::ArityMismatch, "polynomial arity mismatch");
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    if (n_vars_ != q.n_vars_)
        throw Error(ErrorCode::ArityMismatch, "polynomial arity mismatch");
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.n_vars_ != q.n_vars_)
        throw Error(ErrorCode::ArityMismatch, "polynomial arity mismatch");
    Polynomial r(p.n_vars_);
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != n_vars_)
        throw Error(ErrorCode::ArityMismatch, "evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < n_vars_; ++i) {
            int e = m.exp[static_cast<std::size_t>(i)];
            if (e != 0) t *= rational_pow(point[static_cast<std::size_t>(i)], e);
        }
        acc += t;
    }
    return acc;
}

Polynomial scale(const Polynomial& p, const Rational& c) {
    Polynomial r(p.n_vars());
    if (c == 0) return r;
    for (const auto& [m, k] : p.terms()) r.add_term(m, k * c);
    return r;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial r = Polynomial::constant(p.n_vars(), 1);
    Polynomial base = p;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

HomogeneousDegree homogeneous_degree(const Polynomial& p) {
    if (p.is_zero()) return {HomogeneousDegree::Kind::ZeroPoly, 0};
    int d = p.terms().begin()->first.degree();
    for (const auto& [m, c] : p.terms())
        if (m.degree() != d) return {HomogeneousDegree::Kind::NotHomogeneous, 0};
    return {HomogeneousDegree::Kind::Homogeneous, d};
}

Polynomial restrict_to_hyperplane(const Polynomial& p, int i) {
    if (i < 0 || i >= p.n_vars())
        throw Error(ErrorCode::IndexOutOfRange, "hyperplane index out of range");
    Polynomial r(p.n_vars());
    for (const auto& [m, c] : p.terms())
        if (m.exp[static_cast<std::size_t>(i)] == 0) r.add_term(m, c);
    return r;
}

Polynomial dehomogenize(const Polynomial& p, int i) {
    if (i < 0 || i >= p.n_vars())
        throw Error(ErrorCode::IndexOutOfRange, "dehomogenization index out of range");
    Polynomial r(p.n_vars() - 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial q(p.n_vars() - 1);
        std::size_t k = 0;
        for (int v = 0; v < p.n_vars(); ++v) {
            if (v == i) continue;
            q.exp[k++] = m.exp[static_cast<std::size_t>(v)];
        }
        r.add_term(q, c);
    }
    return r;
}

namespace {

// Recursive-descent parser for the grammar
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := 'x' INDEX ('^' POSINT)?
//   coeff  := INT | INT '/' POSINT
// Whitespace is insignificant between tokens; the INDEX must follow 'x'
// immediately.
class Parser {
public:
    Parser(const std::string& text, int n_vars) : s_(text), n_(n_vars) {}

    Polynomial run() {
        Polynomial p(n_);
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (get() == '-') sign = -1;
        }
        parse_term(p, sign);
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            sign = get() == '-' ? -1 : 1;
            parse_term(p, sign);
            skip_ws();
        }
        if (pos_ != s_.size())
            fail("'+', '-' or end of input");
        return p;
    }

private:
    const std::string& s_;
    int n_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) {
        throw Error(ErrorCode::SyntaxError,
                    "syntax error at position " + std::to_string(pos_) +
                        ": expected " + expected,
                    pos_);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }

    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start) fail("a digit");
        return s_.substr(start, pos_ - start);
    }

    Rational parse_coeff() {
        Integer num(digits());
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            Integer den(digits());
            if (den == 0) fail("a positive denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    void parse_factor(Monomial& m) {
        skip_ws();
        if (peek() != 'x') fail("'x'");
        ++pos_;
        std::size_t ipos = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("a variable index");
        std::string idx = digits();
        if (idx.size() > 6)
            throw Error(ErrorCode::VariableOutOfRange,
                        "variable index too large at position " + std::to_string(ipos));
        int i = std::stoi(idx);
        if (i >= n_)
            throw Error(ErrorCode::VariableOutOfRange,
                        "variable x" + idx + " out of range (n_vars = " +
                            std::to_string(n_) + ")");
        skip_ws();
        int e = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::string es = digits();
            if (es.size() > 6) fail("a reasonable exponent");
            e = std::stoi(es);
            if (e == 0) fail("a positive exponent");
        }
        m.exp[static_cast<std::size_t>(i)] += e;
    }

    void parse_term(Polynomial& p, int sign) {
        skip_ws();
        Rational c(1);
        Monomial m(n_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = parse_coeff();
        } else {
            parse_factor(m);
        }
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            parse_factor(m);
            skip_ws();
        }
        p.add_term(m, sign == -1 ? Rational(-c) : c);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, int n_vars) {
    if (n_vars <= 0)
        throw Error(ErrorCode::InvalidArgument, "n_vars must be positive");
    return Parser(text, n_vars).run();
}

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    // Leading term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = c < 0;
        Rational a = negative ? Rational(-c) : c;
        if (s.empty()) {
            if (negative) s += '-';
        } else {
            s += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            s += to_string(a);
        } else if (a == 1) {
            s += to_string(m);
        } else {
            s += to_string(a);
            s += '*';
            s += to_string(m);
        }
    }
    return s;
}

} // namespace elim
