#include "elim/cube.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "elim/error.hpp"

namespace elim {

FormalObject FormalObject::zero() { return FormalObject{}; }

FormalObject FormalObject::generator(const Symbol& name, long long coeff,
                                     long long grade) {
    FormalObject o;
    if (coeff != 0) o.coefficients[name] = coeff;
    o.grade = grade;
    return o;
}

FormalObject& FormalObject::operator+=(const FormalObject& o) {
    for (const auto& [sym, c] : o.coefficients) {
        long long& mine = coefficients[sym];
        mine += c;
        if (mine == 0) coefficients.erase(sym);
    }
    grade += o.grade;
    return *this;
}

FormalObject& FormalObject::operator-=(const FormalObject& o) {
    return *this += -o;
}

FormalObject FormalObject::operator-() const { return -1 * *this; }

bool FormalObject::operator<(const FormalObject& o) const {
    return std::tie(grade, coefficients) < std::tie(o.grade, o.coefficients);
}

FormalObject operator*(long long c, const FormalObject& o) {
    FormalObject r;
    if (c != 0)
        for (const auto& [sym, v] : o.coefficients) r.coefficients[sym] = c * v;
    r.grade = c * o.grade;
    return r;
}

std::string to_string(const FormalObject& o) {
    std::string out;
    for (const auto& [sym, c] : o.coefficients) {
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + "*";
        out += sym;
    }
    if (out.empty()) out = "0";
    if (o.grade != 0) out += " @" + std::to_string(o.grade);
    return out;
}

Vertex::Vertex(std::vector<int> b) : bits(std::move(b)) {
    for (int x : bits)
        if (x != 0 && x != 1)
            throw Error(ErrorCode::InvalidArgument, "vertex bits must be 0 or 1");
}

Vertex Vertex::from_mask(int n, unsigned mask) {
    Vertex v;
    v.bits.resize(n);
    for (int i = 0; i < n; ++i) v.bits[i] = mask >> i & 1;
    return v;
}

int Vertex::weight() const {
    int w = 0;
    for (int b : bits) w += b;
    return w;
}

unsigned Vertex::mask() const {
    unsigned m = 0;
    for (int i = 0; i < dimension(); ++i)
        m |= static_cast<unsigned>(bits[i]) << i;
    return m;
}

std::string to_string(const Vertex& v) {
    std::string out = "(";
    for (int i = 0; i < v.dimension(); ++i) {
        if (i) out += ",";
        out += std::to_string(v.bits[i]);
    }
    return out + ")";
}

int epsilon(const Vertex& s) {
    return (s.dimension() - s.weight()) % 2 == 0 ? 1 : -1;
}

bool vertex_less(const Vertex& s, const Vertex& t) {
    if (s.dimension() != t.dimension())
        throw Error(ErrorCode::LengthMismatch, "vertices of different cubes");
    if (s.weight() != t.weight()) return s.weight() < t.weight();
    for (int i = 0; i < s.dimension(); ++i)
        if (s.bits[i] != t.bits[i]) return s.bits[i] > t.bits[i];
    return false;
}

std::vector<Vertex> vertices_in_order(int n) {
    std::vector<Vertex> all;
    for (unsigned mask = 0; mask < (1u << n); ++mask) all.push_back(Vertex::from_mask(n, mask));
    std::sort(all.begin(), all.end(), vertex_less);
    return all;
}

CubeArrangement::CubeArrangement(int n) : n_(n) {
    if (n < 0 || n > 20)
        throw Error(ErrorCode::InvalidArgument,
                    "cube dimension must be between 0 and 20");
    objects_.resize(std::size_t(1) << n);
}

const FormalObject& CubeArrangement::at(const Vertex& s) const {
    if (s.dimension() != n_)
        throw Error(ErrorCode::LengthMismatch, "vertex of the wrong dimension");
    return objects_[s.mask()];
}

FormalObject& CubeArrangement::at(const Vertex& s) {
    if (s.dimension() != n_)
        throw Error(ErrorCode::LengthMismatch, "vertex of the wrong dimension");
    return objects_[s.mask()];
}

const FormalObject& CubeArrangement::at_mask(unsigned mask) const {
    if (mask >= objects_.size())
        throw Error(ErrorCode::IndexOutOfRange, "vertex mask out of range");
    return objects_[mask];
}

FormalObject& CubeArrangement::at_mask(unsigned mask) {
    if (mask >= objects_.size())
        throw Error(ErrorCode::IndexOutOfRange, "vertex mask out of range");
    return objects_[mask];
}

FormalObject delta(const CubeArrangement& k) {
    std::map<FormalObject, long long> classes;
    long long grade = 0;
    for (unsigned mask = 0; mask < k.vertex_count(); ++mask) {
        int e = epsilon(Vertex::from_mask(k.dimension(), mask));
        const FormalObject& obj = k.at_mask(mask);
        classes[obj] += e;
        grade += e * obj.grade;
    }
    FormalObject result;
    for (const auto& [obj, c] : classes)
        if (c != 0) result.coefficients["[" + to_string(obj) + "]"] = c;
    result.grade = grade;
    return result;
}

namespace {

unsigned insert_bit(unsigned mask, int i, int bit) {
    unsigned low = mask & ((1u << i) - 1);
    unsigned high = mask >> i;
    return low | static_cast<unsigned>(bit) << i | high << (i + 1);
}

void check_direction(const CubeArrangement& k, int i) {
    if (i < 0 || i >= k.dimension())
        throw Error(ErrorCode::IndexOutOfRange, "direction out of range");
}

}  // namespace

CubeArrangement face(const CubeArrangement& k, int i, FaceSide side) {
    if (k.dimension() == 0)
        throw Error(ErrorCode::IndexOutOfRange, "a point has no faces");
    check_direction(k, i);
    int bit = side == FaceSide::Front ? 1 : 0;
    CubeArrangement result(k.dimension() - 1);
    for (unsigned mask = 0; mask < result.vertex_count(); ++mask)
        result.at_mask(mask) = k.at_mask(insert_bit(mask, i, bit));
    return result;
}

CubeArrangement stack(const CubeArrangement& back, const CubeArrangement& front,
                      int i) {
    if (back.dimension() != front.dimension())
        throw Error(ErrorCode::LengthMismatch,
                    "faces of different dimensions cannot be stacked");
    int n = back.dimension() + 1;
    if (i < 0 || i >= n)
        throw Error(ErrorCode::IndexOutOfRange, "direction out of range");
    CubeArrangement result(n);
    for (unsigned mask = 0; mask < back.vertex_count(); ++mask) {
        result.at_mask(insert_bit(mask, i, 0)) = back.at_mask(mask);
        result.at_mask(insert_bit(mask, i, 1)) = front.at_mask(mask);
    }
    return result;
}

CubeArrangement glue(const CubeArrangement& a, const CubeArrangement& b,
                     int i) {
    if (a.dimension() != b.dimension())
        throw Error(ErrorCode::LengthMismatch, "cubes of different dimensions");
    check_direction(a, i);
    CubeArrangement shared_a = face(a, i, FaceSide::Front);
    CubeArrangement shared_b = face(b, i, FaceSide::Back);
    if (shared_a != shared_b) {
        for (const Vertex& v : vertices_in_order(a.dimension() - 1))
            if (shared_a.at(v) != shared_b.at(v))
                throw Error(ErrorCode::FaceMismatch,
                            "shared face differs first at vertex " +
                                to_string(v));
    }
    return stack(face(a, i, FaceSide::Back), face(b, i, FaceSide::Front), i);
}

CubeArrangement permute(const CubeArrangement& k,
                        const std::vector<int>& perm) {
    int n = k.dimension();
    if (static_cast<int>(perm.size()) != n)
        throw Error(ErrorCode::BadPermutation, "permutation of the wrong size");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw Error(ErrorCode::BadPermutation,
                        "not a permutation of 0.." + std::to_string(n - 1));
        seen[p] = true;
    }
    CubeArrangement result(n);
    for (unsigned mask = 0; mask < k.vertex_count(); ++mask) {
        unsigned t = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) t |= 1u << perm[i];
        result.at_mask(mask) = k.at_mask(t);
    }
    return result;
}

CubeArrangement standard_cube(const FormalObject& base,
                              const std::vector<FormalObject>& edges) {
    int n = static_cast<int>(edges.size());
    CubeArrangement result(n);
    for (unsigned mask = 0; mask < result.vertex_count(); ++mask) {
        FormalObject obj = base;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) obj += edges[i];
        result.at_mask(mask) = obj;
    }
    return result;
}

std::optional<std::pair<FormalObject, std::vector<FormalObject>>> edges(
    const CubeArrangement& k) {
    const FormalObject& base = k.at_mask(0);
    std::vector<FormalObject> sides;
    for (int i = 0; i < k.dimension(); ++i)
        sides.push_back(k.at_mask(1u << i) - base);
    if (k != standard_cube(base, sides)) return std::nullopt;
    return std::make_pair(base, sides);
}

int graded_swap_sign(long long d, long long e) {
    return d % 2 != 0 && e % 2 != 0 ? -1 : 1;
}

std::vector<Symbol> symbol_universe(const CubeArrangement& k) {
    std::set<Symbol> seen;
    for (unsigned mask = 0; mask < k.vertex_count(); ++mask)
        for (const auto& [sym, c] : k.at_mask(mask).coefficients) seen.insert(sym);
    return std::vector<Symbol>(seen.begin(), seen.end());
}

DegreeVector coefficient_vector(const FormalObject& o,
                                const std::vector<Symbol>& universe) {
    DegreeVector d;
    d.reserve(universe.size());
    std::size_t known = 0;
    for (const Symbol& sym : universe) {
        auto it = o.coefficients.find(sym);
        if (it == o.coefficients.end()) {
            d.push_back(0);
        } else {
            d.push_back(it->second);
            ++known;
        }
    }
    if (known != o.coefficients.size())
        throw Error(ErrorCode::ArityMismatch,
                    "object uses a symbol outside the universe");
    return d;
}

Rational chi_delta(const CubeArrangement& k,
                   const std::vector<Symbol>& universe,
                   const ChiFunction& chi) {
    if (chi.arity != static_cast<int>(universe.size()))
        throw Error(ErrorCode::ArityMismatch,
                    "chi arity differs from the symbol count");
    Rational total = 0;
    for (unsigned mask = 0; mask < k.vertex_count(); ++mask) {
        Rational value = chi(coefficient_vector(k.at_mask(mask), universe));
        if (epsilon(Vertex::from_mask(k.dimension(), mask)) < 0) value = -value;
        total += value;
    }
    return total;
}

Rational chi_delta(const CubeArrangement& k, const ChiFunction& chi) {
    return chi_delta(k, symbol_universe(k), chi);
}

namespace {

// The n-sub-cube of k at (s_i, s_j) = (a, b), spanning the other directions.
CubeArrangement corner_cube(const CubeArrangement& k, int i, int j, int a,
                            int b) {
    int p = std::min(i, j);
    int q = std::max(i, j);
    int pbit = p == i ? a : b;
    int qbit = q == j ? b : a;
    CubeArrangement sub(k.dimension() - 2);
    for (unsigned mask = 0; mask < sub.vertex_count(); ++mask)
        sub.at_mask(mask) =
            k.at_mask(insert_bit(insert_bit(mask, p, pbit), q, qbit));
    return sub;
}

}  // namespace

int epsilon_ij(const CubeArrangement& k, int i, int j, const ChiFunction& chi) {
    if (k.dimension() < 2)
        throw Error(ErrorCode::InvalidArgument,
                    "the square decomposition needs dimension at least 2");
    check_direction(k, i);
    check_direction(k, j);
    if (i == j)
        throw Error(ErrorCode::InvalidArgument,
                    "the two directions must differ");
    std::vector<Symbol> universe = symbol_universe(k);
    Rational corner[2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            corner[a][b] = chi_delta(corner_cube(k, i, j, a, b), universe, chi);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            if (corner[a][b] != corner[0][0])
                throw Error(ErrorCode::ChiMismatch,
                            "corner chi values disagree: " +
                                to_string(corner[0][0]) + " at (0,0) vs " +
                                to_string(corner[a][b]) + " at (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                ")");
    if (!is_integer(corner[0][0]))
        throw Error(ErrorCode::ChiUndefined,
                    "corner chi value " + to_string(corner[0][0]) +
                        " is not an integer");
    bool odd = mpz_odd_p(corner[0][0].get_num().get_mpz_t());
    return odd ? -1 : 1;
}

}  // namespace elim
