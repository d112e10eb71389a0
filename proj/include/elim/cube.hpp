#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elim/chi.hpp"
#include "elim/rational.hpp"

namespace elim {

using Symbol = std::string;

// Object of the free strictly-commutative Picard category: an integer
// combination of named generators.  Tensor product is addition of
// coefficient maps; grades add alongside.  No zero coefficients are stored.
struct FormalObject {
    std::map<Symbol, long long> coefficients;
    long long grade = 0;

    static FormalObject zero();
    static FormalObject generator(const Symbol& name, long long coeff = 1,
                                  long long grade = 0);

    bool is_zero() const { return coefficients.empty() && grade == 0; }

    FormalObject& operator+=(const FormalObject& o);
    FormalObject& operator-=(const FormalObject& o);
    friend FormalObject operator+(FormalObject a, const FormalObject& b) {
        a += b;
        return a;
    }
    friend FormalObject operator-(FormalObject a, const FormalObject& b) {
        a -= b;
        return a;
    }
    FormalObject operator-() const;

    bool operator==(const FormalObject& o) const = default;
    bool operator<(const FormalObject& o) const;
};

FormalObject operator*(long long c, const FormalObject& o);

// Canonical text, e.g. "L1 + 2*L2 - L3"; "0" for the unit object; a nonzero
// grade is appended as " @g".  Equal text means equal object.
std::string to_string(const FormalObject& o);

// Corner of the n-cube {0,1}^n.  n = 0 (the empty vertex) is allowed; it
// indexes the single vertex of a point arrangement.
struct Vertex {
    std::vector<int> bits;

    Vertex() = default;
    explicit Vertex(std::vector<int> b);
    static Vertex from_mask(int n, unsigned mask);

    int dimension() const { return static_cast<int>(bits.size()); }
    int weight() const;
    unsigned mask() const;
};

std::string to_string(const Vertex& v);

// (-1)^(n - sum of bits).
int epsilon(const Vertex& s);

// The total order used everywhere vertices are listed: smaller coordinate
// sum first; on ties the first differing coordinate decides, with bit 1
// before bit 0 there.  So (1,0) comes before (0,1).
bool vertex_less(const Vertex& s, const Vertex& t);
std::vector<Vertex> vertices_in_order(int n);

// A total assignment of objects to the 2^n vertices.
class CubeArrangement {
  public:
    explicit CubeArrangement(int n);

    int dimension() const { return n_; }
    std::size_t vertex_count() const { return objects_.size(); }

    const FormalObject& at(const Vertex& s) const;
    FormalObject& at(const Vertex& s);
    const FormalObject& at_mask(unsigned mask) const;
    FormalObject& at_mask(unsigned mask);

    bool operator==(const CubeArrangement& o) const = default;

  private:
    int n_;
    std::vector<FormalObject> objects_;  // indexed by vertex mask
};

// Signed sum of the vertex classes: each distinct vertex object contributes
// its bracketed class symbol "[<text>]" with coefficient summing epsilon(s)
// over the vertices carrying it.  The grade is the epsilon-weighted sum of
// the vertex grades.
FormalObject delta(const CubeArrangement& k);

// Composition along direction i (0-based): for A = (U -i- V), B = (V -i- W)
// the result is (U -i- W).  The shared face is checked vertexwise.
CubeArrangement glue(const CubeArrangement& a, const CubeArrangement& b,
                     int i);

// Assemble an n-cube from its two prospective i-faces: back at coordinate
// i = 0, front at i = 1.  Inverse of splitting with face().
CubeArrangement stack(const CubeArrangement& back, const CubeArrangement& front,
                      int i);

// Relabel directions: edge i of the result is edge perm[i] of k when k is a
// standard cube, i.e. result(s) = k(t) with t[perm[i]] = s[i].
CubeArrangement permute(const CubeArrangement& k, const std::vector<int>& perm);

enum class FaceSide { Back, Front };

// The (n-1)-arrangement obtained by freezing coordinate i at 0 (Back) or
// 1 (Front).
CubeArrangement face(const CubeArrangement& k, int i, FaceSide side);

// Vertex s carries base + sum of s_i * edges[i].
CubeArrangement standard_cube(const FormalObject& base,
                              const std::vector<FormalObject>& edges);

// Recovers (base, edges) if k has the standard shape, checking all 2^n
// vertices; nullopt otherwise.
std::optional<std::pair<FormalObject, std::vector<FormalObject>>> edges(
    const CubeArrangement& k);

// (-1)^(d*e), the strictly-commutative swap sign on graded objects.
int graded_swap_sign(long long d, long long e);

// All symbols appearing in some vertex object, sorted.
std::vector<Symbol> symbol_universe(const CubeArrangement& k);

// Coefficients of o read off along `universe` (missing symbols give 0).
// Symbols of o outside the universe raise ArityMismatch.
DegreeVector coefficient_vector(const FormalObject& o,
                                const std::vector<Symbol>& universe);

// chi applied termwise to delta(k): the alternating sum of chi over the
// vertex objects, read through their coefficient vectors over `universe`.
Rational chi_delta(const CubeArrangement& k,
                   const std::vector<Symbol>& universe,
                   const ChiFunction& chi);
Rational chi_delta(const CubeArrangement& k, const ChiFunction& chi);

// The square-decomposition sign of an (n+2)-cube along directions i and j:
// (-1)^chi(A) where chi(A) is the alternating chi-sum of the corner
// sub-cube at (s_i, s_j) = (0, 0).  The four corners must agree (ChiMismatch
// otherwise) and the value must be an integer.  chi reads vertex objects
// through their coefficient vectors over the sorted symbol universe of k.
int epsilon_ij(const CubeArrangement& k, int i, int j, const ChiFunction& chi);

}  // namespace elim
