#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "dinv/linalg.hpp"
#include "dinv/poly.hpp"

namespace dinv {

struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct HalfIntegerInvalid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ResourceBound : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadMultidegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadLevels : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WrongG : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoSolution : std::logic_error {
    using std::logic_error::logic_error;
};
struct BadIndices : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedR : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadField : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using PolyQ = MultiPoly<QQ>;
using MatQ = MatrixPoly<QQ>;

// s = twice / 2
struct HalfInt {
    int twice = 0;
    static HalfInt from_int(int s) { return {2 * s}; }
    std::string str() const;
};

// Lambda M Lambda^t on every member of the tuple
template <class R>
std::vector<MatrixPoly<R>> congruence_act(const MatrixPoly<R>& L, const std::vector<MatrixPoly<R>>& x) {
    std::vector<MatrixPoly<R>> out;
    MatrixPoly<R> Lt = L.transpose();
    for (const auto& m : x) {
        if (m.size() != L.size()) throw SizeMismatch("matrix sizes differ");
        out.push_back(L * m * Lt);
    }
    return out;
}

// the symbolic tuple T^{(0)}, ..., T^{(r)} as full matrices
std::vector<MatQ> generic_tuple(std::size_t g, unsigned r);

// monomials of degree gs with Index_m = 2s for every m
std::vector<Monomial> torus_slice(std::size_t g, unsigned r, HalfInt s);

struct InvariantBasis {
    std::size_t g = 0;
    unsigned r = 0;
    HalfInt s;
    std::size_t slice_size = 0;
    std::size_t dimension = 0;
    std::vector<PolyQ> basis;
};

// Kernel of the sl_g derivations on the torus slice over Q.
InvariantBasis invariant_dimension(std::size_t g, unsigned r, HalfInt s, std::size_t monomial_cap = 20000);

// the derivation of e_{ab} acting on polynomials in the T-variables
PolyQ lie_derivation(const PolyQ& G, std::size_t g, unsigned a, unsigned b);
// true when every e_{ab} (a != b) and the torus annihilate G
bool lie_invariant(const PolyQ& G, std::size_t g);

// Theta_m: coefficient of prod y_i^{m_i} in det(sum y_i T^{(i)})
PolyQ theta(std::size_t g, const std::vector<unsigned>& m);
std::map<std::vector<unsigned>, PolyQ> theta_all(std::size_t g, unsigned r);
// multidegrees (m_0..m_r) with sum g, in lexicographically decreasing order
std::vector<std::vector<unsigned>> multidegrees(std::size_t g, unsigned r);
// tuples (a, b, 0.., c, 0..) of Delta(g, r)
std::vector<std::vector<unsigned>> delta3(std::size_t g, unsigned r);

// det of the columns c(T^{(q_k)}); rows are (i,j), i <= j, in lexicographic order
PolyQ upsilon(std::size_t g, const std::vector<unsigned>& levels);

// g = 2: T11 -> u^2, T22 -> v^2, T12 -> u v at every level
PolyQ jmath(const PolyQ& f, std::size_t g = 2);
// y_{ij} = u_i v_j - v_i u_j
PolyQ plucker_y(unsigned i, unsigned j);
// xi_omega = - prod y_{q_k, q_{k+1}} over the cycle
PolyQ xi_target(const std::vector<unsigned>& cycle);
// the unique multilinear lift with jmath(Xi) = xi_omega
PolyQ xi_lift(const std::vector<unsigned>& cycle);

// Disc of sum_k a_k x^{g-k} y^k in aux variables a_0..a_g; x^2 + b x + c has b^2 - 4c
PolyQ binary_discriminant(std::size_t g);
VarId theta_symbol(unsigned k);
// J in the symbols Theta_0..Theta_g
PolyQ tact_invariant(std::size_t g);
// F_0 = Theta_0 F_1 J in the symbols; F_1 = Theta_1 for p = 2 and 1 otherwise
PolyQ separating_F0(std::size_t g, u64 p);
// substitute Theta_k -> Theta_{(g-k, k)}(T, T')
PolyQ compose_with_thetas(const PolyQ& f, std::size_t g);
// value of a symbol polynomial at a numeric pair (Q0, Q1)
mpq_class evaluate_on_pair(const PolyQ& f, const std::vector<std::vector<mpq_class>>& Q0,
                           const std::vector<std::vector<mpq_class>>& Q1);

struct RelationResult {
    bool holds = false;
    std::string witness;
};

RelationResult cyclic_relation_check(const std::vector<unsigned>& q, unsigned s, unsigned r);

struct PluckerResult {
    std::size_t slice_size = 0;
    std::size_t kernel_dim = 0;
    // kernel quartic as Theta^Y monomials -> coefficient, normalized
    PolyQ quartic;
    bool jimage_zero = false;           // non-det part vanishes after Theta_(ab) -> y_ab^2
    bool matches_corrected = false;     // non-det part is a multiple of A^2+B^2+C^2-2AB-2BC-2AC
    bool literal_display_zero = false;  // the displayed quartic, taken literally
};

// Theta^Y indeterminate for a multidegree supported on two levels (or one level with 2)
VarId theta_y_symbol(unsigned a, unsigned b);
PluckerResult plucker_check(unsigned i, unsigned j, unsigned n, unsigned s);

struct HilbertSeries {
    std::vector<mpq_class> numerator;
    unsigned denominator_exponent = 0;
    std::vector<mpq_class> coefficients;
};
enum class HilbertVariant { Even, Grassmannian };
HilbertSeries hilbert_closed(unsigned r, std::size_t K, HilbertVariant v);
// rank of the degree-d monomials in the y_{ij}, 0 <= i < j <= r, inside Q[u, v]
std::size_t plucker_monomial_rank(unsigned r, unsigned d);

struct B0Params {
    u64 alpha = 0, beta = 0, gamma = 0, nu = 0;  // g = 3
    u64 d12 = 0;                                 // g = 2
};
struct B0Result {
    std::vector<std::size_t> counts;
    std::vector<B0Params> draws;
    std::size_t max_count = 0;
};
std::size_t b0_count_g2(u64 q, u64 d12);
// square-root table route
std::size_t b0_count_g3(u64 q, const B0Params& prm);
// exhaustive enumeration over F_q^3
std::size_t b0_count_g3_bruteforce(u64 q, const B0Params& prm);
B0Result b0_count(unsigned g, u64 q, std::size_t trials, std::uint64_t seed);

}  // namespace dinv
