#pragma once

#include <random>
#include <string>
#include <vector>

#include "dinv/quad.hpp"

namespace dinv {

struct Singular : std::domain_error {
    using std::domain_error::domain_error;
};
struct BadWord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadCycle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inverse of a matrix whose determinant is a nonzero constant.
template <class R>
MatrixPoly<R> constant_det_inverse(const MatrixPoly<R>& L) {
    static_assert(R::is_field, "inversion needs a field");
    MultiPoly<R> d = sym_det(L);
    if (d.is_zero()) throw Singular("matrix is singular");
    if (d.degree() > 0) throw Singular("determinant is not a constant");
    const R& ring = L.ring();
    return adjugate(L).scale(MultiPoly<R>::constant(ring, ring.inv(d.constant_term())));
}

// Lambda M Lambda^{-1} on every member of the tuple
template <class R>
std::vector<MatrixPoly<R>> conj_act(const MatrixPoly<R>& L, const std::vector<MatrixPoly<R>>& x) {
    MatrixPoly<R> Li = constant_det_inverse(L);
    std::vector<MatrixPoly<R>> out;
    for (const auto& m : x) {
        if (m.size() != L.size()) throw SizeMismatch("matrix sizes differ");
        out.push_back(L * m * Li);
    }
    return out;
}

// c_j(X_{l_1} ... X_{l_N}); letters index into the tuple
struct Word {
    unsigned j = 1;
    std::vector<unsigned> letters;
    std::string str() const;
};

template <class R>
MultiPoly<R> trace_word(const Word& w, const std::vector<MatrixPoly<R>>& x) {
    if (w.letters.empty()) throw BadWord("empty word");
    for (unsigned l : w.letters)
        if (l >= x.size()) throw BadWord("letter out of range");
    const std::size_t g = x.front().size();
    if (w.j < 1 || w.j > g) throw BadWord("j must lie in 1..g");
    MatrixPoly<R> prod = x[w.letters[0]];
    for (std::size_t k = 1; k < w.letters.size(); ++k) prod = prod * x[w.letters[k]];
    if (w.j == 1) return prod.trace();
    return charpoly_coeffs(prod)[w.j];
}

// det(M0^q M1^q - M1^q M0^q) with ^q the q-th wedge power
template <class R>
MultiPoly<R> phi_q(const MatrixPoly<R>& M0, const MatrixPoly<R>& M1, std::size_t q) {
    if (M0.size() != M1.size()) throw SizeMismatch("matrix sizes differ");
    if (q < 1 || q + 1 > M0.size()) throw BadQ("Phi_q needs 1 <= q <= g - 1");
    MatrixPoly<R> A = wedge_power(M0, q), B = wedge_power(M1, q);
    return sym_det(A * B - B * A);
}

// (Q_0 Q_1^*, Q_1 Q_2^*, ..., Q_{n-1} Q_n^*) with ^* the adjugate
template <class R>
std::vector<MatrixPoly<R>> pi_n(const std::vector<MatrixPoly<R>>& Q) {
    if (Q.size() < 2) throw SizeMismatch("pi_n needs at least two matrices");
    for (const auto& m : Q)
        if (m.size() != Q.front().size()) throw SizeMismatch("matrix sizes differ");
    std::vector<MatrixPoly<R>> out;
    for (std::size_t k = 0; k + 1 < Q.size(); ++k) out.push_back(Q[k] * adjugate(Q[k + 1]));
    return out;
}

// X_0, ..., X_{n-1} with independent entries
std::vector<MatQ> generic_endos(std::size_t g, std::size_t n);
// T^{(0)}, ..., T^{(n)} as full symmetric matrices
std::vector<MatQ> generic_symmetric(std::size_t g, std::size_t n);

// Q^{(m_1)} (Q^{(m_2)})^* ... Q^{(m_{2s-1})} (Q^{(m_2s)})^*, m_k = max(a_k, a_{k+1}) cyclically, Q^{(m)} = T^{(m)}
MatQ cyclic_matrix_product(const std::vector<unsigned>& levels, std::size_t g);
PolyQ y_invariant(unsigned j, const std::vector<unsigned>& levels, std::size_t g);
void check_cycle_levels(const std::vector<unsigned>& levels);

// all (j, word) with 1 <= j <= g and 1 <= length <= cap over n letters
std::vector<Word> words_up_to(std::size_t g, std::size_t n, std::size_t cap);

// Discriminant of t^g + c_1 t^{g-1} + ... + c_g, normalized so t^2 + b t + c gives b^2 - 4c
PolyQ disc0(const std::vector<PolyQ>& coeffs);

// numeric matrices over F_q, held as constant polynomials
using MatF = MatrixPoly<Fq>;
MatF const_matrix(const Fq& F, const std::vector<std::vector<u64>>& a);
// diagonal with random distinct units, and the permutation matrix of the cycle (1 ... g)
std::pair<MatF, MatF> phi_q_witness_pair(std::size_t g, const Fq& F, std::mt19937_64& rng);
// Diag(z, z^2, z^4, ..., z^{2^{g-1}}) with z of order N >= 2^g, and the same cycle
std::pair<MatF, MatF> phi_q_root_of_unity_pair(std::size_t g, const Fq& F);
// random pair preserving span(e_1, ..., e_q)
std::pair<MatF, MatF> common_subspace_pair(std::size_t g, std::size_t q, const Fq& F, std::mt19937_64& rng);

struct RankClaim {
    std::string claim;  // "trace_words" or "pulled_back"
    std::size_t g = 0, n = 0, cap = 0;
    std::vector<std::size_t> ranks;  // one per random point
    std::size_t expected = 0;
    u64 field = 0;
    std::uint64_t seed = 0;
    bool holds() const;
};

// Trace words in n generic endomorphisms: expected (n - 1) g^2 + 1.
RankClaim trace_word_rank(std::size_t g, std::size_t n, std::size_t cap, std::uint64_t seed, u64 q = 2147483647ULL,
                          std::size_t points = 3);
// Trace words in pi_n of n + 1 generic symmetric matrices: expected (n - 1) g (g + 1) / 2 + g.
RankClaim pulled_back_rank(std::size_t g, std::size_t n, std::size_t cap, std::uint64_t seed, u64 q = 2147483647ULL,
                           std::size_t points = 3);

}  // namespace dinv
