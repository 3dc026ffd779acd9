#include "dinv/conj.hpp"

#include <set>

#include "dinv/jacobian.hpp"

namespace dinv {

namespace {

const QQ qq;

PolyQ var(VarId v) { return PolyQ::variable(qq, v); }

u64 powmod(const Fq& F, u64 b, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = F.mul(r, b);
        b = F.mul(b, b);
        e >>= 1;
    }
    return r;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

MatF cycle_permutation(std::size_t g, const Fq& F) {
    MatF P(g, F);
    // e_k -> e_{k+1}, e_g -> e_1
    for (std::size_t k = 0; k < g; ++k) P((k + 1) % g, k) = MultiPoly<Fq>::constant(F, 1);
    return P;
}

std::vector<VarId> variables_of(const std::vector<MatQ>& xs) {
    std::set<VarId> s;
    for (const auto& m : xs)
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j)
                for (VarId v : m(i, j).variables()) s.insert(v);
    return {s.begin(), s.end()};
}

RankClaim rank_over_words(const std::string& claim, const std::vector<MatQ>& xs, const std::vector<VarId>& vars,
                          std::size_t g, std::size_t n, std::size_t cap, std::uint64_t seed, u64 q, std::size_t points,
                          std::size_t expected) {
    if (!is_prime(q)) throw BadField("rank certificates need a prime field");
    std::vector<PolyQ> polys;
    for (const auto& w : words_up_to(g, xs.size(), cap)) polys.push_back(trace_word(w, xs));
    RankClaim out{claim, g, n, cap, {}, expected, q, seed};
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < points; ++k) out.ranks.push_back(jacobian_rank_at_random_point(polys, vars, q, rng));
    return out;
}

}  // namespace

std::string Word::str() const {
    std::string s = "c" + std::to_string(j) + "(";
    for (std::size_t k = 0; k < letters.size(); ++k) s += (k ? " X" : "X") + std::to_string(letters[k]);
    return s + ")";
}

std::vector<MatQ> generic_endos(std::size_t g, std::size_t n) {
    std::vector<MatQ> out;
    for (unsigned k = 0; k < n; ++k) {
        MatQ m(g, qq);
        for (unsigned i = 0; i < g; ++i)
            for (unsigned j = 0; j < g; ++j) m(i, j) = var(xvar(k, i + 1, j + 1));
        out.push_back(m);
    }
    return out;
}

std::vector<MatQ> generic_symmetric(std::size_t g, std::size_t n) {
    std::vector<MatQ> out;
    for (unsigned k = 0; k <= n; ++k) out.push_back(SymMatrixPoly<QQ>::generic(g, k, qq).to_matrix());
    return out;
}

void check_cycle_levels(const std::vector<unsigned>& levels) {
    if (levels.size() < 2 || levels.size() % 2) throw BadCycle("cycle length must be even and positive");
    for (std::size_t k = 0; k < levels.size(); ++k)
        if (levels[k] == levels[(k + 1) % levels.size()]) throw BadCycle("cyclically adjacent levels coincide");
}

MatQ cyclic_matrix_product(const std::vector<unsigned>& levels, std::size_t g) {
    check_cycle_levels(levels);
    const std::size_t L = levels.size();
    MatQ Y = MatQ::identity(g, qq);
    for (std::size_t k = 0; k < L; ++k) {
        unsigned m = std::max(levels[k], levels[(k + 1) % L]);
        MatQ Q = SymMatrixPoly<QQ>::generic(g, m, qq).to_matrix();
        Y = Y * (k % 2 == 0 ? Q : adjugate(Q));
    }
    return Y;
}

PolyQ y_invariant(unsigned j, const std::vector<unsigned>& levels, std::size_t g) {
    if (j < 1 || j > g) throw BadWord("j must lie in 1..g");
    MatQ Y = cyclic_matrix_product(levels, g);
    return j == 1 ? Y.trace() : charpoly_coeffs(Y)[j];
}

std::vector<Word> words_up_to(std::size_t g, std::size_t n, std::size_t cap) {
    std::vector<Word> out;
    std::vector<std::vector<unsigned>> layer{{}};
    for (std::size_t len = 1; len <= cap; ++len) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& w : layer)
            for (unsigned l = 0; l < n; ++l) {
                auto v = w;
                v.push_back(l);
                next.push_back(v);
            }
        layer = std::move(next);
        for (unsigned j = 1; j <= g; ++j)
            for (const auto& w : layer) out.push_back({j, w});
    }
    return out;
}

PolyQ disc0(const std::vector<PolyQ>& coeffs) {
    if (coeffs.empty() || coeffs[0] != PolyQ::constant_int(qq, 1)) throw std::invalid_argument("disc0 expects a monic input");
    const std::size_t g = coeffs.size() - 1;
    if (g < 2) return PolyQ::constant_int(qq, 1);
    std::map<VarId, PolyQ> sub;
    for (unsigned k = 0; k <= g; ++k) sub.emplace(auxvar(k), coeffs[k]);
    return binary_discriminant(g).substitute(sub);
}

MatF const_matrix(const Fq& F, const std::vector<std::vector<u64>>& a) {
    MatF m(a.size(), F);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = MultiPoly<Fq>::constant(F, a[i][j] % F.m);
    return m;
}

std::pair<MatF, MatF> phi_q_witness_pair(std::size_t g, const Fq& F, std::mt19937_64& rng) {
    std::set<u64> used;
    MatF D(g, F);
    for (std::size_t k = 0; k < g; ++k) {
        u64 v;
        do v = 1 + rng() % (F.m - 1);
        while (!used.insert(v).second);
        D(k, k) = MultiPoly<Fq>::constant(F, v);
    }
    return {D, cycle_permutation(g, F)};
}

std::pair<MatF, MatF> phi_q_root_of_unity_pair(std::size_t g, const Fq& F) {
    const u64 order = F.m - 1;
    u64 N = u64{1} << g;
    while (N <= order && order % N) ++N;
    if (N > order) throw BadField("no root of unity of order >= 2^g in this field");
    auto primes = prime_factors(N);
    u64 zeta = 0;
    for (u64 h = 2; h < F.m && !zeta; ++h) {
        u64 z = powmod(F, h, order / N);
        bool primitive = true;
        for (u64 l : primes) primitive = primitive && powmod(F, z, N / l) != 1;
        if (primitive) zeta = z;
    }
    MatF D(g, F);
    u64 z = zeta;
    for (std::size_t k = 0; k < g; ++k) {
        D(k, k) = MultiPoly<Fq>::constant(F, z);
        z = F.mul(z, z);
    }
    return {D, cycle_permutation(g, F)};
}

std::pair<MatF, MatF> common_subspace_pair(std::size_t g, std::size_t q, const Fq& F, std::mt19937_64& rng) {
    auto make = [&] {
        MatF m(g, F);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                if (!(i >= q && j < q)) m(i, j) = MultiPoly<Fq>::constant(F, rng() % F.m);
        return m;
    };
    MatF a = make();
    MatF b = make();
    return {a, b};
}

bool RankClaim::holds() const {
    if (ranks.empty()) return false;
    for (auto r : ranks)
        if (r != expected) return false;
    return true;
}

RankClaim trace_word_rank(std::size_t g, std::size_t n, std::size_t cap, std::uint64_t seed, u64 q, std::size_t points) {
    if (n < 1) throw SizeMismatch("need at least one matrix");
    auto xs = generic_endos(g, n);
    return rank_over_words("trace_words", xs, variables_of(xs), g, n, cap, seed, q, points, (n - 1) * g * g + 1);
}

RankClaim pulled_back_rank(std::size_t g, std::size_t n, std::size_t cap, std::uint64_t seed, u64 q, std::size_t points) {
    if (n < 1) throw SizeMismatch("need at least one product");
    auto Q = generic_symmetric(g, n);
    auto xs = pi_n(Q);
    return rank_over_words("pulled_back", xs, variables_of(Q), g, n, cap, seed, q, points,
                           (n - 1) * g * (g + 1) / 2 + g);
}

}  // namespace dinv
