#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dinv/arith.hpp"

namespace dinv {

struct UnboundVariable : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct SizeTooLarge : std::length_error {
    using std::length_error::length_error;
};
struct BadQ : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Family : std::uint8_t { T = 0, Y = 1, U = 2, V = 3, Z = 4, Aux = 5, X = 6 };

// Packed as (family, level, i, j) so integer order is the canonical variable order.
class VarId {
public:
    constexpr VarId() = default;
    VarId(Family f, unsigned level, unsigned i = 0, unsigned j = 0);
    static VarId from_code(std::uint32_t c) { VarId v; v.code_ = c; return v; }

    Family family() const { return static_cast<Family>(code_ >> 28); }
    unsigned level() const { return (code_ >> 20) & 0xff; }
    unsigned i() const { return (code_ >> 10) & 0x3ff; }
    unsigned j() const { return code_ & 0x3ff; }
    std::uint32_t code() const { return code_; }
    VarId with_level(unsigned l) const { return VarId(family(), l, i(), j()); }

    std::string name() const;
    auto operator<=>(const VarId&) const = default;

private:
    std::uint32_t code_ = 0;
};

// T^{(l)}_{ij}; the pair is sorted so T_{ji} aliases T_{ij}
VarId tvar(unsigned l, unsigned i, unsigned j);
VarId uvar(unsigned l);
VarId vvar(unsigned l);
VarId yvar(unsigned i, unsigned j);
VarId zvar(unsigned i, unsigned l = 0);
VarId auxvar(unsigned k);
// entry (i, j) of the generic endomorphism X_k; no symmetry
VarId xvar(unsigned k, unsigned i, unsigned j);

class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (var code, exponent)

    Monomial() = default;
    explicit Monomial(VarId v, std::uint32_t e = 1);

    unsigned degree() const { return deg_; }
    const std::vector<Factor>& factors() const { return f_; }
    std::uint32_t exponent(VarId v) const;
    bool is_one() const { return f_.empty(); }

    Monomial operator*(const Monomial& o) const;
    // graded order: total degree first, then lexicographic on factors
    bool operator<(const Monomial& o) const {
        if (deg_ != o.deg_) return deg_ < o.deg_;
        return f_ < o.f_;
    }
    bool operator==(const Monomial& o) const { return f_ == o.f_; }

    static Monomial from_factors(std::vector<Factor> f);

private:
    std::vector<Factor> f_;
    unsigned deg_ = 0;
};

template <class R>
class MultiPoly {
public:
    using V = typename R::value_type;
    using Terms = std::map<Monomial, V>;

    explicit MultiPoly(R ring = R{}, std::optional<unsigned> trunc = std::nullopt) : ring_(ring), trunc_(trunc) {}

    static MultiPoly constant(const R& ring, const V& c, std::optional<unsigned> trunc = std::nullopt) {
        MultiPoly p(ring, trunc);
        p.add_term(Monomial(), c);
        return p;
    }
    static MultiPoly constant_int(const R& ring, long long c, std::optional<unsigned> trunc = std::nullopt) {
        return constant(ring, ring.from_int(c), trunc);
    }
    static MultiPoly variable(const R& ring, VarId v, std::optional<unsigned> trunc = std::nullopt) {
        MultiPoly p(ring, trunc);
        p.add_term(Monomial(v), ring.one());
        return p;
    }
    static MultiPoly monomial(const R& ring, const Monomial& m, const V& c, std::optional<unsigned> trunc = std::nullopt) {
        MultiPoly p(ring, trunc);
        p.add_term(m, c);
        return p;
    }

    const R& ring() const { return ring_; }
    std::optional<unsigned> trunc() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // total degree; -1 for the zero polynomial
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }
    int low_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

    V coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ring_.zero() : it->second;
    }
    V constant_term() const { return coeff(Monomial()); }

    void add_term(const Monomial& m, const V& c) {
        if (trunc_ && m.degree() > *trunc_) return;
        if (ring_.is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    // re-truncate at a (possibly) lower bound
    MultiPoly truncated(unsigned D) const {
        MultiPoly r(ring_, trunc_ ? std::min(*trunc_, D) : D);
        for (const auto& [m, c] : terms_)
            if (m.degree() <= D) r.terms_.emplace_hint(r.terms_.end(), m, c);
        return r;
    }
    MultiPoly untruncated() const {
        MultiPoly r = *this;
        r.trunc_.reset();
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = combine_shell(o);
        r.terms_ = terms_;
        if (r.trunc_ && trunc_ != r.trunc_) r = r.truncated(*r.trunc_);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
    MultiPoly operator-() const {
        MultiPoly r(ring_, trunc_);
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, ring_.neg(c));
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r = combine_shell(o);
        if (terms_.empty() || o.terms_.empty()) return r;
        const auto bound = r.trunc_;
        for (const auto& [m1, c1] : terms_) {
            if (bound && m1.degree() + o.terms_.begin()->first.degree() > *bound) break;
            for (const auto& [m2, c2] : o.terms_) {
                if (bound && m1.degree() + m2.degree() > *bound) break;
                r.add_term(m1 * m2, ring_.mul(c1, c2));
            }
        }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scale(const V& c) const {
        MultiPoly r(ring_, trunc_);
        if (ring_.is_zero(c)) return r;
        for (const auto& [m, a] : terms_) r.add_term(m, ring_.mul(a, c));
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(ring_, ring_.one(), trunc_);
        MultiPoly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (!(ring_ == o.ring_)) throw DomainMismatch("comparing polynomials over different rings");
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [m, c] : terms_) {
            if (!(m == it->first) || !ring_.equal(c, it->second)) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly homogeneous_component(unsigned d) const {
        MultiPoly r(ring_, trunc_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
        return r;
    }

    std::vector<VarId> variables() const {
        std::vector<std::uint32_t> codes;
        for (const auto& t : terms_)
            for (const auto& f : t.first.factors()) codes.push_back(f.first);
        std::sort(codes.begin(), codes.end());
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        std::vector<VarId> out;
        for (auto c : codes) out.push_back(VarId::from_code(c));
        return out;
    }

    MultiPoly derivative(VarId v) const {
        MultiPoly r(ring_, trunc_);
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exponent(v);
            if (e == 0) continue;
            std::vector<Monomial::Factor> f;
            for (const auto& fe : m.factors()) {
                if (fe.first != v.code()) f.push_back(fe);
                else if (fe.second > 1) f.emplace_back(fe.first, fe.second - 1);
            }
            r.add_term(Monomial::from_factors(std::move(f)), ring_.mul(c, ring_.from_int(e)));
        }
        return r;
    }

    // Each variable of f is replaced by its image. Truncation D, when given, is applied
    // to every intermediate product; it is exact when images have no constant term.
    MultiPoly substitute(const std::function<std::optional<MultiPoly>(VarId)>& sigma,
                         std::optional<unsigned> D = std::nullopt) const {
        std::optional<unsigned> bound = D ? D : trunc_;
        MultiPoly r(ring_, bound);
        std::map<std::uint32_t, std::vector<MultiPoly>> powers;
        auto power_of = [&](std::uint32_t code, std::uint32_t e) -> const MultiPoly& {
            auto& vec = powers[code];
            if (vec.empty()) {
                auto img = sigma(VarId::from_code(code));
                if (!img) throw UnboundVariable("no image for variable " + VarId::from_code(code).name());
                if (!(img->ring() == ring_)) throw DomainMismatch("substitution image over a different ring");
                vec.push_back(constant(ring_, ring_.one(), bound));
                vec.push_back(bound ? img->truncated(*bound) : *img);
            }
            while (vec.size() <= e) vec.push_back(vec.back() * vec[1]);
            return vec[e];
        };
        for (const auto& [m, c] : terms_) {
            MultiPoly t = constant(ring_, c, bound);
            for (const auto& [code, e] : m.factors()) {
                t = t * power_of(code, e);
                if (t.is_zero()) break;
            }
            r += t;
        }
        return r;
    }

    MultiPoly substitute(const std::map<VarId, MultiPoly>& sigma, std::optional<unsigned> D = std::nullopt) const {
        return substitute([&](VarId v) -> std::optional<MultiPoly> {
            auto it = sigma.find(v);
            if (it == sigma.end()) return std::nullopt;
            return it->second;
        }, D);
    }

    // substitute only the listed variables; others are kept
    MultiPoly substitute_partial(const std::map<VarId, MultiPoly>& sigma, std::optional<unsigned> D = std::nullopt) const {
        return substitute([&](VarId v) -> std::optional<MultiPoly> {
            auto it = sigma.find(v);
            if (it == sigma.end()) return variable(ring_, v);
            return it->second;
        }, D);
    }

    V evaluate(const std::function<V(VarId)>& point) const {
        std::map<std::uint32_t, V> cache;
        V acc = ring_.zero();
        for (const auto& [m, c] : terms_) {
            V t = c;
            for (const auto& [code, e] : m.factors()) {
                auto it = cache.find(code);
                if (it == cache.end()) it = cache.emplace(code, point(VarId::from_code(code))).first;
                V b = it->second;
                for (std::uint32_t k = 0; k < e; ++k) t = ring_.mul(t, b);
            }
            acc = ring_.add(acc, t);
        }
        return acc;
    }

    template <class R2, class F>
    MultiPoly<R2> map_coeffs(const R2& ring2, F f) const {
        MultiPoly<R2> r(ring2, trunc_);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    template <class F>
    MultiPoly map_monomials(F f) const {
        MultiPoly r(ring_, trunc_);
        for (const auto& [m, c] : terms_) r.add_term(f(m), c);
        return r;
    }

private:
    MultiPoly combine_shell(const MultiPoly& o) const {
        if (!(ring_ == o.ring_)) throw DomainMismatch("polynomials over different rings");
        std::optional<unsigned> t = trunc_;
        if (o.trunc_) t = t ? std::min(*t, *o.trunc_) : o.trunc_;
        return MultiPoly(ring_, t);
    }

    R ring_;
    Terms terms_;
    std::optional<unsigned> trunc_;
};

template <class R>
MultiPoly<R> poly_mul_trunc(const MultiPoly<R>& f, const MultiPoly<R>& g, unsigned D) {
    return f.truncated(D) * g.truncated(D);
}

// Square matrix of polynomials, row major.
template <class R>
class MatrixPoly {
public:
    using P = MultiPoly<R>;

    MatrixPoly(std::size_t n, const P& fill) : n_(n), e_(n * n, fill) {}
    MatrixPoly(std::size_t n, const R& ring, std::optional<unsigned> trunc = std::nullopt) : MatrixPoly(n, P(ring, trunc)) {}

    static MatrixPoly identity(std::size_t n, const R& ring, std::optional<unsigned> trunc = std::nullopt) {
        MatrixPoly m(n, ring, trunc);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = P::constant(ring, ring.one(), trunc);
        return m;
    }

    std::size_t size() const { return n_; }
    P& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const P& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    const R& ring() const { return e_.front().ring(); }

    MatrixPoly operator+(const MatrixPoly& o) const { return zip(o, [](const P& a, const P& b) { return a + b; }); }
    MatrixPoly operator-(const MatrixPoly& o) const { return zip(o, [](const P& a, const P& b) { return a - b; }); }
    MatrixPoly operator*(const MatrixPoly& o) const {
        check(o);
        MatrixPoly r(n_, e_.front().ring());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                P acc = (*this)(i, 0) * o(0, j);
                for (std::size_t k = 1; k < n_; ++k) acc += (*this)(i, k) * o(k, j);
                r(i, j) = acc;
            }
        return r;
    }
    MatrixPoly scale(const P& c) const {
        MatrixPoly r = *this;
        for (auto& x : r.e_) x = x * c;
        return r;
    }
    MatrixPoly transpose() const {
        MatrixPoly r = *this;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r(i, j) = (*this)(j, i);
        return r;
    }
    template <class F>
    MatrixPoly map(F f) const {
        MatrixPoly r = *this;
        for (auto& x : r.e_) x = f(x);
        return r;
    }
    bool operator==(const MatrixPoly& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const MatrixPoly& o) const { return !(*this == o); }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    P trace() const {
        P acc = (*this)(0, 0);
        for (std::size_t i = 1; i < n_; ++i) acc += (*this)(i, i);
        return acc;
    }

    // rows and columns picked out of this matrix
    MatrixPoly minor_matrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        MatrixPoly r(rows.size(), e_.front().ring());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) r(a, b) = (*this)(rows[a], cols[b]);
        return r;
    }

private:
    void check(const MatrixPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    }
    template <class F>
    MatrixPoly zip(const MatrixPoly& o, F f) const {
        check(o);
        MatrixPoly r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = f(e_[k], o.e_[k]);
        return r;
    }

    std::size_t n_;
    std::vector<P> e_;
};

// Symmetric matrix stored by its upper triangle.
template <class R>
class SymMatrixPoly {
public:
    using P = MultiPoly<R>;

    SymMatrixPoly(std::size_t n, const P& fill) : n_(n), e_(n * (n + 1) / 2, fill) {}

    // the symbolic matrix T^{(l)}
    static SymMatrixPoly generic(std::size_t n, unsigned level, const R& ring, std::optional<unsigned> trunc = std::nullopt) {
        SymMatrixPoly m(n, P(ring, trunc));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                m.at(i, j) = P::variable(ring, tvar(level, static_cast<unsigned>(i + 1), static_cast<unsigned>(j + 1)), trunc);
        return m;
    }
    static SymMatrixPoly from_matrix(const MatrixPoly<R>& m) {
        if (!m.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
        SymMatrixPoly s(m.size(), m(0, 0));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i; j < m.size(); ++j) s.at(i, j) = m(i, j);
        return s;
    }

    std::size_t size() const { return n_; }
    P& at(std::size_t i, std::size_t j) { return e_[index(i, j)]; }
    const P& at(std::size_t i, std::size_t j) const { return e_[index(i, j)]; }

    MatrixPoly<R> to_matrix() const {
        MatrixPoly<R> m(n_, e_.front());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = at(i, j);
        return m;
    }
    template <class F>
    SymMatrixPoly map(F f) const {
        SymMatrixPoly r = *this;
        for (auto& x : r.e_) x = f(x);
        return r;
    }
    bool operator==(const SymMatrixPoly& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return i * n_ - i * (i - 1) / 2 + (j - i);
    }
    std::size_t n_;
    std::vector<P> e_;
};

namespace detail {

template <class R>
MultiPoly<R> det_cofactor(const MatrixPoly<R>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    MultiPoly<R> acc(m.ring(), m(0, 0).trunc());
    std::vector<std::size_t> rows;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        std::vector<std::size_t> cols;
        for (std::size_t k = 0; k < n; ++k)
            if (k != c) cols.push_back(k);
        MultiPoly<R> t = m(0, c) * det_cofactor(m.minor_matrix(rows, cols));
        acc = (c % 2 == 0) ? acc + t : acc - t;
    }
    return acc;
}

template <class R>
MultiPoly<R> det_leibniz(const MatrixPoly<R>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    MultiPoly<R> acc(m.ring(), m(0, 0).trunc());
    do {
        int inv = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        MultiPoly<R> t = m(0, perm[0]);
        for (std::size_t i = 1; i < n && !t.is_zero(); ++i) t = t * m(i, perm[i]);
        if (t.is_zero()) continue;
        acc = (inv % 2 == 0) ? acc + t : acc - t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// k-subsets of {0..n-1} in lexicographic order
inline std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    detail::subsets(n, k, 0, cur, out);
    return out;
}

template <class R>
MultiPoly<R> sym_det(const MatrixPoly<R>& m) {
    if (m.size() <= 4) return detail::det_cofactor(m);
    if (m.size() <= 6) return detail::det_leibniz(m);
    throw SizeTooLarge("determinant supports size <= 6");
}

template <class R>
MultiPoly<R> sym_det(const SymMatrixPoly<R>& m) {
    return sym_det(m.to_matrix());
}

template <class R>
MatrixPoly<R> adjugate(const MatrixPoly<R>& m) {
    const std::size_t n = m.size();
    if (n > 6) throw SizeTooLarge("adjugate supports size <= 6");
    MatrixPoly<R> r(n, m.ring(), m(0, 0).trunc());
    if (n == 1) {
        r(0, 0) = MultiPoly<R>::constant(m.ring(), m.ring().one(), m(0, 0).trunc());
        return r;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) rows.push_back(k);
                if (k != i) cols.push_back(k);
            }
            MultiPoly<R> d = sym_det(m.minor_matrix(rows, cols));
            r(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    return r;
}

// (c_0, ..., c_g) with det(t - M) = sum (-1)^j c_j t^{g-j}; c_j is the sum of principal j-minors
template <class R>
std::vector<MultiPoly<R>> charpoly_coeffs(const MatrixPoly<R>& m) {
    const std::size_t n = m.size();
    std::vector<MultiPoly<R>> c;
    c.push_back(MultiPoly<R>::constant(m.ring(), m.ring().one(), m(0, 0).trunc()));
    for (std::size_t j = 1; j <= n; ++j) {
        MultiPoly<R> acc(m.ring(), m(0, 0).trunc());
        for (const auto& s : lex_subsets(n, j)) acc += sym_det(m.minor_matrix(s, s));
        c.push_back(acc);
    }
    return c;
}

template <class R>
MatrixPoly<R> wedge_power(const MatrixPoly<R>& m, std::size_t q) {
    if (q < 1 || q > m.size()) throw BadQ("wedge power needs 1 <= q <= g");
    auto basis = lex_subsets(m.size(), q);
    MatrixPoly<R> r(basis.size(), m.ring(), m(0, 0).trunc());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) r(a, b) = sym_det(m.minor_matrix(basis[a], basis[b]));
    return r;
}

// Serialization: list of {var: exponent, ..., "coefficient": string}; deterministic order.
struct TermRecord {
    std::vector<std::pair<std::string, unsigned>> vars;
    std::string coefficient;
};

template <class R>
std::vector<TermRecord> poly_records(const MultiPoly<R>& f) {
    std::vector<TermRecord> out;
    for (const auto& [m, c] : f.terms()) {
        TermRecord t;
        for (const auto& [code, e] : m.factors()) t.vars.emplace_back(VarId::from_code(code).name(), e);
        t.coefficient = f.ring().str(c);
        out.push_back(std::move(t));
    }
    return out;
}

template <class R>
std::string poly_str(const MultiPoly<R>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) s += " + ";
        first = false;
        s += "(" + f.ring().str(c) + ")";
        for (const auto& [code, e] : m.factors()) {
            s += "*" + VarId::from_code(code).name();
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

}  // namespace dinv
