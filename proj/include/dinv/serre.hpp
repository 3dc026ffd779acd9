#pragma once

#include <string>
#include <vector>

#include "dinv/conj.hpp"
#include "dinv/quad.hpp"

namespace dinv {

struct LevelOverflow : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct SlotMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using PolyP = MultiPoly<Zpn>;
using MatP = MatrixPoly<Zpn>;

// g x g matrix series over Z/p^N in the T^{(l)}, truncated at total degree D
struct ExpansionSeries {
    std::size_t g = 1;
    u64 p = 3;
    unsigned N = 3, D = 4;
    unsigned budget = 4;  // highest level T^{(budget)} allowed
    unsigned top = 0;     // highest level present
    bool symmetric = true;
    MatP m;

    ExpansionSeries(std::size_t g, u64 p, unsigned N, unsigned D, unsigned budget = 4);
    const Zpn& ring() const { return m.ring(); }
    bool operator==(const ExpansionSeries& o) const { return m == o.m; }
    ExpansionSeries operator+(const ExpansionSeries& o) const;
    ExpansionSeries operator*(const ExpansionSeries& o) const;
    ExpansionSeries scale(long long c) const;
    // the scalar entry (0, 0) when g = 1
    const PolyP& scalar() const { return m(0, 0); }
};

ExpansionSeries identity_series(std::size_t g, u64 p, unsigned N, unsigned D, unsigned budget = 4);

// (1/p) log(1 + p u) term by term for a series u without constant term
template <class R>
MultiPoly<R> log1p_scaled_series(const MultiPoly<R>& u, u64 p, unsigned nmax) {
    const R& ring = u.ring();
    MultiPoly<R> acc(ring, u.trunc()), un = u;
    const mpz_class P(static_cast<unsigned long>(p));
    for (unsigned n = 1; n < nmax && !un.is_zero(); ++n) {
        mpq_class c(ipow(P, n - 1), mpz_class(static_cast<unsigned long>(n)));
        c.canonicalize();
        if (n % 2 == 0) c = -c;
        acc += un.scale(ring.from_rational(c));
        un = un * u;
    }
    return acc;
}

// Psi_ij = (1/p) log(1 + p u_ij), u_ij = delta(q_ij) / q_ij^p with q_ij = 1 + T_ij
ExpansionSeries psi(std::size_t g, u64 p, unsigned N, unsigned D, unsigned budget = 4);
// T^{(l)} -> (T^{(l)})^p + p T^{(l+1)}, k times
ExpansionSeries phi_twist(const ExpansionSeries& S, unsigned k = 1);
// Psi^{phi^{a-1}} = (1/p) log((1 + tau_a) / (1 + tau_{a-1})^p), tau_a the a-fold lift of T
ExpansionSeries psi_phi_direct(unsigned a, std::size_t g, u64 p, unsigned N, unsigned D, unsigned budget = 4);

enum class BasicKind { FR, FPartial, FAngle, FBracket };
std::string basic_kind_name(BasicKind k);
BasicKind parse_basic_kind(const std::string& s);

// f_r: sum p^i Psi^{phi^{r-1-i}} by the direct route
// f_partial: 1_g
// f_angle: Psi twisted a - 1 times
// f_bracket: f^[1] = Psi, f^[a] = (f^[a-1])^phi + p^{a-1} Psi
ExpansionSeries expansion_basic(BasicKind kind, unsigned index, std::size_t g, u64 p, unsigned N, unsigned D,
                                unsigned budget = 4);

// F(Psi, Psi^phi, ..., Psi^{phi^{r-1}}), slot k = T^{(k)} in F
PolyP diamond_realize(const PolyQ& F, unsigned r, std::size_t g, u64 p, unsigned N, unsigned D);

// Psi^{phi^{a-1}} over Q, direct route, degree <= D
MatQ psi_rational(unsigned a, std::size_t g, u64 p, unsigned D);
// log(1 + T) entrywise over Q
MatQ ell_rational(std::size_t g, unsigned D);
// F(l(T), Psi, ..., Psi^{phi^{r-1}}), slot 0 = T^{(0)}, slot k = T^{(k)}; D <= 6
PolyQ spade(const PolyQ& F, unsigned r, std::size_t g, u64 p, unsigned D);

template <class R>
MultiPoly<R> club(const MultiPoly<R>& S, unsigned degree) {
    return S.homogeneous_component(degree);
}

// F(T, T' - T, p(T'' - T'), ..., p^{r-1}(T^{(r)} - T^{(r-1)}))
PolyQ heart_image_spade(const PolyQ& F, unsigned r, std::size_t g, u64 p);
// F(T' - T, p(T'' - T'), ..., p^{r-1}(T^{(r)} - T^{(r-1)})) with slot k = T^{(k)}
PolyQ heart_image_diamond(const PolyQ& F, unsigned r, std::size_t g, u64 p);

// club(spade(F), deg F) == heart_image_spade(F); F homogeneous
bool check_spade_club(const PolyQ& F, unsigned r, std::size_t g, u64 p, unsigned D);

enum class CyclicStatus { Equal, Differ, Inconclusive };
std::string cyclic_status_name(CyclicStatus s);
struct CyclicCheck {
    CyclicStatus status = CyclicStatus::Differ;
    bool equal = false;    // both sides agree mod p
    bool nonzero = false;  // the common value is nonzero at this truncation
    PolyP lhs, rhs;
};
// c_j of the product of f^{ab} = phi^b f^{a-b} (and transposes, adjugates) against c_j(Y), mod p
CyclicCheck cyclic_expansion_check(const std::vector<unsigned>& levels, unsigned j, std::size_t g, u64 p, unsigned D);

// matrix of polynomials mapped entrywise into Z/p^N; NegativeValuation on non-integral coefficients
MatP to_padic(const MatQ& m, const Zpn& ring, unsigned D);
PolyP to_padic(const PolyQ& f, const Zpn& ring, unsigned D);

}  // namespace dinv
