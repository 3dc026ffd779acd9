#pragma once

#include <map>
#include <string>
#include <vector>

#include "dinv/poly.hpp"

namespace dinv {

struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

// w = sum a_i phi^i in W = Z[phi]
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<long> coeffs);
    static Weight phi_power(unsigned i, long c = 1);

    const std::vector<long>& coeffs() const { return a_; }
    long deg() const;
    unsigned ord() const { return a_.empty() ? 0 : static_cast<unsigned>(a_.size() - 1); }
    bool is_zero() const { return a_.empty(); }
    bool nonnegative() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator*(const Weight& o) const;
    Weight operator-() const;
    bool operator==(const Weight& o) const { return a_ == o.a_; }
    bool operator<(const Weight& o) const { return a_ < o.a_; }  // container order only
    // partial order: w1 <= w2 iff w2 - w1 has nonnegative coefficients
    bool leq(const Weight& o) const { return (o - *this).nonnegative(); }

    std::string str() const;  // "[a0,a1,...]"

private:
    void trim();
    std::vector<long> a_;
};

using DeltaPoly = MultiPoly<Zpn>;

// v^{(l)} -> (v^{(l)})^p + p v^{(l+1)} on every Z-family variable; coefficients fixed
template <class R>
MultiPoly<R> frobenius_lift(const MultiPoly<R>& F, u64 p) {
    const R& ring = F.ring();
    return F.substitute([&](VarId v) -> std::optional<MultiPoly<R>> {
        auto x = MultiPoly<R>::variable(ring, v);
        if (v.family() != Family::Z) return x;
        return x.pow(static_cast<unsigned>(p)) +
               MultiPoly<R>::variable(ring, v.with_level(v.level() + 1)).scale(ring.from_int(static_cast<long long>(p)));
    });
}

// C_p(a, b) = (a^p + b^p - (a+b)^p)/p as a polynomial expression
template <class R>
MultiPoly<R> cp_poly(const MultiPoly<R>& a, const MultiPoly<R>& b, u64 p) {
    const R& ring = a.ring();
    MultiPoly<R> acc(ring, a.trunc());
    mpz_class binom = 1;
    for (u64 k = 1; k < p; ++k) {
        binom = binom * static_cast<unsigned long>(p - k + 1) / static_cast<unsigned long>(k);
        mpz_class c = -binom / static_cast<unsigned long>(p);
        acc += (a.pow(static_cast<unsigned>(k)) * b.pow(static_cast<unsigned>(p - k))).scale(ring.from_mpz(c));
    }
    return acc;
}

// delta via DAX1/DAX2 with delta(z^{(l)}) = z^{(l+1)} and the Fermat quotient on
// coefficients; input at precision N+1, output at precision N
DeltaPoly canonical_delta(const DeltaPoly& F);

// (phi(F) - F^p)/p computed on integer lifts; independent of the recursion above
DeltaPoly delta_via_lift(const DeltaPoly& F);

MultiPoly<ZZ> lift_to_integers(const DeltaPoly& F);
DeltaPoly reduce_mod(const MultiPoly<ZZ>& F, u64 p, unsigned N);

// (b1^p b2^phi - b2^p b1^phi)/p; NotDivisible when the quotient is not integral
MultiPoly<ZZ> delta_bracket(const MultiPoly<ZZ>& b1, const MultiPoly<ZZ>& b2, u64 p);
MultiPoly<QQ> delta_bracket(const MultiPoly<QQ>& b1, const MultiPoly<QQ>& b2, u64 p);

// variable standing for z_i^{phi^j} in the decomposition coordinates
VarId phi_coord(unsigned i, unsigned j);

// z_i^{(l)} written over Q in the coordinates z_i^{phi^j}, j <= l
MultiPoly<QQ> level_in_phi_coords(unsigned i, unsigned l, u64 p);

// Components of F by W-weight after the triangular change of variables.
// The weight of z_i^{phi^j} is base * phi^j.
std::map<Weight, MultiPoly<QQ>> delta_homog_decompose(const MultiPoly<QQ>& F, u64 p, const Weight& base = Weight({1}));

// F in S_n(w): single component, of weight w, and p-integral coefficients in z-coordinates
bool in_S(const MultiPoly<QQ>& F, u64 p, const Weight& w, const Weight& base = Weight({1}));

}  // namespace dinv
