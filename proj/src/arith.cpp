#include "dinv/arith.hpp"

namespace dinv {

mpz_class ipow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<u64>((u128)r * b % m);
        b = static_cast<u64>((u128)b * b % m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    mpz_class r, A(static_cast<unsigned long>(a)), M(static_cast<unsigned long>(m));
    if (mpz_invert(r.get_mpz_t(), A.get_mpz_t(), M.get_mpz_t()) == 0)
        throw std::domain_error("element is not invertible");
    return r.get_ui();
}

bool is_prime(u64 n) {
    mpz_class z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

int valuation(const mpz_class& n, u64 p) {
    if (sgn(n) == 0) throw std::domain_error("valuation of zero");
    mpz_class t = n, P(static_cast<unsigned long>(p));
    int v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), P.get_mpz_t())) {
        t /= P;
        ++v;
    }
    return v;
}

int valuation(const mpq_class& q, u64 p) {
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

static mpz_class pmod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

TruncatedPadic::TruncatedPadic(u64 p, unsigned N, const mpz_class& value) : p_(p), N_(N) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be prime");
    if (N == 0) throw std::invalid_argument("precision must be positive");
    m_ = ipow(mpz_class(static_cast<unsigned long>(p)), N);
    r_ = pmod(value, m_);
}

void TruncatedPadic::check(const TruncatedPadic& o) const {
    if (p_ != o.p_ || N_ != o.N_) throw DomainMismatch("p-adic values with different (p, N)");
}

TruncatedPadic TruncatedPadic::with_precision(unsigned N) const {
    if (N > N_) throw PrecisionExhausted("cannot raise precision");
    return TruncatedPadic(p_, N, r_);
}

TruncatedPadic TruncatedPadic::operator+(const TruncatedPadic& o) const {
    check(o);
    return TruncatedPadic(p_, N_, r_ + o.r_);
}

TruncatedPadic TruncatedPadic::operator-(const TruncatedPadic& o) const {
    check(o);
    return TruncatedPadic(p_, N_, r_ - o.r_);
}

TruncatedPadic TruncatedPadic::operator*(const TruncatedPadic& o) const {
    check(o);
    return TruncatedPadic(p_, N_, r_ * o.r_);
}

TruncatedPadic TruncatedPadic::operator-() const { return TruncatedPadic(p_, N_, -r_); }

TruncatedPadic TruncatedPadic::pow(unsigned long e) const {
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), r_.get_mpz_t(), e, m_.get_mpz_t());
    return TruncatedPadic(p_, N_, r);
}

bool TruncatedPadic::operator==(const TruncatedPadic& o) const {
    return p_ == o.p_ && N_ == o.N_ && r_ == o.r_;
}

std::string TruncatedPadic::str() const {
    return r_.get_str() + " mod " + std::to_string(p_) + "^" + std::to_string(N_);
}

TruncatedPadic rational_reduce(const mpq_class& q, u64 p, unsigned N) {
    if (sgn(q) == 0) return TruncatedPadic(p, N, 0L);
    if (valuation(q, p) < 0) throw NegativeValuation("rational has negative p-adic valuation");
    TruncatedPadic probe(p, N, 0L);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), probe.modulus().get_mpz_t());
    return TruncatedPadic(p, N, q.get_num() * inv);
}

TruncatedPadic fermat_quotient(const TruncatedPadic& a) {
    if (a.precision() < 2) throw PrecisionExhausted("fermat_quotient needs precision >= 2");
    mpz_class x = a.residue();
    mpz_class d = x - ipow(x, a.prime());
    d /= static_cast<unsigned long>(a.prime());  // exact by Fermat
    return TruncatedPadic(a.prime(), a.precision() - 1, d);
}

TruncatedPadic cp_value(const TruncatedPadic& x, const TruncatedPadic& y) {
    if (x.prime() != y.prime() || x.precision() != y.precision())
        throw DomainMismatch("cp_value operands differ in (p, N)");
    const u64 p = x.prime();
    const mpz_class& a = x.residue();
    const mpz_class& b = y.residue();
    mpz_class v = ipow(a, p) + ipow(b, p) - ipow(a + b, p);
    v /= static_cast<unsigned long>(p);
    return TruncatedPadic(p, x.precision(), v);
}

unsigned log_cutoff(u64 p, unsigned N) {
    for (unsigned n = 1;; ++n) {
        unsigned lg = 0;
        for (u64 t = p; t <= n; t *= p) ++lg;
        if (n - 1 >= N + lg) return n;
    }
}

TruncatedPadic padic_log1p_scaled(const TruncatedPadic& u) {
    const u64 p = u.prime();
    const unsigned N = u.precision();
    const unsigned nmax = log_cutoff(p, N);
    TruncatedPadic acc(p, N, 0L), un = u;
    mpz_class P(static_cast<unsigned long>(p));
    for (unsigned n = 1; n < nmax; ++n) {
        mpq_class c(ipow(P, n - 1), mpz_class(static_cast<unsigned long>(n)));
        c.canonicalize();
        if (n % 2 == 0) c = -c;
        acc = acc + rational_reduce(c, p, N) * un;
        un = un * u;
    }
    return acc;
}

std::string rational_str(const mpq_class& q0) {
    mpq_class q = q0;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

QQ::value_type QQ::inv(const value_type& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return 1 / a;
}

ZZ::value_type ZZ::from_rational(const mpq_class& v) const {
    if (v.get_den() != 1) throw std::domain_error("rational is not an integer");
    return v.get_num();
}

ZmodBase::value_type ZmodBase::from_int(long long v) const {
    long long r = v % static_cast<long long>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<long long>(m) : r);
}

ZmodBase::value_type ZmodBase::from_mpz(const mpz_class& v) const {
    mpz_class M(static_cast<unsigned long>(m));
    return pmod(v, M).get_ui();
}

Fq::Fq(u64 q) {
    if (q < 2 || q >= (u64(1) << 63) || !is_prime(q)) throw std::invalid_argument("field size must be a prime below 2^63");
    m = q;
}

Fq::value_type Fq::from_rational(const mpq_class& v) const {
    u64 d = from_mpz(v.get_den());
    if (d == 0) throw std::domain_error("denominator vanishes in F_q");
    return mul(from_mpz(v.get_num()), invmod(d, m));
}

Zpn::Zpn(u64 p_, unsigned N_) : p(p_), N(N_) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be prime");
    if (N == 0) throw std::invalid_argument("precision must be positive");
    mpz_class M = ipow(mpz_class(static_cast<unsigned long>(p)), N);
    if (mpz_sizeinbase(M.get_mpz_t(), 2) > 62) throw std::invalid_argument("p^N exceeds 62 bits");
    m = M.get_ui();
}

Zpn::value_type Zpn::from_rational(const mpq_class& v) const {
    return rational_reduce(v, p, N).residue().get_ui();
}

Zpn::value_type Zpn::from_padic(const TruncatedPadic& t) const {
    if (t.prime() != p || t.precision() != N) throw DomainMismatch("p-adic value outside this ring");
    return t.residue().get_ui();
}

std::string Zpn::str(u64 a) const {
    return std::to_string(a) + " mod " + std::to_string(p) + "^" + std::to_string(N);
}

}  // namespace dinv
