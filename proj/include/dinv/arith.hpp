#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace dinv {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct NegativeValuation : std::domain_error {
    using std::domain_error::domain_error;
};

struct DomainMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PrecisionExhausted : std::domain_error {
    using std::domain_error::domain_error;
};

mpz_class ipow(const mpz_class& b, unsigned long e);
u64 powmod(u64 b, u64 e, u64 m);
u64 invmod(u64 a, u64 m);  // throws std::domain_error if not invertible
bool is_prime(u64 n);
// p-adic valuation of a nonzero integer
int valuation(const mpz_class& n, u64 p);
int valuation(const mpq_class& q, u64 p);

// Residue modulo p^N with the prime and precision carried along.
// Values with different (p, N) refuse to combine.
class TruncatedPadic {
public:
    TruncatedPadic(u64 p, unsigned N, const mpz_class& value);
    TruncatedPadic(u64 p, unsigned N, long long value) : TruncatedPadic(p, N, mpz_class(static_cast<long>(value))) {}

    u64 prime() const { return p_; }
    unsigned precision() const { return N_; }
    const mpz_class& residue() const { return r_; }
    const mpz_class& modulus() const { return m_; }

    TruncatedPadic with_precision(unsigned N) const;  // only lowers N

    TruncatedPadic operator+(const TruncatedPadic& o) const;
    TruncatedPadic operator-(const TruncatedPadic& o) const;
    TruncatedPadic operator*(const TruncatedPadic& o) const;
    TruncatedPadic operator-() const;
    TruncatedPadic pow(unsigned long e) const;
    bool operator==(const TruncatedPadic& o) const;
    bool operator!=(const TruncatedPadic& o) const { return !(*this == o); }

    std::string str() const;  // "c mod p^N"

private:
    void check(const TruncatedPadic& o) const;
    u64 p_;
    unsigned N_;
    mpz_class m_;
    mpz_class r_;
};

TruncatedPadic rational_reduce(const mpq_class& q, u64 p, unsigned N);

// (a - a^p)/p; consumes one digit of precision
TruncatedPadic fermat_quotient(const TruncatedPadic& a);

// (x^p + y^p - (x+y)^p)/p at the common precision of x and y
TruncatedPadic cp_value(const TruncatedPadic& x, const TruncatedPadic& y);

// smallest n with n - 1 - floor(log_p n) >= N; terms from here on vanish mod p^N
unsigned log_cutoff(u64 p, unsigned N);

// (1/p) log(1 + p u) mod p^N
TruncatedPadic padic_log1p_scaled(const TruncatedPadic& u);

std::string rational_str(const mpq_class& q);

// Coefficient ring contexts. Elements are plain values; the context carries the
// modulus and does the arithmetic. Two contexts compare equal iff they describe
// the same ring.

struct QQ {
    using value_type = mpq_class;
    static constexpr bool is_field = true;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
    value_type from_mpz(const mpz_class& v) const { return mpq_class(v); }
    value_type from_rational(const mpq_class& v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const;
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    std::string str(const value_type& a) const { return rational_str(a); }
    bool operator==(const QQ&) const { return true; }
};

struct ZZ {
    using value_type = mpz_class;
    static constexpr bool is_field = false;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return mpz_class(static_cast<long>(v)); }
    value_type from_mpz(const mpz_class& v) const { return v; }
    value_type from_rational(const mpq_class& v) const;
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    std::string str(const value_type& a) const { return a.get_str(); }
    bool operator==(const ZZ&) const { return true; }
};

// Z/m for a u64 modulus below 2^63; shared by prime fields and Z/p^N.
struct ZmodBase {
    u64 m = 0;
    using value_type = u64;
    value_type zero() const { return 0; }
    value_type one() const { return 1 % m; }
    value_type from_int(long long v) const;
    value_type from_mpz(const mpz_class& v) const;
    value_type add(u64 a, u64 b) const { u64 s = a + b; return s >= m ? s - m : s; }
    value_type sub(u64 a, u64 b) const { return a >= b ? a - b : a + (m - b); }
    value_type mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % m); }
    value_type neg(u64 a) const { return a == 0 ? 0 : m - a; }
    bool is_zero(u64 a) const { return a == 0; }
    bool equal(u64 a, u64 b) const { return a == b; }
};

struct Fq : ZmodBase {
    static constexpr bool is_field = true;
    Fq() = default;
    explicit Fq(u64 q);
    u64 q() const { return m; }
    value_type from_rational(const mpq_class& v) const;
    value_type inv(u64 a) const { return invmod(a, m); }
    std::string str(u64 a) const { return std::to_string(a); }
    bool operator==(const Fq& o) const { return m == o.m; }
};

// Z/p^N, the coefficient ring of truncated p-adic series.
struct Zpn : ZmodBase {
    static constexpr bool is_field = false;
    u64 p = 0;
    unsigned N = 0;
    Zpn() = default;
    Zpn(u64 p, unsigned N);
    value_type from_rational(const mpq_class& v) const;  // NegativeValuation
    value_type from_padic(const TruncatedPadic& t) const;
    TruncatedPadic to_padic(u64 a) const { return TruncatedPadic(p, N, mpz_class(static_cast<unsigned long>(a))); }
    std::string str(u64 a) const;
    bool operator==(const Zpn& o) const { return p == o.p && N == o.N; }
};

}  // namespace dinv
