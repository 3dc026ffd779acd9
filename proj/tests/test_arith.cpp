#include <doctest.h>

#include <random>

#include "dinv/arith.hpp"

using namespace dinv;

namespace {

// extended Euclid on machine integers
long ext_inverse(long a, long m) {
    long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1) {
        long q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    REQUIRE(g == 1);
    return ((x % m) + m) % m;
}

long reduce_q(const mpq_class& q, long m) {
    long num = mpz_class(q.get_num() % m).get_si();
    long den = mpz_class(q.get_den() % m).get_si();
    return (((num % m + m) % m) * ext_inverse(den, m)) % m;
}

}  // namespace

TEST_CASE("rational_reduce examples") {
    CHECK(rational_reduce(0, 3, 2) == TruncatedPadic(3, 2, 0L));
    CHECK(rational_reduce(mpq_class(1, 2), 3, 2).residue() == ext_inverse(2, 9));
    CHECK(rational_reduce(mpq_class(1, 2), 3, 2).residue() == 5);
    CHECK_THROWS_AS(rational_reduce(mpq_class(1, 3), 3, 2), NegativeValuation);
    CHECK(rational_reduce(mpq_class(6, 4), 5, 3).residue() == reduce_q(mpq_class(3, 2), 125));
}

TEST_CASE("fermat_quotient examples") {
    CHECK(fermat_quotient(TruncatedPadic(3, 2, 0L)).residue() == 0);
    CHECK(fermat_quotient(TruncatedPadic(3, 2, 1L)).residue() == 0);
    // (2 - 8)/3 = -2
    CHECK(fermat_quotient(TruncatedPadic(3, 2, 2L)) == TruncatedPadic(3, 1, -2L));
    CHECK(fermat_quotient(TruncatedPadic(3, 2, 2L)).residue() == 1);
    // (3 - 9)/2 = -3 mod 4
    CHECK(fermat_quotient(TruncatedPadic(2, 3, 3L)) == TruncatedPadic(2, 2, 1L));
    CHECK_THROWS_AS(fermat_quotient(TruncatedPadic(3, 1, 2L)), PrecisionExhausted);
}

TEST_CASE("cp_value examples") {
    for (u64 p : {2, 3, 5, 7})
        for (long x = 0; x < 20; ++x) CHECK(cp_value(TruncatedPadic(p, 3, x), TruncatedPadic(p, 3, 0L)).residue() == 0);
    CHECK(cp_value(TruncatedPadic(2, 3, 1L), TruncatedPadic(2, 3, 1L)) == TruncatedPadic(2, 3, -1L));
    CHECK(cp_value(TruncatedPadic(3, 3, 1L), TruncatedPadic(3, 3, 1L)) == TruncatedPadic(3, 3, -2L));
    CHECK_THROWS_AS(cp_value(TruncatedPadic(3, 3, 1L), TruncatedPadic(3, 2, 1L)), DomainMismatch);
}

TEST_CASE("log1p_scaled against exact partial sums") {
    auto oracle = [](long p, unsigned N, long u) {
        long m = 1;
        for (unsigned k = 0; k < N; ++k) m *= p;
        mpq_class s = 0;
        mpz_class pk = 1, un = u;
        for (int n = 1; n <= 80; ++n) {
            mpq_class t(pk * un, n);
            t.canonicalize();
            s += (n % 2 == 1) ? t : mpq_class(-t);
            pk *= p;
            un *= u;
        }
        return reduce_q(s, m);
    };
    CHECK(padic_log1p_scaled(TruncatedPadic(3, 2, 0L)).residue() == 0);
    CHECK(padic_log1p_scaled(TruncatedPadic(3, 2, 1L)).residue() == 7);
    CHECK(padic_log1p_scaled(TruncatedPadic(2, 3, 1L)).residue() == 2);
    CHECK(oracle(3, 2, 1) == 7);
    CHECK(oracle(2, 3, 1) == 2);
    for (long p : {2, 3, 5})
        for (unsigned N : {1u, 2u, 3u, 4u})
            for (long u = -4; u < 12; ++u)
                CHECK(padic_log1p_scaled(TruncatedPadic(p, N, u)).residue() == oracle(p, N, u));
}

TEST_CASE("log cutoff is the first index past precision") {
    CHECK(log_cutoff(3, 2) == 4);
    CHECK(log_cutoff(2, 3) == 6);
    for (u64 p : {2, 3, 5})
        for (unsigned N = 1; N < 6; ++N) {
            unsigned n = log_cutoff(p, N);
            for (unsigned k = n; k < n + 40; ++k) {
                mpq_class c(ipow(mpz_class(static_cast<unsigned long>(p)), k - 1), k);
                c.canonicalize();
                CHECK(valuation(c, p) >= static_cast<int>(N));
            }
        }
}

TEST_CASE("delta axioms on Z_p") {
    std::mt19937_64 rng(11);
    for (u64 p : {2, 3, 5})
        for (unsigned N : {2u, 3u, 4u}) {
            for (int t = 0; t < 100; ++t) {
                long a = static_cast<long>(rng() % 100000), b = static_cast<long>(rng() % 100000);
                TruncatedPadic A(p, N + 1, a), B(p, N + 1, b);
                TruncatedPadic dA = fermat_quotient(A), dB = fermat_quotient(B);
                TruncatedPadic An = A.with_precision(N), Bn = B.with_precision(N);
                mpz_class P(static_cast<unsigned long>(p));
                TruncatedPadic pp(p, N, P);
                // phi is the identity on Z_p
                CHECK(An.pow(p) + pp * dA == An);
                CHECK(fermat_quotient(A * B) == An.pow(p) * dB + Bn.pow(p) * dA + pp * dA * dB);
                CHECK(fermat_quotient(A + B) == dA + dB + cp_value(An, Bn));
            }
        }
}

TEST_CASE("log additivity on 1 + pZ_p") {
    std::mt19937_64 rng(5);
    for (u64 p : {2, 3, 5})
        for (unsigned N : {1u, 2u, 3u}) {
            mpz_class P(static_cast<unsigned long>(p));
            for (int t = 0; t < 60; ++t) {
                TruncatedPadic u(p, N, static_cast<long>(rng() % 1000)), v(p, N, static_cast<long>(rng() % 1000));
                TruncatedPadic pp(p, N, P);
                CHECK(padic_log1p_scaled(u) + padic_log1p_scaled(v) == padic_log1p_scaled(u + v + pp * u * v));
            }
        }
}

TEST_CASE("truncated p-adic arithmetic and serialization") {
    TruncatedPadic a(5, 2, 24L), b(5, 2, 3L);
    CHECK((a + b).residue() == 2);
    CHECK((a - b).residue() == 21);
    CHECK((a * b).residue() == 22);
    CHECK((-b).residue() == 22);
    CHECK(a.str() == "24 mod 5^2");
    CHECK_THROWS_AS(a + TruncatedPadic(5, 3, 1L), DomainMismatch);
    CHECK_THROWS_AS(a + TruncatedPadic(3, 2, 1L), DomainMismatch);
    CHECK_THROWS(TruncatedPadic(4, 2, 1L));
    CHECK(rational_str(mpq_class(-3, 6)) == "-1/2");
    CHECK(rational_str(mpq_class(4)) == "4");
}

TEST_CASE("ring contexts") {
    Fq F(1000000007ULL);
    CHECK(F.mul(F.inv(12345), 12345) == 1);
    CHECK(F.from_rational(mpq_class(1, 2)) == 500000004ULL);
    CHECK(F.from_int(-1) == 1000000006ULL);
    Zpn Z(3, 2);
    CHECK(Z.m == 9);
    CHECK(Z.from_rational(mpq_class(1, 2)) == 5);
    CHECK_THROWS_AS(Z.from_rational(mpq_class(1, 3)), NegativeValuation);
    CHECK(Z.str(5) == "5 mod 3^2");
    CHECK_THROWS(Fq(1000000008ULL));
    CHECK(!(Zpn(3, 2) == Zpn(3, 3)));
}
