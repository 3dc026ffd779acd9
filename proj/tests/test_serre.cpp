#include <doctest.h>

#include <random>

#include "dinv/serre.hpp"

using namespace dinv;

namespace {

QQ q;

PolyP tp(const Zpn& R, unsigned l, unsigned i, unsigned j, unsigned D) { return PolyP::variable(R, tvar(l, i, j), D); }
PolyQ T(unsigned l, unsigned i, unsigned j) { return PolyQ::variable(q, tvar(l, i, j)); }

// (1/p) log(1 + p) mod p^N from exact rational partial sums
u64 log1p_oracle(u64 p, unsigned N) {
    mpq_class s = 0;
    mpz_class P(static_cast<unsigned long>(p)), pn = ipow(P, N);
    for (unsigned n = 1; n < 60; ++n) {
        mpq_class t(ipow(P, n - 1), mpz_class(n));
        t.canonicalize();
        s += (n % 2 ? t : mpq_class(-t));
    }
    s.canonicalize();
    mpz_class inv;
    mpz_class den = s.get_den();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pn.get_mpz_t());
    mpz_class r = (s.get_num() * inv) % pn;
    if (r < 0) r += pn;
    return r.get_ui();
}

ExpansionSeries random_series(std::size_t g, u64 p, unsigned N, unsigned D, std::mt19937_64& rng) {
    ExpansionSeries s(g, p, N, D);
    const Zpn& R = s.ring();
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            PolyP f(R, D);
            for (int t = 0; t < 4; ++t) {
                PolyP m = PolyP::constant(R, rng() % R.m, D);
                for (unsigned k = 0, d = static_cast<unsigned>(rng() % 3); k < d; ++k)
                    m = m * tp(R, static_cast<unsigned>(rng() % 2), 1 + static_cast<unsigned>(rng() % g), 1 + static_cast<unsigned>(rng() % g), D);
                f += m;
            }
            s.m(i, j) = f;
        }
    s.top = 1;
    s.symmetric = false;
    return s;
}

}  // namespace

TEST_CASE("psi examples") {
    for (u64 p : {2, 3, 5}) {
        auto S = psi(2, p, 3, 4);
        const Zpn& R = S.ring();
        for (unsigned i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 2; ++j) {
                CHECK(S.m(i, j).constant_term() == 0);
                CHECK(club(S.m(i, j), 1) == tp(R, 1, i + 1, j + 1, 4) - tp(R, 0, i + 1, j + 1, 4));
            }
        CHECK(S.m.is_symmetric());
    }
    for (u64 p : {2, 3}) {
        const unsigned N = 2, D = 8;
        auto S = psi(1, p, N, D);
        u64 v = S.scalar().evaluate([](VarId x) -> u64 { return x.level() == 1 ? 1 : 0; });
        CHECK(v == log1p_oracle(p, N));
        CHECK(v == padic_log1p_scaled(TruncatedPadic(p, N, 1L)).residue().get_ui());
    }
    CHECK(log1p_oracle(3, 2) == 7);
}

TEST_CASE("phi twist examples") {
    for (u64 p : {2, 3, 5}) {
        ExpansionSeries t(1, p, 3, 5);
        const Zpn& R = t.ring();
        t.m(0, 0) = tp(R, 0, 1, 1, 5);
        auto tw = phi_twist(t);
        CHECK(tw.scalar() == tp(R, 0, 1, 1, 5).pow(static_cast<unsigned>(p)) + tp(R, 1, 1, 1, 5).scale(p));
        auto id = identity_series(2, p, 3, 4);
        CHECK(phi_twist(id, 2) == id);
    }
    std::mt19937_64 rng(11);
    for (int t = 0; t < 6; ++t) {
        u64 p = t % 2 ? 3 : 2;
        auto a = random_series(2, p, 2, 4, rng), b = random_series(2, p, 2, 4, rng);
        CHECK(phi_twist(a * b) == phi_twist(a) * phi_twist(b));
        CHECK(phi_twist(a + b) == phi_twist(a) + phi_twist(b));
    }
    CHECK_THROWS_AS(phi_twist(psi(1, 3, 2, 3), 4), LevelOverflow);
}

TEST_CASE("direct route against twists") {
    CHECK(psi_phi_direct(1, 2, 3, 2, 4) == psi(2, 3, 2, 4));
    CHECK(psi_phi_direct(2, 1, 3, 2, 4) == phi_twist(psi(1, 3, 2, 4), 1));
    for (u64 p : {2, 3, 5})
        for (unsigned N : {2u, 3u})
            for (unsigned D : {3u, 4u})
                for (unsigned a = 1; a <= 3; ++a) CHECK(psi_phi_direct(a, 1, p, N, D) == phi_twist(psi(1, p, N, D), a - 1));
    for (unsigned a = 1; a <= 3; ++a) CHECK(psi_phi_direct(a, 2, 3, 2, 3) == phi_twist(psi(2, 3, 2, 3), a - 1));
    for (u64 p : {2, 3, 5}) {
        auto S = psi_phi_direct(2, 2, p, 3, 3);
        const Zpn& R = S.ring();
        CHECK(S.m.is_symmetric());
        CHECK(club(S.m(0, 1), 1) == (tp(R, 2, 1, 2, 3) - tp(R, 1, 1, 2, 3)).scale(p));
    }
    CHECK_THROWS_AS(psi_phi_direct(5, 1, 3, 2, 3), LevelOverflow);
}

TEST_CASE("basic expansions") {
    CHECK(expansion_basic(BasicKind::FPartial, 0, 2, 3, 3, 4) == identity_series(2, 3, 3, 4));
    CHECK(expansion_basic(BasicKind::FAngle, 1, 2, 3, 3, 4) == psi(2, 3, 3, 4));
    CHECK(expansion_basic(BasicKind::FBracket, 2, 2, 3, 3, 4) == expansion_basic(BasicKind::FR, 2, 2, 3, 3, 4));
    CHECK(expansion_basic(BasicKind::FR, 1, 2, 3, 3, 4) == psi(2, 3, 3, 4));
    for (unsigned a = 2; a <= 3; ++a) {
        auto sum = expansion_basic(BasicKind::FAngle, a, 1, 3, 3, 4);
        long long pw = 1;
        for (unsigned i = 1; i < a; ++i) {
            pw *= 3;
            sum = sum + expansion_basic(BasicKind::FAngle, a - i, 1, 3, 3, 4).scale(pw);
        }
        CHECK(expansion_basic(BasicKind::FBracket, a, 1, 3, 3, 4) == sum);
        CHECK(expansion_basic(BasicKind::FR, a, 1, 3, 3, 4) == sum);
    }
    CHECK_THROWS_AS(expansion_basic(BasicKind::FR, 0, 2, 3, 3, 4), std::invalid_argument);
    CHECK(parse_basic_kind("f_bracket") == BasicKind::FBracket);
}

TEST_CASE("key identity f^2 = (f^1)^phi f^d + p ((f^d)^phi)^{-t} f^1 at expansion level") {
    for (u64 p : {2, 3, 5})
        for (unsigned N : {2u, 3u})
            for (unsigned D : {3u, 4u}) {
                auto one = expansion_basic(BasicKind::FPartial, 0, 2, p, N, D);
                auto f1 = expansion_basic(BasicKind::FR, 1, 2, p, N, D);
                auto rhs = phi_twist(f1) * one + (phi_twist(one) * f1).scale(static_cast<long long>(p));
                CHECK(expansion_basic(BasicKind::FR, 2, 2, p, N, D) == rhs);
            }
}

TEST_CASE("diamond realization") {
    PolyQ c = PolyQ::constant_int(q, 5);
    CHECK(diamond_realize(c, 2, 2, 3, 3, 4) == PolyP::constant(Zpn(3, 3), 5, 4));
    PolyQ det = sym_det(SymMatrixPoly<QQ>::generic(2, 0, q));
    auto S = psi(2, 3, 3, 4);
    CHECK(diamond_realize(det, 1, 2, 3, 3, 4) == sym_det(S.m));
    auto S1 = phi_twist(psi(2, 3, 3, 4, 2), 1);
    PolyP th = S.m(0, 0) * S1.m(1, 1) + S.m(1, 1) * S1.m(0, 0) - (S.m(0, 1) * S1.m(0, 1)).scale(2);
    CHECK(diamond_realize(theta(2, {1, 1}), 2, 2, 3, 3, 4) == th);
    CHECK_THROWS_AS(diamond_realize(theta(2, {1, 1}), 1, 2, 3, 3, 4), SlotMismatch);
    CHECK_THROWS_AS(diamond_realize(T(0, 1, 3), 1, 2, 3, 3, 4), SlotMismatch);
}

TEST_CASE("club of diamond is the heart image") {
    std::vector<std::pair<PolyQ, unsigned>> cases{
        {sym_det(SymMatrixPoly<QQ>::generic(2, 0, q)), 1},
        {theta(2, {1, 1}), 2},
        {theta(2, {0, 2}), 2},
        {theta(3, {2, 1}), 2},
    };
    for (u64 p : {2, 3})
        for (const auto& [F, r] : cases) {
            std::size_t g = F.variables().back().j();
            unsigned d = static_cast<unsigned>(F.degree());
            Zpn R(p, 3);
            CHECK(club(diamond_realize(F, r, g, p, 3, d), d) == to_padic(heart_image_diamond(F, r, g, p), R, d));
        }
}

TEST_CASE("club of diamond is fixed by SL_2(Z) congruence") {
    // Lambda = [[1, 1], [0, 1]] and [[1, 0], [2, 1]]
    std::vector<std::vector<std::vector<long>>> lams{{{1, 1}, {0, 1}}, {{1, 0}, {2, 1}}, {{2, 1}, {1, 1}}};
    for (const auto& lam : lams) {
        MatQ L(2, q);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) L(i, j) = PolyQ::constant_int(q, lam[i][j]);
        for (const PolyQ& F : {sym_det(SymMatrixPoly<QQ>::generic(2, 0, q)), theta(2, {1, 1})}) {
            unsigned r = F == theta(2, {1, 1}) ? 2 : 1;
            PolyP base = club(diamond_realize(F, r, 2, 3, 3, 2), 2);
            auto moved = congruence_act(L, generic_symmetric(2, r));
            Zpn R(3, 3);
            PolyP sub = base.substitute([&](VarId v) -> std::optional<PolyP> {
                return to_padic(moved.at(v.level())(v.i() - 1, v.j() - 1), R, 2);
            });
            CHECK(sub == base);
        }
    }
}

TEST_CASE("spade and club examples") {
    auto ell = ell_rational(1, 5);
    PolyQ t = T(0, 1, 1);
    CHECK(spade(t, 0, 1, 3, 5) == t - t * t * PolyQ::constant(q, mpq_class(1, 2)) + t.pow(3).scale(mpq_class(1, 3)) -
                                      t.pow(4).scale(mpq_class(1, 4)) + t.pow(5).scale(mpq_class(1, 5)));
    PolyQ det = sym_det(SymMatrixPoly<QQ>::generic(2, 0, q));
    CHECK(spade(det, 1, 2, 3, 4) == sym_det(ell_rational(2, 4)));
    CHECK_THROWS_AS(spade(det, 1, 2, 3, 7), ResourceBound);
    auto S = psi(2, 3, 3, 4);
    const Zpn& R = S.ring();
    CHECK(club(S.m(0, 1), 1) == tp(R, 1, 1, 2, 4) - tp(R, 0, 1, 2, 4));
    CHECK(club(PolyP::constant(R, 4, 4), 0) == PolyP::constant(R, 4, 4));
    // det(T' - T) against the degree-2 truncation of det(Psi)
    MatP lin(2, R, 4);
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) lin(i, j) = tp(R, 1, i + 1, j + 1, 4) - tp(R, 0, i + 1, j + 1, 4);
    CHECK(club(sym_det(S.m), 2) == sym_det(lin));
    // rational Psi reduces to the p-adic one
    CHECK(to_padic(psi_rational(1, 2, 3, 4), R, 4) == S.m);
}

TEST_CASE("check_spade_club") {
    PolyQ det = sym_det(SymMatrixPoly<QQ>::generic(2, 0, q));
    for (u64 p : {2, 3})
        for (unsigned r : {1u, 2u}) {
            CHECK(check_spade_club(det, r, 2, p, 4));
            CHECK(check_spade_club(theta(2, {1, 1}), r, 2, p, 4));
            CHECK(check_spade_club(PolyQ::constant_int(q, 3), r, 2, p, 4));
        }
    CHECK(check_spade_club(theta(2, {0, 1, 1}), 2, 2, 3, 3));
    CHECK_THROWS_AS(check_spade_club(det + T(0, 1, 1), 1, 2, 3, 4), std::invalid_argument);
}

TEST_CASE("cyclic products at expansion level") {
    for (unsigned a = 1; a <= 2; ++a) {
        auto res = cyclic_expansion_check({0, a}, 1, 2, 3, 4);
        CHECK(res.equal);
        auto Q = psi_phi_direct(a, 2, 3, 1, 4);
        CHECK(res.lhs == sym_det(Q.m).scale(2));
    }
    auto r12 = cyclic_expansion_check({1, 2}, 1, 2, 3, 4);
    CHECK(r12.equal);
    CHECK(r12.rhs == sym_det(psi_phi_direct(2, 2, 3, 1, 4).m).scale(2));
    auto r0123 = cyclic_expansion_check({0, 1, 2, 3}, 1, 2, 3, 4);
    CHECK(r0123.equal);
    CHECK(r0123.status != CyclicStatus::Differ);
    auto r01 = cyclic_expansion_check({0, 1, 0, 1}, 1, 2, 3, 4);
    CHECK(r01.status == CyclicStatus::Equal);
    // c_2 starts in degree 8, beyond D = 4
    CHECK(cyclic_expansion_check({0, 1, 0, 1}, 2, 2, 2, 4).status == CyclicStatus::Inconclusive);
    CHECK_THROWS_AS(cyclic_expansion_check({0, 0}, 1, 2, 3, 4), BadCycle);
}

TEST_CASE("full diamond series is not fixed beyond the initial component") {
    QQ qq;
    Zpn R(3, 3);
    PolyQ det = sym_det(SymMatrixPoly<QQ>::generic(2, 0, qq));
    PolyP base = diamond_realize(det, 1, 2, 3, 3, 3);
    MatQ L = MatQ::identity(2, qq);
    L(0, 1) = PolyQ::constant_int(qq, 1);
    auto moved = congruence_act(L, generic_symmetric(2, 1));
    PolyP sub = base.substitute(
        [&](VarId v) -> std::optional<PolyP> { return to_padic(moved.at(v.level())(v.i() - 1, v.j() - 1), R, 3); });
    CHECK(club(sub, 2) == club(base, 2));
    CHECK(club(sub, 3) != club(base, 3));
}
