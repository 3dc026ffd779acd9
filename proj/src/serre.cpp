#include "dinv/serre.hpp"

namespace dinv {

namespace {

const QQ qq;
const ZZ zz;

using PolyZ = MultiPoly<ZZ>;

// T^{(l)} -> (T^{(l)})^p + p T^{(l+1)} on every T-variable
template <class R>
MultiPoly<R> twist(const MultiPoly<R>& f, u64 p, unsigned budget) {
    const R& ring = f.ring();
    const auto P = ring.from_mpz(mpz_class(static_cast<unsigned long>(p)));
    return f.substitute([&](VarId v) -> std::optional<MultiPoly<R>> {
        if (v.family() != Family::T) return MultiPoly<R>::variable(ring, v);
        if (v.level() + 1 > budget) throw LevelOverflow("twist needs level " + std::to_string(v.level() + 1));
        MultiPoly<R> x = MultiPoly<R>::variable(ring, v, f.trunc());
        return x.pow(static_cast<unsigned>(p)) + MultiPoly<R>::variable(ring, v.with_level(v.level() + 1), f.trunc()).scale(P);
    });
}

// u for the entry (i, j) of Psi^{phi^{a-1}}, exactly over Z up to degree D
PolyZ u_direct(unsigned a, unsigned i, unsigned j, u64 p, unsigned D) {
    PolyZ x = PolyZ::variable(zz, tvar(0, i, j), D);  // tau_0
    for (unsigned k = 1; k < a; ++k) x = twist(x, p, a);
    PolyZ y = twist(x, p, a);  // tau_a
    const unsigned e = static_cast<unsigned>(p);
    PolyZ one = PolyZ::constant_int(zz, 1, D);
    PolyZ num = y - ((one + x).pow(e) - one);
    PolyZ dq(zz, D);
    const mpz_class P(static_cast<unsigned long>(p));
    for (const auto& [m, c] : num.terms()) {
        if (c % P != 0) throw std::logic_error("delta numerator not divisible by p");
        dq.add_term(m, c / P);
    }
    // (1 + x)^{-p} = sum_k (-1)^k binom(p + k - 1, k) x^k
    PolyZ inv(zz, D), xk = one;
    for (unsigned k = 0; k <= D && !xk.is_zero(); ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p + k - 1), k);
        if (k % 2) b = -b;
        inv += xk.scale(b);
        xk = xk * x;
    }
    return dq * inv;
}

template <class R>
MultiPoly<R> psi_entry(unsigned a, unsigned i, unsigned j, u64 p, unsigned D, const R& ring, unsigned nmax) {
    PolyZ u = u_direct(a, i, j, p, D);
    MultiPoly<R> ur = u.map_coeffs(ring, [&](const mpz_class& c) { return ring.from_mpz(c); });
    return log1p_scaled_series(ur, p, nmax);
}

void check_slots(const PolyQ& F, unsigned slots, std::size_t g) {
    for (VarId v : F.variables()) {
        if (v.family() != Family::T) throw SlotMismatch("slot variables must be T-variables: " + v.name());
        if (v.level() >= slots) throw SlotMismatch("slot " + std::to_string(v.level()) + " out of range");
        if (v.i() > g || v.j() > g) throw SlotMismatch("matrix index exceeds g");
    }
}

template <class R>
MultiPoly<R> substitute_slots(const MultiPoly<R>& F, const std::vector<MatrixPoly<R>>& slots, unsigned D) {
    return F.substitute(
        [&](VarId v) -> std::optional<MultiPoly<R>> { return slots.at(v.level())(v.i() - 1, v.j() - 1); }, D);
}

ExpansionSeries fpair(unsigned x, unsigned y, std::size_t g, u64 p, unsigned N, unsigned D, unsigned budget) {
    if (x > y) return phi_twist(expansion_basic(BasicKind::FR, x - y, g, p, N, D, budget), y);
    ExpansionSeries s = fpair(y, x, g, p, N, D, budget);
    s.m = s.m.transpose();
    return s;
}

template <class R>
MultiPoly<R> cj(const MatrixPoly<R>& m, unsigned j) {
    return j == 1 ? m.trace() : charpoly_coeffs(m)[j];
}

}  // namespace

ExpansionSeries::ExpansionSeries(std::size_t g_, u64 p_, unsigned N_, unsigned D_, unsigned budget_)
    : g(g_), p(p_), N(N_), D(D_), budget(budget_), m(g_, PolyP(Zpn(p_, N_), D_)) {
    if (N < 1 || D < 1) throw std::invalid_argument("expansions need N >= 1 and D >= 1");
}

ExpansionSeries ExpansionSeries::operator+(const ExpansionSeries& o) const {
    ExpansionSeries r = *this;
    r.m = m + o.m;
    r.top = std::max(top, o.top);
    r.symmetric = symmetric && o.symmetric;
    return r;
}

ExpansionSeries ExpansionSeries::operator*(const ExpansionSeries& o) const {
    ExpansionSeries r = *this;
    r.m = m * o.m;
    r.top = std::max(top, o.top);
    r.symmetric = r.m.is_symmetric();
    return r;
}

ExpansionSeries ExpansionSeries::scale(long long c) const {
    ExpansionSeries r = *this;
    r.m = m.scale(PolyP::constant(ring(), ring().from_int(c), D));
    return r;
}

ExpansionSeries identity_series(std::size_t g, u64 p, unsigned N, unsigned D, unsigned budget) {
    ExpansionSeries s(g, p, N, D, budget);
    s.m = MatP::identity(g, Zpn(p, N), D);
    return s;
}

ExpansionSeries psi(std::size_t g, u64 p, unsigned N, unsigned D, unsigned budget) {
    return psi_phi_direct(1, g, p, N, D, budget);
}

ExpansionSeries psi_phi_direct(unsigned a, std::size_t g, u64 p, unsigned N, unsigned D, unsigned budget) {
    if (a < 1) throw std::invalid_argument("psi_phi_direct needs a >= 1");
    if (a > budget) throw LevelOverflow("Psi^{phi^" + std::to_string(a - 1) + "} needs level " + std::to_string(a));
    ExpansionSeries s(g, p, N, D, budget);
    const unsigned nmax = log_cutoff(p, N);
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = i; j < g; ++j) s.m(i, j) = s.m(j, i) = psi_entry(a, i + 1, j + 1, p, D, s.ring(), nmax);
    s.top = a;
    return s;
}

ExpansionSeries phi_twist(const ExpansionSeries& S, unsigned k) {
    if (S.top + k > S.budget) throw LevelOverflow("twist exceeds the level budget");
    ExpansionSeries r = S;
    for (unsigned t = 0; t < k; ++t) r.m = r.m.map([&](const PolyP& f) { return twist(f, S.p, S.budget); });
    r.top = S.top + k;
    return r;
}

std::string basic_kind_name(BasicKind k) {
    switch (k) {
        case BasicKind::FR: return "f_r";
        case BasicKind::FPartial: return "f_partial";
        case BasicKind::FAngle: return "f_angle";
        case BasicKind::FBracket: return "f_bracket";
    }
    return "?";
}

BasicKind parse_basic_kind(const std::string& s) {
    for (BasicKind k : {BasicKind::FR, BasicKind::FPartial, BasicKind::FAngle, BasicKind::FBracket})
        if (basic_kind_name(k) == s) return k;
    throw std::invalid_argument("unknown kind: " + s);
}

ExpansionSeries expansion_basic(BasicKind kind, unsigned index, std::size_t g, u64 p, unsigned N, unsigned D,
                                unsigned budget) {
    if (kind == BasicKind::FPartial) return identity_series(g, p, N, D, budget);
    if (index < 1) throw std::invalid_argument("index must be >= 1");
    switch (kind) {
        case BasicKind::FR: {
            ExpansionSeries acc = psi_phi_direct(index, g, p, N, D, budget);
            long long pw = 1;
            for (unsigned i = 1; i < index; ++i) {
                pw *= static_cast<long long>(p);
                acc = acc + psi_phi_direct(index - i, g, p, N, D, budget).scale(pw);
            }
            return acc;
        }
        case BasicKind::FAngle:
            return phi_twist(psi(g, p, N, D, budget), index - 1);
        case BasicKind::FBracket: {
            ExpansionSeries base = psi(g, p, N, D, budget);
            ExpansionSeries acc = base;
            long long pw = 1;
            for (unsigned a = 2; a <= index; ++a) {
                pw *= static_cast<long long>(p);
                acc = phi_twist(acc, 1) + base.scale(pw);
            }
            return acc;
        }
        default:
            break;
    }
    throw std::logic_error("unreachable");
}

PolyP to_padic(const PolyQ& f, const Zpn& ring, unsigned D) {
    PolyP r(ring, D);
    for (const auto& [m, c] : f.terms()) r.add_term(m, ring.from_rational(c));
    return r;
}

MatP to_padic(const MatQ& m, const Zpn& ring, unsigned D) {
    MatP r(m.size(), ring, D);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = to_padic(m(i, j), ring, D);
    return r;
}

PolyP diamond_realize(const PolyQ& F, unsigned r, std::size_t g, u64 p, unsigned N, unsigned D) {
    check_slots(F, r, g);
    Zpn ring(p, N);
    PolyP Fp = to_padic(F, ring, D);
    if (r == 0) return Fp;
    std::vector<MatP> slots;
    ExpansionSeries cur = psi(g, p, N, D, r);
    slots.push_back(cur.m);
    for (unsigned k = 1; k < r; ++k) {
        cur = phi_twist(cur, 1);
        slots.push_back(cur.m);
    }
    return substitute_slots(Fp, slots, D);
}

MatQ psi_rational(unsigned a, std::size_t g, u64 p, unsigned D) {
    if (a < 1) throw std::invalid_argument("psi_rational needs a >= 1");
    MatQ m(g, PolyQ(qq, D));
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = i; j < g; ++j) m(i, j) = m(j, i) = psi_entry(a, i + 1, j + 1, p, D, qq, D + 1);
    return m;
}

MatQ ell_rational(std::size_t g, unsigned D) {
    MatQ m(g, PolyQ(qq, D));
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = i; j < g; ++j) {
            PolyQ t = PolyQ::variable(qq, tvar(0, i + 1, j + 1), D), tn = t, acc(qq, D);
            for (unsigned n = 1; n <= D; ++n) {
                acc += tn.scale(mpq_class(n % 2 ? 1 : -1, static_cast<unsigned long>(n)));
                tn = tn * t;
            }
            m(i, j) = m(j, i) = acc;
        }
    return m;
}

PolyQ spade(const PolyQ& F, unsigned r, std::size_t g, u64 p, unsigned D) {
    if (D > 6) throw ResourceBound("spade is capped at degree 6");
    check_slots(F, r + 1, g);
    std::vector<MatQ> slots{ell_rational(g, D)};
    for (unsigned k = 1; k <= r; ++k) slots.push_back(psi_rational(k, g, p, D));
    return substitute_slots(F, slots, D);
}

namespace {

// p^{k-1} (T^{(k)} - T^{(k-1)}) as a matrix
MatQ linear_part(unsigned k, std::size_t g, u64 p) {
    MatQ m(g, qq);
    mpq_class c = 1;
    for (unsigned t = 1; t < k; ++t) c *= static_cast<unsigned long>(p);
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = i; j < g; ++j) {
            PolyQ d = PolyQ::variable(qq, tvar(k, i + 1, j + 1)) - PolyQ::variable(qq, tvar(k - 1, i + 1, j + 1));
            m(i, j) = m(j, i) = d.scale(c);
        }
    return m;
}

}  // namespace

PolyQ heart_image_spade(const PolyQ& F, unsigned r, std::size_t g, u64 p) {
    check_slots(F, r + 1, g);
    std::vector<MatQ> slots{SymMatrixPoly<QQ>::generic(g, 0, qq).to_matrix()};
    for (unsigned k = 1; k <= r; ++k) slots.push_back(linear_part(k, g, p));
    return F.substitute([&](VarId v) -> std::optional<PolyQ> { return slots.at(v.level())(v.i() - 1, v.j() - 1); });
}

PolyQ heart_image_diamond(const PolyQ& F, unsigned r, std::size_t g, u64 p) {
    check_slots(F, r, g);
    std::vector<MatQ> slots;
    for (unsigned k = 0; k < r; ++k) slots.push_back(linear_part(k + 1, g, p));
    return F.substitute([&](VarId v) -> std::optional<PolyQ> { return slots.at(v.level())(v.i() - 1, v.j() - 1); });
}

bool check_spade_club(const PolyQ& F, unsigned r, std::size_t g, u64 p, unsigned D) {
    if (F.is_zero()) return true;
    const unsigned d = static_cast<unsigned>(F.degree());
    if (F.homogeneous_component(d) != F) throw std::invalid_argument("check_spade_club expects a homogeneous polynomial");
    if (d > D) throw std::invalid_argument("truncation below the degree of F");
    return club(spade(F, r, g, p, D), d) == heart_image_spade(F, r, g, p);
}

std::string cyclic_status_name(CyclicStatus s) {
    switch (s) {
        case CyclicStatus::Equal: return "equal";
        case CyclicStatus::Differ: return "differ";
        case CyclicStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

CyclicCheck cyclic_expansion_check(const std::vector<unsigned>& levels, unsigned j, std::size_t g, u64 p, unsigned D) {
    check_cycle_levels(levels);
    if (j < 1 || j > g) throw BadWord("j must lie in 1..g");
    const unsigned N = 1;
    const std::size_t n = levels.size();
    unsigned budget = *std::max_element(levels.begin(), levels.end());
    Zpn ring(p, N);
    // f^{a_1 a_2} (f^{a_3 a_2})^* f^{a_3 a_4} ... (f^{a_1 a_2s})^*
    MatP F = MatP::identity(g, ring, D);
    for (std::size_t t = 0; t < n; t += 2) {
        MatP A = fpair(levels[t], levels[t + 1], g, p, N, D, budget).m;
        MatP B = fpair(levels[(t + 2) % n], levels[t + 1], g, p, N, D, budget).m;
        F = F * A * adjugate(B);
    }
    // Q^{(m_1)} (Q^{(m_2)})^* ..., Q^{(m)} = Psi^{phi^{m-1}}
    MatP Y = MatP::identity(g, ring, D);
    for (std::size_t k = 0; k < n; ++k) {
        unsigned m = std::max(levels[k], levels[(k + 1) % n]);
        MatP Q = psi_phi_direct(m, g, p, N, D, budget).m;
        Y = Y * (k % 2 == 0 ? Q : adjugate(Q));
    }
    CyclicCheck out;
    out.lhs = cj(F, j);
    out.rhs = cj(Y, j);
    out.equal = out.lhs == out.rhs;
    out.nonzero = !out.lhs.is_zero();
    out.status = !out.equal ? CyclicStatus::Differ : out.nonzero ? CyclicStatus::Equal : CyclicStatus::Inconclusive;
    return out;
}

}  // namespace dinv
