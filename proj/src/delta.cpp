#include "dinv/delta.hpp"

namespace dinv {

Weight::Weight(std::vector<long> coeffs) : a_(std::move(coeffs)) { trim(); }

Weight Weight::phi_power(unsigned i, long c) {
    std::vector<long> a(i + 1, 0);
    a[i] = c;
    return Weight(std::move(a));
}

void Weight::trim() {
    while (!a_.empty() && a_.back() == 0) a_.pop_back();
}

long Weight::deg() const {
    long s = 0;
    for (long x : a_) s += x;
    return s;
}

bool Weight::nonnegative() const {
    for (long x : a_)
        if (x < 0) return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const {
    std::vector<long> r(std::max(a_.size(), o.a_.size()), 0);
    for (std::size_t i = 0; i < a_.size(); ++i) r[i] += a_[i];
    for (std::size_t i = 0; i < o.a_.size(); ++i) r[i] += o.a_[i];
    return Weight(std::move(r));
}

Weight Weight::operator-() const {
    std::vector<long> r = a_;
    for (long& x : r) x = -x;
    return Weight(std::move(r));
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator*(const Weight& o) const {
    if (a_.empty() || o.a_.empty()) return Weight();
    std::vector<long> r(a_.size() + o.a_.size() - 1, 0);
    for (std::size_t i = 0; i < a_.size(); ++i)
        for (std::size_t j = 0; j < o.a_.size(); ++j) r[i + j] += a_[i] * o.a_[j];
    return Weight(std::move(r));
}

std::string Weight::str() const {
    if (a_.empty()) return "[0]";
    std::string s = "[";
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a_[i]);
    }
    return s + "]";
}

namespace {

using P = DeltaPoly;

P delta_var(const Zpn& ring, VarId v) {
    if (v.family() != Family::Z) throw std::invalid_argument("delta is defined on z-variables only: " + v.name());
    return P::variable(ring, v.with_level(v.level() + 1));
}

// DAX2 peeled one variable at a time
P delta_monomial(const Zpn& ring, const Monomial& m, std::map<Monomial, P>& cache) {
    if (m.is_one()) return P(ring);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto fs = m.factors();
    VarId v = VarId::from_code(fs.front().first);
    if (--fs.front().second == 0) fs.erase(fs.begin());
    Monomial rest = Monomial::from_factors(fs);
    const unsigned p = static_cast<unsigned>(ring.p);
    P x = P::variable(ring, v), dx = delta_var(ring, v);
    P r = P::monomial(ring, rest, ring.one());
    P dr = delta_monomial(ring, rest, cache);
    P out = x.pow(p) * dr + r.pow(p) * dx + (dx * dr).scale(ring.from_int(static_cast<long long>(p)));
    cache.emplace(m, out);
    return out;
}

}  // namespace

DeltaPoly canonical_delta(const DeltaPoly& F) {
    const Zpn& ring = F.ring();
    if (ring.N < 2) throw PrecisionExhausted("canonical_delta needs precision >= 2");
    const u64 p = ring.p;
    const long long pl = static_cast<long long>(p);
    std::map<Monomial, P> cache;
    P acc(ring), dacc(ring);
    for (const auto& [m, c] : F.terms()) {
        P cm = P::constant(ring, c), mm = P::monomial(ring, m, ring.one());
        P dc = P::constant(ring, fermat_quotient(TruncatedPadic(p, ring.N, mpz_class(static_cast<unsigned long>(c)))).residue().get_ui());
        P dm = delta_monomial(ring, m, cache);
        P dt = cm.pow(static_cast<unsigned>(p)) * dm + mm.pow(static_cast<unsigned>(p)) * dc + (dc * dm).scale(ring.from_int(pl));
        P t = P::monomial(ring, m, c);
        dacc = dacc + dt + cp_poly(acc, t, p);
        acc += t;
    }
    Zpn low(p, ring.N - 1);
    return dacc.map_coeffs(low, [&](u64 c) { return c % low.m; });
}

MultiPoly<ZZ> lift_to_integers(const DeltaPoly& F) {
    return F.map_coeffs(ZZ{}, [](u64 c) { return mpz_class(static_cast<unsigned long>(c)); });
}

DeltaPoly reduce_mod(const MultiPoly<ZZ>& F, u64 p, unsigned N) {
    Zpn ring(p, N);
    return F.map_coeffs(ring, [&](const mpz_class& c) { return ring.from_mpz(c); });
}

namespace {

MultiPoly<ZZ> divide_by_p(const MultiPoly<ZZ>& F, u64 p) {
    MultiPoly<ZZ> r(F.ring(), F.trunc());
    for (const auto& [m, c] : F.terms()) {
        if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p)))
            throw NotDivisible("coefficient " + c.get_str() + " is not divisible by " + std::to_string(p));
        r.add_term(m, c / static_cast<unsigned long>(p));
    }
    return r;
}

}  // namespace

DeltaPoly delta_via_lift(const DeltaPoly& F) {
    const Zpn& ring = F.ring();
    if (ring.N < 2) throw PrecisionExhausted("delta needs precision >= 2");
    MultiPoly<ZZ> f = lift_to_integers(F);
    MultiPoly<ZZ> num = frobenius_lift(f, ring.p) - f.pow(static_cast<unsigned>(ring.p));
    return reduce_mod(divide_by_p(num, ring.p), ring.p, ring.N - 1);
}

MultiPoly<ZZ> delta_bracket(const MultiPoly<ZZ>& b1, const MultiPoly<ZZ>& b2, u64 p) {
    const unsigned e = static_cast<unsigned>(p);
    MultiPoly<ZZ> num = b1.pow(e) * frobenius_lift(b2, p) - b2.pow(e) * frobenius_lift(b1, p);
    return divide_by_p(num, p);
}

MultiPoly<QQ> delta_bracket(const MultiPoly<QQ>& b1, const MultiPoly<QQ>& b2, u64 p) {
    const unsigned e = static_cast<unsigned>(p);
    MultiPoly<QQ> num = b1.pow(e) * frobenius_lift(b2, p) - b2.pow(e) * frobenius_lift(b1, p);
    return num.scale(mpq_class(1, static_cast<unsigned long>(p)));
}

VarId phi_coord(unsigned i, unsigned j) { return VarId(Family::Aux, j + 1, i); }

MultiPoly<QQ> level_in_phi_coords(unsigned i, unsigned l, u64 p) {
    QQ q;
    // E_0 = w_0, E_{k+1} = (shift(E_k) - E_k^p)/p with shift w_j -> w_{j+1}
    MultiPoly<QQ> e = MultiPoly<QQ>::variable(q, phi_coord(i, 0));
    for (unsigned k = 0; k < l; ++k) {
        MultiPoly<QQ> shifted = e.substitute([&](VarId v) -> std::optional<MultiPoly<QQ>> {
            return MultiPoly<QQ>::variable(q, v.with_level(v.level() + 1));
        });
        e = (shifted - e.pow(static_cast<unsigned>(p))).scale(mpq_class(1, static_cast<unsigned long>(p)));
    }
    return e;
}

std::map<Weight, MultiPoly<QQ>> delta_homog_decompose(const MultiPoly<QQ>& F, u64 p, const Weight& base) {
    QQ q;
    std::map<VarId, MultiPoly<QQ>> images;
    for (VarId v : F.variables()) {
        if (v.family() != Family::Z) throw std::invalid_argument("decomposition expects z-variables: " + v.name());
        images.emplace(v, level_in_phi_coords(v.i(), v.level(), p));
    }
    MultiPoly<QQ> G = F.untruncated().substitute(images);
    std::map<Weight, MultiPoly<QQ>> out;
    for (const auto& [m, c] : G.terms()) {
        Weight w;
        for (const auto& [code, e] : m.factors())
            w = w + base * Weight::phi_power(VarId::from_code(code).level() - 1, static_cast<long>(e));
        auto it = out.try_emplace(w, MultiPoly<QQ>(q)).first;
        it->second.add_term(m, c);
    }
    return out;
}

bool in_S(const MultiPoly<QQ>& F, u64 p, const Weight& w, const Weight& base) {
    for (const auto& [m, c] : F.terms())
        if (valuation(c, p) < 0) return false;
    if (F.is_zero()) return true;
    auto comps = delta_homog_decompose(F, p, base);
    return comps.size() == 1 && comps.begin()->first == w;
}

}  // namespace dinv
