#include "dinv/quad.hpp"

#include <mutex>
#include <numeric>

namespace dinv {

namespace {

const QQ qq;

PolyQ var(VarId v) { return PolyQ::variable(qq, v); }
PolyQ cst(long long c) { return PolyQ::constant_int(qq, c); }

std::vector<VarId> t_vars(std::size_t g, unsigned r) {
    std::vector<VarId> out;
    for (unsigned l = 0; l <= r; ++l)
        for (unsigned i = 1; i <= g; ++i)
            for (unsigned j = i; j <= g; ++j) out.push_back(tvar(l, i, j));
    return out;
}

VarId y_aux(unsigned l) { return auxvar(1000 + l); }

// clear denominators and content so kernel vectors print as primitive integer vectors
std::vector<mpq_class> primitive(std::vector<mpq_class> v) {
    mpz_class den = 1, num = 0;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    for (auto& x : v) {
        x *= den;
        if (x != 0) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (num != 0)
        for (auto& x : v) x /= num;
    return v;
}

}  // namespace

std::string HalfInt::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::vector<MatQ> generic_tuple(std::size_t g, unsigned r) {
    std::vector<MatQ> out;
    for (unsigned l = 0; l <= r; ++l) out.push_back(SymMatrixPoly<QQ>::generic(g, l, qq).to_matrix());
    return out;
}

std::vector<Monomial> torus_slice(std::size_t g, unsigned r, HalfInt s) {
    if (s.twice < 0) throw std::invalid_argument("s must be nonnegative");
    if ((static_cast<long>(g) * s.twice) % 2 != 0) throw HalfIntegerInvalid("g s is not an integer");
    const unsigned target = static_cast<unsigned>(s.twice);
    std::vector<VarId> vars = t_vars(g, r);
    std::vector<Monomial> out;
    std::vector<unsigned> index(g + 1, 0);
    std::vector<Monomial::Factor> cur;
    // depth-first over variables; each T_ij adds one to Index_i and Index_j
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == vars.size()) {
            for (std::size_t m = 1; m <= g; ++m)
                if (index[m] != target) return;
            out.push_back(Monomial::from_factors(cur));
            return;
        }
        const unsigned i = vars[k].i(), j = vars[k].j();
        rec(k + 1);
        unsigned e = 0;
        while (true) {
            index[i] += 1;
            index[j] += 1;
            ++e;
            if (index[i] > target || index[j] > target) break;
            cur.emplace_back(vars[k].code(), e);
            rec(k + 1);
            cur.pop_back();
        }
        index[i] -= e;
        index[j] -= e;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// image of T^{(l)}_{ij} under the derivation of e_{ab}: [i==a] T_{bj} + [j==a] T_{ib}
std::vector<std::pair<VarId, long>> derivation_image(VarId v, unsigned a, unsigned b) {
    std::vector<std::pair<VarId, long>> out;
    const unsigned l = v.level(), i = v.i(), j = v.j();
    if (i == a) out.emplace_back(tvar(l, b, j), 1);
    if (j == a) out.emplace_back(tvar(l, i, b), 1);
    if (out.size() == 2 && out[0].first == out[1].first) out = {{out[0].first, 2}};
    return out;
}

Monomial replace_factor(const Monomial& m, VarId from, VarId to) {
    std::vector<Monomial::Factor> f = m.factors();
    for (auto it = f.begin(); it != f.end(); ++it)
        if (it->first == from.code()) {
            if (--it->second == 0) f.erase(it);
            break;
        }
    f.emplace_back(to.code(), 1);
    return Monomial::from_factors(std::move(f));
}

}  // namespace

PolyQ lie_derivation(const PolyQ& G, std::size_t g, unsigned a, unsigned b) {
    if (a < 1 || b < 1 || a > g || b > g) throw std::out_of_range("root index out of range");
    PolyQ out(qq, G.trunc());
    for (const auto& [m, c] : G.terms())
        for (const auto& [code, e] : m.factors()) {
            VarId v = VarId::from_code(code);
            if (v.family() != Family::T) continue;
            for (const auto& [w, k] : derivation_image(v, a, b))
                out.add_term(replace_factor(m, v, w), c * static_cast<long>(e) * k);
        }
    return out;
}

bool lie_invariant(const PolyQ& G, std::size_t g) {
    // torus: every term must have equal Index_m
    for (const auto& [m, c] : G.terms()) {
        std::vector<unsigned> idx(g + 1, 0);
        for (const auto& [code, e] : m.factors()) {
            VarId v = VarId::from_code(code);
            idx[v.i()] += e;
            idx[v.j()] += e;
        }
        for (std::size_t k = 2; k <= g; ++k)
            if (idx[k] != idx[1]) return false;
    }
    for (unsigned a = 1; a <= g; ++a)
        for (unsigned b = 1; b <= g; ++b)
            if (a != b && !lie_derivation(G, g, a, b).is_zero()) return false;
    return true;
}

InvariantBasis invariant_dimension(std::size_t g, unsigned r, HalfInt s, std::size_t monomial_cap) {
    InvariantBasis out;
    out.g = g;
    out.r = r;
    out.s = s;
    if (g == 0) throw std::invalid_argument("g must be positive");
    if ((static_cast<long>(g) * s.twice) % 2 != 0) return out;  // no homogeneous polynomials of degree gs
    std::vector<Monomial> slice = torus_slice(g, r, s);
    out.slice_size = slice.size();
    if (slice.size() > monomial_cap)
        throw ResourceBound("torus slice has " + std::to_string(slice.size()) + " monomials, cap " + std::to_string(monomial_cap));
    if (slice.empty()) return out;
    std::map<Monomial, std::size_t> col;
    for (std::size_t k = 0; k < slice.size(); ++k) col.emplace(slice[k], k);

    // simple root vectors e_{a,a+1}, e_{a+1,a} generate sl_g together with the torus
    ExactMatrix<QQ> A(qq, 0, slice.size());
    for (unsigned a = 1; a < g; ++a)
        for (auto [x, y] : {std::pair<unsigned, unsigned>{a, a + 1}, std::pair<unsigned, unsigned>{a + 1, a}}) {
            std::map<Monomial, ExactMatrix<QQ>::Row> rows;
            for (std::size_t k = 0; k < slice.size(); ++k)
                for (const auto& [code, e] : slice[k].factors()) {
                    VarId v = VarId::from_code(code);
                    for (const auto& [w, mult] : derivation_image(v, x, y))
                        rows[replace_factor(slice[k], v, w)].emplace_back(k, mpq_class(static_cast<long>(e) * mult));
                }
            for (auto& [m, row] : rows) A.append_row(std::move(row));
        }
    auto ker = kernel_basis(A);
    out.dimension = ker.size();
    for (auto& v : ker) {
        v = primitive(std::move(v));
        PolyQ f(qq);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) f.add_term(slice[k], v[k]);
        out.basis.push_back(std::move(f));
    }
    return out;
}

std::vector<std::vector<unsigned>> multidegrees(std::size_t g, unsigned r) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(r + 1, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
        if (pos == r) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int k = static_cast<int>(left); k >= 0; --k) {
            cur[pos] = static_cast<unsigned>(k);
            rec(pos + 1, left - static_cast<unsigned>(k));
        }
    };
    rec(0, static_cast<unsigned>(g));
    return out;
}

std::vector<std::vector<unsigned>> delta3(std::size_t g, unsigned r) {
    std::vector<std::vector<unsigned>> out;
    for (const auto& m : multidegrees(g, r)) {
        unsigned tail = 0;
        for (unsigned k = 2; k <= r; ++k) tail += m[k] != 0;
        if (tail <= 1) out.push_back(m);
    }
    return out;
}

std::map<std::vector<unsigned>, PolyQ> theta_all(std::size_t g, unsigned r) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, unsigned>, std::map<std::vector<unsigned>, PolyQ>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({g, r});
        if (it != cache.end()) return it->second;
    }
    MatQ M(g, qq);
    auto tuple = generic_tuple(g, r);
    for (unsigned l = 0; l <= r; ++l) M = M + tuple[l].scale(var(y_aux(l)));
    PolyQ d = sym_det(M);
    std::map<std::vector<unsigned>, PolyQ> out;
    for (const auto& m : multidegrees(g, r)) out.emplace(m, PolyQ(qq));
    for (const auto& [mono, c] : d.terms()) {
        std::vector<unsigned> key(r + 1, 0);
        std::vector<Monomial::Factor> rest;
        for (const auto& [code, e] : mono.factors()) {
            VarId v = VarId::from_code(code);
            if (v.family() == Family::Aux) key[v.i() - 1000] = e;
            else rest.emplace_back(code, e);
        }
        out.at(key).add_term(Monomial::from_factors(rest), c);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(g, r), out);
    return out;
}

PolyQ theta(std::size_t g, const std::vector<unsigned>& m) {
    if (m.empty()) throw BadMultidegree("empty multidegree");
    if (std::accumulate(m.begin(), m.end(), 0u) != g) throw BadMultidegree("multidegree must sum to g");
    return theta_all(g, static_cast<unsigned>(m.size() - 1)).at(m);
}

PolyQ upsilon(std::size_t g, const std::vector<unsigned>& levels) {
    const std::size_t n = g * (g + 1) / 2;
    if (levels.size() != n) throw BadLevels("need g(g+1)/2 levels");
    for (std::size_t k = 1; k < levels.size(); ++k)
        if (levels[k] <= levels[k - 1]) throw BadLevels("levels must be strictly increasing");
    MatQ M(n, qq);
    std::size_t row = 0;
    for (unsigned i = 1; i <= g; ++i)
        for (unsigned j = i; j <= g; ++j, ++row)
            for (std::size_t k = 0; k < n; ++k) M(row, k) = var(tvar(levels[k], i, j));
    return sym_det(M);
}

PolyQ jmath(const PolyQ& f, std::size_t g) {
    if (g != 2) throw WrongG("the j-map is defined for g = 2 only");
    return f.substitute([](VarId v) -> std::optional<PolyQ> {
        if (v.family() != Family::T) return var(v);
        if (v.i() > 2 || v.j() > 2) throw WrongG("T-variable index exceeds 2");
        PolyQ u = var(uvar(v.level())), w = var(vvar(v.level()));
        if (v.i() == 1 && v.j() == 1) return u * u;
        if (v.i() == 2 && v.j() == 2) return w * w;
        return u * w;
    });
}

PolyQ plucker_y(unsigned i, unsigned j) { return var(uvar(i)) * var(vvar(j)) - var(vvar(i)) * var(uvar(j)); }

namespace {

void check_cycle(const std::vector<unsigned>& c) {
    if (c.size() < 2) throw BadIndices("cycle needs at least two levels");
    std::vector<unsigned> s = c;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw BadIndices("repeated level in cycle");
}

}  // namespace

PolyQ xi_target(const std::vector<unsigned>& cycle) {
    check_cycle(cycle);
    PolyQ acc = cst(-1);
    for (std::size_t k = 0; k < cycle.size(); ++k) acc = acc * plucker_y(cycle[k], cycle[(k + 1) % cycle.size()]);
    return acc;
}

PolyQ xi_lift(const std::vector<unsigned>& cycle) {
    PolyQ target = xi_target(cycle);
    // unknowns: prod_{l in cycle} T^{(l)}_{ab}, multilinear in the levels
    std::vector<Monomial> unknowns{Monomial()};
    for (unsigned l : cycle) {
        std::vector<Monomial> next;
        for (const auto& m : unknowns)
            for (auto [a, b] : {std::pair<unsigned, unsigned>{1, 1}, {1, 2}, {2, 2}}) next.push_back(m * Monomial(tvar(l, a, b)));
        unknowns = std::move(next);
    }
    std::map<Monomial, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, mpq_class>>> cols;
    for (const auto& m : unknowns) {
        PolyQ img = jmath(PolyQ::monomial(qq, m, 1));
        std::vector<std::pair<std::size_t, mpq_class>> c;
        for (const auto& [um, uc] : img.terms()) c.emplace_back(row_of.try_emplace(um, row_of.size()).first->second, uc);
        cols.push_back(std::move(c));
    }
    for (const auto& [um, uc] : target.terms()) row_of.try_emplace(um, row_of.size());
    std::vector<ExactMatrix<QQ>::Row> rows(row_of.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (const auto& [r, c] : cols[k]) rows[r].emplace_back(k, c);
    ExactMatrix<QQ> A(qq, 0, unknowns.size());
    for (auto& r : rows) A.append_row(std::move(r));
    std::vector<mpq_class> b(row_of.size(), 0);
    for (const auto& [um, uc] : target.terms()) b[row_of.at(um)] = uc;
    auto x = solve(A, b);
    if (!x) throw NoSolution("no lift of the circular product");
    if (rank(A) != unknowns.size()) throw NoSolution("lift is not unique");
    PolyQ out(qq);
    for (std::size_t k = 0; k < unknowns.size(); ++k) out.add_term(unknowns[k], (*x)[k]);
    return out;
}

namespace {

// Laplace expansion along rows, memoized on the set of used columns
PolyQ det_memo(const MatQ& M) {
    const std::size_t n = M.size();
    if (n > 20) throw SizeTooLarge("matrix too large");
    std::map<std::uint32_t, PolyQ> memo;
    std::function<PolyQ(std::size_t, std::uint32_t)> rec = [&](std::size_t row, std::uint32_t used) -> PolyQ {
        if (row == n) return cst(1);
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        PolyQ acc(qq);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (used & (1u << c)) continue;
            if (!M(row, c).is_zero()) {
                PolyQ t = M(row, c) * rec(row + 1, used | (1u << c));
                acc = sign > 0 ? acc + t : acc - t;
            }
            sign = -sign;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return rec(0, 0);
}

}  // namespace

PolyQ binary_discriminant(std::size_t g) {
    if (g < 2) throw std::invalid_argument("discriminant needs degree >= 2");
    if (g > 4) throw SizeTooLarge("discriminant supports g <= 4");
    const std::size_t n = 2 * g - 1;
    std::vector<PolyQ> f, df;
    for (std::size_t k = 0; k <= g; ++k) f.push_back(var(auxvar(static_cast<unsigned>(k))));
    for (std::size_t k = 0; k < g; ++k) df.push_back(f[k].scale(mpq_class(static_cast<long>(g - k))));
    MatQ S(n, qq);
    for (std::size_t r = 0; r + 1 < g; ++r)
        for (std::size_t k = 0; k <= g; ++k) S(r, r + k) = f[k];
    for (std::size_t r = 0; r < g; ++r)
        for (std::size_t k = 0; k < g; ++k) S(g - 1 + r, r + k) = df[k];
    PolyQ res = det_memo(S);
    // divide by a_0
    VarId a0 = auxvar(0);
    PolyQ out(qq);
    for (const auto& [m, c] : res.terms()) {
        if (m.exponent(a0) == 0) throw std::logic_error("resultant not divisible by leading coefficient");
        std::vector<Monomial::Factor> fs = m.factors();
        for (auto& fe : fs)
            if (fe.first == a0.code()) fe.second -= 1;
        out.add_term(Monomial::from_factors(fs), ((g * (g - 1) / 2) % 2 == 0) ? c : mpq_class(-c));
    }
    return out;
}

VarId theta_symbol(unsigned k) { return VarId(Family::Aux, 254, k); }

PolyQ tact_invariant(std::size_t g) {
    std::map<VarId, PolyQ> sub;
    for (unsigned k = 0; k <= g; ++k) sub.emplace(auxvar(k), var(theta_symbol(k)));
    return binary_discriminant(g).substitute(sub);
}

PolyQ separating_F0(std::size_t g, u64 p) {
    PolyQ F1 = p == 2 ? var(theta_symbol(1)) : cst(1);
    return var(theta_symbol(0)) * F1 * tact_invariant(g);
}

PolyQ compose_with_thetas(const PolyQ& f, std::size_t g) {
    std::map<VarId, PolyQ> sub;
    for (unsigned k = 0; k <= g; ++k) sub.emplace(theta_symbol(k), theta(g, {static_cast<unsigned>(g) - k, k}));
    return f.substitute_partial(sub);
}

mpq_class evaluate_on_pair(const PolyQ& f, const std::vector<std::vector<mpq_class>>& Q0,
                           const std::vector<std::vector<mpq_class>>& Q1) {
    const std::size_t g = Q0.size();
    if (Q1.size() != g) throw SizeMismatch("pair sizes differ");
    auto point = [&](VarId v) -> mpq_class {
        if (v.family() != Family::T) throw UnboundVariable("no value for " + v.name());
        const auto& Q = v.level() == 0 ? Q0 : Q1;
        return Q.at(v.i() - 1).at(v.j() - 1);
    };
    std::map<std::uint32_t, mpq_class> th;
    for (unsigned k = 0; k <= g; ++k) th[theta_symbol(k).code()] = theta(g, {static_cast<unsigned>(g) - k, k}).evaluate(point);
    return f.evaluate([&](VarId v) -> mpq_class {
        auto it = th.find(v.code());
        if (it != th.end()) return it->second;
        return point(v);
    });
}

RelationResult cyclic_relation_check(const std::vector<unsigned>& q, unsigned s, unsigned r) {
    const std::size_t m = q.size();
    if (r < 3) throw BadIndices("cyclic relations need r >= 3");
    if (m < 4 || m > r + 1) throw BadIndices("need 4 <= m <= r + 1");
    if (s < 3 || s > m - 1) throw BadIndices("split point must lie in {3, ..., m-1}");
    for (unsigned x : q)
        if (x > r) throw BadIndices("level exceeds r");
    check_cycle(q);
    // 1-based positions as in the statement
    auto at = [&](std::size_t k) { return q[k - 1]; };
    std::vector<unsigned> w1{at(1)}, w2, w3{at(1), at(s)};
    for (std::size_t k = s + 1; k <= m; ++k) w1.push_back(at(k));
    for (std::size_t k = 2; k <= s; ++k) w2.push_back(at(k));
    for (std::size_t k = s - 1; k >= 2; --k) w3.push_back(at(k));
    for (std::size_t k = s + 1; k <= m; ++k) w3.push_back(at(k));
    PolyQ lhs = xi_lift(q) + xi_lift(w1) * xi_lift(w2);
    PolyQ rhs = xi_lift(w3);
    if (s % 2 == 1) rhs = -rhs;
    PolyQ diff = lhs - rhs;
    RelationResult out;
    out.holds = diff.is_zero();
    out.witness = out.holds ? "lhs - rhs = 0 (" + std::to_string(lhs.size()) + " terms)"
                            : "lhs - rhs has " + std::to_string(diff.size()) + " terms";
    return out;
}

VarId theta_y_symbol(unsigned a, unsigned b) {
    if (a > b) std::swap(a, b);
    return VarId(Family::Aux, 255, a, b);
}

namespace {

PolyQ theta_of_symbol(VarId v, unsigned r) {
    std::vector<unsigned> m(r + 1, 0);
    m[v.i()] += 1;
    m[v.j()] += 1;
    return theta(2, m);
}

}  // namespace

PluckerResult plucker_check(unsigned i, unsigned j, unsigned n, unsigned s) {
    std::vector<unsigned> idx{i, j, n, s};
    {
        std::vector<unsigned> t = idx;
        std::sort(t.begin(), t.end());
        if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw BadIndices("indices must be distinct");
    }
    const unsigned r = *std::max_element(idx.begin(), idx.end());
    std::vector<VarId> syms;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a; b < 4; ++b) syms.push_back(theta_y_symbol(idx[a], idx[b]));
    // quartic monomials of partial degree 2 at each of the four levels
    std::vector<Monomial> slice;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == 4) {
            std::map<unsigned, unsigned> deg;
            std::vector<Monomial::Factor> fs;
            for (std::size_t k : pick) {
                deg[syms[k].i()] += 1;
                deg[syms[k].j()] += 1;
                fs.emplace_back(syms[k].code(), 1);
            }
            for (unsigned x : idx)
                if (deg[x] != 2) return;
            slice.push_back(Monomial::from_factors(fs));
            return;
        }
        for (std::size_t k = start; k < syms.size(); ++k) {
            pick.push_back(k);
            rec(k);
            pick.pop_back();
        }
    };
    rec(0);
    std::map<VarId, PolyQ> to_t;
    for (VarId v : syms) to_t.emplace(v, theta_of_symbol(v, r));

    std::map<Monomial, std::size_t> row_of;
    std::vector<ExactMatrix<QQ>::Row> rows;
    for (std::size_t k = 0; k < slice.size(); ++k) {
        PolyQ img = PolyQ::monomial(qq, slice[k], 1).substitute(to_t);
        for (const auto& [m, c] : img.terms()) {
            auto [it, fresh] = row_of.try_emplace(m, rows.size());
            if (fresh) rows.emplace_back();
            rows[it->second].emplace_back(k, c);
        }
    }
    ExactMatrix<QQ> A(qq, 0, slice.size());
    for (auto& row : rows) A.append_row(std::move(row));
    auto ker = kernel_basis(A);

    PluckerResult out;
    out.slice_size = slice.size();
    out.kernel_dim = ker.size();
    auto Y = [&](unsigned a, unsigned b) { return var(theta_y_symbol(a, b)); };
    PolyQ Am = Y(i, j) * Y(n, s), Bm = Y(i, n) * Y(j, s), Cm = Y(i, s) * Y(j, n);
    PolyQ corrected = Am * Am + Bm * Bm + Cm * Cm - (Am * Bm + Bm * Cm + Am * Cm).scale(2);
    // Theta^Y_(ab) -> j(Theta_(ab)); det symbols go to j(det) = 0
    std::map<VarId, PolyQ> to_y;
    for (VarId v : syms) to_y.emplace(v, jmath(to_t.at(v)));
    if (ker.size() == 1) {
        PolyQ quartic(qq), nondet(qq);
        for (std::size_t k = 0; k < slice.size(); ++k) quartic.add_term(slice[k], ker[0][k]);
        mpq_class lead = quartic.coeff((Am * Am).terms().begin()->first);
        if (lead != 0) quartic = quartic.scale(1 / lead);
        for (const auto& [m, c] : quartic.terms()) {
            bool has_det = false;
            for (const auto& [code, e] : m.factors()) has_det |= VarId::from_code(code).i() == VarId::from_code(code).j();
            if (!has_det) nondet.add_term(m, c);
        }
        out.quartic = quartic;
        out.jimage_zero = nondet.substitute(to_y).is_zero();
        out.matches_corrected = nondet == corrected;
    }
    PolyQ literal = Am * Am + Bm * Bm + Bm * Bm +
                    (Y(i, j) * Y(i, n) * Y(n, s) * Y(j, s) + Y(i, j) * Y(i, n) * Y(n, s) * Y(j, n) +
                     Y(i, n) * Y(i, s) * Y(j, s) * Y(j, n)).scale(2);
    out.literal_display_zero = literal.substitute(to_y).is_zero();
    return out;
}

namespace {

mpz_class binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

HilbertSeries hilbert_closed(unsigned r, std::size_t K, HilbertVariant v) {
    HilbertSeries h;
    if (v == HilbertVariant::Even) {
        switch (r) {
            case 1: h.numerator = {1}; h.denominator_exponent = 3; break;
            case 2: h.numerator = {1}; h.denominator_exponent = 6; break;
            case 3: h.numerator = {1, 1, 1, 1}; h.denominator_exponent = 9; break;
            case 4: h.numerator = {1, 3, 6, 10}; h.denominator_exponent = 12; break;
            default: throw UnsupportedR("even closed form known for r <= 4");
        }
    } else {
        if (r < 2) throw UnsupportedR("Grassmannian series needs r >= 2");
        for (unsigned j = 1; j + 1 <= r; ++j)
            h.numerator.push_back(mpq_class(binom(r - 1, j) * binom(r - 1, j - 1), static_cast<unsigned long>(r - 1)));
        for (auto& c : h.numerator) c.canonicalize();
        h.denominator_exponent = 2 * r - 1;
    }
    const long e = h.denominator_exponent;
    for (std::size_t k = 0; k < K; ++k) {
        mpq_class c = 0;
        for (std::size_t t = 0; t < h.numerator.size() && t <= k; ++t)
            c += h.numerator[t] * binom(static_cast<long>(k - t) + e - 1, e - 1);
        h.coefficients.push_back(c);
    }
    return h;
}

std::size_t plucker_monomial_rank(unsigned r, unsigned d) {
    std::vector<PolyQ> ys;
    for (unsigned i = 0; i <= r; ++i)
        for (unsigned j = i + 1; j <= r; ++j) ys.push_back(plucker_y(i, j));
    std::vector<PolyQ> images;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == d) {
            PolyQ p = cst(1);
            for (std::size_t k : pick) p = p * ys[k];
            images.push_back(p);
            return;
        }
        for (std::size_t k = start; k < ys.size(); ++k) {
            pick.push_back(k);
            rec(k);
            pick.pop_back();
        }
    };
    rec(0);
    std::map<Monomial, std::size_t> col;
    for (const auto& p : images)
        for (const auto& t : p.terms()) col.try_emplace(t.first, col.size());
    ExactMatrix<QQ> A(qq, 0, col.size());
    for (const auto& p : images) {
        ExactMatrix<QQ>::Row row;
        for (const auto& [m, c] : p.terms()) row.emplace_back(col.at(m), c);
        A.append_row(std::move(row));
    }
    return rank(A);
}

std::size_t b0_count_g2(u64 q, u64 d12) {
    std::size_t n = 0;
    for (u64 x = 0; x < q; ++x)
        if (x * x % q == d12 % q) ++n;
    return n;
}

namespace {

struct Fmod {
    u64 q;
    u64 add(u64 a, u64 b) const { return (a + b) % q; }
    u64 sub(u64 a, u64 b) const { return (a + q - b) % q; }
    u64 mul(u64 a, u64 b) const { return a * b % q; }
};

}  // namespace

std::size_t b0_count_g3(u64 q, const B0Params& prm) {
    Fmod F{q};
    std::vector<std::vector<u64>> roots(q);
    for (u64 v = 0; v < q; ++v) roots[F.mul(v, v)].push_back(v);
    const u64 a = prm.alpha, b = prm.beta, c = prm.gamma, nu = prm.nu;
    const u64 S = F.add(F.add(F.mul(a, a), F.mul(b, b)), F.mul(c, c));
    const u64 R = F.add(F.mul(b, b), F.mul(nu, F.mul(c, c)));
    const u64 K = F.sub(F.mul(F.mul(a, b), c), F.mul(c, c));
    std::size_t n = 0;
    for (u64 z = 0; z < q; ++z) {
        const u64 z2 = F.mul(z, z);
        for (u64 y : roots[F.sub(R, F.mul(nu, z2))]) {
            const u64 rhs = F.add(K, z2);  // x y z
            const u64 x2 = F.sub(F.sub(S, F.mul(y, y)), z2);
            const u64 yz = F.mul(y, z);
            if (yz != 0) {
                u64 x = F.mul(rhs, invmod(yz, q));
                if (F.mul(x, x) == x2) ++n;
            } else if (rhs == 0) {
                n += roots[x2].size();
            }
        }
    }
    return n;
}

std::size_t b0_count_g3_bruteforce(u64 q, const B0Params& prm) {
    Fmod F{q};
    const u64 a = prm.alpha, b = prm.beta, c = prm.gamma, nu = prm.nu;
    const u64 S = F.add(F.add(F.mul(a, a), F.mul(b, b)), F.mul(c, c));
    const u64 R = F.add(F.mul(b, b), F.mul(nu, F.mul(c, c)));
    const u64 K = F.sub(F.mul(F.mul(a, b), c), F.mul(c, c));
    std::size_t n = 0;
    for (u64 x = 0; x < q; ++x)
        for (u64 y = 0; y < q; ++y)
            for (u64 z = 0; z < q; ++z) {
                if (F.add(F.add(F.mul(x, x), F.mul(y, y)), F.mul(z, z)) != S) continue;
                if (F.add(F.mul(y, y), F.mul(nu, F.mul(z, z))) != R) continue;
                if (F.sub(F.mul(F.mul(x, y), z), F.mul(z, z)) != K) continue;
                ++n;
            }
    return n;
}

B0Result b0_count(unsigned g, u64 q, std::size_t trials, std::uint64_t seed) {
    if (g != 2 && g != 3) throw BadField("b0 counts are implemented for g in {2, 3}");
    if (q < 5 || !is_prime(q) || q % 2 == 0 || q % 3 == 0) throw BadField("q must be a prime not dividing 6");
    if (g == 3 && q > 1000) throw BadField("q must be at most 1000 for g = 3");
    std::mt19937_64 rng(seed);
    B0Result out;
    for (std::size_t t = 0; t < trials; ++t) {
        B0Params prm;
        std::size_t c;
        if (g == 2) {
            prm.d12 = rng() % q;
            c = b0_count_g2(q, prm.d12);
        } else {
            prm.alpha = rng() % q;
            prm.beta = rng() % q;
            prm.gamma = rng() % q;
            prm.nu = 2 + rng() % (q - 2);
            c = b0_count_g3(q, prm);
        }
        out.counts.push_back(c);
        out.draws.push_back(prm);
        out.max_count = std::max(out.max_count, c);
    }
    return out;
}

}  // namespace dinv
