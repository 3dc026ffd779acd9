#include <gmp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <future>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dinv/conj.hpp"
#include "dinv/delta.hpp"
#include "dinv/jacobian.hpp"
#include "dinv/linalg.hpp"
#include "dinv/quad.hpp"
#include "dinv/serre.hpp"

using namespace dinv;
using J = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";
const QQ qq;

struct Outcome {
    J body = J::object();
    bool ok = true;
};

template <class R>
J poly_json(const MultiPoly<R>& f) {
    J arr = J::array();
    for (const auto& rec : poly_records(f)) {
        J t = J::object();
        for (const auto& [name, e] : rec.vars) t[name] = e;
        t["coefficient"] = rec.coefficient;
        arr.push_back(std::move(t));
    }
    return arr;
}

std::string hex64(std::uint64_t h) {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

// FNV-1a over the serialized result
std::string digest(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return hex64(h);
}

HalfInt parse_half(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        if (s.substr(slash + 1) != "2") throw CLI::ValidationError("--s", "only halves are allowed");
        return {std::stoi(s.substr(0, slash))};
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        int whole = std::stoi(s.substr(0, dot));
        if (frac == "5") return {2 * whole + 1};
        if (frac == "0") return {2 * whole};
        throw CLI::ValidationError("--s", "only halves are allowed");
    }
    return HalfInt::from_int(std::stoi(s));
}

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<VarId> t_vars(std::size_t g, unsigned levels) {
    std::vector<VarId> vars;
    for (unsigned l = 0; l < levels; ++l)
        for (unsigned i = 1; i <= g; ++i)
            for (unsigned j = i; j <= g; ++j) vars.push_back(tvar(l, static_cast<unsigned>(i), static_cast<unsigned>(j)));
    return vars;
}

std::size_t coefficient_rank(const std::vector<PolyQ>& polys) {
    std::map<Monomial, std::size_t> col;
    for (const auto& p : polys)
        for (const auto& t : p.terms()) col.try_emplace(t.first, col.size());
    ExactMatrix<QQ> A(qq, 0, col.size());
    for (const auto& p : polys) {
        ExactMatrix<QQ>::Row row;
        for (const auto& [m, c] : p.terms()) row.emplace_back(col.at(m), c);
        A.append_row(row);
    }
    return rank(A);
}

J rank_claim_json(const RankClaim& c) {
    J o = J::object();
    o["claim"] = c.claim;
    o["g"] = c.g;
    o["n"] = c.n;
    o["word_cap"] = c.cap;
    o["field"] = c.field;
    o["seed"] = c.seed;
    o["ranks"] = c.ranks;
    o["expected"] = c.expected;
    o["holds"] = c.holds();
    return o;
}

RankClaim theta_rank(const std::string& claim, std::size_t g, unsigned r, std::uint64_t seed, u64 q, std::size_t points) {
    std::vector<PolyQ> polys;
    std::vector<std::vector<unsigned>> mds;
    if (claim == "theta_pair") {
        for (unsigned k = 0; k <= g; ++k) mds.push_back({static_cast<unsigned>(g) - k, k});
        r = 1;
    } else {
        mds = delta3(g, r);
    }
    for (const auto& m : mds) polys.push_back(theta(g, m));
    RankClaim out{claim, g, r, 0, {}, mds.size(), q, seed};
    std::mt19937_64 rng(seed);
    auto vars = t_vars(g, r + 1);
    for (std::size_t k = 0; k < points; ++k) out.ranks.push_back(jacobian_rank_at_random_point(polys, vars, q, rng));
    return out;
}

// ---- verification suites ----

struct Check {
    std::string name;
    std::function<bool()> run;
};

DeltaPoly random_delta(std::mt19937_64& rng, const Zpn& ring) {
    DeltaPoly f(ring);
    for (unsigned k = 0; k < 3; ++k) {
        std::vector<Monomial::Factor> fs;
        unsigned d = static_cast<unsigned>(rng() % 3);
        for (unsigned e = 0; e < d; ++e)
            fs.emplace_back(zvar(static_cast<unsigned>(rng() % 2), static_cast<unsigned>(rng() % 2)).code(), 1);
        f.add_term(Monomial::from_factors(fs), ring.from_int(static_cast<long long>(rng() % 1000)));
    }
    return f;
}

DeltaPoly at_precision(const DeltaPoly& f, unsigned N) {
    Zpn r(f.ring().p, N);
    return f.map_coeffs(r, [&](u64 c) { return c % r.m; });
}

std::vector<Check> delta_suite(u64 p, unsigned N, std::uint64_t seed) {
    std::vector<Check> out;
    out.push_back({"delta_axioms_random_pairs", [=] {
                       std::mt19937_64 rng(seed);
                       Zpn R(p, N + 1);
                       const auto e = static_cast<unsigned>(p);
                       for (int t = 0; t < 100; ++t) {
                           DeltaPoly F = random_delta(rng, R), G = random_delta(rng, R);
                           DeltaPoly dF = canonical_delta(F), dG = canonical_delta(G);
                           DeltaPoly Fn = at_precision(F, N), Gn = at_precision(G, N);
                           const Zpn& Rn = Fn.ring();
                           auto P = Rn.from_int(static_cast<long long>(p));
                           if (dF != delta_via_lift(F)) return false;
                           if (canonical_delta(F + G) != dF + dG + cp_poly(Fn, Gn, p)) return false;
                           if (canonical_delta(F * G) != Fn.pow(e) * dG + Gn.pow(e) * dF + (dF * dG).scale(P)) return false;
                           if (frobenius_lift(Fn, p) != Fn.pow(e) + dF.scale(P)) return false;
                       }
                       return true;
                   }});
    out.push_back({"delta_bracket_identity", [=] {
                       using PZ = MultiPoly<ZZ>;
                       ZZ zz;
                       const auto e = static_cast<unsigned>(p);
                       PZ zi = PZ::variable(zz, zvar(0)), zj = PZ::variable(zz, zvar(1));
                       PZ zi1 = PZ::variable(zz, zvar(0, 1)), zj1 = PZ::variable(zz, zvar(1, 1));
                       return delta_bracket(zi, zj, p) == zi.pow(e) * zj1 - zj.pow(e) * zi1;
                   }});
    return out;
}

std::vector<Check> expansion_suite(u64 p, unsigned N, unsigned D) {
    std::vector<Check> out;
    auto tp = [](const Zpn& R, unsigned l, unsigned i, unsigned j, unsigned d) {
        return PolyP::variable(R, tvar(l, i, j), d);
    };
    out.push_back({"linear_part_psi", [=] {
                       auto S = psi(2, p, N, D);
                       for (unsigned i = 1; i <= 2; ++i)
                           for (unsigned j = 1; j <= 2; ++j)
                               if (club(S.m(i - 1, j - 1), 1) != tp(S.ring(), 1, i, j, D) - tp(S.ring(), 0, i, j, D))
                                   return false;
                       return true;
                   }});
    out.push_back({"linear_part_psi_phi", [=] {
                       auto S = psi_phi_direct(2, 2, p, N, D);
                       for (unsigned i = 1; i <= 2; ++i)
                           for (unsigned j = 1; j <= 2; ++j)
                               if (club(S.m(i - 1, j - 1), 1) !=
                                   (tp(S.ring(), 2, i, j, D) - tp(S.ring(), 1, i, j, D)).scale(p))
                                   return false;
                       return true;
                   }});
    out.push_back({"route_equality_direct_vs_twist", [=] {
                       for (std::size_t g : {1u, 2u})
                           for (unsigned a = 1; a <= 3; ++a)
                               if (psi_phi_direct(a, g, p, N, D) != phi_twist(psi(g, p, N, D), a - 1)) return false;
                       return true;
                   }});
    out.push_back({"bracket_as_angle_sum", [=] {
                       for (unsigned a = 2; a <= 3; ++a) {
                           auto sum = expansion_basic(BasicKind::FAngle, a, 1, p, N, D);
                           long long pw = 1;
                           for (unsigned i = 1; i < a; ++i) {
                               pw *= static_cast<long long>(p);
                               sum = sum + expansion_basic(BasicKind::FAngle, a - i, 1, p, N, D).scale(pw);
                           }
                           if (expansion_basic(BasicKind::FBracket, a, 1, p, N, D) != sum) return false;
                           if (expansion_basic(BasicKind::FR, a, 1, p, N, D) != sum) return false;
                       }
                       return true;
                   }});
    out.push_back({"key_identity", [=] {
                       auto one = expansion_basic(BasicKind::FPartial, 0, 2, p, N, D);
                       auto f1 = expansion_basic(BasicKind::FR, 1, 2, p, N, D);
                       auto rhs = phi_twist(f1) * one + (phi_twist(one) * f1).scale(static_cast<long long>(p));
                       return expansion_basic(BasicKind::FR, 2, 2, p, N, D) == rhs;
                   }});
    out.push_back({"scalar_log_value", [=] {
                       unsigned Ds = std::max(D, log_cutoff(p, N));
                       auto S = psi(1, p, N, Ds);
                       u64 v = S.scalar().evaluate([](VarId x) -> u64 { return x.level() == 1 ? 1 : 0; });
                       return v == padic_log1p_scaled(TruncatedPadic(p, N, 1L)).residue().get_ui();
                   }});
    out.push_back({"club_of_diamond_is_heart_image", [=] {
                       if (D < 2) return true;
                       PolyQ det = sym_det(SymMatrixPoly<QQ>::generic(2, 0, qq));
                       Zpn R(p, N);
                       return club(diamond_realize(det, 1, 2, p, N, D), 2) ==
                              to_padic(heart_image_diamond(det, 1, 2, p), R, D);
                   }});
    out.push_back({"cyclic_expansion_0123", [=] {
                       return cyclic_expansion_check({0, 1, 2, 3}, 1, 2, p, D).status != CyclicStatus::Differ;
                   }});
    out.push_back({"spade_club_composite", [=] {
                       unsigned Dr = std::min(std::max(D, 2u), 6u);
                       PolyQ det = sym_det(SymMatrixPoly<QQ>::generic(2, 0, qq));
                       for (unsigned r : {1u, 2u})
                           if (!check_spade_club(det, r, 2, p, Dr) || !check_spade_club(theta(2, {1, 1}), r, 2, p, Dr)) return false;
                       return true;
                   }});
    return out;
}

std::vector<Check> quad_suite() {
    std::vector<Check> out;
    out.push_back({"theta_count_independence_invariance", [] {
                       for (auto [g, r] : std::vector<std::pair<std::size_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
                           auto th = theta_all(g, r);
                           if (th.size() != static_cast<std::size_t>(binom(static_cast<long>(g + r), r))) return false;
                           std::vector<PolyQ> polys;
                           for (const auto& [m, f] : th) {
                               if (!lie_invariant(f, g)) return false;
                               polys.push_back(f);
                           }
                           if (coefficient_rank(polys) != polys.size()) return false;
                       }
                       return true;
                   }});
    out.push_back({"small_dimensions", [] {
                       for (int s = 0; s <= 2; ++s)
                           if (invariant_dimension(2, 1, HalfInt::from_int(s)).dimension !=
                               static_cast<std::size_t>(binom(s + 2, 2)))
                               return false;
                       return invariant_dimension(2, 2, HalfInt::from_int(2)).dimension == 21;
                   }});
    out.push_back({"xi_lifts", [] {
                       return xi_lift({0, 1}) == theta(2, {1, 1}) && xi_lift({0, 1, 2}) == upsilon(2, {0, 1, 2}) &&
                              jmath(xi_lift({0, 1, 2, 3})) == xi_target({0, 1, 2, 3});
                   }});
    out.push_back({"jmap_kills_determinants", [] {
                       return jmath(theta(2, {2, 0})).is_zero() &&
                              jmath(theta(2, {1, 1})) == plucker_y(0, 1) * plucker_y(0, 1);
                   }});
    out.push_back({"cyclic_relation_0123", [] { return cyclic_relation_check({0, 1, 2, 3}, 3, 3).holds; }});
    out.push_back({"hilbert_closed_forms", [] {
                       auto h = hilbert_closed(4, 3, HilbertVariant::Even);
                       auto gr = hilbert_closed(3, 3, HilbertVariant::Grassmannian);
                       return h.numerator == std::vector<mpq_class>{1, 3, 6, 10} &&
                              gr.coefficients == std::vector<mpq_class>{1, 6, 20} && plucker_monomial_rank(3, 2) == 20;
                   }});
    out.push_back({"b0_g2_max", [] { return b0_count(2, 101, 50, 1).max_count == 2; }});
    return out;
}

std::vector<Check> conj_suite(std::uint64_t seed) {
    std::vector<Check> out;
    out.push_back({"phi_q_witness_pairs_nonzero", [=] {
                       Fq F(2147483647ULL);
                       std::mt19937_64 rng(seed);
                       for (std::size_t g = 2; g <= 4; ++g)
                           for (int t = 0; t < 3; ++t) {
                               auto [D, P] = phi_q_witness_pair(g, F, rng);
                               for (std::size_t q = 1; q < g; ++q)
                                   if (phi_q(D, P, q).is_zero()) return false;
                           }
                       return true;
                   }});
    out.push_back({"phi_q_block_pairs_vanish", [=] {
                       Fq F(2147483647ULL);
                       std::mt19937_64 rng(seed + 1);
                       for (std::size_t g = 2; g <= 4; ++g)
                           for (std::size_t q = 1; q < g; ++q) {
                               auto [A, B] = common_subspace_pair(g, q, F, rng);
                               if (!phi_q(A, B, q).is_zero()) return false;
                           }
                       return true;
                   }});
    out.push_back({"trace_word_rank_2_2", [=] { return trace_word_rank(2, 2, 3, seed).holds(); }});
    out.push_back({"pulled_back_rank_2_2", [=] { return pulled_back_rank(2, 2, 3, seed).holds(); }});
    return out;
}

// runs checks on up to `jobs` workers; results keep suite order
Outcome run_checks(const std::vector<Check>& checks, unsigned jobs) {
    std::vector<int> results(checks.size(), 0);
    std::vector<std::string> errors(checks.size());
    auto one = [&](std::size_t k) {
        try {
            results[k] = checks[k].run() ? 1 : 0;
        } catch (const std::exception& e) {
            errors[k] = e.what();
        }
    };
    if (jobs <= 1) {
        for (std::size_t k = 0; k < checks.size(); ++k) one(k);
    } else {
        std::vector<std::future<void>> pending;
        for (std::size_t k = 0; k < checks.size(); ++k) {
            pending.push_back(std::async(std::launch::async, one, k));
            if (pending.size() >= jobs) {
                for (auto& f : pending) f.get();
                pending.clear();
            }
        }
        for (auto& f : pending) f.get();
    }
    Outcome o;
    J list = J::array();
    std::size_t passed = 0;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        J c = J::object();
        c["check"] = checks[k].name;
        c["pass"] = results[k] == 1;
        if (!errors[k].empty()) c["error"] = errors[k];
        passed += results[k];
        list.push_back(std::move(c));
    }
    o.body["checks"] = std::move(list);
    o.body["passed"] = passed;
    o.body["total"] = checks.size();
    o.ok = passed == checks.size();
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant computations for quadratic forms and delta-characters"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_file;
    std::uint64_t seed_flag = 0;
    bool timing = false;
    app.add_option("--out", out_file, "write the JSON document to FILE");
    auto* seed_opt = app.add_option("--seed", seed_flag, "random seed (overrides DELTA_INV_SEED)");
    app.add_flag("--timing", timing, "add wall-clock milliseconds to the manifest");

    // shared parameter slots
    std::size_t g = 2, n = 2, cap = 3, points = 3, trials = 500, terms = 3;
    unsigned r = 1, index = 1, N = 2, D = 4, budget = 4, jobs = 1;
    u64 p = 3, q = 2147483647ULL;
    std::string s_text = "0", kind, variant = "even", suite = "all", claim;
    std::vector<unsigned> levels, m;
    unsigned i_idx = 0, j_idx = 1;

    auto* dims = app.add_subcommand("dims", "dimension of the invariant slice of weight s");
    dims->add_option("--g", g)->required();
    dims->add_option("--r", r)->required();
    dims->add_option("--s", s_text, "integer or half-integer, e.g. 3/2")->required();

    auto* hilbert = app.add_subcommand("hilbert", "closed-form Hilbert series");
    hilbert->add_option("--r", r)->required();
    hilbert->add_option("--terms", terms);
    hilbert->add_option("--variant", variant)->check(CLI::IsMember({"even", "grassmannian"}));

    auto* thetacmd = app.add_subcommand("theta", "Theta polynomials of det(sum y_i T^(i))");
    thetacmd->add_option("--g", g)->required();
    thetacmd->add_option("--r", r);
    thetacmd->add_option("--m", m, "one multidegree, comma separated")->delimiter(',');

    auto* upscmd = app.add_subcommand("upsilon", "Upsilon determinant of given levels");
    upscmd->add_option("--g", g)->required();
    upscmd->add_option("--levels", levels)->delimiter(',')->required();

    auto* xicmd = app.add_subcommand("xi", "multilinear Xi lift of a cycle");
    xicmd->add_option("--levels", levels)->delimiter(',')->required();

    auto* relcmd = app.add_subcommand("relations", "cyclic and Plucker relation checks");
    relcmd->add_option("--kind", kind)->check(CLI::IsMember({"cyclic", "plucker"}))->required();
    relcmd->add_option("--levels", levels)->delimiter(',');
    relcmd->add_option("--s", s_text);
    relcmd->add_option("--r", r);
    relcmd->add_option("--i", i_idx);
    relcmd->add_option("--j", j_idx);
    relcmd->add_option("--n", n);

    auto* expcmd = app.add_subcommand("expand", "expansion of a basic form");
    expcmd->add_option("--kind", kind)->check(CLI::IsMember({"f_r", "f_partial", "f_angle", "f_bracket"}))->required();
    expcmd->add_option("--index", index);
    expcmd->add_option("--g", g);
    expcmd->add_option("--p", p);
    expcmd->add_option("--prec", N);
    expcmd->add_option("--deg", D);
    expcmd->add_option("--budget", budget);

    auto* diacmd = app.add_subcommand("diamond", "realize Theta_m on Psi and its twists");
    diacmd->add_option("--g", g);
    diacmd->add_option("--m", m)->delimiter(',')->required();
    diacmd->add_option("--p", p);
    diacmd->add_option("--prec", N);
    diacmd->add_option("--deg", D);

    auto* rankcmd = app.add_subcommand("rank", "Jacobian rank certificates at random points");
    rankcmd->add_option("--claim", claim)
        ->check(CLI::IsMember({"theta_pair", "thetas_delta3", "trace_words", "pulled_back"}))
        ->required();
    rankcmd->add_option("--g", g);
    rankcmd->add_option("--n", n);
    rankcmd->add_option("--r", r);
    rankcmd->add_option("--cap", cap);
    rankcmd->add_option("--points", points);
    rankcmd->add_option("--q", q);

    auto* b0cmd = app.add_subcommand("b0", "b0 solution counts over F_q");
    b0cmd->add_option("--g", g)->required();
    b0cmd->add_option("--q", q)->required();
    b0cmd->add_option("--trials", trials);

    auto* vercmd = app.add_subcommand("verify", "run a verification suite");
    vercmd->add_option("--suite", suite)->check(CLI::IsMember({"delta", "expansions", "quad", "conj", "all"}));
    vercmd->add_option("--p", p);
    vercmd->add_option("--prec", N);
    vercmd->add_option("--deg", D);
    vercmd->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::uint64_t seed = 0;
    std::string seed_source = "default";
    if (*seed_opt) {
        seed = seed_flag;
        seed_source = "flag";
    } else if (const char* env = std::getenv("DELTA_INV_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "DELTA_INV_SEED is not an unsigned integer\n";
            return 2;
        }
        seed_source = "environment";
    }

    auto* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    J params = J::object();
    Outcome res;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (cmd == "dims") {
            HalfInt s = parse_half(s_text);
            params = {{"g", g}, {"r", r}, {"s", s.str()}};
            auto basis = invariant_dimension(g, r, s);
            res.body["dimension"] = basis.dimension;
            res.body["slice_size"] = basis.slice_size;
            res.body["claim"] = "lie_kernel_dimension";
        } else if (cmd == "hilbert") {
            params = {{"r", r}, {"terms", terms}, {"variant", variant}};
            auto h = hilbert_closed(r, terms, variant == "even" ? HilbertVariant::Even : HilbertVariant::Grassmannian);
            auto strs = [](const std::vector<mpq_class>& v) {
                J a = J::array();
                for (const auto& x : v) a.push_back(rational_str(x));
                return a;
            };
            res.body["numerator"] = strs(h.numerator);
            res.body["denominator_exponent"] = h.denominator_exponent;
            res.body["coefficients"] = strs(h.coefficients);
            res.body["claim"] = variant == "even" ? "even_invariant_hilbert_series" : "grassmannian_hilbert_series";
        } else if (cmd == "theta") {
            params = {{"g", g}, {"r", r}};
            J list = J::array();
            auto add = [&](const std::vector<unsigned>& md, const PolyQ& f) {
                list.push_back(J{{"multidegree", md}, {"polynomial", poly_json(f)}});
            };
            if (!m.empty()) {
                params["m"] = m;
                add(m, theta(g, m));
            } else {
                for (const auto& md : multidegrees(g, r)) add(md, theta(g, md));
                res.body["count"] = list.size();
                res.body["expected_count"] = binom(static_cast<long>(g + r), r);
                res.body["claim"] = "theta_count";
                res.ok = list.size() == static_cast<std::size_t>(binom(static_cast<long>(g + r), r));
            }
            res.body["thetas"] = std::move(list);
        } else if (cmd == "upsilon") {
            params = {{"g", g}, {"levels", levels}};
            res.body["polynomial"] = poly_json(upsilon(g, levels));
        } else if (cmd == "xi") {
            params = {{"levels", levels}};
            PolyQ lift = xi_lift(levels);
            bool ok = jmath(lift) == xi_target(levels);
            res.body["lift"] = poly_json(lift);
            res.body["target"] = poly_json(xi_target(levels));
            res.body["jmap_matches_target"] = ok;
            res.body["claim"] = "xi_lift";
            res.ok = ok;
        } else if (cmd == "relations") {
            if (kind == "cyclic") {
                unsigned s = static_cast<unsigned>(std::stoul(s_text));
                params = {{"kind", kind}, {"levels", levels}, {"s", s}, {"r", r}};
                auto rr = cyclic_relation_check(levels, s, r);
                res.body["holds"] = rr.holds;
                res.body["witness"] = rr.witness;
                res.body["claim"] = "xi_cyclic_relation";
                res.ok = rr.holds;
            } else {
                unsigned s = static_cast<unsigned>(std::stoul(s_text));
                params = {{"kind", kind}, {"i", i_idx}, {"j", j_idx}, {"n", n}, {"s", s}};
                auto pl = plucker_check(i_idx, j_idx, static_cast<unsigned>(n), s);
                res.body["slice_size"] = pl.slice_size;
                res.body["kernel_dim"] = pl.kernel_dim;
                res.body["quartic"] = poly_json(pl.quartic);
                res.body["jimage_zero"] = pl.jimage_zero;
                res.body["matches_corrected"] = pl.matches_corrected;
                res.body["literal_display_zero"] = pl.literal_display_zero;
                res.body["claim"] = "plucker_quartic_kernel";
                res.ok = pl.kernel_dim == 1 && pl.jimage_zero;
            }
        } else if (cmd == "expand") {
            params = {{"g", g}, {"p", p}, {"N", N}, {"D", D}, {"budget", budget}};
            auto S = expansion_basic(parse_basic_kind(kind), index, g, p, N, D, budget);
            res.body["g"] = g;
            res.body["p"] = p;
            res.body["N"] = N;
            res.body["D"] = D;
            res.body["kind"] = kind;
            res.body["index"] = index;
            J entries = J::array();
            for (std::size_t a = 0; a < g; ++a)
                for (std::size_t b = 0; b < g; ++b) entries.push_back(poly_json(S.m(a, b)));
            res.body["entries"] = std::move(entries);
        } else if (cmd == "diamond") {
            params = {{"g", g}, {"m", m}, {"p", p}, {"N", N}, {"D", D}};
            PolyQ F = theta(g, m);
            const unsigned slots = static_cast<unsigned>(m.size());
            PolyP real = diamond_realize(F, slots, g, p, N, D);
            res.body["realized"] = poly_json(real);
            const unsigned d = static_cast<unsigned>(g);
            if (D >= d) {
                PolyP c = club(real, d);
                bool ok = c == to_padic(heart_image_diamond(F, slots, g, p), Zpn(p, N), D);
                res.body["club"] = poly_json(c);
                res.body["club_matches_heart_image"] = ok;
                res.body["claim"] = "club_of_diamond";
                res.ok = ok;
            }
        } else if (cmd == "rank") {
            params = {{"claim", claim}, {"g", g}, {"n", n}, {"r", r}, {"cap", cap}, {"points", points}, {"q", q}};
            RankClaim rc = claim == "trace_words"   ? trace_word_rank(g, n, cap, seed, q, points)
                           : claim == "pulled_back" ? pulled_back_rank(g, n, cap, seed, q, points)
                                                    : theta_rank(claim, g, r, seed, q, points);
            res.body = rank_claim_json(rc);
            res.ok = rc.holds();
        } else if (cmd == "b0") {
            params = {{"g", g}, {"q", q}, {"trials", trials}};
            auto b = b0_count(static_cast<unsigned>(g), q, trials, seed);
            std::map<std::size_t, std::size_t> hist;
            for (auto c : b.counts) ++hist[c];
            J h = J::array();
            for (auto [c, k] : hist) h.push_back(J{{"count", c}, {"draws", k}});
            res.body["max_count"] = b.max_count;
            res.body["histogram"] = std::move(h);
            res.body["claim"] = "b0_max_solution_count";
        } else if (cmd == "verify") {
            params = {{"suite", suite}, {"p", p}, {"N", N}, {"D", D}};
            std::vector<Check> checks;
            auto append = [&](std::vector<Check> v) {
                for (auto& c : v) checks.push_back(std::move(c));
            };
            if (suite == "delta" || suite == "all") append(delta_suite(p, N, seed));
            if (suite == "expansions" || suite == "all") append(expansion_suite(p, N, D));
            if (suite == "quad" || suite == "all") append(quad_suite());
            if (suite == "conj" || suite == "all") append(conj_suite(seed));
            res = run_checks(checks, jobs);
        }
    } catch (const std::exception& e) {
        std::cerr << cmd << ": " << e.what() << "\n";
        return 2;
    }

    J doc = res.body;
    J manifest = J::object();
    manifest["command"] = cmd;
    std::vector<std::string> args(argv + 1, argv + argc);
    manifest["argv"] = args;
    manifest["seed"] = seed;
    manifest["seed_source"] = seed_source;
    manifest["parameters"] = params;
    manifest["versions"] = J{{"dinv", kVersion},
                             {"gmp", gmp_version},
                             {"json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                          std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                          std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
    manifest["result_digest"] = digest(res.body.dump());
    if (timing)
        manifest["wall_clock_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    doc["ok"] = res.ok;
    doc["manifest"] = std::move(manifest);

    const std::string text = doc.dump(2) + "\n";
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open " << out_file << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return res.ok ? 0 : 1;
}
