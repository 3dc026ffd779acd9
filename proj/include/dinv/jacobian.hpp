#pragma once

#include <random>
#include <vector>

#include "dinv/linalg.hpp"
#include "dinv/poly.hpp"
#include "dinv/quad.hpp"

namespace dinv {

// Rank over F_q of the Jacobian of polys w.r.t. vars at the given point (values in vars order).
template <class R>
std::size_t jacobian_rank(const std::vector<MultiPoly<R>>& polys, const std::vector<VarId>& vars,
                          const std::vector<u64>& point, u64 q) {
    if (point.size() != vars.size()) throw SizeMismatch("point dimension differs from the variable count");
    Fq F(q);
    std::map<std::uint32_t, u64> at;
    for (std::size_t k = 0; k < vars.size(); ++k) at[vars[k].code()] = point[k] % q;
    auto value = [&](VarId v) {
        auto it = at.find(v.code());
        if (it == at.end()) throw UnboundVariable("no value for variable " + v.name());
        return it->second;
    };
    ExactMatrix<Fq> J(F, 0, vars.size());
    for (const auto& f : polys) {
        MultiPoly<Fq> fq = f.map_coeffs(F, [&](const auto& c) { return F.from_rational(mpq_class(c)); });
        typename ExactMatrix<Fq>::Row row;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            u64 d = fq.derivative(vars[k]).evaluate(value);
            if (d) row.emplace_back(k, d);
        }
        J.append_row(row);
    }
    return rank(J);
}

// At a uniformly random point. The rank over F_q never exceeds the generic rank over Q.
template <class R>
std::size_t jacobian_rank_at_random_point(const std::vector<MultiPoly<R>>& polys, const std::vector<VarId>& vars, u64 q,
                                          std::mt19937_64& rng) {
    std::vector<u64> point;
    for (std::size_t k = 0; k < vars.size(); ++k) point.push_back(rng() % q);
    return jacobian_rank(polys, vars, point, q);
}

}  // namespace dinv
