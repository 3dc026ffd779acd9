#include "dinv/poly.hpp"

namespace dinv {

VarId::VarId(Family f, unsigned level, unsigned i, unsigned j) {
    if (level > 0xff || i > 0x3ff || j > 0x3ff) throw std::out_of_range("variable index out of range");
    code_ = (static_cast<std::uint32_t>(f) << 28) | (level << 20) | (i << 10) | j;
}

std::string VarId::name() const {
    switch (family()) {
        case Family::T:
            return "T" + std::to_string(level()) + "_" + std::to_string(i()) + std::to_string(j());
        case Family::Y:
            return "y" + std::to_string(i()) + "_" + std::to_string(j());
        case Family::U:
            return "u" + std::to_string(level());
        case Family::V:
            return "v" + std::to_string(level());
        case Family::Z:
            if (level() == 0) return "z" + std::to_string(i());
            return "z" + std::to_string(i()) + "^(" + std::to_string(level()) + ")";
        case Family::Aux:
            if (level() == 0) return "x" + std::to_string(i());
            if (level() == 255) return "ThY_" + std::to_string(i()) + std::to_string(j());
            if (level() == 254) return "Th" + std::to_string(i());
            return "z" + std::to_string(i()) + "^phi" + std::to_string(level() - 1);
        case Family::X:
            return "X" + std::to_string(level()) + "_" + std::to_string(i()) + std::to_string(j());
    }
    return "?";
}

VarId tvar(unsigned l, unsigned i, unsigned j) {
    if (i > j) std::swap(i, j);
    return VarId(Family::T, l, i, j);
}
VarId uvar(unsigned l) { return VarId(Family::U, l); }
VarId vvar(unsigned l) { return VarId(Family::V, l); }
VarId yvar(unsigned i, unsigned j) { return VarId(Family::Y, 0, i, j); }
VarId zvar(unsigned i, unsigned l) { return VarId(Family::Z, l, i); }
VarId auxvar(unsigned k) { return VarId(Family::Aux, 0, k); }
VarId xvar(unsigned k, unsigned i, unsigned j) { return VarId(Family::X, k, i, j); }

Monomial::Monomial(VarId v, std::uint32_t e) {
    if (e > 0) {
        f_.emplace_back(v.code(), e);
        deg_ = e;
    }
}

std::uint32_t Monomial::exponent(VarId v) const {
    for (const auto& [c, e] : f_)
        if (c == v.code()) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() && b != o.f_.end()) {
        if (a->first < b->first) r.f_.push_back(*a++);
        else if (b->first < a->first) r.f_.push_back(*b++);
        else {
            r.f_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.f_.insert(r.f_.end(), a, f_.end());
    r.f_.insert(r.f_.end(), b, o.f_.end());
    r.deg_ = deg_ + o.deg_;
    return r;
}

Monomial Monomial::from_factors(std::vector<Factor> f) {
    std::sort(f.begin(), f.end());
    Monomial r;
    for (const auto& [c, e] : f) {
        if (e == 0) continue;
        if (!r.f_.empty() && r.f_.back().first == c) r.f_.back().second += e;
        else r.f_.emplace_back(c, e);
        r.deg_ += e;
    }
    return r;
}

}  // namespace dinv
