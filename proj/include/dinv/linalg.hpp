#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dinv/arith.hpp"

namespace dinv {

// Exact matrix over a field context (QQ or Fq). Rows are stored sparse; elimination
// switches to a dense kernel when the fill is at least 10%.
template <class R>
class ExactMatrix {
public:
    using V = typename R::value_type;
    using Row = std::vector<std::pair<std::size_t, V>>;  // sorted by column, no zeros

    ExactMatrix(R ring, std::size_t rows, std::size_t cols) : ring_(ring), cols_(cols), rows_(rows) {}

    static ExactMatrix from_dense(R ring, const std::vector<std::vector<V>>& a, std::size_t cols = 0) {
        std::size_t c = a.empty() ? cols : a[0].size();
        ExactMatrix m(ring, a.size(), c);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].size() != c) throw std::invalid_argument("ragged matrix");
            for (std::size_t j = 0; j < c; ++j)
                if (!ring.is_zero(a[i][j])) m.rows_[i].emplace_back(j, a[i][j]);
        }
        return m;
    }

    const R& ring() const { return ring_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const Row& row(std::size_t i) const { return rows_.at(i); }

    void append_row(Row r) {
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Row clean;
        for (auto& [c, v] : r) {
            if (c >= cols_) throw std::out_of_range("column out of range");
            if (!clean.empty() && clean.back().first == c) clean.back().second = ring_.add(clean.back().second, v);
            else clean.emplace_back(c, v);
        }
        std::erase_if(clean, [&](const auto& e) { return ring_.is_zero(e.second); });
        rows_.push_back(std::move(clean));
    }

    V at(std::size_t i, std::size_t j) const {
        for (const auto& [c, v] : rows_.at(i))
            if (c == j) return v;
        return ring_.zero();
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }
    double density() const {
        if (rows_.empty() || cols_ == 0) return 0.0;
        return static_cast<double>(nonzeros()) / (static_cast<double>(rows_.size()) * cols_);
    }

    ExactMatrix transpose() const {
        ExactMatrix t(ring_, cols_, rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [c, v] : rows_[i]) t.rows_[c].emplace_back(i, v);
        return t;
    }

    std::vector<V> mul(const std::vector<V>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<V> y(rows_.size(), ring_.zero());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [c, v] : rows_[i]) y[i] = ring_.add(y[i], ring_.mul(v, x[c]));
        return y;
    }

    std::vector<std::vector<V>> dense() const {
        std::vector<std::vector<V>> d(rows_.size(), std::vector<V>(cols_, ring_.zero()));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [c, v] : rows_[i]) d[i][c] = v;
        return d;
    }

private:
    R ring_;
    std::size_t cols_;
    std::vector<Row> rows_;
};

// Reduced row echelon form: pivot columns increasing, each pivot row monic and
// zero in every other pivot column.
template <class R>
struct Echelon {
    using V = typename R::value_type;
    std::size_t cols = 0;
    std::vector<std::size_t> pivots;
    std::vector<typename ExactMatrix<R>::Row> rows;
};

namespace detail {

template <class R>
using SRow = typename ExactMatrix<R>::Row;

// a - f*b on sparse rows
template <class R>
SRow<R> axpy(const R& ring, const SRow<R>& a, const typename R::value_type& f, const SRow<R>& b) {
    SRow<R> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, ring.neg(ring.mul(f, j->second)));
            ++j;
        } else {
            auto v = ring.sub(i->second, ring.mul(f, j->second));
            if (!ring.is_zero(v)) out.emplace_back(i->first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

template <class R>
Echelon<R> echelon_sparse(const ExactMatrix<R>& A, bool reduce) {
    const R& ring = A.ring();
    std::vector<std::size_t> order(A.rows());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return A.row(a).size() < A.row(b).size(); });

    std::vector<std::optional<SRow<R>>> piv(A.cols());
    for (std::size_t idx : order) {
        SRow<R> r = A.row(idx);
        while (!r.empty()) {
            std::size_t lead = r.front().first;
            if (!piv[lead]) break;
            r = axpy(ring, r, r.front().second, *piv[lead]);
        }
        if (r.empty()) continue;
        auto inv = ring.inv(r.front().second);
        for (auto& e : r) e.second = ring.mul(e.second, inv);
        piv[r.front().first] = std::move(r);
    }

    Echelon<R> E;
    E.cols = A.cols();
    for (std::size_t c = 0; c < A.cols(); ++c)
        if (piv[c]) E.pivots.push_back(c);
    if (reduce) {
        // last pivot first: rows below are already reduced, so one pass per row suffices
        for (auto it = E.pivots.rbegin(); it != E.pivots.rend(); ++it) {
            SRow<R>& r = *piv[*it];
            SRow<R> hits;
            for (std::size_t k = 1; k < r.size(); ++k)
                if (piv[r[k].first]) hits.push_back(r[k]);
            for (const auto& [c, f] : hits) r = axpy(ring, r, f, *piv[c]);
        }
    }
    for (std::size_t c : E.pivots) E.rows.push_back(std::move(*piv[c]));
    return E;
}

template <class R>
Echelon<R> echelon_dense(const ExactMatrix<R>& A, bool reduce) {
    const R& ring = A.ring();
    auto a = A.dense();
    const std::size_t m = a.size(), n = A.cols();
    Echelon<R> E;
    E.cols = n;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t best = m;
        for (std::size_t i = r; i < m; ++i)
            if (!ring.is_zero(a[i][c])) {
                best = i;
                break;
            }
        if (best == m) continue;
        std::swap(a[r], a[best]);
        auto inv = ring.inv(a[r][c]);
        for (std::size_t j = c; j < n; ++j) a[r][j] = ring.mul(a[r][j], inv);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || (!reduce && i < r) || ring.is_zero(a[i][c])) continue;
            auto f = a[i][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] = ring.sub(a[i][j], ring.mul(f, a[r][j]));
        }
        E.pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = 0; i < r; ++i) {
        SRow<R> row;
        for (std::size_t j = 0; j < n; ++j)
            if (!ring.is_zero(a[i][j])) row.emplace_back(j, a[i][j]);
        E.rows.push_back(std::move(row));
    }
    return E;
}

}  // namespace detail

enum class Strategy { Auto, Sparse, Dense };

template <class R>
Echelon<R> rref(const ExactMatrix<R>& A, Strategy s = Strategy::Auto) {
    bool sparse = s == Strategy::Sparse || (s == Strategy::Auto && A.density() < 0.1);
    return sparse ? detail::echelon_sparse(A, true) : detail::echelon_dense(A, true);
}

template <class R>
std::size_t rank(const ExactMatrix<R>& A, Strategy s = Strategy::Auto) {
    bool sparse = s == Strategy::Sparse || (s == Strategy::Auto && A.density() < 0.1);
    return (sparse ? detail::echelon_sparse(A, false) : detail::echelon_dense(A, false)).pivots.size();
}

template <class R>
std::vector<std::vector<typename R::value_type>> kernel_from_rref(const R& ring, const Echelon<R>& E) {
    std::vector<bool> is_piv(E.cols, false);
    for (auto c : E.pivots) is_piv[c] = true;
    std::vector<std::vector<typename R::value_type>> basis;
    for (std::size_t f = 0; f < E.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<typename R::value_type> v(E.cols, ring.zero());
        v[f] = ring.one();
        for (std::size_t k = 0; k < E.pivots.size(); ++k)
            for (const auto& [c, x] : E.rows[k])
                if (c == f) v[E.pivots[k]] = ring.neg(x);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class R>
std::vector<std::vector<typename R::value_type>> kernel_basis(const ExactMatrix<R>& A, Strategy s = Strategy::Auto) {
    return kernel_from_rref(A.ring(), rref(A, s));
}

// Some x with A x = b, or nullopt when the system is inconsistent.
template <class R>
std::optional<std::vector<typename R::value_type>> solve(const ExactMatrix<R>& A, const std::vector<typename R::value_type>& b,
                                                         Strategy s = Strategy::Auto) {
    if (b.size() != A.rows()) throw std::invalid_argument("right-hand side length mismatch");
    const R& ring = A.ring();
    ExactMatrix<R> aug(ring, 0, A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        auto r = A.row(i);
        if (!ring.is_zero(b[i])) r.emplace_back(A.cols(), b[i]);
        aug.append_row(std::move(r));
    }
    Echelon<R> E = rref(aug, s);
    std::vector<typename R::value_type> x(A.cols(), ring.zero());
    for (std::size_t k = 0; k < E.pivots.size(); ++k) {
        if (E.pivots[k] == A.cols()) return std::nullopt;
        for (const auto& [c, v] : E.rows[k])
            if (c == A.cols()) x[E.pivots[k]] = v;
    }
    return x;
}

}  // namespace dinv
