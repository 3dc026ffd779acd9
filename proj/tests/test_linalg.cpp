#include <doctest.h>

#include <random>

#include "dinv/linalg.hpp"

using namespace dinv;

namespace {

QQ q;
using MatQ = ExactMatrix<QQ>;
using Vec = std::vector<mpq_class>;

MatQ dense(const std::vector<std::vector<long>>& a) {
    std::vector<Vec> v;
    for (const auto& r : a) {
        Vec row;
        for (long x : r) row.emplace_back(x);
        v.push_back(row);
    }
    return MatQ::from_dense(q, v);
}

MatQ random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int zero_pct) {
    std::vector<Vec> a(m, Vec(n, 0));
    for (auto& r : a)
        for (auto& x : r)
            if (static_cast<int>(rng() % 100) >= zero_pct) x = static_cast<long>(rng() % 7) - 3;
    return MatQ::from_dense(q, a);
}

bool all_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("kernel examples") {
    for (std::size_t n : {1u, 3u, 5u}) {
        std::vector<std::vector<long>> id(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        CHECK(kernel_basis(dense(id)).empty());
        CHECK(rank(dense(id)) == n);
    }
    CHECK(kernel_basis(dense({{0, 0, 0}, {0, 0, 0}})).size() == 3);
    auto k = kernel_basis(dense({{1, 2, 3}, {2, 4, 6}}));
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(all_zero(dense({{1, 2, 3}, {2, 4, 6}}).mul(v)));
}

TEST_CASE("rank examples") {
    ExactMatrix<Fq> f2 = ExactMatrix<Fq>::from_dense(Fq(2), {{1, 1}, {1, 1}});
    CHECK(rank(f2) == 1);
    // Vandermonde on distinct nodes: determinant prod (x_j - x_i) != 0
    std::vector<long> nodes{2, -1, 5, 7, 0};
    std::vector<std::vector<long>> v;
    for (long x : nodes) {
        std::vector<long> row;
        long p = 1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            row.push_back(p);
            p *= x;
        }
        v.push_back(row);
    }
    CHECK(rank(dense(v)) == nodes.size());
}

TEST_CASE("solve examples") {
    auto I = dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    Vec b{mpq_class(3), mpq_class(-1, 2), mpq_class(7)};
    CHECK(solve(I, b).value() == b);
    CHECK(!solve(dense({{0, 0}, {0, 0}}), Vec{1, 0}).has_value());
    // Cramer: [[2,1],[5,3]] x = [4,7]; det 1 -> x = (4*3-1*7, 2*7-5*4) = (5,-6)
    auto x = solve(dense({{2, 1}, {5, 3}}), Vec{4, 7}).value();
    CHECK(x[0] == 5);
    CHECK(x[1] == -6);
}

TEST_CASE("rank of transpose and kernel property on random samples") {
    std::mt19937_64 rng(1234);
    for (int t = 0; t < 40; ++t) {
        std::size_t m = 1 + rng() % 9, n = 1 + rng() % 9;
        int zp = static_cast<int>(rng() % 95);
        MatQ A = random_matrix(rng, m, n, zp);
        std::size_t r = rank(A);
        CHECK(r == rank(A.transpose()));
        CHECK(r == rank(A, Strategy::Sparse));
        CHECK(r == rank(A, Strategy::Dense));
        auto ks = kernel_basis(A, Strategy::Sparse);
        auto kd = kernel_basis(A, Strategy::Dense);
        CHECK(ks.size() == n - r);
        CHECK(ks == kd);
        for (const auto& v : ks) CHECK(all_zero(A.mul(v)));
        Vec b(m, 0);
        for (auto& y : b) y = static_cast<long>(rng() % 5);
        auto x = solve(A, b);
        if (x) CHECK(A.mul(*x) == b);
        // a consistent right-hand side is always solved
        Vec x0(n, 0);
        for (auto& y : x0) y = static_cast<long>(rng() % 5) - 2;
        auto b2 = A.mul(x0);
        auto x2 = solve(A, b2);
        REQUIRE(x2.has_value());
        CHECK(A.mul(*x2) == b2);
    }
}

TEST_CASE("prime field rank never exceeds rational rank") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 20; ++t) {
        MatQ A = random_matrix(rng, 6, 7, 30);
        std::vector<std::vector<u64>> a;
        Fq F(7);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            std::vector<u64> row;
            for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(F.from_rational(A.at(i, j)));
            a.push_back(row);
        }
        CHECK(rank(ExactMatrix<Fq>::from_dense(F, a)) <= rank(A));
    }
}
