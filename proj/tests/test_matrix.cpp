#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qfw/matrix.hpp"

using namespace qfw;

namespace {

IMat from_rows(std::vector<std::vector<long>> rows) {
    IMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

IMat random_mat(std::mt19937_64& rng, size_t r, size_t c, long lim = 9) {
    std::uniform_int_distribution<long> dist(-lim, lim);
    IMat m(r, c);
    for (auto& x : m.a) x = dist(rng);
    return m;
}

IMat random_nonsingular(std::mt19937_64& rng, size_t n) {
    while (true) {
        IMat m = random_mat(rng, n, n);
        if (det(m) != 0) return m;
    }
}

// Is every row of x in the row lattice of the HNF matrix h?
bool rows_in_lattice(const IMat& x, const IMat& h) {
    for (size_t i = 0; i < x.rows; ++i) {
        std::vector<Int> v(x.cols);
        for (size_t j = 0; j < x.cols; ++j) v[j] = x.at(i, j);
        if (!solve_upper(h, v)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hnf of the lattice of (2, 1+w) in Q(sqrt(-5))", "[matrix]") {
    // Rows: 2, 2w, 1+w, w(1+w) = -5 + w in coordinates (1, w).
    IMat m = from_rows({{2, 0}, {0, 2}, {1, 1}, {-5, 1}});
    IMat h = hnf(m);
    REQUIRE(h == from_rows({{1, 1}, {0, 2}}));
}

TEST_CASE("hnf properties on random matrices", "[matrix]") {
    std::mt19937_64 rng(20260816);
    for (int iter = 0; iter < 200; ++iter) {
        size_t r = 2 + static_cast<size_t>(rng() % 4);
        size_t c = 2 + static_cast<size_t>(rng() % 3);
        IMat m = random_mat(rng, r, c);
        IMat h = hnf(m);
        // Idempotent.
        REQUIRE(hnf(h) == h);
        // Same row lattice both ways when h is square full-rank.
        if (h.rows == h.cols && h.rows == c) {
            REQUIRE(rows_in_lattice(m, h));
        }
        // Pivot normalization: strictly right-moving positive pivots.
        size_t last = 0;
        bool first = true;
        for (size_t i = 0; i < h.rows; ++i) {
            size_t p = 0;
            while (p < h.cols && h.at(i, p) == 0) ++p;
            REQUIRE(p < h.cols);
            REQUIRE(h.at(i, p) > 0);
            if (!first) REQUIRE(p > last);
            last = p;
            first = false;
            for (size_t k = 0; k < i; ++k) {
                REQUIRE(h.at(k, p) >= 0);
                REQUIRE(h.at(k, p) < h.at(i, p));
            }
        }
    }
}

TEST_CASE("determinant and inverse", "[matrix]") {
    IMat m = from_rows({{2, 1, 0}, {1, -3, 2}, {0, 5, 4}});
    REQUIRE(det(m) == -48);

    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        size_t n = 2 + static_cast<size_t>(rng() % 4);
        IMat A = random_nonsingular(rng, n);
        auto [inv, den] = inverse(A);
        IMat prod = mat_mul(A, inv);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                REQUIRE(prod.at(i, j) == (i == j ? den : Int(0)));
        // A * inv = den * I, so det(A) * det(inv) = den^n.
        Int dn = 1;
        for (size_t i = 0; i < n; ++i) dn *= den;
        REQUIRE(det(A) * det(inv) == dn);
    }
}

TEST_CASE("smith normal form", "[matrix]") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 80; ++iter) {
        size_t r = 1 + static_cast<size_t>(rng() % 4);
        size_t c = 1 + static_cast<size_t>(rng() % 4);
        IMat A = random_mat(rng, r, c, 12);
        Smith s = snf(A);
        REQUIRE(abs(det(s.U)) == 1);
        REQUIRE(abs(det(s.V)) == 1);
        REQUIRE(mat_mul(mat_mul(s.U, A), s.V) == s.D);
        // Diagonal, nonnegative, divisibility chain.
        for (size_t i = 0; i < s.D.rows; ++i)
            for (size_t j = 0; j < s.D.cols; ++j)
                if (i != j) REQUIRE(s.D.at(i, j) == 0);
        size_t k = std::min(r, c);
        for (size_t i = 0; i < k; ++i) REQUIRE(s.D.at(i, i) >= 0);
        for (size_t i = 0; i + 1 < k; ++i) {
            if (s.D.at(i + 1, i + 1) != 0) {
                REQUIRE(s.D.at(i, i) != 0);
                REQUIRE(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
            }
        }
    }
    // Z^2 / <(2,0),(0,6),(1,3)>: the relation (1,3) makes e1 = -3*e2, so the
    // quotient is cyclic of order 6 (the lattice index).
    IMat A = from_rows({{2, 0}, {0, 6}, {1, 3}});
    auto dv = snf_divisors(A);
    REQUIRE(dv.size() == 2);
    REQUIRE(dv[0] == 1);
    REQUIRE(dv[1] == 6);
}

TEST_CASE("rational lattice algebra", "[matrix]") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 80; ++iter) {
        size_t n = 2 + static_cast<size_t>(rng() % 3);
        Lattice X = lat_canon(random_nonsingular(rng, n), Int(1 + rng() % 4));
        Lattice Y = lat_canon(random_nonsingular(rng, n), Int(1 + rng() % 4));

        // Dual is an involution.
        REQUIRE(lat_equal(lat_dual(lat_dual(X)), X));

        Lattice S = lat_sum(X, Y);
        Lattice I = lat_intersect(X, Y);

        // X, Y inside S; I inside X and Y.  Containment via basis rows.
        auto contains_lattice = [](const Lattice& big, const Lattice& small) {
            for (size_t i = 0; i < small.B.rows; ++i) {
                std::vector<Int> v(small.B.cols);
                for (size_t j = 0; j < small.B.cols; ++j) v[j] = small.B.at(i, j);
                if (!lat_contains(big, v, small.den)) return false;
            }
            return true;
        };
        REQUIRE(contains_lattice(S, X));
        REQUIRE(contains_lattice(S, Y));
        REQUIRE(contains_lattice(X, I));
        REQUIRE(contains_lattice(Y, I));

        // Covolume identity: covol(S) * covol(I) = covol(X) * covol(Y).
        // Explicit return type: gmpxx arithmetic yields lazy expression
        // templates that must not outlive their operands.
        auto covol = [](const Lattice& L) -> Rat {
            Rat r(abs(det(L.B)));
            Rat d(L.den);
            Rat dn = 1;
            for (size_t i = 0; i < L.B.rows; ++i) dn *= d;
            return r / dn;
        };
        REQUIRE(covol(S) * covol(I) == covol(X) * covol(Y));
    }
}
