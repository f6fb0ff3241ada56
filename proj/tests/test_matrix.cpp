#include <doctest.h>

#include <random>
#include <vector>

#include "chh/matrix.hpp"

using namespace chh;

namespace {

Matrix fromDense(const std::vector<std::vector<long>>& rows) {
    Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.set(static_cast<int>(r), static_cast<int>(c), Rational(rows[r][c]));
    return m;
}

Rational determinant(const std::vector<std::vector<Rational>>& m) {
    const size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational det(0);
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Rational>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        det += Rational(sign) * m[0][c] * determinant(minor);
        sign = -sign;
    }
    return det;
}

// Independent rank oracle: the largest k with a nonsingular k-by-k minor.
int rankByMinors(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    for (int k = std::min(rows, cols); k >= 1; --k) {
        std::vector<int> rowSel(k), colSel(k);
        auto chooseCols = [&](auto&& self, int pos, int start) -> bool {
            if (pos == k) {
                std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = m.at(rowSel[i], colSel[j]);
                return !determinant(sub).isZero();
            }
            for (int c = start; c < cols; ++c) {
                colSel[pos] = c;
                if (self(self, pos + 1, c + 1)) return true;
            }
            return false;
        };
        auto chooseRows = [&](auto&& self, int pos, int start) -> bool {
            if (pos == k) return chooseCols(chooseCols, 0, 0);
            for (int r = start; r < rows; ++r) {
                rowSel[pos] = r;
                if (self(self, pos + 1, r + 1)) return true;
            }
            return false;
        };
        if (chooseRows(chooseRows, 0, 0)) return k;
    }
    return 0;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    const Rational q(6, -4);
    CHECK(q.str() == "-3/2");
    CHECK(q.denominator() == 2);
    CHECK(Rational(2, 4) + Rational(1, 4) == Rational(3, 4));
    CHECK(Rational(1, 3) * Rational(3, 1) == Rational(1));
    CHECK((Rational(1, 3) + Rational(2, 3)).str() == "1");
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(Rational::fromString("-5/10").str() == "-1/2");
}

TEST_CASE("rref on the pinned examples") {
    {
        const Matrix id = fromDense({{1, 0}, {0, 1}});
        const RrefResult r = rref(id);
        CHECK(r.matrix == id);
        CHECK(r.pivots == std::vector<int>{0, 1});
    }
    {
        const RrefResult r = rref(fromDense({{1, 2}, {2, 4}}));
        CHECK(r.matrix == fromDense({{1, 2}, {0, 0}}));
        CHECK(r.pivots == std::vector<int>{0});
    }
    {
        const RrefResult r = rref(fromDense({{0, 1}, {1, 0}}));
        CHECK(r.matrix == fromDense({{1, 0}, {0, 1}}));
        CHECK(r.pivots == std::vector<int>{0, 1});
    }
}

TEST_CASE("nullspace on the pinned examples") {
    CHECK(nullspaceBasis(fromDense({{1, 0}, {0, 1}})).empty());
    {
        const auto basis = nullspaceBasis(fromDense({{0, 0, 0}, {0, 0, 0}}));
        REQUIRE(basis.size() == 3);
        for (int i = 0; i < 3; ++i) CHECK(basis[i] == CoordVec{{i, Rational(1)}});
    }
    {
        const auto basis = nullspaceBasis(fromDense({{1, 1}}));
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == CoordVec{{0, Rational(-1)}, {1, Rational(1)}});
    }
}

TEST_CASE("quotient basis on the pinned examples") {
    CHECK(quotientBasis(3, {}) == std::vector<int>{0, 1, 2});
    CHECK(quotientBasis(2, {CoordVec{{0, Rational(1)}, {1, Rational(-1)}}}) == std::vector<int>{1});
    CHECK(quotientBasis(3, {CoordVec{{0, Rational(1)}}, CoordVec{{1, Rational(1)}}}) ==
          std::vector<int>{2});
}

TEST_CASE("rank-nullity, idempotence, exact kernels and the minor oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        Matrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.set(r, c, Rational(entry(rng)));

        const RrefResult red = rref(m);
        const auto kernel = nullspaceBasis(m);
        CHECK(static_cast<int>(red.pivots.size() + kernel.size()) == cols);
        CHECK(rref(red.matrix).matrix == red.matrix);
        for (const CoordVec& v : kernel) CHECK(matVec(m, v).empty());
        CHECK(rank(m) == rankByMinors(m));
    }
}
