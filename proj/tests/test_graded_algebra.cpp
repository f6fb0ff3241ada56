#include <doctest.h>

#include <future>
#include <random>

#include "chh/graded_algebra.hpp"
#include "chh/kdef.hpp"

using namespace chh;

namespace {

Generator xiGen(std::vector<int> members, int n) {
    const int degree = static_cast<int>(members.size()) + 2 * n;
    std::vector<int> idx = std::move(members);
    idx.push_back(n);
    return Generator{"xi", std::move(idx), degree, 1};
}

Generator xGen(int j) { return Generator{"x", {j}, 2 * j, 1}; }
Generator aGen(int i, int j) { return Generator{"a", {i, j}, 2 * j - 1, 0}; }

Monomial mono(std::vector<std::pair<Generator, int>> factors) {
    Monomial m;
    for (auto& [g, e] : factors) {
        m.degree += g.degree * e;
        m.charge += g.charge * e;
    }
    m.factors = std::move(factors);
    return m;
}

FreeGCA xiAlgebra(int s) {
    FreeGCA alg("xi-" + std::to_string(s));
    alg.addFamily(xiFamily(s));
    return alg;
}

}  // namespace

TEST_CASE("monomial enumeration in fixed bidegrees") {
    const FreeGCA alg = xiAlgebra(2);

    const auto deg1 = alg.monomials(1, 1);
    REQUIRE(deg1.size() == 2);
    CHECK(deg1[0] == mono({{xiGen({1}, 0), 1}}));
    CHECK(deg1[1] == mono({{xiGen({2}, 0), 1}}));

    const auto deg22 = alg.monomials(2, 2);
    REQUIRE(deg22.size() == 3);
    CHECK(deg22[0] == mono({{xiGen({}, 0), 1}, {xiGen({}, 1), 1}}));
    CHECK(deg22[1] == mono({{xiGen({}, 0), 1}, {xiGen({1, 2}, 0), 1}}));
    CHECK(deg22[2] == mono({{xiGen({1}, 0), 1}, {xiGen({2}, 0), 1}}));

    const auto unit = alg.monomials(0, 0);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].isUnit());

    CHECK(alg.monomials(1, 1) == deg1);  // deterministic across runs
}

TEST_CASE("Koszul-signed multiplication") {
    const Element xi1 = Element::fromMonomial(mono({{xiGen({1}, 0), 1}}));
    const Element xi2 = Element::fromMonomial(mono({{xiGen({2}, 0), 1}}));
    CHECK(multiply(xi1, xi2) == negate(multiply(xi2, xi1)));
    CHECK(multiply(xi1, xi1).isZero());

    const Element x0 = Element::fromMonomial(mono({{xGen(0), 1}}));
    const Element a11 = Element::fromMonomial(mono({{aGen(1, 1), 1}}));
    CHECK(multiply(x0, a11) == multiply(a11, x0));
}

TEST_CASE("graded commutativity and associativity on random elements") {
    const FreeGCA alg = xiAlgebra(2);
    std::vector<Monomial> pool;
    for (int d = 0; d <= 3; ++d)
        for (int c = 0; c <= 2; ++c)
            for (const Monomial& m : alg.monomials(d, c)) pool.push_back(m);

    std::mt19937 rng(11);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        const Monomial& a = pool[pick(rng)];
        const Monomial& b = pool[pick(rng)];
        const Monomial& c = pool[pick(rng)];
        const int sign = (a.degree * b.degree) % 2 == 0 ? 1 : -1;
        CHECK(multiply(a, b) == scale(multiply(b, a), Rational(sign)));
        CHECK(multiply(multiply(a, b), Element::fromMonomial(c)) ==
              multiply(Element::fromMonomial(a), multiply(b, c)));
    }
}

TEST_CASE("the partition-sum morphism on pinned generators") {
    const KdefAlgebra kd = makeKdefAlgebra(2);
    const AlgebraMorphism& f = kd.presentation->definingMap();

    CHECK(f.apply(Element::fromMonomial(mono({{xiGen({}, 1), 1}}))) ==
          Element::fromMonomial(mono({{xGen(1), 1}})));

    const Element img = f.apply(Element::fromMonomial(mono({{xiGen({1}, 1), 1}})));
    Element want = add(multiply(Element::fromMonomial(mono({{xGen(1), 1}})),
                                Element::fromMonomial(mono({{aGen(1, 1), 1}}))),
                       multiply(Element::fromMonomial(mono({{xGen(0), 1}})),
                                Element::fromMonomial(mono({{aGen(1, 2), 1}}))));
    CHECK(img == want);

    const Element both = f.apply(multiply(Element::fromMonomial(mono({{xiGen({1}, 0), 1}})),
                                          Element::fromMonomial(mono({{xiGen({2}, 0), 1}}))));
    CHECK(both == Element::fromMonomial(
                      mono({{aGen(1, 1), 1}, {aGen(2, 1), 1}, {xGen(0), 2}})));
}

TEST_CASE("morphism is multiplicative on random homogeneous pairs") {
    const KdefAlgebra kd = makeKdefAlgebra(2);
    const AlgebraMorphism& f = kd.presentation->definingMap();
    const FreeGCA& alg = kd.presentation->freeAlgebra();
    std::vector<Monomial> pool;
    for (int d = 0; d <= 4; ++d)
        for (int c = 0; c <= 2; ++c)
            for (const Monomial& m : alg.monomials(d, c)) pool.push_back(m);
    std::mt19937 rng(23);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const Element a = Element::fromMonomial(pool[pick(rng)]);
        const Element b = Element::fromMonomial(pool[pick(rng)]);
        CHECK(f.apply(multiply(a, b)) == multiply(f.apply(a), f.apply(b)));
    }
}

TEST_CASE("kernels and quotients at pinned bidegrees") {
    const KdefAlgebra k1 = makeKdefAlgebra(1);
    CHECK(k1.presentation->kernelBasis(2, 2).empty());
    CHECK(k1.presentation->kernelBasis(0, 0).empty());

    const KdefAlgebra k2 = makeKdefAlgebra(2);
    const auto kernel = k2.presentation->kernelBasis(2, 2);
    REQUIRE(kernel.size() == 1);
    CHECK(k2.presentation->quotientDim(2, 2) == 2);

    const Element relation = sub(multiply(Element::fromMonomial(mono({{xiGen({1}, 0), 1}})),
                                          Element::fromMonomial(mono({{xiGen({2}, 0), 1}}))),
                                 multiply(Element::fromMonomial(mono({{xiGen({}, 0), 1}})),
                                          Element::fromMonomial(mono({{xiGen({1, 2}, 0), 1}}))));
    CHECK(k2.presentation->reduce(relation).isZero());
    CHECK(k2.presentation->reduce(Element::unit()) == Element::unit());

    // reduce is idempotent and kernel/quotient dimensions are complementary.
    for (int d = 0; d <= 5; ++d)
        for (int c = 1; c <= 2; ++c) {
            const auto& data = k2.presentation->bidegree(d, c);
            CHECK(data.kernelVectors.size() + data.quotientCols.size() == data.monomials.size());
            for (const Element& e : k2.presentation->kernelBasis(d, c))
                CHECK(k2.presentation->reduce(k2.presentation->reduce(e)) ==
                      k2.presentation->reduce(e));
        }
}

TEST_CASE("concurrent quotient queries agree with serial results") {
    const KdefAlgebra kd = makeKdefAlgebra(2);
    std::vector<int> serial;
    for (int d = 0; d <= 6; ++d)
        for (int c = 1; c <= 2; ++c) serial.push_back(kd.presentation->quotientDim(d, c));

    const KdefAlgebra fresh = makeKdefAlgebra(2);
    std::vector<std::future<std::vector<int>>> tasks;
    for (int worker = 0; worker < 4; ++worker) {
        tasks.push_back(std::async(std::launch::async, [&fresh] {
            std::vector<int> dims;
            for (int d = 0; d <= 6; ++d)
                for (int c = 1; c <= 2; ++c) dims.push_back(fresh.presentation->quotientDim(d, c));
            return dims;
        }));
    }
    for (auto& t : tasks) CHECK(t.get() == serial);
}
