#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "chh/matrix.hpp"
#include "chh/rational.hpp"

namespace chh {

// A generator of a free graded-commutative algebra. Identity and the global
// generator order are given by (family, idx), compared lexicographically.
// Parity is determined by the homological degree.
struct Generator {
    std::string family;
    std::vector<int> idx;
    int degree = 0;
    int charge = 0;

    bool odd() const { return degree % 2 != 0; }
    std::string str() const;

    friend auto operator<=>(const Generator& a, const Generator& b) {
        if (auto c = a.family <=> b.family; c != 0) return c;
        return a.idx <=> b.idx;
    }
    friend bool operator==(const Generator& a, const Generator& b) {
        return a.family == b.family && a.idx == b.idx;
    }
};

// Product of generator powers, sorted by the global generator order. Odd
// generators carry exponent exactly 1; no duplicate generators appear.
struct Monomial {
    std::vector<std::pair<Generator, int>> factors;
    int degree = 0;
    int charge = 0;

    static Monomial unit() { return {}; }
    bool isUnit() const { return factors.empty(); }
    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b);
};

// Graded lexicographic monomial order: by (degree, charge) first, then by the
// exponent vector, where the monomial with the larger exponent at the
// earliest differing generator comes first.
bool operator<(const Monomial& a, const Monomial& b);

// Linear combination of monomials; zero coefficients are never stored.
struct Element {
    std::map<Monomial, Rational> terms;

    static Element zero() { return {}; }
    static Element unit() { return fromMonomial(Monomial::unit()); }
    static Element fromMonomial(const Monomial& m, const Rational& c = Rational(1));

    bool isZero() const { return terms.empty(); }
    void addTerm(const Monomial& m, const Rational& c);
    std::string str() const;

    // True when all terms share one (degree, charge); the unique bidegree is
    // written to *degree/*charge if given. The zero element is homogeneous.
    bool homogeneous(int* degree = nullptr, int* charge = nullptr) const;

    friend bool operator==(const Element& a, const Element& b) = default;
};

Element add(const Element& a, const Element& b);
Element scale(const Element& a, const Rational& k);
Element negate(const Element& a);
Element sub(const Element& a, const Element& b);

// Koszul-signed product: merging sorted factor lists costs a sign of -1 for
// every transposition of two odd generators; odd squares vanish.
Element multiply(const Element& a, const Element& b);
Element multiply(const Monomial& a, const Monomial& b);
Element pow(const Element& a, int n);

// A free graded-commutative algebra described by finitely many generator
// families, each possibly infinite but with only finitely many generators in
// any bounded (degree, charge) window.
class FreeGCA {
public:
    using FamilyEnumerator = std::function<std::vector<Generator>(int maxDegree, int maxCharge)>;

    FreeGCA() = default;
    explicit FreeGCA(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void addFamily(FamilyEnumerator e) { families_.push_back(std::move(e)); }

    // All generators with degree <= maxDegree and charge <= maxCharge, sorted
    // by the global generator order.
    std::vector<Generator> generatorsWithin(int maxDegree, int maxCharge) const;

    // Exactly the monomials of bidegree (degree, charge), sorted by the
    // monomial order; deterministic across runs.
    std::vector<Monomial> monomials(int degree, int charge) const;

private:
    std::string name_;
    std::vector<FamilyEnumerator> families_;
};

// Algebra morphism determined by homogeneous generator images of equal
// bidegree, extended multiplicatively.
class AlgebraMorphism {
public:
    using ImageRule = std::function<Element(const Generator&)>;

    AlgebraMorphism() = default;
    AlgebraMorphism(const FreeGCA* source, const FreeGCA* target, ImageRule rule)
        : source_(source), target_(target), rule_(std::move(rule)) {}

    const FreeGCA& source() const { return *source_; }
    const FreeGCA& target() const { return *target_; }

    Element imageOfGenerator(const Generator& g) const;
    Element apply(const Element& e) const;

private:
    const FreeGCA* source_ = nullptr;
    const FreeGCA* target_ = nullptr;
    ImageRule rule_;
};

// Free algebra together with a defining morphism; models the quotient by the
// degreewise kernel ideal. Kernel/quotient data per bidegree is cached
// lazily behind a mutex, so concurrent readers are safe.
class PresentedAlgebra {
public:
    struct BidegreeData {
        std::vector<Monomial> monomials;      // source bidegree basis, monomial order
        std::vector<CoordVec> kernelVectors;  // kernel of the defining map, RREF-parametrised
        RrefResult kernelRref;                // rows span the kernel
        std::vector<int> quotientCols;        // complement of kernel pivots
    };

    PresentedAlgebra(FreeGCA source, FreeGCA target, AlgebraMorphism::ImageRule rule);

    const FreeGCA& freeAlgebra() const { return source_; }
    const AlgebraMorphism& definingMap() const { return morphism_; }

    const BidegreeData& bidegree(int degree, int charge) const;

    int quotientDim(int degree, int charge) const;
    std::vector<Monomial> quotientMonomials(int degree, int charge) const;
    std::vector<Element> kernelBasis(int degree, int charge) const;

    // Canonical representative supported on the quotient columns. Idempotent;
    // reduce(e) == 0 exactly when e lies in the kernel ideal. Non-homogeneous
    // elements are reduced termwise per bidegree.
    Element reduce(const Element& e) const;

private:
    FreeGCA source_, target_;
    AlgebraMorphism morphism_;

    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<BidegreeData>> cache_;

    std::unique_ptr<BidegreeData> computeBidegree(int degree, int charge) const;
};

// Family constructors used by models and tests.
FreeGCA::FamilyEnumerator singleGeneratorFamily(Generator g);

// x_j, j >= 0: degree 2j, charge 1.
FreeGCA::FamilyEnumerator xFamily();
// a_{i,j}, 1 <= i <= s, j >= 1: degree 2j-1, charge 0.
FreeGCA::FamilyEnumerator aFamily(int s);
// xi_{I,n}, I subset of {1..s}, n >= 0: degree |I|+2n, charge 1.
FreeGCA::FamilyEnumerator xiFamily(int s);

}  // namespace chh
