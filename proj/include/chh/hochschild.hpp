#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chh/charged_algebra.hpp"
#include "chh/matrix.hpp"
#include "chh/series.hpp"

namespace chh {

// Normalised bar word a_0[a_1|...|a_p] over a charged algebra. slots[0] may
// be any basis element (including the unit); slots[1..p] are non-unit basis
// elements. Total degree is deg(a_0) + sum(deg(a_i) + 1); each bar slot
// carries a suspension. Charge is the plain sum of slot charges.
struct BarWord {
    std::vector<int> slots;
    int degree = 0;
    int charge = 0;

    int barLength() const { return static_cast<int>(slots.size()) - 1; }
};

BarWord makeBarWord(const TruncatedChargedAlgebra& a, std::vector<int> slots);
std::string barWordLabel(const TruncatedChargedAlgebra& a, const BarWord& w);

// Formal combination of bar words, keyed by slot vectors.
using WordVec = std::map<std::vector<int>, Rational>;

// The normalised Hochschild complex of a charged algebra in one fixed charge,
// assembled degree by degree. The chain spaces and differential matrices are
// built one degree beyond maxDegree so that homology through maxDegree is
// exact; degrees above maxDegree are withheld from reports.
//
// Sign conventions use suspended bar-slot degrees throughout: merging slots i
// and i+1 costs (-1)^{e_i} with e_i the suspended degree of the prefix through
// slot i; the wraparound term carries -(-1)^{(deg a_p + 1) e_{p-1}}; the
// internal differential acts with prefix Koszul signs and a sign flip on bar
// slots. These are exactly the signs that make the shuffle product a map of
// complexes graded-commutative with respect to total degree.
class ChargedComplex {
public:
    // buildExtra is the number of degrees assembled beyond maxDegree; the
    // default keeps homology through maxDegree exact.
    ChargedComplex(const TruncatedChargedAlgebra& a, int charge, int maxDegree,
                   int buildExtra = 1);

    const TruncatedChargedAlgebra& algebra() const { return *alg_; }
    int charge() const { return charge_; }
    int maxDegree() const { return maxDegree_; }      // reliable reporting window
    int builtDegree() const { return builtDegree_; }  // internal top degree

    int dim(int degree) const;
    const std::vector<BarWord>& words(int degree) const;
    int wordIndex(int degree, const std::vector<int>& slots) const;  // -1 if absent

    // d_n: chains(n) -> chains(n-1); defined for 1 <= n <= builtDegree().
    const Matrix& differentialMatrix(int degree) const;

    // Differential of a single word as a combination of words one degree down.
    WordVec differentialOfWord(const BarWord& w) const;

private:
    const TruncatedChargedAlgebra* alg_;
    int charge_, maxDegree_, builtDegree_;
    std::vector<std::vector<BarWord>> words_;
    std::vector<std::map<std::vector<int>, int>> index_;
    std::vector<Matrix> d_;
};

ChargedComplex buildComplex(const TruncatedChargedAlgebra& a, int charge, int maxDegree);

struct HHReport {
    int charge = 0;
    int maxDegree = 0;          // dims are exact for degrees 0..maxDegree
    std::vector<long> dims;     // size maxDegree + 1
    std::vector<std::vector<CoordVec>> representatives;  // filled on request
    bool hasRepresentatives = false;

    Series dimSeries() const;
};

HHReport homology(const ChargedComplex& cx, bool withRepresentatives = false);

// Shuffle product of two bar words: the a_0 slots multiply in the algebra and
// the bar letters interleave over all (p,s)-shuffles with Koszul signs taken
// in the suspended degrees, times (-1)^{deg(b_0) * (suspended degree of u's
// letters)} for moving b_0 across u's letters.
WordVec shuffleProduct(const TruncatedChargedAlgebra& a, const BarWord& u, const BarWord& v);

// Materialises the normalised Hochschild complex of `a` in charges
// <= maxCharge (at most 2) and degrees <= maxDegree as a charged dgca: basis
// = bar words, differential = total differential, product = shuffle. The
// result feeds back into buildComplex for iteration.
TruncatedChargedAlgebra hochschildDgca(const TruncatedChargedAlgebra& a, int maxCharge,
                                       int maxDegree);

// r-fold iterated Hochschild homology in one charge; r = 0 reports the
// algebra's own dimensions. Requires a.maxDegree() >= maxDegree + 1 for
// r >= 1 so that the top reported degree stays exact.
HHReport iteratedHHDirect(const TruncatedChargedAlgebra& a, int r, int charge, int maxDegree);

// Polynomial in the degree-raising shift: applied to a dimension series it
// multiplies by sum coeffs[i] t^i.
struct ShiftPolynomial {
    std::vector<long> coeffs;

    Series applyTo(const Series& v) const;
    static ShiftPolynomial onePlusShiftPow(int k);
};

// Closed formulas for the iterated homology of a charged algebra with trivial
// differential and scalar charge-0 part, in charges 1 and 2:
//   charge1 = (1+t)^r a1
//   charge2 = (1+t)^r a2 + sum_{k=1}^r t (1+t)^k Alt2((1+t)^{r-k} a1).
std::pair<Series, Series> hhFormulaLowCharge(const Series& a1, const Series& a2, int r,
                                             int maxDegree);

struct FormalityCheckResult {
    bool ok = false;
    int failCharge = -1;
    int failDegree = -1;
    std::string detail;
};

// Builds the chain map from the charge <= 2 complex onto its homology
// (identity in charges <= 1, symmetrisation onto the kernel slot, averaged
// projection on the cokernel slot), then checks that it commutes with the
// differentials and induces isomorphisms on homology in degrees <= maxDegree.
FormalityCheckResult verifyFormalityProjection(const TruncatedChargedAlgebra& a, int maxDegree);

}  // namespace chh
