#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chh/rational.hpp"

namespace chh {

// Two dimension conventions appear downstream and are never mixed silently:
// "absolute" series count honest vector-space dimensions per degree, while
// "comodule" series count cogenerators of a free H_*(BU(n))-comodule. They
// are related by multiplication with psB1/psB2; reports carry the tag.

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated power series in one variable t with exact rational coefficients.
// All arithmetic is exact within the truncation window; binary operations
// require both operands to carry the same truncation order.
class Series {
public:
    Series() = default;
    explicit Series(int truncation) : coeffs_(truncation + 1) {
        if (truncation < 0) throw std::invalid_argument("Series: negative truncation");
    }
    Series(int truncation, std::vector<Rational> coeffs);

    static Series zero(int truncation) { return Series(truncation); }
    static Series one(int truncation);
    static Series monomial(int degree, int truncation);
    static Series polynomial(const std::vector<long>& coeffs, int truncation);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int degree) const;
    void setCoeff(int degree, const Rational& v);

    // Degree of the top nonzero coefficient, or -1 for the zero series.
    int topDegree() const;

    Series retruncated(int newTruncation) const;

    bool allCoeffsNonNegativeIntegers() const;

    std::string str() const;  // human form, e.g. "1 + 3t + 5t^2"

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Rational> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rational& k);

// a / b where b has constant term exactly 1.
Series divByUnit(const Series& a, const Series& b);

Series pow(const Series& a, int n);

// p(-t^2): substitute t -> -t^2, truncating at p's order.
Series substNegTSquared(const Series& p);

// (1+t)^n and (1-t)^n at the given truncation.
Series onePlusTPow(int n, int truncation);
Series oneMinusTPow(int n, int truncation);

// Dimension series of symmetric/alternating squares of a graded space with
// Poincare series p (Koszul-signed Sigma_2 action):
//   sym2 = (p(t)^2 + p(-t^2)) / 2,   alt2 = (p(t)^2 - p(-t^2)) / 2.
Series sym2Series(const Series& p);
Series alt2Series(const Series& p);

// Cogenerator series of Alt^2(W (x) B_1) as a free B_2-comodule:
//   ((1+t^2) p_W(t)^2 - (1-t^2) p_W(-t^2)) / 2.
Series alt2ComoduleSeries(const Series& pW);

// Homology series of BU(1) and BU(2): 1/(1-t^2) and 1/((1-t^2)(1-t^4)).
Series psB1(int truncation);
Series psB2(int truncation);

// Closed-form comodule Poincare polynomial of the U(2)-equivariant homology
// of Hom(F_s x Z^r, U(2)). Throws TruncationError if the polynomial does not
// fit below the requested truncation.
Series pU2(int s, int r, int truncation);

// Natural (polynomial) degree of pU2(s, r).
int pU2Degree(int s, int r);

// Closed-form Poincare polynomial of the character variety
// Rep(F_2 x Z^r, U(2)); absolute convention.
Series pRepF2(int r, int truncation);

int pRepF2Degree(int r);

// Recomputes the U(2) comodule series from the low-charge iterated-homology
// formula plus the alternating-square comodule identity, and compares with
// the closed form pU2(s, r).
bool formulaCrossCheckU2(int s, int r, int truncation);

}  // namespace chh
