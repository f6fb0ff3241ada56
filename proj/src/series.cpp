#include "chh/series.hpp"

#include <algorithm>
#include <sstream>

namespace chh {

namespace {

void requireSameTruncation(const Series& a, const Series& b, const char* op) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument(std::string(op) + ": truncation mismatch");
}

}  // namespace

Series::Series(int truncation, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (truncation < 0) throw std::invalid_argument("Series: negative truncation");
    coeffs_.resize(truncation + 1);
}

Series Series::one(int truncation) {
    Series s(truncation);
    s.coeffs_[0] = Rational(1);
    return s;
}

Series Series::monomial(int degree, int truncation) {
    Series s(truncation);
    if (degree <= truncation) s.coeffs_[degree] = Rational(1);
    return s;
}

Series Series::polynomial(const std::vector<long>& coeffs, int truncation) {
    Series s(truncation);
    for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= truncation; ++i)
        s.coeffs_[i] = Rational(coeffs[i]);
    return s;
}

const Rational& Series::coeff(int degree) const {
    if (degree < 0 || degree > truncation())
        throw std::out_of_range("Series::coeff: degree out of range");
    return coeffs_[degree];
}

void Series::setCoeff(int degree, const Rational& v) {
    if (degree < 0 || degree > truncation())
        throw std::out_of_range("Series::setCoeff: degree out of range");
    coeffs_[degree] = v;
}

int Series::topDegree() const {
    for (int d = truncation(); d >= 0; --d)
        if (!coeffs_[d].isZero()) return d;
    return -1;
}

Series Series::retruncated(int newTruncation) const {
    Series s(newTruncation);
    for (int d = 0; d <= std::min(truncation(), newTruncation); ++d) s.coeffs_[d] = coeffs_[d];
    return s;
}

bool Series::allCoeffsNonNegativeIntegers() const {
    for (const Rational& c : coeffs_)
        if (!c.isInteger() || c.sign() < 0) return false;
    return true;
}

std::string Series::str() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= truncation(); ++d) {
        if (coeffs_[d].isZero()) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0 || coeffs_[d] != Rational(1)) os << coeffs_[d].str();
        if (d == 1) os << "t";
        if (d > 1) os << "t^" << d;
    }
    if (first) os << "0";
    return os.str();
}

Series add(const Series& a, const Series& b) {
    requireSameTruncation(a, b, "add");
    Series out(a.truncation());
    for (int d = 0; d <= a.truncation(); ++d) out.setCoeff(d, a.coeff(d) + b.coeff(d));
    return out;
}

Series sub(const Series& a, const Series& b) {
    requireSameTruncation(a, b, "sub");
    Series out(a.truncation());
    for (int d = 0; d <= a.truncation(); ++d) out.setCoeff(d, a.coeff(d) - b.coeff(d));
    return out;
}

Series mul(const Series& a, const Series& b) {
    requireSameTruncation(a, b, "mul");
    const int D = a.truncation();
    Series out(D);
    for (int i = 0; i <= D; ++i) {
        if (a.coeff(i).isZero()) continue;
        for (int j = 0; i + j <= D; ++j) {
            if (b.coeff(j).isZero()) continue;
            out.setCoeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

Series scale(const Series& a, const Rational& k) {
    Series out(a.truncation());
    for (int d = 0; d <= a.truncation(); ++d) out.setCoeff(d, a.coeff(d) * k);
    return out;
}

Series divByUnit(const Series& a, const Series& b) {
    requireSameTruncation(a, b, "divByUnit");
    if (b.coeff(0) != Rational(1))
        throw std::invalid_argument("divByUnit: divisor must have constant term 1");
    const int D = a.truncation();
    Series q(D);
    for (int n = 0; n <= D; ++n) {
        Rational acc = a.coeff(n);
        for (int i = 0; i < n; ++i) acc -= q.coeff(i) * b.coeff(n - i);
        q.setCoeff(n, acc);
    }
    return q;
}

Series pow(const Series& a, int n) {
    if (n < 0) throw std::invalid_argument("pow: negative exponent");
    Series out = Series::one(a.truncation());
    for (int i = 0; i < n; ++i) out = mul(out, a);
    return out;
}

Series substNegTSquared(const Series& p) {
    const int D = p.truncation();
    Series out(D);
    for (int k = 0; 2 * k <= D; ++k) {
        Rational c = p.coeff(k);
        if (k % 2 == 1) c = -c;
        out.setCoeff(2 * k, c);
    }
    return out;
}

Series onePlusTPow(int n, int truncation) {
    return pow(Series::polynomial({1, 1}, truncation), n);
}

Series oneMinusTPow(int n, int truncation) {
    return pow(Series::polynomial({1, -1}, truncation), n);
}

Series sym2Series(const Series& p) {
    return scale(add(mul(p, p), substNegTSquared(p)), Rational(1, 2));
}

Series alt2Series(const Series& p) {
    return scale(sub(mul(p, p), substNegTSquared(p)), Rational(1, 2));
}

Series alt2ComoduleSeries(const Series& pW) {
    const int D = pW.truncation();
    const Series onePlusT2 = Series::polynomial({1, 0, 1}, D);
    const Series oneMinusT2 = Series::polynomial({1, 0, -1}, D);
    return scale(sub(mul(onePlusT2, mul(pW, pW)), mul(oneMinusT2, substNegTSquared(pW))),
                 Rational(1, 2));
}

Series psB1(int truncation) {
    return divByUnit(Series::one(truncation), Series::polynomial({1, 0, -1}, truncation));
}

Series psB2(int truncation) {
    const Series den = mul(Series::polynomial({1, 0, -1}, truncation),
                           Series::polynomial({1, 0, 0, 0, -1}, truncation));
    return divByUnit(Series::one(truncation), den);
}

namespace {

Series pU2At(int s, int r, int D) {
    // (1+t)^{s+r} ( (1+t^3)^s + p1 + p2 ) with
    //   p1 = (1+t^2)(1+t)^s ((1+t)^r - 1) / 2
    //   p2 = (1-t^2)(1-t)^s ((1-t)^r - 1) / 2
    const Series one = Series::one(D);
    const Series p1 = scale(mul(Series::polynomial({1, 0, 1}, D),
                                mul(onePlusTPow(s, D), sub(onePlusTPow(r, D), one))),
                            Rational(1, 2));
    const Series p2 = scale(mul(Series::polynomial({1, 0, -1}, D),
                                mul(oneMinusTPow(s, D), sub(oneMinusTPow(r, D), one))),
                            Rational(1, 2));
    const Series inner = add(pow(Series::polynomial({1, 0, 0, 1}, D), s), add(p1, p2));
    return mul(onePlusTPow(s + r, D), inner);
}

}  // namespace

int pU2Degree(int s, int r) {
    if (s < 0 || r < 0) throw std::invalid_argument("pU2Degree: negative rank");
    const int bound = 4 * s + 2 * r + 4;
    return pU2At(s, r, bound).topDegree();
}

Series pU2(int s, int r, int truncation) {
    if (s < 0 || r < 0) throw std::invalid_argument("pU2: negative rank");
    const int deg = pU2Degree(s, r);
    if (deg > truncation)
        throw TruncationError("pU2: polynomial degree " + std::to_string(deg) +
                              " exceeds truncation " + std::to_string(truncation));
    const Series full = pU2At(s, r, std::max(deg, 0));
    const Series out = full.retruncated(truncation);
    if (!out.allCoeffsNonNegativeIntegers())
        throw std::logic_error("pU2: coefficients not non-negative integers");
    return out;
}

namespace {

Series pRepF2At(int r, int D) {
    // (1+t)^{r+2} ( 1 + ((1+t)^2((1+t)^r - 1) + (1-t)^2((1-t)^r - 1)) / 2 )
    const Series one = Series::one(D);
    const Series bracket = add(
        one, scale(add(mul(onePlusTPow(2, D), sub(onePlusTPow(r, D), one)),
                       mul(oneMinusTPow(2, D), sub(oneMinusTPow(r, D), one))),
                   Rational(1, 2)));
    return mul(onePlusTPow(r + 2, D), bracket);
}

}  // namespace

int pRepF2Degree(int r) {
    if (r < 0) throw std::invalid_argument("pRepF2Degree: negative rank");
    return pRepF2At(r, 2 * r + 4).topDegree();
}

Series pRepF2(int r, int truncation) {
    if (r < 0) throw std::invalid_argument("pRepF2: negative rank");
    const int deg = pRepF2Degree(r);
    const Series full = pRepF2At(r, std::max(deg, 0));
    return full.retruncated(truncation);
}

bool formulaCrossCheckU2(int s, int r, int truncation) {
    const int D = std::max(truncation, pU2Degree(s, r));
    // Charge-2 comodule series assembled term by term: (1+t)^r p_{A_2} plus,
    // for k = 1..r, t (1+t)^k times the Alt^2 comodule series of the shifted
    // charge-1 cogenerator space (1+t)^{r-k+s}.
    Series acc = mul(onePlusTPow(r, D),
                     mul(onePlusTPow(s, D), pow(Series::polynomial({1, 0, 0, 1}, D), s)));
    for (int k = 1; k <= r; ++k) {
        const Series w = onePlusTPow(r - k + s, D);
        const Series term =
            mul(Series::monomial(1, D), mul(onePlusTPow(k, D), alt2ComoduleSeries(w)));
        acc = add(acc, term);
    }
    return acc == pU2At(s, r, D);
}

}  // namespace chh
