#include "chh/graded_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chh {

std::string Generator::str() const {
    std::ostringstream os;
    os << family;
    if (!idx.empty()) {
        os << "(";
        for (size_t i = 0; i < idx.size(); ++i) {
            if (i) os << ",";
            os << idx[i];
        }
        os << ")";
    }
    return os.str();
}

std::string Monomial::str() const {
    if (isUnit()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i].first.str();
        if (factors[i].second > 1) os << "^" << factors[i].second;
    }
    return os.str();
}

bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.charge != b.charge) return a.charge < b.charge;
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        const auto& [ga, ea] = a.factors[i];
        const auto& [gb, eb] = b.factors[j];
        if (ga < gb) return true;   // a has positive exponent at the earlier generator
        if (gb < ga) return false;
        if (ea != eb) return ea > eb;
        ++i;
        ++j;
    }
    // Equal so far; the one with an extra generator has the larger exponent
    // at the earliest remaining position.
    return i < a.factors.size();
}

Element Element::fromMonomial(const Monomial& m, const Rational& c) {
    Element e;
    if (!c.isZero()) e.terms.emplace(m, c);
    return e;
}

void Element::addTerm(const Monomial& m, const Rational& c) {
    if (c.isZero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) terms.erase(it);
}

std::string Element::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c != Rational(1) || m.isUnit()) os << c.str() << (m.isUnit() ? "" : "*");
        if (!m.isUnit()) os << m.str();
    }
    return os.str();
}

bool Element::homogeneous(int* degree, int* charge) const {
    bool found = false;
    int d = 0, c = 0;
    for (const auto& [m, coeff] : terms) {
        (void)coeff;
        if (!found) {
            d = m.degree;
            c = m.charge;
            found = true;
        } else if (m.degree != d || m.charge != c) {
            return false;
        }
    }
    if (degree) *degree = d;
    if (charge) *charge = c;
    return true;
}

Element add(const Element& a, const Element& b) {
    Element out = a;
    for (const auto& [m, c] : b.terms) out.addTerm(m, c);
    return out;
}

Element scale(const Element& a, const Rational& k) {
    Element out;
    if (k.isZero()) return out;
    for (const auto& [m, c] : a.terms) out.terms.emplace(m, c * k);
    return out;
}

Element negate(const Element& a) { return scale(a, Rational(-1)); }

Element sub(const Element& a, const Element& b) { return add(a, negate(b)); }

Element multiply(const Monomial& a, const Monomial& b) {
    // Merge the sorted factor lists. When a factor of b jumps over trailing
    // odd factors of a, each odd-odd transposition contributes a sign.
    std::vector<int> oddSuffix(a.factors.size() + 1, 0);
    for (int i = static_cast<int>(a.factors.size()) - 1; i >= 0; --i)
        oddSuffix[i] = oddSuffix[i + 1] + (a.factors[i].first.odd() ? 1 : 0);

    Monomial out;
    out.degree = a.degree + b.degree;
    out.charge = a.charge + b.charge;
    int sign = 1;
    size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
            out.factors.push_back(a.factors[i]);
            ++i;
        } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
            if (b.factors[j].first.odd() && oddSuffix[i] % 2 == 1) sign = -sign;
            out.factors.push_back(b.factors[j]);
            ++j;
        } else {
            if (a.factors[i].first.odd()) return Element::zero();  // odd square
            out.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
            ++i;
            ++j;
        }
    }
    return Element::fromMonomial(out, Rational(sign));
}

Element multiply(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Element prod = multiply(ma, mb);
            for (const auto& [m, c] : prod.terms) out.addTerm(m, c * ca * cb);
        }
    return out;
}

Element pow(const Element& a, int n) {
    if (n < 0) throw std::invalid_argument("pow: negative exponent");
    Element out = Element::unit();
    for (int i = 0; i < n; ++i) out = multiply(out, a);
    return out;
}

std::vector<Generator> FreeGCA::generatorsWithin(int maxDegree, int maxCharge) const {
    std::vector<Generator> out;
    for (const auto& fam : families_) {
        std::vector<Generator> gens = fam(maxDegree, maxCharge);
        out.insert(out.end(), gens.begin(), gens.end());
    }
    std::sort(out.begin(), out.end(), [](const Generator& a, const Generator& b) { return (a <=> b) < 0; });
    for (const Generator& g : out) {
        if (g.degree == 0 && g.charge == 0)
            throw std::logic_error("FreeGCA: generator with degree 0 and charge 0");
        if (g.degree < 0 || g.charge < 0) throw std::logic_error("FreeGCA: negative bidegree");
    }
    return out;
}

namespace {

void enumerateMonomialsRec(const std::vector<Generator>& gens, size_t pos, int degLeft,
                           int chargeLeft, Monomial& current, std::vector<Monomial>& out) {
    if (degLeft == 0 && chargeLeft == 0) {
        out.push_back(current);
        return;
    }
    if (pos == gens.size()) return;
    const Generator& g = gens[pos];

    // Exponent 0 branch first, then 1, 2, ... while the bidegree budget lasts.
    enumerateMonomialsRec(gens, pos + 1, degLeft, chargeLeft, current, out);

    int d = degLeft, c = chargeLeft;
    for (int e = 1;; ++e) {
        d -= g.degree;
        c -= g.charge;
        if (d < 0 || c < 0) break;
        current.factors.emplace_back(g, e);
        enumerateMonomialsRec(gens, pos + 1, d, c, current, out);
        current.factors.pop_back();
        if (g.odd()) break;
    }
}

}  // namespace

std::vector<Monomial> FreeGCA::monomials(int degree, int charge) const {
    if (degree < 0 || charge < 0) throw std::invalid_argument("monomials: negative bidegree");
    const std::vector<Generator> gens = generatorsWithin(degree, charge);
    std::vector<Monomial> out;
    Monomial current;
    enumerateMonomialsRec(gens, 0, degree, charge, current, out);
    for (Monomial& m : out) {
        m.degree = degree;
        m.charge = charge;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Element AlgebraMorphism::imageOfGenerator(const Generator& g) const {
    Element img = rule_(g);
    int d = 0, c = 0;
    if (!img.homogeneous(&d, &c) || (!img.isZero() && (d != g.degree || c != g.charge)))
        throw std::logic_error("AlgebraMorphism: image of " + g.str() + " not homogeneous of equal bidegree");
    return img;
}

Element AlgebraMorphism::apply(const Element& e) const {
    Element out;
    for (const auto& [m, coeff] : e.terms) {
        Element term = Element::unit();
        for (const auto& [g, exp] : m.factors) term = multiply(term, pow(imageOfGenerator(g), exp));
        out = add(out, scale(term, coeff));
    }
    return out;
}

PresentedAlgebra::PresentedAlgebra(FreeGCA source, FreeGCA target, AlgebraMorphism::ImageRule rule)
    : source_(std::move(source)), target_(std::move(target)) {
    morphism_ = AlgebraMorphism(&source_, &target_, std::move(rule));
}

std::unique_ptr<PresentedAlgebra::BidegreeData> PresentedAlgebra::computeBidegree(int degree,
                                                                                  int charge) const {
    auto data = std::make_unique<BidegreeData>();
    data->monomials = source_.monomials(degree, charge);

    const std::vector<Monomial> targetBasis = target_.monomials(degree, charge);
    std::map<Monomial, int> targetIndex;
    for (size_t i = 0; i < targetBasis.size(); ++i) targetIndex.emplace(targetBasis[i], static_cast<int>(i));

    Matrix images(static_cast<int>(targetBasis.size()), static_cast<int>(data->monomials.size()));
    for (size_t col = 0; col < data->monomials.size(); ++col) {
        const Element img = morphism_.apply(Element::fromMonomial(data->monomials[col]));
        for (const auto& [m, c] : img.terms) {
            auto it = targetIndex.find(m);
            if (it == targetIndex.end())
                throw std::logic_error("PresentedAlgebra: image outside the expected bidegree");
            images.set(it->second, static_cast<int>(col), c);
        }
    }

    data->kernelVectors = nullspaceBasis(images);
    data->kernelRref = rref(matrixFromRows(static_cast<int>(data->monomials.size()), data->kernelVectors));
    data->quotientCols.clear();
    std::vector<bool> isPivot(data->monomials.size(), false);
    for (int p : data->kernelRref.pivots) isPivot[p] = true;
    for (size_t i = 0; i < data->monomials.size(); ++i)
        if (!isPivot[i]) data->quotientCols.push_back(static_cast<int>(i));
    return data;
}

const PresentedAlgebra::BidegreeData& PresentedAlgebra::bidegree(int degree, int charge) const {
    const auto key = std::make_pair(degree, charge);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    auto data = computeBidegree(degree, charge);
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(data));
    (void)inserted;  // results are deterministic, a redundant compute is harmless
    return *it->second;
}

int PresentedAlgebra::quotientDim(int degree, int charge) const {
    return static_cast<int>(bidegree(degree, charge).quotientCols.size());
}

std::vector<Monomial> PresentedAlgebra::quotientMonomials(int degree, int charge) const {
    const BidegreeData& data = bidegree(degree, charge);
    std::vector<Monomial> out;
    out.reserve(data.quotientCols.size());
    for (int c : data.quotientCols) out.push_back(data.monomials[c]);
    return out;
}

std::vector<Element> PresentedAlgebra::kernelBasis(int degree, int charge) const {
    const BidegreeData& data = bidegree(degree, charge);
    std::vector<Element> out;
    for (const CoordVec& v : data.kernelVectors) {
        Element e;
        for (const auto& [i, c] : v) e.addTerm(data.monomials[i], c);
        out.push_back(std::move(e));
    }
    return out;
}

Element PresentedAlgebra::reduce(const Element& e) const {
    // Group terms per bidegree and reduce each block against the kernel RREF.
    std::map<std::pair<int, int>, Element> blocks;
    for (const auto& [m, c] : e.terms) blocks[{m.degree, m.charge}].addTerm(m, c);

    Element out;
    for (const auto& [key, block] : blocks) {
        const BidegreeData& data = bidegree(key.first, key.second);
        std::map<Monomial, int> index;
        for (size_t i = 0; i < data.monomials.size(); ++i) index.emplace(data.monomials[i], static_cast<int>(i));
        CoordVec v;
        for (const auto& [m, c] : block.terms) {
            auto it = index.find(m);
            if (it == index.end()) throw std::logic_error("reduce: monomial outside bidegree basis");
            v[it->second] = c;
        }
        const CoordVec reduced = reduceAgainstRref(data.kernelRref, std::move(v));
        for (const auto& [i, c] : reduced) out.addTerm(data.monomials[i], c);
    }
    return out;
}

FreeGCA::FamilyEnumerator singleGeneratorFamily(Generator g) {
    return [g](int maxDegree, int maxCharge) {
        std::vector<Generator> out;
        if (g.degree <= maxDegree && g.charge <= maxCharge) out.push_back(g);
        return out;
    };
}

FreeGCA::FamilyEnumerator xFamily() {
    return [](int maxDegree, int maxCharge) {
        std::vector<Generator> out;
        if (maxCharge < 1) return out;
        for (int j = 0; 2 * j <= maxDegree; ++j) out.push_back({"x", {j}, 2 * j, 1});
        return out;
    };
}

FreeGCA::FamilyEnumerator aFamily(int s) {
    return [s](int maxDegree, int maxCharge) {
        (void)maxCharge;
        std::vector<Generator> out;
        for (int i = 1; i <= s; ++i)
            for (int j = 1; 2 * j - 1 <= maxDegree; ++j) out.push_back({"a", {i, j}, 2 * j - 1, 0});
        return out;
    };
}

FreeGCA::FamilyEnumerator xiFamily(int s) {
    return [s](int maxDegree, int maxCharge) {
        std::vector<Generator> out;
        if (maxCharge < 1) return out;
        // Subsets I of {1..s} with |I| + 2n <= maxDegree; idx = [I..., n].
        for (unsigned mask = 0; mask < (1u << s); ++mask) {
            std::vector<int> members;
            for (int i = 1; i <= s; ++i)
                if (mask & (1u << (i - 1))) members.push_back(i);
            const int l = static_cast<int>(members.size());
            for (int n = 0; l + 2 * n <= maxDegree; ++n) {
                std::vector<int> idx = members;
                idx.push_back(n);
                out.push_back({"xi", std::move(idx), l + 2 * n, 1});
            }
        }
        return out;
    };
}

}  // namespace chh
