#include "chh/hochschild.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "chh/kdef.hpp"

namespace chh {

namespace {

int suspendedDegree(const TruncatedChargedAlgebra& a, int id) {
    return a.element(id).degree + 1;
}

}  // namespace

BarWord makeBarWord(const TruncatedChargedAlgebra& a, std::vector<int> slots) {
    if (slots.empty()) throw std::invalid_argument("makeBarWord: empty slot list");
    BarWord w;
    w.degree = a.element(slots[0]).degree;
    w.charge = a.element(slots[0]).charge;
    for (size_t i = 1; i < slots.size(); ++i) {
        if (slots[i] == TruncatedChargedAlgebra::kUnit)
            throw std::invalid_argument("makeBarWord: unit in a bar slot");
        w.degree += suspendedDegree(a, slots[i]);
        w.charge += a.element(slots[i]).charge;
    }
    w.slots = std::move(slots);
    return w;
}

std::string barWordLabel(const TruncatedChargedAlgebra& a, const BarWord& w) {
    std::ostringstream os;
    os << "(" << a.element(w.slots[0]).label;
    for (size_t i = 1; i < w.slots.size(); ++i) os << " | " << a.element(w.slots[i]).label;
    os << ")";
    return os.str();
}

ChargedComplex::ChargedComplex(const TruncatedChargedAlgebra& a, int charge, int maxDegree,
                               int buildExtra)
    : alg_(&a), charge_(charge), maxDegree_(maxDegree), builtDegree_(maxDegree + buildExtra) {
    if (charge < 0 || charge > a.maxCharge())
        throw std::invalid_argument("ChargedComplex: charge outside the algebra window");
    if (maxDegree < 0) throw std::invalid_argument("ChargedComplex: negative degree");
    if (a.maxDegree() < builtDegree_)
        throw std::invalid_argument("ChargedComplex: algebra window too small for this degree");
    if (!a.chargeZeroIsUnitOnly())
        throw std::invalid_argument("ChargedComplex: charge-0 part must be the scalars");

    words_.resize(builtDegree_ + 1);
    index_.resize(builtDegree_ + 1);

    // Words in lexicographic slot order: a_0 ascending, then letters ascending
    // position by position. Letters carry charge >= 1, so bar length <= charge.
    std::vector<int> slots;
    auto record = [&] {
        BarWord w = makeBarWord(*alg_, slots);
        if (w.degree <= builtDegree_) {
            index_[w.degree].emplace(w.slots, static_cast<int>(words_[w.degree].size()));
            words_[w.degree].push_back(std::move(w));
        }
    };
    auto rec = [&](auto&& self, int chargeLeft, int degreeLeft) -> void {
        if (chargeLeft == 0) {
            record();
            return;
        }
        for (int id = 1; id < alg_->size(); ++id) {
            const ChargedBasisElement& e = alg_->element(id);
            if (e.charge < 1 || e.charge > chargeLeft) continue;
            if (e.degree + 1 > degreeLeft) continue;
            slots.push_back(id);
            self(self, chargeLeft - e.charge, degreeLeft - e.degree - 1);
            slots.pop_back();
        }
    };
    for (int id0 = 0; id0 < alg_->size(); ++id0) {
        const ChargedBasisElement& e = alg_->element(id0);
        if (e.charge > charge_ || e.degree > builtDegree_) continue;
        slots.assign(1, id0);
        rec(rec, charge_ - e.charge, builtDegree_ - e.degree);
    }

    d_.resize(builtDegree_ + 1);
    for (int n = 1; n <= builtDegree_; ++n) {
        Matrix m(dim(n - 1), dim(n));
        for (int col = 0; col < dim(n); ++col) {
            const WordVec dv = differentialOfWord(words_[n][col]);
            for (const auto& [slots2, coeff] : dv) {
                const int row = wordIndex(n - 1, slots2);
                if (row < 0) throw std::logic_error("ChargedComplex: differential left the window");
                m.set(row, col, coeff);
            }
        }
        d_[n] = std::move(m);
    }

    // d.d = 0 is checked on every construction; a sign slip anywhere in the
    // merge, wraparound or internal terms would surface here.
    for (int n = 2; n <= builtDegree_; ++n) {
        if (multiply(d_[n - 1], d_[n]).nonzeros() != 0)
            throw std::logic_error("ChargedComplex: differential does not square to zero");
    }
}

int ChargedComplex::dim(int degree) const {
    if (degree < 0 || degree > builtDegree_) return 0;
    return static_cast<int>(words_[degree].size());
}

const std::vector<BarWord>& ChargedComplex::words(int degree) const {
    static const std::vector<BarWord> kEmpty;
    if (degree < 0 || degree > builtDegree_) return kEmpty;
    return words_[degree];
}

int ChargedComplex::wordIndex(int degree, const std::vector<int>& slots) const {
    if (degree < 0 || degree > builtDegree_) return -1;
    auto it = index_[degree].find(slots);
    return it == index_[degree].end() ? -1 : it->second;
}

const Matrix& ChargedComplex::differentialMatrix(int degree) const {
    if (degree < 1 || degree > builtDegree_)
        throw std::out_of_range("ChargedComplex::differentialMatrix: degree out of range");
    return d_[degree];
}

WordVec ChargedComplex::differentialOfWord(const BarWord& w) const {
    const TruncatedChargedAlgebra& a = *alg_;
    const std::vector<int>& slots = w.slots;
    const int p = w.barLength();

    // Suspended prefix degrees: e[i] = deg(a_0) + sum_{k<=i, k>=1} (deg(a_k)+1).
    std::vector<int> e(p + 1);
    e[0] = a.element(slots[0]).degree;
    for (int i = 1; i <= p; ++i) e[i] = e[i - 1] + suspendedDegree(a, slots[i]);

    WordVec out;
    auto emit = [&](std::vector<int> newSlots, const Rational& coeff) {
        if (coeff.isZero()) return;
        auto it = out.find(newSlots);
        if (it == out.end()) {
            out.emplace(std::move(newSlots), coeff);
        } else {
            it->second += coeff;
            if (it->second.isZero()) out.erase(it);
        }
    };

    // Slot merges i,(i+1) -> i with sign (-1)^{e_i}.
    for (int i = 0; i < p; ++i) {
        const Rational sign((e[i] % 2 == 0) ? 1 : -1);
        for (const auto& [z, cz] : a.product(slots[i], slots[i + 1])) {
            if (i >= 1 && z == TruncatedChargedAlgebra::kUnit) continue;  // normalised
            std::vector<int> ns;
            ns.reserve(slots.size() - 1);
            ns.insert(ns.end(), slots.begin(), slots.begin() + i);
            ns.push_back(z);
            ns.insert(ns.end(), slots.begin() + i + 2, slots.end());
            emit(std::move(ns), sign * cz);
        }
    }

    // Wraparound: a_p moves across the whole prefix and multiplies a_0 from
    // the left, with an extra global minus.
    if (p >= 1) {
        const int exp = suspendedDegree(a, slots[p]) * e[p - 1] + 1;
        const Rational sign((exp % 2 == 0) ? 1 : -1);
        for (const auto& [z, cz] : a.product(slots[p], slots[0])) {
            std::vector<int> ns;
            ns.reserve(slots.size() - 1);
            ns.push_back(z);
            ns.insert(ns.end(), slots.begin() + 1, slots.end() - 1);
            emit(std::move(ns), sign * cz);
        }
    }

    // Internal differential of the coefficients, when present.
    if (!a.trivialDifferential()) {
        for (int i = 0; i <= p; ++i) {
            const int exp = (i == 0) ? 0 : e[i - 1] + 1;
            const Rational sign((exp % 2 == 0) ? 1 : -1);
            for (const auto& [z, cz] : a.differential(slots[i])) {
                if (i >= 1 && z == TruncatedChargedAlgebra::kUnit) continue;
                std::vector<int> ns = slots;
                ns[i] = z;
                emit(std::move(ns), sign * cz);
            }
        }
    }
    return out;
}

ChargedComplex buildComplex(const TruncatedChargedAlgebra& a, int charge, int maxDegree) {
    return ChargedComplex(a, charge, maxDegree, 1);
}

Series HHReport::dimSeries() const {
    Series s(maxDegree);
    for (int d = 0; d <= maxDegree; ++d) s.setCoeff(d, Rational(dims[d]));
    return s;
}

HHReport homology(const ChargedComplex& cx, bool withRepresentatives) {
    if (cx.builtDegree() < cx.maxDegree() + 1)
        throw std::invalid_argument("homology: complex lacks the safeguard degree");
    const int top = cx.builtDegree();
    std::vector<RrefResult> reduced(top + 1);
    std::vector<int> ranks(top + 2, 0);
    for (int n = 1; n <= top; ++n) {
        reduced[n] = rref(cx.differentialMatrix(n));
        ranks[n] = static_cast<int>(reduced[n].pivots.size());
    }

    HHReport report;
    report.charge = cx.charge();
    report.maxDegree = cx.maxDegree();
    report.dims.assign(report.maxDegree + 1, 0);
    for (int n = 0; n <= report.maxDegree; ++n)
        report.dims[n] = cx.dim(n) - ranks[n] - ranks[n + 1];

    if (withRepresentatives) {
        report.hasRepresentatives = true;
        report.representatives.resize(report.maxDegree + 1);
        for (int n = 0; n <= report.maxDegree; ++n) {
            // Cycles reduced against the boundary row space; survivors are a
            // homology basis.
            std::vector<CoordVec> cycles;
            if (n == 0) {
                for (int i = 0; i < cx.dim(0); ++i) cycles.push_back(CoordVec{{i, Rational(1)}});
            } else {
                cycles = nullspaceBasis(cx.differentialMatrix(n));
            }
            std::vector<CoordVec> rows;
            for (int col = 0; col < cx.dim(n + 1); ++col) {
                CoordVec b;
                for (int r = 0; r < cx.dim(n); ++r) {
                    const Rational v = cx.differentialMatrix(n + 1).at(r, col);
                    if (!v.isZero()) b[r] = v;
                }
                if (!b.empty()) rows.push_back(std::move(b));
            }
            RrefResult span = rref(matrixFromRows(cx.dim(n), rows));
            for (const CoordVec& c : cycles) {
                CoordVec rem = reduceAgainstRref(span, c);
                if (rem.empty()) continue;
                report.representatives[n].push_back(rem);
                rows.push_back(rem);
                span = rref(matrixFromRows(cx.dim(n), rows));
            }
        }
    }
    return report;
}

WordVec shuffleProduct(const TruncatedChargedAlgebra& a, const BarWord& u, const BarWord& v) {
    const int p = u.barLength();
    const int s = v.barLength();

    // Suffix sums of suspended degrees of u's letters.
    std::vector<int> uSuffix(p + 2, 0);
    for (int i = p; i >= 1; --i) uSuffix[i] = uSuffix[i + 1] + suspendedDegree(a, u.slots[i]);

    const int pre = a.element(v.slots[0]).degree * uSuffix[1];
    const Rational prefactor((pre % 2 == 0) ? 1 : -1);
    const CoordVec headProduct = a.product(u.slots[0], v.slots[0]);
    if (headProduct.empty()) return {};

    WordVec out;
    std::vector<int> letters;
    auto rec = [&](auto&& self, int i, int j, int signExp) -> void {
        if (i > p && j > s) {
            for (const auto& [z, cz] : headProduct) {
                std::vector<int> slots;
                slots.reserve(letters.size() + 1);
                slots.push_back(z);
                slots.insert(slots.end(), letters.begin(), letters.end());
                const Rational coeff = prefactor * Rational((signExp % 2 == 0) ? 1 : -1) * cz;
                auto it = out.find(slots);
                if (it == out.end()) {
                    out.emplace(std::move(slots), coeff);
                } else {
                    it->second += coeff;
                    if (it->second.isZero()) out.erase(it);
                }
            }
            return;
        }
        if (i <= p) {
            letters.push_back(u.slots[i]);
            self(self, i + 1, j, signExp);
            letters.pop_back();
        }
        if (j <= s) {
            // v_j crosses the remaining letters of u.
            letters.push_back(v.slots[j]);
            self(self, i, j + 1, signExp + suspendedDegree(a, v.slots[j]) * uSuffix[i]);
            letters.pop_back();
        }
    };
    rec(rec, 1, 1, 0);
    return out;
}

TruncatedChargedAlgebra hochschildDgca(const TruncatedChargedAlgebra& a, int maxCharge,
                                       int maxDegree) {
    if (maxCharge > 2) throw UnsupportedCharge("hochschildDgca: charges above 2 are unsupported");
    if (maxCharge < 0 || maxDegree < 0) throw std::invalid_argument("hochschildDgca: bad window");
    if (a.maxCharge() < maxCharge || a.maxDegree() < maxDegree)
        throw std::invalid_argument("hochschildDgca: input window too small");

    std::vector<ChargedComplex> complexes;
    complexes.reserve(maxCharge + 1);
    for (int c = 0; c <= maxCharge; ++c) complexes.emplace_back(a, c, maxDegree, 0);

    TruncatedChargedAlgebra::Data data;
    data.maxCharge = maxCharge;
    data.maxDegree = maxDegree;

    std::vector<BarWord> wordOf;
    std::vector<std::vector<std::map<std::vector<int>, int>>> idIndex(
        maxCharge + 1, std::vector<std::map<std::vector<int>, int>>(maxDegree + 1));
    for (int c = 0; c <= maxCharge; ++c) {
        for (int n = 0; n <= maxDegree; ++n) {
            for (const BarWord& w : complexes[c].words(n)) {
                const int id = static_cast<int>(data.basis.size());
                data.basis.push_back({c, n, barWordLabel(a, w)});
                wordOf.push_back(w);
                idIndex[c][n].emplace(w.slots, id);
            }
        }
    }

    auto lookup = [&](int charge, int degree, const std::vector<int>& slots) {
        auto it = idIndex[charge][degree].find(slots);
        if (it == idIndex[charge][degree].end())
            throw std::logic_error("hochschildDgca: word not found in the window");
        return it->second;
    };

    const int n0 = static_cast<int>(data.basis.size());
    data.differential.assign(n0, {});
    for (int id = 0; id < n0; ++id) {
        const BarWord& w = wordOf[id];
        for (const auto& [slots, coeff] : complexes[w.charge].differentialOfWord(w)) {
            data.differential[id][lookup(w.charge, w.degree - 1, slots)] = coeff;
        }
    }

    for (int i = 1; i < n0; ++i) {
        for (int j = 1; j < n0; ++j) {
            const BarWord& u = wordOf[i];
            const BarWord& v = wordOf[j];
            const int charge = u.charge + v.charge;
            const int degree = u.degree + v.degree;
            if (charge > maxCharge || degree > maxDegree) continue;
            CoordVec coords;
            for (const auto& [slots, coeff] : shuffleProduct(a, u, v))
                coords[lookup(charge, degree, slots)] = coeff;
            if (!coords.empty()) data.products.emplace(std::make_pair(i, j), std::move(coords));
        }
    }
    return TruncatedChargedAlgebra(std::move(data));
}

HHReport iteratedHHDirect(const TruncatedChargedAlgebra& a, int r, int charge, int maxDegree) {
    if (r < 0) throw std::invalid_argument("iteratedHHDirect: negative iteration count");
    if (charge > 2) throw UnsupportedCharge("iteratedHHDirect: charges above 2 are unsupported");
    if (charge < 0 || charge > a.maxCharge())
        throw std::invalid_argument("iteratedHHDirect: charge outside the algebra window");

    if (r == 0) {
        if (a.maxDegree() < maxDegree)
            throw std::invalid_argument("iteratedHHDirect: algebra window too small");
        HHReport report;
        report.charge = charge;
        report.maxDegree = maxDegree;
        report.dims.assign(maxDegree + 1, 0);
        for (int n = 0; n <= maxDegree; ++n)
            report.dims[n] = static_cast<long>(a.ids(charge, n).size());
        return report;
    }

    if (a.maxDegree() < maxDegree + 1)
        throw std::invalid_argument("iteratedHHDirect: algebra window too small");

    TruncatedChargedAlgebra current = a;
    for (int step = 1; step < r; ++step)
        current = hochschildDgca(current, charge, maxDegree + 1);
    return homology(buildComplex(current, charge, maxDegree));
}

Series ShiftPolynomial::applyTo(const Series& v) const {
    Series out(v.truncation());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (int d = 0; d + static_cast<int>(i) <= v.truncation(); ++d) {
            const int target = d + static_cast<int>(i);
            out.setCoeff(target, out.coeff(target) + Rational(coeffs[i]) * v.coeff(d));
        }
    }
    return out;
}

ShiftPolynomial ShiftPolynomial::onePlusShiftPow(int k) {
    std::vector<long> c{1};
    for (int step = 0; step < k; ++step) {
        std::vector<long> next(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] += c[i];
        }
        c = std::move(next);
    }
    return ShiftPolynomial{std::move(c)};
}

std::pair<Series, Series> hhFormulaLowCharge(const Series& a1, const Series& a2, int r,
                                             int maxDegree) {
    if (r < 0) throw std::invalid_argument("hhFormulaLowCharge: negative iteration count");
    const Series s1 = a1.retruncated(maxDegree);
    const Series s2 = a2.retruncated(maxDegree);
    const ShiftPolynomial full = ShiftPolynomial::onePlusShiftPow(r);
    Series charge1 = full.applyTo(s1);
    Series charge2 = full.applyTo(s2);
    for (int k = 1; k <= r; ++k) {
        const Series inner = ShiftPolynomial::onePlusShiftPow(r - k).applyTo(s1);
        const Series term = ShiftPolynomial{{0, 1}}.applyTo(
            ShiftPolynomial::onePlusShiftPow(k).applyTo(alt2Series(inner)));
        charge2 = add(charge2, term);
    }
    return {std::move(charge1), std::move(charge2)};
}

namespace {

// Coefficients of v with respect to the rows of an RREF matrix, or nullopt if
// v lies outside the row space.
std::optional<CoordVec> expressInRref(const RrefResult& r, const CoordVec& v) {
    CoordVec coeffs;
    CoordVec rem = v;
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        auto it = rem.find(r.pivots[i]);
        if (it == rem.end()) continue;
        coeffs[static_cast<int>(i)] = it->second;
        addScaled(rem, r.matrix.row(static_cast<int>(i)), -it->second);
    }
    if (!rem.empty()) return std::nullopt;
    return coeffs;
}

}  // namespace

FormalityCheckResult verifyFormalityProjection(const TruncatedChargedAlgebra& a, int maxDegree) {
    if (!a.trivialDifferential())
        throw std::invalid_argument("verifyFormalityProjection: differential must be trivial");
    if (!a.chargeZeroIsUnitOnly())
        throw std::invalid_argument("verifyFormalityProjection: charge-0 part must be scalars");
    if (a.maxCharge() < 2 || a.maxDegree() < maxDegree + 1)
        throw std::invalid_argument("verifyFormalityProjection: window too small");

    FormalityCheckResult res;

    // Charges 0 and 1: the projection is the identity, so the check is that
    // the differentials vanish identically.
    for (int c = 0; c <= 1; ++c) {
        const ChargedComplex cx(a, c, maxDegree, 1);
        for (int n = 1; n <= cx.builtDegree(); ++n) {
            if (cx.differentialMatrix(n).nonzeros() != 0) {
                res.failCharge = c;
                res.failDegree = n;
                res.detail = "nonzero differential in charge " + std::to_string(c);
                return res;
            }
        }
    }

    const ChargedComplex cx(a, 2, maxDegree, 1);
    const HHReport hh = homology(cx);
    const int top = cx.builtDegree();

    // Classify words per degree and set up the target pieces.
    struct DegreeData {
        std::vector<int> p1NonUnit;  // word indices of (a |b|) words
        std::vector<int> p2;         // word indices of (1 |a|b|) words
        std::map<int, int> p1Pos;    // word index -> ordinal among p1NonUnit
        std::map<int, int> p2Pos;
        std::vector<int> a2Top;      // algebra ids of charge-2 degree-n elements
        std::vector<int> a2Shift;    // algebra ids of charge-2 degree-(n-1) elements
        std::map<int, int> a2TopPos, a2ShiftPos;
        RrefResult lBasis;  // rows: image of the suspended symmetriser on p1 words
        RrefResult kBasis;  // rows: kernel of d restricted to the p2 span
        int rows = 0;
    };

    auto suspSign = [&](int ida, int idb) {
        const int e = (a.element(ida).degree + 1) * (a.element(idb).degree + 1);
        return Rational((e % 2 == 0) ? 1 : -1);
    };

    std::vector<DegreeData> deg(top + 1);
    for (int n = 0; n <= top; ++n) {
        DegreeData& dd = deg[n];
        const std::vector<BarWord>& ws = cx.words(n);
        for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
            const BarWord& w = ws[i];
            if (w.barLength() == 1 && w.slots[0] != TruncatedChargedAlgebra::kUnit) {
                dd.p1Pos.emplace(i, static_cast<int>(dd.p1NonUnit.size()));
                dd.p1NonUnit.push_back(i);
            } else if (w.barLength() == 2) {
                dd.p2Pos.emplace(i, static_cast<int>(dd.p2.size()));
                dd.p2.push_back(i);
            }
        }
        for (int id : a.ids(2, n)) {
            dd.a2TopPos.emplace(id, static_cast<int>(dd.a2Top.size()));
            dd.a2Top.push_back(id);
        }
        if (n >= 1) {
            for (int id : a.ids(2, n - 1)) {
                dd.a2ShiftPos.emplace(id, static_cast<int>(dd.a2Shift.size()));
                dd.a2Shift.push_back(id);
            }
        }

        // L: image of w -> w + (sign) flip(w) over the (a |b|) words.
        std::vector<CoordVec> lRows;
        for (int i : dd.p1NonUnit) {
            const BarWord& w = cx.words(n)[i];
            CoordVec v;
            v[dd.p1Pos.at(i)] = Rational(1);
            const int flipped = cx.wordIndex(n, {w.slots[1], w.slots[0]});
            if (flipped < 0) return {false, 2, n, "missing flipped word"};
            const Rational s = suspSign(w.slots[0], w.slots[1]);
            auto it = v.find(dd.p1Pos.at(flipped));
            if (it == v.end()) {
                v[dd.p1Pos.at(flipped)] = s;
            } else {
                it->second += s;
                if (it->second.isZero()) v.erase(it);
            }
            if (!v.empty()) lRows.push_back(std::move(v));
        }
        dd.lBasis = rref(matrixFromRows(static_cast<int>(dd.p1NonUnit.size()), lRows));

        // K: kernel of the differential restricted to the p=2 span.
        if (n >= 1 && !dd.p2.empty()) {
            Matrix sub(cx.dim(n - 1), static_cast<int>(dd.p2.size()));
            for (size_t c2 = 0; c2 < dd.p2.size(); ++c2) {
                for (int r2 = 0; r2 < cx.dim(n - 1); ++r2) {
                    const Rational v = cx.differentialMatrix(n).at(r2, dd.p2[c2]);
                    if (!v.isZero()) sub.set(r2, static_cast<int>(c2), v);
                }
            }
            dd.kBasis = rref(matrixFromRows(static_cast<int>(dd.p2.size()), nullspaceBasis(sub)));
        } else {
            dd.kBasis = rref(Matrix(0, static_cast<int>(dd.p2.size())));
        }

        dd.rows = static_cast<int>(dd.a2Top.size() + dd.a2Shift.size() + dd.lBasis.pivots.size() +
                                   dd.kBasis.pivots.size());
    }

    // The chain map onto the homology presentation.
    std::vector<Matrix> chi(top + 1);
    for (int n = 0; n <= top; ++n) {
        DegreeData& dd = deg[n];
        const int offShift = static_cast<int>(dd.a2Top.size());
        const int offL = offShift + static_cast<int>(dd.a2Shift.size());
        const int offK = offL + static_cast<int>(dd.lBasis.pivots.size());
        Matrix m(dd.rows, cx.dim(n));
        for (int i = 0; i < cx.dim(n); ++i) {
            const BarWord& w = cx.words(n)[i];
            if (w.barLength() == 0) {
                m.set(dd.a2TopPos.at(w.slots[0]), i, Rational(1));
            } else if (w.barLength() == 1 && w.slots[0] == TruncatedChargedAlgebra::kUnit) {
                m.set(offShift + dd.a2ShiftPos.at(w.slots[1]), i, Rational(1));
            } else if (w.barLength() == 1) {
                // Averaged merge into the shifted charge-2 part…
                const Rational half((a.element(w.slots[0]).degree % 2 == 0) ? 1 : -1, 2);
                for (const auto& [z, cz] : a.product(w.slots[0], w.slots[1]))
                    m.add(offShift + dd.a2ShiftPos.at(z), i, half * cz);
                // …plus the symmetrised class in the L coordinates.
                CoordVec v;
                v[dd.p1Pos.at(i)] = Rational(1);
                const int flipped = cx.wordIndex(n, {w.slots[1], w.slots[0]});
                const Rational s = suspSign(w.slots[0], w.slots[1]);
                auto it = v.find(dd.p1Pos.at(flipped));
                if (it == v.end()) {
                    v[dd.p1Pos.at(flipped)] = s;
                } else {
                    it->second += s;
                    if (it->second.isZero()) v.erase(it);
                }
                auto coeffs = expressInRref(dd.lBasis, v);
                if (!coeffs) return {false, 2, n, "symmetrised word outside the L space"};
                for (const auto& [row, cc] : *coeffs) m.add(offL + row, i, cc);
            } else {
                CoordVec v;
                v[dd.p2Pos.at(i)] = Rational(1);
                const int flipped = cx.wordIndex(n, {w.slots[0], w.slots[2], w.slots[1]});
                const Rational s = suspSign(w.slots[1], w.slots[2]);
                auto it = v.find(dd.p2Pos.at(flipped));
                if (it == v.end()) {
                    v[dd.p2Pos.at(flipped)] = s;
                } else {
                    it->second += s;
                    if (it->second.isZero()) v.erase(it);
                }
                auto coeffs = expressInRref(dd.kBasis, v);
                if (!coeffs) return {false, 2, n, "symmetrised word outside the kernel slot"};
                for (const auto& [row, cc] : *coeffs) m.add(offK + row, i, cc);
            }
        }
        chi[n] = std::move(m);
    }

    // Chain map: chi_(n-1) d_n = 0, since the target differential vanishes.
    for (int n = 1; n <= top; ++n) {
        if (multiply(chi[n - 1], cx.differentialMatrix(n)).nonzeros() != 0)
            return {false, 2, n, "projection does not commute with the differential"};
    }

    // Isomorphism on homology through maxDegree: target dimension equals the
    // homology dimension, and chi is surjective on cycles.
    for (int n = 0; n <= maxDegree; ++n) {
        if (deg[n].rows != hh.dims[n])
            return {false, 2, n, "target dimension differs from homology"};
        std::vector<CoordVec> cycles;
        if (n == 0) {
            for (int i = 0; i < cx.dim(0); ++i) cycles.push_back(CoordVec{{i, Rational(1)}});
        } else {
            cycles = nullspaceBasis(cx.differentialMatrix(n));
        }
        std::vector<CoordVec> images;
        for (const CoordVec& c : cycles) images.push_back(matVec(chi[n], c));
        if (rank(matrixFromRows(deg[n].rows, images)) != hh.dims[n])
            return {false, 2, n, "projection not surjective on homology"};
    }

    res.ok = true;
    return res;
}

}  // namespace chh
