#include "chh/charged_algebra.hpp"

#include <stdexcept>

namespace chh {

TruncatedChargedAlgebra::TruncatedChargedAlgebra(Data d) : d_(std::move(d)) {
    validate();
    idsByChargeDegree_.assign(d_.maxCharge + 1, std::vector<std::vector<int>>(d_.maxDegree + 1));
    for (int id = 0; id < size(); ++id) {
        const ChargedBasisElement& e = d_.basis[id];
        idsByChargeDegree_[e.charge][e.degree].push_back(id);
    }
    trivialDiff_ = true;
    for (const CoordVec& v : d_.differential)
        if (!v.empty()) trivialDiff_ = false;
}

void TruncatedChargedAlgebra::validate() const {
    if (d_.basis.empty()) throw std::invalid_argument("TruncatedChargedAlgebra: empty basis");
    if (d_.basis[0].charge != 0 || d_.basis[0].degree != 0)
        throw std::invalid_argument("TruncatedChargedAlgebra: basis[0] must be the unit");
    for (const ChargedBasisElement& e : d_.basis) {
        if (e.charge < 0 || e.charge > d_.maxCharge || e.degree < 0 || e.degree > d_.maxDegree)
            throw std::invalid_argument("TruncatedChargedAlgebra: basis element outside window");
    }
    for (const auto& [key, coords] : d_.products) {
        const auto& [i, j] = key;
        const ChargedBasisElement& a = d_.basis.at(i);
        const ChargedBasisElement& b = d_.basis.at(j);
        const int charge = a.charge + b.charge;
        const int degree = a.degree + b.degree;
        if (charge > d_.maxCharge || degree > d_.maxDegree)
            throw std::invalid_argument("TruncatedChargedAlgebra: product stored outside window");
        for (const auto& [id, c] : coords) {
            (void)c;
            const ChargedBasisElement& z = d_.basis.at(id);
            if (z.charge != charge || z.degree != degree)
                throw std::invalid_argument("TruncatedChargedAlgebra: product violates bigrading");
        }
    }
    if (!d_.differential.empty() && d_.differential.size() != d_.basis.size())
        throw std::invalid_argument("TruncatedChargedAlgebra: differential size mismatch");
    for (size_t id = 0; id < d_.differential.size(); ++id) {
        for (const auto& [target, c] : d_.differential[id]) {
            (void)c;
            const ChargedBasisElement& src = d_.basis[id];
            const ChargedBasisElement& dst = d_.basis.at(target);
            if (dst.charge != src.charge || dst.degree != src.degree - 1)
                throw std::invalid_argument("TruncatedChargedAlgebra: differential violates bigrading");
        }
    }
}

const std::vector<int>& TruncatedChargedAlgebra::ids(int charge, int degree) const {
    static const std::vector<int> kEmpty;
    if (charge < 0 || charge > d_.maxCharge || degree < 0 || degree > d_.maxDegree) return kEmpty;
    return idsByChargeDegree_[charge][degree];
}

CoordVec TruncatedChargedAlgebra::product(int i, int j) const {
    const ChargedBasisElement& a = d_.basis.at(i);
    const ChargedBasisElement& b = d_.basis.at(j);
    if (i == kUnit) return CoordVec{{j, Rational(1)}};
    if (j == kUnit) return CoordVec{{i, Rational(1)}};
    if (a.charge + b.charge > d_.maxCharge) return {};
    if (a.degree + b.degree > d_.maxDegree)
        throw std::logic_error("TruncatedChargedAlgebra::product: degree outside window");
    auto it = d_.products.find({i, j});
    return it == d_.products.end() ? CoordVec{} : it->second;
}

CoordVec TruncatedChargedAlgebra::differential(int id) const {
    if (d_.differential.empty()) return {};
    return d_.differential.at(id);
}

bool TruncatedChargedAlgebra::chargeZeroIsUnitOnly() const {
    for (int d = 0; d <= d_.maxDegree; ++d) {
        const auto& v = ids(0, d);
        if (d == 0) {
            if (v.size() != 1 || v[0] != kUnit) return false;
        } else if (!v.empty()) {
            return false;
        }
    }
    return true;
}

}  // namespace chh
