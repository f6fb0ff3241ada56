#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chh/matrix.hpp"

namespace chh {

struct ChargedBasisElement {
    int charge = 0;
    int degree = 0;
    std::string label;

    bool odd() const { return degree % 2 != 0; }
};

// A charged graded algebra materialised on a finite (charge, degree) window:
// explicit basis, multiplication table and (possibly zero) differential.
// Products whose total charge exceeds the window are zero by construction;
// products whose total degree exceeds the window are untracked and must not
// be queried. Read-only after construction.
class TruncatedChargedAlgebra {
public:
    static constexpr int kUnit = 0;

    struct Data {
        int maxCharge = 0;
        int maxDegree = 0;
        std::vector<ChargedBasisElement> basis;             // basis[0] is the unit
        std::map<std::pair<int, int>, CoordVec> products;   // non-unit ordered pairs
        std::vector<CoordVec> differential;                 // per id; empty vector = trivial
    };

    explicit TruncatedChargedAlgebra(Data d);

    int maxCharge() const { return d_.maxCharge; }
    int maxDegree() const { return d_.maxDegree; }
    int size() const { return static_cast<int>(d_.basis.size()); }

    const ChargedBasisElement& element(int id) const { return d_.basis.at(id); }
    const std::vector<int>& ids(int charge, int degree) const;

    // Coordinates of basis_i * basis_j. Total charge above the window gives
    // zero; total degree above the window is a caller bug.
    CoordVec product(int i, int j) const;

    CoordVec differential(int id) const;
    bool trivialDifferential() const { return trivialDiff_; }

    // True when the only charge-0 basis element is the unit.
    bool chargeZeroIsUnitOnly() const;

private:
    Data d_;
    std::vector<std::vector<std::vector<int>>> idsByChargeDegree_;
    bool trivialDiff_ = true;

    void validate() const;
};

}  // namespace chh
