#pragma once

#include <memory>

#include "chh/charged_algebra.hpp"
#include "chh/graded_algebra.hpp"
#include "chh/series.hpp"

namespace chh {

struct UnsupportedCharge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The homology algebra of the deformation K-theory space of the free group
// F_s, presented as a quotient of the free graded-commutative algebra on the
// charge-1 generators xi_{I,n} (degree |I|+2n) by the kernel of the map
//   xi_{I,n} |-> sum over ordered partitions (l0,...,ll) of n of
//                x_{l0} a_{i1,1+l1} ... a_{il,1+ll}.
struct KdefAlgebra {
    int rank = 0;  // rank s of the free group
    std::shared_ptr<const PresentedAlgebra> presentation;
};

KdefAlgebra makeKdefAlgebra(int s);

// Absolute dimension series of the charge-1 and charge-2 parts:
// (1+t)^s / (1-t^2) and (1+t)^s (1+t^3)^s / ((1-t^2)(1-t^4)).
Series kdefCharge1Series(int s, int truncation);
Series kdefCharge2Series(int s, int truncation);

// Multiplication-table truncation in charges <= maxCharge (1 or 2) and
// degrees <= maxDegree; basis labels carry the originating monomials.
TruncatedChargedAlgebra truncateKdef(const KdefAlgebra& a, int maxCharge, int maxDegree);

// Generic window truncation of any presented algebra (no charge cap); the
// kdef entry point above enforces the supported charge range.
TruncatedChargedAlgebra truncatePresented(const PresentedAlgebra& p, int maxCharge, int maxDegree);

// Dimension data of the character-variety algebra for F_2: both charges
// carry the series (1+t)^2. Absolute convention.
struct CharacterVarietyDims {
    Series charge1;
    Series charge2;
};

CharacterVarietyDims characterDimsF2(int maxDegree);

}  // namespace chh
