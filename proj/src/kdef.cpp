#include "chh/kdef.hpp"

#include <stdexcept>

namespace chh {

namespace {

void orderedPartitionsRec(int n, int parts, std::vector<int>& current,
                          std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        current.push_back(n);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int head = 0; head <= n; ++head) {
        current.push_back(head);
        orderedPartitionsRec(n - head, parts - 1, current, out);
        current.pop_back();
    }
}

// Ordered partitions of n into `parts` non-negative integers.
std::vector<std::vector<int>> orderedPartitions(int n, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    orderedPartitionsRec(n, parts, current, out);
    return out;
}

Element xiImage(const Generator& g) {
    std::vector<int> members(g.idx.begin(), g.idx.end() - 1);
    const int n = g.idx.back();
    const int l = static_cast<int>(members.size());

    Element out;
    for (const std::vector<int>& lambda : orderedPartitions(n, l + 1)) {
        Element term = Element::fromMonomial(
            Monomial{{{Generator{"x", {lambda[0]}, 2 * lambda[0], 1}, 1}}, 2 * lambda[0], 1});
        for (int k = 0; k < l; ++k) {
            const int j = 1 + lambda[k + 1];
            term = multiply(term, Element::fromMonomial(Monomial{
                                      {{Generator{"a", {members[k], j}, 2 * j - 1, 0}, 1}},
                                      2 * j - 1,
                                      0}));
        }
        out = add(out, term);
    }
    return out;
}

}  // namespace

KdefAlgebra makeKdefAlgebra(int s) {
    if (s < 0) throw std::invalid_argument("makeKdefAlgebra: negative rank");
    FreeGCA source("kdef-free-" + std::to_string(s));
    source.addFamily(xiFamily(s));
    FreeGCA target("loops-bu-" + std::to_string(s));
    target.addFamily(xFamily());
    target.addFamily(aFamily(s));

    auto presentation = std::make_shared<PresentedAlgebra>(
        std::move(source), std::move(target), [](const Generator& g) { return xiImage(g); });
    return KdefAlgebra{s, std::move(presentation)};
}

Series kdefCharge1Series(int s, int truncation) {
    return mul(onePlusTPow(s, truncation), psB1(truncation));
}

Series kdefCharge2Series(int s, int truncation) {
    const Series numerator =
        mul(onePlusTPow(s, truncation), pow(Series::polynomial({1, 0, 0, 1}, truncation), s));
    return mul(numerator, psB2(truncation));
}

TruncatedChargedAlgebra truncatePresented(const PresentedAlgebra& p, int maxCharge, int maxDegree) {
    TruncatedChargedAlgebra::Data data;
    data.maxCharge = maxCharge;
    data.maxDegree = maxDegree;

    // Basis per bidegree, charge-major; keep the originating monomials and a
    // per-bidegree monomial -> id index for expressing reduced products.
    std::vector<Monomial> origins;
    std::map<std::pair<int, int>, std::map<Monomial, int>> index;
    for (int c = 0; c <= maxCharge; ++c) {
        for (int d = 0; d <= maxDegree; ++d) {
            for (const Monomial& m : p.quotientMonomials(d, c)) {
                const int id = static_cast<int>(data.basis.size());
                data.basis.push_back({c, d, m.str()});
                origins.push_back(m);
                index[{d, c}].emplace(m, id);
            }
        }
    }
    if (data.basis.empty() || !origins[0].isUnit())
        throw std::logic_error("truncatePresented: quotient lacks the unit in bidegree (0,0)");

    for (int i = 1; i < static_cast<int>(data.basis.size()); ++i) {
        for (int j = 1; j < static_cast<int>(data.basis.size()); ++j) {
            const int charge = data.basis[i].charge + data.basis[j].charge;
            const int degree = data.basis[i].degree + data.basis[j].degree;
            if (charge > maxCharge || degree > maxDegree) continue;
            const Element reduced = p.reduce(multiply(origins[i], origins[j]));
            CoordVec coords;
            for (const auto& [m, coeff] : reduced.terms) {
                auto it = index[{degree, charge}].find(m);
                if (it == index[{degree, charge}].end())
                    throw std::logic_error("truncatePresented: reduced product off the quotient basis");
                coords[it->second] = coeff;
            }
            if (!coords.empty()) data.products.emplace(std::make_pair(i, j), std::move(coords));
        }
    }
    return TruncatedChargedAlgebra(std::move(data));
}

TruncatedChargedAlgebra truncateKdef(const KdefAlgebra& a, int maxCharge, int maxDegree) {
    if (maxCharge < 1 || maxCharge > 2)
        throw UnsupportedCharge("truncateKdef: supported charge truncations are 1 and 2");
    if (maxDegree < 0) throw std::invalid_argument("truncateKdef: negative degree");
    return truncatePresented(*a.presentation, maxCharge, maxDegree);
}

CharacterVarietyDims characterDimsF2(int maxDegree) {
    if (maxDegree < 0) throw std::invalid_argument("characterDimsF2: negative degree");
    const Series sq = onePlusTPow(2, maxDegree);
    return {sq, sq};
}

}  // namespace chh
