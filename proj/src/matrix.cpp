#include "chh/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace chh {

void addScaled(CoordVec& dst, const CoordVec& src, const Rational& factor) {
    if (factor.isZero()) return;
    for (const auto& [i, v] : src) {
        auto it = dst.find(i);
        if (it == dst.end()) {
            dst.emplace(i, v * factor);
        } else {
            it->second += v * factor;
            if (it->second.isZero()) dst.erase(it);
        }
    }
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
}

void Matrix::checkIndex(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("Matrix: index out of range");
}

void Matrix::set(int r, int c, const Rational& v) {
    checkIndex(r, c);
    if (v.isZero())
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void Matrix::add(int r, int c, const Rational& v) {
    checkIndex(r, c);
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
        if (!v.isZero()) data_[r].emplace(c, v);
        return;
    }
    it->second += v;
    if (it->second.isZero()) data_[r].erase(it);
}

Rational Matrix::at(int r, int c) const {
    checkIndex(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rational(0) : it->second;
}

long Matrix::nonzeros() const {
    long n = 0;
    for (const auto& row : data_) n += static_cast<long>(row.size());
    return n;
}

void Matrix::setColumn(int c, const CoordVec& entries) {
    for (const auto& [r, v] : entries) set(r, c, v);
}

RrefResult rref(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<CoordVec> work(rows);
    for (int r = 0; r < rows; ++r) work[r] = m.row(r);

    std::vector<int> pivotRowOfCol;  // in processing order
    std::vector<bool> used(rows, false);
    std::vector<int> pivots;

    for (int c = 0; c < cols; ++c) {
        int best = -1;
        size_t bestSize = 0;
        for (int r = 0; r < rows; ++r) {
            if (used[r]) continue;
            auto it = work[r].find(c);
            if (it == work[r].end()) continue;
            if (best == -1 || work[r].size() < bestSize) {
                best = r;
                bestSize = work[r].size();
            }
        }
        if (best == -1) continue;

        used[best] = true;
        pivots.push_back(c);
        pivotRowOfCol.push_back(best);

        const Rational inv = inverse(work[best].at(c));
        if (inv != Rational(1)) {
            for (auto& [j, v] : work[best]) v *= inv;
        }
        for (int r = 0; r < rows; ++r) {
            if (r == best) continue;
            auto it = work[r].find(c);
            if (it == work[r].end()) continue;
            addScaled(work[r], work[best], -it->second);
        }
    }

    Matrix out(rows, cols);
    for (size_t k = 0; k < pivots.size(); ++k) {
        for (const auto& [j, v] : work[pivotRowOfCol[k]]) out.set(static_cast<int>(k), j, v);
    }
    return {std::move(out), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<CoordVec> nullspaceBasis(const Matrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (int p : r.pivots) isPivot[p] = true;

    std::vector<CoordVec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (isPivot[c]) continue;
        CoordVec v;
        v[c] = Rational(1);
        for (size_t i = 0; i < r.pivots.size(); ++i) {
            const Rational entry = r.matrix.at(static_cast<int>(i), c);
            if (!entry.isZero()) v[r.pivots[i]] = -entry;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> quotientBasis(int ambientDim, const std::vector<CoordVec>& subspace) {
    const RrefResult r = rref(matrixFromRows(ambientDim, subspace));
    std::vector<bool> isPivot(ambientDim, false);
    for (int p : r.pivots) isPivot[p] = true;
    std::vector<int> out;
    for (int c = 0; c < ambientDim; ++c)
        if (!isPivot[c]) out.push_back(c);
    return out;
}

Matrix matrixFromRows(int cols, const std::vector<CoordVec>& rows) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) m.set(static_cast<int>(r), c, v);
    return m;
}

Matrix matrixFromColumns(int rows, const std::vector<CoordVec>& columns) {
    Matrix m(rows, static_cast<int>(columns.size()));
    for (size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c]) m.set(r, static_cast<int>(c), v);
    return m;
}

CoordVec matVec(const Matrix& m, const CoordVec& v) {
    CoordVec out;
    for (int r = 0; r < m.rows(); ++r) {
        Rational acc(0);
        const CoordVec& row = m.row(r);
        const CoordVec& small = row.size() < v.size() ? row : v;
        const CoordVec& large = row.size() < v.size() ? v : row;
        for (const auto& [c, x] : small) {
            auto it = large.find(c);
            if (it != large.end()) acc += x * it->second;
        }
        if (!acc.isZero()) out[r] = acc;
    }
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        CoordVec acc;
        for (const auto& [k, v] : a.row(r)) addScaled(acc, b.row(k), v);
        for (const auto& [c, v] : acc) out.set(r, c, v);
    }
    return out;
}

CoordVec reduceAgainstRref(const RrefResult& r, CoordVec v) {
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        auto it = v.find(r.pivots[i]);
        if (it == v.end()) continue;
        addScaled(v, r.matrix.row(static_cast<int>(i)), -it->second);
    }
    return v;
}

}  // namespace chh
