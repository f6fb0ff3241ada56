#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chh/rational.hpp"

namespace chh {

// Sparse coordinate vector: index -> nonzero rational entry.
using CoordVec = std::map<int, Rational>;

void addScaled(CoordVec& dst, const CoordVec& src, const Rational& factor);

// Sparse matrix over Q, stored row-major. No zero entries are stored and all
// indices are bounds-checked. Immutable use after assembly; every operation
// below returns fresh values.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v);
    void add(int r, int c, const Rational& v);
    Rational at(int r, int c) const;

    const CoordVec& row(int r) const { return data_[r]; }
    long nonzeros() const;

    void setColumn(int c, const CoordVec& entries);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<CoordVec> data_;

    void checkIndex(int r, int c) const;
};

struct RrefResult {
    Matrix matrix;
    std::vector<int> pivots;  // strictly increasing pivot columns
};

// Unique reduced row echelon form. Pivot rows are selected Markowitz-style:
// among candidate rows for the current column, the one with the fewest stored
// entries wins, which keeps fill-in low on the very sparse inputs we see.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

// Basis of ker(m) in RREF-parametrised form: one vector per free column, with
// that free coordinate set to 1 and pivot coordinates solved from the RREF.
std::vector<CoordVec> nullspaceBasis(const Matrix& m);

// Indices of coordinates whose images form a basis of ambient/span(subspace):
// the complement of the pivot columns of the subspace's RREF.
std::vector<int> quotientBasis(int ambientDim, const std::vector<CoordVec>& subspace);

Matrix matrixFromRows(int cols, const std::vector<CoordVec>& rows);
Matrix matrixFromColumns(int rows, const std::vector<CoordVec>& columns);

// m * v for a sparse column vector v.
CoordVec matVec(const Matrix& m, const CoordVec& v);

Matrix multiply(const Matrix& a, const Matrix& b);

// Row-reduces `v` against the rows of an RREF matrix, eliminating the pivot
// coordinates. The remainder is zero exactly when v lies in the row span.
CoordVec reduceAgainstRref(const RrefResult& r, CoordVec v);

}  // namespace chh
