#pragma once

#include "topfan/rational.hpp"

#include <optional>
#include <vector>

namespace topfan {

// row-major
using QMatrix = std::vector<QVec>;

struct RowEchelon {
  QMatrix rows;             // nonzero rows only, reduced
  std::vector<int> pivots;  // pivot column of each row
};

RowEchelon rref(QMatrix a);
int rank(const QMatrix& a);
Rational determinant(QMatrix a);
std::optional<QMatrix> inverse(const QMatrix& a);
QMatrix transpose(const QMatrix& a);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
QVec apply(const QMatrix& a, const QVec& x);
QMatrix identity(int n);

// rows stacked as vectors: det[rows..., x] == normal . x
QVec cofactor_normal(const std::vector<QVec>& rows);

Integer determinant(const std::vector<ZVec>& rows);
// gcd of maximal minors of a k x n integer matrix (k <= n); 0 if rank deficient
Integer minor_gcd(const std::vector<ZVec>& rows);

}  // namespace topfan
