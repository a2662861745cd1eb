#pragma once

#include "topfan/linalg.hpp"

#include <optional>
#include <vector>

namespace topfan {

// some y with A y = rhs and y_j >= 0 where nonneg[j]; exact (Gauss + Fourier-Motzkin)
std::optional<QVec> find_feasible_point(const QMatrix& a, const QVec& rhs, const std::vector<bool>& nonneg);

// x in the cone spanned by gens (nonnegative combination)
bool in_cone(const std::vector<QVec>& gens, const QVec& x);

}  // namespace topfan
