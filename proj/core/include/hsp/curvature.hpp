#pragma once

#include <vector>

#include "hsp/homspace.hpp"
#include "hsp/laurent.hpp"

namespace hsp {

// s = 1/2 sum_i m_i b_i / x_i - 1/4 sum [ijk] x_k / (x_i x_j), the second
// sum running over the active ordered views.
LaurentPoly scalar_curvature(const HomSpaceData& data);

// f_i = s_i / m_i - s_{i+1} / m_{i+1} for i = 1..d-1, s_i = x_i ds/dx_i.
std::vector<LaurentPoly> einstein_system(const HomSpaceData& data);

// Ricci eigenvalue on each module at the diagonal metric x (all x_i > 0).
std::vector<Rat> ricci_components(const HomSpaceData& data, const std::vector<Rat>& x);

// Normalised moment map c_i = m_i w_i / sum_j m_j w_j with
// w_i = -(1 + theta) r_i + b_i / x_i, for |theta| < 1.
std::vector<Rat> moment(const HomSpaceData& data, const std::vector<Rat>& x, const Rat& theta);

}  // namespace hsp
