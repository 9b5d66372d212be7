#pragma once

#include <optional>
#include <vector>

#include "crystalpoly/sequences.hpp"

namespace crystalpoly {

// sigma_k(x) = x_k + sum_{j>k} <h_{i_k}, alpha_{i_j}> x_j, minus <h_{i_k}, lambda>
// when k <= -1 (the sum crosses the weight marker). Throws on k = 0 or a
// missing side.
Int sigma(const FinSuppVector& x, const IotaSequence& iota, Index k);

// Where sup_k { sigma_k : i_k = color } is reached. Outside the support
// window sigma is 0 on the right and per-color constant on the left, so the
// window attainers plus the two flags describe the full attainer set.
struct AttainerReport {
    Int sup_value = 0;
    std::vector<Index> window_attainers; // ascending, never empty
    bool unbounded_left = false;         // the far-left constant equals sup
    bool unbounded_right = false;        // sup = 0, met at every far-right index
};

AttainerReport attainers(const FinSuppVector& x, const IotaSequence& iota, int color);

// Raising/lowering operators. f adds 1 at the least attainer, e subtracts 1
// at the greatest; either is undefined (nullopt) when that extreme attainer
// runs off to infinity.
std::optional<FinSuppVector> f_tilde(const FinSuppVector& x, const IotaSequence& iota, int color);
std::optional<FinSuppVector> e_tilde(const FinSuppVector& x, const IotaSequence& iota, int color);

Int epsilon(const FinSuppVector& x, const IotaSequence& iota, int color);
Int phi(const FinSuppVector& x, const IotaSequence& iota, int color);

// m_i = sum of x_j over indices j colored i, one entry per color.
std::vector<Int> root_multiplicities(const FinSuppVector& x, const IotaSequence& iota);

// wt(x) = lambda - sum_i m_i alpha_i, in fundamental-weight coordinates.
// For the affine family this is the weight modulo the null root, which is
// all the crystal structure ever reads.
Weight weight_of(const FinSuppVector& x, const IotaSequence& iota);

// L1 size of the root multiplicities; the exploration depth measure.
Int wt_depth(const FinSuppVector& x, const IotaSequence& iota);

// True when every raising operator is undefined.
bool is_highest_weight(const FinSuppVector& x, const IotaSequence& iota);

} // namespace crystalpoly
