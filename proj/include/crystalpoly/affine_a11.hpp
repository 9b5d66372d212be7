#pragma once

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/forms.hpp"
#include "crystalpoly/sequences.hpp"
#include "crystalpoly/type_a.hpp"

#include <set>
#include <vector>

namespace crystalpoly {

// Positive-level weight for the rank-2 affine type: lambda_1 > 0,
// lambda_2 <= 0, lambda_1 + lambda_2 > 0.
class LambdaAffine {
  public:
    explicit LambdaAffine(Weight weight);

    const Weight& weight() const { return weight_; }
    Int l1() const { return weight_.coeffs[0]; }
    Int l2() const { return weight_.coeffs[1]; }

    // Smallest k >= 1 with C_{-k} = 0; C vanishes from there on.
    Index c_cutoff() const;

  private:
    Weight weight_;
};

// C_{-k} = (-(k-1) lambda_1 - k lambda_2)_+ for k >= 1.
Int c_k(const LambdaAffine& lambda, Index k);

// Candidate highest-weight vector: x_{-k} = -C_{-k}, positive side zero.
// window_depth must reach the exact cutoff where C vanishes (checked).
FinSuppVector hwv_affine(const LambdaAffine& lambda, Index window_depth);

// phi^(l)_{-k}. Composite mode rewrites x_{-k} at subscripts ascending from
// -k (skipping 0) for l steps. Explicit mode is the closed form
//   (l+1) x_{l-k+theta(l-k)} - l x_{l-k+1+theta(l-k+1)}
// plus the constant (k-1)l1 + k*l2 for l >= k, (k-1)l1 for l = k-1, 0 for
// l <= k-2. Modes agree.
LinearForm phi_l(const LambdaAffine& lambda, Index k, Index l, FormMode mode);

// D_{-k} = sigma_{-k}(hwv) + C_{-k}.
Int d_k(const LambdaAffine& lambda, Index k);

// Seeds {x_j, -x_{-j} : 2 <= j <= window} for the index-restricted
// coordinate family the affine theorem uses (rewrites likewise skip |k| = 1).
std::vector<LinearForm> xi_restricted_seeds(Index window);

// The restricted coordinate family itself: xi_family with min_abs = 2.
std::set<LinearForm> xi_restricted_family(const LambdaAffine& lambda,
                                          Index window, Index depth);

// Truncated second family: closure of the seeds x_{-k} + C_{-k} under
// rewriting at subscripts of either sign.
std::set<LinearForm> xi_prime_family_affine(const LambdaAffine& lambda,
                                            Index window, Index depth);

std::vector<LinearForm> xi_prime_seeds_affine(const LambdaAffine& lambda,
                                              Index window);

}  // namespace crystalpoly
