#pragma once

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/forms.hpp"
#include "crystalpoly/sequences.hpp"

#include <set>
#include <vector>

namespace crystalpoly {

// Weight whose coefficients follow the sign pattern required by the finite
// type A highest-weight theorem: lambda_1,...,lambda_{i0} > 0 and
// lambda_{i0+1},...,lambda_n <= 0 for some pivot i0 in [0, n].
class LambdaA {
  public:
    explicit LambdaA(Weight weight);

    const Weight& weight() const { return weight_; }
    int rank() const { return static_cast<int>(weight_.coeffs.size()); }
    int pivot() const { return pivot_; }

    // lambda_i, 1-based; throws std::out_of_range.
    Int entry(int i) const;

  private:
    Weight weight_;
    int pivot_ = 0;
};

// Weakly decreasing mu = (mu_1,...,mu_i) with n-i+1 >= mu_1 and mu_i >= 0.
class AdmissiblePartition {
  public:
    AdmissiblePartition(std::vector<Int> mu, int rank);

    const std::vector<Int>& parts() const { return mu_; }
    int size() const { return static_cast<int>(mu_.size()); }

  private:
    std::vector<Int> mu_;
};

// Every i-admissible partition for the given rank, in lexicographic order.
std::vector<AdmissiblePartition> all_admissible(int rank, int i);

// Right fold r_1 + (r_2 + (... + (r_m)_+ ...)_+)_+ with (x)_+ = max(0, x).
// Equals the maximum of the prefix sums r_1, r_1+r_2, ..., r_1+...+r_m.
// Throws std::invalid_argument on an empty list.
Int nested_plus(const std::vector<Int>& rs);

// C_{-j;i} >= 0: the clamp (nested_plus(-lambda_{i-j+1},...,-lambda_{n-j+1}))_+
// when 1 <= j <= i <= n, and 0 otherwise.
Int c_table(const LambdaA& lambda, Index j, int i);

// Candidate highest-weight vector: x at di_neg(n, j, i) set to -C_{-j;i} for
// all j <= window_depth, positive side zero. Requires window_depth >= n
// (entries vanish for j > n, so the window then provably holds them all).
FinSuppVector hwv_a(const LambdaA& lambda, Index window_depth);

// Seed forms x_{-j;i} + C_{-j;i} for every negative position with absolute
// index <= window, ordered by position -1, -2, ...
std::vector<LinearForm> xi_prime_seeds_a(const LambdaA& lambda, Index window);

enum class FormMode { Composite, Explicit };

// The form phi^(mu)_{-j;i}. Composite mode applies the rewriting word
//   group k = 1..i at row -j+k-theta(j-k), columns i-k+1 .. i-k+mu_k ascending
// to the coordinate x_{-j;i}. Explicit mode builds the closed form
//   sum_k (x_{-j+k-theta(j-k); i-k+1+mu_k} - x_{-j+k+1-theta(j-k-1); i-k+mu_k})
// plus the constant lambda_{i-j+1} + ... + lambda_{i-j+mu_j} (empty when
// j > i), dropping coordinates whose column leaves [1, n]. The two modes
// agree; theta(t) = 1 for t >= 0 and 0 otherwise.
LinearForm phi_mu(const LambdaA& lambda, Index j, int i,
                  const AdmissiblePartition& mu, FormMode mode);

// D_{-j;i} = sigma_{-j;i}(hwv) + C_{-j;i}. Nonpositive exactly when C = 0;
// otherwise equal to C (the dichotomy the tests sweep).
Int d_value_a(const LambdaA& lambda, Index j, int i);

// Truncated second inequality family: closure of xi_prime_seeds_a under
// rewriting at subscripts of either sign (composites starting at x_{-j;i}
// with i > j cross the marker and continue at positive subscripts).
std::set<LinearForm> xi_prime_family_a(const LambdaA& lambda, Index window,
                                       Index depth);

}  // namespace crystalpoly
