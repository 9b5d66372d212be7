#pragma once

#include <optional>
#include <set>
#include <vector>

#include "crystalpoly/crystal.hpp"

namespace crystalpoly {

// Affine-linear functional constant + sum_k coeffs[k] x_k over nonzero
// indices. The constant is a concrete integer: form sets are built per
// weight, never symbolically in lambda.
class LinearForm {
public:
    LinearForm() = default;

    static LinearForm coordinate(Index k, Int scale = 1);

    Int constant() const { return constant_; }
    void set_constant(Int c) { constant_ = c; }
    void add_constant(Int dc) { constant_ = checked_add(constant_, dc); }

    const std::map<Index, Int>& coeffs() const { return coeffs_; }
    Int coeff(Index k) const;
    void set_coeff(Index k, Int v); // erases on v = 0
    void add_coeff(Index k, Int dv);

    // this -= scale * other, constant included.
    void subtract_scaled(const LinearForm& other, Int scale);

    bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }

    Int evaluate(const FinSuppVector& x) const;

    bool operator==(const LinearForm&) const = default;
    auto operator<=>(const LinearForm&) const = default;

private:
    Int constant_ = 0;
    std::map<Index, Int> coeffs_;
};

// beta_bar_k = sigma_k - sigma_{k^(+)}: coefficient 1 at k and k^(+),
// Cartan pairings strictly between, constant -<h_{i_k}, lambda> exactly when
// the pair straddles the marker. k = 0 gives the zero form. nullopt when
// k^(+) does not exist (one-sided boundary).
std::optional<LinearForm> beta_bar(const IotaSequence& iota, const Weight& lambda, Index k);

// The rewrite: phi_k > 0 subtracts phi_k beta_bar_k, phi_k <= 0 subtracts
// phi_k beta_bar_{k^(-)}. Idempotent. nullopt exactly when phi_k > 0 and
// k^(+) does not exist; that firing is what the one-sided boundary
// conditions promise never happens.
std::optional<LinearForm> s_bar(const LinearForm& phi, const IotaSequence& iota,
                                const Weight& lambda, Index k);

// Closure of the seeds under rewrites with subscripts |k| in [min_abs,
// window] on live sides, sign > 0 / < 0 restricting to one side, sign = 0
// allowing both. depth bounds the rewrite chain length from a seed.
// Unavailable rewrites are skipped. Throws past max_forms.
std::set<LinearForm> s_bar_closure(const std::vector<LinearForm>& seeds,
                                   const IotaSequence& iota, const Weight& lambda,
                                   Index window, int depth,
                                   int sign = 0, Index min_abs = 1,
                                   std::size_t max_forms = 1000000);

// The coordinate family: x_j seeds closed with positive subscripts, -x_{-j}
// seeds closed with negative subscripts, j and subscripts in [min_abs,
// window]. min_abs = 2 is the variant the affine theorem uses.
std::set<LinearForm> xi_family(const IotaSequence& iota, const Weight& lambda,
                               Index window, int depth, Index min_abs = 1);

bool satisfies_all(const FinSuppVector& x, const std::set<LinearForm>& forms);

// Boundary-coefficient scan for one-sided sequences: on the positive side a
// form may not go negative at an index with no earlier same-color index; on
// the negative side it may not go positive at an index with no later one.
struct PnViolation {
    LinearForm form;
    Index position = 0;
};

std::vector<PnViolation> check_pn(const IotaSequence& one_sided, Index window, int depth);

} // namespace crystalpoly
