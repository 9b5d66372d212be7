#include "crystalpoly/affine_a11.hpp"

#include "crystalpoly/checked.hpp"
#include "crystalpoly/crystal.hpp"

#include <stdexcept>

namespace crystalpoly {

namespace {

IotaSequence iota_affine() { return IotaSequence::affine_a1(IotaSide::Both); }

Index theta(Index t) { return t >= 0 ? 1 : 0; }

}  // namespace

LambdaAffine::LambdaAffine(Weight weight) : weight_(std::move(weight)) {
    if (weight_.coeffs.size() != 2)
        throw std::invalid_argument("LambdaAffine: weight must have two entries");
    if (!(l1() > 0) || !(l2() <= 0) || !(checked_add(l1(), l2()) > 0))
        throw std::invalid_argument(
            "LambdaAffine: need lambda_1 > 0 >= lambda_2 and positive level");
}

Index LambdaAffine::c_cutoff() const {
    // C_{-k} = (l1 - k(l1+l2))_+ vanishes iff k(l1+l2) >= l1; the level is
    // positive, so the threshold is ceil(l1 / (l1+l2)).
    const Int level = checked_add(l1(), l2());
    return (l1() + level - 1) / level;
}

Int c_k(const LambdaAffine& lambda, Index k) {
    if (k < 1) throw std::invalid_argument("c_k: k must be >= 1");
    const Int value = checked_sub(checked_mul(-(k - 1), lambda.l1()),
                                  checked_mul(k, lambda.l2()));
    return value > 0 ? value : 0;
}

FinSuppVector hwv_affine(const LambdaAffine& lambda, Index window_depth) {
    if (window_depth < 1 || c_k(lambda, checked_add(window_depth, 1)) != 0)
        throw std::invalid_argument("hwv_affine: window_depth below the C cutoff");
    FinSuppVector x(lambda.weight());
    for (Index k = 1; k <= window_depth; ++k)
        x.set(-k, checked_sub(0, c_k(lambda, k)));
    return x;
}

LinearForm phi_l(const LambdaAffine& lambda, Index k, Index l, FormMode mode) {
    if (k < 1 || l < 0) throw std::invalid_argument("phi_l: need k >= 1, l >= 0");

    if (mode == FormMode::Composite) {
        const IotaSequence iota = iota_affine();
        LinearForm form = LinearForm::coordinate(-k);
        Index subscript = -k;
        for (Index step = 0; step < l; ++step) {
            auto next = s_bar(form, iota, lambda.weight(), subscript);
            if (!next) throw std::logic_error("phi_l: rewrite has no successor");
            form = std::move(*next);
            ++subscript;
            if (subscript == 0) subscript = 1;
        }
        return form;
    }

    LinearForm form;
    const Index a = l - k + theta(l - k);
    const Index b = l - k + 1 + theta(l - k + 1);
    form.add_coeff(a, checked_add(l, 1));
    if (l != 0) form.add_coeff(b, checked_sub(0, l));
    if (l >= k) {
        form.set_constant(checked_add(checked_mul(k - 1, lambda.l1()),
                                      checked_mul(k, lambda.l2())));
    } else if (l == k - 1) {
        form.set_constant(checked_mul(k - 1, lambda.l1()));
    }
    return form;
}

Int d_k(const LambdaAffine& lambda, Index k) {
    if (k < 1) throw std::invalid_argument("d_k: k must be >= 1");
    const FinSuppVector hw = hwv_affine(lambda, lambda.c_cutoff());
    return checked_add(sigma(hw, iota_affine(), -k), c_k(lambda, k));
}

std::vector<LinearForm> xi_restricted_seeds(Index window) {
    if (window < 1) throw std::invalid_argument("xi_restricted_seeds: window < 1");
    std::vector<LinearForm> seeds;
    for (Index j = 2; j <= window; ++j) seeds.push_back(LinearForm::coordinate(j));
    for (Index j = 2; j <= window; ++j)
        seeds.push_back(LinearForm::coordinate(-j, -1));
    return seeds;
}

std::set<LinearForm> xi_restricted_family(const LambdaAffine& lambda,
                                          Index window, Index depth) {
    return xi_family(iota_affine(), lambda.weight(), window,
                     static_cast<int>(depth), 2);
}

std::vector<LinearForm> xi_prime_seeds_affine(const LambdaAffine& lambda,
                                              Index window) {
    std::vector<LinearForm> seeds;
    for (Index k = 1; k <= window; ++k) {
        LinearForm seed = LinearForm::coordinate(-k);
        seed.add_constant(c_k(lambda, k));
        seeds.push_back(std::move(seed));
    }
    return seeds;
}

std::set<LinearForm> xi_prime_family_affine(const LambdaAffine& lambda,
                                            Index window, Index depth) {
    const IotaSequence iota = iota_affine();
    const Index subscript_window =
        checked_add(window, checked_mul(depth, iota.period()));
    return s_bar_closure(xi_prime_seeds_affine(lambda, window), iota,
                         lambda.weight(), subscript_window,
                         static_cast<int>(depth));
}

}  // namespace crystalpoly
