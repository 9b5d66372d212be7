#include "crystalpoly/forms.hpp"

#include <deque>
#include <stdexcept>

namespace crystalpoly {

LinearForm LinearForm::coordinate(Index k, Int scale) {
    LinearForm f;
    f.set_coeff(k, scale);
    return f;
}

Int LinearForm::coeff(Index k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? 0 : it->second;
}

void LinearForm::set_coeff(Index k, Int v) {
    if (k == 0) throw std::invalid_argument("LinearForm: index 0 is the weight marker");
    if (v == 0)
        coeffs_.erase(k);
    else
        coeffs_[k] = v;
}

void LinearForm::add_coeff(Index k, Int dv) {
    set_coeff(k, checked_add(coeff(k), dv));
}

void LinearForm::subtract_scaled(const LinearForm& other, Int scale) {
    constant_ = checked_sub(constant_, checked_mul(scale, other.constant_));
    for (const auto& [k, v] : other.coeffs_)
        add_coeff(k, checked_sub(Int{0}, checked_mul(scale, v)));
}

Int LinearForm::evaluate(const FinSuppVector& x) const {
    Int s = constant_;
    for (const auto& [k, v] : coeffs_)
        s = checked_add(s, checked_mul(v, x.at(k)));
    return s;
}

std::optional<LinearForm> beta_bar(const IotaSequence& iota, const Weight& lambda, Index k) {
    if (k == 0) return LinearForm{};
    if (!iota.has_index(k)) throw std::invalid_argument("beta_bar: index on a missing side");
    const Index kp = iota.k_plus(k);
    if (kp == 0) return std::nullopt;
    const CartanData& c = iota.cartan();
    const int ik = iota.color_at(k);
    LinearForm f;
    f.add_coeff(k, 1);
    for (Index j = k + 1; j < kp; ++j) {
        if (j == 0) continue;
        f.add_coeff(j, c.pairing(ik, iota.color_at(j)));
    }
    f.add_coeff(kp, 1);
    if (k <= -1 && kp >= 1)
        f.set_constant(checked_sub(Int{0}, weight_pairing(c, ik, lambda)));
    return f;
}

std::optional<LinearForm> s_bar(const LinearForm& phi, const IotaSequence& iota,
                                const Weight& lambda, Index k) {
    if (k == 0) throw std::invalid_argument("s_bar: subscript 0 is the weight marker");
    const Int pk = phi.coeff(k);
    // -0 * beta_bar: identity even at indices the sequence does not carry,
    // which is what keeps one-sided families fixed under far-side rewrites.
    if (pk == 0) return phi;
    if (!iota.has_index(k)) throw std::invalid_argument("s_bar: subscript on a missing side");
    const auto bb = beta_bar(iota, lambda, pk > 0 ? k : iota.k_minus(k));
    if (!bb) return std::nullopt;
    LinearForm out = phi;
    out.subtract_scaled(*bb, pk);
    return out;
}

std::set<LinearForm> s_bar_closure(const std::vector<LinearForm>& seeds,
                                   const IotaSequence& iota, const Weight& lambda,
                                   Index window, int depth,
                                   int sign, Index min_abs,
                                   std::size_t max_forms) {
    if (window < min_abs) throw std::invalid_argument("s_bar_closure: empty subscript range");
    std::set<LinearForm> out(seeds.begin(), seeds.end());
    std::deque<std::pair<LinearForm, int>> work;
    for (const LinearForm& s : out) work.emplace_back(s, 0);
    while (!work.empty()) {
        auto [phi, d] = std::move(work.front());
        work.pop_front();
        if (d >= depth) continue;
        // A rewrite at a zero coefficient is the identity, so only the
        // support of phi can yield new forms.
        for (const auto& entry : phi.coeffs()) {
            const Index k = entry.first;
            const Index a = k < 0 ? -k : k;
            if (a < min_abs || a > window) continue;
            if (sign > 0 && k < 0) continue;
            if (sign < 0 && k > 0) continue;
            if (!iota.has_index(k)) continue;
            const auto next = s_bar(phi, iota, lambda, k);
            if (!next || *next == phi) continue;
            if (out.insert(*next).second) {
                if (out.size() > max_forms)
                    throw std::runtime_error("s_bar_closure: form cap exceeded");
                work.emplace_back(*next, d + 1);
            }
        }
    }
    return out;
}

std::set<LinearForm> xi_family(const IotaSequence& iota, const Weight& lambda,
                               Index window, int depth, Index min_abs) {
    std::set<LinearForm> out;
    if (iota.has_positive()) {
        std::vector<LinearForm> seeds;
        for (Index j = min_abs; j <= window; ++j)
            seeds.push_back(LinearForm::coordinate(j, 1));
        out.merge(s_bar_closure(seeds, iota, lambda, window, depth, +1, min_abs));
    }
    if (iota.has_negative()) {
        std::vector<LinearForm> seeds;
        for (Index j = min_abs; j <= window; ++j)
            seeds.push_back(LinearForm::coordinate(-j, -1));
        auto neg = s_bar_closure(seeds, iota, lambda, window, depth, -1, min_abs);
        out.merge(neg);
    }
    return out;
}

bool satisfies_all(const FinSuppVector& x, const std::set<LinearForm>& forms) {
    for (const LinearForm& f : forms)
        if (f.evaluate(x) < 0) return false;
    return true;
}

std::vector<PnViolation> check_pn(const IotaSequence& one_sided, Index window, int depth) {
    if (one_sided.side() == IotaSide::Both)
        throw std::invalid_argument("check_pn: expects a one-sided sequence");
    const bool pos = one_sided.side() == IotaSide::PositiveOnly;
    // One-sided coordinate families never cross the marker, so no constant
    // ever appears and the weight is irrelevant; pass zero.
    Weight zero;
    zero.coeffs.assign(static_cast<std::size_t>(one_sided.cartan().rank()), 0);
    const std::set<LinearForm> fam =
        xi_family(one_sided, zero, window, depth);
    std::vector<PnViolation> bad;
    for (const LinearForm& f : fam) {
        for (const auto& [k, v] : f.coeffs()) {
            const bool first = pos ? one_sided.k_minus(k) == 0 : one_sided.k_plus(k) == 0;
            if (!first) continue;
            if ((pos && v < 0) || (!pos && v > 0)) bad.push_back({f, k});
        }
    }
    return bad;
}

} // namespace crystalpoly
