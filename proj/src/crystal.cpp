#include "crystalpoly/crystal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crystalpoly {

Int sigma(const FinSuppVector& x, const IotaSequence& iota, Index k) {
    if (k == 0) throw std::invalid_argument("sigma: index 0 is the weight marker");
    if (!iota.has_index(k)) throw std::invalid_argument("sigma: index on a missing side");
    const CartanData& c = iota.cartan();
    const int ik = iota.color_at(k);
    Int s = x.at(k);
    for (const auto& [j, xj] : x.entries())
        if (j > k)
            s = checked_add(s, checked_mul(c.pairing(ik, iota.color_at(j)), xj));
    if (k <= -1)
        s = checked_sub(s, weight_pairing(c, ik, x.lambda()));
    return s;
}

namespace {

// sigma_k for every same-color k below the support window: x_k vanishes and
// the sum picks up the whole support plus the marker term.
Int tail_value(const FinSuppVector& x, const IotaSequence& iota, int color) {
    const CartanData& c = iota.cartan();
    Int s = checked_sub(Int{0}, weight_pairing(c, color, x.lambda()));
    for (const auto& [j, xj] : x.entries())
        s = checked_add(s, checked_mul(c.pairing(color, iota.color_at(j)), xj));
    return s;
}

} // namespace

AttainerReport attainers(const FinSuppVector& x, const IotaSequence& iota, int color) {
    if (color < 1 || color > iota.cartan().rank())
        throw std::out_of_range("attainers: color out of range");
    const IndexWindow w = support_window(x, iota);

    bool seen = false;
    bool occurs_pos = false, occurs_neg = false;
    Int sup = 0;
    std::vector<Index> at;
    for (Index k = w.lo; k <= w.hi; ++k) {
        if (k == 0 || !iota.has_index(k) || iota.color_at(k) != color) continue;
        (k > 0 ? occurs_pos : occurs_neg) = true;
        const Int s = sigma(x, iota, k);
        if (!seen || s > sup) {
            seen = true;
            sup = s;
            at.clear();
        }
        if (s == sup) at.push_back(k);
    }
    // The window spans a full period on each live side, so an empty scan
    // means the color never occurs at all.
    if (!seen) throw std::logic_error("attainers: color absent from the sequence");

    AttainerReport r;
    r.sup_value = sup;
    r.window_attainers = std::move(at);
    r.unbounded_left = occurs_neg && tail_value(x, iota, color) == sup;
    r.unbounded_right = occurs_pos && sup == 0;
    return r;
}

std::optional<FinSuppVector> f_tilde(const FinSuppVector& x, const IotaSequence& iota, int color) {
    const AttainerReport r = attainers(x, iota, color);
    if (r.unbounded_left) return std::nullopt;
    FinSuppVector out = x;
    out.add(r.window_attainers.front(), 1);
    return out;
}

std::optional<FinSuppVector> e_tilde(const FinSuppVector& x, const IotaSequence& iota, int color) {
    const AttainerReport r = attainers(x, iota, color);
    if (r.unbounded_right) return std::nullopt;
    FinSuppVector out = x;
    out.add(r.window_attainers.back(), -1);
    return out;
}

Int epsilon(const FinSuppVector& x, const IotaSequence& iota, int color) {
    return attainers(x, iota, color).sup_value;
}

Int phi(const FinSuppVector& x, const IotaSequence& iota, int color) {
    return checked_add(weight_pairing(iota.cartan(), color, weight_of(x, iota)),
                       epsilon(x, iota, color));
}

std::vector<Int> root_multiplicities(const FinSuppVector& x, const IotaSequence& iota) {
    std::vector<Int> m(static_cast<std::size_t>(iota.cartan().rank()), 0);
    for (const auto& [j, xj] : x.entries()) {
        auto& slot = m[static_cast<std::size_t>(iota.color_at(j) - 1)];
        slot = checked_add(slot, xj);
    }
    return m;
}

Weight weight_of(const FinSuppVector& x, const IotaSequence& iota) {
    const CartanData& c = iota.cartan();
    Weight w = x.lambda();
    if (w.coeffs.size() != static_cast<std::size_t>(c.rank()))
        throw std::invalid_argument("weight_of: lambda rank mismatch");
    const std::vector<Int> m = root_multiplicities(x, iota);
    for (int i = 1; i <= c.rank(); ++i)
        w = subtract_root(w, c, i, m[static_cast<std::size_t>(i - 1)]);
    return w;
}

Int wt_depth(const FinSuppVector& x, const IotaSequence& iota) {
    Int d = 0;
    for (Int mi : root_multiplicities(x, iota))
        d = checked_add(d, mi < 0 ? checked_sub(Int{0}, mi) : mi);
    return d;
}

bool is_highest_weight(const FinSuppVector& x, const IotaSequence& iota) {
    for (int i = 1; i <= iota.cartan().rank(); ++i)
        if (!attainers(x, iota, i).unbounded_right) return false;
    return true;
}

} // namespace crystalpoly
