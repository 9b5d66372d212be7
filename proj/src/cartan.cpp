#include "crystalpoly/cartan.hpp"

#include <stdexcept>
#include <string>

namespace crystalpoly {

CartanData::CartanData(int rank, CartanKind kind, std::vector<std::vector<int>> entries)
    : rank_(rank), kind_(kind), entries_(std::move(entries)) {}

CartanData CartanData::finite_a(int rank) {
    if (rank < 1) throw std::invalid_argument("finite type A needs rank >= 1");
    std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        a[i][i] = 2;
        if (i + 1 < rank) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    return CartanData(rank, CartanKind::FiniteA, std::move(a));
}

CartanData CartanData::affine_a1() {
    return CartanData(2, CartanKind::AffineA1, {{2, -2}, {-2, 2}});
}

int CartanData::pairing(int i, int j) const {
    if (i < 1 || i > rank_ || j < 1 || j > rank_)
        throw std::out_of_range("pairing: color out of range [1," + std::to_string(rank_) + "]");
    return entries_[i - 1][j - 1];
}

Int weight_pairing(const CartanData& c, int i, const Weight& w) {
    if (i < 1 || i > c.rank()) throw std::out_of_range("weight_pairing: color out of range");
    if (static_cast<int>(w.coeffs.size()) != c.rank())
        throw std::invalid_argument("weight_pairing: weight length does not match rank");
    return w.coeffs[i - 1];
}

Weight subtract_root(const Weight& w, const CartanData& c, int i, Int m) {
    if (i < 1 || i > c.rank()) throw std::out_of_range("subtract_root: color out of range");
    if (static_cast<int>(w.coeffs.size()) != c.rank())
        throw std::invalid_argument("subtract_root: weight length does not match rank");
    Weight out = w;
    for (int j = 1; j <= c.rank(); ++j)
        out.coeffs[j - 1] = checked_sub(out.coeffs[j - 1], checked_mul(m, c.pairing(j, i)));
    return out;
}

} // namespace crystalpoly
