#pragma once

#include <compare>
#include <vector>

#include "crystalpoly/checked.hpp"

namespace crystalpoly {

enum class CartanKind { FiniteA, AffineA1 };

// Integer Cartan matrix with its rank and family tag. Only the two families
// the engine knows are constructible, so the matrix is correct by build.
class CartanData {
public:
    static CartanData finite_a(int rank);
    static CartanData affine_a1();

    int rank() const { return rank_; }
    CartanKind kind() const { return kind_; }

    // <h_i, alpha_j>, colors 1-based.
    int pairing(int i, int j) const;

    bool operator==(const CartanData&) const = default;

private:
    CartanData(int rank, CartanKind kind, std::vector<std::vector<int>> entries);

    int rank_;
    CartanKind kind_;
    std::vector<std::vector<int>> entries_;
};

// Integral weight in the fundamental-weight basis: <h_i, w> = coeffs[i-1].
struct Weight {
    std::vector<Int> coeffs;

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
};

// <h_i, w>. Throws when i is out of range or w has the wrong length.
Int weight_pairing(const CartanData& c, int i, const Weight& w);

// w - m * alpha_i, where alpha_i = sum_j <h_j, alpha_i> Lambda_j.
Weight subtract_root(const Weight& w, const CartanData& c, int i, Int m);

} // namespace crystalpoly
