#pragma once

#include <map>
#include <utility>
#include <vector>

#include "crystalpoly/cartan.hpp"

namespace crystalpoly {

// Which halves of the index line carry colors. The theorem sequences are
// two-sided; one-sided instances exist for the half-infinite checks.
enum class IotaSide { Both, PositiveOnly, NegativeOnly };

// Doubly infinite periodic color sequence. Index 0 is the weight marker and
// never carries a color. Positions k >= 1 extend left of the marker in the
// usual display, k <= -1 extend right; both are periodic.
class IotaSequence {
public:
    static IotaSequence finite_a(int rank, IotaSide side = IotaSide::Both);
    static IotaSequence affine_a1(IotaSide side = IotaSide::Both);

    // Test-only: explicit patterns, pos_pattern[0] = i_1, neg_pattern[0] = i_{-1}.
    static IotaSequence from_pattern(CartanData cartan,
                                     std::vector<int> pos_pattern,
                                     std::vector<int> neg_pattern,
                                     IotaSide side = IotaSide::Both);

    const CartanData& cartan() const { return cartan_; }
    IotaSide side() const { return side_; }
    bool has_positive() const { return side_ != IotaSide::NegativeOnly; }
    bool has_negative() const { return side_ != IotaSide::PositiveOnly; }
    bool has_index(Index k) const;

    // Longest pattern length; one period of slack is enough to see every
    // color that occurs on a given side.
    Index period() const;

    int color_at(Index k) const; // throws on k = 0 or a missing side

    // Nearest same-color index above/below k, skipping 0. Returns 0 when no
    // such index exists (only possible on one-sided or degenerate patterns).
    Index k_plus(Index k) const;
    Index k_minus(Index k) const;

private:
    IotaSequence(CartanData cartan, std::vector<int> pos, std::vector<int> neg, IotaSide side);

    CartanData cartan_;
    std::vector<int> pos_;
    std::vector<int> neg_;
    IotaSide side_;
};

// Row/column addressing used by the finite type A tables:
// positive side (j;i) <-> (j-1)n + i, negative side (j;i) <-> -jn + i - 1,
// rows j >= 1, columns 1 <= i <= n.
Index di_pos(int n, long j, int i);
std::pair<long, int> di_pos_inv(int n, Index k);
Index di_neg(int n, long j, int i);
std::pair<long, int> di_neg_inv(int n, Index k);

// Finitely supported integer vector over nonzero indices, carrying the
// marker weight. Zero entries are never stored.
class FinSuppVector {
public:
    FinSuppVector() = default;
    explicit FinSuppVector(Weight lambda) : lambda_(std::move(lambda)) {}

    const Weight& lambda() const { return lambda_; }
    const std::map<Index, Int>& entries() const { return entries_; }

    Int at(Index k) const;        // 0 when absent; throws on k = 0
    void set(Index k, Int value); // erases on value = 0
    void add(Index k, Int delta);

    bool empty_support() const { return entries_.empty(); }
    Index min_support() const; // 0 when empty
    Index max_support() const;

    bool operator==(const FinSuppVector&) const = default;
    auto operator<=>(const FinSuppVector&) const = default;

private:
    Weight lambda_;
    std::map<Index, Int> entries_;
};

struct IndexWindow {
    Index lo;
    Index hi;
};

// Smallest window containing the support and the marker with one full
// period of slack per side: sigma is zero above hi and per-color constant
// below lo, so every scan can stop at the window edge.
IndexWindow support_window(const FinSuppVector& x, const IotaSequence& iota);

} // namespace crystalpoly
