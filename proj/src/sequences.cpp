#include "crystalpoly/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crystalpoly {

namespace {

void validate_pattern(const std::vector<int>& pat, int rank, const char* what) {
    for (int c : pat)
        if (c < 1 || c > rank)
            throw std::invalid_argument(std::string(what) + ": color out of range");
}

} // namespace

IotaSequence::IotaSequence(CartanData cartan, std::vector<int> pos, std::vector<int> neg, IotaSide side)
    : cartan_(std::move(cartan)), pos_(std::move(pos)), neg_(std::move(neg)), side_(side) {}

IotaSequence IotaSequence::finite_a(int rank, IotaSide side) {
    CartanData c = CartanData::finite_a(rank);
    std::vector<int> pos(rank), neg(rank);
    for (int t = 0; t < rank; ++t) {
        pos[t] = t + 1;        // i_1 = 1, i_2 = 2, ..., i_n = n, repeating
        neg[t] = rank - t;     // i_{-1} = n, i_{-2} = n-1, ..., i_{-n} = 1
    }
    return IotaSequence(std::move(c), std::move(pos), std::move(neg), side);
}

IotaSequence IotaSequence::affine_a1(IotaSide side) {
    return IotaSequence(CartanData::affine_a1(), {1, 2}, {2, 1}, side);
}

IotaSequence IotaSequence::from_pattern(CartanData cartan,
                                        std::vector<int> pos_pattern,
                                        std::vector<int> neg_pattern,
                                        IotaSide side) {
    if (side != IotaSide::NegativeOnly) {
        if (pos_pattern.empty()) throw std::invalid_argument("from_pattern: empty positive pattern");
        validate_pattern(pos_pattern, cartan.rank(), "from_pattern(pos)");
    }
    if (side != IotaSide::PositiveOnly) {
        if (neg_pattern.empty()) throw std::invalid_argument("from_pattern: empty negative pattern");
        validate_pattern(neg_pattern, cartan.rank(), "from_pattern(neg)");
    }
    return IotaSequence(std::move(cartan), std::move(pos_pattern), std::move(neg_pattern), side);
}

bool IotaSequence::has_index(Index k) const {
    if (k == 0) return false;
    return k > 0 ? has_positive() : has_negative();
}

Index IotaSequence::period() const {
    Index p = 0;
    if (has_positive()) p = std::max<Index>(p, static_cast<Index>(pos_.size()));
    if (has_negative()) p = std::max<Index>(p, static_cast<Index>(neg_.size()));
    return p;
}

int IotaSequence::color_at(Index k) const {
    if (k == 0) throw std::invalid_argument("color_at: index 0 is the weight marker");
    if (!has_index(k)) throw std::invalid_argument("color_at: index on a missing side");
    if (k > 0) return pos_[static_cast<std::size_t>((k - 1) % static_cast<Index>(pos_.size()))];
    return neg_[static_cast<std::size_t>((-k - 1) % static_cast<Index>(neg_.size()))];
}

Index IotaSequence::k_plus(Index k) const {
    if (!has_index(k)) throw std::invalid_argument("k_plus: invalid index");
    const int color = color_at(k);
    // One period inside the first live stretch above k is enough to decide.
    const Index limit = (k < 0 ? Index{1} : k + 1) + period();
    for (Index l = k + 1;; ++l) {
        if (l == 0) continue;
        if (l > 0 && !has_positive()) return 0;
        if (l > limit) return 0;
        if (color_at(l) == color) return l;
    }
}

Index IotaSequence::k_minus(Index k) const {
    if (!has_index(k)) throw std::invalid_argument("k_minus: invalid index");
    const int color = color_at(k);
    const Index limit = (k > 0 ? Index{-1} : k - 1) - period();
    for (Index l = k - 1;; --l) {
        if (l == 0) continue;
        if (l < 0 && !has_negative()) return 0;
        if (l < limit) return 0;
        if (color_at(l) == color) return l;
    }
}

Index di_pos(int n, long j, int i) {
    if (n < 1) throw std::invalid_argument("di_pos: rank must be positive");
    if (j < 1) throw std::out_of_range("di_pos: row must be >= 1");
    if (i < 1 || i > n) throw std::out_of_range("di_pos: column out of range");
    return checked_add(checked_mul(static_cast<Int>(j) - 1, n), i);
}

std::pair<long, int> di_pos_inv(int n, Index k) {
    if (n < 1) throw std::invalid_argument("di_pos_inv: rank must be positive");
    if (k < 1) throw std::out_of_range("di_pos_inv: index must be positive");
    const long j = static_cast<long>((k - 1) / n) + 1;
    const int i = static_cast<int>((k - 1) % n) + 1;
    return {j, i};
}

Index di_neg(int n, long j, int i) {
    if (n < 1) throw std::invalid_argument("di_neg: rank must be positive");
    if (j < 1) throw std::out_of_range("di_neg: row must be >= 1");
    if (i < 1 || i > n) throw std::out_of_range("di_neg: column out of range");
    return checked_add(checked_mul(-static_cast<Int>(j), n), i - 1);
}

std::pair<long, int> di_neg_inv(int n, Index k) {
    if (n < 1) throw std::invalid_argument("di_neg_inv: rank must be positive");
    if (k > -1) throw std::out_of_range("di_neg_inv: index must be negative");
    const long j = static_cast<long>((-k + n - 1) / n);
    const int i = static_cast<int>(k + static_cast<Index>(j) * n + 1);
    return {j, i};
}

Int FinSuppVector::at(Index k) const {
    if (k == 0) throw std::invalid_argument("FinSuppVector::at: index 0 is the weight marker");
    auto it = entries_.find(k);
    return it == entries_.end() ? 0 : it->second;
}

void FinSuppVector::set(Index k, Int value) {
    if (k == 0) throw std::invalid_argument("FinSuppVector::set: index 0 is the weight marker");
    if (value == 0)
        entries_.erase(k);
    else
        entries_[k] = value;
}

void FinSuppVector::add(Index k, Int delta) {
    set(k, checked_add(at(k), delta));
}

Index FinSuppVector::min_support() const {
    return entries_.empty() ? 0 : entries_.begin()->first;
}

Index FinSuppVector::max_support() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first;
}

IndexWindow support_window(const FinSuppVector& x, const IotaSequence& iota) {
    const Index p = iota.period();
    IndexWindow w;
    w.lo = std::min<Index>(0, x.min_support()) - p;
    w.hi = std::max<Index>(0, x.max_support()) + p;
    return w;
}

} // namespace crystalpoly
