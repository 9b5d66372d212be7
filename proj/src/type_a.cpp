#include "crystalpoly/type_a.hpp"

#include "crystalpoly/checked.hpp"
#include "crystalpoly/crystal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crystalpoly {

namespace {

IotaSequence iota_for(const LambdaA& lambda) {
    return IotaSequence::finite_a(lambda.rank(), IotaSide::Both);
}

// Sequence position of the double index (row; col): row >= 1 lives on the
// positive side, row <= -1 on the negative side. Row 0 never occurs.
Index position_of(int rank, Index row, int col) {
    if (row == 0) throw std::logic_error("double index row 0");
    return row >= 1 ? di_pos(rank, row, col) : di_neg(rank, -row, col);
}

}  // namespace

LambdaA::LambdaA(Weight weight) : weight_(std::move(weight)) {
    const int n = static_cast<int>(weight_.coeffs.size());
    if (n < 1) throw std::invalid_argument("LambdaA: empty weight");
    int i0 = 0;
    while (i0 < n && weight_.coeffs[static_cast<size_t>(i0)] > 0) ++i0;
    for (int i = i0; i < n; ++i) {
        if (weight_.coeffs[static_cast<size_t>(i)] > 0)
            throw std::invalid_argument(
                "LambdaA: positive entry after a nonpositive one (no valid pivot)");
    }
    pivot_ = i0;
}

Int LambdaA::entry(int i) const {
    if (i < 1 || i > rank()) throw std::out_of_range("LambdaA::entry");
    return weight_.coeffs[static_cast<size_t>(i - 1)];
}

AdmissiblePartition::AdmissiblePartition(std::vector<Int> mu, int rank)
    : mu_(std::move(mu)) {
    const int i = static_cast<int>(mu_.size());
    if (i < 1 || i > rank)
        throw std::invalid_argument("AdmissiblePartition: bad length");
    if (mu_.front() > rank - i + 1)
        throw std::invalid_argument("AdmissiblePartition: mu_1 too large");
    for (size_t t = 0; t + 1 < mu_.size(); ++t) {
        if (mu_[t] < mu_[t + 1])
            throw std::invalid_argument("AdmissiblePartition: not weakly decreasing");
    }
    if (mu_.back() < 0)
        throw std::invalid_argument("AdmissiblePartition: negative part");
}

std::vector<AdmissiblePartition> all_admissible(int rank, int i) {
    if (i < 1 || i > rank) throw std::invalid_argument("all_admissible: bad i");
    std::vector<AdmissiblePartition> out;
    std::vector<Int> mu(static_cast<size_t>(i), 0);
    const Int cap = rank - i + 1;
    // Odometer over weakly decreasing vectors bounded by cap.
    auto rec = [&](auto&& self, int pos, Int bound) -> void {
        if (pos == i) {
            out.emplace_back(mu, rank);
            return;
        }
        for (Int v = bound; v >= 0; --v) {
            mu[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, cap);
    std::sort(out.begin(), out.end(),
              [](const AdmissiblePartition& a, const AdmissiblePartition& b) {
                  return a.parts() < b.parts();
              });
    return out;
}

Int nested_plus(const std::vector<Int>& rs) {
    if (rs.empty()) throw std::invalid_argument("nested_plus: empty list");
    Int acc = rs.back();
    for (size_t t = rs.size() - 1; t-- > 0;)
        acc = checked_add(rs[t], std::max<Int>(acc, 0));
    return acc;
}

Int c_table(const LambdaA& lambda, Index j, int i) {
    const int n = lambda.rank();
    if (j < 1 || i < 1 || i > n) throw std::invalid_argument("c_table: bad index");
    if (j > i) return 0;
    std::vector<Int> rs;
    for (Index t = i - j + 1; t <= n - j + 1; ++t)
        rs.push_back(checked_sub(0, lambda.entry(static_cast<int>(t))));
    return std::max<Int>(0, nested_plus(rs));
}

FinSuppVector hwv_a(const LambdaA& lambda, Index window_depth) {
    const int n = lambda.rank();
    if (window_depth < n)
        throw std::invalid_argument("hwv_a: window_depth must be >= rank");
    FinSuppVector x(lambda.weight());
    for (Index j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            x.set(di_neg(n, j, i), checked_sub(0, c_table(lambda, j, i)));
    return x;
}

std::vector<LinearForm> xi_prime_seeds_a(const LambdaA& lambda, Index window) {
    const int n = lambda.rank();
    std::vector<LinearForm> seeds;
    for (Index k = -1; k >= -window; --k) {
        const auto [j, i] = di_neg_inv(n, k);
        LinearForm seed = LinearForm::coordinate(k);
        seed.add_constant(c_table(lambda, j, static_cast<int>(i)));
        seeds.push_back(std::move(seed));
    }
    return seeds;
}

LinearForm phi_mu(const LambdaA& lambda, Index j, int i,
                  const AdmissiblePartition& mu, FormMode mode) {
    const int n = lambda.rank();
    if (j < 1 || i < 1 || i > n) throw std::invalid_argument("phi_mu: bad index");
    if (mu.size() != i)
        throw std::invalid_argument("phi_mu: partition length must equal i");
    const auto& parts = mu.parts();
    const auto theta = [](Index t) -> Index { return t >= 0 ? 1 : 0; };

    if (mode == FormMode::Composite) {
        const IotaSequence iota = iota_for(lambda);
        LinearForm form = LinearForm::coordinate(di_neg(n, j, i));
        for (int k = 1; k <= i; ++k) {
            const Index row = -j + k - theta(j - k);
            for (Int col = i - k + 1; col <= i - k + parts[static_cast<size_t>(k - 1)];
                 ++col) {
                auto next = s_bar(form, iota, lambda.weight(),
                                  position_of(n, row, static_cast<int>(col)));
                if (!next)
                    throw std::logic_error("phi_mu: rewrite subscript has no successor");
                form = std::move(*next);
            }
        }
        return form;
    }

    LinearForm form;
    if (j <= i) {
        Int constant = 0;
        for (Int t = 1; t <= parts[static_cast<size_t>(j - 1)]; ++t)
            constant = checked_add(constant, lambda.entry(static_cast<int>(i - j + t)));
        form.set_constant(constant);
    }
    for (int k = 1; k <= i; ++k) {
        const Int mu_k = parts[static_cast<size_t>(k - 1)];
        const Index row_a = -j + k - theta(j - k);
        const Int col_a = i - k + 1 + mu_k;
        if (col_a >= 1 && col_a <= n)
            form.add_coeff(position_of(n, row_a, static_cast<int>(col_a)), 1);
        const Index row_b = -j + k + 1 - theta(j - k - 1);
        const Int col_b = i - k + mu_k;
        if (col_b >= 1 && col_b <= n)
            form.add_coeff(position_of(n, row_b, static_cast<int>(col_b)), -1);
    }
    return form;
}

Int d_value_a(const LambdaA& lambda, Index j, int i) {
    const int n = lambda.rank();
    if (j < 1 || i < 1 || i > n) throw std::invalid_argument("d_value_a: bad index");
    const FinSuppVector hw = hwv_a(lambda, n);
    const Int s = sigma(hw, iota_for(lambda), di_neg(n, j, i));
    return checked_add(s, c_table(lambda, j, i));
}

std::set<LinearForm> xi_prime_family_a(const LambdaA& lambda, Index window,
                                       Index depth) {
    const IotaSequence iota = iota_for(lambda);
    const Index subscript_window =
        checked_add(window, checked_mul(depth, iota.period()));
    return s_bar_closure(xi_prime_seeds_a(lambda, window), iota, lambda.weight(),
                         subscript_window, static_cast<int>(depth));
}

}  // namespace crystalpoly
