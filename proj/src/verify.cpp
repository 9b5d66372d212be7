#include "crystalpoly/verify.hpp"

#include "crystalpoly/affine_a11.hpp"
#include "crystalpoly/checked.hpp"
#include "crystalpoly/forms.hpp"
#include "crystalpoly/type_a.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace crystalpoly {

namespace {

std::string describe_weight(const Weight& w) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < w.coeffs.size(); ++i) {
        if (i) out << ",";
        out << w.coeffs[i];
    }
    out << ")";
    return out.str();
}

}  // namespace

std::vector<Weight> lambda_grid_a(int rank) {
    std::vector<Weight> grid;
    std::vector<Int> entries(static_cast<size_t>(rank), -3);
    while (true) {
        bool seen_nonpositive = false;
        bool valid = true;
        for (Int e : entries) {
            if (e > 0 && seen_nonpositive) {
                valid = false;
                break;
            }
            if (e <= 0) seen_nonpositive = true;
        }
        if (valid) grid.push_back(Weight{entries});
        int pos = rank - 1;
        while (pos >= 0 && entries[static_cast<size_t>(pos)] == 3) {
            entries[static_cast<size_t>(pos)] = -3;
            --pos;
        }
        if (pos < 0) break;
        ++entries[static_cast<size_t>(pos)];
    }
    return grid;
}

std::vector<Weight> lambda_grid_affine() {
    std::vector<Weight> grid;
    for (Int a = 1; a <= 4; ++a)
        for (Int b = -3; b <= 0; ++b)
            if (a + b > 0) grid.push_back(Weight{{a, b}});
    return grid;
}

SuiteResult run_lemma52(std::uint64_t seed, int trials) {
    SuiteResult result{"lemma52", true, 0, ""};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, 8);
    std::uniform_int_distribution<Int> entry_dist(-9, 9);
    for (int t = 0; t < trials; ++t) {
        std::vector<Int> rs(static_cast<size_t>(len_dist(rng)));
        for (auto& r : rs) r = entry_dist(rng);
        Int best = rs[0], prefix = 0;
        for (Int r : rs) {
            prefix += r;
            best = std::max(best, prefix);
        }
        ++result.checks;
        if (nested_plus(rs) != best) {
            result.ok = false;
            std::ostringstream out;
            out << "fold mismatch at trial " << t;
            result.detail = out.str();
            return result;
        }
    }
    return result;
}

SuiteResult run_lemma55() {
    SuiteResult result{"lemma55", true, 0, ""};
    for (int n = 1; n <= 3; ++n) {
        for (const Weight& w : lambda_grid_a(n)) {
            LambdaA lambda(w);
            for (Index j = 1; j <= 2 * n + 2; ++j) {
                for (int i = 1; i <= n; ++i) {
                    const Int d = d_value_a(lambda, j, i);
                    const Int c = c_table(lambda, j, i);
                    ++result.checks;
                    const bool ok = d <= 0 ? c == 0 : d == c;
                    if (!ok) {
                        result.ok = false;
                        std::ostringstream out;
                        out << "dichotomy fails: n=" << n << " lambda="
                            << describe_weight(w) << " j=" << j << " i=" << i
                            << " D=" << d << " C=" << c;
                        result.detail = out.str();
                        return result;
                    }
                }
            }
        }
    }
    return result;
}

SuiteResult run_lemma63() {
    SuiteResult result{"lemma63", true, 0, ""};
    for (const Weight& w : lambda_grid_affine()) {
        LambdaAffine lambda(w);
        for (Index k = 1; k <= 12; ++k) {
            const Int d = d_k(lambda, k);
            const Int c = c_k(lambda, k);
            ++result.checks;
            if (!(d <= 0 ? c == 0 : d == c)) {
                result.ok = false;
                std::ostringstream out;
                out << "dichotomy fails: lambda=" << describe_weight(w)
                    << " k=" << k << " D=" << d << " C=" << c;
                result.detail = out.str();
                return result;
            }
            // Once the raw C expression drops to or below zero it stays there.
            const Int raw_k = -(k - 1) * lambda.l1() - k * lambda.l2();
            const Int raw_next = -k * lambda.l1() - (k + 1) * lambda.l2();
            ++result.checks;
            if (raw_k <= 0 && raw_next > 0) {
                result.ok = false;
                result.detail = "vanishing propagation fails at " + describe_weight(w);
                return result;
            }
        }
    }
    return result;
}

SuiteResult run_csum() {
    SuiteResult result{"csum", true, 0, ""};
    for (int n = 1; n <= 3; ++n) {
        for (const Weight& w : lambda_grid_a(n)) {
            LambdaA lambda(w);
            for (int i = 1; i <= n; ++i) {
                for (Index j = 1; j <= i; ++j) {
                    Int partial = c_table(lambda, j, i);
                    for (int s = 1; s <= n - i + 1; ++s) {
                        partial = checked_add(
                            partial, lambda.entry(static_cast<int>(i - j + s)));
                        ++result.checks;
                        if (partial < 0) {
                            result.ok = false;
                            std::ostringstream out;
                            out << "partial sum negative: n=" << n << " lambda="
                                << describe_weight(w) << " j=" << j << " i=" << i
                                << " s=" << s;
                            result.detail = out.str();
                            return result;
                        }
                    }
                }
            }
        }
    }
    // Generated second-family constants stay nonnegative on both grids.
    for (int n = 1; n <= 3; ++n) {
        const Index window = static_cast<Index>(n) * n + n;
        for (const Weight& w : lambda_grid_a(n)) {
            for (const LinearForm& f :
                 xi_prime_family_a(LambdaA(w), window, 4)) {
                ++result.checks;
                if (f.constant() < 0) {
                    result.ok = false;
                    result.detail = "negative constant, finite grid at " +
                                    describe_weight(w);
                    return result;
                }
            }
        }
    }
    for (const Weight& w : lambda_grid_affine()) {
        for (const LinearForm& f : xi_prime_family_affine(LambdaAffine(w), 8, 6)) {
            ++result.checks;
            if (f.constant() < 0) {
                result.ok = false;
                result.detail =
                    "negative constant, affine grid at " + describe_weight(w);
                return result;
            }
        }
        LambdaAffine lambda(w);
        for (Index k = 1; k <= 12; ++k) {
            for (Index l = 0; l <= 12; ++l) {
                const LinearForm f = phi_l(lambda, k, l, FormMode::Explicit);
                ++result.checks;
                if (checked_add(c_k(lambda, k), f.constant()) < 0) {
                    result.ok = false;
                    std::ostringstream out;
                    out << "affine constant bound fails: lambda="
                        << describe_weight(w) << " k=" << k << " l=" << l;
                    result.detail = out.str();
                    return result;
                }
            }
        }
    }
    return result;
}

SuiteResult run_pn() {
    SuiteResult result{"pn", true, 0, ""};
    const Index window = 8;
    const int depth = 5;
    auto scan = [&](const IotaSequence& iota, const std::string& name) -> bool {
        const auto violations = check_pn(iota, window, depth);
        ++result.checks;
        if (!violations.empty()) {
            result.ok = false;
            std::ostringstream out;
            out << name << ": " << violations.size()
                << " boundary sign violations (first at index "
                << violations.front().position << ")";
            result.detail = out.str();
            return false;
        }
        return true;
    };
    for (int n = 1; n <= 3; ++n) {
        std::ostringstream tag;
        tag << "finite rank " << n;
        if (!scan(IotaSequence::finite_a(n, IotaSide::PositiveOnly),
                  tag.str() + " positive"))
            return result;
        if (!scan(IotaSequence::finite_a(n, IotaSide::NegativeOnly),
                  tag.str() + " negative"))
            return result;
    }
    if (!scan(IotaSequence::affine_a1(IotaSide::PositiveOnly), "affine positive"))
        return result;
    if (!scan(IotaSequence::affine_a1(IotaSide::NegativeOnly), "affine negative"))
        return result;
    return result;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"lemma52", "lemma55", "lemma63",
                                                   "csum", "pn"};
    return names;
}

SuiteResult run_suite(const std::string& name) {
    if (name == "lemma52") return run_lemma52();
    if (name == "lemma55") return run_lemma55();
    if (name == "lemma63") return run_lemma63();
    if (name == "csum") return run_csum();
    if (name == "pn") return run_pn();
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace crystalpoly
