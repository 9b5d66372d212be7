#include "crystalpoly/explore.hpp"

#include "crystalpoly/affine_a11.hpp"
#include "crystalpoly/checked.hpp"
#include "crystalpoly/type_a.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace crystalpoly {

namespace {

struct BallResult {
    std::set<FinSuppVector> vertices;
    bool truncated = false;
};

// Ball of the given radius around seed under raises and lowers. When
// wtd_cap >= 0, vectors deeper than the cap are not collected or expanded;
// the oracle relies on every target being reachable through vectors within
// the cap (see oracle_compare).
BallResult ball(const FinSuppVector& seed, const IotaSequence& iota, Index radius,
                std::size_t vertex_budget, Int wtd_cap) {
    BallResult out;
    const int n = iota.cartan().rank();
    std::deque<std::pair<FinSuppVector, Index>> queue;
    out.vertices.insert(seed);
    queue.emplace_back(seed, 0);
    while (!queue.empty()) {
        auto [x, dist] = std::move(queue.front());
        queue.pop_front();
        if (dist >= radius) continue;
        for (int i = 1; i <= n; ++i) {
            for (int dir = 0; dir < 2; ++dir) {
                auto y = dir == 0 ? f_tilde(x, iota, i) : e_tilde(x, iota, i);
                if (!y) continue;
                if (wtd_cap >= 0 && wt_depth(*y, iota) > wtd_cap) continue;
                if (out.vertices.contains(*y)) continue;
                if (out.vertices.size() >= vertex_budget) {
                    out.truncated = true;
                    return out;
                }
                out.vertices.insert(*y);
                queue.emplace_back(std::move(*y), dist + 1);
            }
        }
    }
    return out;
}

std::vector<CrystalEdge> lowering_edges(const std::set<FinSuppVector>& vertices,
                                        const IotaSequence& iota) {
    std::vector<CrystalEdge> edges;
    const int n = iota.cartan().rank();
    for (const auto& u : vertices) {
        for (int i = 1; i <= n; ++i) {
            auto v = f_tilde(u, iota, i);
            if (v && vertices.contains(*v))
                edges.push_back(CrystalEdge{u, i, std::move(*v)});
        }
    }
    return edges;  // set iteration plus ascending colors: already sorted
}

}  // namespace

CrystalGraph bfs_component(const FinSuppVector& seed, const IotaSequence& iota,
                           Index depth, std::size_t vertex_budget) {
    if (depth < 0) throw std::invalid_argument("bfs_component: negative depth");
    BallResult b = ball(seed, iota, depth, vertex_budget, -1);
    CrystalGraph g{iota, seed, depth, std::move(b.vertices), {}, b.truncated};
    g.edges = lowering_edges(g.vertices, iota);
    return g;
}

std::vector<FinSuppVector> find_highest_weights(const CrystalGraph& g) {
    std::vector<FinSuppVector> out;
    for (const auto& v : g.vertices)
        if (is_highest_weight(v, g.iota)) out.push_back(v);
    return out;
}

std::optional<FinSuppVector> e_ascent(const FinSuppVector& start,
                                      const IotaSequence& iota, Index step_cap) {
    FinSuppVector x = start;
    const int n = iota.cartan().rank();
    for (Index step = 0; step <= step_cap; ++step) {
        bool raised = false;
        for (int i = 1; i <= n && !raised; ++i) {
            if (auto y = e_tilde(x, iota, i)) {
                x = std::move(*y);
                raised = true;
            }
        }
        if (!raised) return x;
    }
    return std::nullopt;
}

std::string verdict_name(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::Equal: return "equal";
        case OracleVerdict::Unequal: return "unequal";
        case OracleVerdict::Inconclusive: return "inconclusive";
    }
    throw std::logic_error("verdict_name");
}

namespace {

// One linear form restricted to the enumeration box: terms indexed by slot,
// constant includes nothing from outside (out-of-box coordinates are zero).
struct BoxedForm {
    std::vector<std::pair<int, Int>> terms;  // (slot, coefficient)
    Int constant = 0;
};

// Integer points of the truncated system inside the box, at weight depth
// <= d. Slots run over -W..-1, 1..W in increasing index order; negative
// slots range over [-cap, 0], positive slots over [0, ...] bounded by the
// depth budget. nullopt when the visit budget runs out.
std::optional<std::set<FinSuppVector>> enumerate_box(
    const IotaSequence& iota, const Weight& lambda,
    const std::set<LinearForm>& forms, Index W, Index d,
    const std::map<Index, Int>& neg_caps, std::size_t& budget) {
    const int n = iota.cartan().rank();
    const int slots = static_cast<int>(2 * W);
    auto slot_of = [&](Index k) -> int {
        // -W..-1 map to 0..W-1, 1..W map to W..2W-1.
        return k < 0 ? static_cast<int>(k + W) : static_cast<int>(W + k - 1);
    };
    auto index_of = [&](int slot) -> Index {
        return slot < W ? slot - W : slot - W + 1;
    };

    // Forms whose in-box support is empty reduce to their constants.
    std::vector<std::vector<BoxedForm>> buckets(static_cast<size_t>(slots));
    for (const auto& form : forms) {
        BoxedForm bf;
        bf.constant = form.constant();
        int last = -1;
        for (const auto& [k, c] : form.coeffs()) {
            if (k < -W || k > W) continue;
            const int s = slot_of(k);
            bf.terms.emplace_back(s, c);
            last = std::max(last, s);
        }
        if (last < 0) {
            if (bf.constant < 0) return std::set<FinSuppVector>{};  // no solutions
            continue;
        }
        buckets[static_cast<size_t>(last)].push_back(std::move(bf));
    }

    std::vector<Int> val(static_cast<size_t>(slots), 0);
    std::vector<Int> mass(static_cast<size_t>(n + 1), 0);
    // Positive slots of each color still ahead of the cursor.
    std::vector<Int> slots_ahead(static_cast<size_t>(n + 1), 0);
    for (Index k = 1; k <= W; ++k) ++slots_ahead[static_cast<size_t>(iota.color_at(k))];

    Int lower_bound = 0;  // sum over colors of the minimum attainable |mass|
    auto color_term = [&](int i) -> Int {
        const Int m = mass[static_cast<size_t>(i)];
        if (slots_ahead[static_cast<size_t>(i)] > 0) return m > 0 ? m : 0;
        return m >= 0 ? m : -m;
    };
    auto recompute_lb = [&]() {
        lower_bound = 0;
        for (int i = 1; i <= n; ++i) lower_bound += color_term(i);
    };
    recompute_lb();

    std::set<FinSuppVector> found;
    auto emit = [&]() {
        FinSuppVector x(lambda);
        for (int s = 0; s < slots; ++s)
            if (val[static_cast<size_t>(s)] != 0)
                x.set(index_of(s), val[static_cast<size_t>(s)]);
        found.insert(std::move(x));
    };

    auto rec = [&](auto&& self, int slot) -> bool {
        if (budget == 0) return false;
        --budget;
        if (slot == slots) {
            if (lower_bound <= d) emit();
            return true;
        }
        const Index k = index_of(slot);
        const int color = iota.color_at(k);
        const bool positive = k > 0;
        Int lo = 0;
        if (!positive) {
            auto it = neg_caps.find(k);
            lo = it == neg_caps.end() ? 0 : -it->second;
        }
        if (positive) --slots_ahead[static_cast<size_t>(color)];
        const Int saved_mass = mass[static_cast<size_t>(color)];
        for (Int v = lo;; ++v) {
            mass[static_cast<size_t>(color)] = checked_add(saved_mass, v);
            recompute_lb();
            if (lower_bound > d) {
                // Monotone in v only once this color's mass is nonnegative;
                // below that the |mass| term still shrinks as v grows.
                if (positive && mass[static_cast<size_t>(color)] >= 0) break;
                if (!positive && v >= 0) break;  // last value anyway
                continue;
            }
            val[static_cast<size_t>(slot)] = v;
            bool ok = true;
            for (const auto& bf : buckets[static_cast<size_t>(slot)]) {
                Int acc = bf.constant;
                for (const auto& [s, c] : bf.terms)
                    acc = checked_add(acc, checked_mul(c, val[static_cast<size_t>(s)]));
                if (acc < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok && !self(self, slot + 1)) return false;
            val[static_cast<size_t>(slot)] = 0;
            if (!positive && v == 0) break;
        }
        mass[static_cast<size_t>(color)] = saved_mass;
        if (positive) ++slots_ahead[static_cast<size_t>(color)];
        recompute_lb();
        return true;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return found;
}

struct SystemInfo {
    IotaSequence iota;
    std::map<Index, Int> neg_caps;  // negative index -> C bound (> 0 only)
    Int c_total = 0;
};

SystemInfo system_for(CartanKind kind, const Weight& lambda) {
    if (kind == CartanKind::FiniteA) {
        LambdaA la(lambda);
        const int n = la.rank();
        SystemInfo info{IotaSequence::finite_a(n, IotaSide::Both), {}, 0};
        for (Index j = 1; j <= n; ++j) {
            for (int i = 1; i <= n; ++i) {
                const Int c = c_table(la, j, i);
                if (c > 0) {
                    info.neg_caps[di_neg(n, j, i)] = c;
                    info.c_total = checked_add(info.c_total, c);
                }
            }
        }
        return info;
    }
    LambdaAffine la(lambda);
    SystemInfo info{IotaSequence::affine_a1(IotaSide::Both), {}, 0};
    for (Index k = 1; k < la.c_cutoff(); ++k) {
        const Int c = c_k(la, k);
        if (c > 0) {
            info.neg_caps[-k] = c;
            info.c_total = checked_add(info.c_total, c);
        }
    }
    return info;
}

std::set<LinearForm> truncated_system(CartanKind kind, const Weight& lambda,
                                      const IotaSequence& iota, Index W, Index D) {
    std::set<LinearForm> forms;
    if (kind == CartanKind::FiniteA) {
        forms = xi_family(iota, lambda, W, static_cast<int>(D), 1);
        for (auto& f : xi_prime_family_a(LambdaA(lambda), W, D)) forms.insert(f);
    } else {
        forms = xi_family(iota, lambda, W, static_cast<int>(D), 2);
        for (auto& f : xi_prime_family_affine(LambdaAffine(lambda), W, D))
            forms.insert(f);
    }
    return forms;
}

}  // namespace

OracleReport oracle_compare(const OracleParams& params) {
    OracleReport report;
    report.params = params;
    const Index d = params.bfs_depth;
    if (d < 0) throw std::invalid_argument("oracle_compare: negative depth");

    SystemInfo info = system_for(params.kind, params.lambda);
    const IotaSequence& iota = info.iota;
    const Index period = iota.period();

    Index W = params.window;
    if (W == 0) W = checked_mul(period, checked_add(d, checked_add(info.c_total, 3)));
    W = std::max(W, checked_mul(period, 2));
    Index D = params.gen_depth;
    if (D == 0) D = checked_add(checked_mul(2, W), 8);
    report.params.window = W;
    report.params.gen_depth = D;

    // Search side. Every component member at depth <= d is connected to the
    // zero vector through vectors of depth <= d + c_total: raising b to the
    // top uses at most d + c_total steps (per-color masses are bounded below
    // by -C along the way), and the top is c_total steps from zero.
    const Int wtd_cap = checked_add(d, info.c_total);
    const Index radius =
        checked_add(d, checked_add(checked_mul(2, info.c_total), 4));
    FinSuppVector zero(params.lambda);
    BallResult reach = ball(zero, iota, radius, params.vertex_budget, wtd_cap);
    report.bfs_truncated = reach.truncated;
    std::set<FinSuppVector> bfs_set;
    for (const auto& x : reach.vertices)
        if (wt_depth(x, iota) <= d) bfs_set.insert(x);
    report.bfs_size = bfs_set.size();

    // Inequality side at (W, D) and two grown settings.
    std::size_t budget = params.enum_budget;
    std::optional<std::set<FinSuppVector>> sets[3];
    for (Index t = 0; t < 3; ++t) {
        const Index Wt = checked_add(W, t);
        const Index Dt = checked_add(D, t);
        auto forms = truncated_system(params.kind, params.lambda, iota, Wt, Dt);
        sets[t] = enumerate_box(iota, params.lambda, forms, Wt, d, info.neg_caps,
                                budget);
        if (!sets[t]) {
            report.note = "enumeration budget exhausted";
            report.verdict = OracleVerdict::Inconclusive;
            return report;
        }
    }
    const std::set<FinSuppVector>& E = *sets[0];
    report.ineq_size = E.size();
    report.stable = (E == *sets[1]) && (E == *sets[2]);

    for (const auto& x : E)
        if (!bfs_set.contains(x)) report.missing_from_bfs.push_back(x);
    for (const auto& x : bfs_set) {
        if (E.contains(x)) continue;
        const auto win = x.empty_support()
                             ? IndexWindow{0, 0}
                             : IndexWindow{x.min_support(), x.max_support()};
        if (win.lo < -W || win.hi > W) {
            report.box_overflow = true;  // outside the box, not a witness
            continue;
        }
        report.missing_from_ineq.push_back(x);
    }

    if (!report.missing_from_ineq.empty()) {
        // A reached vector inside the box violates the truncated system;
        // truncation only drops inequalities, so this is a hard mismatch.
        report.verdict = OracleVerdict::Unequal;
    } else if (report.bfs_truncated || report.box_overflow) {
        report.verdict = OracleVerdict::Inconclusive;
        report.note = report.bfs_truncated ? "search budget hit" : "box overflow";
    } else if (!report.missing_from_bfs.empty()) {
        report.verdict =
            report.stable ? OracleVerdict::Unequal : OracleVerdict::Inconclusive;
        if (!report.stable) report.note = "inequality set not stable under growth";
    } else {
        report.verdict =
            report.stable ? OracleVerdict::Equal : OracleVerdict::Inconclusive;
        if (!report.stable) report.note = "inequality set not stable under growth";
    }
    return report;
}

}  // namespace crystalpoly
