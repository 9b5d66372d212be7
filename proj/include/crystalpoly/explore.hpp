#pragma once

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/crystal.hpp"
#include "crystalpoly/forms.hpp"
#include "crystalpoly/sequences.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace crystalpoly {

// f_tilde_{color}(source) = target. Ordered for stable exports.
struct CrystalEdge {
    FinSuppVector source;
    int color;
    FinSuppVector target;

    bool operator==(const CrystalEdge&) const = default;
    auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
    IotaSequence iota;
    FinSuppVector seed;
    Index depth = 0;
    std::set<FinSuppVector> vertices;
    std::vector<CrystalEdge> edges;  // sorted by (source, color)
    bool truncated = false;          // vertex budget was hit; graph is partial
};

// Closure of {seed} under every defined raise and lower, up to `depth`
// steps. Edges are the lowering arrows between collected vertices,
// recomputed over the final set so the output is order-independent.
CrystalGraph bfs_component(const FinSuppVector& seed, const IotaSequence& iota,
                           Index depth, std::size_t vertex_budget = 1000000);

std::vector<FinSuppVector> find_highest_weights(const CrystalGraph& g);

// Repeated raising at the smallest color that still raises; ends at a
// vector no raise applies to. nullopt if step_cap runs out first.
std::optional<FinSuppVector> e_ascent(const FinSuppVector& start,
                                      const IotaSequence& iota, Index step_cap);

enum class OracleVerdict { Equal, Unequal, Inconclusive };

struct OracleParams {
    CartanKind kind = CartanKind::FiniteA;
    Weight lambda;
    Index bfs_depth = 3;
    // Enumeration box half-width and form window; 0 picks a default derived
    // from bfs_depth and the total C mass.
    Index window = 0;
    // Rewrite chain cap for form generation; 0 derives from window.
    Index gen_depth = 0;
    std::size_t vertex_budget = 1000000;
    std::size_t enum_budget = 80000000;  // DFS node visits across all runs
};

struct OracleReport {
    OracleParams params;
    std::size_t bfs_size = 0;
    std::size_t ineq_size = 0;
    // In the inequality set but not reached by search, and vice versa.
    std::vector<FinSuppVector> missing_from_bfs;
    std::vector<FinSuppVector> missing_from_ineq;
    OracleVerdict verdict = OracleVerdict::Inconclusive;
    bool stable = false;         // inequality set unchanged at grown (w, D)
    bool bfs_truncated = false;  // vertex budget hit
    bool box_overflow = false;   // a reached vector fell outside the box
    std::string note;
};

// Compares the depth-restricted component of the zero vector with the
// integer points of the truncated inequality system, as sets.
OracleReport oracle_compare(const OracleParams& params);

std::string verdict_name(OracleVerdict v);

}  // namespace crystalpoly
