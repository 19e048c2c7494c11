#pragma once

/*
  Seeds: a quiver with mutable and frozen vertices carrying signed arrow
  multiplicities, together with a rational-function assignment per vertex.
  Mutation follows the usual cluster rule (arrows reversed at the vertex,
  composite arrows added with eager 2-cycle cancellation, exchange relation
  x x' = in-product + out-product).  Arrows between two frozen vertices are
  never tracked.
*/

#include "drh/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace drh {

class Quiver {
public:
    int add_vertex(std::string name, bool frozen);
    int size() const { return static_cast<int>(frozen_.size()); }
    bool is_frozen(int v) const { return frozen_.at(v); }
    const std::string& name(int v) const { return names_.at(v); }

    // Signed multiplicity: positive means u -> v.
    int arrow(int u, int v) const;
    void add_arrow(int u, int v, int mult = 1);
    void set_arrow(int u, int v, int mult);
    const std::map<std::pair<int, int>, int>& arrows() const { return arrows_; }

    std::vector<int> mutable_vertices() const;
    std::vector<int> frozen_vertices() const;

    // Arrow part of cluster mutation at a mutable vertex.
    Quiver mutated(int v) const;

    // No 2-cycles (holds by construction); exposed for property tests.
    bool two_cycle_free() const;

private:
    std::vector<bool> frozen_;
    std::vector<std::string> names_;
    std::map<std::pair<int, int>, int> arrows_;  // positive multiplicities only
};

struct Seed {
    Quiver quiver;
    std::vector<RationalFunction> vars;

    // Deterministic key identifying the unordered cluster of mutable
    // variables; used to deduplicate seeds during exploration.
    std::string cluster_key() const;
};

// Mutation at a mutable vertex; involution.  The new variable is the reduced
// rational function (in-product + out-product) / x_v; with polynomial inputs
// an exact division is attempted first.
Seed mutate(const Seed& seed, int v);

// Laurent monomial in the frozen variables recording the frozen arrows at a
// mutable vertex; out-arrows count +1.  Keys are the canonical forms of the
// frozen variables.
struct FrozenCoefficient {
    std::map<std::string, int> expo;

    FrozenCoefficient operator*(const FrozenCoefficient& o) const;
    FrozenCoefficient inverse() const;
    friend bool operator==(const FrozenCoefficient& a, const FrozenCoefficient& b)
    {
        return a.expo == b.expo;
    }
    bool is_one() const { return expo.empty(); }
    std::string str() const;
};

FrozenCoefficient frozen_coefficient(const Seed& seed, int v);

// True iff a vertex bijection preserves frozen status, arrows, and variable
// assignments exactly.
bool seeds_equivalent(const Seed& a, const Seed& b);

// All mutable vertices outside `keep` become frozen; frozen vertices with no
// arrow to a remaining mutable vertex are removed.
Seed freeze_and_prune(const Seed& seed, const std::vector<int>& keep);

// DOT export, frozen vertices as boxes and mutable ones as circles.
std::string to_dot(const Seed& seed);

}  // namespace drh
