#pragma once

/*
  Brute-force verification: exhaustive flip-graph exploration of the seeds
  reachable from the initial quiver, certification that every exchange stays
  polynomial, set comparison of the collected mutable variables against the
  filled staircase, and mutation-derived worm quivers checked against the
  proposed ones.
*/

#include "drh/drh_array.hpp"
#include "drh/staircase.hpp"
#include "drh/standardize.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace drh {

// Catalan numbers by the convolution recurrence (independent of any library).
Int catalan(int m);

struct ExplorationResult {
    int seeds_visited = 0;
    std::map<std::string, Polynomial> variables;  // canonical form -> polynomial
    std::vector<std::string> polynomiality_failures;
    size_t max_terms = 0;
};

// BFS over all seeds from Q_lambda, mutating at every mutable vertex.
ExplorationResult enumerate_cluster_variables(const DrhArray& array);

struct MainTheoremReport {
    std::string path;
    int seeds_visited = 0;
    Int expected_seeds;
    size_t variables_found = 0;
    size_t expected_variables = 0;
    std::vector<std::string> missing;       // in staircase fill, not found
    std::vector<std::string> extra;         // found, not in fill
    std::vector<std::string> sign_only;     // match up to sign only
    std::vector<std::string> polynomiality_failures;
    std::map<std::string, std::string> cell_of_variable;

    bool ok() const;
};

MainTheoremReport verify_main_theorem(const DrhArray& array);

struct WormQuiverReport {
    std::string path;
    int worms_total = 0;
    int worms_reached = 0;
    std::vector<std::string> mismatches;       // proposed != derived
    int fc_law_checks = 0;                     // vertex pairs meeting the
    std::vector<std::string> fc_law_failures;  // in/out-mutation hypotheses

    bool ok() const
    {
        return worms_reached == worms_total && mismatches.empty() && fc_law_failures.empty();
    }
};

// Explores the worm operation graph from the initial worm, mutating the seed
// alongside, and compares against the proposed quiver at every worm.  Also
// checks the frozen-coefficient transformation laws at every mutation where
// their hypotheses hold.
WormQuiverReport verify_worm_quivers(const DrhArray& array);

struct CompatReport {
    int interior_cases = 0;   // 3x3 squares fully inside the band
    int boundary_cases = 0;   // start-of-worm variants
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// The two compatibility statements behind the worm-quiver description: the
// frozen coefficient at the middle cell after mutating from above equals the
// one after mutating from below, for every applicable 3x3 configuration.
CompatReport verify_fc_compatibility(const DrhArray& array);

std::string worm_key(const Worm& w);

}  // namespace drh
