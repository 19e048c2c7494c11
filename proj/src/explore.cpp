#include "drh/explore.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace drh {

Int catalan(int m)
{
    std::vector<Int> c(m + 1);
    c[0] = 1;
    for (int k = 1; k <= m; ++k) {
        Int s = 0;
        for (int i = 0; i < k; ++i) s += c[i] * c[k - 1 - i];
        c[k] = s;
    }
    return c[m];
}

std::string worm_key(const Worm& w)
{
    std::ostringstream out;
    for (const SCell& c : w) out << c.i << "," << c.j << ";";
    return out.str();
}

ExplorationResult enumerate_cluster_variables(const DrhArray& array)
{
    InitialSeed init = initial_quiver(array);
    ExplorationResult result;
    auto record = [&](const RationalFunction& v) {
        if (v.is_polynomial()) {
            result.variables.emplace(v.str(), v.num());
            result.max_terms = std::max(result.max_terms, v.num().term_count());
        } else {
            result.polynomiality_failures.push_back(v.str());
        }
    };
    for (int m : init.seed.quiver.mutable_vertices()) record(init.seed.vars[m]);

    std::set<std::string> visited{init.seed.cluster_key()};
    std::deque<Seed> frontier{init.seed};
    while (!frontier.empty()) {
        Seed seed = std::move(frontier.front());
        frontier.pop_front();
        for (int v : seed.quiver.mutable_vertices()) {
            Seed next = mutate(seed, v);
            record(next.vars[v]);
            std::string key = next.cluster_key();
            if (visited.insert(key).second) frontier.push_back(std::move(next));
        }
    }
    result.seeds_visited = static_cast<int>(visited.size());
    return result;
}

bool MainTheoremReport::ok() const
{
    return Int(seeds_visited) == expected_seeds && variables_found == expected_variables &&
           missing.empty() && extra.empty() && sign_only.empty() &&
           polynomiality_failures.empty();
}

MainTheoremReport verify_main_theorem(const DrhArray& array)
{
    MainTheoremReport report;
    report.path = array.path().word().empty() ? "(empty)" : array.path().word();
    ExplorationResult explored = enumerate_cluster_variables(array);
    report.seeds_visited = explored.seeds_visited;
    report.expected_seeds = catalan(array.length() + 2);
    report.polynomiality_failures = explored.polynomiality_failures;

    Staircase sc(array);
    auto fill = fill_staircase(sc);
    std::map<std::string, std::string> expected;  // canonical poly -> cell
    for (const auto& [cell, poly] : fill) {
        std::ostringstream name;
        name << "(" << cell.i << "," << cell.j << ")";
        expected.emplace(poly.str(), name.str());
    }
    report.expected_variables = expected.size();
    report.variables_found = explored.variables.size();

    for (const auto& [key, cell] : expected) {
        if (explored.variables.count(key)) {
            report.cell_of_variable[key] = cell;
        } else {
            report.missing.push_back(key);
        }
    }
    for (const auto& [key, poly] : explored.variables)
        if (!expected.count(key)) report.extra.push_back(key);

    // A variable matching only up to sign is a distinct diagnostic.
    for (auto it = report.missing.begin(); it != report.missing.end();) {
        bool matched = false;
        for (auto jt = report.extra.begin(); jt != report.extra.end(); ++jt) {
            if ((-explored.variables.at(*jt)).str() == *it) {
                report.sign_only.push_back(*it);
                report.extra.erase(jt);
                matched = true;
                break;
            }
        }
        it = matched ? report.missing.erase(it) : std::next(it);
    }
    return report;
}

namespace {

bool seeds_match_positionwise(const Seed& a, const Seed& b, std::string* why)
{
    if (a.quiver.size() != b.quiver.size()) {
        if (why) *why = "vertex count differs";
        return false;
    }
    for (int v = 0; v < a.quiver.size(); ++v) {
        if (!(a.vars[v] == b.vars[v])) {
            if (why) *why = "variable differs at vertex " + std::to_string(v);
            return false;
        }
    }
    auto mut = a.quiver.mutable_vertices();
    for (int u : mut)
        for (int v : mut)
            if (a.quiver.arrow(u, v) != b.quiver.arrow(u, v)) {
                if (why)
                    *why = "mutable arrow differs between " + std::to_string(u) + " and " +
                           std::to_string(v);
                return false;
            }
    for (int u : mut) {
        if (!(frozen_coefficient(a, u) == frozen_coefficient(b, u))) {
            if (why) {
                *why = "frozen coefficient differs at vertex " + std::to_string(u) + ": " +
                       frozen_coefficient(a, u).str() + " vs " + frozen_coefficient(b, u).str();
            }
            return false;
        }
    }
    return true;
}

// Checks the in-/out-mutation transformation laws at a mutation at vertex a.
void check_fc_laws(const Seed& before, const Seed& after, int a, WormQuiverReport& report)
{
    auto frozen_all_out = [&](int v) {
        for (int f : before.quiver.frozen_vertices())
            if (before.quiver.arrow(v, f) < 0) return false;
        return true;
    };
    auto frozen_all_in = [&](int v) {
        for (int f : before.quiver.frozen_vertices())
            if (before.quiver.arrow(v, f) > 0) return false;
        return true;
    };
    for (int b : before.quiver.mutable_vertices()) {
        if (b == a) continue;
        int arr = before.quiver.arrow(b, a);
        bool in_case = arr == 1 && frozen_all_out(a);    // single arrow b -> a
        bool out_case = arr == -1 && frozen_all_in(a);   // single arrow a -> b
        if (!in_case && !out_case) continue;
        ++report.fc_law_checks;
        FrozenCoefficient fa = frozen_coefficient(before, a);
        FrozenCoefficient fb = frozen_coefficient(before, b);
        FrozenCoefficient fa2 = frozen_coefficient(after, a);
        FrozenCoefficient fb2 = frozen_coefficient(after, b);
        if (!(fa2 == fa.inverse()))
            report.fc_law_failures.push_back("fc at mutated vertex not inverted");
        if (!(fb2 == fa * fb))
            report.fc_law_failures.push_back("fc at neighbor not multiplied by fc(a)");
    }
}

}  // namespace

WormQuiverReport verify_worm_quivers(const DrhArray& array)
{
    WormQuiverReport report;
    report.path = array.path().word().empty() ? "(empty)" : array.path().word();
    Staircase sc(array);
    auto fill = fill_staircase(sc);
    InitialSeed init = initial_quiver(array);

    std::map<std::string, Seed> derived;
    Worm w0 = sc.initial_worm();
    derived.emplace(worm_key(w0), init.seed);
    std::deque<Worm> frontier{w0};
    while (!frontier.empty()) {
        Worm w = std::move(frontier.front());
        frontier.pop_front();
        const Seed seed = derived.at(worm_key(w));
        for (int k = 0; k <= sc.length(); ++k) {
            if (!sc.op_applicable(w, k)) continue;
            Worm w2 = sc.worm_operation(w, k);
            Seed s2 = mutate(seed, k);
            check_fc_laws(seed, s2, k, report);
            auto [it, fresh] = derived.emplace(worm_key(w2), s2);
            if (fresh) {
                frontier.push_back(std::move(w2));
            } else {
                std::string why;
                if (!seeds_match_positionwise(it->second, s2, &why))
                    report.mismatches.push_back("path-dependent seed at worm " + worm_key(w2) +
                                                ": " + why);
            }
        }
    }

    auto worms = sc.all_worms();
    report.worms_total = static_cast<int>(worms.size());
    for (const Worm& w : worms) {
        auto it = derived.find(worm_key(w));
        if (it == derived.end()) continue;
        ++report.worms_reached;
        Seed proposed = sc.propose_worm_quiver(w, fill);
        std::string why;
        if (!seeds_match_positionwise(it->second, proposed, &why))
            report.mismatches.push_back("worm " + worm_key(w) + ": " + why);
    }
    return report;
}

CompatReport verify_fc_compatibility(const DrhArray& array)
{
    CompatReport report;
    Staircase sc(array);
    auto fill = fill_staircase(sc);
    auto worms = sc.all_worms();

    auto indexed = [&](const Worm& w, const std::vector<SCell>& pattern) -> int {
        // position of pattern start when pattern occurs consecutively in w
        for (size_t k = 0; k + pattern.size() <= w.size(); ++k) {
            bool match = true;
            for (size_t t = 0; t < pattern.size(); ++t)
                if (!(w[k + t] == pattern[t])) {
                    match = false;
                    break;
                }
            if (match) return static_cast<int>(k);
        }
        return -1;
    };
    auto fc_after_mutation = [&](const Worm& w, int mutate_pos, SCell at) -> FrozenCoefficient {
        Seed s = mutate(sc.propose_worm_quiver(w, fill), mutate_pos);
        Worm w2 = sc.worm_operation(w, mutate_pos);
        for (size_t k = 0; k < w2.size(); ++k)
            if (w2[k] == at) return frozen_coefficient(s, static_cast<int>(k));
        throw std::logic_error("verify_fc_compatibility: cell left the worm");
    };

    int n = sc.n();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // cells c[r][c] of a 3x3 square, matrix convention
            auto cell = [&](int r, int c) { return sc.canon(i + c - 1, j + r - 1); };
            bool interior = true;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    if (!sc.in_band(cell(r, c))) interior = false;
            bool boundary = !sc.in_band(cell(2, 0));
            if (boundary) {
                boundary = true;
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c)
                        if (!(r == 2 && c == 0) && !sc.in_band(cell(r, c))) boundary = false;
            }
            if (!interior && !boundary) continue;

            std::vector<SCell> pat1{cell(1, 0), cell(1, 1), cell(0, 1), cell(0, 2)};
            std::vector<SCell> pat2 = interior
                                          ? std::vector<SCell>{cell(2, 0), cell(2, 1), cell(1, 1),
                                                               cell(1, 2)}
                                          : std::vector<SCell>{cell(2, 1), cell(1, 1), cell(1, 2)};
            std::vector<std::pair<const Worm*, int>> w1s, w2s;
            for (const Worm& w : worms) {
                int k1 = indexed(w, pat1);
                if (k1 >= 0) w1s.push_back({&w, k1});
                int k2 = indexed(w, pat2);
                if (interior ? k2 >= 0 : k2 == 0) w2s.push_back({&w, k2});
            }
            if (w1s.empty() || w2s.empty()) continue;
            interior ? ++report.interior_cases : ++report.boundary_cases;

            std::vector<FrozenCoefficient> values;
            for (auto [w, k] : w1s) values.push_back(fc_after_mutation(*w, k + 2, cell(1, 1)));
            for (auto [w, k] : w2s) {
                int mut_pos = interior ? k + 1 : 0;  // bend at c32, or worm start
                values.push_back(fc_after_mutation(*w, mut_pos, cell(1, 1)));
            }
            for (size_t t = 1; t < values.size(); ++t)
                if (!(values[t] == values[0])) {
                    std::ostringstream why;
                    why << "square at (" << i << "," << j << "): " << values[t].str()
                        << " != " << values[0].str();
                    report.failures.push_back(why.str());
                    break;
                }
        }
    }
    return report;
}

}  // namespace drh
