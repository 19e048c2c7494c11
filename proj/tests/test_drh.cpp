#include "drh/drh_array.hpp"

#include "drh/staircase.hpp"
#include "drh/explore.hpp"

#include <doctest.h>

#include <deque>
#include <map>
#include <random>

using namespace drh;

namespace {

Polynomial var(int i, int j) { return Polynomial::variable({i, j}); }

std::string random_word(std::mt19937& rng, int len)
{
    std::uniform_int_distribution<int> coin(0, 1);
    std::string s;
    for (int k = 0; k < len; ++k) s += coin(rng) ? 'N' : 'E';
    return s;
}

}  // namespace

TEST_CASE("lattice path basics")
{
    LatticePath p("NNEN");
    CHECK(p.length() == 4);
    CHECK(p.count_n() == 3);
    CHECK(p.count_e() == 1);
    CHECK(p.labeled() == "N^1N^2E^3N^4");
    CHECK(p.transpose() == LatticePath("ENEE"));
    CHECK(p.transpose().transpose() == p);
    CHECK_THROWS(LatticePath("NX"));
}

TEST_CASE("cell counts")
{
    CHECK(DrhArray{LatticePath("")}.cells().size() == 4);
    CHECK(DrhArray{LatticePath("NNE")}.cells().size() == 10);
    CHECK(DrhArray{LatticePath("NNEN")}.cells().size() == 12);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> len(0, 10);
    for (int t = 0; t < 50; ++t) {
        int l = len(rng);
        DrhArray a{LatticePath(random_word(rng, l))};
        CHECK(a.cells().size() == static_cast<size_t>(2 * l + 4));
    }
}

TEST_CASE("the NNE array is the ten cells of its figure")
{
    DrhArray a{LatticePath("NNE")};
    std::set<Cell> expected{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3},
                            {2, 3}, {3, 3}, {1, 4}, {2, 4}, {3, 4}};
    CHECK(a.cells() == expected);
    CHECK(a.p() == 3);
    CHECK(a.q() == 4);
    CHECK(a.corner_ur() == Cell{3, 4});
}

TEST_CASE("bug path reproduces the figures")
{
    SUBCASE("NNE visits a12 a22 a23 a24")
    {
        auto cells = bug_path(DrhArray{LatticePath("NNE")});
        std::vector<Cell> expected{{1, 2}, {2, 2}, {2, 3}, {2, 4}};
        CHECK(cells == expected);
    }
    SUBCASE("E visits a12 a22")
    {
        auto cells = bug_path(DrhArray{LatticePath("E")});
        std::vector<Cell> expected{{1, 2}, {2, 2}};
        CHECK(cells == expected);
    }
    SUBCASE("the empty path leaves the bug where it started")
    {
        auto cells = bug_path(DrhArray{LatticePath("")});
        CHECK(cells == std::vector<Cell>{{1, 2}});
    }
    SUBCASE("l+1 cells, monotone steps")
    {
        std::mt19937 rng(11);
        for (int t = 0; t < 60; ++t) {
            DrhArray a{LatticePath(random_word(rng, t % 9))};
            auto cells = bug_path(a);
            CHECK(cells.size() == static_cast<size_t>(a.length() + 1));
            for (size_t k = 0; k + 1 < cells.size(); ++k) {
                bool east = cells[k + 1].x == cells[k].x + 1 && cells[k + 1].y == cells[k].y;
                bool north = cells[k + 1].y == cells[k].y + 1 && cells[k + 1].x == cells[k].x;
                CHECK(east != north);
            }
        }
    }
}

TEST_CASE("frozen minors")
{
    DrhArray a{LatticePath("NNEN")};
    auto ds = a.frozen_minors();
    REQUIRE(ds.size() == 7);  // Delta_0 .. Delta_6
    CHECK(ds[0] == var(1, 1));
    CHECK(ds[1] == var(1, 2) * var(2, 1) - var(2, 2) * var(1, 1));
    CHECK(ds[5] == var(2, 5) * var(3, 4) - var(3, 5) * var(2, 4));
    CHECK(ds[6] == var(3, 5));
}

TEST_CASE("the E-path initial quiver is the figure's arrow set")
{
    InitialSeed init = initial_quiver(DrhArray{LatticePath("E")});
    const Seed& s = init.seed;
    REQUIRE(init.mutable_ids.size() == 2);
    int a12 = init.mutable_ids[0], a22 = init.mutable_ids[1];
    int d0 = init.frozen_minor_ids[0];  // a11
    int d1 = init.frozen_minor_ids[1];
    int d2 = init.frozen_minor_ids[2];
    int d3 = init.frozen_minor_ids[3];  // a32
    CHECK(s.vars[a12] == RationalFunction(var(1, 2)));
    CHECK(s.vars[d3] == RationalFunction(var(3, 2)));
    CHECK(s.quiver.arrow(d1, a12) == 1);
    CHECK(s.quiver.arrow(a12, d0) == 1);
    CHECK(s.quiver.arrow(d2, a22) == 1);
    CHECK(s.quiver.arrow(a22, d3) == 1);
    CHECK(s.quiver.arrow(a12, a22) == 1);
    CHECK(s.quiver.arrow(a22, d1) == 1);
    CHECK(s.quiver.arrows().size() == 6);
}

TEST_CASE("the NNEN initial quiver matches its figure")
{
    InitialSeed init = initial_quiver(DrhArray{LatticePath("NNEN")});
    const Seed& s = init.seed;
    REQUIRE(init.mutable_ids.size() == 5);
    // mutable chain a12 -> a22 <- a23 <- a24 <- a25
    int m[5];
    for (int k = 0; k < 5; ++k) m[k] = init.mutable_ids[k];
    CHECK(s.quiver.arrow(m[0], m[1]) == 1);
    CHECK(s.quiver.arrow(m[2], m[1]) == 1);
    CHECK(s.quiver.arrow(m[3], m[2]) == 1);
    CHECK(s.quiver.arrow(m[4], m[3]) == 1);
    auto f = [&](int i) { return init.frozen_minor_ids[i]; };
    CHECK(s.quiver.arrow(f(1), m[0]) == 1);
    CHECK(s.quiver.arrow(m[0], f(0)) == 1);
    CHECK(s.quiver.arrow(m[1], f(2)) == 1);
    CHECK(s.quiver.arrow(f(2), m[2]) == 1);
    CHECK(s.quiver.arrow(m[2], f(3)) == 1);
    CHECK(s.quiver.arrow(f(4), m[3]) == 1);
    CHECK(s.quiver.arrow(m[3], f(5)) == 1);
    CHECK(s.quiver.arrow(f(5), m[4]) == 1);
    CHECK(s.quiver.arrow(m[4], f(6)) == 1);
    CHECK(s.quiver.arrows().size() == 13);
}

TEST_CASE("the five determinantal identities hold")
{
    CHECK(check_identities_D1_D5());
}

TEST_CASE("substituting zero into an identity keeps it exact")
{
    // D2 with b = 0: 0 = a |0 c; e f| + c |a 0; d e| collapses consistently.
    Polynomial a = var(1, 1), c = var(3, 1), d = var(4, 1), e = var(5, 1), f = var(6, 1);
    Polynomial zero;
    Polynomial lhs = zero * (a * f - c * d);
    Polynomial rhs = a * (zero * f - c * e) + c * (a * e - zero * d);
    CHECK(lhs == rhs);
}

TEST_CASE("walking the bug path down the first row by mutation")
{
    // For a straight E-path, mutating at the worm cells left to right turns
    // a_{i,2} into a_{i+1,1} one cell at a time.
    InitialSeed init = initial_quiver(DrhArray{LatticePath("EEE")});
    Seed s = init.seed;
    for (int k = 0; k < 3; ++k) {
        s = mutate(s, init.mutable_ids[k]);
        CHECK(s.vars[init.mutable_ids[k]] == RationalFunction(var(k + 2, 1)));
    }
}

TEST_CASE("every worm inside the array carries the cell variables")
{
    // Worm operations that keep the worm inside the embedded array assign to
    // each visited cell exactly its indeterminate, for all paths of length
    // up to five.
    std::vector<std::string> words{""};
    for (int l = 1; l <= 5; ++l)
        for (int w = 0; w < (1 << l); ++w) {
            std::string s;
            for (int k = 0; k < l; ++k) s += (w >> k) & 1 ? 'N' : 'E';
            words.push_back(s);
        }
    for (const auto& word : words) {
        DrhArray a{LatticePath(word)};
        Staircase sc(a);
        InitialSeed init = initial_quiver(a);
        auto inside = [&](const Worm& w) {
            for (const SCell& c : w)
                if (sc.cell_class(c) != CellClass::Drh) return false;
            return true;
        };
        std::map<std::string, Seed> seen;
        std::deque<Worm> frontier;
        Worm w0 = sc.initial_worm();
        seen.emplace(worm_key(w0), init.seed);
        // local key helper
        frontier.push_back(w0);
        while (!frontier.empty()) {
            Worm w = frontier.front();
            frontier.pop_front();
            Seed seed = seen.at(worm_key(w));
            for (int k = 0; k <= sc.length(); ++k) {
                if (!sc.op_applicable(w, k)) continue;
                Worm w2 = sc.worm_operation(w, k);
                if (!inside(w2)) continue;
                std::string key = worm_key(w2);
                if (seen.count(key)) continue;
                Seed s2 = mutate(seed, k);
                // the mutated vertex carries the indeterminate of its cell
                Cell cell = sc.drh_cell(w2[k]);
                CHECK(s2.vars[k] == RationalFunction(var(cell.x, cell.y)));
                seen.emplace(key, std::move(s2));
                frontier.push_back(std::move(w2));
            }
        }
        CHECK(seen.size() >= 1);
    }
}

TEST_CASE("array rendering shows the labels")
{
    std::string r = DrhArray{LatticePath("NNE")}.render();
    CHECK(r.find("a1,1") != std::string::npos);
    CHECK(r.find("a3,4") != std::string::npos);
    CHECK(r.find("a3,1") == std::string::npos);
}
