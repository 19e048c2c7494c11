#include "drh/staircase.hpp"

#include "drh/standardize.hpp"

#include <doctest.h>

#include <deque>
#include <map>
#include <set>

using namespace drh;

namespace {

std::vector<std::string> all_words(int max_len, int min_len = 0)
{
    std::vector<std::string> out;
    if (min_len == 0) out.push_back("");
    for (int l = std::max(1, min_len); l <= max_len; ++l)
        for (int w = 0; w < (1 << l); ++w) {
            std::string s;
            for (int k = 0; k < l; ++k) s += (w >> k) & 1 ? 'N' : 'E';
            out.push_back(s);
        }
    return out;
}

}  // namespace

TEST_CASE("band counts and the class partition")
{
    for (const auto& word : all_words(6)) {
        DrhArray a{LatticePath(word)};
        Staircase sc(a);
        int l = a.length(), n = l + 4;
        auto cells = sc.band_cells();
        CHECK(cells.size() == static_cast<size_t>((l + 1) * (l + 4)));
        int drh = 0, drht = 0, w = 0, wt = 0;
        for (const SCell& c : cells) {
            switch (sc.cell_class(c)) {
                case CellClass::Drh: ++drh; break;
                case CellClass::DrhT: ++drht; break;
                case CellClass::W: ++w; break;
                case CellClass::WT: ++wt; break;
                default: FAIL("band cell unclassified");
            }
        }
        CHECK(drh == 2 * l + 2);
        CHECK(drht == 2 * l + 2);
        CHECK(w == l * (l + 1) / 2);
        CHECK(wt == w);
        CHECK(drh + drht + w + wt == n * (l + 1));
    }
}

TEST_CASE("each nonempty subword appears exactly once as a subskeleton label")
{
    for (const auto& word : all_words(8, 7)) {
        DrhArray a{LatticePath(word)};
        Staircase sc(a);
        int l = a.length();
        std::set<std::pair<int, int>> seen;
        for (const SCell& c : sc.band_cells()) {
            if (sc.cell_class(c) != CellClass::W) continue;
            auto rs = sc.subsk(c);
            CHECK(rs.first <= rs.second);
            CHECK(seen.insert(rs).second);
        }
        CHECK(seen.size() == static_cast<size_t>(l * (l + 1) / 2));
    }
}

TEST_CASE("the NNEN subskeleton table matches its figure")
{
    DrhArray a{LatticePath("NNEN")};
    Staircase sc(a);
    // (board x, board y) -> labeled word, from the figure's 10 cells
    std::map<std::pair<int, int>, std::pair<int, int>> expected{
        {{1, 1}, {3, 3}}, {{1, 2}, {1, 3}}, {{1, 3}, {2, 3}}, {{2, 1}, {3, 4}},
        {{2, 2}, {1, 4}}, {{2, 3}, {2, 4}}, {{2, 4}, {4, 4}}, {{3, 2}, {1, 2}},
        {{3, 3}, {2, 2}}, {{4, 2}, {1, 1}},
    };
    int count = 0;
    for (int x = 1; x <= 4; ++x)
        for (int y = 1; y <= 4; ++y) {
            if (sc.row_label(y) > sc.col_label(x)) {
                CHECK(!expected.count({x, y}));
                continue;
            }
            ++count;
            REQUIRE(expected.count({x, y}));
            CHECK(sc.subsk(sc.w_cell(x, y)) == expected.at({x, y}));
        }
    CHECK(count == 10);
}

TEST_CASE("the NENEEN subskeleton table matches its figure")
{
    DrhArray a{LatticePath("NENEEN")};
    Staircase sc(a);
    // spot checks from the 21-cell figure
    CHECK(sc.subsk(sc.w_cell(1, 3)) == std::pair<int, int>{2, 2});     // E2
    CHECK(sc.subsk(sc.w_cell(1, 4)) == std::pair<int, int>{1, 2});     // N1 E2
    CHECK(sc.subsk(sc.w_cell(2, 2)) == std::pair<int, int>{4, 4});     // E4
    CHECK(sc.subsk(sc.w_cell(2, 3)) == std::pair<int, int>{2, 4});     // E2 N3 E4
    CHECK(sc.subsk(sc.w_cell(2, 4)) == std::pair<int, int>{1, 4});     // N1 E2 N3 E4
    CHECK(sc.subsk(sc.w_cell(2, 5)) == std::pair<int, int>{3, 4});     // N3 E4
    CHECK(sc.subsk(sc.w_cell(3, 1)) == std::pair<int, int>{5, 5});     // E5
    CHECK(sc.subsk(sc.w_cell(3, 4)) == std::pair<int, int>{1, 5});     // NENEE
    CHECK(sc.subsk(sc.w_cell(4, 4)) == std::pair<int, int>{1, 6});     // the full path
    CHECK(sc.subsk(sc.w_cell(4, 6)) == std::pair<int, int>{6, 6});     // N6
    CHECK(sc.subsk(sc.w_cell(4, 5)) == std::pair<int, int>{3, 6});     // N3 E4 E5 N6
    CHECK(sc.subsk(sc.w_cell(5, 3)) == std::pair<int, int>{2, 3});     // E2 N3
    CHECK(sc.subsk(sc.w_cell(5, 4)) == std::pair<int, int>{1, 3});     // N1 E2 N3
    CHECK(sc.subsk(sc.w_cell(5, 5)) == std::pair<int, int>{3, 3});     // N3
    CHECK(sc.subsk(sc.w_cell(6, 4)) == std::pair<int, int>{1, 1});     // N1
}

TEST_CASE("no rectangle inside the band mixes the array with its transpose")
{
    for (const auto& word : all_words(6, 1)) {
        DrhArray a{LatticePath(word)};
        Staircase sc(a);
        int n = sc.n();
        for (int i0 = 0; i0 < n; ++i0)
            for (int j0 = 0; j0 < n; ++j0)
                for (int w = 1; w <= n; ++w)
                    for (int h = 1; h <= n; ++h) {
                        bool inside = true, has_drh = false, has_drht = false;
                        for (int di = 0; di < w && inside; ++di)
                            for (int dj = 0; dj < h; ++dj) {
                                SCell c = sc.canon(i0 + di, j0 + dj);
                                if (!sc.in_band(c)) {
                                    inside = false;
                                    break;
                                }
                                CellClass cls = sc.cell_class(c);
                                has_drh |= cls == CellClass::Drh;
                                has_drht |= cls == CellClass::DrhT;
                            }
                        if (inside) CHECK(!(has_drh && has_drht));
                    }
    }
}

TEST_CASE("worms")
{
    DrhArray a{LatticePath("NNE")};
    Staircase sc(a);
    SUBCASE("the initial worm is the embedded bug path")
    {
        Worm w = sc.initial_worm();
        Worm expected{{1, 6}, {2, 6}, {2, 5}, {2, 4}};  // a12 a22 a23 a24 mod 7
        CHECK(w == expected);
        CHECK(sc.is_worm(w));
    }
    SUBCASE("all worms: one start per diagonal cell, one word per step set")
    {
        for (const auto& word : all_words(6, 5)) {
            Staircase s2(DrhArray{LatticePath(word)});
            auto worms = s2.all_worms();
            CHECK(worms.size() == static_cast<size_t>(s2.n() * (1 << s2.length())));
            for (const Worm& w : worms) CHECK(s2.is_worm(w));
        }
    }
    SUBCASE("operating on the NNE initial worm at the final vertex moves (2,4) to (3,5)")
    {
        Worm w = sc.initial_worm();
        Worm w2 = sc.worm_operation(w, 3);
        CHECK(w2[3] == SCell{3, 5});
        // continuing at the same diagonal moves (2,5) to (3,6)
        Worm w3 = sc.worm_operation(w2, 2);
        CHECK(w3[2] == SCell{3, 6});
    }
    SUBCASE("a second operation at an NE-bend undoes the first")
    {
        for (const Worm& w : sc.all_worms())
            for (int k = 0; k <= sc.length(); ++k) {
                if (sc.classify(w, k) != WormPos::BendNE) continue;
                Worm w2 = sc.worm_operation(w, k);
                CHECK(sc.classify(w2, k) == WormPos::BendEN);
                CHECK(sc.worm_operation(w2, k) == w);
            }
    }
    SUBCASE("interior non-bends reject the operation")
    {
        Worm w{{1, 6}, {2, 6}, {3, 6}, {3, 5}};  // straight run then а bend
        REQUIRE(sc.is_worm(w));
        CHECK(sc.classify(w, 1) == WormPos::StraightH);
        CHECK_THROWS(sc.worm_operation(w, 1));
    }
}

TEST_CASE("sweeping a row worm shifts it one diagonal step down")
{
    for (const auto& word : all_words(5, 1)) {
        Staircase sc{DrhArray{LatticePath(word)}};
        int l = sc.length();
        Worm w;
        for (int k = 0; k <= l; ++k) w.push_back(sc.canon(2 + k, 0));
        REQUIRE(sc.is_worm(w));
        Worm cur = w;
        for (int k = 0; k <= l; ++k) {
            REQUIRE(sc.op_applicable(cur, k));
            cur = sc.worm_operation(cur, k);
        }
        for (int k = 0; k <= l; ++k) CHECK(cur[k] == sc.canon(w[k].i + 1, w[k].j + 1));
    }
}

TEST_CASE("worms are triangulations; operations are diagonal flips")
{
    SUBCASE("the NNE initial worm gives the heptagon triangulation of the figure")
    {
        Staircase sc{DrhArray{LatticePath("NNE")}};
        Triangulation t = sc.worm_to_triangulation(sc.initial_worm());
        Triangulation expected{{1, 6}, {2, 6}, {2, 5}, {2, 4}};
        CHECK(t == expected);
    }
    for (const auto& word : all_words(4)) {
        Staircase sc{DrhArray{LatticePath(word)}};
        int n = sc.n(), l = sc.length();
        for (const Worm& w : sc.all_worms()) {
            Triangulation t = sc.worm_to_triangulation(w);
            CHECK(t.size() == static_cast<size_t>(l + 1));
            for (auto it = t.begin(); it != t.end(); ++it) {
                // not a polygon edge
                CHECK(it->second - it->first != 1);
                CHECK(it->second - it->first != n - 1);
                for (auto jt = std::next(it); jt != t.end(); ++jt)
                    CHECK(!diagonals_cross(*it, *jt, n));
            }
            for (int k = 0; k <= l; ++k) {
                if (!sc.op_applicable(w, k)) continue;
                Triangulation flipped = flip_diagonal(t, sc.diagonal_of(w[k]), n);
                CHECK(flipped == sc.worm_to_triangulation(sc.worm_operation(w, k)));
            }
        }
    }
}

TEST_CASE("worm graph is connected and counts monotone paths per start")
{
    for (const auto& word : all_words(6, 5)) {
        Staircase sc{DrhArray{LatticePath(word)}};
        int l = sc.length(), n = sc.n();
        std::set<std::string> visited;
        auto key = [](const Worm& w) {
            std::string s;
            for (const SCell& c : w) s += std::to_string(c.i) + "," + std::to_string(c.j) + ";";
            return s;
        };
        std::deque<Worm> frontier{sc.initial_worm()};
        visited.insert(key(frontier.front()));
        while (!frontier.empty()) {
            Worm w = frontier.front();
            frontier.pop_front();
            for (int k = 0; k <= l; ++k) {
                if (!sc.op_applicable(w, k)) continue;
                Worm w2 = sc.worm_operation(w, k);
                if (visited.insert(key(w2)).second) frontier.push_back(w2);
            }
        }
        CHECK(visited.size() == static_cast<size_t>(n * (1 << l)));
        // worms through a fixed bottom cell = monotone step words
        int through_start = 0;
        SCell start = sc.initial_worm()[0];
        for (const Worm& w : sc.all_worms())
            if (w[0] == start) ++through_start;
        CHECK(through_start == (1 << l));
    }
}

TEST_CASE("step-1 points carry their frozen minors")
{
    DrhArray a{LatticePath("NNEN")};
    Staircase sc(a);
    // L_3 = (1,3) sits at vertex (1, -3); its transpose carries the same index
    CHECK(sc.step1_index({1, sc.mod(-3)}) == 3);
    CHECK(sc.step1_index({sc.mod(-3), 1}) == 3);
    CHECK(sc.step1_index({0, 0}) == 0);
    CHECK(sc.step1_index({3, 3}) == 6);  // p = 3, Delta_{l+2}
    CHECK(!sc.step1_index({2, 2}).has_value());
    auto fc = sc.lattice_fc({1, sc.mod(-3)});
    CHECK(!fc.special);
    CHECK(fc.value.str() == "3");
}

TEST_CASE("the NENNEE lattice coefficients reproduce the figure verbatim")
{
    DrhArray a{LatticePath("NENNEE")};
    Staircase sc(a);
    // label at (5+i, -j) in figure offsets (i, j)
    auto at = [&](int i, int j) { return sc.lattice_fc({sc.mod(5 + i), sc.mod(-j)}); };
    std::vector<std::tuple<int, int, std::string, bool>> golden{
        {-4, 5, "258", false}, {-3, 5, "58", false},   {0, 5, "8", false},
        {-4, 4, "25", false},  {-3, 4, "5", false},    {-2, 4, "6", false},
        {-1, 4, "7", false},   {-5, 3, "024", false},  {-4, 3, "24/3", true},
        {-3, 3, "4", false},   {-2, 3, "46/5", true},  {-1, 3, "47", false},
        {-4, 2, "2", false},   {-3, 2, "3", false},    {-2, 2, "36", false},
        {-1, 2, "357", false}, {0, 2, "358", false},   {-4, 1, "1", false},
        {-3, 1, "13/2", true}, {-2, 1, "136", false},  {-1, 1, "1357", false},
        {0, 1, "1358", false}, {1, 1, "135", false},   {-5, 0, "0", false},
        {-2, 0, "0236", false},{-1, 0, "02357", false},{0, 0, "02358", false},
        {1, 0, "0235", false}, {2, 0, "024", false},   {5, 0, "0", false},
        {-1, -1, "257", false},{0, -1, "258", false},  {1, -1, "25", false},
        {2, -1, "24/3", true}, {3, -1, "2", false},    {4, -1, "1", false},
        {0, -2, "58", false},  {1, -2, "5", false},    {2, -2, "4", false},
        {3, -2, "3", false},   {4, -2, "13/2", true},  {1, -3, "6", false},
        {2, -3, "46/5", true}, {3, -3, "36", false},   {4, -3, "136", false},
        {1, -4, "7", false},   {2, -4, "47", false},   {0, -5, "8", false},
    };
    for (const auto& [i, j, label, special] : golden) {
        FCValue fc = at(i, j);
        CHECK_MESSAGE(fc.value.str() == label, "at offset (", i, ",", j, ")");
        CHECK(fc.special == special);
    }
}

TEST_CASE("special points occur exactly at the reflex corners, twice per bend")
{
    for (const auto& word : all_words(5, 1)) {
        DrhArray a{LatticePath(word)};
        Staircase sc(a);
        int n = sc.n(), bends = 0;
        for (int t = 2; t <= a.length(); ++t)
            if (a.path().letter(t - 1) != a.path().letter(t)) ++bends;
        int specials = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool valid = true;
                for (int di = 0; di <= 1; ++di)
                    for (int dj = 0; dj <= 1; ++dj)
                        if (!sc.in_band(sc.canon(i + di, j + dj))) valid = false;
                if (!valid) continue;
                if (sc.lattice_fc({i, j}).special) ++specials;
            }
        CHECK(specials == 2 * bends);  // one per boundary side, plus mirror copies
    }
}

TEST_CASE("summary table: coefficients against determinants of the fill")
{
    for (const auto& word : all_words(5, 1)) {
        DrhArray a{LatticePath(word)};
        Staircase sc(a);
        auto fill = fill_staircase(sc);
        int n = sc.n();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool valid = true;
                for (int di = 0; di <= 1; ++di)
                    for (int dj = 0; dj <= 1; ++dj)
                        if (!sc.in_band(sc.canon(i + di, j + dj))) valid = false;
                if (!valid) continue;
                FCValue fc = sc.lattice_fc({i, j});
                Polynomial det = fill.at(sc.canon(i, j)) * fill.at(sc.canon(i + 1, j + 1)) -
                                 fill.at(sc.canon(i + 1, j)) * fill.at(sc.canon(i, j + 1));
                RationalFunction value = sc.monomial_value(fc.value);
                if (!fc.special) {
                    CHECK(fc.value.is_squarefree_monomial());
                    CHECK(value.is_polynomial());
                    CHECK(value.num() == det);
                    CHECK(det.is_homogeneous());
                } else {
                    // Delta_i Delta_{i+2} / Delta_{i+1}
                    REQUIRE(fc.value.expo.size() == 3);
                    auto it = fc.value.expo.begin();
                    auto [i0, e0] = *it++;
                    auto [i1, e1] = *it++;
                    auto [i2, e2] = *it;
                    CHECK(e0 == 1);
                    CHECK(e1 == -1);
                    CHECK(e2 == 1);
                    CHECK(i1 == i0 + 1);
                    CHECK(i2 == i0 + 2);
                    CHECK(!(value.is_polynomial() && value.num() == det));
                    CHECK(!det.is_homogeneous());
                }
            }
    }
}

TEST_CASE("renderers stay consistent with the partition")
{
    Staircase sc{DrhArray{LatticePath("NNE")}};
    Worm w = sc.initial_worm();
    std::string ascii = sc.render(&w);
    CHECK(ascii.find('D') != std::string::npos);
    CHECK(ascii.find('*') != std::string::npos);
    std::string svg = sc.render_svg();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("rect") != std::string::npos);
}
