#include "drh/wiring.hpp"

#include "drh/polymatrix.hpp"

#include <doctest.h>

using namespace drh;

namespace {

Polynomial var(int i, int j) { return Polynomial::variable({i, j}); }

std::vector<std::string> balanced_words(int max_len)
{
    std::vector<std::string> out{""};
    for (int l = 2; l <= max_len; l += 2)
        for (int w = 0; w < (1 << l); ++w) {
            std::string s;
            for (int k = 0; k < l; ++k) s += (w >> k) & 1 ? 'N' : 'E';
            if (std::count(s.begin(), s.end(), 'N') == l / 2) out.push_back(s);
        }
    return out;
}

}  // namespace

TEST_CASE("diagram validity means one crossing per same-color pair")
{
    DoubleWiringDiagram good(3, {{Color::Blue, 1},
                                 {Color::Red, 1},
                                 {Color::Red, 2},
                                 {Color::Red, 1},
                                 {Color::Blue, 2},
                                 {Color::Blue, 1}});
    CHECK(good.valid());
    DoubleWiringDiagram repeated(3, {{Color::Red, 1},
                                     {Color::Red, 1},
                                     {Color::Red, 2},
                                     {Color::Blue, 1},
                                     {Color::Blue, 2},
                                     {Color::Blue, 1}});
    CHECK(!repeated.valid());
    DoubleWiringDiagram short_word(3, {{Color::Red, 1}, {Color::Blue, 1}});
    CHECK(!short_word.valid());
}

TEST_CASE("chamber labels")
{
    DoubleWiringDiagram d(3, {{Color::Blue, 1},
                              {Color::Red, 1},
                              {Color::Red, 2},
                              {Color::Red, 1},
                              {Color::Blue, 2},
                              {Color::Blue, 1}});
    auto chs = chambers(d);
    for (const Chamber& c : chs) {
        CHECK(c.red.size() == static_cast<size_t>(c.level));
        CHECK(c.blue.size() == static_cast<size_t>(c.level));
    }
    // the top chamber carries the full determinant
    bool found_top = false;
    for (const Chamber& c : chs)
        if (c.level == 3) {
            found_top = true;
            PolyMatrix x(3, 3);
            for (int r = 0; r < 3; ++r)
                for (int col = 0; col < 3; ++col) x.at(r, col) = var(col + 1, 3 - r);
            CHECK(chamber_minor(c) == poly_det(x));
        }
    CHECK(found_top);
    // level-1 chambers are single entries a[red, blue]
    for (const Chamber& c : chs)
        if (c.level == 1) CHECK(chamber_minor(c) == var(c.red[0], c.blue[0]));
    // labels grow by one index per level at a common position
    for (const Chamber& low : chs)
        for (const Chamber& high : chs) {
            if (high.level != low.level + 1) continue;
            int lo = std::max(low.seg_begin, high.seg_begin);
            int hi = std::min(low.seg_end, high.seg_end);
            if (lo > hi) continue;  // disjoint extents
            CHECK(std::includes(high.red.begin(), high.red.end(), low.red.begin(), low.red.end()));
            CHECK(std::includes(high.blue.begin(), high.blue.end(), low.blue.begin(),
                                low.blue.end()));
        }
}

TEST_CASE("a single red crossing contributes one arrow, left to right")
{
    DoubleWiringDiagram d(2, {{Color::Red, 1}, {Color::Blue, 1}});
    REQUIRE(d.valid());
    WiringSeed ws = wiring_quiver(d);
    // locate the chambers flanking the red crossing (index 0) at level 1
    int left = -1, right = -1;
    for (size_t v = 0; v < ws.chamber_list.size(); ++v) {
        const Chamber& c = ws.chamber_list[v];
        if (c.level != 1) continue;
        if (c.seg_end == 0) left = static_cast<int>(v);
        if (c.seg_begin == 1 && c.seg_end == 1) right = static_cast<int>(v);
    }
    REQUIRE(left >= 0);
    REQUIRE(right >= 0);
    CHECK(ws.seed.quiver.arrow(left, right) == 1);
}

TEST_CASE("every mutable chamber exchange stays polynomial")
{
    for (const auto& word : balanced_words(4)) {
        DrhArray a{LatticePath(word)};
        for (const auto& choice : all_correspondence_choices(a)) {
            DoubleWiringDiagram d = drh_to_wiring(a, choice);
            WiringSeed ws = wiring_quiver(d);
            for (int v : ws.seed.quiver.mutable_vertices()) {
                Seed t = mutate(ws.seed, v);
                CHECK(t.vars[v].is_polynomial());
            }
        }
    }
}

TEST_CASE("a bottom chamber mutation realizes the paper's boxed identity")
{
    // For the EN diagram, mutating the chamber holding a22 must produce the
    // 2x2 minor on rows {1,2}, columns {1,3}.
    DrhArray a{LatticePath("EN")};
    auto choice = all_correspondence_choices(a).front();
    WiringSeed ws = wiring_quiver(drh_to_wiring(a, choice));
    int target = -1;
    for (size_t v = 0; v < ws.chamber_list.size(); ++v)
        if (!ws.seed.quiver.is_frozen(static_cast<int>(v)) &&
            ws.seed.vars[v] == RationalFunction(var(2, 2)))
            target = static_cast<int>(v);
    REQUIRE(target >= 0);
    Seed t = mutate(ws.seed, target);
    CHECK(t.vars[target] ==
          RationalFunction(var(1, 2) * var(3, 1) - var(3, 2) * var(1, 1)));
}

TEST_CASE("the bottom two rows encode the extended worm and the skeleton")
{
    DrhArray a{LatticePath("ENNE")};
    auto choice = all_correspondence_choices(a).front();
    DoubleWiringDiagram d = drh_to_wiring(a, choice);
    std::vector<Color> bottom;
    int second_red = 0, second_blue = 0;
    for (const Crossing& c : d.crossings()) {
        if (c.level == 1) bottom.push_back(c.color);
        if (c.level == 2) (c.color == Color::Red ? second_red : second_blue)++;
    }
    // extended worm N E E N N E for the phase bug path of ENNE
    std::vector<Color> expected{Color::Blue, Color::Red,  Color::Red,
                                Color::Blue, Color::Blue, Color::Red};
    CHECK(bottom == expected);
    CHECK(second_red == 2);
    CHECK(second_blue == 2);
    CHECK(d.strands() == 4);
    int red_total = 0;
    for (const Crossing& c : d.crossings())
        if (c.color == Color::Red) ++red_total;
    CHECK(red_total == 6);
}

TEST_CASE("between same-colored bottom crossings sits a same-colored second-row crossing")
{
    for (const auto& word : balanced_words(4)) {
        DrhArray a{LatticePath(word)};
        for (const auto& choice : all_correspondence_choices(a))
            CHECK(second_row_separation_holds(drh_to_wiring(a, choice)));
    }
}

TEST_CASE("restricting the wiring seed to the bottom row recovers the array seed")
{
    SUBCASE("ENNE and every balanced path up to length four, all choices")
    {
        for (const auto& word : balanced_words(4)) {
            auto r = check_drh_wiring_equivalence(LatticePath(word));
            CHECK(r.ok());
            CHECK(r.choices >= 1);
        }
    }
    SUBCASE("unbalanced paths are extended first")
    {
        auto e = check_drh_wiring_equivalence(LatticePath("E"));
        CHECK(e.ok());
        CHECK(e.balanced == "EN");
        auto nne = check_drh_wiring_equivalence(LatticePath("NNE"));
        CHECK(nne.ok());
        CHECK(nne.balanced == "NNEE");
    }
}

TEST_CASE("renderer shows one line per level")
{
    DrhArray a{LatticePath("EN")};
    auto choice = all_correspondence_choices(a).front();
    std::string r = drh_to_wiring(a, choice).render();
    CHECK(r.find("level 1:") != std::string::npos);
    CHECK(r.find("level 2:") != std::string::npos);
    CHECK(r.find('R') != std::string::npos);
    CHECK(r.find('B') != std::string::npos);
}
