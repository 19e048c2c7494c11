#include "drh/polymatrix.hpp"

#include <doctest.h>

#include <random>

using namespace drh;

namespace {

Polynomial c(int v) { return Polynomial::constant(v); }
Polynomial var(int i, int j) { return Polynomial::variable({i, j}); }

// Independent oracle: plain cofactor expansion along the first row.
Polynomial cofactor_det(const PolyMatrix& m)
{
    size_t n = m.rows();
    if (n == 0) return Polynomial::constant(1);
    if (n == 1) return m.at(0, 0);
    Polynomial det;
    for (size_t col = 0; col < n; ++col) {
        PolyMatrix sub(n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t cidx = 0; cidx < n; ++cidx) {
                if (cidx == col) continue;
                sub.at(r - 1, cc++) = m.at(r, cidx);
            }
        }
        Polynomial term = m.at(0, col) * cofactor_det(sub);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

PolyMatrix random_int_matrix(std::mt19937& rng, size_t rows, size_t cols, int lo = -9, int hi = 9)
{
    std::uniform_int_distribution<int> entry(lo, hi);
    PolyMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t cidx = 0; cidx < cols; ++cidx) m.at(r, cidx) = c(entry(rng));
    return m;
}

Block fresh_block(int& next)
{
    auto f = [&next]() { return var(next++, 1); };
    return Block{f(), f(), f(), f()};
}

Domino fresh_domino(int& next, bool horizontal)
{
    auto f = [&next]() { return var(next++, 1); };
    return Domino{horizontal, f(), f()};
}

}  // namespace

TEST_CASE("2x2 determinant definition")
{
    PolyMatrix m(2, 2);
    m.at(0, 0) = var(1, 1);
    m.at(0, 1) = var(2, 1);
    m.at(1, 0) = var(3, 1);
    m.at(1, 1) = var(4, 1);
    CHECK(poly_det(m) == var(1, 1) * var(4, 1) - var(2, 1) * var(3, 1));
}

TEST_CASE("det of the 2x2 standardization of a single N step")
{
    // [[a13, a23], [a11, a21]]
    PolyMatrix m(2, 2);
    m.at(0, 0) = var(1, 3);
    m.at(0, 1) = var(2, 3);
    m.at(1, 0) = var(1, 1);
    m.at(1, 1) = var(2, 1);
    CHECK(poly_det(m) == var(1, 3) * var(2, 1) - var(2, 3) * var(1, 1));
}

TEST_CASE("det agrees with the cofactor oracle on 500 random integer matrices")
{
    std::mt19937 rng(101);
    std::uniform_int_distribution<size_t> dim(1, 5);
    for (int t = 0; t < 500; ++t) {
        size_t n = dim(rng);
        PolyMatrix m = random_int_matrix(rng, n, n);
        CHECK(poly_det(m) == cofactor_det(m));
    }
}

TEST_CASE("minor conventions")
{
    std::mt19937 rng(7);
    PolyMatrix m = random_int_matrix(rng, 3, 3);
    CHECK(minor(m, {{}, {}}) == Polynomial::constant(1));
    CHECK(minor(m, {{1}, {1}}) == m.at(0, 0));
    Polynomial direct = m.at(0, 1) * m.at(1, 2) - m.at(0, 2) * m.at(1, 1);
    CHECK(minor(m, {{1, 2}, {2, 3}}) == direct);
    CHECK_THROWS(minor(m, {{1, 2}, {1}}));
    CHECK_THROWS(minor(m, {{4}, {1}}));
}

TEST_CASE("Dodgson condensation")
{
    SUBCASE("identity matrix")
    {
        PolyMatrix id(3, 3);
        for (int i = 0; i < 3; ++i) id.at(i, i) = c(1);
        CHECK(dodgson_condense(id) == Polynomial::constant(1));
    }
    SUBCASE("fully symbolic 3x3 equals poly_det")
    {
        PolyMatrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col) m.at(r, col) = var(col + 1, r + 1);
        CHECK(dodgson_condense(m) == poly_det(m));
    }
    SUBCASE("integer example")
    {
        PolyMatrix m(3, 3);
        int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col) m.at(r, col) = c(vals[r][col]);
        CHECK(dodgson_condense(m) == cofactor_det(m));
        CHECK(dodgson_condense(m) == Polynomial::constant(-3));
    }
    SUBCASE("zero center falls back")
    {
        PolyMatrix m(3, 3);
        int vals[3][3] = {{1, 2, 3}, {4, 0, 6}, {7, 8, 10}};
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col) m.at(r, col) = c(vals[r][col]);
        CHECK(dodgson_condense(m) == cofactor_det(m));
    }
}

TEST_CASE("lifting the two-term base identity")
{
    std::mt19937 rng(31);
    SUBCASE("empty chunk reduces to the base identity")
    {
        PolyMatrix m = random_int_matrix(rng, 4, 4);
        CHECK(evaluate_identity(m, desnanot_jacobi_base(4)).is_zero());
        CHECK(check_lifted_identity(m, desnanot_jacobi_base(4), {}, {}));
    }
    SUBCASE("Desnanot-Jacobi on random 4x4")
    {
        for (int t = 0; t < 50; ++t) {
            PolyMatrix m = random_int_matrix(rng, 4, 4);
            CHECK(check_lifted_identity(m, desnanot_jacobi_base(4), {2, 3}, {2, 3}));
        }
    }
    SUBCASE("200 random instances with random compatible chunks on 6x7")
    {
        std::uniform_int_distribution<int> coin(0, 1);
        for (int t = 0; t < 200; ++t) {
            PolyMatrix m = random_int_matrix(rng, 6, 7);
            auto base = desnanot_jacobi_base(6);
            std::vector<size_t> rows, cols;
            for (size_t i = 2; i <= 5; ++i)
                if (coin(rng)) rows.push_back(i);
            std::vector<size_t> col_pool{2, 3, 4, 5, 7};
            std::shuffle(col_pool.begin(), col_pool.end(), rng);
            for (size_t i = 0; i < rows.size(); ++i) cols.push_back(col_pool[i]);
            CHECK(check_lifted_identity(m, base, rows, cols));
        }
    }
    SUBCASE("index collisions are rejected")
    {
        PolyMatrix m = random_int_matrix(rng, 4, 4);
        CHECK_THROWS(check_lifted_identity(m, desnanot_jacobi_base(4), {1}, {2}));
    }
    SUBCASE("symbolic lift")
    {
        PolyMatrix m(5, 5);
        for (int r = 0; r < 5; ++r)
            for (int col = 0; col < 5; ++col) m.at(r, col) = var(col + 1, r + 1);
        CHECK(check_lifted_identity(m, desnanot_jacobi_base(5), {2, 3, 4}, {2, 3, 4}));
    }
}

TEST_CASE("concatenation geometry")
{
    int next = 1;
    SUBCASE("two horizontal dominoes stack into a full 2x2")
    {
        Domino s = fresh_domino(next, true), f = fresh_domino(next, true);
        DrhMatrix m = concat(s, {}, f);
        REQUIRE(m.matrix.rows() == 2);
        REQUIRE(m.matrix.cols() == 2);
        CHECK(m.matrix.at(1, 0) == s.first);
        CHECK(m.matrix.at(1, 1) == s.second);
        CHECK(m.matrix.at(0, 0) == f.first);
        CHECK(m.matrix.at(0, 1) == f.second);
        for (size_t r = 0; r < 2; ++r)
            for (size_t cidx = 0; cidx < 2; ++cidx) CHECK(!m.matrix.at(r, cidx).is_zero());
    }
    SUBCASE("vertical start attaches rightward")
    {
        Domino s = fresh_domino(next, false), f = fresh_domino(next, false);
        DrhMatrix m = concat(s, {}, f);
        REQUIRE(m.matrix.rows() == 2);
        CHECK(m.matrix.at(1, 0) == s.first);   // bottom-left
        CHECK(m.matrix.at(0, 0) == s.second);  // top-left
        CHECK(m.matrix.at(1, 1) == f.first);
        CHECK(m.matrix.at(0, 1) == f.second);
    }
    SUBCASE("zigzag with one block")
    {
        Domino s = fresh_domino(next, true);
        Block b = fresh_block(next);
        Domino f = fresh_domino(next, false);
        DrhMatrix m = concat(s, {b}, f);
        REQUIRE(m.matrix.rows() == 3);
        REQUIRE(m.matrix.cols() == 3);
        CHECK(m.matrix.at(2, 2).is_zero());  // the only zero pad
        CHECK(m.matrix.at(0, 0) == b.ul);
        CHECK(m.matrix.at(2, 0) == s.first);
        CHECK(m.matrix.at(1, 0) == b.ll);
        CHECK(m.matrix.at(0, 1) == b.ur);
        CHECK(m.matrix.at(0, 2) == f.second);
    }
    SUBCASE("incompatible end shapes are rejected")
    {
        Domino s = fresh_domino(next, true);
        Block b = fresh_block(next);
        Domino f = fresh_domino(next, true);
        CHECK_THROWS(concat(s, {b}, f));  // odd block count, same shapes
        CHECK_THROWS(concat(s, {}, fresh_domino(next, false)));
    }
}

TEST_CASE("provenance round-trip through the support parser")
{
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> kdist(0, 4), coin(0, 1);
    for (int t = 0; t < 40; ++t) {
        int next = 1;
        int k = kdist(rng);
        bool s_horizontal = k == 0 ? true : coin(rng) == 1;  // a bare 2x2 parses as horizontal
        Domino s = fresh_domino(next, s_horizontal);
        std::vector<Block> blocks;
        for (int i = 0; i < k; ++i) blocks.push_back(fresh_block(next));
        bool f_horizontal = (k % 2 == 0) == s_horizontal;
        Domino f = fresh_domino(next, f_horizontal);
        DrhMatrix m = concat(s, blocks, f);
        auto word = read_provenance(m);
        DrhMatrix again = concat_pieces(word, word.front().domino.horizontal);
        CHECK(again.matrix == m.matrix);
        REQUIRE(word.size() == blocks.size() + 2);
        CHECK(word.front().kind == Piece::StartDomino);
        CHECK(word.back().kind == Piece::FinishDomino);
    }
}

TEST_CASE("square DRH matrices: det equals the first-row Laplace oracle")
{
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> kdist(0, 4), coin(0, 1);
    for (int t = 0; t < 25; ++t) {
        int next = 1;
        int k = kdist(rng);
        bool sh = coin(rng) == 1;
        Domino s = fresh_domino(next, sh);
        std::vector<Block> blocks;
        for (int i = 0; i < k; ++i) blocks.push_back(fresh_block(next));
        Domino f = fresh_domino(next, (k % 2 == 0) == sh);
        DrhMatrix m = concat(s, blocks, f);
        REQUIRE(m.matrix.is_square());
        REQUIRE(m.matrix.rows() == static_cast<size_t>(k + 2));
        CHECK(poly_det(m.matrix) == cofactor_det(m.matrix));
    }
}

TEST_CASE("corollary identities hold symbolically for k in {2,4}")
{
    for (int k : {2, 4})
        for (auto which : {CorollaryCase::C00pp, CorollaryCase::Cm20pp, CorollaryCase::Cm1p20p})
            CHECK(verify_corollary_identity(which, generic_corollary_inputs(which, k)));
}

TEST_CASE("corollary identities on random small-integer entries")
{
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> entry(-5, 5);
    auto randomize = [&](CorollaryCase which, int k) {
        CorollaryInputs in = generic_corollary_inputs(which, k);
        auto rd = [&](Domino& d) {
            d.first = c(entry(rng));
            d.second = c(entry(rng));
        };
        auto rb = [&](Block& b) {
            b.ll = c(entry(rng));
            b.lr = c(entry(rng));
            b.ul = c(entry(rng));
            b.ur = c(entry(rng));
        };
        rd(in.s), rd(in.s_tilde), rd(in.f), rd(in.f_tilde), rd(in.phi);
        for (auto& b : in.blocks) rb(b);
        rb(in.bw_prime), rb(in.b0_prime), rb(in.b0), rb(in.bw);
        if (which == CorollaryCase::Cm20pp) in.f = in.bw_prime.h_plus();
        if (which == CorollaryCase::Cm1p20p) {
            in.s = in.bw.h_minus();
            in.f = in.bw_prime.h_plus();
        }
        return in;
    };
    for (int t = 0; t < 20; ++t)
        for (auto which : {CorollaryCase::C00pp, CorollaryCase::Cm20pp, CorollaryCase::Cm1p20p})
            CHECK(verify_corollary_identity(which, randomize(which, 2)));
}

TEST_CASE("degenerate repeated-domino case vanishes on both sides")
{
    CorollaryInputs in = generic_corollary_inputs(CorollaryCase::C00pp, 2);
    in.f_tilde = in.f;  // |f f| = 0, and the left side cancels identically
    CHECK(verify_corollary_identity(CorollaryCase::C00pp, in));
}

TEST_CASE("matrix pretty-printer emits an aligned grid")
{
    PolyMatrix m(2, 2);
    m.at(0, 0) = var(1, 3);
    m.at(1, 1) = c(-1);
    std::string s = m.str();
    CHECK(s.find("a[1,3]") != std::string::npos);
    CHECK(s.find('[') != std::string::npos);
}
