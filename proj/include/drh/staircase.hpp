#pragma once

/*
  The (l+4)-periodic DRH staircase: the band of torus cells (i,j) with
  i-j not in {-1,0,1} mod l+4, carrying the embedded array (bottom-left cell
  at position (1,0), matrix convention with rows growing downward), its
  transpose, and the W region in between, whose cells biject with the
  subskeleta via row/column labels.  Worms are monotone chains of l+1 cells
  across the band; worm operations are diagonal flips of the (l+4)-gon.
  Lattice points carry frozen coefficients FC(u), Laurent monomials in
  Delta_0..Delta_{l+2}, from which the quiver of any worm is proposed.
*/

#include "drh/drh_array.hpp"
#include "drh/quiver.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace drh {

// Torus cell in matrix convention, canonical residues 0..n-1.
struct SCell {
    int i = 0;  // column
    int j = 0;  // row (downward)
    friend auto operator<=>(const SCell&, const SCell&) = default;
};

// Torus vertex (intersection of column line a and row line b).
struct SVert {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const SVert&, const SVert&) = default;
};

enum class CellClass { Out, Drh, DrhT, W, WT };

// Laurent monomial in the frozen variables Delta_0..Delta_{l+2}.
struct FrozenMonomial {
    std::map<int, int> expo;

    static FrozenMonomial delta(int idx, int e = 1);
    FrozenMonomial operator*(const FrozenMonomial& o) const;
    FrozenMonomial inverse() const;
    friend bool operator==(const FrozenMonomial& a, const FrozenMonomial& b)
    {
        return a.expo == b.expo;
    }
    bool is_squarefree_monomial() const;
    // Figure notation: digits of the Delta indices, fractions as "i j / k".
    std::string str() const;
};

struct FCValue {
    FrozenMonomial value;
    bool special = false;
};

using Worm = std::vector<SCell>;  // l+1 cells, one per band diagonal

enum class WormPos { Start, End, BendEN, BendNE, StraightH, StraightV, Single };

using Triangulation = std::set<std::pair<int, int>>;  // diagonals {a<b} of the n-gon

class Staircase {
public:
    explicit Staircase(const DrhArray& array);

    const DrhArray& array() const { return array_; }
    int n() const { return n_; }
    int length() const { return l_; }

    int mod(int v) const { return ((v % n_) + n_) % n_; }
    SCell canon(int i, int j) const { return {mod(i), mod(j)}; }
    SCell transpose(SCell c) const { return {c.j, c.i}; }
    SVert transpose(SVert v) const { return {v.b, v.a}; }

    bool in_band(SCell c) const;
    CellClass cell_class(SCell c) const;
    std::vector<SCell> band_cells() const;

    // Embedded array cell behind a Drh-class staircase cell.
    Cell drh_cell(SCell c) const;
    // W-board coordinates (x right 1..l, y up 1..l) and back.
    std::pair<int, int> w_board(SCell c) const;
    SCell w_cell(int x, int y) const;

    int row_label(int y) const { return rho_.at(y); }
    int col_label(int x) const { return sigma_.at(x); }

    // Subskeleton (r,s) of a W- or WT-class cell.
    std::pair<int, int> subsk(SCell c) const;

    // ------------------------------------------------------------------
    // Worms.

    Worm initial_worm() const;
    bool is_worm(const Worm& w) const;
    std::vector<Worm> all_worms() const;
    WormPos classify(const Worm& w, int k) const;
    bool op_applicable(const Worm& w, int k) const;
    Worm worm_operation(const Worm& w, int k) const;

    std::pair<int, int> diagonal_of(SCell c) const;  // polygon diagonal {a<b}
    Triangulation worm_to_triangulation(const Worm& w) const;

    // ------------------------------------------------------------------
    // Frozen coefficients at lattice points.

    // Step-1 value at a vertex (centers of squares inside the array or its
    // transpose plus the two corner points), if any.
    std::optional<int> step1_index(SVert v) const;
    // Defined at every vertex whose four surrounding cells are in the band,
    // and at step-1 points.
    FCValue lattice_fc(SVert v) const;

    // Multiset of frozen indices for the quadruple of W cells whose board
    // lower-left cell is (x,y); reports any index of multiplicity > 1.
    FrozenMonomial quadruple_factor(int x, int y, std::vector<int>* multiplicity_warnings = nullptr) const;

    bool split_by_vertical_axis(int x) const { return x == eps_; }
    bool split_by_horizontal_axis(int y) const { return y == eps_; }

    // Degree of the cluster variable of a cell (1 on the array and its
    // transpose, subskeleton bend count + 2 on W / WT).
    int cell_degree(SCell c) const;

    // The frozen variables Delta_0..Delta_{l+2} as polynomials.
    const std::vector<Polynomial>& deltas() const { return deltas_; }
    RationalFunction monomial_value(const FrozenMonomial& m) const;
    FrozenCoefficient monomial_to_fc(const FrozenMonomial& m) const;

    // ------------------------------------------------------------------
    // Worm quivers.

    // Frozen coefficient proposed for vertex k of the worm.
    FrozenMonomial propose_fc(const Worm& w, int k) const;
    // Full proposed seed; `fill` assigns the cluster variable of every band
    // cell (from fill_staircase).
    Seed propose_worm_quiver(const Worm& w, const std::map<SCell, Polynomial>& fill) const;

    std::string render(const Worm* overlay = nullptr) const;  // ASCII partition map
    std::string render_svg(const std::map<SCell, Polynomial>* fill = nullptr) const;

private:
    DrhArray array_;
    int n_ = 4, l_ = 0, eps_ = 0, nu_ = 0, p_ = 2;
    std::map<SCell, Cell> drh_cells_;          // staircase cell -> array cell
    std::map<SCell, std::pair<int, int>> w_cells_;  // staircase cell -> board (x,y)
    std::map<std::pair<int, int>, SCell> board_to_cell_;
    std::vector<int> rho_, sigma_;             // 1-based label arrays
    std::map<SVert, int> step1_;               // all step-1 points
    std::map<SVert, int> step1_core_;          // square centers only
    std::map<SCell, int> corner_cells_;        // c11 / c_pq cells and mirrors
    std::vector<Polynomial> deltas_;
    mutable std::map<SVert, FCValue> fc_cache_;

    SVert walk(SVert from, int da, int db, bool core_only) const;
    FCValue fc_uncached(SVert v) const;
    FrozenMonomial start_fc_horizontal(const Worm& w) const;
    FrozenMonomial start_fc(const Worm& w) const;
};

// Flip of a diagonal in a triangulation of the n-gon (independent oracle for
// the worm-operation lemma).
Triangulation flip_diagonal(const Triangulation& t, std::pair<int, int> diag, int n);

bool diagonals_cross(std::pair<int, int> d1, std::pair<int, int> d2, int n);

}  // namespace drh
