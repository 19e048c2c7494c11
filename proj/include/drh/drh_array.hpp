#pragma once

/*
  North-East lattice paths and their arrays: the union of 2x2 squares whose
  centers are the lattice points of the path started at (1,1), with the
  indeterminate a[i,j] in the cell whose upper-right vertex is (i,j).  Also
  the frozen minors along the path, the bug path of mutable cells, and the
  initial quiver whose one-step exchange relations are the five determinantal
  identities D1-D5.
*/

#include "drh/poly.hpp"
#include "drh/quiver.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace drh {

class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::string word);

    int length() const { return static_cast<int>(word_.size()); }
    char letter(int t) const { return word_.at(t - 1); }  // 1-based
    const std::string& word() const { return word_; }

    int count_n() const;
    int count_e() const;

    LatticePath transpose() const;

    // Word with position labels, e.g. "N^1E^2N^3".
    std::string labeled() const;

    friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.word_ == b.word_; }

private:
    std::string word_;
};

struct Cell {
    int x = 0;  // column of the upper-right vertex
    int y = 0;  // row of the upper-right vertex
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

class DrhArray {
public:
    explicit DrhArray(LatticePath path);

    const LatticePath& path() const { return path_; }
    int length() const { return path_.length(); }
    int p() const { return p_; }  // #E + 2
    int q() const { return q_; }  // #N + 2

    const std::vector<LatticePoint>& lattice_points() const { return points_; }  // L_1..L_{l+1}
    const std::set<Cell>& cells() const { return cells_; }
    bool has_cell(Cell c) const { return cells_.count(c) > 0; }

    Polynomial value(Cell c) const;  // a[x,y]

    Cell corner_ll() const { return {1, 1}; }          // c_11
    Cell corner_ur() const { return {p_, q_}; }        // c_pq

    // Determinant of the 2x2 square centered at a lattice point, displayed
    // [[a(x,y+1), a(x+1,y+1)], [a(x,y), a(x+1,y)]].
    Polynomial square_det(LatticePoint pt) const;

    // Delta_0 = a11, Delta_i = square at L_i, Delta_{l+2} = a_pq.
    std::vector<Polynomial> frozen_minors() const;

    std::string render() const;  // ASCII grid with cell labels

private:
    LatticePath path_;
    int p_ = 2, q_ = 2;
    std::vector<LatticePoint> points_;
    std::set<Cell> cells_;
};

// The l+1 cells visited by the bug: start in c_12, go right until a wall,
// then up, and so on, stopping next to c_pq.
std::vector<Cell> bug_path(const DrhArray& array);

struct InitialSeed {
    Seed seed;
    std::vector<int> mutable_ids;        // vertex per bug-path cell, in order
    std::vector<int> frozen_minor_ids;   // vertex of Delta_0..Delta_{l+2}
    std::vector<Cell> mutable_cells;
};

// Q_lambda: mutable vertices on the bug path, frozen vertices a11,
// Delta_1..Delta_{l+1}, a_pq, frozen arrows placed so that every one-step
// exchange is a D1-D5 instance.
InitialSeed initial_quiver(const DrhArray& array);

// All five identities with fresh indeterminates.
bool check_identities_D1_D5();

}  // namespace drh
