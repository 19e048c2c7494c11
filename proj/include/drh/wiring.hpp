#pragma once

/*
  Double wiring diagrams: two superimposed pseudoline arrangements (red and
  blue), each a reduced word for the longest permutation, lines numbered
  bottom-to-top at their left endpoints in both colors.  Chambers carry the
  minor of a generic matrix whose columns are the red lines below and whose
  rows are the blue lines below; local rules around each crossing give the
  quiver.  A balanced lattice path produces a diagram whose bottom two rows
  encode the extended worm and the skeleton, and freezing everything above
  the bottom row recovers the initial array seed.
*/

#include "drh/drh_array.hpp"
#include "drh/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drh {

enum class Color { Red, Blue };

struct Crossing {
    Color color;
    int level;  // 1..n-1, between strands level and level+1
};

class DoubleWiringDiagram {
public:
    DoubleWiringDiagram(int strands, std::vector<Crossing> crossings);

    int strands() const { return n_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    // Valid iff each color is a reduced word for the longest permutation.
    bool valid() const;

    std::string render() const;

private:
    int n_;
    std::vector<Crossing> crossings_;
};

struct Chamber {
    int level;                 // number of lines below, 1..n
    int seg_begin, seg_end;    // crossing-index interval [begin, end) of its extent
    std::vector<int> red;      // red labels (columns)
    std::vector<int> blue;     // blue labels (rows)
    bool bounded_left, bounded_right;
};

// All chambers except the bottom (empty,empty) one; deterministic order.
std::vector<Chamber> chambers(const DoubleWiringDiagram& d);

// Minor with rows = blue labels, columns = red labels of a generic matrix
// with entry a[i,j] at column i, row j (axis coordinates).
Polynomial chamber_minor(const Chamber& c);

struct WiringSeed {
    Seed seed;
    std::vector<Chamber> chamber_list;  // vertex v <-> chamber_list[v]
};

// Seed on the chambers with arrows from the local rules at each crossing.
WiringSeed wiring_quiver(const DoubleWiringDiagram& d);

// One worm cell adjacent to each skeleton step; candidates are the cells of
// the initial worm sharing an edge with the step.
using CorrespondenceChoice = std::vector<Cell>;

std::vector<std::vector<Cell>> correspondence_candidates(const DrhArray& array);
std::vector<CorrespondenceChoice> all_correspondence_choices(const DrhArray& array);

// Bottom row from the extended worm, second row from the skeleton at the
// chosen positions, upper rows completed canonically.  Requires a balanced
// path (#N = #E).
DoubleWiringDiagram drh_to_wiring(const DrhArray& array, const CorrespondenceChoice& choice);

// Between two same-color crossings of the bottom row there is a same-color
// crossing in the second row.
bool second_row_separation_holds(const DoubleWiringDiagram& d);

struct WiringEquivalenceReport {
    std::string path;          // original
    std::string balanced;      // after extension, if any
    int choices = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty() && choices > 0; }
};

// Builds the diagram for every correspondence choice, freezes the chambers
// outside the bottom row, prunes, and compares with the initial array seed.
// Unbalanced paths are extended by appending letters.
WiringEquivalenceReport check_drh_wiring_equivalence(const LatticePath& path);

}  // namespace drh
