#pragma once

/*
  Standardization: a subskeleton (lambda, r, s) keeps the parent array's
  values near its lattice points; its standardized matrix is the zigzag
  concatenation of its end dominoes with the 2x2 squares at its bends, and
  the attached cluster variable is the signed determinant.  Filling every
  band cell with its variable turns the Main Decomposition Theorem and the
  vanishing of eligible 3x3 determinants into checkable reports.
*/

#include "drh/polymatrix.hpp"
#include "drh/staircase.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace drh {

struct Subskeleton {
    const DrhArray* parent = nullptr;
    int r = 1, s = 1;  // 1 <= r <= s <= l

    int length() const { return s - r + 1; }
    std::string word() const;
};

Subskeleton subskeleton(const DrhArray& parent, int r, int s);

// Std(mu) = s b_1 ... b_k f with the bend squares of mu, endowed from the
// parent array.
DrhMatrix standardize(const Subskeleton& mu);

// c(mu) = (-1)^{(eta-1)(eta-2)/2} det(Std(mu)).
Polynomial cluster_variable(const Subskeleton& mu);

// e(c) for every band cell: array cells keep their indeterminate, W cells
// get c(Subsk(cell)), mirrored cells repeat their partner's value.
std::map<SCell, Polynomial> fill_staircase(const Staircase& sc);

// End transformations relating standardized forms of adjacent subskeleta.
enum class EtKind { ET1, ET2, ET3 };

struct EndTransformation {
    EtKind kind;
    bool at_start;      // start- or finish-domino side
    int size_delta;     // eta difference (0, +-1, +-2)
};

EndTransformation classify_end_transformation(const DrhArray& parent, int r1, int s1, int r2,
                                              int s2);

// A 2x2 square of W cells, given by the board coordinates of its lower-left
// cell; F(q) is the multiset of frozen variables its cross-determinant
// factors into.
struct Quadruple {
    int x = 1, y = 1;
};

FrozenMonomial quadruple_factor(const Staircase& sc, const Quadruple& q,
                                std::vector<int>* multiplicity_warnings = nullptr);

struct DecompositionEntry {
    Quadruple quad;
    std::array<std::pair<int, int>, 4> subskeleta;  // (r,s) of m11, m12, m21, m22
    std::string lhs;                                // |q| in canonical form
    std::string factor;                             // F(q) in figure notation
    bool ok = false;
    bool sign_only = false;
    std::vector<int> multiplicity_warnings;
};

struct DecompositionReport {
    std::vector<DecompositionEntry> entries;
    bool all_ok() const;
};

// |q| = e(m11)e(m22) - e(m12)e(m21) against the product over F(q), for every
// quadruple inside W.
DecompositionReport verify_decomposition(const Staircase& sc,
                                         const std::map<SCell, Polynomial>& fill);

struct ThreeByThreeEntry {
    SCell center;
    bool ok = false;
};

struct ThreeByThreeReport {
    std::vector<ThreeByThreeEntry> entries;
    int skipped_special = 0;
    bool all_ok() const;
};

// Every 3x3 block of band cells whose center has four non-special corners
// has vanishing determinant.
ThreeByThreeReport verify_three_by_three(const Staircase& sc,
                                         const std::map<SCell, Polynomial>& fill);

}  // namespace drh
