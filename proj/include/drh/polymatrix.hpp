#pragma once

/*
  DRH-matrix calculus: dominoes, 2x2 blocks, and their zigzag concatenation
  into staircase-shaped matrices with zero padding, plus the minor-identity
  machinery (Dodgson condensation and lifting of homogeneous determinantal
  identities by adjoining common row/column chunks).

  Matrices use the display convention of the figures: row 1 is the TOP row.
  Where a construction is described bottom-up, it is assembled in axis
  coordinates and flipped on output.
*/

#include "drh/poly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace drh {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Polynomial& at(size_t r, size_t c) { return entries_.at(r * cols_ + c); }
    const Polynomial& at(size_t r, size_t c) const { return entries_.at(r * cols_ + c); }

    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    std::string str() const;  // ASCII grid

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Polynomial> entries_;
};

// Determinant by expansion over column subsets (division-free, exact).
Polynomial poly_det(const PolyMatrix& m);

struct MinorSpec {
    std::vector<size_t> rows;  // 1-based row indices
    std::vector<size_t> cols;  // 1-based column indices
};

// Minor with the given rows and columns (both kept in the matrix's own row
// order).  The empty minor is 1 by convention.
Polynomial minor(const PolyMatrix& x, const MinorSpec& spec);

// det of a 3x3 via Dodgson condensation when the center entry is nonzero,
// falling back to poly_det otherwise.
Polynomial dodgson_condense(const PolyMatrix& x);

// A homogeneous determinantal identity sum c_i * prod_j minor(I_i^j, J_i^j).
struct MinorIdentity {
    struct Term {
        Int coeff;
        std::vector<MinorSpec> minors;
    };
    std::vector<Term> terms;
};

Polynomial evaluate_identity(const PolyMatrix& x, const MinorIdentity& id);

// True iff the identity with I' adjoined to every row set and J' to every
// column set sums to zero on x.  Throws if I'/J' collide with the base sets.
bool check_lifted_identity(const PolyMatrix& x, const MinorIdentity& base,
                           const std::vector<size_t>& extra_rows,
                           const std::vector<size_t>& extra_cols);

// The two-element base identity behind Dodgson / Desnanot-Jacobi:
//   D({1,n},{1,n}) * D(0,0) - D(1,1) D(n,n) + D(1,n) D(n,1) = 0.
MinorIdentity desnanot_jacobi_base(size_t n);

// ---------------------------------------------------------------------------
// Dominoes, blocks, concatenation.

struct Domino {
    bool horizontal = true;
    // first = left (horizontal) or bottom (vertical); second = right or top.
    Polynomial first, second;
};

struct Block {
    // Entries by position: ll = lower-left, etc. (axis orientation).
    Polynomial ll, lr, ul, ur;

    Domino h_minus() const { return {true, ll, lr}; }
    Domino h_plus() const { return {true, ul, ur}; }
    Domino v_minus() const { return {false, ll, ul}; }
    Domino v_plus() const { return {false, lr, ur}; }

    // det of the displayed 2x2 [[ul, ur], [ll, lr]].
    Polynomial det() const { return ul * lr - ur * ll; }
};

// d2 stacked on top of d1 (both horizontal), or d2 to the right of d1 (both
// vertical).
Block block_from(const Domino& d1, const Domino& d2);

struct Piece {
    enum Kind { StartDomino, Bend, FinishDomino, FullBlock } kind;
    Domino domino;  // for *Domino
    Block block;    // for Bend / FullBlock
};

struct DrhMatrix {
    PolyMatrix matrix;              // display orientation
    std::vector<Piece> provenance;  // the concatenation word that built it
};

// Assembles s b_1 ... b_k f with the attachments in zigzag right-top order.
// Either end domino may be absent.  The first attachment direction is on top
// of a horizontal start and to the right of a vertical one; a block-only or
// block-led word starts with a rightward attachment unless told otherwise.
DrhMatrix concat(const std::optional<Domino>& s, const std::vector<Block>& blocks,
                 const std::optional<Domino>& f);

// General form: arbitrary piece sequence with an explicit first attachment
// direction (true = the second piece goes on top of the first).
DrhMatrix concat_pieces(const std::vector<Piece>& pieces, bool first_attach_on_top);

// Reads the concatenation word back off a DrhMatrix (round-trip check).
std::vector<Piece> read_provenance(const DrhMatrix& m);

// ---------------------------------------------------------------------------
// The three two-term determinant identities on standardized DRH families.

enum class CorollaryCase { C00pp, Cm20pp, Cm1p20p };

struct CorollaryInputs {
    // C00pp:   s, s~, f, f~ horizontal; blocks b_1..b_k (k even).
    // Cm20pp:  same plus b'_w, b'_0 with f = h_plus(b'_w).
    // Cm1p20p: s, s~, f horizontal, phi vertical, blocks b_0, b_w, b_1..b_k,
    //          b'_w with h_minus(b_w) = s and h_plus(b'_w) = f.
    Domino s, s_tilde, f, f_tilde, phi;
    std::vector<Block> blocks;
    Block bw_prime, b0_prime;  // Cm20pp
    Block b0, bw;              // Cm1p20p
};

// Builds both sides symbolically and compares.
bool verify_corollary_identity(CorollaryCase which, const CorollaryInputs& in);

// Fresh-indeterminate inputs for a given k (even), using pairwise distinct
// variables a[i,1] indexed consecutively from `first_index`.
CorollaryInputs generic_corollary_inputs(CorollaryCase which, int k);

}  // namespace drh
