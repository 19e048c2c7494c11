#include "drh/polymatrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace drh {

std::string PolyMatrix::str() const
{
    std::vector<std::string> cells(rows_ * cols_);
    std::vector<size_t> width(cols_, 0);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) {
            cells[r * cols_ + c] = at(r, c).str();
            width[c] = std::max(width[c], cells[r * cols_ + c].size());
        }
    std::ostringstream out;
    for (size_t r = 0; r < rows_; ++r) {
        out << "[ ";
        for (size_t c = 0; c < cols_; ++c) {
            const std::string& s = cells[r * cols_ + c];
            out << std::string(width[c] - s.size(), ' ') << s;
            out << (c + 1 < cols_ ? "  " : " ");
        }
        out << "]\n";
    }
    return out.str();
}

Polynomial poly_det(const PolyMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("poly_det: non-square matrix");
    size_t n = m.rows();
    if (n == 0) return Polynomial::constant(1);
    if (n > 20) throw std::invalid_argument("poly_det: matrix too large");
    // Row-by-row permutation expansion over column masks; zero entries and
    // zero partial sums are skipped, which keeps staircase matrices cheap.
    std::map<uint32_t, Polynomial> level;
    level[0] = Polynomial::constant(1);
    for (size_t r = 0; r < n; ++r) {
        std::map<uint32_t, Polynomial> next;
        for (const auto& [mask, acc] : level) {
            for (size_t c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                const Polynomial& e = m.at(r, c);
                if (e.is_zero()) continue;
                int inversions = 0;
                for (size_t c2 = c + 1; c2 < n; ++c2)
                    if (mask & (1u << c2)) ++inversions;
                Polynomial contrib = acc * e;
                if (inversions & 1) contrib = -contrib;
                auto it = next.find(mask | (1u << c));
                if (it == next.end())
                    next.emplace(mask | (1u << c), std::move(contrib));
                else
                    it->second += contrib;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        level = std::move(next);
    }
    auto it = level.find((1u << n) - 1u);
    return it == level.end() ? Polynomial() : it->second;
}

Polynomial minor(const PolyMatrix& x, const MinorSpec& spec)
{
    if (spec.rows.size() != spec.cols.size())
        throw std::invalid_argument("minor: ragged index sets");
    std::vector<size_t> rows = spec.rows, cols = spec.cols;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    for (size_t r : rows)
        if (r < 1 || r > x.rows()) throw std::invalid_argument("minor: row out of range");
    for (size_t c : cols)
        if (c < 1 || c > x.cols()) throw std::invalid_argument("minor: column out of range");
    size_t k = rows.size();
    PolyMatrix sub(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sub.at(i, j) = x.at(rows[i] - 1, cols[j] - 1);
    return poly_det(sub);
}

Polynomial dodgson_condense(const PolyMatrix& x)
{
    if (x.rows() != 3 || x.cols() != 3)
        throw std::invalid_argument("dodgson_condense: expected a 3x3 matrix");
    if (x.at(1, 1).is_zero()) return poly_det(x);
    Polynomial ul = minor(x, {{1, 2}, {1, 2}});
    Polynomial ur = minor(x, {{1, 2}, {2, 3}});
    Polynomial ll = minor(x, {{2, 3}, {1, 2}});
    Polynomial lr = minor(x, {{2, 3}, {2, 3}});
    Polynomial num = ul * lr - ur * ll;
    auto q = divide_exact(num, x.at(1, 1));
    if (!q) throw std::logic_error("dodgson_condense: condensation did not divide");
    return *q;
}

Polynomial evaluate_identity(const PolyMatrix& x, const MinorIdentity& id)
{
    Polynomial total;
    for (const auto& term : id.terms) {
        Polynomial prod = Polynomial::constant(term.coeff);
        for (const auto& spec : term.minors) prod *= minor(x, spec);
        total += prod;
    }
    return total;
}

bool check_lifted_identity(const PolyMatrix& x, const MinorIdentity& base,
                           const std::vector<size_t>& extra_rows,
                           const std::vector<size_t>& extra_cols)
{
    if (extra_rows.size() != extra_cols.size())
        throw std::invalid_argument("check_lifted_identity: ragged chunk");
    std::set<size_t> er(extra_rows.begin(), extra_rows.end());
    std::set<size_t> ec(extra_cols.begin(), extra_cols.end());
    for (const auto& term : base.terms)
        for (const auto& spec : term.minors) {
            for (size_t r : spec.rows)
                if (er.count(r)) throw std::invalid_argument("chunk collides with base rows");
            for (size_t c : spec.cols)
                if (ec.count(c)) throw std::invalid_argument("chunk collides with base columns");
        }
    MinorIdentity lifted;
    for (const auto& term : base.terms) {
        MinorIdentity::Term t;
        t.coeff = term.coeff;
        for (const auto& spec : term.minors) {
            MinorSpec s = spec;
            s.rows.insert(s.rows.end(), extra_rows.begin(), extra_rows.end());
            s.cols.insert(s.cols.end(), extra_cols.begin(), extra_cols.end());
            t.minors.push_back(std::move(s));
        }
        lifted.terms.push_back(std::move(t));
    }
    return evaluate_identity(x, lifted).is_zero();
}

MinorIdentity desnanot_jacobi_base(size_t n)
{
    MinorIdentity id;
    id.terms.push_back({Int(1), {{{1, n}, {1, n}}, {{}, {}}}});
    id.terms.push_back({Int(-1), {{{1}, {1}}, {{n}, {n}}}});
    id.terms.push_back({Int(1), {{{1}, {n}}, {{n}, {1}}}});
    return id;
}

// ---------------------------------------------------------------------------

Block block_from(const Domino& d1, const Domino& d2)
{
    if (d1.horizontal != d2.horizontal)
        throw std::invalid_argument("block_from: mismatched domino shapes");
    Block b;
    if (d1.horizontal) {
        b.ll = d1.first;
        b.lr = d1.second;
        b.ul = d2.first;
        b.ur = d2.second;
    } else {
        b.ll = d1.first;
        b.ul = d1.second;
        b.lr = d2.first;
        b.ur = d2.second;
    }
    return b;
}

namespace {

struct Placement {
    int x = 0, y = 0;  // bottom-left in axis coordinates
    int w = 0, h = 0;
};

int piece_width(const Piece& p)
{
    if (p.kind == Piece::Bend || p.kind == Piece::FullBlock) return 2;
    return p.domino.horizontal ? 2 : 1;
}

int piece_height(const Piece& p)
{
    if (p.kind == Piece::Bend || p.kind == Piece::FullBlock) return 2;
    return p.domino.horizontal ? 1 : 2;
}

}  // namespace

DrhMatrix concat_pieces(const std::vector<Piece>& pieces, bool first_attach_on_top)
{
    if (pieces.empty()) throw std::invalid_argument("concat: empty word");
    std::vector<Placement> place(pieces.size());
    bool on_top = first_attach_on_top;
    place[0] = {0, 0, piece_width(pieces[0]), piece_height(pieces[0])};
    for (size_t i = 1; i < pieces.size(); ++i) {
        const Placement& prev = place[i - 1];
        int x = on_top ? prev.x : prev.x + prev.w;
        int y = on_top ? prev.y + prev.h : prev.y;
        bool is_domino = pieces[i].kind != Piece::Bend && pieces[i].kind != Piece::FullBlock;
        if (is_domino && pieces[i].domino.horizontal != on_top)
            throw std::invalid_argument("concat: domino shape incompatible with attachment");
        place[i] = {x, y, piece_width(pieces[i]), piece_height(pieces[i])};
        on_top = !on_top;
    }
    int W = 0, H = 0;
    for (const auto& p : place) {
        W = std::max(W, p.x + p.w);
        H = std::max(H, p.y + p.h);
    }
    PolyMatrix m(static_cast<size_t>(H), static_cast<size_t>(W));
    auto put = [&](int x, int y, const Polynomial& v) {
        // axis (x, y) -> display row H-1-y, column x
        m.at(static_cast<size_t>(H - 1 - y), static_cast<size_t>(x)) = v;
    };
    for (size_t i = 0; i < pieces.size(); ++i) {
        const Piece& p = pieces[i];
        const Placement& pl = place[i];
        if (p.kind == Piece::Bend || p.kind == Piece::FullBlock) {
            put(pl.x, pl.y, p.block.ll);
            put(pl.x + 1, pl.y, p.block.lr);
            put(pl.x, pl.y + 1, p.block.ul);
            put(pl.x + 1, pl.y + 1, p.block.ur);
        } else if (p.domino.horizontal) {
            put(pl.x, pl.y, p.domino.first);
            put(pl.x + 1, pl.y, p.domino.second);
        } else {
            put(pl.x, pl.y, p.domino.first);
            put(pl.x, pl.y + 1, p.domino.second);
        }
    }
    return {std::move(m), pieces};
}

DrhMatrix concat(const std::optional<Domino>& s, const std::vector<Block>& blocks,
                 const std::optional<Domino>& f)
{
    std::vector<Piece> pieces;
    bool first_on_top = true;
    if (s) {
        pieces.push_back({Piece::StartDomino, *s, {}});
        first_on_top = s->horizontal;
    } else {
        first_on_top = false;  // block-led words start with a rightward attachment
    }
    for (const auto& b : blocks) pieces.push_back({Piece::Bend, {}, b});
    if (f) {
        // end dominoes share a shape iff the block count is even
        if (s && (s->horizontal == f->horizontal) != (blocks.size() % 2 == 0))
            throw std::invalid_argument("concat: end dominoes incompatible with block parity");
        pieces.push_back({Piece::FinishDomino, *f, {}});
    }
    return concat_pieces(pieces, first_on_top);
}

std::vector<Piece> read_provenance(const DrhMatrix& dm)
{
    // Re-parse the staircase support as (start domino)(blocks)(finish domino).
    const PolyMatrix& m = dm.matrix;
    size_t H = m.rows(), W = m.cols();
    auto axis = [&](int x, int y) -> const Polynomial& {
        return m.at(H - 1 - static_cast<size_t>(y), static_cast<size_t>(x));
    };
    auto occupied = [&](int x, int y) {
        if (x < 0 || y < 0 || x >= static_cast<int>(W) || y >= static_cast<int>(H)) return false;
        return !axis(x, y).is_zero();
    };
    auto attempt = [&](bool s_horizontal) -> std::optional<std::vector<Piece>> {
        std::vector<Piece> out;
        Domino s;
        s.horizontal = s_horizontal;
        if (s_horizontal) {
            if (!occupied(0, 0) || !occupied(1, 0)) return std::nullopt;
            s.first = axis(0, 0);
            s.second = axis(1, 0);
        } else {
            if (!occupied(0, 0) || !occupied(0, 1)) return std::nullopt;
            s.first = axis(0, 0);
            s.second = axis(0, 1);
        }
        out.push_back({Piece::StartDomino, s, {}});
        bool on_top = s_horizontal;
        int x = 0, y = 0;
        int w = s_horizontal ? 2 : 1, h = s_horizontal ? 1 : 2;
        while (true) {
            int nx = on_top ? x : x + w;
            int ny = on_top ? y + h : y;
            // Block here iff there is room above-right of the 2x2, or the
            // remaining support is a full 2x2; otherwise a finish domino.
            bool block_fits = occupied(nx, ny) && occupied(nx + 1, ny) && occupied(nx, ny + 1) &&
                              occupied(nx + 1, ny + 1);
            bool is_last = nx + 2 >= static_cast<int>(W) && ny + 2 >= static_cast<int>(H);
            if (block_fits && !is_last) {
                Block b{axis(nx, ny), axis(nx + 1, ny), axis(nx, ny + 1), axis(nx + 1, ny + 1)};
                out.push_back({Piece::Bend, {}, b});
                x = nx, y = ny, w = 2, h = 2;
                on_top = !on_top;
                continue;
            }
            Domino f;
            f.horizontal = on_top;
            if (on_top) {
                if (!occupied(nx, ny) || !occupied(nx + 1, ny)) return std::nullopt;
                f.first = axis(nx, ny);
                f.second = axis(nx + 1, ny);
                if (nx + 2 < static_cast<int>(W) || ny + 1 < static_cast<int>(H))
                    return std::nullopt;
            } else {
                if (!occupied(nx, ny) || !occupied(nx, ny + 1)) return std::nullopt;
                f.first = axis(nx, ny);
                f.second = axis(nx, ny + 1);
                if (nx + 1 < static_cast<int>(W) || ny + 2 < static_cast<int>(H))
                    return std::nullopt;
            }
            out.push_back({Piece::FinishDomino, f, {}});
            return out;
        }
    };
    if (auto r = attempt(true)) return *r;
    if (auto r = attempt(false)) return *r;
    throw std::invalid_argument("read_provenance: not a standard DRH matrix");
}

// ---------------------------------------------------------------------------

namespace {

Polynomial det_of(const DrhMatrix& m)
{
    if (!m.matrix.is_square()) throw std::invalid_argument("det of non-square DRH matrix");
    return poly_det(m.matrix);
}

}  // namespace

bool verify_corollary_identity(CorollaryCase which, const CorollaryInputs& in)
{
    const auto& bs = in.blocks;
    if (bs.size() % 2 != 0 || bs.empty())
        throw std::invalid_argument("corollary identities need k even and positive");
    switch (which) {
        case CorollaryCase::C00pp: {
            Polynomial lhs = det_of(concat(in.s, bs, in.f_tilde)) * det_of(concat(in.s_tilde, bs, in.f)) -
                             det_of(concat(in.s, bs, in.f)) * det_of(concat(in.s_tilde, bs, in.f_tilde));
            Polynomial rhs = block_from(in.s_tilde, in.s).det();
            for (const auto& b : bs) rhs *= b.det();
            rhs *= block_from(in.f, in.f_tilde).det();
            return lhs == rhs;
        }
        case CorollaryCase::Cm20pp: {
            if (!(in.bw_prime.h_plus().first == in.f.first) ||
                !(in.bw_prime.h_plus().second == in.f.second))
                throw std::invalid_argument("Cm20pp requires f = h_plus(b'_w)");
            std::vector<Block> longer = bs;
            longer.push_back(in.bw_prime);
            longer.push_back(in.b0_prime);
            Polynomial lhs =
                det_of(concat(in.s, bs, in.f)) * det_of(concat(in.s_tilde, longer, in.f_tilde)) -
                det_of(concat(in.s_tilde, bs, in.f)) * det_of(concat(in.s, longer, in.f_tilde));
            Polynomial rhs = block_from(in.s_tilde, in.s).det();
            for (const auto& b : bs) rhs *= b.det();
            rhs *= in.bw_prime.det();
            rhs *= block_from(in.b0_prime.h_plus(), in.f_tilde).det();
            return lhs == rhs;
        }
        case CorollaryCase::Cm1p20p: {
            if (!(in.bw.h_minus().first == in.s.first) || !(in.bw.h_minus().second == in.s.second))
                throw std::invalid_argument("Cm1p20p requires s = h_minus(b_w)");
            if (!(in.bw_prime.h_plus().first == in.f.first) ||
                !(in.bw_prime.h_plus().second == in.f.second))
                throw std::invalid_argument("Cm1p20p requires f = h_plus(b'_w)");
            if (in.phi.horizontal) throw std::invalid_argument("Cm1p20p requires phi vertical");
            std::vector<Block> with_bwp = bs;
            with_bwp.push_back(in.bw_prime);
            std::vector<Block> prefixed = {in.b0, in.bw};
            prefixed.insert(prefixed.end(), bs.begin(), bs.end());
            std::vector<Block> prefixed_bwp = prefixed;
            prefixed_bwp.push_back(in.bw_prime);
            Polynomial lhs =
                det_of(concat(in.s, with_bwp, in.phi)) * det_of(concat(in.s_tilde, prefixed, in.f)) -
                det_of(concat(in.s, bs, in.f)) * det_of(concat(in.s_tilde, prefixed_bwp, in.phi));
            Polynomial rhs = block_from(in.s_tilde, in.b0.h_minus()).det();
            rhs *= in.bw.det();
            rhs *= in.bw_prime.det();
            rhs *= in.phi.second;  // upper entry of phi
            for (const auto& b : bs) rhs *= b.det();
            return lhs == rhs;
        }
    }
    throw std::logic_error("unreachable");
}

CorollaryInputs generic_corollary_inputs(CorollaryCase which, int k)
{
    int next = 1;
    auto fresh = [&next]() { return Polynomial::variable({next++, 1}); };
    auto fresh_h = [&]() { return Domino{true, fresh(), fresh()}; };
    auto fresh_v = [&]() { return Domino{false, fresh(), fresh()}; };
    auto fresh_block = [&]() { return Block{fresh(), fresh(), fresh(), fresh()}; };
    CorollaryInputs in;
    in.s = fresh_h();
    in.s_tilde = fresh_h();
    in.f = fresh_h();
    in.f_tilde = fresh_h();
    for (int i = 0; i < k; ++i) in.blocks.push_back(fresh_block());
    switch (which) {
        case CorollaryCase::C00pp:
            break;
        case CorollaryCase::Cm20pp:
            in.bw_prime = fresh_block();
            in.b0_prime = fresh_block();
            in.f = in.bw_prime.h_plus();
            break;
        case CorollaryCase::Cm1p20p:
            in.b0 = fresh_block();
            in.bw = fresh_block();
            in.bw_prime = fresh_block();
            in.phi = fresh_v();
            in.s = in.bw.h_minus();
            in.f = in.bw_prime.h_plus();
            break;
    }
    return in;
}

}  // namespace drh
