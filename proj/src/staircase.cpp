#include "drh/staircase.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace drh {

FrozenMonomial FrozenMonomial::delta(int idx, int e)
{
    FrozenMonomial m;
    if (e != 0) m.expo[idx] = e;
    return m;
}

FrozenMonomial FrozenMonomial::operator*(const FrozenMonomial& o) const
{
    FrozenMonomial r = *this;
    for (const auto& [i, e] : o.expo) {
        r.expo[i] += e;
        if (r.expo[i] == 0) r.expo.erase(i);
    }
    return r;
}

FrozenMonomial FrozenMonomial::inverse() const
{
    FrozenMonomial r;
    for (const auto& [i, e] : expo) r.expo[i] = -e;
    return r;
}

bool FrozenMonomial::is_squarefree_monomial() const
{
    for (const auto& [i, e] : expo)
        if (e != 1) return false;
    return true;
}

std::string FrozenMonomial::str() const
{
    std::string num, den;
    for (const auto& [i, e] : expo) {
        std::string digit = std::to_string(i);
        for (int k = 0; k < std::abs(e); ++k) (e > 0 ? num : den) += digit;
    }
    if (den.empty()) return num.empty() ? "1" : num;
    return (num.empty() ? "1" : num) + "/" + den;
}

Staircase::Staircase(const DrhArray& array) : array_(array)
{
    l_ = array.length();
    n_ = l_ + 4;
    eps_ = array.path().count_e();
    nu_ = array.path().count_n();
    p_ = array.p();
    deltas_ = array.frozen_minors();

    for (const Cell& c : array.cells()) drh_cells_[canon(c.x, 1 - c.y)] = c;

    // Row labels bottom-up: E positions descending, then N ascending.
    std::vector<int> epos, npos;
    for (int t = 1; t <= l_; ++t)
        (array.path().letter(t) == 'E' ? epos : npos).push_back(t);
    rho_.assign(l_ + 1, 0);
    sigma_.assign(l_ + 1, 0);
    for (int y = 1; y <= eps_; ++y) rho_[y] = epos[eps_ - y];
    for (int y = eps_ + 1; y <= l_; ++y) rho_[y] = npos[y - eps_ - 1];
    for (int x = 1; x <= eps_; ++x) sigma_[x] = epos[x - 1];
    for (int x = eps_ + 1; x <= l_; ++x) sigma_[x] = npos[l_ - x];

    for (int x = 1; x <= l_; ++x)
        for (int y = 1; y <= l_; ++y) {
            if (rho_[y] > sigma_[x]) continue;
            SCell c = canon(x + 2, eps_ + 1 - y);
            w_cells_[c] = {x, y};
            board_to_cell_[{x, y}] = c;
        }

    auto add_step1 = [&](SVert v, int idx, bool core) {
        if (step1_.count(v) && step1_[v] != idx)
            throw std::logic_error("Staircase: step-1 point collision");
        step1_[v] = idx;
        if (core) step1_core_[v] = idx;
    };
    const auto& pts = array.lattice_points();
    for (size_t t = 0; t < pts.size(); ++t) {
        SVert v{mod(pts[t].x), mod(-pts[t].y)};
        add_step1(v, static_cast<int>(t) + 1, true);
        add_step1(transpose(v), static_cast<int>(t) + 1, true);
    }
    add_step1({0, 0}, 0, false);
    add_step1({mod(p_), mod(p_)}, l_ + 2, false);

    corner_cells_[canon(1, 0)] = 0;
    corner_cells_[canon(0, 1)] = 0;
    corner_cells_[canon(p_, p_ + 1)] = l_ + 2;
    corner_cells_[canon(p_ + 1, p_)] = l_ + 2;
}

bool Staircase::in_band(SCell c) const
{
    int d = mod(c.i - c.j);
    return d >= 2 && d <= l_ + 2;
}

CellClass Staircase::cell_class(SCell c) const
{
    if (!in_band(c)) return CellClass::Out;
    if (drh_cells_.count(c)) return CellClass::Drh;
    if (w_cells_.count(c)) return CellClass::W;
    SCell t = transpose(c);
    if (drh_cells_.count(t)) return CellClass::DrhT;
    if (w_cells_.count(t)) return CellClass::WT;
    throw std::logic_error("Staircase: unclassified band cell");
}

std::vector<SCell> Staircase::band_cells() const
{
    std::vector<SCell> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (in_band({i, j})) out.push_back({i, j});
    return out;
}

Cell Staircase::drh_cell(SCell c) const
{
    auto it = drh_cells_.find(c);
    if (it == drh_cells_.end()) throw std::invalid_argument("drh_cell: not an array cell");
    return it->second;
}

std::pair<int, int> Staircase::w_board(SCell c) const
{
    auto it = w_cells_.find(c);
    if (it == w_cells_.end()) throw std::invalid_argument("w_board: not a W cell");
    return it->second;
}

SCell Staircase::w_cell(int x, int y) const
{
    auto it = board_to_cell_.find({x, y});
    if (it == board_to_cell_.end()) throw std::invalid_argument("w_cell: outside W");
    return it->second;
}

std::pair<int, int> Staircase::subsk(SCell c) const
{
    CellClass cls = cell_class(c);
    if (cls == CellClass::WT) c = transpose(c);
    else if (cls != CellClass::W) throw std::invalid_argument("subsk: cell outside W");
    auto [x, y] = w_board(c);
    return {rho_[y], sigma_[x]};
}

// ---------------------------------------------------------------------------
// Worms.

Worm Staircase::initial_worm() const
{
    Worm w;
    for (const Cell& c : bug_path(array_)) w.push_back(canon(c.x, 1 - c.y));
    return w;
}

bool Staircase::is_worm(const Worm& w) const
{
    if (static_cast<int>(w.size()) != l_ + 1) return false;
    if (mod(w[0].i - w[0].j) != 2) return false;
    for (const SCell& c : w)
        if (!in_band(c)) return false;
    for (size_t k = 0; k + 1 < w.size(); ++k) {
        bool east = w[k + 1] == canon(w[k].i + 1, w[k].j);
        bool north = w[k + 1] == canon(w[k].i, w[k].j - 1);
        if (!east && !north) return false;
    }
    return true;
}

std::vector<Worm> Staircase::all_worms() const
{
    std::vector<Worm> out;
    for (int j = 0; j < n_; ++j) {
        SCell start = canon(j + 2, j);
        for (int word = 0; word < (1 << l_); ++word) {
            Worm w{start};
            for (int k = 0; k < l_; ++k) {
                SCell c = w.back();
                w.push_back((word >> k) & 1 ? canon(c.i, c.j - 1) : canon(c.i + 1, c.j));
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

WormPos Staircase::classify(const Worm& w, int k) const
{
    if (l_ == 0) return WormPos::Single;
    if (k == 0) return WormPos::Start;
    if (k == l_) return WormPos::End;
    bool in_h = w[k] == canon(w[k - 1].i + 1, w[k - 1].j);
    bool out_h = w[k + 1] == canon(w[k].i + 1, w[k].j);
    if (in_h && !out_h) return WormPos::BendEN;
    if (!in_h && out_h) return WormPos::BendNE;
    return in_h ? WormPos::StraightH : WormPos::StraightV;
}

bool Staircase::op_applicable(const Worm& w, int k) const
{
    WormPos pos = classify(w, k);
    return pos != WormPos::StraightH && pos != WormPos::StraightV;
}

Worm Staircase::worm_operation(const Worm& w, int k) const
{
    WormPos pos = classify(w, k);
    int d;
    switch (pos) {
        case WormPos::Single:
            d = 1;
            break;
        case WormPos::BendNE:
            d = 1;
            break;
        case WormPos::BendEN:
            d = -1;
            break;
        case WormPos::Start:
            d = (w[1] == canon(w[0].i + 1, w[0].j)) ? 1 : -1;
            break;
        case WormPos::End:
            d = (w[l_] == canon(w[l_ - 1].i, w[l_ - 1].j - 1)) ? 1 : -1;
            break;
        default:
            throw std::invalid_argument("worm_operation: undefined at an interior non-bend");
    }
    Worm out = w;
    out[k] = canon(w[k].i + d, w[k].j + d);
    if (!is_worm(out)) throw std::logic_error("worm_operation: produced an invalid worm");
    return out;
}

std::pair<int, int> Staircase::diagonal_of(SCell c) const
{
    int a = mod(c.i), b = mod(c.j);
    return {std::min(a, b), std::max(a, b)};
}

Triangulation Staircase::worm_to_triangulation(const Worm& w) const
{
    Triangulation t;
    for (const SCell& c : w) t.insert(diagonal_of(c));
    if (static_cast<int>(t.size()) != l_ + 1)
        throw std::logic_error("worm_to_triangulation: repeated diagonal");
    return t;
}

bool diagonals_cross(std::pair<int, int> d1, std::pair<int, int> d2, int)
{
    if (d1.first == d2.first || d1.first == d2.second || d1.second == d2.first ||
        d1.second == d2.second)
        return false;
    auto inside = [&](int x) { return d1.first < x && x < d1.second; };
    return inside(d2.first) != inside(d2.second);
}

Triangulation flip_diagonal(const Triangulation& t, std::pair<int, int> diag, int n)
{
    if (!t.count(diag)) throw std::invalid_argument("flip_diagonal: diagonal not present");
    auto connected = [&](int x, int y) {
        if (x == y) return false;
        int lo = std::min(x, y), hi = std::max(x, y);
        if (hi - lo == 1 || hi - lo == n - 1) return true;  // polygon edge
        return t.count({lo, hi}) > 0;
    };
    std::vector<int> mates;
    for (int c = 0; c < n; ++c) {
        if (c == diag.first || c == diag.second) continue;
        if (connected(diag.first, c) && connected(diag.second, c)) mates.push_back(c);
    }
    if (mates.size() != 2) throw std::logic_error("flip_diagonal: not a triangulation");
    Triangulation out = t;
    out.erase(diag);
    out.insert({std::min(mates[0], mates[1]), std::max(mates[0], mates[1])});
    return out;
}

// ---------------------------------------------------------------------------
// Frozen coefficients at lattice points.

std::optional<int> Staircase::step1_index(SVert v) const
{
    auto it = step1_.find({mod(v.a), mod(v.b)});
    if (it == step1_.end()) return std::nullopt;
    return it->second;
}

SVert Staircase::walk(SVert from, int da, int db, bool core_only) const
{
    const auto& table = core_only ? step1_core_ : step1_;
    SVert v = from;
    for (int k = 1; k <= n_; ++k) {
        v = {mod(v.a + da), mod(v.b + db)};
        if (table.count(v)) return v;
    }
    throw std::logic_error("Staircase: step-1 walk did not terminate");
}

FCValue Staircase::lattice_fc(SVert v0) const
{
    SVert v{mod(v0.a), mod(v0.b)};
    auto it = fc_cache_.find(v);
    if (it != fc_cache_.end()) return it->second;
    FCValue r = fc_uncached(v);
    fc_cache_[v] = r;
    return r;
}

FCValue Staircase::fc_uncached(SVert v) const
{
    if (auto idx = step1_index(v)) return {FrozenMonomial::delta(*idx), false};

    SCell m11 = canon(v.a, v.b), m12 = canon(v.a + 1, v.b);
    SCell m21 = canon(v.a, v.b + 1), m22 = canon(v.a + 1, v.b + 1);
    CellClass c11 = cell_class(m11), c12 = cell_class(m12);
    CellClass c21 = cell_class(m21), c22 = cell_class(m22);
    for (CellClass c : {c11, c12, c21, c22})
        if (c == CellClass::Out)
            throw std::invalid_argument("lattice_fc: vertex outside the staircase");

    auto is = [&](CellClass a, CellClass b, CellClass c, CellClass d) {
        return c11 == a && c12 == b && c21 == c && c22 == d;
    };
    auto any_of = [&](CellClass cls) { return c11 == cls || c12 == cls || c21 == cls || c22 == cls; };
    auto step1_at = [&](SVert u) {
        auto idx = step1_index(u);
        if (!idx) throw std::logic_error("lattice_fc: expected a step-1 point");
        return FrozenMonomial::delta(*idx);
    };

    const CellClass D = CellClass::Drh, T = CellClass::DrhT, W = CellClass::W,
                    WT = CellClass::WT;

    if (any_of(WT)) {
        if (any_of(W)) throw std::logic_error("lattice_fc: W and WT share a quadruple");
        FCValue r = lattice_fc(transpose(v));
        return r;
    }

    if (is(W, W, W, W)) {
        auto [x, y] = w_board(m21);
        return {quadruple_factor(x, y), false};
    }

    if (any_of(D) && any_of(T)) throw std::logic_error("lattice_fc: Drh and DrhT share a quadruple");

    if (any_of(D)) {
        if (is(D, D, D, W)) {
            // Reflex corner of the array boundary: special point.
            SVert ul{mod(v.a - 1), mod(v.b - 1)}, ur{mod(v.a), mod(v.b - 1)}, ll{mod(v.a - 1), mod(v.b)};
            return {step1_at(ur) * step1_at(ll) * step1_at(ul).inverse(), true};
        }
        if (is(D, D, W, W) || is(D, W, D, W)) {
            FrozenMonomial fv = step1_at(walk(v, 0, -1, false));
            FrozenMonomial fw = step1_at(walk(v, -1, 0, false));
            return {fv * fw, false};
        }
        if (is(D, W, W, W)) {
            FrozenMonomial fx = step1_at({mod(v.a - 1), mod(v.b - 1)});
            FrozenMonomial fv = step1_at(walk(v, 0, -1, false));
            FrozenMonomial fw = step1_at(walk(v, -1, 0, false));
            return {fv * fw * fx, false};
        }
        throw std::logic_error("lattice_fc: unexpected Drh/W pattern");
    }

    // W mixed with the transposed array: the primed cases.
    if (is(W, T, T, T)) {
        SVert ur{mod(v.a + 1), mod(v.b)}, ll{mod(v.a), mod(v.b + 1)}, lr{mod(v.a + 1), mod(v.b + 1)};
        return {step1_at(ur) * step1_at(ll) * step1_at(lr).inverse(), true};
    }
    if (is(W, W, T, T) || is(W, T, W, T)) {
        FrozenMonomial fv = step1_at(walk(v, 0, 1, false));
        FrozenMonomial fw = step1_at(walk(v, 1, 0, false));
        return {fv * fw, false};
    }
    if (is(W, W, W, T)) {
        FrozenMonomial fx = step1_at({mod(v.a + 1), mod(v.b + 1)});
        FrozenMonomial fv = step1_at(walk(v, 0, 1, false));
        FrozenMonomial fw = step1_at(walk(v, 1, 0, false));
        return {fv * fw * fx, false};
    }
    throw std::logic_error("lattice_fc: unexpected cell pattern");
}

FrozenMonomial Staircase::quadruple_factor(int x, int y, std::vector<int>* multiplicity_warnings) const
{
    auto label_pair = [&](int bx, int by) -> std::pair<int, int> {
        if (bx < 1 || bx + 0 > l_ || by < 1 || by > l_ || rho_[by] > sigma_[bx])
            throw std::invalid_argument("quadruple_factor: quadruple leaves W");
        return {rho_[by], sigma_[bx]};
    };
    label_pair(x, y);
    label_pair(x + 1, y);
    label_pair(x, y + 1);
    label_pair(x + 1, y + 1);
    int r_short = std::max(rho_[y], rho_[y + 1]);
    int r_long = std::min(rho_[y], rho_[y + 1]);
    int s_short = std::min(sigma_[x], sigma_[x + 1]);
    int s_long = std::max(sigma_[x], sigma_[x + 1]);

    const LatticePath& path = array_.path();
    auto is_bend = [&](int j) { return path.letter(j - 1) != path.letter(j); };

    std::map<int, int> multi;
    // (i) bends of the shortest subskeleton
    for (int j = r_short + 1; j <= s_short; ++j)
        if (is_bend(j)) ++multi[j];
    // (ii) endpoints of the longest
    ++multi[r_long];
    ++multi[s_long + 1];
    // (iii) endpoints of the shortest that are bends of the longest
    for (int e : {r_short, s_short + 1})
        if (e >= r_long + 1 && e <= s_long && is_bend(e)) ++multi[e];

    if (split_by_vertical_axis(x)) {
        auto it = multi.find(l_ + 1);
        if (it == multi.end() || it->second == 0)
            throw std::logic_error("quadruple_factor: vertical split without Delta_{l+1}");
        if (--it->second == 0) multi.erase(it);
        ++multi[l_ + 2];
    }
    if (split_by_horizontal_axis(y)) {
        auto it = multi.find(1);
        if (it == multi.end() || it->second == 0)
            throw std::logic_error("quadruple_factor: horizontal split without Delta_1");
        if (--it->second == 0) multi.erase(it);
        ++multi[0];
    }
    FrozenMonomial m;
    for (const auto& [j, e] : multi) {
        m.expo[j] = e;
        if (e > 1 && multiplicity_warnings) multiplicity_warnings->push_back(j);
    }
    return m;
}

int Staircase::cell_degree(SCell c) const
{
    CellClass cls = cell_class(c);
    if (cls == CellClass::Drh || cls == CellClass::DrhT) return 1;
    auto [r, s] = subsk(c);
    int bends = 0;
    for (int j = r + 1; j <= s; ++j)
        if (array_.path().letter(j - 1) != array_.path().letter(j)) ++bends;
    return bends + 2;
}

RationalFunction Staircase::monomial_value(const FrozenMonomial& m) const
{
    RationalFunction r(Polynomial::constant(1));
    for (const auto& [i, e] : m.expo) {
        RationalFunction d{deltas_.at(i)};
        for (int k = 0; k < std::abs(e); ++k) r = e > 0 ? r * d : r / d;
    }
    return r;
}

FrozenCoefficient Staircase::monomial_to_fc(const FrozenMonomial& m) const
{
    FrozenCoefficient fc;
    for (const auto& [i, e] : m.expo) fc.expo[deltas_.at(i).str()] += e;
    for (auto it = fc.expo.begin(); it != fc.expo.end();)
        it = it->second == 0 ? fc.expo.erase(it) : std::next(it);
    return fc;
}

// ---------------------------------------------------------------------------
// Worm quivers.

FrozenMonomial Staircase::start_fc_horizontal(const Worm& w) const
{
    SCell c1 = w[0];
    SCell c2 = canon(c1.i + 1, c1.j);
    if (!(w[1] == c2)) throw std::logic_error("start_fc_horizontal: first step not horizontal");
    SCell gamma = canon(c2.i, c2.j + 1);
    int d1 = cell_degree(c1), d2 = cell_degree(c2), dg = cell_degree(gamma);

    auto corner = [&](SCell c) {
        auto it = corner_cells_.find(c);
        if (it == corner_cells_.end())
            throw std::logic_error("start_fc: expected a frozen corner cell");
        return it->second;
    };
    auto step1_at = [&](SVert u) {
        auto idx = step1_index(u);
        if (!idx) throw std::logic_error("start_fc: expected a step-1 point");
        return *idx;
    };
    auto core_at = [&](SVert u) {
        auto it = step1_core_.find({mod(u.a), mod(u.b)});
        if (it == step1_core_.end()) throw std::logic_error("start_fc: expected a square center");
        return it->second;
    };
    auto D = [](int i, int e = 1) { return FrozenMonomial::delta(i, e); };

    SVert ul_c1{mod(c1.i - 1), mod(c1.j - 1)}, ur_c1{mod(c1.i), mod(c1.j - 1)};
    SVert lr_c1{mod(c1.i), mod(c1.j)};

    if (d1 == 1 && d2 == 1 && dg == 1)
        return D(corner(canon(c1.i, c1.j + 1))) * D(step1_at(lr_c1), -1);
    if (d1 == 1 && d2 == 1 && dg == 2)
        return D(step1_at(ul_c1)) * D(corner(canon(c1.i - 1, c1.j)), -1) * D(step1_at(ur_c1), -1);
    if (d1 == 1 && d2 == 3 && dg == 2) {
        SVert u = walk(ur_c1, 0, -1, true);
        return D(corner(canon(c1.i - 1, c1.j)), -1) * D(core_at(u), -1);
    }
    if (d1 == 2 && d2 == 1 && dg == 1) {
        SVert lr_g{mod(gamma.i), mod(gamma.j)}, ur_g{mod(gamma.i), mod(gamma.j - 1)};
        return D(step1_at(lr_g)) * D(corner(canon(gamma.i, gamma.j + 1)), -1) * D(step1_at(ur_g), -1);
    }
    if (d1 == 2 && d2 == 3 && dg == 1) {
        SVert ur_g{mod(gamma.i), mod(gamma.j - 1)};
        SVert u = walk(ur_g, 1, 0, true);
        return D(corner(canon(gamma.i, gamma.j + 1)), -1) * D(core_at(u), -1);
    }
    if (d1 == 2 && d2 == 2 && dg == 2) {
        SVert u1 = walk(ur_c1, 0, -1, true);
        SVert u2{mod(u1.a - 1), mod(u1.b)};
        SVert u3{mod(u2.a - 1), mod(u2.b)};
        return D(core_at(u2)) * D(core_at(u1), -1) * D(core_at(u3), -1);
    }
    if (d1 == 2 && d2 == 4 && dg == 2) {
        SVert w1 = ul_c1, w2 = ur_c1;  // upper-left corners of c1 and c2
        SVert u1 = walk(w1, 0, -1, true);
        SVert u2 = walk(w2, 0, -1, true);
        SVert v1{mod(u1.a - 1), mod(u1.b)};
        return D(core_at(v1), -1) * D(core_at(u2), -1);
    }
    if (d1 == 1 && d2 == 2 && dg == 1)
        return D(0, -1) * D(l_ + 2, -1);
    throw std::logic_error("start_fc: unexpected degree triple");
}

FrozenMonomial Staircase::start_fc(const Worm& w) const
{
    if (w[1] == canon(w[0].i + 1, w[0].j)) return start_fc_horizontal(w);
    // Vertical first step: the mutation at the start cell lands on the cell
    // left of c2; propose via that worm and invert.
    Worm alt = w;
    alt[0] = canon(w[1].i - 1, w[1].j);
    return start_fc_horizontal(alt).inverse();
}

namespace {

FrozenMonomial negative_part(const FrozenMonomial& m)
{
    FrozenMonomial r;
    for (const auto& [i, e] : m.expo)
        if (e < 0) r.expo[i] = e;
    return r;
}

}  // namespace

FrozenMonomial Staircase::propose_fc(const Worm& w, int k) const
{
    if (!is_worm(w)) throw std::invalid_argument("propose_fc: invalid worm");
    SCell c = w[k];
    switch (classify(w, k)) {
        case WormPos::Single: {
            // The two cells of each square diagonal exchange by D1.
            bool is_a12 = c == canon(1, n_ - 1) || c == canon(n_ - 1, 1);
            FrozenMonomial m =
                FrozenMonomial::delta(0) * FrozenMonomial::delta(2) * FrozenMonomial::delta(1, -1);
            return is_a12 ? m : m.inverse();
        }
        case WormPos::BendEN:
            return lattice_fc({c.i - 1, c.j - 1}).value;
        case WormPos::BendNE:
            return lattice_fc({c.i, c.j}).value.inverse();
        case WormPos::StraightH: {
            // Mutate in from the worm through the cell above: there the cell
            // is an EN-bend, and the mutation at the upper neighbor
            // contributes the in-arrows of its own coefficient.
            Worm up = w;
            up[k + 1] = canon(c.i, c.j - 1);
            for (int t = k + 2; t <= l_; ++t) up[t] = canon(up[t - 1].i + 1, up[t - 1].j);
            return lattice_fc({c.i - 1, c.j - 1}).value * negative_part(propose_fc(up, k + 1));
        }
        case WormPos::StraightV: {
            Worm t;
            for (auto it = w.rbegin(); it != w.rend(); ++it) t.push_back(transpose(*it));
            return propose_fc(t, l_ - k);
        }
        case WormPos::Start:
            return start_fc(w);
        case WormPos::End: {
            Worm t;
            for (auto it = w.rbegin(); it != w.rend(); ++it) t.push_back(transpose(*it));
            return start_fc(t);
        }
    }
    throw std::logic_error("unreachable");
}

Seed Staircase::propose_worm_quiver(const Worm& w, const std::map<SCell, Polynomial>& fill) const
{
    if (!is_worm(w)) throw std::invalid_argument("propose_worm_quiver: invalid worm");
    Seed seed;
    std::vector<int> mut;
    for (int k = 0; k <= l_; ++k) {
        int id = seed.quiver.add_vertex("w" + std::to_string(k), false);
        seed.vars.push_back(RationalFunction(fill.at(w[k])));
        mut.push_back(id);
    }
    std::vector<int> fro;
    for (int i = 0; i <= l_ + 2; ++i) {
        std::string name = (i == 0)        ? "a11"
                           : (i == l_ + 2) ? "apq"
                                           : "D" + std::to_string(i);
        int id = seed.quiver.add_vertex(name, true);
        seed.vars.push_back(RationalFunction(deltas_[i]));
        fro.push_back(id);
    }
    for (int k = 0; k + 1 <= l_; ++k) {
        bool east = w[k + 1] == canon(w[k].i + 1, w[k].j);
        if (east)
            seed.quiver.add_arrow(mut[k], mut[k + 1]);
        else
            seed.quiver.add_arrow(mut[k + 1], mut[k]);
    }
    for (int k = 0; k <= l_; ++k) {
        FrozenMonomial fc = propose_fc(w, k);
        for (const auto& [i, e] : fc.expo) seed.quiver.add_arrow(mut[k], fro[i], e);
    }
    return seed;
}

// ---------------------------------------------------------------------------

std::string Staircase::render(const Worm* overlay) const
{
    std::ostringstream out;
    out << "    ";
    for (int i = 0; i < n_; ++i) out << i % 10 << ' ';
    out << "\n";
    for (int j = 0; j < n_; ++j) {
        out << (j < 10 ? " " : "") << j << ": ";
        for (int i = 0; i < n_; ++i) {
            char ch = '.';
            SCell c{i, j};
            if (in_band(c)) {
                switch (cell_class(c)) {
                    case CellClass::Drh: ch = 'D'; break;
                    case CellClass::DrhT: ch = 't'; break;
                    case CellClass::W: ch = 'w'; break;
                    case CellClass::WT: ch = 'm'; break;
                    default: ch = '?';
                }
            }
            if (overlay)
                for (const SCell& wc : *overlay)
                    if (wc == c) ch = '*';
            out << ch << ' ';
        }
        out << "\n";
    }
    out << "D = array cell, t = transposed copy, w = W cell, m = mirrored W cell";
    if (overlay) out << ", * = worm";
    out << "\n";
    return out.str();
}

std::string Staircase::render_svg(const std::map<SCell, Polynomial>* fill) const
{
    const int s = 46;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n_ * s + 2 << "\" height=\""
        << n_ * s + 2 << "\">\n";
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) {
            SCell c{i, j};
            if (!in_band(c)) continue;
            const char* color = "white";
            switch (cell_class(c)) {
                case CellClass::Drh: color = "#aeeaf2"; break;
                case CellClass::DrhT: color = "#b8f2ae"; break;
                default: break;
            }
            out << "  <rect x=\"" << i * s + 1 << "\" y=\"" << j * s + 1 << "\" width=\"" << s
                << "\" height=\"" << s << "\" fill=\"" << color
                << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
            std::string label;
            CellClass cls = cell_class(c);
            if (cls == CellClass::Drh) {
                Cell dc = drh_cell(c);
                label = "a" + std::to_string(dc.x) + std::to_string(dc.y);
            } else if (cls == CellClass::W) {
                auto [r, sidx] = subsk(c);
                label = "[" + std::to_string(r) + "," + std::to_string(sidx) + "]";
            } else if (fill) {
                auto it = fill->find(c);
                if (it != fill->end() && it->second.term_count() == 1) label = it->second.str();
            }
            if (!label.empty())
                out << "  <text x=\"" << i * s + s / 2 + 1 << "\" y=\"" << j * s + s / 2 + 5
                    << "\" font-size=\"11\" text-anchor=\"middle\">" << label << "</text>\n";
        }
    out << "</svg>\n";
    return out.str();
}

}  // namespace drh
