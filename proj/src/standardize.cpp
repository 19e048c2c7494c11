#include "drh/standardize.hpp"

#include <algorithm>
#include <stdexcept>

namespace drh {

std::string Subskeleton::word() const
{
    std::string w;
    for (int t = r; t <= s; ++t) w += parent->path().letter(t);
    return w;
}

Subskeleton subskeleton(const DrhArray& parent, int r, int s)
{
    if (r < 1 || s > parent.length() || r > s)
        throw std::invalid_argument("subskeleton: need 1 <= r <= s <= l");
    return {&parent, r, s};
}

namespace {

Block square_at(const DrhArray& a, LatticePoint pt)
{
    auto v = [&](int x, int y) { return Polynomial::variable({x, y}); };
    return {v(pt.x, pt.y), v(pt.x + 1, pt.y), v(pt.x, pt.y + 1), v(pt.x + 1, pt.y + 1)};
}

}  // namespace

DrhMatrix standardize(const Subskeleton& mu)
{
    const DrhArray& a = *mu.parent;
    const auto& pts = a.lattice_points();
    char first = a.path().letter(mu.r);
    char last = a.path().letter(mu.s);
    // Starting domino from the square at the first lattice point of mu: the
    // bottom row when mu starts with N, the left column when it starts with E.
    Block bs = square_at(a, pts[mu.r - 1]);
    Domino s = (first == 'N') ? bs.h_minus() : bs.v_minus();
    Block bf = square_at(a, pts[mu.s]);
    Domino f = (last == 'N') ? bf.h_plus() : bf.v_plus();
    std::vector<Block> bends;
    for (int j = mu.r + 1; j <= mu.s; ++j)
        if (a.path().letter(j - 1) != a.path().letter(j)) bends.push_back(square_at(a, pts[j - 1]));
    return concat(s, bends, f);
}

Polynomial cluster_variable(const Subskeleton& mu)
{
    DrhMatrix m = standardize(mu);
    size_t eta = m.matrix.rows();
    Polynomial det = poly_det(m.matrix);
    return ((eta - 1) * (eta - 2) / 2) % 2 == 0 ? det : -det;
}

std::map<SCell, Polynomial> fill_staircase(const Staircase& sc)
{
    std::map<SCell, Polynomial> fill;
    for (const SCell& c : sc.band_cells()) {
        switch (sc.cell_class(c)) {
            case CellClass::Drh: {
                Cell dc = sc.drh_cell(c);
                fill[c] = Polynomial::variable({dc.x, dc.y});
                break;
            }
            case CellClass::W: {
                auto [r, s] = sc.subsk(c);
                fill[c] = cluster_variable(subskeleton(sc.array(), r, s));
                break;
            }
            default:
                break;  // mirrored below
        }
    }
    for (const SCell& c : sc.band_cells()) {
        CellClass cls = sc.cell_class(c);
        if (cls == CellClass::DrhT || cls == CellClass::WT) fill[c] = fill.at(sc.transpose(c));
    }
    return fill;
}

EndTransformation classify_end_transformation(const DrhArray& parent, int r1, int s1, int r2,
                                              int s2)
{
    bool start_side = s1 == s2;
    if (!start_side && r1 != r2)
        throw std::invalid_argument("classify_end_transformation: subskeleta differ at both ends");
    auto eta = [&](int r, int s) {
        return static_cast<int>(standardize(subskeleton(parent, r, s)).matrix.rows());
    };
    int delta = eta(r2, s2) - eta(r1, s1);
    EtKind kind;
    switch (std::abs(delta)) {
        case 0: kind = EtKind::ET1; break;
        case 1: kind = EtKind::ET2; break;
        case 2: kind = EtKind::ET3; break;
        default:
            throw std::logic_error("classify_end_transformation: adjacent forms differ too much");
    }
    return {kind, start_side, delta};
}

FrozenMonomial quadruple_factor(const Staircase& sc, const Quadruple& q,
                                std::vector<int>* multiplicity_warnings)
{
    return sc.quadruple_factor(q.x, q.y, multiplicity_warnings);
}

bool DecompositionReport::all_ok() const
{
    for (const auto& e : entries)
        if (!e.ok) return false;
    return true;
}

DecompositionReport verify_decomposition(const Staircase& sc,
                                         const std::map<SCell, Polynomial>& fill)
{
    DecompositionReport report;
    int l = sc.length();
    for (int x = 1; x + 1 <= l; ++x) {
        for (int y = 1; y + 1 <= l; ++y) {
            bool inside = true;
            for (int dx = 0; dx <= 1 && inside; ++dx)
                for (int dy = 0; dy <= 1; ++dy)
                    if (sc.row_label(y + dy) > sc.col_label(x + dx)) {
                        inside = false;
                        break;
                    }
            if (!inside) continue;
            DecompositionEntry e;
            e.quad = {x, y};
            SCell m11 = sc.w_cell(x, y + 1), m12 = sc.w_cell(x + 1, y + 1);
            SCell m21 = sc.w_cell(x, y), m22 = sc.w_cell(x + 1, y);
            e.subskeleta = {sc.subsk(m11), sc.subsk(m12), sc.subsk(m21), sc.subsk(m22)};
            Polynomial lhs =
                fill.at(m11) * fill.at(m22) - fill.at(m12) * fill.at(m21);
            e.lhs = lhs.str();
            FrozenMonomial f = sc.quadruple_factor(x, y, &e.multiplicity_warnings);
            e.factor = f.str();
            RationalFunction rhs = sc.monomial_value(f);
            e.ok = rhs.is_polynomial() && rhs.num() == lhs;
            if (!e.ok && rhs.is_polynomial() && rhs.num() == -lhs) e.sign_only = true;
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

bool ThreeByThreeReport::all_ok() const
{
    for (const auto& e : entries)
        if (!e.ok) return false;
    return true;
}

ThreeByThreeReport verify_three_by_three(const Staircase& sc,
                                         const std::map<SCell, Polynomial>& fill)
{
    ThreeByThreeReport report;
    int n = sc.n();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            SCell center{i, j};
            bool inside = true;
            for (int di = -1; di <= 1 && inside; ++di)
                for (int dj = -1; dj <= 1; ++dj)
                    if (!sc.in_band(sc.canon(i + di, j + dj))) {
                        inside = false;
                        break;
                    }
            if (!inside) continue;
            bool special_corner = false;
            for (int da = -1; da <= 0 && !special_corner; ++da)
                for (int db = -1; db <= 0; ++db)
                    if (sc.lattice_fc({sc.mod(i + da), sc.mod(j + db)}).special) {
                        special_corner = true;
                        break;
                    }
            if (special_corner) {
                ++report.skipped_special;
                continue;
            }
            PolyMatrix m(3, 3);
            for (int dj = -1; dj <= 1; ++dj)
                for (int di = -1; di <= 1; ++di)
                    m.at(dj + 1, di + 1) = fill.at(sc.canon(i + di, j + dj));
            report.entries.push_back({center, poly_det(m).is_zero()});
        }
    }
    return report;
}

}  // namespace drh
