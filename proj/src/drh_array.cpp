#include "drh/drh_array.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace drh {

LatticePath::LatticePath(std::string word) : word_(std::move(word))
{
    for (char c : word_)
        if (c != 'N' && c != 'E') throw std::invalid_argument("LatticePath: alphabet is {N,E}");
}

int LatticePath::count_n() const
{
    return static_cast<int>(std::count(word_.begin(), word_.end(), 'N'));
}

int LatticePath::count_e() const
{
    return static_cast<int>(std::count(word_.begin(), word_.end(), 'E'));
}

LatticePath LatticePath::transpose() const
{
    std::string t(word_.rbegin(), word_.rend());
    for (char& c : t) c = (c == 'N') ? 'E' : 'N';
    return LatticePath(t);
}

std::string LatticePath::labeled() const
{
    std::string out;
    for (int t = 1; t <= length(); ++t) {
        out += letter(t);
        out += "^" + std::to_string(t);
    }
    return out;
}

DrhArray::DrhArray(LatticePath path) : path_(std::move(path))
{
    p_ = path_.count_e() + 2;
    q_ = path_.count_n() + 2;
    LatticePoint cur{1, 1};
    points_.push_back(cur);
    for (int t = 1; t <= path_.length(); ++t) {
        if (path_.letter(t) == 'N')
            ++cur.y;
        else
            ++cur.x;
        points_.push_back(cur);
    }
    for (const auto& pt : points_) {
        cells_.insert({pt.x, pt.y});
        cells_.insert({pt.x + 1, pt.y});
        cells_.insert({pt.x, pt.y + 1});
        cells_.insert({pt.x + 1, pt.y + 1});
    }
    if (static_cast<int>(cells_.size()) != 2 * path_.length() + 4)
        throw std::logic_error("DrhArray: unexpected cell count");
}

Polynomial DrhArray::value(Cell c) const
{
    if (!has_cell(c)) throw std::invalid_argument("DrhArray: cell outside the array");
    return Polynomial::variable({c.x, c.y});
}

Polynomial DrhArray::square_det(LatticePoint pt) const
{
    Polynomial ul = Polynomial::variable({pt.x, pt.y + 1});
    Polynomial ur = Polynomial::variable({pt.x + 1, pt.y + 1});
    Polynomial ll = Polynomial::variable({pt.x, pt.y});
    Polynomial lr = Polynomial::variable({pt.x + 1, pt.y});
    return ul * lr - ur * ll;
}

std::vector<Polynomial> DrhArray::frozen_minors() const
{
    std::vector<Polynomial> ds;
    ds.push_back(Polynomial::variable({1, 1}));  // Delta_0 = a11
    for (const auto& pt : points_) ds.push_back(square_det(pt));
    ds.push_back(Polynomial::variable({p_, q_}));  // Delta_{l+2} = a_pq
    return ds;
}

std::string DrhArray::render() const
{
    std::ostringstream out;
    for (int y = q_; y >= 1; --y) {
        for (int x = 1; x <= p_; ++x) {
            if (has_cell({x, y})) {
                std::string label = "a" + std::to_string(x) + "," + std::to_string(y);
                out << label << std::string(label.size() < 7 ? 7 - label.size() : 1, ' ');
            } else {
                out << std::string(7, ' ');
            }
        }
        out << "\n";
    }
    return out.str();
}

std::vector<Cell> bug_path(const DrhArray& array)
{
    Cell pq = array.corner_ur();
    auto adjacent = [&](Cell c) {
        int dx = std::abs(c.x - pq.x), dy = std::abs(c.y - pq.y);
        return dx + dy == 1;
    };
    Cell cur{1, 2};
    std::vector<Cell> out{cur};
    bool going_right = true;
    while (!adjacent(cur)) {
        Cell step = going_right ? Cell{cur.x + 1, cur.y} : Cell{cur.x, cur.y + 1};
        if (!array.has_cell(step)) {
            going_right = !going_right;
            step = going_right ? Cell{cur.x + 1, cur.y} : Cell{cur.x, cur.y + 1};
            if (!array.has_cell(step)) throw std::logic_error("bug_path: stuck");
        }
        cur = step;
        out.push_back(cur);
    }
    if (static_cast<int>(out.size()) != array.length() + 1)
        throw std::logic_error("bug_path: wrong cell count");
    return out;
}

namespace {

// 1-based index t such that the path segment L_t -> L_{t+1} equals (a -> b);
// 0 when the segment is not on the path.
int segment_index(const DrhArray& array, LatticePoint a, LatticePoint b)
{
    const auto& pts = array.lattice_points();
    for (size_t t = 0; t + 1 < pts.size(); ++t)
        if (pts[t] == a && pts[t + 1] == b) return static_cast<int>(t) + 1;
    return 0;
}

int point_index(const DrhArray& array, LatticePoint a)
{
    const auto& pts = array.lattice_points();
    for (size_t t = 0; t < pts.size(); ++t)
        if (pts[t] == a) return static_cast<int>(t) + 1;
    return -1;
}

}  // namespace

InitialSeed initial_quiver(const DrhArray& array)
{
    int l = array.length();
    auto cells = bug_path(array);
    InitialSeed out;
    Seed& seed = out.seed;
    out.mutable_cells = cells;

    for (const Cell& c : cells) {
        int id = seed.quiver.add_vertex("a[" + std::to_string(c.x) + "," + std::to_string(c.y) + "]",
                                        false);
        seed.vars.push_back(RationalFunction(array.value(c)));
        out.mutable_ids.push_back(id);
    }
    auto minors = array.frozen_minors();
    for (int i = 0; i <= l + 2; ++i) {
        std::string name = (i == 0)       ? "a11"
                           : (i == l + 2) ? "apq"
                                          : "D" + std::to_string(i);
        int id = seed.quiver.add_vertex(name, true);
        seed.vars.push_back(RationalFunction(minors[i]));
        out.frozen_minor_ids.push_back(id);
    }
    auto frozen = [&](int i) { return out.frozen_minor_ids.at(i); };

    // Arrows between consecutive worm cells: rightward along rows, downward
    // along columns.
    for (int k = 0; k + 1 <= l; ++k) {
        bool right = cells[k + 1].x == cells[k].x + 1;
        if (right)
            seed.quiver.add_arrow(out.mutable_ids[k], out.mutable_ids[k + 1]);
        else
            seed.quiver.add_arrow(out.mutable_ids[k + 1], out.mutable_ids[k]);
    }

    // Frozen arrows, placed so that the one-step exchange at each cell is the
    // applicable identity among D1-D5.
    auto require_point = [&](LatticePoint pt) {
        int j = point_index(array, pt);
        if (j < 0) throw std::logic_error("initial_quiver: expected a path lattice point");
        return j;
    };
    for (int k = 0; k <= l; ++k) {
        int v = out.mutable_ids[k];
        Cell c = cells[k];
        if (l == 0) {
            // Single mutable cell; exchange is D1 on the only square.
            seed.quiver.add_arrow(v, frozen(0));
            seed.quiver.add_arrow(v, frozen(2));
            seed.quiver.add_arrow(frozen(1), v);
            break;
        }
        bool is_start = k == 0;
        bool is_end = k == l;
        if (is_start) {
            // First step is always horizontal: out to a11, in from Delta_1.
            seed.quiver.add_arrow(v, frozen(0));
            seed.quiver.add_arrow(frozen(1), v);
            continue;
        }
        if (is_end) {
            // Four configurations by the cell's position against c_pq and the
            // arrival direction; each one-step exchange is D1, D2 or D5.
            bool vertical_arrival = cells[k - 1].x == c.x;
            bool left_of_pq = c.x == array.p() - 1;
            if (left_of_pq && vertical_arrival) {
                seed.quiver.add_arrow(v, frozen(l + 2));
                seed.quiver.add_arrow(frozen(l + 1), v);
            } else if (!left_of_pq && !vertical_arrival) {
                seed.quiver.add_arrow(v, frozen(l + 1));
                seed.quiver.add_arrow(frozen(l + 2), v);
            } else if (!left_of_pq) {
                // below c_pq, vertical arrival: the flip leaves the array
                seed.quiver.add_arrow(v, frozen(l + 1));
                seed.quiver.add_arrow(frozen(l), v);
                seed.quiver.add_arrow(frozen(l + 2), v);
            } else {
                // left of c_pq, horizontal arrival
                seed.quiver.add_arrow(v, frozen(l + 2));
                seed.quiver.add_arrow(v, frozen(l));
                seed.quiver.add_arrow(frozen(l + 1), v);
            }
            continue;
        }
        bool in_horizontal = cells[k - 1].y == c.y;   // step into c
        bool out_horizontal = cells[k + 1].y == c.y;  // step out of c
        if (in_horizontal && !out_horizontal) {
            // EN-bend: single out-arrow to the minor at the upper-left corner.
            int j = require_point({c.x - 1, c.y});
            seed.quiver.add_arrow(v, frozen(j));
        } else if (!in_horizontal && out_horizontal) {
            // NE-bend: single in-arrow from the minor at the lower-right corner.
            int j = require_point({c.x, c.y - 1});
            seed.quiver.add_arrow(frozen(j), v);
        } else if (in_horizontal) {
            // Straight horizontal: the skeleton covers the top or bottom edge.
            int t = segment_index(array, {c.x - 1, c.y - 1}, {c.x, c.y - 1});
            if (t == 0) t = segment_index(array, {c.x - 1, c.y}, {c.x, c.y});
            if (t == 0) throw std::logic_error("initial_quiver: no skeleton edge at horizontal cell");
            seed.quiver.add_arrow(v, frozen(t));
            seed.quiver.add_arrow(frozen(t + 1), v);
        } else {
            // Straight vertical: the skeleton covers the left or right edge.
            int t = segment_index(array, {c.x - 1, c.y - 1}, {c.x - 1, c.y});
            if (t == 0) t = segment_index(array, {c.x, c.y - 1}, {c.x, c.y});
            if (t == 0) throw std::logic_error("initial_quiver: no skeleton edge at vertical cell");
            seed.quiver.add_arrow(v, frozen(t + 1));
            seed.quiver.add_arrow(frozen(t), v);
        }
    }
    return out;
}

bool check_identities_D1_D5()
{
    auto v = [](int i) { return Polynomial::variable({i, 1}); };
    Polynomial a = v(1), b = v(2), c = v(3), d = v(4), e = v(5), f = v(6);
    auto det2 = [](const Polynomial& w, const Polynomial& x, const Polynomial& y,
                   const Polynomial& z) { return w * z - x * y; };
    // D1 on [[a,b],[c,d]]
    bool d1 = a * d == det2(a, b, c, d) + b * c;
    // D2, D3 on the 2x3 array [[a,b,c],[d,e,f]]
    bool d2 = b * det2(a, c, d, f) == a * det2(b, c, e, f) + c * det2(a, b, d, e);
    bool d3 = e * det2(a, c, d, f) == d * det2(b, c, e, f) + f * det2(a, b, d, e);
    // D4, D5 on the 3x2 array [[a,d],[b,e],[c,f]]
    bool d4 = b * det2(a, d, c, f) == a * det2(b, e, c, f) + c * det2(a, d, b, e);
    bool d5 = e * det2(a, d, c, f) == d * det2(b, e, c, f) + f * det2(a, d, b, e);
    return d1 && d2 && d3 && d4 && d5;
}

}  // namespace drh
