#include "drh/wiring.hpp"

#include "drh/polymatrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drh {

DoubleWiringDiagram::DoubleWiringDiagram(int strands, std::vector<Crossing> crossings)
    : n_(strands), crossings_(std::move(crossings))
{
    if (n_ < 2) throw std::invalid_argument("DoubleWiringDiagram: need at least two strands");
    for (const Crossing& c : crossings_)
        if (c.level < 1 || c.level >= n_)
            throw std::invalid_argument("DoubleWiringDiagram: crossing level out of range");
}

bool DoubleWiringDiagram::valid() const
{
    for (Color col : {Color::Red, Color::Blue}) {
        std::vector<int> lines(n_ + 1);
        std::iota(lines.begin(), lines.end(), 0);  // lines[h] = line at height h
        int count = 0;
        for (const Crossing& c : crossings_) {
            if (c.color != col) continue;
            ++count;
            if (lines[c.level] > lines[c.level + 1]) return false;  // pair crossing twice
            std::swap(lines[c.level], lines[c.level + 1]);
        }
        if (count != n_ * (n_ - 1) / 2) return false;
    }
    return true;
}

std::string DoubleWiringDiagram::render() const
{
    std::ostringstream out;
    for (int h = n_ - 1; h >= 1; --h) {
        out << "level " << h << ": ";
        for (const Crossing& c : crossings_)
            out << (c.level == h ? (c.color == Color::Red ? 'R' : 'B') : '.');
        out << "\n";
    }
    return out.str();
}

std::vector<Chamber> chambers(const DoubleWiringDiagram& d)
{
    int n = d.strands();
    int m = static_cast<int>(d.crossings().size());
    // Line states after each prefix, per color.
    std::vector<std::vector<int>> red_state(m + 1), blue_state(m + 1);
    std::vector<int> red(n + 1), blue(n + 1);
    std::iota(red.begin(), red.end(), 0);
    std::iota(blue.begin(), blue.end(), 0);
    red_state[0] = red;
    blue_state[0] = blue;
    for (int k = 0; k < m; ++k) {
        const Crossing& c = d.crossings()[k];
        auto& lines = c.color == Color::Red ? red : blue;
        std::swap(lines[c.level], lines[c.level + 1]);
        red_state[k + 1] = red;
        blue_state[k + 1] = blue;
    }
    auto labels = [&](const std::vector<int>& lines, int h) {
        std::vector<int> out(lines.begin() + 1, lines.begin() + 1 + h);
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<Chamber> out;
    for (int h = 1; h <= n; ++h) {
        std::vector<int> cuts;
        for (int k = 0; k < m; ++k)
            if (d.crossings()[k].level == h) cuts.push_back(k);
        for (size_t t = 0; t <= cuts.size(); ++t) {
            Chamber ch;
            ch.level = h;
            ch.seg_begin = t == 0 ? 0 : cuts[t - 1] + 1;
            ch.seg_end = t == cuts.size() ? m : cuts[t];
            ch.bounded_left = t > 0;
            ch.bounded_right = t < cuts.size();
            ch.red = labels(red_state[ch.seg_begin], h);
            ch.blue = labels(blue_state[ch.seg_begin], h);
            out.push_back(std::move(ch));
        }
    }
    return out;
}

Polynomial chamber_minor(const Chamber& c)
{
    size_t k = c.red.size();
    PolyMatrix m(k, k);
    // Display convention: rows (blue labels) top-down in decreasing order,
    // columns (red labels) left-to-right increasing; entry a[col,row].
    for (size_t u = 0; u < k; ++u)
        for (size_t v = 0; v < k; ++v)
            m.at(u, v) = Polynomial::variable({c.red[v], c.blue[k - 1 - u]});
    return poly_det(m);
}

WiringSeed wiring_quiver(const DoubleWiringDiagram& d)
{
    WiringSeed out;
    auto chs = chambers(d);
    out.chamber_list = chs;
    int n = d.strands();
    int m = static_cast<int>(d.crossings().size());
    for (const Chamber& c : chs) {
        bool frozen = !c.bounded_left || !c.bounded_right;
        std::ostringstream name;
        name << "L" << c.level << "[" << c.seg_begin << "," << c.seg_end << ")";
        out.seed.quiver.add_vertex(name.str(), frozen);
        out.seed.vars.push_back(RationalFunction(chamber_minor(c)));
    }
    // Chamber at a level whose extent contains crossing k (strictly), and the
    // side chambers of crossing k at its own level.
    auto chamber_containing = [&](int level, int k) -> int {
        for (size_t i = 0; i < chs.size(); ++i)
            if (chs[i].level == level && chs[i].seg_begin <= k && k < chs[i].seg_end)
                return static_cast<int>(i);
        return -1;
    };
    auto left_of = [&](int level, int k) -> int {
        for (size_t i = 0; i < chs.size(); ++i)
            if (chs[i].level == level && chs[i].seg_end == k) return static_cast<int>(i);
        return -1;
    };
    auto right_of = [&](int level, int k) -> int {
        for (size_t i = 0; i < chs.size(); ++i)
            if (chs[i].level == level && chs[i].seg_begin == k + 1) return static_cast<int>(i);
        return -1;
    };
    for (int k = 0; k < m; ++k) {
        const Crossing& c = d.crossings()[k];
        int L = left_of(c.level, k), R = right_of(c.level, k);
        if (L < 0 || R < 0) throw std::logic_error("wiring_quiver: missing side chamber");
        if (c.color == Color::Red) {
            out.seed.quiver.add_arrow(L, R);
            if (c.level >= 2) {
                int X = chamber_containing(c.level - 1, k);
                if (X < 0) throw std::logic_error("wiring_quiver: missing chamber below");
                out.seed.quiver.add_arrow(R, X);
                out.seed.quiver.add_arrow(X, L);
            }
        } else {
            out.seed.quiver.add_arrow(R, L);
            if (c.level + 1 <= n) {
                int U = chamber_containing(c.level + 1, k);
                if (U < 0) throw std::logic_error("wiring_quiver: missing chamber above");
                out.seed.quiver.add_arrow(L, U);
                out.seed.quiver.add_arrow(U, R);
            }
        }
    }
    return out;
}

std::vector<std::vector<Cell>> correspondence_candidates(const DrhArray& array)
{
    auto worm = bug_path(array);
    auto is_worm_cell = [&](Cell c) {
        return std::find(worm.begin(), worm.end(), c) != worm.end();
    };
    std::vector<std::vector<Cell>> out;
    const auto& pts = array.lattice_points();
    for (int t = 1; t <= array.length(); ++t) {
        LatticePoint a = pts[t - 1], b = pts[t];
        std::vector<Cell> cands;
        if (a.y == b.y) {
            // horizontal step: cells above and below
            for (Cell c : {Cell{a.x + 1, a.y + 1}, Cell{a.x + 1, a.y}})
                if (array.has_cell(c) && is_worm_cell(c)) cands.push_back(c);
        } else {
            // vertical step: cells left and right
            for (Cell c : {Cell{a.x, a.y + 1}, Cell{a.x + 1, a.y + 1}})
                if (array.has_cell(c) && is_worm_cell(c)) cands.push_back(c);
        }
        if (cands.empty())
            throw std::logic_error("correspondence_candidates: no worm cell adjacent to a step");
        out.push_back(std::move(cands));
    }
    return out;
}

std::vector<CorrespondenceChoice> all_correspondence_choices(const DrhArray& array)
{
    auto cands = correspondence_candidates(array);
    std::vector<CorrespondenceChoice> out{{}};
    for (const auto& options : cands) {
        std::vector<CorrespondenceChoice> next;
        for (const auto& prefix : out)
            for (const Cell& c : options) {
                CorrespondenceChoice ext = prefix;
                ext.push_back(c);
                next.push_back(std::move(ext));
            }
        out = std::move(next);
    }
    return out;
}

namespace {

// Inserts the remaining multiset of upper letters (levels >= 3) into the
// color's word so the whole becomes a reduced word for w0; returns for each
// gap (0..word.size()) the levels inserted there.
std::optional<std::vector<std::vector<int>>> complete_reduced(int n, const std::vector<int>& word,
                                                              std::vector<int> remaining)
{
    std::vector<std::vector<int>> insertions(word.size() + 1);
    std::vector<int> lines(n + 1);
    std::iota(lines.begin(), lines.end(), 0);
    std::function<bool(size_t)> go = [&](size_t pos) -> bool {
        if (pos == word.size() && std::all_of(remaining.begin(), remaining.end(),
                                              [](int c) { return c == 0; }))
            return true;
        // Try consuming the next fixed letter first.
        if (pos < word.size() && lines[word[pos]] < lines[word[pos] + 1]) {
            std::swap(lines[word[pos]], lines[word[pos] + 1]);
            if (go(pos + 1)) return true;
            std::swap(lines[word[pos]], lines[word[pos] + 1]);
        }
        // Otherwise insert a legal upper letter at this gap.
        for (int h = 3; h < n; ++h) {
            if (remaining[h] == 0 || lines[h] > lines[h + 1]) continue;
            --remaining[h];
            std::swap(lines[h], lines[h + 1]);
            insertions[pos].push_back(h);
            if (go(pos)) return true;
            insertions[pos].pop_back();
            std::swap(lines[h], lines[h + 1]);
            ++remaining[h];
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return insertions;
}

}  // namespace

DoubleWiringDiagram drh_to_wiring(const DrhArray& array, const CorrespondenceChoice& choice)
{
    const LatticePath& path = array.path();
    if (path.count_n() != path.count_e())
        throw std::invalid_argument("drh_to_wiring: path must be balanced");
    int l = path.length();
    int n = l / 2 + 2;
    auto worm = bug_path(array);
    if (static_cast<int>(choice.size()) != l)
        throw std::invalid_argument("drh_to_wiring: one chosen cell per skeleton step");

    // Extended worm: c11, worm cells, c_pq.
    std::vector<Cell> ext{array.corner_ll()};
    ext.insert(ext.end(), worm.begin(), worm.end());
    ext.push_back(array.corner_ur());
    std::vector<Crossing> bottom;
    for (size_t j = 0; j + 1 < ext.size(); ++j) {
        bool east = ext[j + 1].x == ext[j].x + 1;
        bool north = ext[j + 1].y == ext[j].y + 1;
        if (east == north) throw std::logic_error("drh_to_wiring: broken extended worm");
        bottom.push_back({east ? Color::Red : Color::Blue, 1});
    }

    // Second row: skeleton step t sits in the gap after the bottom crossing
    // entering its chosen worm cell.
    std::vector<std::vector<Crossing>> second(bottom.size());
    auto cands = correspondence_candidates(array);
    for (int t = 1; t <= l; ++t) {
        Cell chosen = choice[t - 1];
        if (std::find(cands[t - 1].begin(), cands[t - 1].end(), chosen) == cands[t - 1].end())
            throw std::invalid_argument("drh_to_wiring: invalid correspondence choice");
        auto it = std::find(worm.begin(), worm.end(), chosen);
        size_t gap = static_cast<size_t>(it - worm.begin());  // between bottom[gap], bottom[gap+1]
        second[gap].push_back({path.letter(t) == 'E' ? Color::Red : Color::Blue, 2});
    }
    std::vector<Crossing> seq;
    for (size_t j = 0; j < bottom.size(); ++j) {
        seq.push_back(bottom[j]);
        for (const Crossing& c : second[j]) seq.push_back(c);
    }

    // Upper completion per color.
    for (Color col : {Color::Red, Color::Blue}) {
        std::vector<int> word;
        std::vector<size_t> positions;  // index into seq of each colored crossing
        for (size_t k = 0; k < seq.size(); ++k)
            if (seq[k].color == col) {
                word.push_back(seq[k].level);
                positions.push_back(k);
            }
        std::vector<int> remaining(n + 1, 0);
        for (int h = 3; h < n; ++h) remaining[h] = n - h;
        auto insertions = complete_reduced(n, word, remaining);
        if (!insertions) throw std::logic_error("drh_to_wiring: no reduced completion");
        std::vector<Crossing> merged;
        auto emit_gap = [&](size_t gap) {
            for (int h : (*insertions)[gap]) merged.push_back({col, h});
        };
        size_t colored_seen = 0;
        for (size_t k = 0; k < seq.size(); ++k) {
            if (seq[k].color == col) {
                emit_gap(colored_seen);
                ++colored_seen;
            }
            merged.push_back(seq[k]);
        }
        emit_gap(colored_seen);
        seq = std::move(merged);
    }

    DoubleWiringDiagram d(n, seq);
    if (!d.valid()) throw std::logic_error("drh_to_wiring: invalid diagram");
    return d;
}

bool second_row_separation_holds(const DoubleWiringDiagram& d)
{
    for (Color col : {Color::Red, Color::Blue}) {
        int last_bottom = -1;
        bool second_seen = false;
        for (size_t k = 0; k < d.crossings().size(); ++k) {
            const Crossing& c = d.crossings()[k];
            if (c.color != col) continue;
            if (c.level == 2) second_seen = true;
            if (c.level == 1) {
                if (last_bottom >= 0 && !second_seen) return false;
                last_bottom = static_cast<int>(k);
                second_seen = false;
            }
        }
    }
    return true;
}

WiringEquivalenceReport check_drh_wiring_equivalence(const LatticePath& path)
{
    WiringEquivalenceReport report;
    report.path = path.word().empty() ? "(empty)" : path.word();
    std::string word = path.word();
    int nu = path.count_n(), eps = path.count_e();
    if (nu > eps) word.append(nu - eps, 'E');
    if (eps > nu) word.append(eps - nu, 'N');
    report.balanced = word.empty() ? "(empty)" : word;
    DrhArray array{LatticePath(word)};
    Seed reference = initial_quiver(array).seed;

    for (const CorrespondenceChoice& choice : all_correspondence_choices(array)) {
        ++report.choices;
        DoubleWiringDiagram d = drh_to_wiring(array, choice);
        if (!second_row_separation_holds(d)) {
            report.failures.push_back("second-row separation fails");
            continue;
        }
        WiringSeed ws = wiring_quiver(d);
        std::vector<int> keep;
        for (size_t v = 0; v < ws.chamber_list.size(); ++v)
            if (!ws.seed.quiver.is_frozen(static_cast<int>(v)) && ws.chamber_list[v].level == 1)
                keep.push_back(static_cast<int>(v));
        // Freeze everything outside the bottom row, then prune.
        Seed restricted = freeze_and_prune(ws.seed, keep);
        if (!seeds_equivalent(restricted, reference)) {
            std::ostringstream why;
            why << "choice";
            for (const Cell& c : choice) why << " (" << c.x << "," << c.y << ")";
            why << ": restricted wiring seed differs from the array seed";
            report.failures.push_back(why.str());
        }
    }
    return report;
}

}  // namespace drh
