#include "drh/quiver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace drh {

int Quiver::add_vertex(std::string name, bool frozen)
{
    frozen_.push_back(frozen);
    names_.push_back(std::move(name));
    return size() - 1;
}

int Quiver::arrow(int u, int v) const
{
    auto it = arrows_.find({u, v});
    if (it != arrows_.end()) return it->second;
    it = arrows_.find({v, u});
    if (it != arrows_.end()) return -it->second;
    return 0;
}

void Quiver::add_arrow(int u, int v, int mult)
{
    set_arrow(u, v, arrow(u, v) + mult);
}

void Quiver::set_arrow(int u, int v, int mult)
{
    if (u == v) throw std::invalid_argument("Quiver: self-arrow");
    arrows_.erase({u, v});
    arrows_.erase({v, u});
    if (mult == 0) return;
    if (is_frozen(u) && is_frozen(v)) return;  // frozen-frozen arrows untracked
    if (mult > 0)
        arrows_[{u, v}] = mult;
    else
        arrows_[{v, u}] = -mult;
}

std::vector<int> Quiver::mutable_vertices() const
{
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (!frozen_[v]) out.push_back(v);
    return out;
}

std::vector<int> Quiver::frozen_vertices() const
{
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (frozen_[v]) out.push_back(v);
    return out;
}

Quiver Quiver::mutated(int k) const
{
    if (is_frozen(k)) throw std::invalid_argument("mutate: frozen vertex");
    if (k < 0 || k >= size()) throw std::invalid_argument("mutate: unknown vertex");
    Quiver q = *this;
    q.arrows_.clear();
    int n = size();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (is_frozen(u) && is_frozen(v)) continue;
            int b;
            if (u == k || v == k) {
                b = -arrow(u, v);
            } else {
                int buk = arrow(u, k), bkv = arrow(k, v);
                b = arrow(u, v);
                if (buk > 0 && bkv > 0)
                    b += buk * bkv;
                else if (buk < 0 && bkv < 0)
                    b -= (-buk) * (-bkv);
            }
            q.set_arrow(u, v, b);
        }
    }
    return q;
}

bool Quiver::two_cycle_free() const
{
    for (const auto& [uv, m] : arrows_) {
        if (m <= 0) return false;
        if (arrows_.count({uv.second, uv.first})) return false;
    }
    return true;
}

std::string Seed::cluster_key() const
{
    std::vector<std::string> parts;
    for (int v : quiver.mutable_vertices()) parts.push_back(vars[v].str());
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) {
        key += p;
        key += ';';
    }
    return key;
}

Seed mutate(const Seed& seed, int k)
{
    const Quiver& q = seed.quiver;
    if (k < 0 || k >= q.size()) throw std::invalid_argument("mutate: unknown vertex");
    if (q.is_frozen(k)) throw std::invalid_argument("mutate: frozen vertex");
    Seed out;
    out.quiver = q.mutated(k);
    out.vars = seed.vars;

    bool all_poly = seed.vars[k].is_polynomial();
    for (int u = 0; u < q.size() && all_poly; ++u)
        if (q.arrow(u, k) != 0 && !seed.vars[u].is_polynomial()) all_poly = false;

    if (all_poly) {
        Polynomial in_prod = Polynomial::constant(1);
        Polynomial out_prod = Polynomial::constant(1);
        for (int u = 0; u < q.size(); ++u) {
            int b = q.arrow(u, k);
            for (int i = 0; i < std::abs(b); ++i)
                (b > 0 ? in_prod : out_prod) *= seed.vars[u].num();
        }
        Polynomial num = in_prod + out_prod;
        auto exact = divide_exact(num, seed.vars[k].num());
        out.vars[k] = exact ? RationalFunction(std::move(*exact))
                            : ratfun_reduce(num, seed.vars[k].num());
    } else {
        RationalFunction in_rf(Polynomial::constant(1));
        RationalFunction out_rf(Polynomial::constant(1));
        for (int u = 0; u < q.size(); ++u) {
            int b = q.arrow(u, k);
            for (int i = 0; i < std::abs(b); ++i)
                (b > 0 ? in_rf : out_rf) = (b > 0 ? in_rf : out_rf) * seed.vars[u];
        }
        out.vars[k] = (in_rf + out_rf) / seed.vars[k];
    }
    return out;
}

FrozenCoefficient FrozenCoefficient::operator*(const FrozenCoefficient& o) const
{
    FrozenCoefficient r = *this;
    for (const auto& [key, e] : o.expo) {
        r.expo[key] += e;
        if (r.expo[key] == 0) r.expo.erase(key);
    }
    return r;
}

FrozenCoefficient FrozenCoefficient::inverse() const
{
    FrozenCoefficient r;
    for (const auto& [key, e] : expo) r.expo[key] = -e;
    return r;
}

std::string FrozenCoefficient::str() const
{
    if (expo.empty()) return "1";
    std::ostringstream num, den;
    bool has_num = false, has_den = false;
    for (const auto& [key, e] : expo) {
        auto& side = e > 0 ? num : den;
        bool& has = e > 0 ? has_num : has_den;
        if (has) side << "*";
        side << "(" << key << ")";
        if (std::abs(e) > 1) side << "^" << std::abs(e);
        has = true;
    }
    if (!has_num) return "1/" + den.str();
    if (!has_den) return num.str();
    return num.str() + " / " + den.str();
}

FrozenCoefficient frozen_coefficient(const Seed& seed, int v)
{
    if (seed.quiver.is_frozen(v)) throw std::invalid_argument("frozen_coefficient: frozen vertex");
    FrozenCoefficient fc;
    for (int f : seed.quiver.frozen_vertices()) {
        int m = seed.quiver.arrow(v, f);
        if (m != 0) fc.expo[seed.vars[f].str()] += m;
    }
    for (auto it = fc.expo.begin(); it != fc.expo.end();)
        it = it->second == 0 ? fc.expo.erase(it) : std::next(it);
    return fc;
}

bool seeds_equivalent(const Seed& a, const Seed& b)
{
    int n = a.quiver.size();
    if (n != b.quiver.size()) return false;
    // Candidate images by equal assignment and frozen status.
    std::vector<std::vector<int>> cand(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (a.quiver.is_frozen(u) == b.quiver.is_frozen(v) && a.vars[u] == b.vars[v])
                cand[u].push_back(v);
    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(int)> assign = [&](int u) -> bool {
        if (u == n) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (a.quiver.is_frozen(x) && a.quiver.is_frozen(y)) continue;
                    if (a.quiver.arrow(x, y) != b.quiver.arrow(map[x], map[y])) return false;
                }
            return true;
        }
        for (int v : cand[u]) {
            if (used[v]) continue;
            map[u] = v;
            used[v] = 1;
            if (assign(u + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    return assign(0);
}

Seed freeze_and_prune(const Seed& seed, const std::vector<int>& keep)
{
    int n = seed.quiver.size();
    std::vector<bool> keep_mutable(n, false);
    for (int v : keep) {
        if (seed.quiver.is_frozen(v)) throw std::invalid_argument("freeze_and_prune: keep set must be mutable");
        keep_mutable[v] = true;
    }
    std::vector<bool> frozen(n);
    for (int v = 0; v < n; ++v) frozen[v] = !keep_mutable[v];
    // A frozen vertex survives only with an arrow to a kept mutable vertex.
    std::vector<bool> alive(n, false);
    for (int v = 0; v < n; ++v) {
        if (!frozen[v]) {
            alive[v] = true;
            continue;
        }
        for (int u = 0; u < n; ++u)
            if (keep_mutable[u] && seed.quiver.arrow(u, v) != 0) alive[v] = true;
    }
    Seed out;
    std::vector<int> remap(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        remap[v] = out.quiver.add_vertex(seed.quiver.name(v), frozen[v]);
        out.vars.push_back(seed.vars[v]);
    }
    for (const auto& [uv, m] : seed.quiver.arrows()) {
        auto [u, v] = uv;
        if (remap[u] < 0 || remap[v] < 0) continue;
        if (frozen[u] && frozen[v]) continue;
        out.quiver.add_arrow(remap[u], remap[v], m);
    }
    return out;
}

std::string to_dot(const Seed& seed)
{
    std::ostringstream out;
    out << "digraph seed {\n";
    out << "  rankdir=BT;\n";
    for (int v = 0; v < seed.quiver.size(); ++v) {
        out << "  v" << v << " [label=\"" << seed.quiver.name(v) << "\", shape="
            << (seed.quiver.is_frozen(v) ? "box" : "circle") << "];\n";
    }
    for (const auto& [uv, m] : seed.quiver.arrows()) {
        out << "  v" << uv.first << " -> v" << uv.second;
        if (m > 1) out << " [label=\"" << m << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace drh
