#include "snp/schubitope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <nlohmann/json.hpp>
#include <omp.h>

#include "snp/simplex.hpp"

namespace snp {

Diagram::Diagram(int n_, std::vector<std::pair<int, int>> cells_)
    : n(n_), cells(std::move(cells_)) {
    if (n < 1) throw DomainError("diagram needs at least one row");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    for (auto [r, c] : cells)
        if (r < 1 || r > n || c < 1) throw DomainError("diagram cell out of range");
}

bool Diagram::has_cell(int r, int c) const {
    return std::binary_search(cells.begin(), cells.end(), std::make_pair(r, c));
}

std::vector<int> Diagram::row_counts() const {
    std::vector<int> counts(n, 0);
    for (auto [r, c] : cells) ++counts[r - 1];
    return counts;
}

std::string Diagram::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["cells"] = nlohmann::ordered_json::array();
    for (auto [r, c] : cells) j["cells"].push_back({r, c});
    return j.dump();
}

Diagram Diagram::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("bad diagram JSON: ") + ex.what());
    }
    std::vector<std::pair<int, int>> cells;
    for (const auto& cell : j.at("cells"))
        cells.emplace_back(cell.at(0).get<int>(), cell.at(1).get<int>());
    return Diagram(j.at("n").get<int>(), std::move(cells));
}

namespace {

int theta_column_mask(const Diagram& D, int c, unsigned mask) {
    // word_{c,S}: top to bottom; '(' empty cell in S-row, ')' cell outside S,
    // '*' cell in S-row.  Count matched pairs by stack depth, plus stars.
    int open = 0, pairs = 0, stars = 0;
    for (int r = 1; r <= D.n; ++r) {
        bool cell = D.has_cell(r, c);
        bool in_s = (mask >> (r - 1)) & 1u;
        if (cell && in_s) ++stars;
        else if (cell && !in_s) {
            if (open > 0) {
                --open;
                ++pairs;
            }
        } else if (!cell && in_s) ++open;
    }
    return pairs + stars;
}

unsigned mask_of(const Diagram& D, const std::vector<int>& S) {
    unsigned mask = 0;
    for (int r : S) {
        if (r < 1 || r > D.n) throw DomainError("subset row index out of range");
        mask |= 1u << (r - 1);
    }
    return mask;
}

std::vector<int> columns_of(const Diagram& D) {
    std::set<int> cols;
    for (auto [r, c] : D.cells) cols.insert(c);
    return {cols.begin(), cols.end()};
}

int theta_mask(const Diagram& D, unsigned mask) {
    int total = 0;
    for (int c : columns_of(D)) total += theta_column_mask(D, c, mask);
    return total;
}

} // namespace

int theta_column(const Diagram& D, int c, const std::vector<int>& S) {
    if (c < 1) throw DomainError("column index out of range");
    return theta_column_mask(D, c, mask_of(D, S));
}

int theta(const Diagram& D, const std::vector<int>& S) { return theta_mask(D, mask_of(D, S)); }

std::vector<int> theta_table(const Diagram& D) {
    if (D.n > 25) throw ResourceCapError("subset table too large");
    std::vector<int> table(1u << D.n, 0);
    auto cols = columns_of(D);
    for (unsigned mask = 1; mask < table.size(); ++mask) {
        int total = 0;
        for (int c : cols) total += theta_column_mask(D, c, mask);
        table[mask] = total;
    }
    return table;
}

Diagram rothe_diagram(const Permutation& w) {
    std::vector<std::pair<int, int>> cells;
    auto winv = w.inverse();
    int maxrow = 1;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j <= w.size(); ++j)
            if (w(i) > j && winv(j) > i) {
                cells.emplace_back(i, j);
                maxrow = std::max(maxrow, i);
            }
    return Diagram(maxrow, std::move(cells));
}

Diagram skyline_diagram(const Composition& alpha) {
    int maxpart = 0;
    for (int v : alpha.entries) maxpart = std::max(maxpart, v);
    int n = std::max(std::max(alpha.length(), maxpart), 1);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= alpha.length(); ++i)
        for (int j = 1; j <= alpha.entries[i - 1]; ++j) cells.emplace_back(i, j);
    return Diagram(n, std::move(cells));
}

namespace {

std::vector<int> mask_to_subset(unsigned mask, int n) {
    std::vector<int> s;
    for (int r = 1; r <= n; ++r)
        if ((mask >> (r - 1)) & 1u) s.push_back(r);
    return s;
}

// nonempty proper subsets of [n], by cardinality then lexicographic subset order
std::vector<unsigned> ordered_proper_subsets(int n) {
    std::vector<unsigned> masks;
    for (unsigned m = 1; m + 1 < (1u << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [n](unsigned a, unsigned b) {
        int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
        if (ca != cb) return ca < cb;
        return mask_to_subset(a, n) < mask_to_subset(b, n);
    });
    return masks;
}

void check_cap(const Diagram& D, int subset_cap) {
    if (D.n > subset_cap)
        throw ResourceCapError("diagram rows exceed the subset cap (2^n blowup)");
}

} // namespace

std::string InequalitySystem::to_json() const {
    nlohmann::ordered_json j;
    j["eq_sum"] = eq_sum;
    j["ineqs"] = nlohmann::ordered_json::array();
    for (const auto& iq : ineqs) {
        nlohmann::ordered_json one;
        one["S"] = iq.S;
        one["bound"] = iq.bound;
        j["ineqs"].push_back(one);
    }
    // evidence bearing on whether S_D can have fractional vertices
    if (saw_fractional_optimum) j["fractional_vertex_evidence"] = true;
    return j.dump();
}

InequalitySystem schubitope_inequalities(const Diagram& D, int subset_cap) {
    check_cap(D, subset_cap);
    auto table = theta_table(D);
    InequalitySystem sys;
    sys.eq_sum = D.cell_count();
    for (unsigned mask : ordered_proper_subsets(D.n))
        sys.ineqs.push_back({mask_to_subset(mask, D.n), table[mask]});
    return sys;
}

InequalitySystem minimize_inequalities(const Diagram& D, int subset_cap) {
    check_cap(D, subset_cap);
    auto table = theta_table(D);
    const int n = D.n;
    const int total = D.cell_count();

    auto masks = ordered_proper_subsets(n);
    std::set<unsigned> retained(masks.begin(), masks.end());

    // redux1: T is implied by any theta-equal superset (the full set acts
    // through the carried equality, theta([n]) = #D)
    for (unsigned t : masks) {
        for (unsigned s : masks)
            if (s != t && (s & t) == t && table[s] == table[t]) {
                retained.erase(t);
                break;
            }
        if (retained.count(t) && table[t] == total) retained.erase(t); // superset [n]
    }
    // redux2: S implied by a disjoint split with additive theta
    {
        std::vector<unsigned> still(retained.begin(), retained.end());
        for (unsigned s : still) {
            if (__builtin_popcount(s) < 2) continue;
            // enumerate submask splits s = a | b, a & b = 0, a < b
            bool drop = false;
            for (unsigned a = (s - 1) & s; a > 0 && !drop; a = (a - 1) & s) {
                unsigned b = s & ~a;
                if (b == 0 || a > b) continue;
                if (table[a] + table[b] == table[s]) drop = true;
            }
            if (drop) retained.erase(s);
        }
    }

    // exact-LP elimination over the slice, decreasing cardinality then lex
    std::vector<unsigned> order(retained.begin(), retained.end());
    std::sort(order.begin(), order.end(), [n](unsigned a, unsigned b) {
        int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
        if (ca != cb) return ca > cb;
        return mask_to_subset(a, n) < mask_to_subset(b, n);
    });
    bool fractional = false;
    for (unsigned s : order) {
        // maximize sum_{i in s} alpha_i subject to the others
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> b;
        std::vector<Rel> rel;
        std::vector<Rational> obj(n, Rational(0));
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1u) obj[i] = 1;
        {
            std::vector<Rational> row(n, Rational(1));
            A.push_back(row);
            b.emplace_back(total);
            rel.push_back(Rel::EQ);
        }
        for (unsigned m2 : retained) {
            if (m2 == s) continue;
            std::vector<Rational> row(n, Rational(0));
            for (int i = 0; i < n; ++i)
                if ((m2 >> i) & 1u) row[i] = 1;
            A.push_back(std::move(row));
            b.emplace_back(table[m2]);
            rel.push_back(Rel::LE);
        }
        auto res = solve_lp(A, b, obj, rel);
        if (res.status == LpStatus::Optimal) {
            for (const auto& xi : res.x)
                if (!is_integer(xi)) fractional = true;
            if (res.value <= Rational(table[s])) retained.erase(s);
        }
        // infeasible slice cannot happen (row counts satisfy every bound)
    }

    InequalitySystem sys;
    sys.eq_sum = total;
    sys.saw_fractional_optimum = fractional;
    for (unsigned mask : ordered_proper_subsets(n))
        if (retained.count(mask)) sys.ineqs.push_back({mask_to_subset(mask, n), table[mask]});
    return sys;
}

namespace {

// Enumerate alpha >= 0 with sum = target, alpha_i <= caps[i], subject to all
// subset bounds; prefix-pruned depth-first walk.
template <typename Visit>
void walk_points(const std::vector<int>& caps, const std::vector<long>& bounds, long target,
                 Visit&& visit) {
    const int n = static_cast<int>(caps.size());
    const unsigned full = (1u << n) - 1;
    std::vector<int> cur(n, 0);
    std::vector<long> capsuffix(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) capsuffix[i] = capsuffix[i + 1] + caps[i];
    // partial subset sums tracked incrementally over masks touching prefix
    std::function<void(int, long)> rec = [&](int pos, long rest) {
        if (rest < 0 || rest > capsuffix[pos]) return;
        if (pos == n) {
            visit(cur);
            return;
        }
        for (int v = 0; v <= std::min<long>(caps[pos], rest); ++v) {
            cur[pos] = v;
            // check every subset whose largest row is pos+1: the partial sum
            // over S cap [1..pos+1] is final for those subsets
            bool ok = true;
            for (unsigned m = 1; m <= full && ok; ++m) {
                if ((m >> pos) & 1u) {
                    unsigned high = m >> (pos + 1);
                    if (high != 0) continue; // not finalized yet
                    long sum = 0;
                    for (int i = 0; i <= pos; ++i)
                        if ((m >> i) & 1u) sum += cur[i];
                    if (sum > bounds[m]) ok = false;
                }
            }
            if (ok) rec(pos + 1, rest - v);
        }
        cur[pos] = 0;
    };
    rec(0, target);
}

} // namespace

std::vector<Exponents> schubitope_dilation_points(const Diagram& D, int t, int subset_cap) {
    check_cap(D, subset_cap);
    if (t < 1) throw DomainError("dilation factor must be positive");
    auto table = theta_table(D);
    const int n = D.n;
    std::vector<long> bounds(table.size());
    for (std::size_t m = 0; m < table.size(); ++m)
        bounds[m] = static_cast<long>(table[m]) * t;
    std::vector<int> caps(n);
    for (int i = 0; i < n; ++i)
        caps[i] = static_cast<int>(std::min<long>(bounds[1u << i], static_cast<long>(t) * D.cell_count()));
    std::vector<Exponents> out;
    walk_points(caps, bounds, static_cast<long>(t) * D.cell_count(),
                [&](const std::vector<int>& p) { out.push_back(p); });
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

long schubitope_dilation_count(const Diagram& D, int t, int subset_cap) {
    check_cap(D, subset_cap);
    if (t < 1) throw DomainError("dilation factor must be positive");
    auto table = theta_table(D);
    const int n = D.n;
    std::vector<long> bounds(table.size());
    for (std::size_t m = 0; m < table.size(); ++m)
        bounds[m] = static_cast<long>(table[m]) * t;
    std::vector<int> caps(n);
    for (int i = 0; i < n; ++i)
        caps[i] = static_cast<int>(std::min<long>(bounds[1u << i], static_cast<long>(t) * D.cell_count()));
    long count = 0;
    walk_points(caps, bounds, static_cast<long>(t) * D.cell_count(),
                [&](const std::vector<int>&) { ++count; });
    return count;
}

namespace {

std::vector<Exponents> schubitope_points_impl(const Diagram& D, int subset_cap, bool parallel) {
    check_cap(D, subset_cap);
    auto table = theta_table(D);
    const int n = D.n;
    const int total = D.cell_count();
    std::vector<int> caps(n);
    for (int i = 0; i < n; ++i) caps[i] = std::min(table[1u << i], total);
    // enumeration over compositions of #D bounded by the singleton thetas,
    // then the full subset filter; parallel over the first coordinate
    auto scan_first = [&](int v0) {
        std::vector<Exponents> local;
        std::vector<long> bounds(table.begin(), table.end());
        if (n == 1) {
            if (v0 == total) local.push_back({v0});
            return local;
        }
        std::vector<int> cur(n, 0);
        cur[0] = v0;
        std::function<void(int, long)> rec = [&](int pos, long rest) {
            if (rest < 0) return;
            if (pos == n) {
                if (rest != 0) return;
                bool ok = true;
                for (unsigned m = 1; m + 1 < (1u << n) && ok; ++m) {
                    long sum = 0;
                    for (int i = 0; i < n; ++i)
                        if ((m >> i) & 1u) sum += cur[i];
                    if (sum > bounds[m]) ok = false;
                }
                if (ok) local.push_back(cur);
                return;
            }
            for (int v = 0; v <= std::min<long>(caps[pos], rest); ++v) {
                cur[pos] = v;
                rec(pos + 1, rest - v);
            }
            cur[pos] = 0;
        };
        rec(1, static_cast<long>(total) - v0);
        return local;
    };
    std::vector<std::vector<Exponents>> chunks(caps[0] + 1);
    if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(parallel_jobs())
        for (int v0 = 0; v0 <= caps[0]; ++v0) chunks[v0] = scan_first(v0);
    } else {
        for (int v0 = 0; v0 <= caps[0]; ++v0) chunks[v0] = scan_first(v0);
    }
    std::vector<Exponents> out;
    for (auto& ch : chunks) out.insert(out.end(), ch.begin(), ch.end());
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

} // namespace

std::vector<Exponents> schubitope_lattice_points(const Diagram& D, int subset_cap) {
    return schubitope_points_impl(D, subset_cap, true);
}

std::vector<Exponents> schubitope_lattice_points_serial(const Diagram& D, int subset_cap) {
    return schubitope_points_impl(D, subset_cap, false);
}

std::vector<Rational> schubitope_ehrhart(const Diagram& D, int subset_cap) {
    check_cap(D, subset_cap);
    auto base = schubitope_lattice_points(D, subset_cap);
    if (base.empty()) throw InternalError("schubitope has no lattice points");
    LatticePolytope hull(D.n, base);
    const int d = dimension(hull);
    std::vector<Rational> values;
    for (int t = 1; t <= d + 1; ++t)
        values.emplace_back(schubitope_dilation_count(D, t, subset_cap));
    std::vector<Rational> coeffs(d + 1, Rational(0));
    for (int i = 0; i <= d; ++i) {
        std::vector<Rational> num{Rational(1)};
        Rational den(1);
        for (int j = 0; j <= d; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(num.size() + 1, Rational(0));
            for (std::size_t k = 0; k < num.size(); ++k) {
                next[k + 1] += num[k];
                next[k] -= Rational(j + 1) * num[k];
            }
            num = std::move(next);
            den *= Rational(i - j);
        }
        for (std::size_t k = 0; k < num.size(); ++k) coeffs[k] += values[i] * num[k] / den;
    }
    if (coeffs[0] != 1)
        throw InternalError("schubitope Ehrhart interpolation failed the L(0) = 1 check");
    return coeffs;
}

std::vector<Exponents> schubitope_vertices(const Diagram& D, int subset_cap) {
    auto pts = schubitope_lattice_points(D, subset_cap);
    return vertices(LatticePolytope(D.n, pts));
}

std::vector<Diagram> kohnert_closure(const Diagram& D) {
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<Diagram> frontier{D};
    seen.insert(D.cells);
    std::vector<Diagram> all{D};
    while (!frontier.empty()) {
        std::vector<Diagram> next;
        for (const auto& cur : frontier) {
            // group cells by row to find each row's rightmost box
            std::map<int, int> rightmost;
            for (auto [r, c] : cur.cells)
                rightmost[r] = std::max(rightmost[r], c);
            for (auto [r, c] : rightmost) {
                // lowest unoccupied row above (r, c) in column c
                int target = 0;
                for (int rr = r - 1; rr >= 1; --rr)
                    if (!cur.has_cell(rr, c)) {
                        target = rr;
                        break;
                    }
                if (target == 0) continue;
                auto cells = cur.cells;
                auto it = std::find(cells.begin(), cells.end(), std::make_pair(r, c));
                *it = {target, c};
                Diagram moved(cur.n, std::move(cells));
                if (seen.insert(moved.cells).second) {
                    next.push_back(moved);
                    all.push_back(std::move(moved));
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

Polynomial kohnert_polynomial(const Diagram& D) {
    Polynomial f(D.n);
    for (const auto& diag : kohnert_closure(D)) f.add_term(diag.row_counts(), Rational(1));
    return f;
}

} // namespace snp
