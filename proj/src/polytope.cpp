#include "snp/polytope.hpp"

#include <algorithm>
#include <atomic>

#include <nlohmann/json.hpp>
#include <omp.h>

#include "snp/simplex.hpp"

namespace snp {

namespace {
int g_jobs = 0;
int effective_jobs() { return g_jobs > 0 ? g_jobs : omp_get_max_threads(); }
} // namespace

void set_parallel_jobs(int jobs) { g_jobs = jobs; }
int parallel_jobs() { return effective_jobs(); }

LatticePolytope::LatticePolytope(int dim, std::vector<Exponents> gens)
    : dim_ambient(dim), generators(std::move(gens)) {
    if (generators.empty()) throw DomainError("polytope needs at least one generator");
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != dim)
            throw DomainError("generator dimension mismatch");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
}

std::string LatticePolytope::to_json() const {
    nlohmann::ordered_json j;
    j["dim"] = dim_ambient;
    j["generators"] = generators;
    return j.dump();
}

LatticePolytope LatticePolytope::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("bad polytope JSON: ") + ex.what());
    }
    return LatticePolytope(j.at("dim").get<int>(),
                           j.at("generators").get<std::vector<Exponents>>());
}

LatticePolytope newton_polytope(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("zero polynomial has no Newton polytope");
    return LatticePolytope(f.num_vars(), f.support());
}

LatticePolytope permutahedron(const Partition& lambda, int n) {
    auto gens = rearrangements(lambda, n);
    if (gens.empty()) throw DomainError("permutahedron needs n >= length(lambda)");
    return LatticePolytope(n, std::move(gens));
}

bool contains_point(const LatticePolytope& P, const std::vector<Rational>& q) {
    if (static_cast<int>(q.size()) != P.dim_ambient)
        throw DomainError("point dimension mismatch");
    return in_convex_hull(P.generators, q);
}

bool contains_point(const LatticePolytope& P, const Exponents& q) {
    std::vector<Rational> qq(q.begin(), q.end());
    return contains_point(P, qq);
}

LatticePolytope reduce_generators(const LatticePolytope& P) {
    if (P.generators.size() <= 4) return P;
    // Insertion filter: keep a point only if it is outside the hull of the
    // current core.  Processing in decreasing norm order finds extreme points
    // early and keeps the core small.
    std::vector<int> order(P.generators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto norm2 = [&](int i) {
        long s = 0;
        for (int v : P.generators[i]) s += static_cast<long>(v) * v;
        return s;
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return norm2(a) > norm2(b); });

    std::vector<Exponents> core;
    for (int idx : order) {
        const auto& g = P.generators[idx];
        std::vector<Rational> q(g.begin(), g.end());
        if (core.size() < 2 || !in_convex_hull(core, q)) core.push_back(g);
    }
    // Cleanup pass: drop core members inside the hull of the others; what
    // survives is exactly the vertex set.
    for (std::size_t i = 0; i < core.size();) {
        std::vector<Exponents> rest;
        rest.reserve(core.size() - 1);
        for (std::size_t j = 0; j < core.size(); ++j)
            if (j != i) rest.push_back(core[j]);
        std::vector<Rational> q(core[i].begin(), core[i].end());
        if (rest.size() >= 2 && in_convex_hull(rest, q)) core.erase(core.begin() + i);
        else ++i;
    }
    return LatticePolytope(P.dim_ambient, std::move(core));
}

namespace {

// Bounding-box candidates, restricted to the common coordinate sum whenever
// all generators share one (every homogeneous family does).
std::vector<Exponents> box_candidates(const LatticePolytope& P) {
    const int n = P.dim_ambient;
    std::vector<int> lo(n, INT32_MAX), hi(n, INT32_MIN);
    for (const auto& g : P.generators)
        for (int k = 0; k < n; ++k) {
            lo[k] = std::min(lo[k], g[k]);
            hi[k] = std::max(hi[k], g[k]);
        }
    long common_sum = -1;
    bool homogeneous = true;
    for (const auto& g : P.generators) {
        long s = total_degree(g);
        if (common_sum < 0) common_sum = s;
        else if (s != common_sum) {
            homogeneous = false;
            break;
        }
    }
    std::vector<Exponents> out;
    Exponents cur(n);
    std::vector<long> lo_suffix(n + 1, 0), hi_suffix(n + 1, 0);
    for (int k = n - 1; k >= 0; --k) {
        lo_suffix[k] = lo_suffix[k + 1] + lo[k];
        hi_suffix[k] = hi_suffix[k + 1] + hi[k];
    }
    std::function<void(int, long)> rec = [&](int k, long rest) {
        if (k == n) {
            if (!homogeneous || rest == 0) out.push_back(cur);
            return;
        }
        if (homogeneous && (rest < lo_suffix[k] || rest > hi_suffix[k])) return;
        for (int v = lo[k]; v <= hi[k]; ++v) {
            cur[k] = v;
            rec(k + 1, homogeneous ? rest - v : rest);
        }
    };
    rec(0, homogeneous ? common_sum : 0);
    return out;
}

std::vector<Exponents> lattice_points_impl(const LatticePolytope& P, bool parallel) {
    LatticePolytope core = reduce_generators(P);
    auto candidates = box_candidates(core);
    std::vector<char> inside(candidates.size(), 0);
    // generator points are trivially inside; only the rest need an LP
    std::vector<Exponents> gens_sorted = P.generators;
    auto is_generator = [&](const Exponents& e) {
        return std::binary_search(gens_sorted.begin(), gens_sorted.end(), e);
    };
    const auto total = static_cast<std::ptrdiff_t>(candidates.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(effective_jobs())
        for (std::ptrdiff_t i = 0; i < total; ++i) {
            const auto& cand = candidates[i];
            std::vector<Rational> q(cand.begin(), cand.end());
            inside[i] = is_generator(cand) || in_convex_hull(core.generators, q);
        }
    } else {
        for (std::ptrdiff_t i = 0; i < total; ++i) {
            const auto& cand = candidates[i];
            std::vector<Rational> q(cand.begin(), cand.end());
            inside[i] = is_generator(cand) || in_convex_hull(core.generators, q);
        }
    }
    std::vector<Exponents> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (inside[i]) out.push_back(candidates[i]);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

std::vector<Exponents> vertices_impl(const LatticePolytope& P, bool parallel) {
    LatticePolytope core = reduce_generators(P);
    if (core.generators.size() <= 2) return core.generators;
    // reduce_generators already ends with exactly the extreme points, but the
    // contract is one LP per generator; re-verify each against the others.
    std::vector<char> extreme(core.generators.size(), 0);
    const auto total = static_cast<std::ptrdiff_t>(core.generators.size());
    auto check = [&](std::ptrdiff_t i) {
        std::vector<Exponents> rest;
        rest.reserve(core.generators.size() - 1);
        for (std::size_t j = 0; j < core.generators.size(); ++j)
            if (j != static_cast<std::size_t>(i)) rest.push_back(core.generators[j]);
        std::vector<Rational> q(core.generators[i].begin(), core.generators[i].end());
        extreme[i] = !in_convex_hull(rest, q);
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4) num_threads(effective_jobs())
        for (std::ptrdiff_t i = 0; i < total; ++i) check(i);
    } else {
        for (std::ptrdiff_t i = 0; i < total; ++i) check(i);
    }
    std::vector<Exponents> out;
    for (std::size_t i = 0; i < core.generators.size(); ++i)
        if (extreme[i]) out.push_back(core.generators[i]);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

} // namespace

std::vector<Exponents> lattice_points(const LatticePolytope& P) {
    return lattice_points_impl(P, true);
}
std::vector<Exponents> lattice_points_serial(const LatticePolytope& P) {
    return lattice_points_impl(P, false);
}

std::vector<Exponents> vertices(const LatticePolytope& P) { return vertices_impl(P, true); }
std::vector<Exponents> vertices_serial(const LatticePolytope& P) {
    return vertices_impl(P, false);
}

SnpResult is_snp(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("SNP is undefined for the zero polynomial");
    LatticePolytope P = newton_polytope(f);
    LatticePolytope core = reduce_generators(P);
    auto candidates = box_candidates(core);
    std::sort(candidates.begin(), candidates.end(), graded_lex_less);
    for (const auto& cand : candidates) {
        if (!snp::is_zero(f.coefficient(cand))) continue;
        std::vector<Rational> q(cand.begin(), cand.end());
        if (in_convex_hull(core.generators, q)) return {false, cand};
    }
    return {true, std::nullopt};
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
    if (P.dim_ambient != Q.dim_ambient) throw DomainError("dimension mismatch");
    std::vector<Exponents> gens;
    gens.reserve(P.generators.size() * Q.generators.size());
    Exponents e(P.dim_ambient);
    for (const auto& p : P.generators)
        for (const auto& q : Q.generators) {
            for (int k = 0; k < P.dim_ambient; ++k) e[k] = p[k] + q[k];
            gens.push_back(e);
        }
    return LatticePolytope(P.dim_ambient, std::move(gens));
}

bool contains_polytope(const LatticePolytope& P, const LatticePolytope& Q) {
    if (P.dim_ambient != Q.dim_ambient) throw DomainError("dimension mismatch");
    LatticePolytope core = reduce_generators(P);
    for (const auto& g : Q.generators) {
        std::vector<Rational> q(g.begin(), g.end());
        if (!in_convex_hull(core.generators, q)) return false;
    }
    return true;
}

bool polytope_equal(const LatticePolytope& P, const LatticePolytope& Q) {
    return contains_polytope(P, Q) && contains_polytope(Q, P);
}

int dimension(const LatticePolytope& P) {
    const auto& g = P.generators;
    if (g.size() <= 1) return 0;
    // rank over Q of {g_i - g_0} by fraction-free elimination
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < g.size(); ++i) {
        std::vector<Rational> row(P.dim_ambient);
        for (int k = 0; k < P.dim_ambient; ++k) row[k] = g[i][k] - g[0][k];
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < P.dim_ambient && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!snp::is_zero(rows[r][col])) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (snp::is_zero(rows[r][col])) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (int k = col; k < P.dim_ambient; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

LatticePolytope scale(const LatticePolytope& P, int t) {
    if (t < 1) throw DomainError("dilation factor must be positive");
    std::vector<Exponents> gens = P.generators;
    for (auto& g : gens)
        for (auto& v : g) v *= t;
    return LatticePolytope(P.dim_ambient, std::move(gens));
}

std::vector<Rational> ehrhart(const LatticePolytope& P) {
    const int d = dimension(P);
    // evaluation at t = 1..d+1; t = 0 degenerates, L(0) = 1 is the check
    std::vector<Rational> values;
    for (int t = 1; t <= d + 1; ++t)
        values.emplace_back(static_cast<long>(lattice_points(scale(P, t)).size()));

    // Lagrange interpolation through (t, values[t-1])
    std::vector<Rational> coeffs(d + 1, Rational(0));
    for (int i = 0; i <= d; ++i) {
        // basis polynomial prod_{j != i} (t - (j+1)) / ((i+1) - (j+1))
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
        for (std::size_t k = 0; k < num.size(); ++k)
            coeffs[k] += values[i] * num[k] / den;
    }
    if (coeffs[0] != 1)
        throw InternalError("Ehrhart interpolation failed the L(0) = 1 check");
    return coeffs;
}

std::string ehrhart_to_string(const std::vector<Rational>& coeffs) {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ", ";
        out += rational_to_string(coeffs[i]);
    }
    out += "]";
    return out;
}

} // namespace snp
