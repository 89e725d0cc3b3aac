#include "snp/families.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "snp/cache.hpp"

namespace snp {

ClassicalBasisKind classical_basis_kind_from_string(const std::string& s) {
    if (s == "monomial" || s == "m") return ClassicalBasisKind::monomial;
    if (s == "schur" || s == "s") return ClassicalBasisKind::schur;
    if (s == "elementary" || s == "e") return ClassicalBasisKind::elementary;
    if (s == "homogeneous" || s == "h") return ClassicalBasisKind::homogeneous;
    if (s == "power" || s == "p") return ClassicalBasisKind::power;
    if (s == "forgotten" || s == "f") return ClassicalBasisKind::forgotten;
    throw DomainError("unknown classical basis kind: " + s);
}

namespace {

Polynomial monomial_sym(const Partition& lambda, int n) {
    Polynomial f(n);
    for (auto& r : rearrangements(lambda, n)) f.add_term(r, Rational(1));
    return f;
}

std::vector<Partition> subdiagrams_with_strip(const Partition& outer) {
    // all mu with mu subseteq outer and outer/mu a horizontal strip
    std::vector<Partition> out;
    std::vector<int> cur;
    int rows = outer.length();
    std::function<void(int)> rec = [&](int i) {
        if (i > rows) {
            std::vector<int> parts(cur.begin(), cur.end());
            out.emplace_back(std::move(parts));
            return;
        }
        int lo = outer.part(i + 1); // strip condition vs next row
        int hi = outer.part(i);     // containment
        if (i >= 2) hi = std::min(hi, cur[i - 2]);
        for (int v = hi; v >= lo; --v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

// Shapes contained in lambda with at most `rows` nonzero rows.
std::vector<Partition> subshapes(const Partition& lambda, int rows) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int i) {
        if (i > lambda.length()) {
            std::vector<int> parts(cur.begin(), cur.end());
            Partition p(std::move(parts));
            if (p.length() <= rows) out.push_back(std::move(p));
            return;
        }
        int hi = lambda.part(i);
        if (i >= 2) hi = std::min(hi, cur[i - 2]);
        for (int v = hi; v >= 0; --v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

Polynomial schur_poly(const Partition& lambda, int n) {
    if (lambda.length() > n) return Polynomial::zero(n);
    if (n == 0) return Polynomial::constant(0, Rational(lambda.size() == 0 ? 1 : 0));
    // branching on the largest entry: s_nu(x1..xk) = sum over horizontal
    // strips nu/mu of s_mu(x1..x_{k-1}) x_k^{|strip|}
    std::map<Partition, Polynomial> layer;
    layer.emplace(Partition(), Polynomial::constant(0, Rational(1)));
    for (int k = 1; k <= n; ++k) {
        std::map<Partition, Polynomial> next;
        for (const auto& nu : subshapes(lambda, k)) {
            Polynomial acc(k);
            for (const auto& mu : subdiagrams_with_strip(nu)) {
                auto it = layer.find(mu);
                if (it == layer.end()) continue;
                int strip = nu.size() - mu.size();
                for (const auto& [e, c] : it->second.terms()) {
                    Exponents e2 = e;
                    e2.push_back(strip);
                    acc.add_term(e2, c);
                }
            }
            if (!acc.is_zero()) next.emplace(nu, std::move(acc));
        }
        layer = std::move(next);
    }
    auto it = layer.find(lambda);
    return it == layer.end() ? Polynomial::zero(n) : it->second;
}

Polynomial elementary_one_row(int k, int n) {
    Polynomial f(n);
    if (k == 0) return Polynomial::constant(n, Rational(1));
    if (k > n) return f;
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(idx.size()) == k) {
            Exponents e(n, 0);
            for (int i : idx) e[i] = 1;
            f.add_term(e, Rational(1));
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(idx.size())); ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return f;
}

Polynomial homogeneous_one_row(int k, int n) {
    Polynomial f(n);
    for (const auto& c : compositions_of(k, n)) f.add_term(c.entries, Rational(1));
    return f;
}

Polynomial power_one_row(int k, int n) {
    Polynomial f(n);
    for (int i = 0; i < n; ++i) {
        Exponents e(n, 0);
        e[i] = k;
        f.add_term(e, Rational(1));
    }
    return f;
}

Polynomial forgotten_sym(const Partition& lambda, int n) {
    // f_lambda = sum_mu a_{lambda,mu} m_mu, a_{lambda,mu} counting distinct
    // rearrangements of lambda whose partial-sum set contains mu's
    Polynomial f(n);
    std::vector<int> gamma = lambda.parts;
    std::sort(gamma.begin(), gamma.end());
    for (const auto& mu : partitions_of(lambda.size())) {
        if (mu.length() > n) continue;
        std::set<int> mu_sums;
        int acc = 0;
        for (int p : mu.parts) mu_sums.insert(acc += p);
        long count = 0;
        std::vector<int> g = gamma;
        do {
            std::set<int> sums;
            int a = 0;
            for (int v : g) sums.insert(a += v);
            if (std::includes(sums.begin(), sums.end(), mu_sums.begin(), mu_sums.end()))
                ++count;
        } while (std::next_permutation(g.begin(), g.end()));
        if (count != 0) f += Rational(count) * monomial_sym(mu, n);
    }
    return f;
}

Polynomial product_over_parts(const Partition& lambda, int n, Polynomial (*one_row)(int, int)) {
    Polynomial f = Polynomial::constant(n, Rational(1));
    for (int p : lambda.parts) f = f * one_row(p, n);
    return f;
}

} // namespace

Polynomial classical_basis(ClassicalBasisKind kind, const Partition& lambda, int n) {
    if (n < 0) throw DomainError("variable count must be nonnegative");
    switch (kind) {
        case ClassicalBasisKind::monomial: return monomial_sym(lambda, n);
        case ClassicalBasisKind::schur: return schur_poly(lambda, n);
        case ClassicalBasisKind::elementary:
            return product_over_parts(lambda, n, elementary_one_row);
        case ClassicalBasisKind::homogeneous:
            return product_over_parts(lambda, n, homogeneous_one_row);
        case ClassicalBasisKind::power: return product_over_parts(lambda, n, power_one_row);
        case ClassicalBasisKind::forgotten: return forgotten_sym(lambda, n);
    }
    throw InternalError("unreachable basis kind");
}

Polynomial skew_schur(const Partition& lambda, const Partition& mu, int n) {
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i))
            throw DomainError("skew shape requires mu inside lambda");
    std::map<Partition, Polynomial> layer;
    layer.emplace(mu, Polynomial::constant(0, Rational(1)));
    for (int k = 1; k <= n; ++k) {
        std::map<Partition, Polynomial> next;
        std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& sh, int i) {
            if (i > lambda.length()) {
                std::vector<int> parts(sh.begin(), sh.end());
                Partition nu(std::move(parts));
                for (int r = 1; r <= mu.length(); ++r)
                    if (nu.part(r) < mu.part(r)) return;
                Polynomial acc(k);
                for (const auto& rho : subdiagrams_with_strip(nu)) {
                    auto it = layer.find(rho);
                    if (it == layer.end()) continue;
                    int strip = nu.size() - rho.size();
                    for (const auto& [e, c] : it->second.terms()) {
                        Exponents e2 = e;
                        e2.push_back(strip);
                        acc.add_term(e2, c);
                    }
                }
                if (!acc.is_zero()) next.emplace(std::move(nu), std::move(acc));
                return;
            }
            int hi = lambda.part(i);
            if (i >= 2) hi = std::min(hi, sh[i - 2]);
            for (int v = hi; v >= 0; --v) {
                sh.push_back(v);
                gen(sh, i + 1);
                sh.pop_back();
            }
        };
        std::vector<int> sh;
        gen(sh, 1);
        layer = std::move(next);
    }
    auto it = layer.find(lambda);
    return it == layer.end() ? Polynomial::zero(n) : it->second;
}

namespace {

OperatorKind demazure_operator(DemazureFamilyKind kind) {
    switch (kind) {
        case DemazureFamilyKind::key: return OperatorKind::pi;
        case DemazureFamilyKind::atom: return OperatorKind::pi_hat;
        case DemazureFamilyKind::lascoux_atom: return OperatorKind::tau_hat;
        case DemazureFamilyKind::grothendieck_key: return OperatorKind::tau;
    }
    throw InternalError("unreachable demazure kind");
}

const char* demazure_kind_name(DemazureFamilyKind kind) {
    switch (kind) {
        case DemazureFamilyKind::key: return "key";
        case DemazureFamilyKind::atom: return "atom";
        case DemazureFamilyKind::lascoux_atom: return "lascoux-atom";
        case DemazureFamilyKind::grothendieck_key: return "omega";
    }
    return "?";
}

} // namespace

Polynomial demazure_family(DemazureFamilyKind kind, const Composition& alpha) {
    static std::map<std::pair<int, std::vector<int>>, Polynomial> memo;
    static std::mutex mtx;
    const auto key = std::make_pair(static_cast<int>(kind), alpha.entries);
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    auto& cache = PolyCache::instance();
    const std::string ckey = std::string(demazure_kind_name(kind)) + "|" + alpha.str();
    if (auto hit = cache.get(ckey)) {
        std::lock_guard<std::mutex> lk(mtx);
        return memo.emplace(key, *hit).first->second;
    }

    Polynomial result(alpha.length());
    if (alpha.is_weakly_decreasing()) {
        result = Polynomial::monomial(alpha.entries);
    } else {
        int i = 0;
        for (int k = 1; k < alpha.length(); ++k)
            if (alpha.entries[k] > alpha.entries[k - 1]) {
                i = k; // smallest ascent (operator index, 1-based)
                break;
            }
        std::vector<int> swapped = alpha.entries;
        std::swap(swapped[i - 1], swapped[i]);
        result = apply_operator(demazure_operator(kind), i,
                                demazure_family(kind, Composition(swapped)));
    }
    cache.put(ckey, result);
    std::lock_guard<std::mutex> lk(mtx);
    return memo.emplace(key, std::move(result)).first->second;
}

namespace {

// Ascent chain from u up to the longest element, always swapping at the
// smallest ascent; returns the operator indices in descent application order.
std::vector<int> descent_plan(Permutation u) {
    std::vector<int> ops;
    for (;;) {
        int i = u.first_ascent();
        if (i == 0) break;
        ops.push_back(i);
        u = u.right_multiply_simple(i);
    }
    std::reverse(ops.begin(), ops.end());
    return ops;
}

Polynomial staircase_monomial(int m) {
    Exponents e(m, 0);
    for (int i = 0; i < m; ++i) e[i] = m - 1 - i;
    return Polynomial::monomial(e);
}

Polynomial schubert_descend(SchubertFamilyKind kind, const Permutation& w) {
    const int m = w.size();
    Polynomial f(0);
    OperatorKind op = OperatorKind::partial;
    switch (kind) {
        case SchubertFamilyKind::schubert: f = staircase_monomial(m); break;
        case SchubertFamilyKind::grothendieck:
            f = staircase_monomial(m);
            op = OperatorKind::pi_bar;
            break;
        case SchubertFamilyKind::double_schubert: {
            f = Polynomial::constant(2 * m, Rational(1));
            for (int i = 1; i + 1 <= m; ++i)
                for (int j = 1; i + j <= m; ++j)
                    f = f * (Polynomial::variable(i, 2 * m) -
                             Polynomial::variable(m + j, 2 * m));
            break;
        }
    }
    for (int i : descent_plan(w)) f = apply_operator(op, i, f);
    return f;
}

} // namespace

Polynomial schubert_family(SchubertFamilyKind kind, const Permutation& w_in) {
    Permutation w = w_in.trimmed();
    const int m = w.size();
    const bool memoizable = m <= 7 && kind != SchubertFamilyKind::double_schubert;
    if (!memoizable) {
        Polynomial f = schubert_descend(kind, w);
        if (kind != SchubertFamilyKind::double_schubert) f = trim_trailing_vars(f);
        return f;
    }
    static std::map<std::pair<int, std::vector<int>>, Polynomial> memo;
    static std::mutex mtx;
    const auto key = std::make_pair(static_cast<int>(kind), w.word());
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    auto& cache = PolyCache::instance();
    const std::string ckey =
        std::string(kind == SchubertFamilyKind::schubert ? "schubert" : "grothendieck") + "|" +
        w.str();
    Polynomial result(0);
    if (auto hit = cache.get(ckey)) {
        result = *hit;
    } else {
        result = trim_trailing_vars(schubert_descend(kind, w));
        cache.put(ckey, result);
    }
    std::lock_guard<std::mutex> lk(mtx);
    return memo.emplace(key, std::move(result)).first->second;
}

StanleyResult stanley_symmetric(const Permutation& w_in, int n) {
    if (n < 1) throw DomainError("stanley_symmetric needs at least one variable");
    Permutation w = w_in.trimmed();
    constexpr int kIterationCap = 60; // guards bugs; stabilization is a theorem
    auto truncated = [&](int t) {
        std::vector<int> word;
        for (int i = 1; i <= t; ++i) word.push_back(i);
        for (int v : w.word()) word.push_back(v + t);
        Polynomial s = schubert_family(SchubertFamilyKind::schubert, Permutation(word));
        if (s.num_vars() < n) s = pad_vars(s, n);
        return truncate_to_vars(s, n);
    };
    StanleyResult out;
    Polynomial prev = truncated(1);
    for (int t = 1; t <= kIterationCap; ++t) {
        Polynomial next = truncated(t + 1);
        if (next == prev) {
            out.poly = std::move(prev);
            out.stabilized_at = t;
            return out;
        }
        prev = std::move(next);
    }
    throw InternalError("stanley truncation did not stabilize within the cap");
}

Polynomial qsym_basis(QsymKind kind, const Composition& alpha, int n) {
    if (kind != QsymKind::quasi_schur) {
        for (int v : alpha.entries)
            if (v <= 0) throw DomainError("composition parts must be strictly positive");
    }
    const int k = alpha.length();
    switch (kind) {
        case QsymKind::monomial_qsym: {
            Polynomial f(n);
            std::vector<int> idx;
            std::function<void(int)> rec = [&](int start) {
                if (static_cast<int>(idx.size()) == k) {
                    Exponents e(n, 0);
                    for (int j = 0; j < k; ++j) e[idx[j]] = alpha.entries[j];
                    f.add_term(e, Rational(1));
                    return;
                }
                for (int i = start; i <= n - (k - static_cast<int>(idx.size())); ++i) {
                    idx.push_back(i);
                    rec(i + 1);
                    idx.pop_back();
                }
            };
            rec(0);
            return f;
        }
        case QsymKind::fundamental_qsym: {
            // F_alpha = sum of M_beta over refinements beta -> alpha
            Polynomial f(n);
            std::vector<std::vector<std::vector<int>>> per_part;
            for (int p : alpha.entries) {
                std::vector<std::vector<int>> splits;
                std::vector<int> cur;
                std::function<void(int)> split = [&](int rest) {
                    if (rest == 0) {
                        splits.push_back(cur);
                        return;
                    }
                    for (int v = 1; v <= rest; ++v) {
                        cur.push_back(v);
                        split(rest - v);
                        cur.pop_back();
                    }
                };
                split(p);
                per_part.push_back(std::move(splits));
            }
            std::vector<int> beta;
            std::function<void(int)> assemble = [&](int part) {
                if (part == k) {
                    f += qsym_basis(QsymKind::monomial_qsym, Composition(beta), n);
                    return;
                }
                for (const auto& s : per_part[part]) {
                    beta.insert(beta.end(), s.begin(), s.end());
                    assemble(part + 1);
                    beta.resize(beta.size() - s.size());
                }
            };
            assemble(0);
            return f;
        }
        case QsymKind::quasi_schur: {
            // S_alpha = sum of atoms A_gamma over gamma with gamma^+ = alpha
            Composition strict = alpha.stripped();
            int parts = strict.length();
            if (parts > n) return Polynomial::zero(n);
            Polynomial f(n);
            std::vector<int> pos;
            std::function<void(int)> rec = [&](int start) {
                if (static_cast<int>(pos.size()) == parts) {
                    std::vector<int> gamma(n, 0);
                    for (int j = 0; j < parts; ++j) gamma[pos[j]] = strict.entries[j];
                    f += demazure_family(DemazureFamilyKind::atom, Composition(gamma));
                    return;
                }
                for (int i = start; i <= n - (parts - static_cast<int>(pos.size())); ++i) {
                    pos.push_back(i);
                    rec(i + 1);
                    pos.pop_back();
                }
            };
            rec(0);
            return f;
        }
    }
    throw InternalError("unreachable qsym kind");
}

Polynomial product_family(ProductFamilyKind kind, const ProductParams& params) {
    switch (kind) {
        case ProductFamilyKind::resultant_support: {
            if (params.m < 1 || params.n < 1) throw DomainError("dimensions must be positive");
            int vars = params.m + params.n;
            Polynomial f = Polynomial::constant(vars, Rational(1));
            for (int i = 1; i <= params.m; ++i)
                for (int j = 1; j <= params.n; ++j)
                    f = f * (Polynomial::variable(i, vars) -
                             Polynomial::variable(params.m + j, vars));
            return f;
        }
        case ProductFamilyKind::vandermonde_power:
        case ProductFamilyKind::discriminant: {
            if (params.n < 1) throw DomainError("dimensions must be positive");
            int k = kind == ProductFamilyKind::discriminant ? 2 : params.k;
            if (k < 1) throw DomainError("power must be positive");
            Polynomial v = Polynomial::constant(params.n, Rational(1));
            for (int i = 1; i <= params.n; ++i)
                for (int j = i + 1; j <= params.n; ++j)
                    v = v * (Polynomial::variable(i, params.n) -
                             Polynomial::variable(j, params.n));
            Polynomial f = Polynomial::constant(params.n, Rational(1));
            for (int t = 0; t < k; ++t) f = f * v;
            return f;
        }
        case ProductFamilyKind::q_discriminant_neg1: {
            if (params.n < 1) throw DomainError("dimensions must be positive");
            Polynomial f = Polynomial::constant(params.n, Rational(1));
            for (int i = 1; i <= params.n; ++i)
                for (int j = i + 1; j <= params.n; ++j)
                    f = f * (Polynomial::variable(i, params.n) +
                             Polynomial::variable(j, params.n));
            return f;
        }
        case ProductFamilyKind::binary_matrix_series: {
            if (params.m < 1 || params.n < 1) throw DomainError("dimensions must be positive");
            int vars = params.m + params.n;
            Polynomial f = Polynomial::constant(vars, Rational(1));
            for (int i = 1; i <= params.m; ++i)
                for (int j = 1; j <= params.n; ++j)
                    f = f * (Polynomial::constant(vars, Rational(1)) +
                             Polynomial::variable(i, vars) *
                                 Polynomial::variable(params.m + j, vars));
            return f;
        }
    }
    throw InternalError("unreachable product kind");
}

namespace {

Partition cycle_type(const Permutation& g) {
    std::vector<bool> seen(g.size() + 1, false);
    std::vector<int> cycles;
    for (int i = 1; i <= g.size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = g(j);
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    return Partition(std::move(cycles));
}

Polynomial power_product(const Partition& lambda, int n_vars) {
    Polynomial f = Polynomial::constant(n_vars, Rational(1));
    for (int p : lambda.parts) f = f * power_one_row(p, n_vars);
    return f;
}

} // namespace

Polynomial cycle_index(const std::vector<Permutation>& generators, int n_vars,
                       std::size_t group_cap) {
    if (generators.empty()) throw DomainError("cycle index needs at least one generator");
    int n = generators.front().size();
    for (const auto& g : generators)
        if (g.size() != n) throw DomainError("generators act on different sets");
    std::set<std::vector<int>> group;
    std::vector<Permutation> frontier{Permutation::identity(n)};
    group.insert(frontier.front().word());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier)
            for (const auto& s : generators) {
                auto h = compose(s, g);
                if (group.insert(h.word()).second) {
                    if (group.size() > group_cap)
                        throw ResourceCapError("group closure exceeded the configured cap");
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    Polynomial sum(n_vars);
    for (const auto& word : group) sum += power_product(cycle_type(Permutation(word)), n_vars);
    sum *= Rational(1, static_cast<long>(group.size()));
    return sum;
}

Polynomial tnn_polynomial(const std::vector<std::vector<Rational>>& M, int n_vars) {
    const int n = static_cast<int>(M.size());
    if (n == 0) throw DomainError("empty matrix");
    for (const auto& row : M) {
        if (static_cast<int>(row.size()) != n) throw DomainError("matrix must be square");
        for (const auto& v : row)
            if (sgn(v) < 0) throw DomainError("matrix entries must be nonnegative");
    }
    Polynomial f(n_vars);
    for (const auto& w : symmetric_group(n)) {
        Rational weight(1);
        for (int i = 1; i <= n; ++i) weight *= M[i - 1][w(i) - 1];
        if (snp::is_zero(weight)) continue;
        f += weight * power_product(cycle_type(w), n_vars);
    }
    return f;
}

namespace {

Polynomial reutenauer_single(int d, int n) {
    static std::map<std::pair<int, int>, Polynomial> memo;
    static std::mutex mtx;
    auto key = std::make_pair(d, n);
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Polynomial result(n);
    if (d == 1) {
        result = classical_basis(ClassicalBasisKind::schur, Partition({1}), n);
    } else {
        result = classical_basis(ClassicalBasisKind::schur, Partition({d}), n);
        for (const auto& mu : partitions_of(d)) {
            if (mu == Partition({d})) continue;
            Polynomial prod = Polynomial::constant(n, Rational(1));
            for (int p : mu.parts) prod = prod * reutenauer_single(p, n);
            result -= prod;
        }
    }
    std::lock_guard<std::mutex> lk(mtx);
    return memo.emplace(key, std::move(result)).first->second;
}

} // namespace

Polynomial reutenauer_q(const Partition& lambda, int n) {
    if (n < lambda.size())
        throw DomainError("reutenauer_q needs n >= |lambda| for faithful arithmetic");
    Polynomial f = Polynomial::constant(n, Rational(1));
    for (int p : lambda.parts) f = f * reutenauer_single(p, n);
    return f;
}

Polynomial chromatic_symmetric(const SimpleGraph& G, int n) {
    Polynomial f(n);
    std::vector<std::vector<int>> adj(G.vertex_count + 1);
    for (auto [a, b] : G.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> color(G.vertex_count + 1, 0);
    Exponents e(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v > G.vertex_count) {
            f.add_term(e, Rational(1));
            return;
        }
        for (int c = 1; c <= n; ++c) {
            bool ok = true;
            for (int u : adj[v])
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            ++e[c - 1];
            rec(v + 1);
            --e[c - 1];
            color[v] = 0;
        }
    };
    rec(1);
    return f;
}

namespace {

Exponents partition_exponents(const Partition& lambda, int n) {
    Exponents e(lambda.parts.begin(), lambda.parts.end());
    e.resize(n, 0);
    return e;
}

// Exact linear solve; returns nullopt on a singular matrix.
std::optional<std::vector<Rational>> gaussian_solve(std::vector<std::vector<Rational>> A,
                                                    std::vector<Rational> b) {
    const int n = static_cast<int>(A.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!snp::is_zero(A[r][col])) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(A[col], A[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col || snp::is_zero(A[r][col])) continue;
            Rational f = A[r][col] / A[col][col];
            for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

std::map<Partition, Rational> expand_by_linear_system(const Polynomial& f,
                                                      ClassicalBasisKind kind) {
    const int n = f.num_vars();
    std::map<Partition, Rational> out;
    std::set<int> degrees;
    for (const auto& [e, c] : f.terms()) degrees.insert(total_degree(e));
    for (int d : degrees) {
        auto lambdas = partitions_of(d);
        // with d <= n every partition of d has at most n rows and parts <= n,
        // so both the basis set and the coordinate set are all of Par(d)
        const int N = static_cast<int>(lambdas.size());
        std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N));
        for (int j = 0; j < N; ++j) {
            Polynomial bj = classical_basis(kind, lambdas[j], n);
            for (int i = 0; i < N; ++i)
                A[i][j] = bj.coefficient(partition_exponents(lambdas[i], n));
        }
        std::vector<Rational> b(N);
        for (int i = 0; i < N; ++i) b[i] = f.coefficient(partition_exponents(lambdas[i], n));
        auto x = gaussian_solve(A, b);
        if (!x) throw InternalError("classical basis transition matrix singular");
        Polynomial check(n);
        for (int j = 0; j < N; ++j)
            if (!snp::is_zero((*x)[j])) check += (*x)[j] * classical_basis(kind, lambdas[j], n);
        for (const auto& [e, c] : f.terms())
            if (total_degree(e) == d && check.coefficient(e) != c)
                throw DomainError("polynomial is not in the requested basis span");
        for (const auto& [e, c] : check.terms())
            if (f.coefficient(e) != c)
                throw DomainError("polynomial is not in the requested basis span");
        for (int j = 0; j < N; ++j)
            if (!snp::is_zero((*x)[j])) out[lambdas[j]] = (*x)[j];
    }
    return out;
}

} // namespace

std::map<Partition, Rational> schur_expand_unguarded(const Polynomial& f) {
    std::map<Partition, Rational> out;
    Polynomial rest = f;
    while (!rest.is_zero()) {
        Exponents lead = rest.leading_exponent();
        std::vector<int> parts = lead;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i] > parts[i - 1])
                throw DomainError("leading term is not a partition; input not symmetric");
        Partition lam{std::move(parts)};
        Rational c = rest.coefficient(lead);
        out[lam] = c;
        rest -= c * classical_basis(ClassicalBasisKind::schur, lam, f.num_vars());
    }
    return out;
}

std::map<Partition, Rational> expand_in_basis(const Polynomial& f, ClassicalBasisKind kind) {
    if (!is_symmetric(f)) throw DomainError("expansion requires a symmetric polynomial");
    if (f.degree() > f.num_vars())
        throw DomainError("expansion requires deg(f) <= variable count");
    switch (kind) {
        case ClassicalBasisKind::schur: return schur_expand_unguarded(f);
        case ClassicalBasisKind::monomial: {
            std::map<Partition, Rational> out;
            Polynomial rest = f;
            while (!rest.is_zero()) {
                Exponents lead = rest.leading_exponent();
                std::vector<int> parts = lead;
                while (!parts.empty() && parts.back() == 0) parts.pop_back();
                for (std::size_t i = 1; i < parts.size(); ++i)
                    if (parts[i] > parts[i - 1])
                        throw DomainError("leading term is not a partition");
                Partition lam{std::move(parts)};
                Rational c = rest.coefficient(lead);
                out[lam] = c;
                rest -= c * classical_basis(ClassicalBasisKind::monomial, lam, f.num_vars());
            }
            return out;
        }
        default: return expand_by_linear_system(f, kind);
    }
}

std::string schur_expansion_to_string(const std::map<Partition, Rational>& expansion) {
    if (expansion.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lam, c] : expansion) {
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (a != 1) out << rational_to_string(a) << "*";
        out << "s" << lam.str();
    }
    return out.str();
}

Polynomial omega_involution(const Polynomial& f) {
    auto expansion = expand_in_basis(f, ClassicalBasisKind::schur);
    Polynomial out(f.num_vars());
    for (const auto& [lam, c] : expansion)
        out += c * classical_basis(ClassicalBasisKind::schur, lam.conjugate(), f.num_vars());
    return out;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Rational z_lambda_qt(const Partition& lambda, const Rational& q0, const Rational& t0) {
    // z_lambda prod_i (1 - q^{lambda_i}) / (1 - t^{lambda_i})
    std::map<int, int> mult;
    for (int p : lambda.parts) ++mult[p];
    Rational z(1);
    for (auto [r, m] : mult) {
        for (int i = 0; i < m; ++i) z *= Rational(r);
        for (int i = 2; i <= m; ++i) z *= Rational(i);
    }
    for (int p : lambda.parts) {
        Rational den = Rational(1) - rational_pow(t0, p);
        if (snp::is_zero(den))
            throw DomainError("pole of z_lambda(q,t): t0^k = 1 for an occurring part");
        z *= (Rational(1) - rational_pow(q0, p)) / den;
    }
    return z;
}

} // namespace

Rational qt_inner_product(const Polynomial& f, const Polynomial& g, const Rational& q0,
                          const Rational& t0) {
    auto fa = expand_in_basis(f, ClassicalBasisKind::power);
    auto ga = expand_in_basis(g, ClassicalBasisKind::power);
    Rational total(0);
    for (const auto& [lam, a] : fa) {
        auto it = ga.find(lam);
        if (it == ga.end()) continue;
        total += a * it->second * z_lambda_qt(lam, q0, t0);
    }
    return total;
}

Polynomial macdonald_P(const Partition& lambda, const Rational& q0, const Rational& t0,
                       int n) {
    const int d = lambda.size();
    if (n < d) throw DomainError("macdonald_P needs n >= |lambda|");
    std::vector<Partition> below;
    for (const auto& mu : partitions_of(d))
        if (!(mu == lambda) && dominance_leq(mu, lambda)) below.push_back(mu);
    if (below.empty()) return classical_basis(ClassicalBasisKind::monomial, lambda, n);

    // p-expansions of the m_mu via inverting the p -> m transition
    auto all = partitions_of(d);
    const int N = static_cast<int>(all.size());
    std::vector<std::vector<Rational>> R(N, std::vector<Rational>(N));
    for (int r = 0; r < N; ++r) {
        Polynomial p = power_product(all[r], n);
        for (int c = 0; c < N; ++c) R[r][c] = p.coefficient(partition_exponents(all[c], n));
    }
    // columns of R^{-1}: p = R m  =>  m = R^{-1} p
    std::vector<std::vector<Rational>> Rinv(N, std::vector<Rational>(N));
    for (int c = 0; c < N; ++c) {
        std::vector<Rational> e(N, Rational(0));
        e[c] = 1;
        auto y = gaussian_solve(R, e);
        if (!y) throw InternalError("power-sum transition matrix singular");
        for (int r = 0; r < N; ++r) Rinv[r][c] = (*y)[r];
    }
    auto index_of = [&](const Partition& mu) {
        for (int i = 0; i < N; ++i)
            if (all[i] == mu) return i;
        throw InternalError("partition index lookup failed");
    };
    std::vector<Rational> zvals(N);
    for (int i = 0; i < N; ++i) zvals[i] = z_lambda_qt(all[i], q0, t0);
    auto gram = [&](const Partition& a, const Partition& b) {
        int ia = index_of(a), ib = index_of(b);
        Rational s(0);
        for (int r = 0; r < N; ++r) s += Rinv[ia][r] * Rinv[ib][r] * zvals[r];
        return s;
    };

    const int K = static_cast<int>(below.size());
    std::vector<std::vector<Rational>> G(K, std::vector<Rational>(K));
    std::vector<Rational> rhs(K);
    for (int i = 0; i < K; ++i) {
        for (int j = 0; j < K; ++j) G[i][j] = gram(below[j], below[i]);
        rhs[i] = -gram(lambda, below[i]);
    }
    auto coeffs = gaussian_solve(G, rhs);
    if (!coeffs)
        throw NonGenericPointError("orthogonality system singular at this (q0,t0)");
    Polynomial P = classical_basis(ClassicalBasisKind::monomial, lambda, n);
    for (int j = 0; j < K; ++j)
        if (!snp::is_zero((*coeffs)[j]))
            P += (*coeffs)[j] * classical_basis(ClassicalBasisKind::monomial, below[j], n);
    // re-verify orthogonality directly
    for (int i = 0; i < K; ++i) {
        Polynomial m_mu = classical_basis(ClassicalBasisKind::monomial, below[i], n);
        if (!snp::is_zero(qt_inner_product(P, m_mu, q0, t0)))
            throw InternalError("macdonald orthogonality re-verification failed");
    }
    return P;
}

namespace {
const std::set<std::string> kUnsupported = {
    "llt", "modified-macdonald", "kronecker", "schur-p", "schur-q",
    "nonsymmetric-macdonald", "kostka-foulkes",
};
}

bool is_unsupported_family(const std::string& name) { return kUnsupported.count(name) > 0; }

void reject_unsupported_family(const std::string& name) {
    throw UnsupportedError("family '" + name + "' is out of scope for this library");
}

} // namespace snp
