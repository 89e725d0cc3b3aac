#include "snp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include <omp.h>

#include "snp/cache.hpp"

namespace snp {

namespace {

Json exponents_json(const Exponents& e) { return Json(e); }

std::set<Exponents> as_set(const std::vector<Exponents>& v) { return {v.begin(), v.end()}; }

// One sweep instance: evaluated to pass/fail plus an optional witness.
struct Instance {
    Json label;
    std::function<std::optional<Json>()> run; // nullopt = pass, value = witness
};

// Compositions with |alpha| <= max_size, at most max_zeros zero parts, and
// length bounded by (positive parts) + max_zeros.  Deterministic order.
std::vector<Composition> composition_range(int max_size, int max_zeros, int max_len = -1) {
    std::set<std::vector<int>> seen;
    std::vector<Composition> out;
    for (int d = 0; d <= max_size; ++d) {
        int len_cap = (max_len > 0) ? max_len : d + max_zeros;
        len_cap = std::max(len_cap, 1);
        for (int len = 1; len <= len_cap; ++len)
            for (const auto& alpha : compositions_of(d, len)) {
                if (alpha.zero_count() > max_zeros) continue;
                if (seen.insert(alpha.entries).second) out.push_back(alpha);
            }
    }
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        if (a.length() != b.length()) return a.length() < b.length();
        return a.entries < b.entries;
    });
    return out;
}

std::vector<Composition> strict_composition_range(int max_size) {
    std::vector<Composition> out;
    for (int d = 1; d <= max_size; ++d) {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int rest) {
            if (rest == 0) {
                out.emplace_back(cur);
                return;
            }
            for (int v = 1; v <= rest; ++v) {
                cur.push_back(v);
                rec(rest - v);
                cur.pop_back();
            }
        };
        rec(d);
    }
    return out;
}

// {beta : beta preceq alpha} inside Z^{len(alpha)}.
std::vector<Exponents> preceq_downset(const Composition& alpha) {
    std::vector<Exponents> out;
    for (const auto& r : rearrangements(alpha.sorted_partition(), alpha.length()))
        if (composition_preceq(Composition(r), alpha)) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Json> check_snp_of(const Polynomial& f) {
    auto r = is_snp(f);
    if (r.snp) return std::nullopt;
    Json witness;
    witness["missing_point"] = exponents_json(*r.witness);
    return witness;
}

std::optional<Json> compare_point_sets(const std::set<Exponents>& left,
                                       const std::set<Exponents>& right,
                                       const char* left_name, const char* right_name) {
    for (const auto& p : left)
        if (!right.count(p)) {
            Json w;
            w["point"] = exponents_json(p);
            w["only_in"] = left_name;
            return w;
        }
    for (const auto& p : right)
        if (!left.count(p)) {
            Json w;
            w["point"] = exponents_json(p);
            w["only_in"] = right_name;
            return w;
        }
    return std::nullopt;
}

// ---- per-target instance builders -------------------------------------

std::vector<Instance> instances_schubert_like(const SweepSpec& spec,
                                              const std::string& target) {
    std::vector<Instance> out;
    for (const auto& w : symmetric_group(spec.sn)) {
        Json label = w.str();
        if (target == "main1") {
            out.push_back({label, [w]() -> std::optional<Json> {
                               auto D = rothe_diagram(w);
                               auto S = schubert_family(SchubertFamilyKind::schubert, w);
                               auto sup = as_set(pad_vars(S, D.n).support());
                               auto pts = as_set(schubitope_lattice_points(D));
                               return compare_point_sets(pts, sup, "schubitope", "support");
                           }});
        } else if (target == "main2") {
            out.push_back({label, [w]() {
                               return check_snp_of(
                                   schubert_family(SchubertFamilyKind::schubert, w));
                           }});
        } else if (target == "double") {
            out.push_back({label, [w]() {
                               return check_snp_of(
                                   schubert_family(SchubertFamilyKind::double_schubert, w));
                           }});
        } else if (target == "grothendieck") {
            out.push_back({label, [w]() {
                               return check_snp_of(
                                   schubert_family(SchubertFamilyKind::grothendieck, w));
                           }});
        } else if (target == "kohnert-contain") {
            out.push_back({label, [w]() -> std::optional<Json> {
                               auto D = rothe_diagram(w);
                               auto table = theta_table(D);
                               auto K = kohnert_polynomial(D);
                               for (const auto& [e, c] : K.terms()) {
                                   if (total_degree(e) != D.cell_count()) {
                                       Json wit;
                                       wit["point"] = exponents_json(e);
                                       wit["reason"] = "wrong coordinate sum";
                                       return wit;
                                   }
                                   for (unsigned m = 1; m < (1u << D.n); ++m) {
                                       long sum = 0;
                                       for (int i = 0; i < D.n; ++i)
                                           if ((m >> i) & 1u) sum += e[i];
                                       if (sum > table[m]) {
                                           Json wit;
                                           wit["point"] = exponents_json(e);
                                           wit["subset_mask"] = m;
                                           return wit;
                                       }
                                   }
                               }
                               return std::nullopt;
                           }});
        } else if (target == "grothendieck-slice") {
            out.push_back({label, [w]() -> std::optional<Json> {
                               auto G = schubert_family(SchubertFamilyKind::grothendieck, w);
                               auto S = schubert_family(SchubertFamilyKind::schubert, w);
                               int n = std::max(G.num_vars(), S.num_vars());
                               auto PG = newton_polytope(pad_vars(G, n));
                               int l = w.length();
                               // lattice points of Newton(G) on the sum = l slice
                               std::set<Exponents> slice;
                               auto core = reduce_generators(PG);
                               std::vector<int> caps(n, 0);
                               for (const auto& g : PG.generators)
                                   for (int i = 0; i < n; ++i) caps[i] = std::max(caps[i], g[i]);
                               for (const auto& cand : compositions_of_bounded(l, caps)) {
                                   if (contains_point(core, cand.entries)) slice.insert(cand.entries);
                               }
                               auto PS = lattice_points(newton_polytope(pad_vars(S, n)));
                               return compare_point_sets(slice, as_set(PS), "grothendieck_slice",
                                                         "schubert_newton");
                           }});
        }
    }
    return out;
}

std::vector<Instance> instances_composition_family(const SweepSpec& spec,
                                                   const std::string& target) {
    std::vector<Instance> out;
    auto alphas = composition_range(spec.max_size, spec.max_zeros);
    for (const auto& alpha : alphas) {
        Json label = alpha.str();
        if (target == "keytope") {
            out.push_back({label, [alpha]() -> std::optional<Json> {
                               auto D = skyline_diagram(alpha);
                               auto key = demazure_family(DemazureFamilyKind::key, alpha);
                               auto sup = as_set(pad_vars(key, D.n).support());
                               auto pts = as_set(schubitope_lattice_points(D));
                               return compare_point_sets(pts, sup, "schubitope", "support");
                           }});
        } else if (target == "key-snp") {
            out.push_back({label, [alpha]() {
                               return check_snp_of(demazure_family(DemazureFamilyKind::key, alpha));
                           }});
        } else if (target == "atom-snp") {
            out.push_back({label, [alpha]() -> std::optional<Json> {
                               auto A = demazure_family(DemazureFamilyKind::atom, alpha);
                               if (A.is_zero()) return std::nullopt;
                               return check_snp_of(A);
                           }});
        } else if (target == "omega-snp") {
            out.push_back({label, [alpha]() {
                               return check_snp_of(
                                   demazure_family(DemazureFamilyKind::grothendieck_key, alpha));
                           }});
        } else if (target == "lascoux-snp") {
            out.push_back({label, [alpha]() -> std::optional<Json> {
                               auto L =
                                   demazure_family(DemazureFamilyKind::lascoux_atom, alpha);
                               if (L.is_zero()) return std::nullopt;
                               return check_snp_of(L);
                           }});
        } else if (target == "key-bruhat") {
            out.push_back({label, [alpha]() -> std::optional<Json> {
                               auto key = demazure_family(DemazureFamilyKind::key, alpha);
                               std::set<Exponents> expected{alpha.entries};
                               for (const auto& beta : order_kappa_downset(alpha))
                                   expected.insert(beta.entries);
                               auto sup = as_set(key.support());
                               if (auto w = compare_point_sets(sup, expected, "support",
                                                               "kappa_downset"))
                                   return w;
                               for (const auto& [e, c] : key.terms())
                                   if (sgn(c) <= 0) {
                                       Json wit;
                                       wit["point"] = exponents_json(e);
                                       wit["coeff"] = rational_to_string(c);
                                       return wit;
                                   }
                               return std::nullopt;
                           }});
        } else if (target == "key-vertices") {
            out.push_back({label, [alpha]() -> std::optional<Json> {
                               auto key = demazure_family(DemazureFamilyKind::key, alpha);
                               auto verts = as_set(vertices(newton_polytope(key)));
                               auto expected = preceq_downset(alpha);
                               return compare_point_sets(
                                   verts, {expected.begin(), expected.end()}, "vertices",
                                   "preceq_downset");
                           }});
        } else if (target == "generic-nonsymm") {
            out.push_back({label, [alpha]() -> std::optional<Json> {
                               auto down = order_s_downset(alpha);
                               std::set<Exponents> downset;
                               for (const auto& b : down) downset.insert(b.entries);
                               LatticePolytope Phat(alpha.length(),
                                                    {downset.begin(), downset.end()});
                               for (const auto& p : lattice_points(Phat))
                                   if (!downset.count(p)) {
                                       Json wit;
                                       wit["point"] = exponents_json(p);
                                       return wit;
                                   }
                               return std::nullopt;
                           }});
        }
    }
    return out;
}

std::vector<Instance> instances_ehrhart(const SweepSpec& spec) {
    std::vector<Instance> out;
    auto check_positive = [](const Diagram& D) -> std::optional<Json> {
        auto L = schubitope_ehrhart(D);
        for (std::size_t i = 0; i < L.size(); ++i)
            if (sgn(L[i]) <= 0) {
                Json wit;
                wit["coefficient_index"] = i;
                wit["value"] = rational_to_string(L[i]);
                return wit;
            }
        return std::nullopt;
    };
    for (const auto& w : symmetric_group(spec.sn)) {
        Json label = std::string("rothe:") + w.str();
        out.push_back({label, [w, check_positive]() { return check_positive(rothe_diagram(w)); }});
    }
    std::mt19937_64 rng(spec.seed);
    for (int k = 0; k < spec.random_count; ++k) {
        std::vector<std::pair<int, int>> cells;
        for (int r = 1; r <= spec.grid; ++r)
            for (int c = 1; c <= spec.grid; ++c)
                if (rng() & 1u) cells.emplace_back(r, c);
        Diagram D(spec.grid, std::move(cells));
        Json label = std::string("random:") + std::to_string(k);
        out.push_back({label, [D, check_positive]() { return check_positive(D); }});
    }
    return out;
}

std::vector<Instance> instances_macdonald(const SweepSpec& spec, Json& params_out) {
    std::vector<Instance> out;
    const int n = spec.vars > 0 ? spec.vars : spec.max_size;
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> num(-10, 10), den(1, 10);
    long skipped = 0;
    std::vector<std::pair<Rational, Rational>> points;
    while (static_cast<int>(points.size()) < spec.samples) {
        Rational q0(num(rng), den(rng));
        Rational t0(num(rng), den(rng));
        q0.canonicalize();
        t0.canonicalize();
        // poles of z_lambda at t0^k = 1; the orthogonalization itself may
        // still reject the point as non-generic (singular system)
        if (abs(t0) == 1) {
            ++skipped;
            continue;
        }
        points.emplace_back(q0, t0);
    }
    Json sampled = Json::array();
    for (auto& [q0, t0] : points)
        sampled.push_back({rational_to_string(q0), rational_to_string(t0)});
    params_out["sampled_points"] = sampled;
    params_out["pole_points_skipped"] = skipped;

    for (int d = 1; d <= spec.max_size; ++d)
        for (const auto& lam : partitions_of(d))
            for (std::size_t s = 0; s < points.size(); ++s) {
                Json label = lam.str() + "@" + rational_to_string(points[s].first) + "," +
                             rational_to_string(points[s].second);
                auto [q0, t0] = points[s];
                out.push_back({label, [lam, q0, t0, n]() -> std::optional<Json> {
                                   Polynomial P(0);
                                   try {
                                       P = macdonald_P(lam, q0, t0, n);
                                   } catch (const NonGenericPointError&) {
                                       Json wit;
                                       wit["skipped"] = "singular orthogonality system";
                                       return wit; // reported, but distinguished
                                   }
                                   // the Newton-polytope claim holds at every
                                   // pole-free evaluation, generic or not
                                   if (!polytope_equal(newton_polytope(P),
                                                       permutahedron(lam, n))) {
                                       Json wit;
                                       wit["reason"] = "newton polytope differs from P_lambda";
                                       return wit;
                                   }
                                   // genericity also requires every dominated
                                   // coefficient c_{lambda,mu}(q0,t0) nonzero;
                                   // a root puts the point outside the open set
                                   for (const auto& mu : partitions_of(lam.size())) {
                                       if (mu == lam || !dominance_leq(mu, lam)) continue;
                                       Exponents e(mu.parts.begin(), mu.parts.end());
                                       e.resize(n, 0);
                                       if (snp::is_zero(P.coefficient(e))) {
                                           Json wit;
                                           wit["skipped"] = "coefficient root at this point";
                                           wit["vanishing_index"] = mu.str();
                                           return wit;
                                       }
                                   }
                                   return check_snp_of(P);
                               }});
            }
    return out;
}

std::vector<Instance> instances_stanley(const SweepSpec& spec) {
    std::vector<Instance> out;
    const int n = spec.vars > 0 ? spec.vars : 5;
    for (const auto& w : symmetric_group(spec.sn)) {
        Json label = w.str();
        out.push_back({label, [w, n]() -> std::optional<Json> {
                           const int ell = w.length();
                           auto F = stanley_symmetric(w, n);
                           auto expansion = schur_expand_unguarded(F.poly);
                           // nonnegativity
                           for (const auto& [lam, c] : expansion)
                               if (sgn(c) < 0) {
                                   Json wit;
                                   wit["index"] = lam.str();
                                   wit["coeff"] = rational_to_string(c);
                                   wit["part"] = "schur_negative";
                                   return wit;
                               }
                           // completeness certificate and the reduced-word
                           // coefficient identity: sum a_lambda f^lambda =
                           // #Red(w) = [x_1...x_ell] F_w
                           Rational total(0);
                           std::vector<int> ones(ell, 1);
                           for (const auto& [lam, c] : expansion)
                               total += c * Rational(kostka(lam, Composition(ones)));
                           if (total != Rational(reduced_word_count(w))) {
                               Json wit;
                               wit["part"] = "reduced_word_count";
                               wit["expansion_total"] = rational_to_string(total);
                               return wit;
                           }
                           // dominance interval: a maximum and minimum exist
                           // and are comparable with every appearing index
                           if (!expansion.empty()) {
                               for (const char* which : {"max", "min"}) {
                                   bool want_max = std::string(which) == "max";
                                   bool found = false;
                                   for (const auto& [cand, c1] : expansion) {
                                       bool ok = true;
                                       for (const auto& [other, c2] : expansion) {
                                           bool cmp = want_max ? dominance_leq(other, cand)
                                                               : dominance_leq(cand, other);
                                           if (!cmp) {
                                               ok = false;
                                               break;
                                           }
                                       }
                                       if (ok) {
                                           found = true;
                                           break;
                                       }
                                   }
                                   if (!found) {
                                       Json wit;
                                       wit["part"] = std::string("no_dominance_") + which;
                                       return wit;
                                   }
                               }
                           }
                           // SNP: certified by nonnegativity + unique dominance
                           // maximum + completeness; cross-check with the LP
                           // route at deg(F) variables when affordable
                           if (ell >= 1 && ell <= 6) {
                               auto Fdeg = stanley_symmetric(w, ell);
                               auto r = is_snp(Fdeg.poly);
                               if (!r.snp) {
                                   Json wit;
                                   wit["part"] = "snp_lp_check";
                                   wit["missing_point"] = exponents_json(*r.witness);
                                   return wit;
                               }
                           }
                           return std::nullopt;
                       }});
    }
    return out;
}

std::vector<Instance> instances_quasi(const SweepSpec& spec) {
    std::vector<Instance> out;
    const int n = spec.vars > 0 ? spec.vars : 5;
    for (const auto& alpha : strict_composition_range(spec.max_size)) {
        if (alpha.length() > n) continue;
        Json label = alpha.str();
        out.push_back({label, [alpha, n]() -> std::optional<Json> {
                           auto M = qsym_basis(QsymKind::monomial_qsym, alpha, n);
                           auto F = qsym_basis(QsymKind::fundamental_qsym, alpha, n);
                           if (!polytope_equal(newton_polytope(F), newton_polytope(M))) {
                               Json wit;
                               wit["reason"] = "newton polytopes differ";
                               return wit;
                           }
                           std::set<Exponents> expected;
                           for (const auto& r :
                                rearrangements(alpha.sorted_partition(), n)) {
                               Composition g{r};
                               if (g.stripped() == alpha.stripped()) expected.insert(r);
                           }
                           auto verts = as_set(vertices(newton_polytope(F)));
                           return compare_point_sets(verts, expected, "vertices",
                                                     "strict_rearrangements");
                       }});
    }
    return out;
}

std::vector<Instance> instances_order_sweep(const SweepSpec& spec) {
    std::vector<Instance> out;
    // beta <_kappa alpha implies beta <_S alpha
    for (const auto& alpha : composition_range(spec.max_size, spec.max_zeros)) {
        Json label = alpha.str();
        out.push_back({label, [alpha]() -> std::optional<Json> {
                           auto s = order_s_downset(alpha);
                           std::set<std::vector<int>> sset;
                           for (const auto& b : s) sset.insert(b.entries);
                           for (const auto& beta : order_kappa_downset(alpha))
                               if (!sset.count(beta.entries)) {
                                   Json wit;
                                   wit["beta"] = beta.str();
                                   return wit;
                               }
                           return std::nullopt;
                       }});
    }
    return out;
}

} // namespace

const std::vector<std::string>& sweep_targets() {
    static const std::vector<std::string> targets = {
        "main1",          "main2",         "double",          "grothendieck",
        "keytope",        "key-snp",       "key-bruhat",      "atom-snp",
        "key-vertices",   "omega-snp",     "lascoux-snp",     "generic-nonsymm",
        "ehrhart-positive", "macdonald-generic", "stanley-snp", "quasi-newton-eq",
        "kohnert-contain", "grothendieck-slice", "kappa-implies-s",
    };
    return targets;
}

ConjectureReport run_sweep(const SweepSpec& spec_in) {
    const auto& targets = sweep_targets();
    if (std::find(targets.begin(), targets.end(), spec_in.target) == targets.end())
        throw DomainError("unknown sweep target: " + spec_in.target);

    auto start = std::chrono::steady_clock::now();
    ConjectureReport report;
    SweepSpec spec = spec_in;
    report.target = spec.target;
    if (spec.sn > spec.cap_sn) {
        spec.sn = spec.cap_sn;
        report.truncated = true;
    }
    if (spec.max_size > spec.cap_size) {
        spec.max_size = spec.cap_size;
        report.truncated = true;
    }
    report.params["sn"] = spec.sn;
    report.params["max_size"] = spec.max_size;
    report.params["vars"] = spec.vars;
    report.params["max_zeros"] = spec.max_zeros;
    report.params["samples"] = spec.samples;
    report.params["random_count"] = spec.random_count;
    report.params["grid"] = spec.grid;
    report.fingerprint["version"] = PolyCache::code_version();
    report.fingerprint["seed"] = spec.seed;

    std::vector<Instance> instances;
    const std::string& t = spec.target;
    if (t == "main1" || t == "main2" || t == "double" || t == "grothendieck" ||
        t == "kohnert-contain" || t == "grothendieck-slice")
        instances = instances_schubert_like(spec, t);
    else if (t == "keytope" || t == "key-snp" || t == "key-bruhat" || t == "atom-snp" ||
             t == "key-vertices" || t == "omega-snp" || t == "lascoux-snp" ||
             t == "generic-nonsymm")
        instances = instances_composition_family(spec, t);
    else if (t == "ehrhart-positive")
        instances = instances_ehrhart(spec);
    else if (t == "macdonald-generic")
        instances = instances_macdonald(spec, report.params);
    else if (t == "stanley-snp")
        instances = instances_stanley(spec);
    else if (t == "quasi-newton-eq")
        instances = instances_quasi(spec);
    else if (t == "kappa-implies-s")
        instances = instances_order_sweep(spec);

    report.instances = static_cast<long>(instances.size());
    std::vector<std::optional<Json>> results(instances.size());
    std::vector<std::string> errors(instances.size());
    const int jobs = spec.jobs > 0 ? spec.jobs : parallel_jobs();
    const auto total = static_cast<std::ptrdiff_t>(instances.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
        try {
            results[i] = instances[i].run();
        } catch (const std::exception& ex) {
            errors[i] = ex.what();
        }
    }
    long skipped_nongeneric = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!errors[i].empty()) {
            Json wit;
            wit["error"] = errors[i];
            report.failures.push_back({instances[i].label, wit});
            continue;
        }
        if (results[i].has_value()) {
            if (results[i]->contains("skipped")) {
                ++skipped_nongeneric; // non-generic points are not failures
                continue;
            }
            report.failures.push_back({instances[i].label, *results[i]});
        }
    }
    if (spec.target == "macdonald-generic")
        report.params["non_generic_skipped"] = skipped_nongeneric;
    // skipped non-generic points are excluded from the instance count, so
    // passes + failures always add up to it
    report.instances -= skipped_nongeneric;
    report.passes = report.instances - static_cast<long>(report.failures.size());
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Json ConjectureReport::to_json() const {
    Json j;
    j["target"] = target;
    j["params"] = params;
    j["instances"] = instances;
    j["passes"] = passes;
    j["failures"] = Json::array();
    for (const auto& f : failures) {
        Json one;
        one["instance"] = f.instance;
        one["witness"] = f.witness;
        j["failures"].push_back(one);
    }
    j["fingerprint"] = fingerprint;
    j["seconds"] = seconds;
    j["truncated"] = truncated;
    return j;
}

bool PosetSnapshot::leq(int i, int j) const {
    if (i == j) return true;
    return std::binary_search(relation.begin(), relation.end(), std::make_pair(i, j));
}

PosetSnapshot dominance_poset(int ell, int n) {
    if (n > 8) throw ResourceCapError("dominance poset capped at S_8");
    PosetSnapshot snap;
    snap.ell = ell;
    snap.n = n;
    for (const auto& w : symmetric_group(n))
        if (w.length() == ell) snap.elements.push_back(w);
    std::sort(snap.elements.begin(), snap.elements.end());

    const int N = static_cast<int>(snap.elements.size());
    std::vector<LatticePolytope> polys;
    int maxdim = 1;
    std::vector<Polynomial> schuberts;
    for (const auto& w : snap.elements) {
        auto S = schubert_family(SchubertFamilyKind::schubert, w);
        maxdim = std::max(maxdim, S.num_vars());
        schuberts.push_back(std::move(S));
    }
    for (auto& S : schuberts) polys.push_back(newton_polytope(pad_vars(S, maxdim)));

    std::vector<std::vector<bool>> leq(N, std::vector<bool>(N, false));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            leq[i][j] = contains_polytope(polys[j], polys[i]);
        }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (i != j && leq[i][j]) snap.relation.emplace_back(i, j);
    std::sort(snap.relation.begin(), snap.relation.end());
    // Hasse: covers with nothing strictly between
    for (auto [i, j] : snap.relation) {
        bool cover = true;
        for (int k = 0; k < N && cover; ++k)
            if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
        if (cover) snap.hasse.emplace_back(i, j);
    }
    return snap;
}

Json PosetSnapshot::to_json() const {
    Json j;
    j["length"] = ell;
    j["sn"] = n;
    j["elements"] = Json::array();
    for (const auto& w : elements) j["elements"].push_back(w.str());
    j["relation"] = Json::array();
    for (auto [a, b] : relation)
        j["relation"].push_back({elements[a].str(), elements[b].str()});
    j["hasse"] = Json::array();
    for (auto [a, b] : hasse) j["hasse"].push_back({elements[a].str(), elements[b].str()});
    return j;
}

std::string PosetSnapshot::to_dot() const {
    std::ostringstream out;
    out << "digraph dominance {\n  rankdir=BT;\n";
    for (const auto& w : elements) out << "  \"" << w.str() << "\";\n";
    for (auto [a, b] : hasse)
        out << "  \"" << elements[a].str() << "\" -> \"" << elements[b].str() << "\";\n";
    out << "}\n";
    return out.str();
}

UpperBoundWitness upper_bound_witness(const Permutation& u, const Permutation& v) {
    const int ell = u.length();
    if (ell != v.length()) throw DomainError("upper bound requires equal lengths");
    if (ell == 0) return {Permutation::identity(1), 0};

    auto Su = schubert_family(SchubertFamilyKind::schubert, u);
    auto Sv = schubert_family(SchubertFamilyKind::schubert, v);

    // zig-zag base s1 s3 ... s_{2l-1} in one-line notation: 21 43 65 ...
    std::vector<int> base;
    for (int blk = 0; blk < ell; ++blk) {
        base.push_back(2 * blk + 2);
        base.push_back(2 * blk + 1);
    }
    constexpr int kShiftCap = 16;
    for (int shift = 0; shift <= kShiftCap; ++shift) {
        std::vector<int> word;
        for (int i = 1; i <= shift; ++i) word.push_back(i);
        for (int b : base) word.push_back(b + shift);
        Permutation w{word};
        auto Sw = schubert_family(SchubertFamilyKind::schubert, w);
        int n = std::max({Su.num_vars(), Sv.num_vars(), Sw.num_vars()});
        auto Pw = newton_polytope(pad_vars(Sw, n));
        if (contains_polytope(Pw, newton_polytope(pad_vars(Su, n))) &&
            contains_polytope(Pw, newton_polytope(pad_vars(Sv, n))))
            return {w, shift};
    }
    throw InternalError("upper bound verification failed below the shift cap");
}

} // namespace snp
