#include "snp/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "snp/cache.hpp"
#include "snp/families.hpp"
#include "snp/schubitope.hpp"
#include "snp/verify.hpp"

namespace snp {

namespace {

Composition parse_composition(const std::string& s) {
    std::vector<int> entries;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw DomainError("bad composition: " + s);
        entries.push_back(std::stoi(tok));
    }
    if (entries.empty()) throw DomainError("bad composition: " + s);
    return Composition(std::move(entries));
}

Partition parse_partition(const std::string& s) {
    return Partition(parse_composition(s).entries);
}

struct FamilyRequest {
    std::string kind;
    std::string index;
    int vars = 0;
    Rational q{0};
    Rational t{0};
    bool have_qt = false;
};

// The polynomial behind a family spec; vars = 0 means the kind's default.
Polynomial build_family(const FamilyRequest& req) {
    const std::string& kind = req.kind;
    if (is_unsupported_family(kind)) reject_unsupported_family(kind);
    auto need_vars = [&](int dflt) { return req.vars > 0 ? req.vars : dflt; };

    if (kind == "schubert" || kind == "grothendieck" || kind == "double-schubert") {
        auto w = Permutation::parse(req.index);
        auto fk = kind == "schubert"            ? SchubertFamilyKind::schubert
                  : kind == "grothendieck"      ? SchubertFamilyKind::grothendieck
                                                : SchubertFamilyKind::double_schubert;
        return schubert_family(fk, w);
    }
    if (kind == "key" || kind == "atom" || kind == "lascoux-atom" || kind == "omega") {
        auto alpha = parse_composition(req.index);
        auto fk = kind == "key"            ? DemazureFamilyKind::key
                  : kind == "atom"         ? DemazureFamilyKind::atom
                  : kind == "lascoux-atom" ? DemazureFamilyKind::lascoux_atom
                                           : DemazureFamilyKind::grothendieck_key;
        return demazure_family(fk, alpha);
    }
    if (kind == "schur" || kind == "monomial" || kind == "elementary" ||
        kind == "homogeneous" || kind == "power" || kind == "forgotten") {
        auto lam = parse_partition(req.index);
        int n = need_vars(std::max(1, lam.size()));
        return classical_basis(classical_basis_kind_from_string(kind), lam, n);
    }
    if (kind == "skew-schur") {
        auto slash = req.index.find('/');
        if (slash == std::string::npos)
            throw DomainError("skew-schur index must look like 3,2/1");
        auto lam = parse_partition(req.index.substr(0, slash));
        auto mu = parse_partition(req.index.substr(slash + 1));
        return skew_schur(lam, mu, need_vars(std::max(1, lam.size())));
    }
    if (kind == "stanley") {
        auto w = Permutation::parse(req.index);
        return stanley_symmetric(w, need_vars(std::max(1, w.length()))).poly;
    }
    if (kind == "macdonald") {
        if (!req.have_qt) throw DomainError("macdonald needs --q and --t");
        auto lam = parse_partition(req.index);
        return macdonald_P(lam, req.q, req.t, need_vars(std::max(1, lam.size())));
    }
    if (kind == "hall-littlewood") {
        auto lam = parse_partition(req.index);
        return macdonald_P(lam, Rational(0), req.have_qt ? req.t : Rational(1, 2),
                           need_vars(std::max(1, lam.size())));
    }
    if (kind == "monomial-qsym" || kind == "fundamental-qsym" || kind == "quasi-schur") {
        auto alpha = parse_composition(req.index);
        auto fk = kind == "monomial-qsym"      ? QsymKind::monomial_qsym
                  : kind == "fundamental-qsym" ? QsymKind::fundamental_qsym
                                               : QsymKind::quasi_schur;
        return qsym_basis(fk, alpha, need_vars(std::max(alpha.length() + 1, alpha.size())));
    }
    if (kind == "reutenauer-q") {
        auto lam = parse_partition(req.index);
        return reutenauer_q(lam, need_vars(std::max(1, lam.size())));
    }
    if (kind == "vandermonde") {
        auto idx = parse_composition(req.index).entries; // n[,k]
        ProductParams p;
        p.n = idx.at(0);
        p.k = idx.size() > 1 ? idx[1] : 1;
        return product_family(ProductFamilyKind::vandermonde_power, p);
    }
    if (kind == "discriminant")
        return product_family(ProductFamilyKind::discriminant,
                              {.n = std::stoi(req.index), .m = 0, .k = 2});
    if (kind == "q-discriminant-neg1")
        return product_family(ProductFamilyKind::q_discriminant_neg1,
                              {.n = std::stoi(req.index), .m = 0, .k = 1});
    if (kind == "resultant-support" || kind == "binary-matrix-series") {
        auto idx = parse_composition(req.index).entries; // m,n
        if (idx.size() != 2) throw DomainError(kind + " index must be m,n");
        ProductParams p;
        p.m = idx[0];
        p.n = idx[1];
        return product_family(kind == "resultant-support"
                                  ? ProductFamilyKind::resultant_support
                                  : ProductFamilyKind::binary_matrix_series,
                              p);
    }
    if (kind == "cycle-index") {
        // index: semicolon-separated one-line permutations
        std::vector<Permutation> gens;
        std::stringstream ss(req.index);
        std::string tok;
        while (std::getline(ss, tok, ';'))
            if (!tok.empty()) gens.push_back(Permutation::parse(tok));
        if (gens.empty()) throw DomainError("cycle-index needs at least one generator");
        return cycle_index(gens, need_vars(gens.front().size()));
    }
    if (kind == "tnn") {
        // index: JSON array of arrays of rational strings
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(req.index);
        } catch (const nlohmann::json::exception& ex) {
            throw DomainError(std::string("bad matrix JSON: ") + ex.what());
        }
        std::vector<std::vector<Rational>> M;
        for (const auto& row : j) {
            std::vector<Rational> r;
            for (const auto& v : row) r.push_back(rational_from_string(v.get<std::string>()));
            M.push_back(std::move(r));
        }
        return tnn_polynomial(M, need_vars(static_cast<int>(M.size())));
    }
    if (kind == "chromatic") {
        // index: "n:1-2,1-3" (vertex count, dash-separated edges)
        auto colon = req.index.find(':');
        int n = std::stoi(req.index.substr(0, colon));
        std::vector<std::pair<int, int>> edges;
        if (colon != std::string::npos) {
            std::stringstream ss(req.index.substr(colon + 1));
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                auto dash = tok.find('-');
                if (dash == std::string::npos) throw DomainError("bad edge: " + tok);
                edges.emplace_back(std::stoi(tok.substr(0, dash)),
                                   std::stoi(tok.substr(dash + 1)));
            }
        }
        return chromatic_symmetric(SimpleGraph(n, std::move(edges)), need_vars(n));
    }
    throw DomainError("unknown family kind: " + kind);
}

Polynomial polynomial_from_family_spec(const std::string& spec, int vars, const Rational& q,
                                       const Rational& t, bool have_qt) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw DomainError("family spec must look like kind:index");
    FamilyRequest req;
    req.kind = spec.substr(0, colon);
    req.index = spec.substr(colon + 1);
    req.vars = vars;
    req.q = q;
    req.t = t;
    req.have_qt = have_qt;
    return build_family(req);
}

Diagram diagram_from_flags(const std::string& rothe, const std::string& skyline,
                           const std::string& cells) {
    int given = (!rothe.empty()) + (!skyline.empty()) + (!cells.empty());
    if (given != 1)
        throw DomainError("give exactly one of --rothe, --skyline, --cells");
    if (!rothe.empty()) return rothe_diagram(Permutation::parse(rothe));
    if (!skyline.empty()) return skyline_diagram(parse_composition(skyline));
    return Diagram::from_json(cells);
}

std::string system_to_text(const InequalitySystem& sys, int n) {
    std::ostringstream out;
    auto row = [&](const std::vector<int>& S) {
        std::string s;
        for (int r : S) {
            if (!s.empty()) s += " + ";
            s += "a" + std::to_string(r);
        }
        return s;
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    out << row(all) << " = " << sys.eq_sum << "\n";
    for (const auto& iq : sys.ineqs) out << row(iq.S) << " <= " << iq.bound << "\n";
    out << "a_i >= 0\n";
    return out.str();
}

std::string points_to_text(const std::vector<Exponents>& pts) {
    std::ostringstream out;
    for (const auto& p : pts) {
        out << "[";
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << p[i];
        out << "]\n";
    }
    return out.str();
}

Json points_to_json(const std::vector<Exponents>& pts) {
    Json j = Json::array();
    for (const auto& p : pts) j.push_back(p);
    return j;
}

struct GlobalOptions {
    int vars = 0;
    std::string format = "text";
    int jobs = 0;
    unsigned seed = 12345;
    std::string cache_dir;
    bool no_cache = false;
};

void apply_global(const GlobalOptions& g) {
    set_parallel_jobs(g.jobs);
    std::string dir = g.cache_dir;
    if (dir.empty()) {
        const char* env = std::getenv("SNP_CACHE_DIR");
        if (env) dir = env;
    }
    PolyCache::instance().configure(dir, !g.no_cache && !dir.empty());
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Newton polytopes of the polynomial families of algebraic combinatorics"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions global;
    app.add_option("--vars", global.vars, "variable count override");
    app.add_option("--format", global.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", global.jobs, "worker cap for parallel kernels");
    app.add_option("--seed", global.seed, "random seed for sweeps");
    app.add_option("--cache-dir", global.cache_dir, "persistent cache directory");
    app.add_flag("--no-cache", global.no_cache, "bypass the persistent cache");

    // family
    auto* family = app.add_subcommand("family", "construct a polynomial family member");
    family->fallthrough();
    std::string fam_kind, fam_index, fam_q, fam_t;
    bool fam_schur = false, fam_raw = false;
    family->add_option("kind", fam_kind)->required();
    family->add_option("index", fam_index)->required();
    family->add_option("--q", fam_q, "q evaluation (rational)");
    family->add_option("--t", fam_t, "t evaluation (rational)");
    family->add_flag("--schur", fam_schur, "print the Schur expansion");
    family->add_flag("--raw", fam_raw, "force monomial output");

    // polytope
    auto* polytope = app.add_subcommand("polytope", "Newton-polytope queries");
    polytope->fallthrough();
    std::string pt_sub, pt_family, pt_expr, pt_json, pt_point;
    polytope->add_option("query", pt_sub)
        ->required()
        ->check(CLI::IsMember({"snp", "vertices", "lattice-points", "ehrhart", "contains"}));
    polytope->add_option("--family", pt_family, "kind:index");
    polytope->add_option("--expr", pt_expr, "polynomial expression");
    polytope->add_option("--json", pt_json, "polynomial JSON");
    polytope->add_option("--point", pt_point, "comma-separated point for 'contains'");

    // schubitope
    auto* schub = app.add_subcommand("schubitope", "Schubitope data for a diagram");
    schub->fallthrough();
    std::string sc_sub, sc_rothe, sc_skyline, sc_cells;
    schub->add_option("query", sc_sub)
        ->required()
        ->check(CLI::IsMember({"ineqs", "minimize", "lattice-points", "ehrhart", "kohnert"}));
    schub->add_option("--rothe", sc_rothe, "permutation word");
    schub->add_option("--skyline", sc_skyline, "composition");
    schub->add_option("--cells", sc_cells, "diagram JSON");

    // verify
    auto* verify = app.add_subcommand("verify", "run a conjecture/theorem sweep");
    verify->fallthrough();
    SweepSpec spec;
    verify->add_option("target", spec.target)->required();
    verify->add_option("--sn", spec.sn, "symmetric group size");
    verify->add_option("--max-size", spec.max_size, "max |alpha| or |lambda|");
    verify->add_option("--max-zeros", spec.max_zeros, "zero parts allowed");
    verify->add_option("--samples", spec.samples, "(q,t) sample count");
    verify->add_option("--random", spec.random_count, "extra random diagrams");
    verify->add_option("--grid", spec.grid, "random diagram grid");
    verify->add_option("--subset-cap", spec.subset_cap, "max diagram rows (2^n subsets)");

    // poset
    auto* poset = app.add_subcommand("poset", "dominance poset on permutations");
    poset->fallthrough();
    int po_len = 2, po_n = 6;
    bool po_dot = false;
    poset->add_option("--length", po_len, "Coxeter length of the elements")->required();
    poset->add_option("--sn", po_n, "ambient symmetric group")->required();
    poset->add_flag("--dot", po_dot, "emit DOT instead of JSON");

    // cache
    auto* cache = app.add_subcommand("cache", "persistent cache maintenance");
    cache->fallthrough();
    std::string cache_op;
    cache->add_option("op", cache_op)->required()->check(CLI::IsMember({"info", "clear"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    apply_global(global);
    const bool json_mode = global.format == "json";

    try {
        if (family->parsed()) {
            if (is_unsupported_family(fam_kind)) {
                err << "error: family '" << fam_kind << "' is out of scope\n";
                return 3;
            }
            FamilyRequest req;
            req.kind = fam_kind;
            req.index = fam_index;
            req.vars = global.vars;
            if (!fam_q.empty()) req.q = rational_from_string(fam_q);
            if (!fam_t.empty()) req.t = rational_from_string(fam_t);
            req.have_qt = !fam_q.empty() || !fam_t.empty();
            Polynomial f = build_family(req);
            bool schur_out = fam_schur || (fam_kind == "reutenauer-q" && !fam_raw);
            if (schur_out) {
                auto expansion = expand_in_basis(f, ClassicalBasisKind::schur);
                if (json_mode) {
                    Json j;
                    for (const auto& [lam, c] : expansion)
                        j[lam.str()] = rational_to_string(c);
                    out << j.dump() << "\n";
                } else {
                    out << schur_expansion_to_string(expansion) << "\n";
                }
            } else if (!json_mode && fam_kind == "double-schubert") {
                // spell the y-block out in the two-alphabet layout
                int m = f.num_vars() / 2;
                std::vector<std::string> names;
                for (int k = 1; k <= m; ++k) names.push_back("x" + std::to_string(k));
                for (int k = 1; k <= m; ++k) names.push_back("y" + std::to_string(k));
                out << to_text_named(f, names) << "\n";
            } else {
                out << (json_mode ? to_json(f) : to_text(f)) << "\n";
            }
            return 0;
        }

        if (polytope->parsed()) {
            int given = (!pt_family.empty()) + (!pt_expr.empty()) + (!pt_json.empty());
            if (given != 1) {
                err << "error: give exactly one of --family, --expr, --json\n";
                return 2;
            }
            Polynomial f(0);
            if (!pt_family.empty()) {
                auto kind = pt_family.substr(0, pt_family.find(':'));
                if (is_unsupported_family(kind)) {
                    err << "error: family '" << kind << "' is out of scope\n";
                    return 3;
                }
                f = polynomial_from_family_spec(pt_family, global.vars, Rational(0),
                                                Rational(0), false);
            } else if (!pt_expr.empty()) {
                f = parse_polynomial(pt_expr);
            } else {
                f = polynomial_from_json(pt_json);
            }
            if (pt_sub == "snp") {
                auto r = is_snp(f);
                if (r.snp) {
                    if (json_mode) out << Json{{"snp", true}}.dump() << "\n";
                    else out << "SNP\n";
                    return 0;
                }
                if (json_mode) {
                    Json j;
                    j["snp"] = false;
                    j["witness"] = *r.witness;
                    out << j.dump() << "\n";
                } else {
                    out << "not SNP: witness " << Json(*r.witness).dump() << "\n";
                }
                return 1;
            }
            auto P = newton_polytope(f);
            if (pt_sub == "vertices") {
                auto v = vertices(P);
                out << (json_mode ? points_to_json(v).dump() + "\n" : points_to_text(v));
                return 0;
            }
            if (pt_sub == "lattice-points") {
                auto pts = lattice_points(P);
                out << (json_mode ? points_to_json(pts).dump() + "\n" : points_to_text(pts));
                return 0;
            }
            if (pt_sub == "ehrhart") {
                auto L = ehrhart(P);
                if (json_mode) {
                    Json j = Json::array();
                    for (const auto& c : L) j.push_back(rational_to_string(c));
                    out << j.dump() << "\n";
                } else {
                    out << ehrhart_to_string(L) << "\n";
                }
                return 0;
            }
            // contains
            if (pt_point.empty()) {
                err << "error: 'contains' needs --point\n";
                return 2;
            }
            std::vector<Rational> q;
            {
                std::stringstream ss(pt_point);
                std::string tok;
                while (std::getline(ss, tok, ',')) q.push_back(rational_from_string(tok));
            }
            bool inside = contains_point(P, q);
            if (json_mode) out << Json{{"contains", inside}}.dump() << "\n";
            else out << (inside ? "inside" : "outside") << "\n";
            return inside ? 0 : 1;
        }

        if (schub->parsed()) {
            Diagram D = diagram_from_flags(sc_rothe, sc_skyline, sc_cells);
            if (sc_sub == "ineqs" || sc_sub == "minimize") {
                auto sys = sc_sub == "ineqs" ? schubitope_inequalities(D)
                                             : minimize_inequalities(D);
                out << (json_mode ? sys.to_json() + "\n" : system_to_text(sys, D.n));
                return 0;
            }
            if (sc_sub == "lattice-points") {
                auto pts = schubitope_lattice_points(D);
                out << (json_mode ? points_to_json(pts).dump() + "\n" : points_to_text(pts));
                return 0;
            }
            if (sc_sub == "ehrhart") {
                auto L = schubitope_ehrhart(D);
                if (json_mode) {
                    Json j = Json::array();
                    for (const auto& c : L) j.push_back(rational_to_string(c));
                    out << j.dump() << "\n";
                } else {
                    out << ehrhart_to_string(L) << "\n";
                }
                return 0;
            }
            // kohnert
            auto K = kohnert_polynomial(D);
            out << (json_mode ? to_json(K) : to_text(K)) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            spec.vars = global.vars;
            spec.seed = global.seed;
            spec.jobs = global.jobs;
            auto report = run_sweep(spec);
            if (json_mode) {
                out << report.to_json().dump() << "\n";
            } else {
                out << report.target << ": " << report.passes << "/" << report.instances
                    << " passed";
                if (report.truncated) out << " (truncated)";
                out << "\n";
                for (const auto& f : report.failures)
                    out << "  FAIL " << f.instance.dump() << " witness " << f.witness.dump()
                        << "\n";
            }
            return report.all_passed() ? 0 : 1;
        }

        if (poset->parsed()) {
            auto snap = dominance_poset(po_len, po_n);
            out << (po_dot ? snap.to_dot() : snap.to_json().dump() + "\n");
            return 0;
        }

        if (cache->parsed()) {
            auto& c = PolyCache::instance();
            if (cache_op == "info") {
                Json j;
                j["enabled"] = c.enabled();
                j["directory"] = c.directory();
                j["entries"] = c.entry_count();
                j["version"] = PolyCache::code_version();
                out << j.dump() << "\n";
                return 0;
            }
            auto removed = c.clear();
            out << "removed " << removed << " entries\n";
            return 0;
        }
    } catch (const UnsupportedError& ex) {
        err << "error: " << ex.what() << "\n";
        return 3;
    } catch (const ResourceCapError& ex) {
        err << "error: " << ex.what() << "\n";
        return 4;
    } catch (const DomainError& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace snp
