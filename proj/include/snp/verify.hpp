#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "snp/combinatorics.hpp"
#include "snp/families.hpp"
#include "snp/polytope.hpp"
#include "snp/schubitope.hpp"

namespace snp {

using Json = nlohmann::ordered_json;

struct SweepSpec {
    std::string target;
    int sn = 4;           // symmetric-group range
    int max_size = 5;     // |alpha| / |lambda| bound
    int vars = 0;         // variable count (0 = target default)
    int max_zeros = 2;    // zero parts allowed in composition sweeps
    int samples = 5;      // (q,t) sample count for macdonald_generic
    int random_count = 0; // extra random diagrams for ehrhart_positive
    int grid = 5;         // random-diagram grid size
    unsigned seed = 12345;
    int jobs = 0;         // 0 = library default
    int subset_cap = 12;
    bool use_cache = true;
    // resource caps: ranges beyond these are clamped and the report is
    // flagged as truncated
    int cap_sn = 8;
    int cap_size = 9;
};

struct SweepFailure {
    Json instance;
    Json witness;
};

struct ConjectureReport {
    std::string target;
    Json params;
    long instances = 0;
    long passes = 0;
    std::vector<SweepFailure> failures;
    Json fingerprint;
    double seconds = 0.0;
    bool truncated = false;

    bool all_passed() const { return failures.empty() && !truncated; }
    Json to_json() const;
};

// Supported sweep identifiers (CLI spelling).
const std::vector<std::string>& sweep_targets();

ConjectureReport run_sweep(const SweepSpec& spec);

struct PosetSnapshot {
    int ell = 0;
    int n = 0;
    std::vector<Permutation> elements;            // sorted one-line words
    std::vector<std::pair<int, int>> relation;    // strict pairs (u < v) by index
    std::vector<std::pair<int, int>> hasse;       // covering pairs by index

    bool leq(int i, int j) const; // reflexive
    Json to_json() const;
    std::string to_dot() const;
};

// All length-ell permutations in S_n ordered by Newton-polytope containment
// of their Schubert polynomials (padded to a common ambient dimension).
PosetSnapshot dominance_poset(int ell, int n);

struct UpperBoundWitness {
    Permutation w;  // the verified upper bound
    int shift = 0;  // leading fixed points prepended to s1 s3 ... s_{2l-1}
};

// Upper bound for u, v in the dominance order, built from the zig-zag
// element and verified by polytope containment; throws on length mismatch
// and reports loudly (InternalError) if verification fails below the cap.
UpperBoundWitness upper_bound_witness(const Permutation& u, const Permutation& v);

} // namespace snp
