#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snp/combinatorics.hpp"
#include "snp/polynomial.hpp"
#include "snp/rational.hpp"

namespace snp {

// V-representation: integer generator points, not required to be vertices.
struct LatticePolytope {
    int dim_ambient = 0;
    std::vector<Exponents> generators; // canonical: sorted, deduped, nonempty

    LatticePolytope() = default;
    LatticePolytope(int dim, std::vector<Exponents> gens);

    std::string to_json() const;
    static LatticePolytope from_json(const std::string& text);
};

LatticePolytope newton_polytope(const Polynomial& f); // throws on zero polynomial

// The lambda-permutahedron P_lambda in R^n (convex hull of the S_n-orbit).
LatticePolytope permutahedron(const Partition& lambda, int n);

bool contains_point(const LatticePolytope& P, const std::vector<Rational>& q);
bool contains_point(const LatticePolytope& P, const Exponents& q);

// A generator subset with the same convex hull (insertion filter plus a
// cleanup pass; ends at exactly the extreme points).  Used internally to
// keep the per-point LPs small.
LatticePolytope reduce_generators(const LatticePolytope& P);

std::vector<Exponents> lattice_points(const LatticePolytope& P);
std::vector<Exponents> lattice_points_serial(const LatticePolytope& P);

std::vector<Exponents> vertices(const LatticePolytope& P);
std::vector<Exponents> vertices_serial(const LatticePolytope& P);

struct SnpResult {
    bool snp = false;
    std::optional<Exponents> witness; // a lattice point missing from the support
};

SnpResult is_snp(const Polynomial& f);

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);

bool contains_polytope(const LatticePolytope& P, const LatticePolytope& Q); // Q subseteq P
bool polytope_equal(const LatticePolytope& P, const LatticePolytope& Q);    // extensional

int dimension(const LatticePolytope& P);

LatticePolytope scale(const LatticePolytope& P, int t);

// Ehrhart polynomial coefficients, low degree to high; asserts L(0) = 1.
std::vector<Rational> ehrhart(const LatticePolytope& P);

std::string ehrhart_to_string(const std::vector<Rational>& coeffs);

// Thread count control for the parallel kernels (0 = library default).
void set_parallel_jobs(int jobs);
int parallel_jobs();

} // namespace snp
