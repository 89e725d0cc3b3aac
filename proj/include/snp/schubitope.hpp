#pragma once

#include <string>
#include <vector>

#include "snp/combinatorics.hpp"
#include "snp/polynomial.hpp"
#include "snp/polytope.hpp"

namespace snp {

// A diagram: cells (row, column), 1-indexed, rows increasing downward.
// n is the row count and the ambient dimension of the Schubitope; columns may
// exceed n (trimmed Rothe diagrams are not square), empty columns never
// change theta.
struct Diagram {
    int n = 1;
    std::vector<std::pair<int, int>> cells; // sorted, deduped

    Diagram() = default;
    Diagram(int n_, std::vector<std::pair<int, int>> cells_);

    int cell_count() const { return static_cast<int>(cells.size()); }
    bool has_cell(int r, int c) const;
    std::vector<int> row_counts() const; // length n

    bool operator==(const Diagram& o) const { return n == o.n && cells == o.cells; }
    bool operator<(const Diagram& o) const {
        return std::tie(n, cells) < std::tie(o.n, o.cells);
    }

    std::string to_json() const;
    static Diagram from_json(const std::string& text);
};

// theta^c_D(S): paired brackets plus stars in word_{c,S}(D).
int theta_column(const Diagram& D, int c, const std::vector<int>& S);
int theta(const Diagram& D, const std::vector<int>& S);

// theta over every subset of [n] indexed by bitmask (bit i-1 = row i).
std::vector<int> theta_table(const Diagram& D);

// Rothe diagram; the grid is trimmed to the last nonempty row, dropping
// coordinates that every subset bound forces to zero.
Diagram rothe_diagram(const Permutation& w);

// Left-justified rows of alpha_i boxes; grid n = max(len(alpha), max alpha_i).
Diagram skyline_diagram(const Composition& alpha);

struct SubsetInequality {
    std::vector<int> S; // increasing row indices
    long bound = 0;     // theta_D(S)

    bool operator==(const SubsetInequality& o) const { return S == o.S && bound == o.bound; }
};

struct InequalitySystem {
    int eq_sum = 0; // sum alpha_i = #D, carried separately from the subset bounds
    std::vector<SubsetInequality> ineqs;
    // set when an LP optimum met during minimization had a fractional
    // maximizer (evidence bearing on whether S_D is a lattice polytope)
    bool saw_fractional_optimum = false;

    std::string to_json() const;
};

// One inequality per nonempty proper subset of [n], ordered by cardinality
// then lexicographically.  Throws ResourceCapError past subset_cap rows.
InequalitySystem schubitope_inequalities(const Diagram& D, int subset_cap = 12);

// Reductions (theta-equal supersets; disjoint additive splits) followed by
// exact-LP elimination over the slice {sum = #D, alpha >= 0}, processed by
// decreasing cardinality then lexicographic order.
InequalitySystem minimize_inequalities(const Diagram& D, int subset_cap = 12);

std::vector<Exponents> schubitope_lattice_points(const Diagram& D, int subset_cap = 12);
std::vector<Exponents> schubitope_lattice_points_serial(const Diagram& D, int subset_cap = 12);

// Integer points of the t-dilation (every right-hand side scaled by t).
std::vector<Exponents> schubitope_dilation_points(const Diagram& D, int t, int subset_cap = 12);
long schubitope_dilation_count(const Diagram& D, int t, int subset_cap = 12);

// Ehrhart polynomial of S_D, low-to-high coefficients; asserts L(0) = 1.
std::vector<Rational> schubitope_ehrhart(const Diagram& D, int subset_cap = 12);

// Vertices of the integer hull of S_D (whether S_D can have fractional
// vertices is not settled; see minimize_inequalities' fractional flag).
std::vector<Exponents> schubitope_vertices(const Diagram& D, int subset_cap = 12);

// All diagrams reachable by Kohnert moves (including D itself).
std::vector<Diagram> kohnert_closure(const Diagram& D);

// Sum of row-count monomials over the Kohnert closure, in n variables.
Polynomial kohnert_polynomial(const Diagram& D);

} // namespace snp
