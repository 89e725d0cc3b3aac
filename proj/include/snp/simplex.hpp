#pragma once

#include <vector>

#include "snp/rational.hpp"

namespace snp {

// Exact rational simplex, Bland's rule throughout (anti-cycling).

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Rational value;               // objective at optimum
    std::vector<Rational> x;      // primal solution (structural variables)
};

enum class Rel { LE, EQ };

// maximize c.x  subject to  A x (rel) b, x >= 0.
LpResult solve_lp(const std::vector<std::vector<Rational>>& A,
                  const std::vector<Rational>& b,
                  const std::vector<Rational>& c,
                  const std::vector<Rel>& rel);

// Phase-one feasibility specialized to convex-hull membership:
// exists lambda >= 0 with sum lambda_i = 1 and sum lambda_i g_i = point?
bool in_convex_hull(const std::vector<std::vector<int>>& generators,
                    const std::vector<Rational>& point);

} // namespace snp
