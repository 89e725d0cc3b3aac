#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "snp/errors.hpp"
#include "snp/rational.hpp"

namespace snp {

// Exponent vector alpha = (a_1, ..., a_n), entries >= 0.
using Exponents = std::vector<int>;

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : e) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

int total_degree(const Exponents& e);

// Graded lexicographic: first by total degree, ties broken entrywise.
bool graded_lex_less(const Exponents& a, const Exponents& b);

// Divided-difference operator family.  partial = del_i, pi = pi_i,
// pi_hat = pi_i - id, pi_bar = del_i((1-x_{i+1}) .), tau = del_i(x_i(1-x_{i+1}) .),
// tau_hat = tau_i - id.
enum class OperatorKind { partial, pi, pi_hat, pi_bar, tau, tau_hat };

OperatorKind operator_kind_from_string(const std::string& s);

// Sparse multivariate polynomial over Q.  The zero polynomial keeps its
// variable count and has an empty term map; stored coefficients are nonzero.
class Polynomial {
public:
    using TermMap = std::unordered_map<Exponents, Rational, ExponentsHash>;

    explicit Polynomial(int num_vars);

    static Polynomial zero(int num_vars) { return Polynomial(num_vars); }
    static Polynomial constant(int num_vars, const Rational& c);
    static Polynomial monomial(const Exponents& e, const Rational& c = Rational(1));
    static Polynomial variable(int i, int num_vars); // x_i, 1-based

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c); // accumulates, drops zeros

    // Max total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Exponents leading_exponent() const; // graded-lex max, throws on zero
    std::vector<Exponents> support() const;
    std::vector<Exponents> support_sorted() const; // graded-lex ascending

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator-() const;
    Polynomial& operator*=(const Rational& c);

private:
    int num_vars_;
    TermMap terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial subtract(const Polynomial& f, const Polynomial& g);
Polynomial multiply(const Polynomial& f, const Polynomial& g);
inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return subtract(f, g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return multiply(f, g); }
Polynomial operator*(const Rational& c, const Polynomial& f);

// x_i |-> x_{w(i)} for a one-line permutation word of length num_vars.
Polynomial permute_variables(const std::vector<int>& w, const Polynomial& f);

// Swap variables i and i+1 (the s_i action), 1-based.
Polynomial swap_adjacent_variables(int i, const Polynomial& f);

// Substitute the given rationals; remaining variables renumbered in
// increasing order of original index.
Polynomial specialize(const Polynomial& f, const std::map<int, Rational>& assignment);

// Apply a divided-difference-type operator at position i (1 <= i < num_vars).
// The exact division by (x_i - x_{i+1}) is synthetic division in those two
// variables; a nonzero remainder throws InternalError.
Polynomial apply_operator(OperatorKind kind, int i, const Polynomial& f);

// Drop all terms that use a variable with index > n; result has n variables.
Polynomial truncate_to_vars(const Polynomial& f, int n);

// Shrink num_vars to the highest index actually used (at least min_vars).
Polynomial trim_trailing_vars(const Polynomial& f, int min_vars = 1);

// Extend with unused trailing variables up to n.
Polynomial pad_vars(const Polynomial& f, int n);

bool is_symmetric(const Polynomial& f);
// Symmetric in x_i, x_{i+1} only.
bool is_symmetric_in_adjacent(const Polynomial& f, int i);

// Canonical text: signed sum of terms "c*x1^a1*..." in graded-lex descending
// order; rationals as p/q.
std::string to_text(const Polynomial& f);

// Same format with caller-supplied variable names (one per variable); used by
// the CLI to print two-alphabet families with their y-block spelled out.
std::string to_text_named(const Polynomial& f, const std::vector<std::string>& names);

// Canonical JSON: {"vars": n, "terms":[{"coeff":"p/q","exp":[...]},...]},
// terms in graded-lex ascending order.  Bit-exact round-trip.
std::string to_json(const Polynomial& f);
Polynomial polynomial_from_json(const std::string& json_text);

// Expression parser for the CLI: + - * ^, integer/rational literals,
// variables x<i> and y<i> (the y-block is mapped after the x-block).
Polynomial parse_polynomial(const std::string& expr);

} // namespace snp
