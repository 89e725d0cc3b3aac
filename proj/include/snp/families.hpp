#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snp/combinatorics.hpp"
#include "snp/polynomial.hpp"

namespace snp {

// The orthogonality system for a Macdonald polynomial is singular at this
// (q0, t0): the point is non-generic and the caller may retry another one.
class NonGenericPointError : public std::runtime_error {
public:
    explicit NonGenericPointError(const std::string& what) : std::runtime_error(what) {}
};

enum class ClassicalBasisKind { monomial, schur, elementary, homogeneous, power, forgotten };
enum class DemazureFamilyKind { key, atom, lascoux_atom, grothendieck_key };
enum class SchubertFamilyKind { schubert, grothendieck, double_schubert };
enum class QsymKind { monomial_qsym, fundamental_qsym, quasi_schur };

ClassicalBasisKind classical_basis_kind_from_string(const std::string& s);

// The named basis element in n variables (zero polynomial when it vanishes).
Polynomial classical_basis(ClassicalBasisKind kind, const Partition& lambda, int n);

// Weight generating series of skew SSYT of shape lambda/mu with entries <= n.
Polynomial skew_schur(const Partition& lambda, const Partition& mu, int n);

// Key / atom / Lascoux-atom / Omega polynomials by the Demazure recursion;
// the result lives in length(alpha) variables.  The recursion always uses the
// smallest ascent (well-definedness is property-tested, not assumed).
Polynomial demazure_family(DemazureFamilyKind kind, const Composition& alpha);

// Schubert-type polynomials by divided-difference descent from the staircase
// monomial of the smallest symmetric group containing the support of w.
// schubert/grothendieck results are trimmed to their last used variable;
// double_schubert keeps the fixed 2m-variable x-then-y block layout.
Polynomial schubert_family(SchubertFamilyKind kind, const Permutation& w);

struct StanleyResult {
    Polynomial poly;      // F_w truncated to n variables
    int stabilized_at;    // smallest t with the t and t+1 truncations equal
    StanleyResult() : poly(0), stabilized_at(0) {}
};

// Stable-limit evaluation: Schubert polynomials of 1^t x w restricted to
// x_1..x_n for increasing t until two consecutive truncations coincide.
StanleyResult stanley_symmetric(const Permutation& w, int n);

// Quasisymmetric bases; alpha must have strictly positive parts for the
// monomial and fundamental kinds.
Polynomial qsym_basis(QsymKind kind, const Composition& alpha, int n);

enum class ProductFamilyKind {
    resultant_support,    // prod (x_i - y_j), m x n
    vandermonde_power,    // a_{delta_n}^k
    discriminant,         // a_{delta_n}^2
    q_discriminant_neg1,  // prod_{i<j} (x_i + x_j)
    binary_matrix_series, // prod (1 + x_i y_j), m x n
};

struct ProductParams {
    int n = 0; // x-alphabet size
    int m = 0; // second alphabet size (two-alphabet kinds)
    int k = 1; // power (vandermonde_power)
};

Polynomial product_family(ProductFamilyKind kind, const ProductParams& params);

// Cycle index of the subgroup generated by the given permutations, as a
// polynomial in n_vars variables; group closure capped.
Polynomial cycle_index(const std::vector<Permutation>& generators, int n_vars,
                       std::size_t group_cap = 200000);

// Stembridge's F_M for a nonnegative square matrix.
Polynomial tnn_polynomial(const std::vector<std::vector<Rational>>& M, int n_vars);

// Reutenauer's q_lambda (needs n >= |lambda|).
Polynomial reutenauer_q(const Partition& lambda, int n);

// Stanley's chromatic symmetric polynomial in n variables.
Polynomial chromatic_symmetric(const SimpleGraph& G, int n);

// Expansion of a symmetric polynomial in the requested classical basis.
// Requires deg(f) <= num_vars (faithful Sym_n quotient).
std::map<Partition, Rational> expand_in_basis(const Polynomial& f, ClassicalBasisKind kind);

// Schur-expansion by leading-term elimination without the deg <= n guard.
// Indices with more rows than variables are invisible here; callers must
// certify completeness externally (the Stanley sweep does, via reduced-word
// counts).
std::map<Partition, Rational> schur_expand_unguarded(const Polynomial& f);

std::string schur_expansion_to_string(const std::map<Partition, Rational>& expansion);

Polynomial omega_involution(const Polynomial& f);

// <.,.>_{q,t} with p_lambda diagonal z_lambda(q0,t0); errors on poles.
Rational qt_inner_product(const Polynomial& f, const Polynomial& g, const Rational& q0,
                          const Rational& t0);

// Macdonald P_lambda at a rational (q0, t0) by exact triangular
// orthogonalization; throws NonGenericPointError when the Gram system is
// singular at the point.
Polynomial macdonald_P(const Partition& lambda, const Rational& q0, const Rational& t0, int n);

// Features the library deliberately rejects (LLT, modified Macdonald with
// inv/maj, Kronecker products, shifted Schur P/Q).
[[noreturn]] void reject_unsupported_family(const std::string& name);
bool is_unsupported_family(const std::string& name);

} // namespace snp
