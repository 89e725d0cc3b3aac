#pragma once

#include <set>
#include <string>
#include <vector>

#include "snp/errors.hpp"

namespace snp {

// Weakly decreasing positive parts; trailing zeros implicit.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;               // |lambda|
    int length() const { return static_cast<int>(parts.size()); } // number of nonzero parts
    int part(int i) const;          // 1-based, 0 beyond length
    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string str() const;
};

// Finite sequence of nonnegative integers; length explicit.
struct Composition {
    std::vector<int> entries;

    Composition() = default;
    explicit Composition(std::vector<int> e);

    int size() const;
    int length() const { return static_cast<int>(entries.size()); }
    bool is_weakly_decreasing() const;
    Partition sorted_partition() const;    // lambda(alpha)
    Composition stripped() const;          // remove zero parts (alpha^+)
    Composition padded(int len) const;     // zero-pad to len
    int zero_count() const;

    bool operator==(const Composition& o) const { return entries == o.entries; }
    bool operator!=(const Composition& o) const { return entries != o.entries; }
    bool operator<(const Composition& o) const { return entries < o.entries; }
    std::string str() const;
};

// One-line notation word, a rearrangement of 1..n.
class Permutation {
public:
    Permutation() : word_{1} {}
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation from_lehmer_code(const std::vector<int>& code);
    // n <= 9: digit string "21543"; otherwise comma-separated.
    static Permutation parse(const std::string& s);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; } // 1-based
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    int length() const; // inversion count
    bool is_identity() const;

    // (u*v)(i) = u(v(i)).
    friend Permutation compose(const Permutation& u, const Permutation& v);

    Permutation right_multiply_simple(int i) const;  // w s_i: swap word positions i, i+1
    bool has_ascent_at(int i) const { return word_[i - 1] < word_[i]; }
    int first_ascent() const;  // 0 if none (longest element)
    int last_descent() const;  // 0 if none (identity)

    Permutation extended(int n) const;       // iota-embed by appending fixed points
    Permutation trimmed() const;             // drop trailing fixed points (size >= 1)
    int support_size() const;                // last index moved (0 for identity)

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator!=(const Permutation& o) const { return word_ != o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }
    std::string str() const;

private:
    std::vector<int> word_;
};

struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // 1-based, no loops

    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<std::pair<int, int>> e);
};

// Dominance order on partitions of equal size (sizes must match).
bool dominance_leq(const Partition& mu, const Partition& lambda);

Partition conjugate(const Partition& lambda);

// All partitions of d, ordered descending-lex ((d) first).
std::vector<Partition> partitions_of(int d);

// Lehmer code c_i = #{j > i : w(j) < w(i)}.
Composition lehmer_code(const Permutation& w);

// Strong Bruhat order via the rank-matrix criterion (polynomial time).
bool bruhat_leq(const Permutation& u, const Permutation& v);

// All reduced words of w, each a sequence of simple-transposition indices.
std::set<std::vector<int>> reduced_words(const Permutation& w);
long reduced_word_count(const Permutation& w);

// Shortest w sending lambda(gamma) to gamma by position permutation:
// gamma_{w(i)} = lambda_i.
Permutation sorting_permutation(const Composition& gamma);

// gamma <= alpha iff lambda(gamma) = lambda(alpha) and w(gamma) <= w(alpha)
// in Bruhat order; compositions are zero-padded to common length.
bool composition_preceq(const Composition& gamma, const Composition& alpha);

// All beta <=_S alpha (closure of the two covering moves), including alpha.
std::vector<Composition> order_s_downset(const Composition& alpha);

// All beta <_kappa alpha, excluding alpha.
std::vector<Composition> order_kappa_downset(const Composition& alpha);

// Number of SSYT of shape lambda and content mu, by backtracking.
long kostka(const Partition& lambda, const Composition& mu);

// True iff lambda(beta) <=_D lambda(alpha)' (Gale-Ryser).
bool gale_ryser_pair(const Composition& alpha, const Composition& beta);

// Exact count of 0-1 matrices with row sums alpha, column sums beta.
long count_01_matrices(const Composition& alpha, const Composition& beta);

// Enumeration helpers shared by families/verify.
std::vector<Composition> compositions_of(int d, int length);                  // parts >= 0
std::vector<Composition> compositions_of_bounded(int d, const std::vector<int>& caps);

// Distinct rearrangements of lambda padded to n coordinates (empty if
// length(lambda) > n).
std::vector<std::vector<int>> rearrangements(const Partition& lambda, int n);

// All permutations of S_n in lex order of one-line words.
std::vector<Permutation> symmetric_group(int n);

} // namespace snp
