#include "snp/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace snp {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts[i - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= (parts.empty() ? 0 : parts[0]); ++j) {
        int count = 0;
        for (int p : parts)
            if (p >= j) ++count;
        c.push_back(count);
    }
    return Partition(std::move(c));
}

std::string Partition::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
    out << ")";
    return out.str();
}

Composition::Composition(std::vector<int> e) : entries(std::move(e)) {
    for (int v : entries)
        if (v < 0) throw DomainError("composition entries must be nonnegative");
}

int Composition::size() const { return std::accumulate(entries.begin(), entries.end(), 0); }

bool Composition::is_weakly_decreasing() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i] > entries[i - 1]) return false;
    return true;
}

Partition Composition::sorted_partition() const {
    std::vector<int> v = entries;
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
}

Composition Composition::stripped() const {
    std::vector<int> v;
    for (int e : entries)
        if (e > 0) v.push_back(e);
    return Composition(std::move(v));
}

Composition Composition::padded(int len) const {
    if (len < length()) throw DomainError("pad length smaller than composition length");
    std::vector<int> v = entries;
    v.resize(len, 0);
    return Composition(std::move(v));
}

int Composition::zero_count() const {
    return static_cast<int>(std::count(entries.begin(), entries.end(), 0));
}

std::string Composition::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? "," : "") << entries[i];
    out << ")";
    return out.str();
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0) throw DomainError("empty permutation word");
    std::vector<bool> seen(n + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[v]) throw DomainError("not a permutation word");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw DomainError("permutation size must be positive");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::from_lehmer_code(const std::vector<int>& code) {
    const int n = static_cast<int>(code.size());
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    for (int i = 0; i < n; ++i) {
        int c = code[i];
        if (c < 0 || c >= static_cast<int>(pool.size()))
            throw DomainError("invalid Lehmer code entry");
        w.push_back(pool[c]);
        pool.erase(pool.begin() + c);
    }
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> w;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw DomainError("bad permutation: " + s);
            w.push_back(std::stoi(tok));
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw DomainError("bad permutation: " + s);
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j)
            if (word_[i] > word_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw DomainError("permutation size mismatch");
    std::vector<int> w(u.size());
    for (int i = 1; i <= u.size(); ++i) w[i - 1] = u(v(i));
    return Permutation(std::move(w));
}

Permutation Permutation::right_multiply_simple(int i) const {
    if (i < 1 || i >= size()) throw DomainError("simple-transposition index out of range");
    std::vector<int> w = word_;
    std::swap(w[i - 1], w[i]);
    return Permutation(std::move(w));
}

int Permutation::first_ascent() const {
    for (int i = 1; i < size(); ++i)
        if (word_[i - 1] < word_[i]) return i;
    return 0;
}

int Permutation::last_descent() const {
    for (int i = size() - 1; i >= 1; --i)
        if (word_[i - 1] > word_[i]) return i;
    return 0;
}

Permutation Permutation::extended(int n) const {
    if (n < size()) throw DomainError("cannot extend permutation to smaller size");
    std::vector<int> w = word_;
    for (int v = size() + 1; v <= n; ++v) w.push_back(v);
    return Permutation(std::move(w));
}

Permutation Permutation::trimmed() const {
    int n = size();
    while (n > 1 && word_[n - 1] == n) --n;
    return Permutation(std::vector<int>(word_.begin(), word_.begin() + n));
}

int Permutation::support_size() const {
    for (int i = size(); i >= 1; --i)
        if (word_[i - 1] != i) return i;
    return 0;
}

std::string Permutation::str() const {
    bool digits = size() <= 9;
    std::ostringstream out;
    for (int i = 0; i < size(); ++i) {
        if (!digits && i) out << ",";
        out << word_[i];
    }
    return out.str();
}

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> e)
    : vertex_count(n), edges(std::move(e)) {
    for (auto& [a, b] : edges) {
        if (a < 1 || b < 1 || a > n || b > n) throw DomainError("graph edge out of range");
        if (a == b) throw DomainError("graph loops not allowed");
        if (a > b) std::swap(a, b);
    }
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw DomainError("dominance comparison requires equal sizes");
    int k = std::max(mu.length(), lambda.length());
    int smu = 0, slambda = 0;
    for (int i = 1; i <= k; ++i) {
        smu += mu.part(i);
        slambda += lambda.part(i);
        if (smu > slambda) return false;
    }
    return true;
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw DomainError("negative partition size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

Composition lehmer_code(const Permutation& w) {
    std::vector<int> code(w.size(), 0);
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(j) < w(i)) ++code[i - 1];
    return Composition(std::move(code));
}

bool bruhat_leq(const Permutation& u0, const Permutation& v0) {
    int n = std::max(u0.size(), v0.size());
    Permutation u = u0.extended(n), v = v0.extended(n);
    // u <= v iff #{k <= i : u(k) <= j} >= #{k <= i : v(k) <= j} for all i, j
    std::vector<int> ru(n + 1, 0), rv(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = u(i); j <= n; ++j) ++ru[j];
        for (int j = v(i); j <= n; ++j) ++rv[j];
        for (int j = 1; j <= n; ++j)
            if (ru[j] < rv[j]) return false;
    }
    return true;
}

std::set<std::vector<int>> reduced_words(const Permutation& w) {
    std::set<std::vector<int>> out;
    if (w.length() == 0) {
        out.insert(std::vector<int>{});
        return out;
    }
    for (int i = 1; i < w.size(); ++i) {
        if (w(i) > w(i + 1)) { // descent: w s_i is shorter
            for (auto word : reduced_words(w.right_multiply_simple(i))) {
                word.push_back(i);
                out.insert(std::move(word));
            }
        }
    }
    return out;
}

long reduced_word_count(const Permutation& w) {
    // memoized count; the full set is only needed when listing
    static std::map<std::vector<int>, long> memo;
    static std::mutex mtx;
    auto key = w.trimmed().word();
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Permutation t(key);
    long total = 0;
    if (t.length() == 0) total = 1;
    else
        for (int i = 1; i < t.size(); ++i)
            if (t(i) > t(i + 1)) total += reduced_word_count(t.right_multiply_simple(i));
    std::lock_guard<std::mutex> lk(mtx);
    memo[key] = total;
    return total;
}

Permutation sorting_permutation(const Composition& gamma) {
    const int n = std::max(1, gamma.length());
    std::vector<int> g = gamma.entries;
    g.resize(n, 0);
    std::vector<int> sorted = g;
    std::sort(sorted.rbegin(), sorted.rend());
    // positions of each value in gamma, taken in increasing order per value,
    // matched against the blocks of equal parts in lambda(gamma)
    std::vector<int> w(n, 0);
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        int value = sorted[i];
        for (int j = 0; j < n; ++j) {
            if (!used[j] && g[j] == value) {
                w[i] = j + 1;
                used[j] = true;
                break;
            }
        }
    }
    return Permutation(std::move(w));
}

bool composition_preceq(const Composition& gamma, const Composition& alpha) {
    int len = std::max(gamma.length(), alpha.length());
    len = std::max(len, 1);
    Composition g = gamma.padded(len), a = alpha.padded(len);
    if (!(g.sorted_partition() == a.sorted_partition())) return false;
    return bruhat_leq(sorting_permutation(g), sorting_permutation(a));
}

namespace {

std::vector<Composition> order_downset_closure(const Composition& alpha, bool kappa) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier{alpha.entries};
    seen.insert(alpha.entries);
    const int n = alpha.length();
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& b : frontier) {
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (b[i] < b[j]) {
                        auto t = b;
                        std::swap(t[i], t[j]);
                        if (seen.insert(t).second) next.push_back(std::move(t));
                    }
                    if (kappa) {
                        // m_ij: alpha + e_i - e_j when alpha_j - alpha_i > 1
                        if (b[j] - b[i] > 1) {
                            auto t = b;
                            ++t[i];
                            --t[j];
                            if (seen.insert(t).second) next.push_back(std::move(t));
                        }
                    } else {
                        // second <_S cover: from beta with beta_i - beta_j > 1,
                        // swap-and-step: (beta_j + 1, beta_i - 1)
                        if (b[i] - b[j] > 1) {
                            auto t = b;
                            t[i] = b[j] + 1;
                            t[j] = b[i] - 1;
                            if (seen.insert(t).second) next.push_back(std::move(t));
                        }
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Composition> out;
    out.reserve(seen.size());
    for (const auto& v : seen) out.emplace_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Composition> order_s_downset(const Composition& alpha) {
    static std::map<std::vector<int>, std::vector<Composition>> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(alpha.entries);
        if (it != memo.end()) return it->second;
    }
    auto result = order_downset_closure(alpha, false);
    std::lock_guard<std::mutex> lk(mtx);
    return memo[alpha.entries] = result;
}

std::vector<Composition> order_kappa_downset(const Composition& alpha) {
    static std::map<std::vector<int>, std::vector<Composition>> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(alpha.entries);
        if (it != memo.end()) return it->second;
    }
    auto result = order_downset_closure(alpha, true);
    std::erase(result, alpha); // the kappa downset excludes alpha itself
    std::lock_guard<std::mutex> lk(mtx);
    return memo[alpha.entries] = result;
}

namespace {

// Fill SSYT row by row; row values weakly increase, columns strictly increase.
// remaining[v] = number of copies of value v+1 still to place.
long kostka_count(const Partition& lambda, std::vector<int>& remaining) {
    const int rows = lambda.length();
    std::vector<std::vector<int>> tab(rows);
    std::function<long(int, int, int)> rec = [&](int r, int c, int minval) -> long {
        if (r == rows) return 1;
        const int rowlen = lambda.parts[r];
        if (c == rowlen) return rec(r + 1, 0, 0);
        long total = 0;
        const int nvals = static_cast<int>(remaining.size());
        for (int v = minval; v < nvals; ++v) {
            if (remaining[v] == 0) continue;
            // column strictness against the row above (always present in a partition shape)
            if (r > 0 && tab[r - 1][c] >= v + 1) continue;
            --remaining[v];
            tab[r].push_back(v + 1);
            total += rec(r, c + 1, v);
            tab[r].pop_back();
            ++remaining[v];
        }
        return total;
    };
    return rec(0, 0, 0);
}

} // namespace

long kostka(const Partition& lambda, const Composition& mu) {
    if (lambda.size() != mu.size()) throw DomainError("kostka requires |lambda| = |mu|");
    if (lambda.size() == 0) return 1;
    std::vector<int> remaining = mu.entries;
    // values with zero multiplicity are fine; rows beyond values impossible
    return kostka_count(lambda, remaining);
}

bool gale_ryser_pair(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) throw DomainError("Gale-Ryser requires equal sizes");
    return dominance_leq(beta.sorted_partition(), alpha.sorted_partition().conjugate());
}

long count_01_matrices(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) throw DomainError("matrix count requires equal sizes");
    const int m = alpha.length(), n = beta.length();
    std::vector<int> colrem = beta.entries;
    // rows in order; within a row choose columns by backtracking
    std::function<long(int)> rec_row = [&](int r) -> long {
        if (r == m) return 1;
        const int need = alpha.entries[r];
        long total = 0;
        std::vector<int> chosen;
        std::function<void(int, int, long&)> pick = [&](int start, int left, long& acc) {
            if (left == 0) {
                acc += rec_row(r + 1);
                return;
            }
            for (int c = start; c <= n - left; ++c) {
                if (colrem[c] == 0) continue;
                --colrem[c];
                pick(c + 1, left - 1, acc);
                ++colrem[c];
            }
        };
        if (need > n) return 0;
        pick(0, need, total);
        return total;
    };
    return rec_row(0);
}

std::vector<Composition> compositions_of(int d, int length) {
    std::vector<Composition> out;
    std::vector<int> cur(length, 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == length) {
            if (rest == 0) out.emplace_back(cur);
            return;
        }
        if (pos == length - 1) {
            cur[pos] = rest;
            out.emplace_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            rec(pos + 1, rest - v);
        }
        cur[pos] = 0;
    };
    if (length == 0) {
        if (d == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    rec(0, d);
    return out;
}

std::vector<Composition> compositions_of_bounded(int d, const std::vector<int>& caps) {
    std::vector<Composition> out;
    const int length = static_cast<int>(caps.size());
    std::vector<int> cur(length, 0);
    std::vector<int> suffix_cap(length + 1, 0);
    for (int i = length - 1; i >= 0; --i) suffix_cap[i] = suffix_cap[i + 1] + caps[i];
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == length) {
            if (rest == 0) out.emplace_back(cur);
            return;
        }
        if (rest > suffix_cap[pos]) return;
        for (int v = 0; v <= std::min(caps[pos], rest); ++v) {
            cur[pos] = v;
            rec(pos + 1, rest - v);
        }
        cur[pos] = 0;
    };
    rec(0, d);
    return out;
}

std::vector<std::vector<int>> rearrangements(const Partition& lambda, int n) {
    std::vector<std::vector<int>> out;
    if (lambda.length() > n) return out;
    std::vector<int> v = lambda.parts;
    v.resize(n, 0);
    std::sort(v.begin(), v.end());
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace snp
