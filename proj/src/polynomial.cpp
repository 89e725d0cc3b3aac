#include "snp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace snp {

int total_degree(const Exponents& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

bool graded_lex_less(const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

OperatorKind operator_kind_from_string(const std::string& s) {
    if (s == "partial") return OperatorKind::partial;
    if (s == "pi") return OperatorKind::pi;
    if (s == "pi-hat" || s == "pi_hat") return OperatorKind::pi_hat;
    if (s == "pi-bar" || s == "pi_bar") return OperatorKind::pi_bar;
    if (s == "tau") return OperatorKind::tau;
    if (s == "tau-hat" || s == "tau_hat") return OperatorKind::tau_hat;
    throw DomainError("unknown operator kind: " + s);
}

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw DomainError("negative variable count");
}

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
    Polynomial f(num_vars);
    if (!snp::is_zero(c)) f.terms_.emplace(Exponents(num_vars, 0), c);
    return f;
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
    Polynomial f(static_cast<int>(e.size()));
    for (int v : e)
        if (v < 0) throw DomainError("negative exponent");
    if (!snp::is_zero(c)) f.terms_.emplace(e, c);
    return f;
}

Polynomial Polynomial::variable(int i, int num_vars) {
    if (i < 1 || i > num_vars) throw DomainError("variable index out of range");
    Exponents e(num_vars, 0);
    e[i - 1] = 1;
    return monomial(e);
}

Rational Polynomial::coefficient(const Exponents& e) const {
    if (static_cast<int>(e.size()) != num_vars_)
        throw DomainError("exponent length does not match variable count");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != num_vars_)
        throw DomainError("exponent length does not match variable count");
    if (snp::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (snp::is_zero(it->second)) terms_.erase(it);
    }
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool Polynomial::is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
        int de = total_degree(e);
        if (d == -2) d = de;
        else if (d != de) return false;
    }
    return true;
}

Exponents Polynomial::leading_exponent() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    const Exponents* best = nullptr;
    for (const auto& [e, c] : terms_)
        if (!best || graded_lex_less(*best, e)) best = &e;
    return *best;
}

std::vector<Exponents> Polynomial::support() const {
    std::vector<Exponents> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

std::vector<Exponents> Polynomial::support_sorted() const {
    auto s = support();
    std::sort(s.begin(), s.end(), graded_lex_less);
    return s;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (num_vars_ != o.num_vars_ || terms_.size() != o.terms_.size()) return false;
    for (const auto& [e, c] : terms_) {
        auto it = o.terms_.find(e);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (num_vars_ != o.num_vars_) throw DomainError("variable-count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (num_vars_ != o.num_vars_) throw DomainError("variable-count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (snp::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
    Polynomial r = f;
    r += g;
    return r;
}

Polynomial subtract(const Polynomial& f, const Polynomial& g) {
    Polynomial r = f;
    r -= g;
    return r;
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) {
    if (f.num_vars() != g.num_vars()) throw DomainError("variable-count mismatch");
    Polynomial r(f.num_vars());
    const bool f_smaller = f.term_count() <= g.term_count();
    const Polynomial& a = f_smaller ? f : g;
    const Polynomial& b = f_smaller ? g : f;
    Exponents e(f.num_vars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int k = 0; k < f.num_vars(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
    Polynomial r = f;
    r *= c;
    return r;
}

Polynomial permute_variables(const std::vector<int>& w, const Polynomial& f) {
    const int n = f.num_vars();
    if (static_cast<int>(w.size()) != n) throw DomainError("permutation size mismatch");
    Polynomial r(n);
    Exponents e(n);
    for (const auto& [ef, c] : f.terms()) {
        for (int i = 0; i < n; ++i) e[w[i] - 1] = ef[i];
        r.add_term(e, c);
    }
    return r;
}

Polynomial swap_adjacent_variables(int i, const Polynomial& f) {
    const int n = f.num_vars();
    if (i < 1 || i >= n) throw DomainError("swap index out of range");
    Polynomial r(n);
    Exponents e(n);
    for (const auto& [ef, c] : f.terms()) {
        e = ef;
        std::swap(e[i - 1], e[i]);
        r.add_term(e, c);
    }
    return r;
}

Polynomial specialize(const Polynomial& f, const std::map<int, Rational>& assignment) {
    const int n = f.num_vars();
    for (const auto& [i, v] : assignment)
        if (i < 1 || i > n) throw DomainError("specialize index out of range");
    std::vector<int> keep;
    for (int i = 1; i <= n; ++i)
        if (!assignment.count(i)) keep.push_back(i);
    Polynomial r(static_cast<int>(keep.size()));
    Exponents e(keep.size());
    for (const auto& [ef, c] : f.terms()) {
        Rational coeff = c;
        bool dead = false;
        for (const auto& [i, v] : assignment) {
            int a = ef[i - 1];
            if (a == 0) continue;
            if (snp::is_zero(v)) {
                dead = true;
                break;
            }
            Rational p = v;
            for (int k = 1; k < a; ++k) p *= v;
            coeff *= p;
        }
        if (dead) continue;
        for (std::size_t k = 0; k < keep.size(); ++k) e[k] = ef[keep[k] - 1];
        r.add_term(e, coeff);
    }
    return r;
}

namespace {

// Synthetic division of g by (x_i - x_{i+1}), i 1-based.  Walks the x_i
// degree from the top using q_{a-1} = g_a + x_{i+1} * q_a; the remainder
// g_0 + x_{i+1} * q_0 must vanish.
Polynomial divide_by_adjacent_difference(const Polynomial& g, int i) {
    const int n = g.num_vars();
    const int xi = i - 1, xj = i; // 0-based
    int top = 0;
    for (const auto& [e, c] : g.terms()) top = std::max(top, e[xi]);

    // layer a = terms of g with x_i-exponent a, that exponent dropped to 0
    std::vector<Polynomial> layer(top + 1, Polynomial(n));
    for (const auto& [e, c] : g.terms()) {
        Exponents base = e;
        int a = base[xi];
        base[xi] = 0;
        layer[a].add_term(base, c);
    }

    auto shift_xj = [&](const Polynomial& p) {
        Polynomial r(n);
        for (const auto& [e, c] : p.terms()) {
            Exponents e2 = e;
            e2[xj] += 1;
            r.add_term(e2, c);
        }
        return r;
    };

    Polynomial result(n);
    Polynomial q = Polynomial::zero(n);
    for (int a = top; a >= 1; --a) {
        q = layer[a] + shift_xj(q); // quotient coefficient of x_i^(a-1)
        for (const auto& [e, c] : q.terms()) {
            Exponents e2 = e;
            e2[xi] += a - 1;
            result.add_term(e2, c);
        }
    }
    Polynomial remainder = layer[0] + shift_xj(q);
    if (!remainder.is_zero())
        throw InternalError("divided-difference division left a remainder");
    return result;
}

} // namespace

Polynomial apply_operator(OperatorKind kind, int i, const Polynomial& f) {
    const int n = f.num_vars();
    if (i < 1 || i >= n) throw DomainError("operator index out of range");
    auto partial = [&](const Polynomial& g) {
        return divide_by_adjacent_difference(g - swap_adjacent_variables(i, g), i);
    };
    auto times_xi = [&](const Polynomial& g) { return Polynomial::variable(i, n) * g; };
    auto times_one_minus_xi1 = [&](const Polynomial& g) {
        return g - Polynomial::variable(i + 1, n) * g;
    };
    switch (kind) {
        case OperatorKind::partial: return partial(f);
        case OperatorKind::pi: return partial(times_xi(f));
        case OperatorKind::pi_hat: return partial(times_xi(f)) - f;
        case OperatorKind::pi_bar: return partial(times_one_minus_xi1(f));
        case OperatorKind::tau: return partial(times_xi(times_one_minus_xi1(f)));
        case OperatorKind::tau_hat: return partial(times_xi(times_one_minus_xi1(f))) - f;
    }
    throw InternalError("unreachable operator kind");
}

Polynomial truncate_to_vars(const Polynomial& f, int n) {
    if (n < 0 || n > f.num_vars()) throw DomainError("truncate length out of range");
    Polynomial r(n);
    for (const auto& [e, c] : f.terms()) {
        bool keep = true;
        for (int k = n; k < f.num_vars(); ++k)
            if (e[k] != 0) {
                keep = false;
                break;
            }
        if (keep) r.add_term(Exponents(e.begin(), e.begin() + n), c);
    }
    return r;
}

Polynomial trim_trailing_vars(const Polynomial& f, int min_vars) {
    int used = min_vars;
    for (const auto& [e, c] : f.terms())
        for (int k = f.num_vars() - 1; k >= used; --k)
            if (e[k] != 0) {
                used = k + 1;
                break;
            }
    return truncate_to_vars(f, used);
}

Polynomial pad_vars(const Polynomial& f, int n) {
    if (n < f.num_vars()) throw DomainError("pad length smaller than variable count");
    Polynomial r(n);
    for (const auto& [e, c] : f.terms()) {
        Exponents e2 = e;
        e2.resize(n, 0);
        r.add_term(e2, c);
    }
    return r;
}

bool is_symmetric_in_adjacent(const Polynomial& f, int i) {
    for (const auto& [e, c] : f.terms()) {
        Exponents e2 = e;
        std::swap(e2[i - 1], e2[i]);
        auto it = f.terms().find(e2);
        if (it == f.terms().end() || it->second != c) return false;
    }
    return true;
}

bool is_symmetric(const Polynomial& f) {
    for (int i = 1; i < f.num_vars(); ++i)
        if (!is_symmetric_in_adjacent(f, i)) return false;
    return true;
}

std::string to_text_named(const Polynomial& f, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != f.num_vars())
        throw DomainError("variable name count mismatch");
    if (f.is_zero()) return "0";
    auto sup = f.support_sorted();
    std::reverse(sup.begin(), sup.end()); // graded-lex descending
    std::ostringstream out;
    bool first = true;
    for (const auto& e : sup) {
        Rational c = f.coefficient(e);
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string vars;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[k];
            if (e[k] > 1) vars += "^" + std::to_string(e[k]);
        }
        if (vars.empty()) {
            out << rational_to_string(a);
        } else {
            if (a != 1) out << rational_to_string(a) << "*";
            out << vars;
        }
    }
    return out.str();
}

std::string to_text(const Polynomial& f) {
    std::vector<std::string> names;
    for (int k = 1; k <= f.num_vars(); ++k) names.push_back("x" + std::to_string(k));
    return to_text_named(f, names);
}

std::string to_json(const Polynomial& f) {
    nlohmann::ordered_json j;
    j["vars"] = f.num_vars();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& e : f.support_sorted()) {
        nlohmann::ordered_json t;
        t["coeff"] = rational_to_string(f.coefficient(e));
        t["exp"] = e;
        j["terms"].push_back(t);
    }
    return j.dump();
}

Polynomial polynomial_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("bad polynomial JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw DomainError("polynomial JSON needs \"vars\" and \"terms\"");
    Polynomial f(j["vars"].get<int>());
    for (const auto& t : j["terms"]) {
        Exponents e = t["exp"].get<Exponents>();
        f.add_term(e, rational_from_string(t["coeff"].get<std::string>()));
    }
    return f;
}

namespace {

// Recursive-descent parser for the CLI expression language.
struct ExprParser {
    std::string s;
    std::size_t pos = 0;
    int max_x = 0, max_y = 0;
    bool scanning; // first pass only records variable indices

    explicit ExprParser(std::string text, bool scan)
        : s(std::move(text)), scanning(scan) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    int num_vars() const { return max_x + max_y; }

    long parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw DomainError("expected integer at position " + std::to_string(pos));
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000000L) throw DomainError("integer literal too large");
            ++pos;
        }
        return v;
    }

    Polynomial parse_expr(int n) {
        Polynomial acc = parse_term(n);
        for (;;) {
            if (eat('+')) acc += parse_term(n);
            else if (eat('-')) acc -= parse_term(n);
            else return acc;
        }
    }

    Polynomial parse_term(int n) {
        Polynomial acc = parse_factor(n);
        while (eat('*')) acc = acc * parse_factor(n);
        return acc;
    }

    Polynomial parse_factor(int n) {
        Polynomial base = parse_atom(n);
        if (eat('^')) {
            long e = parse_uint();
            Polynomial r = Polynomial::constant(n, 1);
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial parse_atom(int n) {
        skip_ws();
        if (eat('(')) {
            Polynomial inner = parse_expr(n);
            if (!eat(')')) throw DomainError("missing ')' in expression");
            return inner;
        }
        if (eat('-')) return -parse_factor(n); // binds looser than '^'
        char c = peek();
        if (c == 'x' || c == 'y') {
            ++pos;
            long idx = parse_uint();
            if (idx < 1) throw DomainError("variable index must be positive");
            if (c == 'x') {
                max_x = std::max(max_x, static_cast<int>(idx));
                return scanning ? Polynomial::constant(n, 1)
                                : Polynomial::variable(static_cast<int>(idx), n);
            }
            max_y = std::max(max_y, static_cast<int>(idx));
            return scanning ? Polynomial::constant(n, 1)
                            : Polynomial::variable(max_x + static_cast<int>(idx), n);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_uint();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                long den = parse_uint();
                if (den == 0) throw DomainError("zero denominator");
                return Polynomial::constant(n, Rational(num, den));
            }
            return Polynomial::constant(n, Rational(num));
        }
        throw DomainError("unexpected character in expression: " + std::string(1, c));
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& expr) {
    ExprParser scan(expr, true);
    scan.parse_expr(0);
    scan.skip_ws();
    if (scan.pos != scan.s.size()) throw DomainError("trailing junk in expression");
    int nx = scan.max_x;
    ExprParser p(expr, false);
    p.max_x = nx; // fixes the y-block offset
    Polynomial f = p.parse_expr(scan.num_vars());
    p.skip_ws();
    if (p.pos != p.s.size()) throw DomainError("trailing junk in expression");
    return f;
}

} // namespace snp
