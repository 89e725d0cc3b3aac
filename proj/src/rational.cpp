#include "snp/rational.hpp"

#include "snp/errors.hpp"

namespace snp {

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw DomainError("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

long rational_to_long(const Rational& r) {
    if (!is_integer(r)) throw DomainError("rational is not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw DomainError("integer out of range: " + r.get_str());
    return r.get_num().get_si();
}

} // namespace snp
