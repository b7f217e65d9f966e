#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace skeinkit {

using Coeff = boost::multiprecision::cpp_int;

// One monomial v^v_exp * z^z_exp. Ordered by z-exponent first so that
// iteration matches the sorted-term text rendering.
struct Monomial {
    int v_exp = 0;
    int z_exp = 0;

    bool operator==(const Monomial& o) const { return v_exp == o.v_exp && z_exp == o.z_exp; }
    bool operator<(const Monomial& o) const {
        if (z_exp != o.z_exp) return z_exp < o.z_exp;
        return v_exp < o.v_exp;
    }
};

// Two-variable Laurent polynomial in v and z with exact integer coefficients.
// Zero coefficients are never stored.
class LaurentPoly2 {
public:
    LaurentPoly2() = default;

    static LaurentPoly2 zero() { return {}; }
    static LaurentPoly2 one() { return constant(1); }
    static LaurentPoly2 constant(const Coeff& c);
    static LaurentPoly2 monomial(int v_exp, int z_exp, const Coeff& c = 1);

    // delta = (v^-1 - v) z^-1, the value of a crossing-free two-component unlink.
    static LaurentPoly2 unlink_delta();
    // delta^(k-1): value of the crossing-free k-component unlink, k >= 1.
    static LaurentPoly2 unlink_value(int components);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly2& o) const { return !(*this == o); }

    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    LaurentPoly2 operator+(const LaurentPoly2& o) const;
    LaurentPoly2 operator-(const LaurentPoly2& o) const;
    LaurentPoly2 operator*(const LaurentPoly2& o) const;

    // Multiply in place by c * v^dv * z^dz.
    LaurentPoly2& scale(int dv, int dz, const Coeff& c);

    // Largest z-exponent over stored terms. Throws std::domain_error on the
    // zero polynomial (it has no degree).
    int z_degree() const;

    // Sorted human-readable text, terms ordered by z-exponent then v-exponent,
    // e.g. "2 v^2 - v^4 + v^2 z^2".
    std::string to_text() const;

    const std::map<Monomial, Coeff>& terms() const { return terms_; }
    void add_term(const Monomial& m, const Coeff& c);

private:
    std::map<Monomial, Coeff> terms_;
};

}  // namespace skeinkit
