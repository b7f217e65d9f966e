#include "skeinkit/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace skeinkit {

LaurentPoly2 LaurentPoly2::constant(const Coeff& c) {
    LaurentPoly2 p;
    p.add_term({0, 0}, c);
    return p;
}

LaurentPoly2 LaurentPoly2::monomial(int v_exp, int z_exp, const Coeff& c) {
    LaurentPoly2 p;
    p.add_term({v_exp, z_exp}, c);
    return p;
}

LaurentPoly2 LaurentPoly2::unlink_delta() {
    LaurentPoly2 p;
    p.add_term({-1, -1}, 1);
    p.add_term({1, -1}, -1);
    return p;
}

LaurentPoly2 LaurentPoly2::unlink_value(int components) {
    if (components < 1) throw std::invalid_argument("unlink_value: need at least one component");
    LaurentPoly2 p = one();
    const LaurentPoly2 d = unlink_delta();
    for (int i = 1; i < components; ++i) p = p * d;
    return p;
}

void LaurentPoly2::add_term(const Monomial& m, const Coeff& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    r += o;
    return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    r -= o;
    return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
    LaurentPoly2 r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term({ma.v_exp + mb.v_exp, ma.z_exp + mb.z_exp}, ca * cb);
    return r;
}

LaurentPoly2& LaurentPoly2::scale(int dv, int dz, const Coeff& c) {
    std::map<Monomial, Coeff> scaled;
    for (const auto& [m, coef] : terms_) {
        Coeff nc = coef * c;
        if (nc != 0) scaled.emplace(Monomial{m.v_exp + dv, m.z_exp + dz}, std::move(nc));
    }
    terms_ = std::move(scaled);
    return *this;
}

int LaurentPoly2::z_degree() const {
    if (terms_.empty()) throw std::domain_error("z_degree: zero polynomial has no degree");
    return terms_.rbegin()->first.z_exp;  // map is z-major ordered
}

namespace {

void append_power(std::ostringstream& out, const char* var, int exp) {
    if (exp == 0) return;
    out << ' ' << var;
    if (exp != 1) out << '^' << exp;
}

}  // namespace

std::string LaurentPoly2::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        Coeff mag = negative ? Coeff(-c) : c;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = (mag == 1) && (m.v_exp != 0 || m.z_exp != 0);
        if (!unit) out << mag.str();
        std::ostringstream powers;
        append_power(powers, "v", m.v_exp);
        append_power(powers, "z", m.z_exp);
        std::string p = powers.str();
        if (!p.empty()) {
            if (unit) p.erase(0, 1);  // no leading space right after a sign
            out << p;
        }
    }
    return out.str();
}

}  // namespace skeinkit
