#include "sylv/poly.hpp"

namespace sylv {

namespace {

struct CoeffText {
    bool negative = false;
    std::string magnitude;
    bool is_one = false;
    bool is_fraction = false;
};

CoeffText describe(const Rational& c) {
    CoeffText t;
    t.negative = c.sign() < 0;
    const Rational mag = t.negative ? -c : c;
    t.magnitude = mag.to_string();
    t.is_one = mag == Rational(1L);
    t.is_fraction = mag.denominator() != 1;
    return t;
}

CoeffText describe(const ModP& c) {
    CoeffText t;
    t.magnitude = c.to_string();
    t.is_one = c == ModP(1L);
    return t;
}

}  // namespace

template <ExactField F>
std::string to_string(const UniPoly<F>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        const F c = p.coeff(i);
        if (c.is_zero()) continue;
        const CoeffText t = describe(c);
        if (out.empty())
            out += t.negative ? "-" : "";
        else
            out += t.negative ? " - " : " + ";
        if (i == 0) {
            out += t.magnitude;
            continue;
        }
        if (!t.is_one) out += t.is_fraction ? "(" + t.magnitude + ")" : t.magnitude;
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

template std::string to_string(const UniPoly<Rational>&);
template std::string to_string(const UniPoly<ModP>&);

}  // namespace sylv
