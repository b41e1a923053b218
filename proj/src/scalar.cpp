#include "deltasym/scalar.hpp"

namespace dsym {

Scalar i_power(long k) {
    long m = ((k % 4) + 4) % 4;
    switch (m) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
    }
}

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string to_string(const Scalar& s) {
    if (s.im == 0) return to_string(s.re);
    // Pure imaginary: "i", "-i", or "q*i".
    std::string im_part;
    if (s.im == 1)
        im_part = "i";
    else if (s.im == -1)
        im_part = "-i";
    else
        im_part = to_string(s.im) + "*i";
    if (s.re == 0) return im_part;
    // Both parts: join with explicit sign on the imaginary term.
    std::string out = to_string(s.re);
    if (im_part[0] == '-')
        out += im_part;
    else
        out += "+" + im_part;
    return out;
}

} // namespace dsym
