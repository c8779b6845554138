#include "addact/rational.hpp"

#include <algorithm>
#include <set>

#include "addact/error.hpp"

namespace addact {

Z factorial(unsigned n) {
    Z out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Q parse_rational(const std::string& text) {
    if (text.empty()) fail(ErrorCode::ParseError, "empty rational literal");
    Q value;
    if (value.set_str(text, 10) != 0)
        fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    value.canonicalize();
    return value;
}

std::string to_string(const Q& value) { return value.get_str(); }
std::string to_string(const Z& value) { return value.get_str(); }

namespace {

std::vector<Z> divisors(const Z& value) {
    Z v = abs(value);
    std::vector<Z> out;
    for (Z d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            out.push_back(v / d);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<Q> rational_roots(const std::vector<Q>& coeffs) {
    // Strip trailing zero coefficients, then factor out x^k.
    std::vector<Q> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) fail(ErrorCode::DegenerateInput, "zero polynomial has every root");

    std::set<Q> roots;
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) roots.insert(Q(0));
    if (low + 1 >= c.size()) return {roots.begin(), roots.end()};

    // Clear denominators so the rational root theorem applies.
    Z common_den = 1;
    for (size_t i = low; i < c.size(); ++i)
        common_den = lcm(common_den, Z(c[i].get_den()));
    std::vector<Z> ic;
    for (size_t i = low; i < c.size(); ++i)
        ic.push_back(Z(c[i] * common_den));

    auto eval = [&](const Q& x) {
        Q acc = 0;
        for (size_t i = ic.size(); i-- > 0;) acc = acc * x + ic[i];
        return acc;
    };

    for (const Z& p : divisors(ic.front())) {
        for (const Z& q : divisors(ic.back())) {
            for (int sign : {1, -1}) {
                Q cand(sign * p, q);
                cand.canonicalize();
                if (eval(cand) == 0) roots.insert(cand);
            }
        }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace addact
