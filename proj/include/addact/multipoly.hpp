#pragma once

#include <map>
#include <string>
#include <vector>

#include "addact/rational.hpp"

namespace addact {

// Exponent vector; entry k is the power of variable k.
using Expo = std::vector<int>;

enum class MonoOrder { GrLex, GrevLex };

// Strict comparison a < b.  Both orders refine total degree.
bool mono_less(const Expo& a, const Expo& b, MonoOrder order);
bool mono_divides(const Expo& a, const Expo& b);  // a | b componentwise
Expo mono_lcm(const Expo& a, const Expo& b);
int mono_degree(const Expo& e);

// Sparse polynomial over Q.  Storage is order-agnostic (plain lexicographic
// map keys); a MonoOrder is applied on the fly where term order matters.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(size_t nvars) : nvars_(nvars) {}
    static MultiPoly constant(size_t nvars, const Q& c);
    static MultiPoly monomial(size_t nvars, Expo e, const Q& c = Q(1));
    static MultiPoly variable(size_t nvars, size_t index);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    const std::map<Expo, Q>& terms() const { return terms_; }
    Q coeff(const Expo& e) const;
    void add_term(const Expo& e, const Q& c);

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly scaled(const Q& c) const;
    bool operator==(const MultiPoly& other) const = default;

    Expo leading_monomial(MonoOrder order) const;
    Q leading_coeff(MonoOrder order) const;
    Q constant_term() const;

    // Same polynomial viewed in a ring with extra trailing variables.
    MultiPoly widened(size_t new_nvars) const;

private:
    size_t nvars_ = 0;
    std::map<Expo, Q> terms_;
};

Q poly_eval(const MultiPoly& p, const std::vector<Q>& point);

MultiPoly derivative(const MultiPoly& f, size_t var);

// All exponent vectors of total degree <= max_degree, ascending by degree and
// descending lexicographically within a degree (1, x1, x2, x1^2, x1*x2, ...).
std::vector<Expo> monomials_up_to(size_t nvars, int max_degree);

// Apolarity pairing: g acts on f as a constant-coefficient differential
// operator, evaluated at the origin.  On monomials, <S^i | x^i> = i_1!...i_n!.
Q pairing(const MultiPoly& g, const MultiPoly& f);

MultiPoly apply_diffop(const MultiPoly& g, const MultiPoly& f);

// f(x + beta)
MultiPoly translate(const MultiPoly& f, const std::vector<Q>& beta);

// Terms descending in `order`, rendered "c * x1^a1*x2^a2" with explicit
// rational coefficients; signs become " + " / " - " joins; pure constants
// print bare.  The zero polynomial prints "0".
std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& names,
                           MonoOrder order = MonoOrder::GrLex);

// Inverse of poly_to_string, slightly forgiving: coefficients may be omitted
// and whitespace is free.  Variable tokens must appear in `names`.
MultiPoly poly_parse(const std::string& text, const std::vector<std::string>& names);

std::vector<std::string> default_names(size_t nvars, const std::string& stem);

}  // namespace addact
