#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvcert/exactmath.hpp"
#include "curvcert/partitions.hpp"

namespace curvcert {

int degree(const Exponent& e);

/// Sparse polynomial with rational coefficients; zero terms are never stored.
class Polynomial {
public:
    explicit Polynomial(std::size_t vars = 0) : vars_(vars) {}

    static Polynomial variable(std::size_t vars, std::size_t index);
    /// Linear form sum_j v[j] x_j.
    static Polynomial linear(const Vector& v);

    std::size_t vars() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    Rational coefficient(const Exponent& e) const;
    bool zero() const { return terms_.empty(); }
    int max_degree() const;

    void add_term(const Exponent& e, const Rational& c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    std::size_t vars_;
    std::map<Exponent, Rational> terms_;
};

/// Product with every term of total degree > max_degree dropped.
Polynomial multiply(const Polynomial& a, const Polynomial& b, int max_degree);
/// Drop terms above max_degree.
Polynomial truncate(const Polynomial& p, int max_degree);

/// All exponents in `vars` variables of total degree exactly d, in
/// lexicographically decreasing order (x1^d first).
std::vector<Exponent> monomials_of_degree(std::size_t vars, int d);
/// Degrees 1..k concatenated.
std::vector<Exponent> monomials_up_to(std::size_t vars, int k);

}  // namespace curvcert
