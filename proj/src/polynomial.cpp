#include "curvcert/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "curvcert/errors.hpp"

namespace curvcert {

int degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t index)
{
    if (index >= vars)
        throw IndexOutOfRange("Polynomial::variable: index out of range");
    Polynomial p(vars);
    Exponent e(vars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::linear(const Vector& v)
{
    Polynomial p(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        Exponent e(v.size(), 0);
        e[j] = 1;
        p.add_term(e, v[j]);
    }
    return p;
}

Rational Polynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::max_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, degree(e));
    return d;
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (e.size() != vars_)
        throw DimensionMismatch("Polynomial::add_term: exponent length mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.vars_ != vars_)
        throw DimensionMismatch("Polynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, int max_degree)
{
    if (a.vars() != b.vars())
        throw DimensionMismatch("multiply: variable count mismatch");
    Polynomial out(a.vars());
    for (const auto& [ea, ca] : a.terms()) {
        const int da = degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (da + degree(eb) > max_degree)
                continue;
            Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial truncate(const Polynomial& p, int max_degree)
{
    Polynomial out(p.vars());
    for (const auto& [e, c] : p.terms())
        if (degree(e) <= max_degree)
            out.add_term(e, c);
    return out;
}

namespace {

void monos_rec(std::size_t var, int remaining, Exponent& cur, std::vector<Exponent>& out)
{
    if (var + 1 == cur.size()) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[var] = e;
        monos_rec(var + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t vars, int d)
{
    std::vector<Exponent> out;
    if (vars == 0)
        return out;
    Exponent cur(vars, 0);
    monos_rec(0, d, cur, out);
    return out;
}

std::vector<Exponent> monomials_up_to(std::size_t vars, int k)
{
    std::vector<Exponent> out;
    for (int d = 1; d <= k; ++d) {
        auto layer = monomials_of_degree(vars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace curvcert
