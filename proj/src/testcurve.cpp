#include "curvcert/testcurve.hpp"

#include <algorithm>
#include <sstream>

#include "curvcert/errors.hpp"

namespace curvcert {

BPolynomial BPolynomial::constant(const Rational& c)
{
    BPolynomial p;
    p.add_term({}, c);
    return p;
}

BPolynomial BPolynomial::variable(int i, int j)
{
    if (i < 1 || j < i)
        throw IndexOutOfRange("BPolynomial::variable: need 1 <= i <= j");
    BPolynomial p;
    p.add_term({{{i, j}, 1}}, 1);
    return p;
}

Rational BPolynomial::coefficient(const BMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BPolynomial::add_term(const BMonomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BPolynomial& BPolynomial::operator+=(const BPolynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

BPolynomial operator*(const BPolynomial& a, const BPolynomial& b)
{
    BPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            BMonomial m = ma;
            for (const auto& [var, e] : mb)
                m[var] += e;
            out.add_term(m, ca * cb);
        }
    return out;
}

std::string to_string(const BMonomial& m)
{
    if (m.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [var, e] : m) {
        if (!first)
            os << '*';
        first = false;
        if (var.first < 10 && var.second < 10)
            os << 'b' << var.first << var.second;
        else
            os << "b_" << var.first << '_' << var.second;
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

std::string to_string(const BPolynomial& p)
{
    if (p.zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << '-';
        first = false;
        const Rational mag = abs(c);
        if (m.empty())
            os << mag.str();
        else if (mag == 1)
            os << to_string(m);
        else
            os << mag.str() << '*' << to_string(m);
    }
    return os.str();
}

bool WedgeKeyLess::operator()(const WedgeKey& a, const WedgeKey& b) const
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), WedgeOrder{});
}

int canonicalize_wedge(WedgeKey& entries)
{
    // Insertion sort, counting transpositions.
    int sign = 1;
    const WedgeOrder less;
    for (std::size_t i = 1; i < entries.size(); ++i)
        for (std::size_t j = i; j > 0 && less(entries[j], entries[j - 1]); --j) {
            std::swap(entries[j], entries[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i] == entries[i - 1])
            return 0;
    return sign;
}

BPolynomial WedgePolynomial::coefficient(const WedgeKey& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? BPolynomial{} : it->second;
}

void WedgePolynomial::add(WedgeKey key, const BPolynomial& coeff)
{
    const int sign = canonicalize_wedge(key);
    if (sign == 0 || coeff.zero())
        return;
    auto& slot = terms_[key];
    if (sign > 0) {
        slot += coeff;
    } else {
        for (const auto& [m, c] : coeff.terms())
            slot.add_term(m, -c);
    }
    if (slot.zero())
        terms_.erase(key);
}

std::string format_wedge_polynomial(const WedgePolynomial& w)
{
    std::ostringstream os;
    for (const auto& [key, poly] : w.terms()) {
        std::string basis;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i > 0)
                basis += "∧";
            basis += "e" + to_string(key[i]);
        }
        for (const auto& [m, c] : poly.terms())
            os << c.str() << " · " << to_string(m) << " · " << basis << '\n';
    }
    return os.str();
}

VSpec VSpec::from_vectors(std::vector<Vector> v)
{
    if (v.empty() || is_zero(v.front()))
        throw NotRegular("VSpec: v_1 must be non-zero");
    for (const auto& x : v)
        if (x.size() != v.front().size())
            throw DimensionMismatch("VSpec: vectors differ in length");
    return {Shape::Numeric, std::move(v)};
}

namespace {

/// Element of Sym Q^n: monomial in the basis e_1..e_n (as a multiset of
/// indices) -> coefficient.
using SymElement = std::map<Partition, BPolynomial>;

SymElement sym_multiply(const SymElement& a, const SymElement& b)
{
    SymElement out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            std::vector<int> parts = pa.parts();
            parts.insert(parts.end(), pb.parts().begin(), pb.parts().end());
            auto& slot = out[Partition(std::move(parts))];
            slot += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.zero(); });
    return out;
}

std::vector<SymElement> curve_vectors(int k, const VSpec& spec)
{
    std::vector<SymElement> v;
    for (int i = 1; i <= k; ++i) {
        SymElement e;
        switch (spec.shape) {
        case VSpec::Shape::Diagonal:
            e[Partition({i})] = BPolynomial::variable(i, i);
            break;
        case VSpec::Shape::Triangular:
            for (int j = 1; j <= i; ++j)
                e[Partition({j})] = BPolynomial::variable(j, i);
            break;
        case VSpec::Shape::Numeric: {
            const Vector& x = spec.numeric[static_cast<std::size_t>(i - 1)];
            for (std::size_t j = 0; j < x.size(); ++j)
                if (x[j] != 0)
                    e[Partition({static_cast<int>(j) + 1})] = BPolynomial::constant(x[j]);
            break;
        }
        }
        v.push_back(std::move(e));
    }
    return v;
}

}  // namespace

WedgePolynomial phi_expand(int k, const VSpec& spec, int cap)
{
    if (k < 1)
        throw InvalidInput("phi_expand: k must be positive");
    if (k > cap)
        throw CapExceeded("phi_expand: k exceeds the expansion cap");
    if (spec.shape == VSpec::Shape::Numeric) {
        if (spec.numeric.size() < static_cast<std::size_t>(k))
            throw InvalidInput("phi_expand: fewer numeric vectors than k");
        if (is_zero(spec.numeric.front()))
            throw NotRegular("phi_expand: v_1 must be non-zero");
    }
    const std::vector<SymElement> v = curve_vectors(k, spec);

    std::map<WedgeKey, BPolynomial, WedgeKeyLess> acc;
    acc[WedgeKey{}] = BPolynomial::constant(1);
    for (int l = 1; l <= k; ++l) {
        SymElement factor;
        for (const auto& tau : partitions_of(l)) {
            SymElement prod;
            prod[Partition{}] = BPolynomial::constant(Rational(tau.composition_count()));
            for (int part : tau.parts())
                prod = sym_multiply(prod, v[static_cast<std::size_t>(part - 1)]);
            for (const auto& [rho, c] : prod)
                factor[rho] += c;
        }
        std::map<WedgeKey, BPolynomial, WedgeKeyLess> next;
        const WedgeOrder less;
        for (const auto& [key, poly] : acc)
            for (const auto& [rho, c] : factor) {
                if (c.zero())
                    continue;
                auto pos = std::lower_bound(key.begin(), key.end(), rho, less);
                if (pos != key.end() && *pos == rho)
                    continue;
                // Moving rho from the end to its sorted slot passes every
                // larger entry.
                const bool odd = ((key.end() - pos) % 2) != 0;
                WedgeKey grown = key;
                grown.insert(grown.begin() + (pos - key.begin()), rho);
                BPolynomial term = poly * c;
                if (odd)
                    term = term * BPolynomial::constant(-1);
                auto& slot = next[grown];
                slot += term;
            }
        std::erase_if(next, [](const auto& kv) { return kv.second.zero(); });
        acc = std::move(next);
    }
    WedgePolynomial out;
    for (const auto& [key, poly] : acc)
        out.add(key, poly);
    return out;
}

std::vector<Polynomial> curvilinear_span(const CurveJet& gamma, int i)
{
    if (!gamma.regular())
        throw NotRegular("curvilinear_span: curve jet has vanishing tangent vector");
    if (i < 1 || i > gamma.order())
        throw InvalidInput("curvilinear_span: index must lie in 1..order");
    const auto n = static_cast<std::size_t>(gamma.dim());
    std::vector<Polynomial> linear;
    for (int j = 1; j <= gamma.order(); ++j)
        linear.push_back(Polynomial::linear(gamma.v(j)));

    std::vector<Polynomial> out;
    for (int j = 1; j <= i; ++j) {
        Polynomial w(n);
        for (const auto& tau : partitions_of(j)) {
            Polynomial prod(n);
            prod.add_term(Exponent(n, 0), Rational(tau.composition_count()));
            for (int part : tau.parts())
                prod = multiply(prod, linear[static_cast<std::size_t>(part - 1)], j);
            w += prod;
        }
        out.push_back(std::move(w));
    }
    return out;
}

namespace {

Integer factorial(int m)
{
    Integer f = 1;
    for (int i = 2; i <= m; ++i)
        f *= i;
    return f;
}

}  // namespace

Vector pairing_functional(const Polynomial& w, const std::vector<Exponent>& monomials)
{
    Vector out;
    out.reserve(monomials.size());
    for (const auto& mu : monomials) {
        if (mu.size() != w.vars())
            throw DimensionMismatch("pairing_functional: monomial length mismatch");
        Integer num = 1;
        for (int e : mu)
            num *= factorial(e);
        out.push_back(w.coefficient(mu) * Rational(num, factorial(degree(mu))));
    }
    return out;
}

Rational limit_exponent(const PartitionSequence& pi, const Vector& alpha)
{
    Rational total = 0;
    for (const auto& tau : pi)
        for (int part : tau.parts()) {
            if (part > static_cast<int>(alpha.size()))
                throw IndexOutOfRange("limit_exponent: part exceeds weight vector length");
            total += alpha[static_cast<std::size_t>(part - 1)];
        }
    return total;
}

TorusLimit torus_limit(int k, const Vector& alpha, int cap)
{
    if (k < 1)
        throw InvalidInput("torus_limit: k must be positive");
    if (k > cap)
        throw CapExceeded("torus_limit: k exceeds the brute-force cap");
    if (alpha.size() != static_cast<std::size_t>(k))
        throw DimensionMismatch("torus_limit: weight vector length differs from k");
    TorusLimit result;
    bool first = true;
    for (const auto& pi : enumerate_toric_sequences(k)) {
        const Rational e = limit_exponent(pi, alpha);
        if (first || e > result.max_exponent) {
            result.max_exponent = e;
            result.limit = pi;
            result.maximizers = 1;
            first = false;
        } else if (e == result.max_exponent) {
            ++result.maximizers;
        }
    }
    if (result.maximizers != 1)
        result.limit.reset();
    return result;
}

}  // namespace curvcert
