#include "curvcert/jets.hpp"

#include <algorithm>
#include <numeric>

#include "curvcert/errors.hpp"

namespace curvcert {

MapJet::MapJet(int source_dim, int target_dim, int order) : u_(source_dim), v_(target_dim), k_(order)
{
    if (u_ < 1 || v_ < 1 || k_ < 1)
        throw InvalidInput("MapJet: dimensions and order must be positive");
}

MapJet MapJet::identity(int dim, int order)
{
    MapJet id(dim, dim, order);
    for (int j = 0; j < dim; ++j) {
        Exponent e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(j)] = 1;
        Vector c(static_cast<std::size_t>(dim), Rational(0));
        c[static_cast<std::size_t>(j)] = 1;
        id.set(e, std::move(c));
    }
    return id;
}

void MapJet::set(const Exponent& monomial, Vector coeff)
{
    if (monomial.size() != static_cast<std::size_t>(u_))
        throw DimensionMismatch("MapJet::set: monomial has wrong number of variables");
    if (coeff.size() != static_cast<std::size_t>(v_))
        throw DimensionMismatch("MapJet::set: coefficient has wrong length");
    const int d = degree(monomial);
    if (d < 1 || d > k_)
        throw InvalidInput("MapJet::set: monomial degree must lie in 1..order");
    if (is_zero(coeff))
        coeffs_.erase(monomial);
    else
        coeffs_[monomial] = std::move(coeff);
}

Vector MapJet::coefficient(const Exponent& monomial) const
{
    auto it = coeffs_.find(monomial);
    return it == coeffs_.end() ? Vector(static_cast<std::size_t>(v_), Rational(0)) : it->second;
}

Polynomial MapJet::component(int c) const
{
    Polynomial p(static_cast<std::size_t>(u_));
    for (const auto& [e, vec] : coeffs_)
        p.add_term(e, vec.at(static_cast<std::size_t>(c)));
    return p;
}

MapJet compose(const MapJet& outer, const MapJet& inner)
{
    if (outer.source_dim() != inner.target_dim())
        throw DimensionMismatch("compose: outer source dimension differs from inner target dimension");
    if (outer.order() != inner.order())
        throw DimensionMismatch("compose: jet orders differ");
    const int k = outer.order();
    const auto u = static_cast<std::size_t>(inner.source_dim());
    const auto w = static_cast<std::size_t>(outer.target_dim());

    // powers[j][e] = (inner_j)^e truncated, e = 0..k
    std::vector<std::vector<Polynomial>> powers;
    for (int j = 0; j < inner.target_dim(); ++j) {
        std::vector<Polynomial> pw;
        Polynomial one(u);
        one.add_term(Exponent(u, 0), 1);
        pw.push_back(one);
        const Polynomial comp = inner.component(j);
        for (int e = 1; e <= k; ++e)
            pw.push_back(multiply(pw.back(), comp, k));
        powers.push_back(std::move(pw));
    }

    std::map<Exponent, Vector> acc;
    for (const auto& [mu, coeff] : outer.coefficients()) {
        Polynomial term = powers[0][static_cast<std::size_t>(mu[0])];
        for (std::size_t j = 1; j < mu.size(); ++j)
            if (mu[j] > 0)
                term = multiply(term, powers[j][static_cast<std::size_t>(mu[j])], k);
        for (const auto& [e, c] : term.terms()) {
            auto& slot = acc.try_emplace(e, Vector(w, Rational(0))).first->second;
            for (std::size_t i = 0; i < w; ++i)
                if (coeff[i] != 0)
                    slot[i] += c * coeff[i];
        }
    }
    MapJet out(inner.source_dim(), outer.target_dim(), k);
    for (auto& [e, vec] : acc)
        out.set(e, std::move(vec));
    return out;
}

CurveJet::CurveJet(std::vector<Vector> coefficients) : v_(std::move(coefficients))
{
    if (v_.empty())
        throw InvalidInput("CurveJet: order must be positive");
    n_ = static_cast<int>(v_.front().size());
    if (n_ < 1)
        throw InvalidInput("CurveJet: target dimension must be positive");
    for (const auto& v : v_)
        if (v.size() != static_cast<std::size_t>(n_))
            throw DimensionMismatch("CurveJet: coefficient vectors differ in length");
}

MapJet CurveJet::as_map_jet() const
{
    MapJet jet(1, n_, order());
    for (int i = 1; i <= order(); ++i)
        jet.set(Exponent{i}, v(i));
    return jet;
}

CurveJet CurveJet::from_map_jet(const MapJet& jet)
{
    if (jet.source_dim() != 1)
        throw DimensionMismatch("CurveJet::from_map_jet: source must be one-dimensional");
    std::vector<Vector> v;
    for (int i = 1; i <= jet.order(); ++i)
        v.push_back(jet.coefficient(Exponent{i}));
    return CurveJet(std::move(v));
}

ReparamJet::ReparamJet(Vector coefficients) : a_(std::move(coefficients))
{
    if (a_.empty() || a_.front() == 0)
        throw NotRegular("ReparamJet: linear coefficient must be non-zero");
}

MapJet ReparamJet::as_map_jet() const
{
    MapJet jet(1, 1, order());
    for (int i = 1; i <= order(); ++i)
        jet.set(Exponent{i}, Vector{a_[static_cast<std::size_t>(i - 1)]});
    return jet;
}

Matrix reparam_matrix(const ReparamJet& phi, int k)
{
    if (k < 1 || phi.order() < k)
        throw InvalidInput("reparam_matrix: reparametrisation order is below k");
    const auto n = static_cast<std::size_t>(k);
    // power[j] = [z^j] phi(z)^i, updated for i = 1..k.
    Vector base(n + 1, Rational(0));
    for (std::size_t j = 1; j <= n; ++j)
        base[j] = phi.coefficients()[j - 1];
    Matrix out(n, Vector(n, Rational(0)));
    Vector power = base;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j)
            out[i - 1][j - 1] = power[j];
        Vector next(n + 1, Rational(0));
        for (std::size_t a = 1; a <= n; ++a) {
            if (power[a] == 0)
                continue;
            for (std::size_t b = 1; a + b <= n; ++b)
                if (base[b] != 0)
                    next[a + b] += power[a] * base[b];
        }
        power = std::move(next);
    }
    return out;
}

namespace {

ReparamJet truncated(const ReparamJet& phi, int k)
{
    if (phi.order() < k)
        throw InvalidInput("reparametrisation order is below the curve order");
    Vector a(phi.coefficients().begin(), phi.coefficients().begin() + k);
    return ReparamJet(std::move(a));
}

}  // namespace

CurveJet reparametrize(const CurveJet& gamma, const ReparamJet& phi)
{
    const ReparamJet p = truncated(phi, gamma.order());
    return CurveJet::from_map_jet(compose(gamma.as_map_jet(), p.as_map_jet()));
}

ReparamJet compose(const ReparamJet& outer, const ReparamJet& inner)
{
    const int k = std::min(outer.order(), inner.order());
    const MapJet jet = compose(truncated(outer, k).as_map_jet(), truncated(inner, k).as_map_jet());
    Vector a;
    for (int i = 1; i <= k; ++i)
        a.push_back(jet.coefficient(Exponent{i})[0]);
    return ReparamJet(std::move(a));
}

Rational polarized_monomial(const Exponent& mu, const std::vector<const Vector*>& args)
{
    std::vector<std::size_t> slots;  // variable index of each linear factor
    for (std::size_t j = 0; j < mu.size(); ++j)
        slots.insert(slots.end(), static_cast<std::size_t>(mu[j]), j);
    if (slots.size() != args.size())
        throw DimensionMismatch("polarized_monomial: argument count differs from degree");
    std::vector<std::size_t> perm(slots.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    Integer count = 0;
    do {
        Rational prod = 1;
        for (std::size_t t = 0; t < slots.size() && prod != 0; ++t)
            prod *= (*args[perm[t]])[slots[t]];
        total += prod;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / Rational(count);
}

Vector TestCurveSystem::unknowns_of(const MapJet& psi) const
{
    if (psi.source_dim() != n || psi.target_dim() != target_dim || psi.order() != order)
        throw DimensionMismatch("TestCurveSystem: jet shape mismatch");
    const std::size_t mcount = monomials.size();
    Vector x(unknown_count(), Rational(0));
    for (std::size_t idx = 0; idx < mcount; ++idx) {
        const Vector c = psi.coefficient(monomials[idx]);
        for (int out = 0; out < target_dim; ++out)
            x[static_cast<std::size_t>(out) * mcount + idx] = c[static_cast<std::size_t>(out)];
    }
    return x;
}

MapJet TestCurveSystem::jet_of(const Vector& unknowns) const
{
    if (unknowns.size() != unknown_count())
        throw DimensionMismatch("TestCurveSystem::jet_of: wrong unknown count");
    const std::size_t mcount = monomials.size();
    MapJet psi(n, target_dim, order);
    for (std::size_t idx = 0; idx < mcount; ++idx) {
        Vector c(static_cast<std::size_t>(target_dim));
        for (int out = 0; out < target_dim; ++out)
            c[static_cast<std::size_t>(out)] = unknowns[static_cast<std::size_t>(out) * mcount + idx];
        psi.set(monomials[idx], std::move(c));
    }
    return psi;
}

bool TestCurveSystem::satisfied_by(const MapJet& psi) const
{
    return is_zero(mat_vec(equations, unknowns_of(psi)));
}

TestCurveSystem test_curve_system(const CurveJet& gamma, int up_to, int target_dim)
{
    if (!gamma.regular())
        throw NotRegular("test_curve_system: curve jet has vanishing tangent vector");
    if (up_to < 1 || up_to > gamma.order())
        throw InvalidInput("test_curve_system: order bound must lie in 1..order");
    if (target_dim < 1)
        throw InvalidInput("test_curve_system: target dimension must be positive");

    TestCurveSystem sys;
    sys.n = gamma.dim();
    sys.target_dim = target_dim;
    sys.order = gamma.order();
    sys.up_to = up_to;
    sys.monomials = monomials_up_to(static_cast<std::size_t>(sys.n), sys.order);
    const std::size_t mcount = sys.monomials.size();
    const auto big_n = static_cast<std::size_t>(target_dim);
    sys.equations.assign(static_cast<std::size_t>(up_to) * big_n, Vector(sys.unknown_count(), Rational(0)));

    for (int m = 1; m <= up_to; ++m) {
        // Scalar equation for one output coordinate; the N coordinates are
        // independent copies of it.
        Vector scalar(mcount, Rational(0));
        for (const auto& tau : partitions_of(m)) {
            std::vector<const Vector*> args;
            for (int part : tau.parts())
                args.push_back(&gamma.v(part));
            const Rational mult(tau.composition_count());
            for (std::size_t idx = 0; idx < mcount; ++idx)
                if (degree(sys.monomials[idx]) == tau.length())
                    scalar[idx] += mult * polarized_monomial(sys.monomials[idx], args);
        }
        for (std::size_t c = 0; c < big_n; ++c) {
            auto& row = sys.equations[static_cast<std::size_t>(m - 1) * big_n + c];
            for (std::size_t idx = 0; idx < mcount; ++idx)
                row[c * mcount + idx] = scalar[idx];
        }
    }
    return sys;
}

}  // namespace curvcert
