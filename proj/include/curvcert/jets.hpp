#pragma once

#include <map>
#include <vector>

#include "curvcert/exactmath.hpp"
#include "curvcert/polynomial.hpp"

namespace curvcert {

/// k-jet of a germ (Q^u, 0) -> (Q^v, 0): for every monomial of degree 1..k in
/// the u source variables, a coefficient vector in Q^v. Zero coefficients are
/// not stored.
class MapJet {
public:
    MapJet(int source_dim, int target_dim, int order);

    static MapJet identity(int dim, int order);

    int source_dim() const { return u_; }
    int target_dim() const { return v_; }
    int order() const { return k_; }

    /// Throws InvalidInput for degree 0 or degree > order, DimensionMismatch
    /// for wrong lengths.
    void set(const Exponent& monomial, Vector coeff);
    Vector coefficient(const Exponent& monomial) const;
    const std::map<Exponent, Vector>& coefficients() const { return coeffs_; }

    /// The c-th output coordinate as a polynomial in the source variables.
    Polynomial component(int c) const;

    friend bool operator==(const MapJet& a, const MapJet& b) = default;

private:
    int u_, v_, k_;
    std::map<Exponent, Vector> coeffs_;
};

/// Substitution of `inner` into `outer`, truncated at the common order.
MapJet compose(const MapJet& outer, const MapJet& inner);

/// k-jet of a curve (Q, 0) -> (Q^n, 0), held as the normalised derivatives
/// v_i = gamma^(i)(0) / i!, i = 1..k.
class CurveJet {
public:
    explicit CurveJet(std::vector<Vector> coefficients);

    int order() const { return static_cast<int>(v_.size()); }
    int dim() const { return n_; }
    /// 1-based: v(1) is the tangent vector.
    const Vector& v(int i) const { return v_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Vector>& coefficients() const { return v_; }
    bool regular() const { return !is_zero(v_.front()); }

    MapJet as_map_jet() const;
    static CurveJet from_map_jet(const MapJet& jet);

    friend bool operator==(const CurveJet& a, const CurveJet& b) = default;

private:
    int n_;
    std::vector<Vector> v_;
};

/// Element of Diff_k(1): phi(z) = a_1 z + ... + a_k z^k with a_1 != 0.
class ReparamJet {
public:
    /// Throws NotRegular when the linear coefficient vanishes.
    explicit ReparamJet(Vector coefficients);

    int order() const { return static_cast<int>(a_.size()); }
    const Vector& coefficients() const { return a_; }
    MapJet as_map_jet() const;

private:
    Vector a_;
};

/// The k x k upper-triangular matrix with entry (i, j) equal to the sum over
/// ordered compositions a_1 + ... + a_i = j of alpha_{a_1} ... alpha_{a_i}.
/// Row-vector convention: the coefficient rows of gamma o phi are
/// (v_1, ..., v_k) * reparam_matrix(phi), hence
/// reparam_matrix(phi1 o phi2) = reparam_matrix(phi1) * reparam_matrix(phi2).
Matrix reparam_matrix(const ReparamJet& phi, int k);

/// gamma o phi, truncated at gamma's order.
CurveJet reparametrize(const CurveJet& gamma, const ReparamJet& phi);
ReparamJet compose(const ReparamJet& outer, const ReparamJet& inner);

/// Linear equations on the coefficients of Psi in J_k(n, N) expressing that
/// Psi o gamma vanishes up to order `up_to`.
///
/// Unknown (c, mu), for output coordinate c and monomial mu, sits in column
/// c * monomials.size() + index(mu). Equation (m, c) sits in row
/// (m - 1) * target_dim + c and reads
///   sum over ordered compositions (i_1..i_s) of m of Psi_s(v_i1, ..., v_is) = 0
/// where Psi_s is the polarised degree-s part of Psi.
struct TestCurveSystem {
    int n = 0;
    int target_dim = 0;
    int order = 0;
    int up_to = 0;
    std::vector<Exponent> monomials;
    Matrix equations;

    std::size_t unknown_count() const { return monomials.size() * static_cast<std::size_t>(target_dim); }
    Vector unknowns_of(const MapJet& psi) const;
    MapJet jet_of(const Vector& unknowns) const;
    bool satisfied_by(const MapJet& psi) const;
};

TestCurveSystem test_curve_system(const CurveJet& gamma, int up_to, int target_dim);

/// Value of the symmetric multilinear form polarising x^mu at the given
/// vectors (one per factor of the monomial).
Rational polarized_monomial(const Exponent& mu, const std::vector<const Vector*>& args);

}  // namespace curvcert
