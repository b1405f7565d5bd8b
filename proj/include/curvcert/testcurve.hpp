#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvcert/exactmath.hpp"
#include "curvcert/jets.hpp"
#include "curvcert/partitions.hpp"

namespace curvcert {

/// Monomial in the formal variables b_ij (1 <= i <= j): (i, j) -> exponent.
using BMonomial = std::map<std::pair<int, int>, int>;

/// Polynomial in the b_ij with exact coefficients.
class BPolynomial {
public:
    BPolynomial() = default;
    static BPolynomial constant(const Rational& c);
    static BPolynomial variable(int i, int j);

    const std::map<BMonomial, Rational>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    Rational coefficient(const BMonomial& m) const;
    void add_term(const BMonomial& m, const Rational& c);
    BPolynomial& operator+=(const BPolynomial& o);

    friend BPolynomial operator*(const BPolynomial& a, const BPolynomial& b);
    friend bool operator==(const BPolynomial& a, const BPolynomial& b) = default;

private:
    std::map<BMonomial, Rational> terms_;
};

std::string to_string(const BMonomial& m);
std::string to_string(const BPolynomial& p);

/// Wedge basis elements e_{pi_1} ^ ... ^ e_{pi_k}, stored with entries sorted
/// by WedgeOrder.
using WedgeKey = std::vector<Partition>;

struct WedgeKeyLess {
    bool operator()(const WedgeKey& a, const WedgeKey& b) const;
};

/// Sorts `entries` into canonical order. Returns the sign of the sorting
/// permutation, or 0 when two entries coincide (the wedge vanishes).
int canonicalize_wedge(WedgeKey& entries);

/// Plucker-coordinate vector: basis element -> coefficient polynomial. Zero
/// coefficients are never stored.
class WedgePolynomial {
public:
    const std::map<WedgeKey, BPolynomial, WedgeKeyLess>& terms() const { return terms_; }
    BPolynomial coefficient(const WedgeKey& key) const;
    /// `key` need not be sorted; the normalisation sign is applied.
    void add(WedgeKey key, const BPolynomial& coeff);
    std::size_t size() const { return terms_.size(); }

    friend bool operator==(const WedgePolynomial& a, const WedgePolynomial& b) = default;

private:
    std::map<WedgeKey, BPolynomial, WedgeKeyLess> terms_;
};

/// One line per (basis element, b-monomial): "coeff · b-monomial · e[..]∧e[..]".
std::string format_wedge_polynomial(const WedgePolynomial& w);

/// Which curve jets the expansion runs over.
struct VSpec {
    enum class Shape { Diagonal, Triangular, Numeric };
    Shape shape = Shape::Diagonal;
    std::vector<Vector> numeric;  // v_1..v_k, used by the numeric shape only

    static VSpec diagonal() { return {Shape::Diagonal, {}}; }
    static VSpec triangular() { return {Shape::Triangular, {}}; }
    /// Throws NotRegular when v_1 vanishes.
    static VSpec from_vectors(std::vector<Vector> v);
};

inline constexpr int kDefaultExpansionCap = 7;
inline constexpr int kDefaultLimitCap = 6;

/// Expands v_1 ^ (v_2 + v_1^2) ^ ... ^ (sum over ordered compositions of k of
/// v_i1 ... v_is) in the wedge basis. Throws CapExceeded for k > cap.
WedgePolynomial phi_expand(int k, const VSpec& spec, int cap = kDefaultExpansionCap);

/// The vectors sum_{tau |- j} c_tau v_tau, j = 1..i, in Sym^{<=k} Q^n, each
/// written as a polynomial in x_1..x_n (the symmetric product of vectors is
/// the product of the corresponding linear forms).
std::vector<Polynomial> curvilinear_span(const CurveJet& gamma, int i);

/// Coordinates of the functional Psi -> <Psi, w> on the unknowns of a scalar
/// (N = 1) test-curve system: entry mu is coeff_mu(w) * mu! / |mu|!. Under
/// this pairing the curvilinear span is the annihilator of the solution space.
Vector pairing_functional(const Polynomial& w, const std::vector<Exponent>& monomials);

/// sum_l sum_{i in pi_l} alpha_i. Throws IndexOutOfRange.
Rational limit_exponent(const PartitionSequence& pi, const Vector& alpha);

struct TorusLimit {
    std::optional<PartitionSequence> limit;  // empty when the maximum is tied
    Rational max_exponent;
    std::size_t maximizers = 0;
};

/// Brute-force limit of phi(z^a1 e_1, ..., z^ak e_k) as z -> infinity over all
/// toric sequences. Throws CapExceeded for k > cap.
TorusLimit torus_limit(int k, const Vector& alpha, int cap = kDefaultLimitCap);

}  // namespace curvcert
