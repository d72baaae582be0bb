#pragma once

#include "wres/scalar.hpp"
#include "wres/symbols.hpp"

#include <functional>
#include <map>
#include <vector>

namespace wres {

// Monomial: sorted (symbol, exponent) pairs, exponents > 0.
using Monomial = std::vector<std::pair<SymbolId, int>>;

/**
 * Exact multivariate polynomial over Gaussian rationals.
 * Zero coefficients are never stored, so equal polynomials have
 * identical representations and operator== is structural.
 */
class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly constant(Scalar c);
    static MultiPoly symbol(SymbolId s, Scalar c = Scalar(1));
    // c * s^e; negative exponents are permitted for the formal pi
    static MultiPoly symbol_pow(SymbolId s, int e, Scalar c = Scalar(1));
    // Canonicalized curvature entry c * R_{ijkl}.
    static MultiPoly riemann(int i, int j, int k, int l, Scalar c = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);

    MultiPoly scaled(const Scalar& c) const;
    MultiPoly derivative(const SymbolId& s) const;

    // Substitute some symbols by exact scalars; the rest pass through.
    MultiPoly substituted(const std::map<SymbolId, Scalar>& env) const;

    // Keep only terms whose monomial satisfies the predicate.
    MultiPoly filtered(const std::function<bool(const Monomial&)>& keep) const;

    // Total degree in XiPrime symbols.
    int xi_degree() const;

    // Value of a constant polynomial (throws if symbols remain).
    Scalar constant_value() const;

    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    std::string str(int n_alias = 0) const;

private:
    void add_term(const Monomial& m, const Scalar& c);
    std::map<Monomial, Scalar> terms_;
};

inline MultiPoly operator*(const Scalar& c, const MultiPoly& p) { return p.scaled(c); }

// --- sphere moments -------------------------------------------------------
//
// Integration of a polynomial in the tangential components xi_1..xi_m over
// the unit sphere of R^m: odd moments vanish, even moments follow the
// double-factorial rule; the total volume stays symbolic as Omega_m.
MultiPoly sphere_integrate(const MultiPoly& p, int m);

// Exact rational points on the unit sphere of R^m (permutations and sign
// flips of (1,0,..), (3/5,4/5,0,..), (1/3,2/3,2/3,0,..)), used to decide
// polynomial identities that hold only on the sphere.
std::vector<std::vector<Rat>> sphere_points(int m, size_t limit = 0);

std::map<SymbolId, Scalar> sphere_env(const std::vector<Rat>& pt);

} // namespace wres
