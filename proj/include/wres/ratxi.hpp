#pragma once

#include "wres/errors.hpp"
#include "wres/poly.hpp"

#include <complex>
#include <optional>
#include <tuple>
#include <vector>

namespace wres {

/**
 * Rational function of the normal covector component xi_n whose only poles
 * sit at +i and -i:
 *
 *     num(xi_n) / ((xi_n - i)^a (xi_n + i)^b)
 *
 * with MultiPoly coefficients in the numerator. Always normalized: num is
 * divisible by neither (xi_n - i) when a > 0 nor (xi_n + i) when b > 0,
 * so equality is structural.
 */
class RatXi {
public:
    RatXi() = default;

    static RatXi constant(Scalar c);
    static RatXi poly(MultiPoly p);
    static RatXi xin();
    // 1 / ((xi_n - i)^a (xi_n + i)^b)
    static RatXi pole(int a, int b);
    // c / ((xi_n - i)^upper (xi_n + i)^lower)
    static RatXi pole_term(MultiPoly c, int upper, int lower);
    // general constructor from xi_n coefficients (normalizes)
    static RatXi make(std::vector<MultiPoly> num, int a, int b);

    bool is_zero() const { return num_.empty(); }
    int upper_order() const { return a_; }
    int lower_order() const { return b_; }
    int num_degree() const { return (int)num_.size() - 1; }
    bool is_polynomial() const { return a_ == 0 && b_ == 0; }
    bool decays() const { return num_degree() <= a_ + b_ - 2; }
    const std::vector<MultiPoly>& num() const { return num_; }

    RatXi operator+(const RatXi& o) const;
    RatXi operator-(const RatXi& o) const;
    RatXi operator-() const;
    RatXi operator*(const RatXi& o) const;
    RatXi& operator+=(const RatXi& o);
    RatXi scaled(const Scalar& c) const;
    RatXi pscaled(const MultiPoly& p) const;

    bool operator==(const RatXi& o) const {
        return a_ == o.a_ && b_ == o.b_ && num_ == o.num_;
    }
    bool operator!=(const RatXi& o) const { return !(*this == o); }

    RatXi deriv_xin() const;
    RatXi deriv_sym(const SymbolId& s) const;
    RatXi substituted(const std::map<SymbolId, Scalar>& env) const;

    // Unique decomposition r = upper + lower + poly with the upper part
    // supported on the +i pole, the lower on -i, both with proper (decaying)
    // numerators.
    struct Parts {
        RatXi upper, lower, poly;
    };
    Parts principal_parts() const;

    // Laurent coefficient of 1/(xi_n - i) at the upper pole.
    MultiPoly residue_at_i() const;

    // Integral over the real line: 2*pi*i times the upper residue.
    // Requires decay (num_degree <= a+b-2); throws NonDecaying otherwise.
    MultiPoly line_integral() const;

    // Numeric evaluation; requires all numerator coefficients constant.
    std::complex<double> eval(double xin) const;

    std::string str(int n_alias = 0) const;

private:
    RatXi(std::vector<MultiPoly> num, int a, int b);
    void normalize();
    std::vector<MultiPoly> lifted(int a, int b) const;
    // Taylor coefficients of num(i + t) * (2i + t)^{-b}, t^0 .. t^{count-1}.
    std::vector<MultiPoly> upper_series(int count) const;

    std::vector<MultiPoly> num_;
    int a_ = 0;
    int b_ = 0;
};

enum class RatOp { Add, Mul };
RatXi ratxi_arith(const RatXi& lhs, const RatXi& rhs, RatOp op);

enum class PolyOp { Add, Sub, Mul };
MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, PolyOp op);

} // namespace wres
