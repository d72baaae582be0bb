#pragma once

#include "wres/clifford.hpp"
#include "wres/kkw.hpp"

#include <array>
#include <map>

namespace wres {

/**
 * Curvature input for the deformation-square heat coefficients: either fully
 * symbolic (R, T, theta entries as formal symbols) or an exact-numeric
 * curvature instance with the R symmetries enforced on construction.
 */
class CurvatureData {
public:
    static CurvatureData symbolic(int n);
    // entries: (i,j,k,l,value); symmetric images are implied
    static CurvatureData numeric(int n,
                                 const std::vector<std::tuple<int, int, int, int, Rat>>& entries);

    int dim() const { return n_; }
    bool numeric_r() const { return numeric_; }

    MultiPoly r(int i, int j, int k, int l) const;
    MultiPoly scalar_curvature() const;   // symbol, or sum R_{ijij} when numeric
    MultiPoly theta(int i) const { return MultiPoly::symbol(sym_theta(i)); }
    MultiPoly grad_theta(int i, int j) const { return MultiPoly::symbol(sym_T(i, j)); }

private:
    int n_ = 4;
    bool numeric_ = false;
    std::map<std::array<int, 4>, Rat> entries_;
};

// sum_{ijkl} R_{ijkl} cb_i cb_j c_k c_l in the matrix model
CliffordElem curvature_word(const CliffordAlgebra& alg, const CurvatureData& data);

// E = (1/8) sum R cb cb c c - (1/4)s - sum_i c(e_i) cb(nabla_{e_i} theta) - |theta|^2
CliffordElem witten_endomorphism(const CliffordAlgebra& alg, const CurvatureData& data);

/**
 * Heat-trace coefficients of the deformation square at n = 4, expressed over
 * the invariant channel symbols. a4 carries the overall 1/(5760 pi^2); its
 * bracket is also exposed channel by channel for reporting.
 */
struct HeatCoefficients {
    MultiPoly a0;   // pi^-2 * Vol
    MultiPoly a2;   // -(s/12 + |theta|^2) * pi^-2, per unit volume
    MultiPoly a4;   // bracket / (5760 pi^2), plus lap markers when open
    MultiPoly a4_bracket;
    std::vector<std::pair<std::string, Scalar>> a4_channels;
};

HeatCoefficients heat_coefficients(const CurvatureData& data, bool closed_manifold);

// tr[Omega_ij Omega_ij] as a polynomial in the R entries (numeric data gives
// an exact constant); equals -4 sum (R_{ijst})^2.
MultiPoly curvature_form_trace(const CurvatureData& data);

// Lambda^4 F4 a0 + Lambda^2 F2 a2 + F0 a4
MultiPoly spectral_asymptotics(const HeatCoefficients& coeffs, const Rat& f0, const Rat& f2,
                               const Rat& f4);

SuiteReport run_spectral_suite();

// canonical contraction patterns (used by the recognition step and tests)
MultiPoly pattern_sum_r2(int n);
MultiPoly pattern_ric2(int n);

} // namespace wres
