#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace wres {

// Formal scalar symbols. Indices are 1-based where present.
enum class Sym : uint8_t {
    XiPrime,   // tangential covector component xi_j, 1 <= j <= n-1
    H1,        // h'(0)
    Theta,     // theta_i
    ThetaP,    // theta'_i
    ScalarCurv,// s
    DivThp,    // sum_j g(e_j, nabla_{e_j} theta')
    T,         // (nabla_{e_i} theta)_j
    Tp,        // (nabla_{e_i} theta')_j
    R,         // curvature entry R_{ijkl}, canonically ordered
    Lap,       // total-derivative marker: Lap(0)=Delta s, Lap(1)=Delta|theta|^2
    Pi,        // the formal pi
    Omega,     // Omega_m, m = dimension of the tangential covector space
    Vol,       // unit-volume marker for interior densities
    Lambda,    // spectral cutoff
    // invariant channels of the heat-coefficient reports
    ThetaSq,     // |theta|^2
    GradThetaSq, // sum_i |nabla_{e_i} theta|^2
    R2All,       // sum_{ijkl} R_{ijkl}^2
    Ric2,        // R_{ijik} R_{ljlk}
    R2Gilkey,    // the R^2_{ijik}-labeled channel of the a4 bracket
    R2Omega,     // sum (R_{ijst})^2 entering through the curvature form
};

struct SymbolId {
    Sym kind{};
    std::array<int16_t, 4> idx{0, 0, 0, 0};

    auto operator<=>(const SymbolId&) const = default;
};

inline SymbolId sym_xi(int j) { return {Sym::XiPrime, {(int16_t)j, 0, 0, 0}}; }
inline SymbolId sym_h1() { return {Sym::H1, {}}; }
inline SymbolId sym_theta(int i) { return {Sym::Theta, {(int16_t)i, 0, 0, 0}}; }
inline SymbolId sym_thetap(int i) { return {Sym::ThetaP, {(int16_t)i, 0, 0, 0}}; }
inline SymbolId sym_s() { return {Sym::ScalarCurv, {}}; }
inline SymbolId sym_div_thp() { return {Sym::DivThp, {}}; }
inline SymbolId sym_T(int i, int j) { return {Sym::T, {(int16_t)i, (int16_t)j, 0, 0}}; }
inline SymbolId sym_Tp(int i, int j) { return {Sym::Tp, {(int16_t)i, (int16_t)j, 0, 0}}; }
inline SymbolId sym_lap(int which) { return {Sym::Lap, {(int16_t)which, 0, 0, 0}}; }
inline SymbolId sym_pi() { return {Sym::Pi, {}}; }
inline SymbolId sym_omega(int m) { return {Sym::Omega, {(int16_t)m, 0, 0, 0}}; }
inline SymbolId sym_vol() { return {Sym::Vol, {}}; }
inline SymbolId sym_lambda() { return {Sym::Lambda, {}}; }
inline SymbolId sym_theta_sq() { return {Sym::ThetaSq, {}}; }
inline SymbolId sym_grad_theta_sq() { return {Sym::GradThetaSq, {}}; }
inline SymbolId sym_r2_all() { return {Sym::R2All, {}}; }
inline SymbolId sym_ric2() { return {Sym::Ric2, {}}; }
inline SymbolId sym_r2_gilkey() { return {Sym::R2Gilkey, {}}; }
inline SymbolId sym_r2_omega() { return {Sym::R2Omega, {}}; }

// Canonical R index ordering. Returns sign in {-1,0,+1}; 0 means the entry
// vanishes identically (repeated index in an antisymmetric pair).
int canonicalize_riemann(int& i, int& j, int& k, int& l);

std::string symbol_name(const SymbolId& s, int n_alias = 0);

} // namespace wres
