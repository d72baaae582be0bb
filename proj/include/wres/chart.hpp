#pragma once

#include "wres/clifford.hpp"

#include <map>
#include <memory>
#include <optional>

namespace wres {

/**
 * Boundary-chart data at the base point x0 of a collar neighborhood with
 * metric h(x_n)^{-1} g^{dM} + dx_n^2: connection matrix values, Christoffel
 * symbols, the contracted Gamma^n, and the quarter-words delta_k. Everything
 * is expressed through the single scalar h1 = h'(0), with |xi'|^2 already
 * restricted to 1 where it enters as a scalar factor.
 */
struct BoundaryChart {
    int n = 0;
    std::shared_ptr<const CliffordAlgebra> alg;

    MultiPoly dxn_norm_sq;                      // d_{x_n}|xi|^2(x0) at |xi'|=1
    std::map<std::tuple<int, int, int>, MultiPoly> omega_conn;   // (s,t,i) -> value
    std::map<std::tuple<int, int, int>, MultiPoly> christoffel;  // (upper,i,j) -> value
    MultiPoly gamma_contracted;                 // Gamma^n(x0)
    std::vector<CliffordElem> delta_k;          // (1/4)h1 c(e_k)c(e_n), k<n; 0 at k=n

    std::vector<CliffordElem> conn_a;           // a_i  = (1/4) sum omega cb cb
    std::vector<CliffordElem> conn_sigma;       // sigma_i = -(1/4) sum omega c c

    MultiPoly omega(int s, int t, int i) const;
};

BoundaryChart chart_axioms(int n);

struct OperatorSpec {
    int n = 4;
    bool include_theta = true;
    bool include_thetap = true;
    int thetap_sign = +1;   // +1 for the operator, -1 for its formal adjoint

    static OperatorSpec d_hat(int n) { return {n, true, true, +1}; }
    static OperatorSpec d_hat_star(int n) { return {n, true, true, -1}; }
};

// b0^1 = (1/4) sum omega_{s,t}(e_i) c(e_i) cb(e_s) cb(e_t)
// b0^2 = -(1/4) sum omega_{s,t}(e_i) c(e_i) c(e_s) c(e_t)
std::pair<CliffordElem, CliffordElem> b0_parts(const BoundaryChart& chart);

/** Graded symbol with optional first normal jets per order. */
struct JetSym {
    struct Order {
        CliffordElem value;
        std::optional<CliffordElem> jet;   // d/d{x_n} at x0
    };
    std::map<int, Order> orders;

    const Order& at(int k) const;
    int top() const { return orders.rbegin()->first; }
};

// Order-1 and order-0 symbol of the first-order operator given by the spec:
// sigma_1 = i c(xi) with jet i(h1/2)c(xi'); sigma_0 = b0^1 + b0^2 + cb(theta)
// +- c(theta') (value only).
JetSym sigma_symbols(const OperatorSpec& spec, const BoundaryChart& chart);

// Same, with explicit b0 parts (lets tests inject a perturbed b0^2).
JetSym sigma_symbols_with_parts(const OperatorSpec& spec, const BoundaryChart& chart,
                                const CliffordElem& b01, const CliffordElem& b02);

} // namespace wres
