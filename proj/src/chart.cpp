#include "wres/chart.hpp"
#include "wres/errors.hpp"

namespace wres {

MultiPoly BoundaryChart::omega(int s, int t, int i) const {
    auto it = omega_conn.find({s, t, i});
    return it == omega_conn.end() ? MultiPoly{} : it->second;
}

BoundaryChart chart_axioms(int n) {
    BoundaryChart ch;
    ch.n = n;
    ch.alg = std::make_shared<CliffordAlgebra>(n);
    const MultiPoly h1 = MultiPoly::symbol(sym_h1());
    const MultiPoly h1_half = MultiPoly::symbol(sym_h1(), Scalar(rat(1, 2)));

    ch.dxn_norm_sq = h1;   // h'(0)|xi'|^2 with |xi'| = 1

    for (int i = 1; i < n; ++i) {
        ch.omega_conn[{n, i, i}] = h1_half;
        ch.omega_conn[{i, n, i}] = -h1_half;
        ch.christoffel[{n, i, i}] = h1_half;
        ch.christoffel[{i, n, i}] = -h1_half;
        ch.christoffel[{i, i, n}] = -h1_half;
    }
    ch.gamma_contracted = MultiPoly::symbol(sym_h1(), Scalar(rat(n - 1, 2)));

    const auto& alg = *ch.alg;
    for (int i = 1; i <= n; ++i) {
        if (i < n) {
            // a_i = (1/4)[omega_{n,i}(e_i) cb_n cb_i + omega_{i,n}(e_i) cb_i cb_n]
            CliffordElem ai =
                (alg.cb(n) * alg.cb(i) - alg.cb(i) * alg.cb(n)).scaled(h1.scaled(Scalar(rat(1, 8))));
            CliffordElem si =
                (alg.c(n) * alg.c(i) - alg.c(i) * alg.c(n)).scaled(h1.scaled(Scalar(rat(-1, 8))));
            ch.conn_a.push_back(ai);
            ch.conn_sigma.push_back(si);
            ch.delta_k.push_back((alg.c(i) * alg.c(n)).scaled(h1.scaled(Scalar(rat(1, 4)))));
        } else {
            ch.conn_a.push_back(CliffordElem::zero(n));
            ch.conn_sigma.push_back(CliffordElem::zero(n));
            ch.delta_k.push_back(CliffordElem::zero(n));
        }
    }
    return ch;
}

std::pair<CliffordElem, CliffordElem> b0_parts(const BoundaryChart& chart) {
    const auto& alg = *chart.alg;
    CliffordElem b01 = CliffordElem::zero(chart.n);
    CliffordElem b02 = CliffordElem::zero(chart.n);
    for (int i = 1; i <= chart.n; ++i) {
        b01 += alg.c(i) * chart.conn_a[i - 1];
        b02 += alg.c(i) * chart.conn_sigma[i - 1];
    }
    return {b01, b02};
}

const JetSym::Order& JetSym::at(int k) const {
    auto it = orders.find(k);
    if (it == orders.end()) throw MissingJet("symbol order " + std::to_string(k) + " not present");
    return it->second;
}

JetSym sigma_symbols_with_parts(const OperatorSpec& spec, const BoundaryChart& chart,
                                const CliffordElem& b01, const CliffordElem& b02) {
    const auto& alg = *chart.alg;
    JetSym js;
    CliffordElem p1 = alg.c_xi().scaled(Scalar::i());
    CliffordElem p1jet = alg.dxn_cxi_realization().scaled(Scalar::i());
    js.orders[1] = {p1, p1jet};

    CliffordElem p0 = b01 + b02;
    if (spec.include_theta) p0 += alg.theta_action(true);
    if (spec.include_thetap) p0 += alg.thetap_action().scaled(Scalar(spec.thetap_sign));
    js.orders[0] = {p0, std::nullopt};
    return js;
}

JetSym sigma_symbols(const OperatorSpec& spec, const BoundaryChart& chart) {
    auto [b01, b02] = b0_parts(chart);
    return sigma_symbols_with_parts(spec, chart, b01, b02);
}

} // namespace wres
