#include "wres/symbols.hpp"

#include <utility>

namespace wres {

int canonicalize_riemann(int& i, int& j, int& k, int& l) {
    if (i == j || k == l) return 0;
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (k > l) { std::swap(k, l); sign = -sign; }
    if (std::pair{i, j} > std::pair{k, l}) { std::swap(i, k); std::swap(j, l); }
    return sign;
}

std::string symbol_name(const SymbolId& s, int n_alias) {
    auto ix = [&](int v) {
        if (n_alias > 0 && v == n_alias) return std::string("n");
        return std::to_string(v);
    };
    switch (s.kind) {
        case Sym::XiPrime: return "xi" + std::to_string(s.idx[0]);
        case Sym::H1: return "h1";
        case Sym::Theta: return "theta_" + ix(s.idx[0]);
        case Sym::ThetaP: return "thetap_" + ix(s.idx[0]);
        case Sym::ScalarCurv: return "s";
        case Sym::DivThp: return "div_thp";
        case Sym::T: return "T_" + ix(s.idx[0]) + "_" + ix(s.idx[1]);
        case Sym::Tp: return "Tp_" + ix(s.idx[0]) + "_" + ix(s.idx[1]);
        case Sym::R:
            return "R_" + std::to_string(s.idx[0]) + "_" + std::to_string(s.idx[1]) + "_" +
                   std::to_string(s.idx[2]) + "_" + std::to_string(s.idx[3]);
        case Sym::Lap: return s.idx[0] == 0 ? "lap_s" : "lap_theta2";
        case Sym::Pi: return "pi";
        case Sym::Omega: return "Om";
        case Sym::Vol: return "Vol";
        case Sym::Lambda: return "Lam";
        case Sym::ThetaSq: return "theta_sq";
        case Sym::GradThetaSq: return "grad_theta_sq";
        case Sym::R2All: return "sum_R2";
        case Sym::Ric2: return "Ric2";
        case Sym::R2Gilkey: return "R2_ijik";
        case Sym::R2Omega: return "R2_ijst";
    }
    return "?";
}

} // namespace wres
