#include "wres/symcalc.hpp"
#include "wres/errors.hpp"

namespace wres {

CliffordElem piplus_elem(const CliffordElem& x) {
    return x.map_entries([](const RatXi& v) {
        if (v.is_polynomial()) return RatXi{};   // H' sits inside H^-
        if (!v.decays()) throw NonDecaying("pi^+ operand entry does not decay");
        auto parts = v.principal_parts();
        if (!parts.poly.is_zero())
            throw NonDecaying("pi^+ operand entry has a polynomial part");
        return parts.upper;
    });
}

CliffordElem deriv(const CliffordElem& x, Var v) {
    if (v == Var::XiN) return x.deriv_xin();
    throw MissingJet("normal x-derivative of a bare element requires its jet");
}

JetSym deriv(const JetSym& x, Var v) {
    JetSym out;
    if (v == Var::XiN) {
        for (const auto& [k, o] : x.orders) {
            JetSym::Order d{o.value.deriv_xin(), std::nullopt};
            if (o.jet) d.jet = o.jet->deriv_xin();
            out.orders[k] = std::move(d);
        }
        return out;
    }
    for (const auto& [k, o] : x.orders) {
        if (!o.jet) throw MissingJet("order " + std::to_string(k) + " carries no normal jet");
        out.orders[k] = {*o.jet, std::nullopt};
    }
    return out;
}

JetSym jet_compose(const JetSym& a, const JetSym& b, int min_order) {
    JetSym out;
    auto acc = [&](int m, const CliffordElem& e) {
        auto it = out.orders.find(m);
        if (it == out.orders.end()) out.orders[m] = {e, std::nullopt};
        else it->second.value += e;
    };
    const Scalar minus_i = Scalar(Rat(0), Rat(-1));
    for (const auto& [p, ao] : a.orders) {
        for (const auto& [q, bo] : b.orders) {
            if (p + q >= min_order) acc(p + q, ao.value * bo.value);
            if (p + q - 1 >= min_order) {
                CliffordElem da = ao.value.deriv_xin();
                if (!da.is_zero()) {
                    if (!bo.jet)
                        throw MissingJet("composition needs the normal jet of order " +
                                         std::to_string(q));
                    acc(p + q - 1, (da * *bo.jet).scaled(minus_i));
                }
            }
            if (p + q - 2 >= min_order) {
                // would need second normal jets; those never occur in the
                // enumerated truncations
                if (!ao.value.deriv_xin().deriv_xin().is_zero())
                    throw MissingJet("second-order normal jet required by composition");
            }
        }
    }
    int ta = a.top(), tb = b.top();
    const auto& aoT = a.orders.at(ta);
    const auto& boT = b.orders.at(tb);
    if (aoT.jet && boT.jet)
        out.orders[ta + tb].jet = *aoT.jet * boT.value + aoT.value * *boT.jet;
    return out;
}

JetSym invert_first_order_from(const JetSym& sym, const BoundaryChart& chart) {
    const auto& alg = *chart.alg;
    const Scalar i = Scalar::i();
    const Scalar minus_i = -i;
    const RatXi u = RatXi::pole(1, 1);          // 1/(1+xin^2)

    const auto& p1 = sym.at(1);
    const auto& p0 = sym.at(0);
    if (!p1.jet) throw MissingJet("leading symbol carries no normal jet");

    CliffordElem q1 = alg.c_xi().scaled(u).scaled(i);
    CliffordElem q1jet = -(q1 * *p1.jet * q1);
    CliffordElem Dq1 = q1jet.scaled(minus_i);
    CliffordElem dp1 = p1.value.deriv_xin();
    CliffordElem q2 = -(q1 * (p0.value * q1 + dp1 * Dq1));

    JetSym out;
    out.orders[-1] = {q1, q1jet};
    out.orders[-2] = {q2, std::nullopt};
    return out;
}

JetSym invert_first_order(const OperatorSpec& spec, const BoundaryChart& chart) {
    return invert_first_order_from(sigma_symbols(spec, chart), chart);
}

CubeSymbols cube_and_invert_from(const std::array<JetSym, 3>& f, const BoundaryChart& chart) {
    const auto& alg = *chart.alg;
    const Scalar i = Scalar::i();
    const Scalar minus_i = -i;

    JetSym pair = jet_compose(f[0], f[1], 1);
    JetSym cube = jet_compose(pair, f[2], 2);

    const auto& p3 = cube.at(3);
    const auto& p2 = cube.at(2);
    if (!p3.jet) throw MissingJet("third-order symbol carries no normal jet");

    const RatXi u2 = RatXi::pole(2, 2);          // 1/(1+xin^2)^2
    CliffordElem q3 = alg.c_xi().scaled(u2).scaled(i);
    CliffordElem q3jet = -(q3 * *p3.jet * q3);
    CliffordElem Dq3 = q3jet.scaled(minus_i);
    CliffordElem q4 = -(q3 * (p2.value * q3 + p3.value.deriv_xin() * Dq3));

    CubeSymbols out;
    out.cube = std::move(cube);
    out.inverse.orders[-3] = {q3, q3jet};
    out.inverse.orders[-4] = {q4, std::nullopt};
    return out;
}

CubeSymbols cube_and_invert(const std::array<OperatorSpec, 3>& specs, const BoundaryChart& chart) {
    bool ok = (specs[0].thetap_sign == -1 && specs[1].thetap_sign == +1 &&
               specs[2].thetap_sign == -1) ||
              (specs[0].thetap_sign == +1 && specs[1].thetap_sign == +1 &&
               specs[2].thetap_sign == +1);
    if (!ok)
        throw UnsupportedConfiguration("cube must be (D*, D, D*) or (D, D, D)");
    return cube_and_invert_from(
        {sigma_symbols(specs[0], chart), sigma_symbols(specs[1], chart),
         sigma_symbols(specs[2], chart)},
        chart);
}

bool equal_on_sphere(const CliffordElem& x, const CliffordElem& y, int m, size_t max_points) {
    for (const auto& pt : sphere_points(m, max_points)) {
        auto env = sphere_env(pt);
        if (!(x.substituted(env) - y.substituted(env)).is_zero()) return false;
    }
    return true;
}

} // namespace wres
