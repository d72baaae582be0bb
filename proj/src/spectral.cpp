#include "wres/spectral.hpp"
#include "wres/errors.hpp"

namespace wres {

// --- curvature data ---------------------------------------------------------

CurvatureData CurvatureData::symbolic(int n) {
    CurvatureData d;
    d.n_ = n;
    d.numeric_ = false;
    return d;
}

CurvatureData CurvatureData::numeric(
    int n, const std::vector<std::tuple<int, int, int, int, Rat>>& entries) {
    CurvatureData d;
    d.n_ = n;
    d.numeric_ = true;
    for (auto [i, j, k, l, v] : entries) {
        int sign = canonicalize_riemann(i, j, k, l);
        if (sign == 0) {
            if (v != 0) throw Error("degenerate R index pair with nonzero value");
            continue;
        }
        d.entries_[{i, j, k, l}] = sign < 0 ? Rat(-v) : v;
    }
    return d;
}

MultiPoly CurvatureData::r(int i, int j, int k, int l) const {
    if (!numeric_) return MultiPoly::riemann(i, j, k, l);
    int sign = canonicalize_riemann(i, j, k, l);
    if (sign == 0) return {};
    auto it = entries_.find({i, j, k, l});
    if (it == entries_.end()) return {};
    Rat v = sign < 0 ? Rat(-it->second) : it->second;
    return v == 0 ? MultiPoly{} : MultiPoly::constant(Scalar(v));
}

MultiPoly CurvatureData::scalar_curvature() const {
    if (!numeric_) return MultiPoly::symbol(sym_s());
    MultiPoly s;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) s += r(i, j, i, j);
    return s;
}

// --- endomorphism and traces -------------------------------------------------

CliffordElem curvature_word(const CliffordAlgebra& alg, const CurvatureData& data) {
    const int n = alg.dim();
    CliffordElem W = CliffordElem::zero(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            CliffordElem cb = alg.cb(i) * alg.cb(j);
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (k == l) continue;
                    MultiPoly rv = data.r(i, j, k, l);
                    if (rv.is_zero()) continue;
                    W += (cb * alg.c(k) * alg.c(l)).scaled(rv);
                }
        }
    return W;
}

namespace {

MultiPoly theta_sq(int n) {
    MultiPoly p;
    for (int i = 1; i <= n; ++i) {
        MultiPoly t = MultiPoly::symbol(sym_theta(i));
        p += t * t;
    }
    return p;
}

CliffordElem grad_theta_word(const CliffordAlgebra& alg, const CurvatureData& data) {
    const int n = alg.dim();
    CliffordElem K = CliffordElem::zero(n);
    for (int i = 1; i <= n; ++i) {
        std::vector<MultiPoly> row(n);
        for (int j = 1; j <= n; ++j) row[j - 1] = data.grad_theta(i, j);
        K += alg.c(i) * alg.act(row, true);
    }
    return K;
}

MultiPoly constant_trace(const CliffordElem& e) {
    RatXi t = e.trace();
    if (t.is_zero()) return {};
    if (!t.is_polynomial() || t.num_degree() > 0) throw Error("trace is not xi_n-free");
    return t.num()[0];
}

} // namespace

CliffordElem witten_endomorphism(const CliffordAlgebra& alg, const CurvatureData& data) {
    const int n = alg.dim();
    CliffordElem E = curvature_word(alg, data).scaled(Scalar(rat(1, 8)));
    E += alg.identity().scaled(-(data.scalar_curvature().scaled(Scalar(rat(1, 4)))));
    E += -grad_theta_word(alg, data);
    E += alg.identity().scaled(-theta_sq(n));
    return E;
}

MultiPoly pattern_sum_r2(int n) {
    MultiPoly p;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    MultiPoly r = MultiPoly::riemann(i, j, k, l);
                    p += r * r;
                }
    return p;
}

MultiPoly pattern_ric2(int n) {
    MultiPoly p;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            MultiPoly ric;
            for (int i = 1; i <= n; ++i) ric += MultiPoly::riemann(i, j, i, k);
            p += ric * ric;
        }
    return p;
}

MultiPoly curvature_form_trace(const CurvatureData& data) {
    const int n = data.dim();
    CliffordAlgebra alg(n);
    MultiPoly total;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            CliffordElem omega = CliffordElem::zero(n);
            for (int s2 = 1; s2 <= n; ++s2)
                for (int t = 1; t <= n; ++t) {
                    MultiPoly rv = data.r(i, j, s2, t);
                    if (rv.is_zero()) continue;
                    omega += (alg.cb(s2) * alg.cb(t) - alg.c(s2) * alg.c(t))
                                 .scaled(rv.scaled(Scalar(rat(-1, 4))));
                }
            total += constant_trace(omega * omega);
        }
    return total;
}

// --- heat coefficients --------------------------------------------------------

HeatCoefficients heat_coefficients(const CurvatureData& data, bool closed_manifold) {
    const int n = data.dim();
    if (n != 4) throw UnsupportedConfiguration("heat coefficients are pinned at n = 4");
    CliffordAlgebra alg(n);
    const long dim = 1L << n;   // tr[id]

    HeatCoefficients out;
    out.a0 = MultiPoly::symbol(sym_vol()) * MultiPoly::symbol_pow(sym_pi(), -2);

    CliffordElem E = witten_endomorphism(alg, data);
    MultiPoly trE = constant_trace(E);   // dim * (-s/4 - |theta|^2)

    // a2 = (4 pi)^{-2} tr[s/6 + E] per unit volume
    MultiPoly tr_arg = MultiPoly::constant(Scalar(rat(dim, 6))) * data.scalar_curvature() + trE;
    out.a2 = tr_arg.scaled(Scalar(rat(1, 16))) * MultiPoly::symbol_pow(sym_pi(), -2);

    // --- a4 bracket, channel by channel ---
    MultiPoly trE2 = constant_trace(E * E);

    // recognize the sectors of tr[E^2]
    MultiPoly p_r2 = pattern_sum_r2(n);
    MultiPoly p_gradsq;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            MultiPoly t = MultiPoly::symbol(sym_T(i, j));
            p_gradsq += t * t;
        }
    MultiPoly tsq = theta_sq(n);
    MultiPoly s = data.scalar_curvature();
    MultiPoly expect_trE2 = s * s + s * tsq.scaled(Scalar(dim / 2)) +
                            tsq * tsq.scaled(Scalar(dim)) + p_gradsq.scaled(Scalar(dim)) +
                            p_r2;
    if (trE2 != expect_trE2)
        throw Error("tr[E^2] does not match its contraction pattern");

    auto channel = [&](const char* name, long num, long den = 1) {
        out.a4_channels.emplace_back(name, Scalar(rat(num, den)));
    };
    // 5 tau^2 - 2|Ric|^2 + 2|R|^2 on the identity, 60 tau E, 180 E^2, and the
    // curvature-form channel at the reported normalization (the fiber
    // dimension rides along with it).
    channel("s^2", 5 * dim - 15 * dim + 180);
    channel("s*theta_sq", -60 * dim + 180 * (dim / 2));
    channel("theta_sq^2", 180 * dim);
    channel("grad_theta_sq", 180 * dim);
    channel("sum_R2", 180);
    channel("Ric2", -2 * dim);
    channel("R2_ijik", 2 * dim);
    {
        // tr[Omega Omega] = c * sum R^2; recognize c exactly
        MultiPoly omtr = curvature_form_trace(CurvatureData::symbolic(n));
        // c is the ratio against the pattern; verify exact multiple
        MultiPoly residual = omtr + p_r2.scaled(Scalar(4));
        if (!residual.is_zero()) throw Error("curvature-form trace is not -4 sum R^2");
        channel("R2_ijst", 30 * (-4) * dim);
    }

    MultiPoly bracket;
    auto chan_sym = [&](const std::string& name) -> MultiPoly {
        if (name == "s^2") return s * s;
        if (name == "s*theta_sq") return MultiPoly::symbol(sym_s()) * MultiPoly::symbol(sym_theta_sq());
        if (name == "theta_sq^2") {
            MultiPoly t = MultiPoly::symbol(sym_theta_sq());
            return t * t;
        }
        if (name == "grad_theta_sq") return MultiPoly::symbol(sym_grad_theta_sq());
        if (name == "sum_R2") return MultiPoly::symbol(sym_r2_all());
        if (name == "Ric2") return MultiPoly::symbol(sym_ric2());
        if (name == "R2_ijik") return MultiPoly::symbol(sym_r2_gilkey());
        return MultiPoly::symbol(sym_r2_omega());
    };
    for (const auto& [name, coeff] : out.a4_channels) bracket += chan_sym(name).scaled(coeff);

    if (!closed_manifold) {
        // total-derivative markers with their mid-computation weights:
        // -12 tr[id] lap_s - 60 lap(tr E)
        Scalar cs, ct2;
        for (const auto& [m, c] : trE.terms()) {
            if (m.size() == 1 && m[0].first == sym_s() && m[0].second == 1) cs = c;
            if (m.size() == 1 && m[0].first == sym_theta(1) && m[0].second == 2) ct2 = c;
        }
        MultiPoly lap = MultiPoly::symbol(sym_lap(0), Scalar(rat(-12 * dim, 1)) - Scalar(60) * cs) +
                        MultiPoly::symbol(sym_lap(1), -Scalar(60) * ct2);
        bracket += lap;
    }

    out.a4_bracket = bracket;
    out.a4 = bracket.scaled(Scalar(rat(1, 5760))) * MultiPoly::symbol_pow(sym_pi(), -2);
    return out;
}

MultiPoly spectral_asymptotics(const HeatCoefficients& coeffs, const Rat& f0, const Rat& f2,
                               const Rat& f4) {
    MultiPoly out;
    out += MultiPoly::symbol_pow(sym_lambda(), 4, Scalar(f4)) * coeffs.a0;
    out += MultiPoly::symbol_pow(sym_lambda(), 2, Scalar(f2)) * coeffs.a2;
    out += coeffs.a4.scaled(Scalar(f0));
    return out;
}

// --- suite --------------------------------------------------------------------

SuiteReport run_spectral_suite() {
    SuiteReport rep;
    rep.suite = "spectral";
    CurvatureData data = CurvatureData::symbolic(4);
    CliffordAlgebra alg(4);

    auto push = [&](const std::string& id, const MultiPoly& expected, const MultiPoly& computed,
                    std::vector<TermEntry> terms = {}) {
        CaseRecord rec;
        rec.id = id;
        rec.expected = expected.str();
        rec.computed = computed.str();
        rec.match = expected == computed;
        rec.terms = std::move(terms);
        rep.records.push_back(std::move(rec));
    };

    HeatCoefficients hc = heat_coefficients(data, true);

    push("a0", MultiPoly::symbol(sym_vol()) * MultiPoly::symbol_pow(sym_pi(), -2), hc.a0);
    {
        MultiPoly expected = (MultiPoly::symbol(sym_s(), Scalar(rat(-1, 12))) +
                              -theta_sq(4)) *
                             MultiPoly::symbol_pow(sym_pi(), -2);
        push("a2", expected, hc.a2);
    }
    {
        MultiPoly t = MultiPoly::symbol(sym_theta_sq());
        MultiPoly expected = MultiPoly::symbol_pow(sym_s(), 2, Scalar(20)) +
                             MultiPoly::symbol(sym_grad_theta_sq(), Scalar(2880)) +
                             (t * t).scaled(Scalar(2880)) +
                             MultiPoly::symbol(sym_r2_all(), Scalar(180)) +
                             MultiPoly::symbol(sym_s()) * t.scaled(Scalar(480)) +
                             MultiPoly::symbol(sym_ric2(), Scalar(-32)) +
                             MultiPoly::symbol(sym_r2_gilkey(), Scalar(32)) +
                             MultiPoly::symbol(sym_r2_omega(), Scalar(-1920));
        std::vector<TermEntry> terms;
        for (const auto& [name, c] : hc.a4_channels) terms.push_back({name, c.str()});
        push("a4_bracket", expected, hc.a4_bracket, std::move(terms));
    }
    {
        MultiPoly expected = pattern_sum_r2(4).scaled(Scalar(-4));
        push("omega_trace", expected, curvature_form_trace(data));
    }
    {
        // the (5.12)-style vanishing identities, summed as one record
        bool ok = true;
        std::vector<TermEntry> terms;
        auto check = [&](const std::string& name, const CliffordElem& e) {
            RatXi t = e.trace();
            terms.push_back({name, t.is_zero() ? "0" : "nonzero"});
            ok = ok && t.is_zero();
        };
        for (int i = 1; i <= 4; ++i) check("tr[c(e" + std::to_string(i) + ")]", alg.c(i));
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                if (i != j) check("tr[c c]", alg.c(i) * alg.c(j));
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                if (i != j)
                    for (int k = 1; k <= 4; ++k)
                        for (int l = 1; l <= 4; ++l)
                            check("tr[cb cb c c]", alg.cb(i) * alg.cb(j) * alg.c(k) * alg.c(l));
        check("tr[sum c cb(grad theta)]", grad_theta_word(alg, data));
        CaseRecord rec;
        rec.id = "vanishing_identities";
        rec.expected = "all traces zero";
        rec.computed = ok ? "all traces zero" : "violation";
        rec.match = ok;
        rep.records.push_back(std::move(rec));
    }
    {
        // tr E and tr E^2 cross-term structure
        CliffordElem E = witten_endomorphism(alg, data);
        MultiPoly expected = (MultiPoly::symbol(sym_s(), Scalar(rat(-1, 4))) + -theta_sq(4))
                                 .scaled(Scalar(16));
        push("trace_E", expected, constant_trace(E));
    }
    finalize_counts(rep);
    return rep;
}

} // namespace wres
