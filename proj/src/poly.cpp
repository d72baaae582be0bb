#include "wres/poly.hpp"
#include "wres/errors.hpp"

#include <algorithm>
#include <set>

namespace wres {

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::constant(Scalar c) {
    MultiPoly p;
    p.add_term({}, c);
    return p;
}

MultiPoly MultiPoly::symbol(SymbolId s, Scalar c) {
    MultiPoly p;
    p.add_term({{s, 1}}, c);
    return p;
}

MultiPoly MultiPoly::symbol_pow(SymbolId s, int e, Scalar c) {
    MultiPoly p;
    if (e == 0) p.add_term({}, c);
    else p.add_term({{s, e}}, c);
    return p;
}

MultiPoly MultiPoly::riemann(int i, int j, int k, int l, Scalar c) {
    int sign = canonicalize_riemann(i, j, k, l);
    if (sign == 0) return {};
    SymbolId s{Sym::R, {(int16_t)i, (int16_t)j, (int16_t)k, (int16_t)l}};
    return symbol(s, sign < 0 ? -c : c);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

static Monomial mono_mul(const Monomial& x, const Monomial& y) {
    Monomial r;
    r.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first) r.push_back(x[i++]);
        else if (y[j].first < x[i].first) r.push_back(y[j++]);
        else {
            int e = x[i].second + y[j].second;
            if (e != 0) r.emplace_back(x[i].first, e);  // pi^-k * pi^k cancels
            ++i; ++j;
        }
    }
    while (i < x.size()) r.push_back(x[i++]);
    while (j < y.size()) r.push_back(y[j++]);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

MultiPoly MultiPoly::derivative(const SymbolId& s) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        for (size_t pos = 0; pos < m.size(); ++pos) {
            if (!(m[pos].first == s)) continue;
            Monomial d = m;
            Scalar cc = c * Scalar(m[pos].second);
            if (d[pos].second == 1) d.erase(d.begin() + pos);
            else d[pos].second -= 1;
            r.add_term(d, cc);
            break;
        }
    }
    return r;
}

MultiPoly MultiPoly::substituted(const std::map<SymbolId, Scalar>& env) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Scalar cc = c;
        Monomial rest;
        for (const auto& [s, e] : m) {
            auto it = env.find(s);
            if (it == env.end()) {
                rest.emplace_back(s, e);
            } else {
                for (int k = 0; k < e; ++k) cc *= it->second;
            }
        }
        r.add_term(rest, cc);
    }
    return r;
}

MultiPoly MultiPoly::filtered(const std::function<bool(const Monomial&)>& keep) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_)
        if (keep(m)) r.terms_.emplace(m, c);
    return r;
}

int MultiPoly::xi_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [s, e] : m)
            if (s.kind == Sym::XiPrime) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

Scalar MultiPoly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (terms_.size() != 1 || !terms_.begin()->first.empty())
        throw Error("polynomial is not constant");
    return terms_.begin()->second;
}

std::string MultiPoly::str(int n_alias) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar cc = c;
        std::string sep;
        if (!first) {
            // pull a leading minus out of purely real/imaginary coefficients
            bool neg = (cc.is_real() && cc.re() < 0) || (cc.re() == 0 && cc.im() < 0);
            sep = neg ? " - " : " + ";
            if (neg) cc = -cc;
        }
        std::string body;
        bool unit = (cc == Scalar(1)) && !m.empty();
        if (!unit) body = cc.str();
        for (const auto& [s, e] : m) {
            if (!body.empty()) body += "*";
            body += symbol_name(s, n_alias);
            if (e != 1) body += "^" + std::to_string(e);
        }
        out += sep + body;
        first = false;
    }
    return out;
}

// --- sphere moments -------------------------------------------------------

static Rat double_factorial(int k) {
    Rat r(1);
    while (k > 1) {
        r *= k;
        k -= 2;
    }
    return r;
}

MultiPoly sphere_integrate(const MultiPoly& p, int m) {
    MultiPoly out;
    for (const auto& [mono, c] : p.terms()) {
        Monomial rest;
        std::vector<int> alpha;
        bool odd = false;
        for (const auto& [s, e] : mono) {
            if (s.kind == Sym::XiPrime) {
                if (e % 2) { odd = true; break; }
                alpha.push_back(e);
            } else {
                rest.emplace_back(s, e);
            }
        }
        if (odd) continue;
        int total = 0;
        Rat numv(1);
        for (int e : alpha) {
            total += e;
            numv *= double_factorial(e - 1);
        }
        Rat denv(1);
        for (int k = 1; k <= total / 2; ++k) denv *= (m + 2 * k - 2);
        MultiPoly term = MultiPoly::symbol(sym_omega(m));
        for (const auto& [s, e] : rest)
            for (int k = 0; k < e; ++k) term = term * MultiPoly::symbol(s);
        out += term.scaled(c * Scalar(numv / denv));
    }
    return out;
}

std::vector<std::vector<Rat>> sphere_points(int m, size_t limit) {
    std::set<std::vector<Rat>> pts;
    std::vector<std::vector<Rat>> bases;
    {
        std::vector<Rat> b1(m, Rat(0));
        b1[0] = 1;
        bases.push_back(b1);
    }
    if (m >= 2) {
        std::vector<Rat> b2(m, Rat(0));
        b2[0] = rat(3, 5);
        b2[1] = rat(4, 5);
        bases.push_back(b2);
    }
    if (m >= 3) {
        std::vector<Rat> b3(m, Rat(0));
        b3[0] = rat(1, 3);
        b3[1] = rat(2, 3);
        b3[2] = rat(2, 3);
        bases.push_back(b3);
    }
    for (auto base : bases) {
        std::sort(base.begin(), base.end());
        do {
            // all sign patterns on nonzero slots
            std::vector<int> nz;
            for (int k = 0; k < m; ++k)
                if (base[k] != 0) nz.push_back(k);
            for (size_t mask = 0; mask < (size_t(1) << nz.size()); ++mask) {
                auto v = base;
                for (size_t t = 0; t < nz.size(); ++t)
                    if (mask & (size_t(1) << t)) v[nz[t]] = -v[nz[t]];
                pts.insert(v);
            }
        } while (std::next_permutation(base.begin(), base.end()));
    }
    std::vector<std::vector<Rat>> out(pts.begin(), pts.end());
    if (limit && out.size() > limit) out.resize(limit);
    return out;
}

std::map<SymbolId, Scalar> sphere_env(const std::vector<Rat>& pt) {
    std::map<SymbolId, Scalar> env;
    for (size_t j = 0; j < pt.size(); ++j) env[sym_xi((int)j + 1)] = Scalar(pt[j]);
    return env;
}

} // namespace wres
