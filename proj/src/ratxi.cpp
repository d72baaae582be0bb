#include "wres/ratxi.hpp"

#include <cassert>

namespace wres {

namespace {

using Coeffs = std::vector<MultiPoly>;

void trim(Coeffs& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Coeffs add(const Coeffs& u, const Coeffs& v) {
    Coeffs r(std::max(u.size(), v.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < u.size()) r[k] += u[k];
        if (k < v.size()) r[k] += v[k];
    }
    trim(r);
    return r;
}

Coeffs mul(const Coeffs& u, const Coeffs& v) {
    if (u.empty() || v.empty()) return {};
    Coeffs r(u.size() + v.size() - 1);
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            r[i + j] += u[i] * v[j];
        }
    }
    trim(r);
    return r;
}

Coeffs scal(const Coeffs& u, const Scalar& c) {
    Coeffs r;
    r.reserve(u.size());
    for (const auto& p : u) r.push_back(p.scaled(c));
    trim(r);
    return r;
}

MultiPoly eval_at(const Coeffs& u, const Scalar& c) {
    MultiPoly acc;
    for (auto it = u.rbegin(); it != u.rend(); ++it) acc = acc.scaled(c) + *it;
    return acc;
}

// synthetic division by (x - c); caller guarantees the remainder vanishes
Coeffs divide_root(const Coeffs& u, const Scalar& c) {
    Coeffs q(u.size() - 1);
    MultiPoly acc;
    for (size_t k = u.size(); k-- > 1;) {
        acc = (k + 1 == u.size()) ? u[k] : acc.scaled(c) + u[k];
        q[k - 1] = acc;
    }
    return q;
}

// coefficients of u(c + t) as a polynomial in t
Coeffs shift(const Coeffs& u, const Scalar& c) {
    Coeffs rest = u, out;
    while (!rest.empty()) {
        // divide rest by (x - c): horner
        Coeffs q(rest.size() > 1 ? rest.size() - 1 : 0);
        MultiPoly acc = rest.back();
        for (size_t k = rest.size() - 1; k-- > 0;) {
            if (k + 1 <= q.size()) q[k] = acc;
            acc = acc.scaled(c) + rest[k];
        }
        out.push_back(acc);  // remainder = rest(c)
        rest = std::move(q);
        trim(rest);
        if (rest.empty()) break;
    }
    trim(out);
    return out;
}

long binom(int nn, int kk) {
    long r = 1;
    for (int t = 1; t <= kk; ++t) r = r * (nn - t + 1) / t;
    return r;
}

const Scalar kI = Scalar::i();
const Scalar kMinusI = Scalar(Rat(0), Rat(-1));

} // namespace

RatXi::RatXi(std::vector<MultiPoly> num, int a, int b)
    : num_(std::move(num)), a_(a), b_(b) {
    normalize();
}

void RatXi::normalize() {
    trim(num_);
    if (num_.empty()) {
        a_ = b_ = 0;
        return;
    }
    while (a_ > 0 && eval_at(num_, kI).is_zero()) {
        num_ = divide_root(num_, kI);
        trim(num_);
        --a_;
    }
    while (b_ > 0 && eval_at(num_, kMinusI).is_zero()) {
        num_ = divide_root(num_, kMinusI);
        trim(num_);
        --b_;
    }
}

RatXi RatXi::constant(Scalar c) { return poly(MultiPoly::constant(std::move(c))); }

RatXi RatXi::poly(MultiPoly p) {
    if (p.is_zero()) return {};
    return RatXi({std::move(p)}, 0, 0);
}

RatXi RatXi::xin() {
    return RatXi({MultiPoly{}, MultiPoly::constant(Scalar(1))}, 0, 0);
}

RatXi RatXi::pole(int a, int b) {
    return RatXi({MultiPoly::constant(Scalar(1))}, a, b);
}

RatXi RatXi::pole_term(MultiPoly c, int upper, int lower) {
    return RatXi({std::move(c)}, upper, lower);
}

RatXi RatXi::make(std::vector<MultiPoly> num, int a, int b) {
    return RatXi(std::move(num), a, b);
}

std::vector<MultiPoly> RatXi::lifted(int a, int b) const {
    Coeffs u = num_;
    const Coeffs xm_i = {MultiPoly::constant(kMinusI), MultiPoly::constant(Scalar(1))};
    const Coeffs xp_i = {MultiPoly::constant(kI), MultiPoly::constant(Scalar(1))};
    for (int k = a_; k < a; ++k) u = mul(u, xm_i);
    for (int k = b_; k < b; ++k) u = mul(u, xp_i);
    return u;
}

RatXi RatXi::operator+(const RatXi& o) const {
    int a = std::max(a_, o.a_), b = std::max(b_, o.b_);
    return RatXi(add(lifted(a, b), o.lifted(a, b)), a, b);
}

RatXi& RatXi::operator+=(const RatXi& o) {
    *this = *this + o;
    return *this;
}

RatXi RatXi::operator-() const { return RatXi(scal(num_, Scalar(-1)), a_, b_); }

RatXi RatXi::operator-(const RatXi& o) const { return *this + (-o); }

RatXi RatXi::operator*(const RatXi& o) const {
    return RatXi(mul(num_, o.num_), a_ + o.a_, b_ + o.b_);
}

RatXi RatXi::scaled(const Scalar& c) const { return RatXi(scal(num_, c), a_, b_); }

RatXi RatXi::pscaled(const MultiPoly& p) const {
    Coeffs r;
    r.reserve(num_.size());
    for (const auto& q : num_) r.push_back(q * p);
    return RatXi(std::move(r), a_, b_);
}

RatXi RatXi::deriv_xin() const {
    Coeffs dn;
    for (size_t k = 1; k < num_.size(); ++k) dn.push_back(num_[k].scaled(Scalar((long)k)));
    if (a_ == 0 && b_ == 0) return RatXi(std::move(dn), 0, 0);
    const Coeffs xm_i = {MultiPoly::constant(kMinusI), MultiPoly::constant(Scalar(1))};
    const Coeffs xp_i = {MultiPoly::constant(kI), MultiPoly::constant(Scalar(1))};
    Coeffs t1 = mul(dn, mul(xm_i, xp_i));
    Coeffs w = add(scal(xp_i, Scalar((long)a_)), scal(xm_i, Scalar((long)b_)));
    Coeffs t2 = scal(mul(num_, w), Scalar(-1));
    return RatXi(add(t1, t2), a_ + 1, b_ + 1);
}

RatXi RatXi::deriv_sym(const SymbolId& s) const {
    Coeffs r;
    r.reserve(num_.size());
    for (const auto& p : num_) r.push_back(p.derivative(s));
    return RatXi(std::move(r), a_, b_);
}

RatXi RatXi::substituted(const std::map<SymbolId, Scalar>& env) const {
    Coeffs r;
    r.reserve(num_.size());
    for (const auto& p : num_) r.push_back(p.substituted(env));
    return RatXi(std::move(r), a_, b_);
}

std::vector<MultiPoly> RatXi::upper_series(int count) const {
    Coeffs sh = shift(num_, kI);
    // series of (2i + t)^{-b}
    Coeffs ser;
    ser.reserve(count);
    Scalar inv2i = (Scalar(2) * kI).inverse();
    Scalar lead(1);
    for (int k = 0; k < b_; ++k) lead *= inv2i;
    for (int m = 0; m < count; ++m) {
        Scalar c = lead * Scalar(binom(b_ + m - 1, m));
        if (m % 2) c = -c;
        Scalar p(1);
        for (int k = 0; k < m; ++k) p *= inv2i;
        ser.push_back(MultiPoly::constant(b_ == 0 ? (m == 0 ? Scalar(1) : Scalar(0)) : c * p));
    }
    Coeffs out(count);
    for (int k = 0; k < count; ++k) {
        for (int m = 0; m <= k; ++m) {
            if (m < (int)sh.size() && (k - m) < (int)ser.size())
                out[k] += sh[m] * ser[k - m];
        }
    }
    return out;
}

RatXi::Parts RatXi::principal_parts() const {
    // divide num by D = (x-i)^a (x+i)^b  (monic)
    Coeffs D = {MultiPoly::constant(Scalar(1))};
    const Coeffs xm_i = {MultiPoly::constant(kMinusI), MultiPoly::constant(Scalar(1))};
    const Coeffs xp_i = {MultiPoly::constant(kI), MultiPoly::constant(Scalar(1))};
    for (int k = 0; k < a_; ++k) D = mul(D, xm_i);
    for (int k = 0; k < b_; ++k) D = mul(D, xp_i);

    Coeffs rem = num_;
    int dd = (int)D.size() - 1;
    Coeffs q(num_.size() > (size_t)dd ? num_.size() - dd : 0);
    while ((int)rem.size() - 1 >= dd && !rem.empty() && dd > 0) {
        int k = (int)rem.size() - 1 - dd;
        MultiPoly c = rem.back();
        q[k] = c;
        for (int j2 = 0; j2 <= dd; ++j2) rem[k + j2] = rem[k + j2] - c * D[j2];
        trim(rem);
    }
    Parts parts;
    if (dd == 0) {
        parts.poly = *this;
        return parts;
    }
    parts.poly = RatXi(std::move(q), 0, 0);
    RatXi proper(rem, a_, b_);
    if (proper.is_zero() || proper.a_ == 0) {
        parts.lower = proper;
        return parts;
    }
    Coeffs ser = proper.upper_series(proper.a_);
    RatXi up;
    for (int m = 0; m < (int)ser.size() && proper.a_ - m > 0; ++m) {
        if (ser[m].is_zero()) continue;
        up += RatXi({ser[m]}, proper.a_ - m, 0);
    }
    parts.upper = up;
    parts.lower = proper - up;
    if (parts.lower.a_ != 0)
        throw Error("principal part extraction left an upper pole");
    return parts;
}

MultiPoly RatXi::residue_at_i() const {
    if (a_ == 0) return {};
    return upper_series(a_)[a_ - 1];
}

MultiPoly RatXi::line_integral() const {
    if (is_zero()) return {};
    if (!decays()) throw NonDecaying("integrand does not decay at least like |xi_n|^-2");
    MultiPoly res = residue_at_i();
    return (res * MultiPoly::symbol(sym_pi())).scaled(Scalar(2) * kI);
}

std::complex<double> RatXi::eval(double xin) const {
    std::complex<double> n{0.0, 0.0};
    std::complex<double> x{xin, 0.0};
    for (auto it = num_.rbegin(); it != num_.rend(); ++it)
        n = n * x + it->constant_value().to_complex();
    std::complex<double> i{0.0, 1.0};
    std::complex<double> d{1.0, 0.0};
    for (int k = 0; k < a_; ++k) d *= (x - i);
    for (int k = 0; k < b_; ++k) d *= (x + i);
    return n / d;
}

std::string RatXi::str(int n_alias) const {
    if (is_zero()) return "0";
    std::string ns;
    bool multi = false;
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k].is_zero()) continue;
        if (!ns.empty()) { ns += " + "; multi = true; }
        std::string c = num_[k].str(n_alias);
        bool needs_paren = c.find(' ') != std::string::npos;
        if (needs_paren) c = "(" + c + ")";
        if (k == 0) ns += c;
        else {
            std::string x = k == 1 ? "xin" : "xin^" + std::to_string(k);
            ns += (c == "1" ? x : c + "*" + x);
        }
    }
    if (a_ == 0 && b_ == 0) return ns;
    if (multi || ns.find(' ') != std::string::npos) ns = "(" + ns + ")";
    std::string den;
    if (a_ > 0) den += a_ == 1 ? "(xin-i)" : "(xin-i)^" + std::to_string(a_);
    if (b_ > 0) den += b_ == 1 ? "(xin+i)" : "(xin+i)^" + std::to_string(b_);
    return ns + "/" + (a_ > 0 && b_ > 0 ? "(" + den + ")" : den);
}

RatXi ratxi_arith(const RatXi& lhs, const RatXi& rhs, RatOp op) {
    return op == RatOp::Add ? lhs + rhs : lhs * rhs;
}

MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return lhs + rhs;
        case PolyOp::Sub: return lhs - rhs;
        default: return lhs * rhs;
    }
}

} // namespace wres
