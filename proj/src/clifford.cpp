#include "wres/clifford.hpp"
#include "wres/errors.hpp"

#include <bit>

namespace wres {

CliffordElem CliffordElem::identity(int n, RatXi v) {
    CliffordElem e(n);
    if (v.is_zero()) return e;
    for (int s = 0; s < (1 << n); ++s) e.rows_[s].emplace(s, v);
    return e;
}

bool CliffordElem::is_zero() const {
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

void CliffordElem::add_entry(int row, int col, const RatXi& v) {
    if (v.is_zero()) return;
    auto& r = rows_[row];
    auto it = r.find(col);
    if (it == r.end()) {
        r.emplace(col, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) r.erase(it);
    }
}

CliffordElem CliffordElem::operator+(const CliffordElem& o) const {
    CliffordElem e = *this;
    e += o;
    return e;
}

CliffordElem& CliffordElem::operator+=(const CliffordElem& o) {
    for (int r = 0; r < (int)o.rows_.size(); ++r)
        for (const auto& [c, v] : o.rows_[r]) add_entry(r, c, v);
    return *this;
}

CliffordElem CliffordElem::operator-() const { return scaled(Scalar(-1)); }

CliffordElem CliffordElem::operator-(const CliffordElem& o) const { return *this + (-o); }

CliffordElem CliffordElem::operator*(const CliffordElem& o) const {
    CliffordElem e(n_);
    for (int r = 0; r < (int)rows_.size(); ++r) {
        for (const auto& [k, v] : rows_[r]) {
            for (const auto& [c, w] : o.rows_[k]) e.add_entry(r, c, v * w);
        }
    }
    return e;
}

CliffordElem CliffordElem::scaled(const Scalar& c) const {
    return map_entries([&](const RatXi& v) { return v.scaled(c); });
}

CliffordElem CliffordElem::scaled(const MultiPoly& p) const {
    return map_entries([&](const RatXi& v) { return v.pscaled(p); });
}

CliffordElem CliffordElem::scaled(const RatXi& r) const {
    return map_entries([&](const RatXi& v) { return v * r; });
}

bool CliffordElem::operator==(const CliffordElem& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
}

RatXi CliffordElem::trace() const {
    RatXi t;
    for (int r = 0; r < (int)rows_.size(); ++r) {
        auto it = rows_[r].find(r);
        if (it != rows_[r].end()) t += it->second;
    }
    return t;
}

CliffordElem CliffordElem::map_entries(const std::function<RatXi(const RatXi&)>& f) const {
    CliffordElem e(n_);
    for (int r = 0; r < (int)rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r]) e.add_entry(r, c, f(v));
    return e;
}

CliffordElem CliffordElem::deriv_xin() const {
    return map_entries([](const RatXi& v) { return v.deriv_xin(); });
}

CliffordElem CliffordElem::deriv_xi(int j) const {
    SymbolId s = sym_xi(j);
    return map_entries([&](const RatXi& v) { return v.deriv_sym(s); });
}

CliffordElem CliffordElem::substituted(const std::map<SymbolId, Scalar>& env) const {
    return map_entries([&](const RatXi& v) { return v.substituted(env); });
}

namespace {

enum ClassBits { kH1 = 1, kTheta = 2, kThetaP = 4 };

int mono_class(const Monomial& m) {
    int bits = 0;
    for (const auto& [s, e] : m) {
        if (s.kind == Sym::H1) bits |= kH1;
        else if (s.kind == Sym::Theta || s.kind == Sym::T) bits |= kTheta;
        else if (s.kind == Sym::ThetaP || s.kind == Sym::Tp) bits |= kThetaP;
    }
    return bits;
}

const char* class_name(int bits) {
    switch (bits) {
        case 0: return "const";
        case kH1: return "h1";
        case kTheta: return "theta";
        case kThetaP: return "thetap";
        default: return "mixed";
    }
}

} // namespace

std::vector<std::pair<std::string, CliffordElem>> CliffordElem::split_by_class() const {
    std::vector<std::pair<std::string, CliffordElem>> out;
    for (int target : {0, kH1, kTheta, kThetaP, -1}) {
        CliffordElem part(n_);
        for (int r = 0; r < (int)rows_.size(); ++r) {
            for (const auto& [c, v] : rows_[r]) {
                std::vector<MultiPoly> kept(v.num().size());
                for (size_t k = 0; k < v.num().size(); ++k) {
                    kept[k] = v.num()[k].filtered([&](const Monomial& m) {
                        int bits = mono_class(m);
                        if (target < 0)
                            return bits != 0 && bits != kH1 && bits != kTheta && bits != kThetaP;
                        return bits == target;
                    });
                }
                part.add_entry(r, c, RatXi::make(std::move(kept), v.upper_order(), v.lower_order()));
            }
        }
        if (!part.is_zero()) out.emplace_back(class_name(target < 0 ? 7 : target), part);
    }
    return out;
}

// --- generators -----------------------------------------------------------

namespace {

int sign_below(int subset, int j) {
    int mask = (1 << j) - 1;
    return std::popcount(unsigned(subset & mask)) % 2 ? -1 : 1;
}

CliffordElem make_generator(int n, int j, bool bar) {
    CliffordElem e(n);
    for (int s = 0; s < (1 << n); ++s) {
        int sg = sign_below(s, j);
        if (!((s >> j) & 1)) {
            e.add_entry(s | (1 << j), s, RatXi::constant(Scalar(sg)));            // exterior
        } else {
            e.add_entry(s & ~(1 << j), s, RatXi::constant(Scalar(bar ? sg : -sg))); // interior
        }
    }
    return e;
}

} // namespace

CliffordAlgebra::CliffordAlgebra(int n) : n_(n), id_(CliffordElem::identity(n)) {
    if (n < 2 || n > 8) throw DimensionTooLarge("Clifford model supports 2 <= n <= 8");
    for (int j = 0; j < n; ++j) {
        c_.push_back(make_generator(n, j, false));
        cb_.push_back(make_generator(n, j, true));
    }
}

CliffordElem CliffordAlgebra::act(const std::vector<MultiPoly>& coeffs, bool bar) const {
    if ((int)coeffs.size() != n_) throw Error("covector coefficient count != n");
    CliffordElem e(n_);
    for (int j = 0; j < n_; ++j) {
        if (coeffs[j].is_zero()) continue;
        e += (bar ? cb_[j] : c_[j]).scaled(coeffs[j]);
    }
    return e;
}

CliffordElem CliffordAlgebra::c_xiprime() const {
    std::vector<MultiPoly> coeffs(n_);
    for (int j = 1; j < n_; ++j) coeffs[j - 1] = MultiPoly::symbol(sym_xi(j));
    return act(coeffs);
}

CliffordElem CliffordAlgebra::c_xi() const {
    return c_xiprime() + c_dxn().scaled(RatXi::xin());
}

CliffordElem CliffordAlgebra::dxn_cxi_realization() const {
    return c_xiprime().scaled(MultiPoly::symbol(sym_h1(), Scalar(rat(1, 2))));
}

CliffordElem CliffordAlgebra::theta_action(bool bar) const {
    std::vector<MultiPoly> coeffs(n_);
    for (int j = 1; j <= n_; ++j) coeffs[j - 1] = MultiPoly::symbol(sym_theta(j));
    return act(coeffs, bar);
}

CliffordElem CliffordAlgebra::thetap_action() const {
    std::vector<MultiPoly> coeffs(n_);
    for (int j = 1; j <= n_; ++j) coeffs[j - 1] = MultiPoly::symbol(sym_thetap(j));
    return act(coeffs, false);
}

CliffordElem act_covector(const CliffordAlgebra& alg, const CovectorExpr& v) {
    return alg.act(v.coeffs, v.bar);
}

// --- word-basis pretty printer --------------------------------------------

namespace {

CliffordElem word(const CliffordAlgebra& alg, unsigned S, unsigned T) {
    CliffordElem w = alg.identity();
    for (int j = 1; j <= alg.dim(); ++j)
        if (S & (1u << (j - 1))) w = w * alg.c(j);
    for (int j = 1; j <= alg.dim(); ++j)
        if (T & (1u << (j - 1))) w = w * alg.cb(j);
    return w;
}

CliffordElem word_inverse(const CliffordAlgebra& alg, unsigned S, unsigned T) {
    // reversed order, cb's first; signs from c^2=-1, cb^2=+1
    CliffordElem w = alg.identity();
    for (int j = alg.dim(); j >= 1; --j)
        if (T & (1u << (j - 1))) w = w * alg.cb(j);
    for (int j = alg.dim(); j >= 1; --j)
        if (S & (1u << (j - 1))) w = w * alg.c(j);
    if (std::popcount(S) % 2) w = w.scaled(Scalar(-1));  // each c_j^-1 = -c_j
    return w;
}

} // namespace

std::string clifford_word_str(const CliffordAlgebra& alg, const CliffordElem& e, int n_alias) {
    const int n = alg.dim();
    const Scalar inv_dim = Scalar(rat(1, 1 << n));
    std::string out;
    for (unsigned S = 0; S < (1u << n); ++S) {
        for (unsigned T = 0; T < (1u << n); ++T) {
            RatXi coeff = (word_inverse(alg, S, T) * e).trace().scaled(inv_dim);
            if (coeff.is_zero()) continue;
            std::string cs = coeff.str(n_alias);
            if (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos)
                cs = "(" + cs + ")";
            std::string w;
            for (int j = 1; j <= n; ++j)
                if (S & (1u << (j - 1))) w += "c(e" + std::to_string(j) + ")";
            for (int j = 1; j <= n; ++j)
                if (T & (1u << (j - 1))) w += "cb(e" + std::to_string(j) + ")";
            if (!out.empty()) out += " + ";
            out += w.empty() ? cs : (cs == "1" ? w : cs + "*" + w);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace wres
