#pragma once

#include "wres/ratxi.hpp"

#include <functional>
#include <map>
#include <vector>

namespace wres {

/**
 * Endomorphism of Lambda*(R^n) with RatXi entries, stored as a sparse
 * 2^n x 2^n table indexed by exterior-algebra basis subsets.
 *
 * The two Clifford actions are modeled through exterior/interior
 * multiplication, so the generator relations
 *
 *     c_i c_j + c_j c_i = -2 delta_ij
 *     cb_i cb_j + cb_j cb_i = +2 delta_ij
 *     c_i cb_j + cb_j c_i = 0
 *
 * are theorems of the representation rather than axioms.
 */
class CliffordElem {
public:
    explicit CliffordElem(int n = 0) : n_(n), rows_(size_t(1) << n) {}

    static CliffordElem identity(int n, RatXi v = RatXi::constant(Scalar(1)));
    static CliffordElem zero(int n) { return CliffordElem(n); }

    int dim() const { return n_; }
    int order() const { return 1 << n_; }
    bool is_zero() const;

    void add_entry(int row, int col, const RatXi& v);
    const std::map<int, RatXi>& row(int r) const { return rows_[r]; }

    CliffordElem operator+(const CliffordElem& o) const;
    CliffordElem operator-(const CliffordElem& o) const;
    CliffordElem operator-() const;
    CliffordElem operator*(const CliffordElem& o) const;
    CliffordElem& operator+=(const CliffordElem& o);

    CliffordElem scaled(const Scalar& c) const;
    CliffordElem scaled(const MultiPoly& p) const;
    CliffordElem scaled(const RatXi& r) const;

    bool operator==(const CliffordElem& o) const;
    bool operator!=(const CliffordElem& o) const { return !(*this == o); }

    RatXi trace() const;

    CliffordElem map_entries(const std::function<RatXi(const RatXi&)>& f) const;
    CliffordElem deriv_xin() const;
    CliffordElem deriv_xi(int j) const;  // tangential covector component
    CliffordElem substituted(const std::map<SymbolId, Scalar>& env) const;

    // Split into labeled parts by coefficient content; the parts sum back to
    // the element. Classes: "const" (no h1/theta symbols), "h1", "theta",
    // "thetap", "mixed".
    std::vector<std::pair<std::string, CliffordElem>> split_by_class() const;

private:
    int n_;
    std::vector<std::map<int, RatXi>> rows_;
};

/** The generator family and the covector actions built from it. */
class CliffordAlgebra {
public:
    // Guards against the 2^n blowup: throws DimensionTooLarge unless 2<=n<=8.
    explicit CliffordAlgebra(int n);

    int dim() const { return n_; }
    const CliffordElem& c(int j) const { return c_[j - 1] ; }   // 1-based
    const CliffordElem& cb(int j) const { return cb_[j - 1]; }
    const CliffordElem& identity() const { return id_; }

    // Linear extension: sum_j coeff_j * c(e_j) (or cb).
    CliffordElem act(const std::vector<MultiPoly>& coeffs, bool bar = false) const;

    CliffordElem c_xiprime() const;             // c(xi') = sum_{j<n} xi_j c(e_j)
    CliffordElem c_dxn() const { return c_[n_ - 1]; }
    CliffordElem c_xi() const;                  // c(xi') + xin c(dxn)

    // Boundary-chart realization of the normal jet of c(xi'): (h'(0)/2) c(xi').
    CliffordElem dxn_cxi_realization() const;

    CliffordElem theta_action(bool bar) const;  // cb(theta) or c(theta) by flag
    CliffordElem thetap_action() const;         // c(theta')

private:
    int n_;
    std::vector<CliffordElem> c_, cb_;
    CliffordElem id_;
};

struct CovectorExpr {
    std::vector<MultiPoly> coeffs;
    bool bar = false;
};

CliffordElem act_covector(const CliffordAlgebra& alg, const CovectorExpr& v);

// Decompose into the word basis {c_S cb_T} and render with c's before cb's,
// indices ascending. Entries must be constant in xi (else falls back to a
// matrix dump).
std::string clifford_word_str(const CliffordAlgebra& alg, const CliffordElem& e, int n_alias = 0);

} // namespace wres
