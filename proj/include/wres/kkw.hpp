#pragma once

#include "wres/symcalc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wres {

/** One summand of the boundary-term expansion. */
struct CaseSpec {
    std::string id;   // aI, aII, aIII, b, c
    int r = -1;       // symbol order of the projected factor
    int l = -1;       // symbol order of the plain factor
    int j = 0;        // normal x-derivative count on the projected side
    int k = 0;        // normal xi-derivative count swap index
    int alpha = 0;    // tangential multi-index order |alpha|
};

// The five boundary cases for (n, p1, p2) in {(4,1,1), (6,1,3)};
// anything else raises UnsupportedConfiguration.
std::vector<CaseSpec> enumerate_cases(int n, int p1, int p2);

/**
 * Exact boundary density per unit boundary volume: a polynomial in
 * {h1, thetap_n} carrying one power of pi and the Omega symbol.
 */
struct BoundaryDensity {
    int n = 0;
    MultiPoly poly;

    bool operator==(const BoundaryDensity& o) const { return poly == o.poly; }
    std::string str() const { return poly.str(n); }
};

struct TermEntry {
    std::string source;
    std::string value;
};

// coefficient (-i)^{|a|+j+k+1}/(a!(j+k+1)!) x trace(d^j_xn d^a_xi' d^k_xin
// pi+ sigma_r x d^a_x' d^{j+1}_xin d^k_xn sigma_l), line-integrated in xi_n
// and integrated over the tangential sphere.
BoundaryDensity evaluate_case(const CaseSpec& cs, const JetSym& A, const JetSym& B, int n,
                              std::vector<TermEntry>* ledger = nullptr);

BoundaryDensity boundary_total(const std::vector<BoundaryDensity>& cases);

// --- interior -------------------------------------------------------------

enum class InteriorVariant { AdjointPair, Square };

struct InteriorDensity {
    MultiPoly prefactor;   // (n-2)(4 pi)^{n/2} / (n/2 - 1)!  with formal pi
    MultiPoly integrand;   // tr[(1/6)s + E] expanded in symbols
};

MultiPoly wres_prefactor(int n);
InteriorDensity interior_integrand(InteriorVariant variant, int n);

// --- suites ----------------------------------------------------------------

enum class SuiteId { Kkw4, Kkw4Sq, Kkw6, Kkw6Cu, Interior, Lemmas, Spectral };

std::vector<std::string> suite_names();
SuiteId suite_from_name(const std::string& name);
std::string suite_name(SuiteId id);

struct CaseRecord {
    std::string id;
    std::string expected;
    std::string computed;
    bool match = false;
    std::vector<TermEntry> terms;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseRecord> records;
    int passed = 0;
    int failed = 0;
    bool all_match() const { return failed == 0; }
};

struct SuiteOptions {
    int parallel = 1;
    // test hook: scales b0^2 before symbol assembly (mismatch drills)
    std::optional<Scalar> b02_scale;
};

SuiteReport run_suite(SuiteId id, const SuiteOptions& opts = {});

void finalize_counts(SuiteReport& rep);

} // namespace wres
