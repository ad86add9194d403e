#pragma once

#include <string>
#include <vector>

#include "ostrowski/bounds.hpp"
#include "ostrowski/corpus.hpp"

namespace ostrowski {

/// Inequalities that can be checked. The *_alpha1 ids are the alpha = 1
/// corollaries, set is the geometrically convex corollary, mu1 the printed
/// mu = 1 corollary, mm the Young-split corollary and remark_q1 its q = 1 case.
enum class TheoremId { Classical, T22, T22Alpha1, T24, T24Alpha1, T26, T26Alpha1, Set, Mu1, MM, RemarkQ1 };

std::string to_string(TheoremId id);
/// Throws DomainError for an unknown name.
TheoremId parse_theorem_id(const std::string& name);
const std::vector<TheoremId>& all_theorems();

/// Which BoundParams fields a theorem reads; the rest are reported as n/a.
struct TheoremTraits {
    bool uses_alpha = false;
    bool uses_m = false;
    bool uses_q = false;
    bool uses_split = false;  ///< u, v
    bool fixed_alpha_one = false;
    bool fixed_mu_one = false;
    bool fixed_q_one = false;
};

TheoremTraits traits(TheoremId id);

struct Verdict {
    std::string theorem_id;
    std::string function_id;
    BoundParams params;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  ///< rhs - lhs
    bool holds = false;   ///< margin >= -tol_margin
    double tol_margin = 0.0;
};

/// The signed Ostrowski expression
///   ((x-a)^mu + (b-x)^mu)/(b-a) f(x) - Gamma(mu+1)/(b-a) [J_{x-}^mu f(a) + J_{x+}^mu f(b)]
/// with J_{x-}^mu f(a) = 1/Gamma(mu) int_a^x (t-a)^(mu-1) f and
/// J_{x+}^mu f(b) = 1/Gamma(mu) int_x^b (b-t)^(mu-1) f. Empty-interval integrals are 0.
double ostrowski_signed(const FunctionSpec& f, const FracParams& frac, const QuadConfig& cfg = {});

/// |ostrowski_signed|
double ostrowski_lhs(const FunctionSpec& f, const FracParams& frac, const QuadConfig& cfg = {});

/// (x-a)^(mu+1)/(b-a) int_0^1 t^mu f'(tx+(1-t)a) dt - (b-x)^(mu+1)/(b-a) int_0^1 t^mu f'(tx+(1-t)b) dt
double lemma_rhs(const FunctionSpec& f, const FracParams& frac, const QuadConfig& cfg = {});

/// |ostrowski_signed - lemma_rhs|
double lemma_identity_residual(const FunctionSpec& f, const FracParams& frac,
                               const QuadConfig& cfg = {});

/// |f(x) - 1/(b-a) int_a^b f|
double classical_lhs(const FunctionSpec& f, double a, double b, double x, const QuadConfig& cfg = {});

/// Every hypothesis of `id` that (f, bp) fails; empty when the check may run.
std::vector<std::string> hypothesis_failures(TheoremId id, const FunctionSpec& f,
                                             const BoundParams& bp);

/// Right-hand side of `id` at bp.
double theorem_rhs(TheoremId id, const BoundParams& bp);

/// Assembles a Verdict from an already computed lhs; tol_margin = 100 * cfg.abs_tol.
Verdict make_verdict(TheoremId id, const FunctionSpec& f, const BoundParams& bp, double lhs,
                     const QuadConfig& cfg);

/// Checks one inequality. Throws HypothesisError listing every failed hypothesis.
Verdict verify_theorem(TheoremId id, const FunctionSpec& f, const BoundParams& bp,
                       const QuadConfig& cfg = {});

/// Classical Ostrowski inequality with M = f.M.
Verdict verify_classical(const FunctionSpec& f, double a, double b, double x,
                         const QuadConfig& cfg = {});

}  // namespace ostrowski
