#ifndef SYLV_VERIFY_HPP
#define SYLV_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylv/field.hpp"
#include "sylv/poly.hpp"

namespace sylv {

/// A pair of root sets with their monic polynomials f and g.
template <ExactField F>
struct Instance {
    std::uint64_t seed = 0;
    bool disjoint = false;
    RootSet<F> a;
    RootSet<F> b;
    UniPoly<F> f;
    UniPoly<F> g;

    long m() const { return static_cast<long>(a.size()); }
    long n() const { return static_cast<long>(b.size()); }
};

template <ExactField F>
Instance<F> make_instance(RootSet<F> a, RootSet<F> b, std::uint64_t seed = 0);

/// Deterministic pseudo-random instance with pairwise-distinct integer roots
/// in [-range, range]; A and B are disjoint when requested. Collisions are
/// resampled. Throws std::invalid_argument when the range cannot hold the
/// requested roots or m, n < 1.
template <ExactField F>
Instance<F> gen_instance(std::uint64_t seed, long m, long n, long range, bool disjoint = false);

/// The instance with the roles of (A, f) and (B, g) exchanged.
template <ExactField F>
Instance<F> swapped(const Instance<F>& inst);

/// Right-hand side of the double-sum description for m <= n.
template <ExactField F>
struct Theorem1Rhs {
    std::string branch;
    UniPoly<F> value;
    /// The second displayed form, present only for n <= d <= m+n-1.
    std::optional<UniPoly<F>> second_form;
};

/// Throws std::invalid_argument when m > n or (p, q) is out of range.
template <ExactField F>
Theorem1Rhs<F> theorem1_expected(const Instance<F>& inst, long p, long q);

template <ExactField F>
struct BranchReport {
    long m = 0, n = 0, p = 0, q = 0;
    long d = 0, k = 0;
    long sigma = 0, c = 0, e = 0;
    std::uint64_t seed = 0;
    std::string branch;
    UniPoly<F> expected;
    UniPoly<F> computed;
    bool pass = false;
    /// Both displayed forms agree (always true outside the two-form branch).
    bool forms_agree = true;
    /// deg expected and deg computed are at most d.
    bool degree_ok = true;
    /// For p = 0, whether the first-branch condition of the double-sum table
    /// and that of the single-sum table disagree on this (m, n, d).
    bool condition_conflict = false;

    bool ok() const { return pass && forms_agree && degree_ok && !condition_conflict; }
};

/// Compares Syl_{p,q} against the case description for every (p, q);
/// instances with m > n go through the double-sum symmetry first.
template <ExactField F>
std::vector<BranchReport<F>> check_theorem1(const Instance<F>& inst);

/// Outcome of one identity check on one instance.
struct CheckResult {
    std::string check;
    std::string params;
    long m = 0, n = 0;
    std::uint64_t seed = 0;
    bool pass = false;
    std::string detail;
};

/// Single-sum/double-sum propositions of the d <= n-1 and d >= max(m, n)
/// regimes: the dsmall reduction, the Sres form, the case corollaries, the
/// dbig decomposition, Syl_{m,d-m} = +-F_k f, and H_{A'} on grids.
template <ExactField F>
std::vector<CheckResult> check_section_props(const Instance<F>& inst);

/// Sign relation between single sums, both symmetry laws, the product
/// identity from symmetric interpolation, MSyl subset sum versus
/// determinant on certification grids, the top-coefficient extraction of
/// MSyl, and the closing single-sum table.
template <ExactField F>
std::vector<CheckResult> check_misc(const Instance<F>& inst);

/// Exchange identity for every valid (p, r) with one symbolic variable and
/// the remaining r-1 variables on a certification grid, plus the
/// reconciliation of the two denominator orientations.
template <ExactField F>
std::vector<CheckResult> check_exchange(const Instance<F>& inst);

/// Bezout identity, agreement of the three cofactor constructions,
/// cofactor symmetry, Schur-determinant forms, the x^n special case and the
/// Cauchy-Binet factorization.
template <ExactField F>
std::vector<CheckResult> check_cofactors(const Instance<F>& inst);

/// Closing table for Syl_{0,d}, 0 <= d <= n: label of the applicable branch
/// ("sres", "zero", "f", "g").
std::string single_sum_branch(long m, long n, long d);

/// First-branch predicate of the double-sum description: 0 <= d < m or
/// m = d < n.
bool theorem1_sres_condition(long m, long n, long d);

/// First-branch predicate of the single-sum table: d <= min(m-1, n) or
/// d = m < n.
bool single_sum_sres_condition(long m, long n, long d);

/// Distinct integer abscissae for `vars` variables, `per_var` each:
/// consecutive integers from 0 upwards, skipping the given roots, with
/// disjoint sets for different variables.
template <ExactField F>
std::vector<std::vector<F>> certification_grid(const Instance<F>& inst, std::size_t vars, std::size_t per_var);

struct SuiteConfig {
    long min_m = 1, max_m = 5;
    long min_n = 1, max_n = 5;
    /// Restrict to m <= n.
    bool ordered_only = false;
    long seeds = 5;
    std::uint64_t first_seed = 0;
    long range = 10;
    bool disjoint = false;
    bool theorem1 = true;
    bool section_props = true;
    bool misc = true;
    bool exchange = true;
    bool cofactors = true;
};

template <ExactField F>
struct SuiteResult {
    std::vector<BranchReport<F>> reports;
    std::vector<CheckResult> checks;
    std::size_t instances = 0;

    std::size_t failures() const;
    bool all_pass() const { return failures() == 0; }
};

/// Runs the configured checks over all (m, n, seed) in deterministic order.
template <ExactField F>
SuiteResult<F> run_suite(const SuiteConfig& config);

}  // namespace sylv

#endif  // SYLV_VERIFY_HPP
