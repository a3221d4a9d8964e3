#ifndef SYLV_JSON_HPP
#define SYLV_JSON_HPP

#include <json.hpp>

#include "sylv/field.hpp"
#include "sylv/poly.hpp"
#include "sylv/syminterp.hpp"
#include "sylv/verify.hpp"

namespace sylv {

using Json = nlohmann::ordered_json;

/// {"coeffs": ["c0", "c1", ...]}, ascending powers.
template <ExactField F>
Json poly_to_json(const UniPoly<F>& p);

/// Inverse of poly_to_json; throws std::invalid_argument on a malformed
/// document.
template <ExactField F>
UniPoly<F> poly_from_json(const Json& j);

/// {"B": [...], "d": d, "coeffs": {"<mask>": "c", ...}} with decimal
/// bitmask keys over the index range of B.
template <ExactField F>
Json sym_to_json(const SymPolyInBasis<F>& h);

template <ExactField F>
SymPolyInBasis<F> sym_from_json(const Json& j);

/// {m, n, p, q, seed, branch, pass, expected, computed, d, k, sigma, c, e,
///  forms_agree, degree_ok, condition_conflict}.
template <ExactField F>
Json report_to_json(const BranchReport<F>& r);

template <ExactField F>
BranchReport<F> report_from_json(const Json& j);

Json check_to_json(const CheckResult& c);
CheckResult check_from_json(const Json& j);

/// {"reports": [...], "checks": [...], "summary": {instances, reports,
///  checks, failures}}.
template <ExactField F>
Json suite_to_json(const SuiteResult<F>& s);

template <ExactField F>
SuiteResult<F> suite_from_json(const Json& j);

}  // namespace sylv

#endif  // SYLV_JSON_HPP
