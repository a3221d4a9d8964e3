#include "sylv/json.hpp"

#include <stdexcept>
#include <string>

namespace sylv {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("JSON object lacks \"") + key + "\"");
    return j.at(key);
}

template <ExactField F>
F scalar_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("scalars are encoded as strings, got " + j.dump());
    return F::parse(j.get<std::string>());
}

template <ExactField F>
Json scalars_to_json(std::span<const F> values) {
    Json out = Json::array();
    for (const F& v : values) out.push_back(v.to_string());
    return out;
}

template <ExactField F>
std::vector<F> scalars_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of scalars, got " + j.dump());
    std::vector<F> out;
    for (const Json& e : j) out.push_back(scalar_from_json<F>(e));
    return out;
}

long long_from_json(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("\"") + key + "\" must be an integer");
    return v.get<long>();
}

bool bool_from_json(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) throw std::invalid_argument(std::string("\"") + key + "\" must be a boolean");
    return v.get<bool>();
}

std::string string_from_json(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw std::invalid_argument(std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

}  // namespace

template <ExactField F>
Json poly_to_json(const UniPoly<F>& p) {
    return Json{{"coeffs", scalars_to_json<F>(p.coeffs())}};
}

template <ExactField F>
UniPoly<F> poly_from_json(const Json& j) {
    return UniPoly<F>(scalars_from_json<F>(field(j, "coeffs")));
}

template <ExactField F>
Json sym_to_json(const SymPolyInBasis<F>& h) {
    Json coeffs = Json::object();
    for (const auto& [mask, c] : h.coeffs()) coeffs[std::to_string(mask)] = c.to_string();
    return Json{{"B", scalars_to_json<F>(h.nodes().elems())}, {"d", h.degree_bound()}, {"coeffs", coeffs}};
}

template <ExactField F>
SymPolyInBasis<F> sym_from_json(const Json& j) {
    RootSet<F> nodes(scalars_from_json<F>(field(j, "B")));
    const long d = long_from_json(j, "d");
    const Json& cj = field(j, "coeffs");
    if (!cj.is_object()) throw std::invalid_argument("\"coeffs\" must be an object keyed by bitmask");
    std::map<std::uint64_t, F> coeffs;
    for (const auto& [key, value] : cj.items()) {
        std::size_t used = 0;
        std::uint64_t mask = 0;
        try {
            mask = std::stoull(key, &used, 10);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != key.size()) throw std::invalid_argument("bitmask key \"" + key + "\" is not a decimal integer");
        coeffs.emplace(mask, scalar_from_json<F>(value));
    }
    return SymPolyInBasis<F>(std::move(nodes), d, std::move(coeffs));
}

template <ExactField F>
Json report_to_json(const BranchReport<F>& r) {
    return Json{{"m", r.m},
                {"n", r.n},
                {"p", r.p},
                {"q", r.q},
                {"seed", r.seed},
                {"branch", r.branch},
                {"pass", r.pass},
                {"expected", poly_to_json(r.expected)},
                {"computed", poly_to_json(r.computed)},
                {"d", r.d},
                {"k", r.k},
                {"sigma", r.sigma},
                {"c", r.c},
                {"e", r.e},
                {"forms_agree", r.forms_agree},
                {"degree_ok", r.degree_ok},
                {"condition_conflict", r.condition_conflict}};
}

template <ExactField F>
BranchReport<F> report_from_json(const Json& j) {
    BranchReport<F> r;
    r.m = long_from_json(j, "m");
    r.n = long_from_json(j, "n");
    r.p = long_from_json(j, "p");
    r.q = long_from_json(j, "q");
    r.seed = field(j, "seed").get<std::uint64_t>();
    r.branch = string_from_json(j, "branch");
    r.pass = bool_from_json(j, "pass");
    r.expected = poly_from_json<F>(field(j, "expected"));
    r.computed = poly_from_json<F>(field(j, "computed"));
    r.d = long_from_json(j, "d");
    r.k = long_from_json(j, "k");
    r.sigma = long_from_json(j, "sigma");
    r.c = long_from_json(j, "c");
    r.e = long_from_json(j, "e");
    r.forms_agree = bool_from_json(j, "forms_agree");
    r.degree_ok = bool_from_json(j, "degree_ok");
    r.condition_conflict = bool_from_json(j, "condition_conflict");
    return r;
}

Json check_to_json(const CheckResult& c) {
    return Json{{"check", c.check}, {"params", c.params}, {"m", c.m},          {"n", c.n},
                {"seed", c.seed},   {"pass", c.pass},     {"detail", c.detail}};
}

CheckResult check_from_json(const Json& j) {
    CheckResult c;
    c.check = string_from_json(j, "check");
    c.params = string_from_json(j, "params");
    c.m = long_from_json(j, "m");
    c.n = long_from_json(j, "n");
    c.seed = field(j, "seed").get<std::uint64_t>();
    c.pass = bool_from_json(j, "pass");
    c.detail = string_from_json(j, "detail");
    return c;
}

template <ExactField F>
Json suite_to_json(const SuiteResult<F>& s) {
    Json reports = Json::array();
    for (const auto& r : s.reports) reports.push_back(report_to_json(r));
    Json checks = Json::array();
    for (const auto& c : s.checks) checks.push_back(check_to_json(c));
    return Json{{"reports", reports},
                {"checks", checks},
                {"summary",
                 {{"instances", s.instances},
                  {"reports", s.reports.size()},
                  {"checks", s.checks.size()},
                  {"failures", s.failures()}}}};
}

template <ExactField F>
SuiteResult<F> suite_from_json(const Json& j) {
    SuiteResult<F> s;
    for (const Json& r : field(j, "reports")) s.reports.push_back(report_from_json<F>(r));
    for (const Json& c : field(j, "checks")) s.checks.push_back(check_from_json(c));
    s.instances = field(field(j, "summary"), "instances").get<std::size_t>();
    return s;
}

#define SYLV_INSTANTIATE_JSON(F)                                     \
    template Json poly_to_json(const UniPoly<F>&);                   \
    template UniPoly<F> poly_from_json(const Json&);                 \
    template Json sym_to_json(const SymPolyInBasis<F>&);             \
    template SymPolyInBasis<F> sym_from_json(const Json&);           \
    template Json report_to_json(const BranchReport<F>&);            \
    template BranchReport<F> report_from_json(const Json&);          \
    template Json suite_to_json(const SuiteResult<F>&);              \
    template SuiteResult<F> suite_from_json(const Json&);

SYLV_INSTANTIATE_JSON(Rational)
SYLV_INSTANTIATE_JSON(ModP)

}  // namespace sylv
