#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sylv/json.hpp"
#include "sylv/schur.hpp"
#include "sylv/subres.hpp"
#include "sylv/subset.hpp"
#include "sylv/sylvester.hpp"
#include "sylv/syminterp.hpp"
#include "sylv/verify.hpp"

namespace sylv::cli {

namespace {

/// Input error that maps to exit status 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    std::optional<std::string> roots_a, roots_b, coeffs_f, coeffs_g;
    std::optional<long> p, q, d, k, m, n;
    std::optional<std::string> values;
    std::uint64_t seed = 0;
    long min_m = 1, max_m = 5, min_n = 1, max_n = 5;
    long seeds = 5;
    long range = 10;
    bool ordered = false;
    bool disjoint = false;
    std::optional<std::uint64_t> prime;
    std::string format = "text";
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!text.empty() && text.back() == ',') out.emplace_back();
    return out;
}

template <ExactField F>
std::vector<F> parse_scalars(const std::string& text, const char* what) {
    std::vector<F> out;
    if (text.empty()) return out;
    for (const std::string& item : split_list(text)) {
        try {
            out.push_back(F::parse(item));
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string(what) + ": " + e.what());
        }
    }
    return out;
}

template <ExactField F>
RootSet<F> parse_roots(const std::optional<std::string>& text, const char* what) {
    if (!text) throw InputError(std::string(what) + " is required");
    try {
        return RootSet<F>(parse_scalars<F>(*text, what));
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

long require(const std::optional<long>& v, const char* what) {
    if (!v) throw InputError(std::string(what) + " is required");
    return *v;
}

void require_nonempty(std::size_t size, const char* what) {
    if (size == 0) throw InputError(std::string(what) + " must contain at least one root");
}

/// Either root input (--A, --B) or coefficient input (--f, --g), never both.
template <ExactField F>
struct PolyInput {
    std::optional<RootSet<F>> a, b;
    UniPoly<F> f, g;
};

template <ExactField F>
PolyInput<F> read_poly_input(const Options& o, bool allow_coeffs) {
    const bool roots = o.roots_a || o.roots_b;
    const bool coeffs = o.coeffs_f || o.coeffs_g;
    if (coeffs && !allow_coeffs) throw InputError("command '" + o.command + "' needs roots --A/--B, not coefficients");
    if (roots && coeffs) throw InputError("give either roots --A/--B or coefficients --f/--g, not both");
    PolyInput<F> in;
    if (coeffs) {
        if (!o.coeffs_f || !o.coeffs_g) throw InputError("both --f and --g are required");
        in.f = UniPoly<F>(parse_scalars<F>(*o.coeffs_f, "--f"));
        in.g = UniPoly<F>(parse_scalars<F>(*o.coeffs_g, "--g"));
        if (in.f.degree() < 1) throw InputError("--f must have degree >= 1");
        if (in.g.degree() < 1) throw InputError("--g must have degree >= 1");
        return in;
    }
    in.a = parse_roots<F>(o.roots_a, "--A");
    in.b = parse_roots<F>(o.roots_b, "--B");
    require_nonempty(in.a->size(), "--A");
    require_nonempty(in.b->size(), "--B");
    in.f = poly_from_roots(*in.a);
    in.g = poly_from_roots(*in.b);
    return in;
}

void check_range(long value, long lo, long hi, const char* what) {
    if (value < lo || value > hi)
        throw InputError(std::string(what) + " = " + std::to_string(value) + " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
}

void check_cofactor_index(long m, long n, long k) {
    check_range(k, 0, std::min(m - 1, n - 1), "--k (need 0 <= k <= min(m-1, n-1))");
}

template <ExactField F>
class Runner {
   public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out), json_(o.format == "json") {}

    int dispatch() {
        const std::string& c = o_.command;
        if (c == "sres") return cmd_sres();
        if (c == "res") return cmd_res();
        if (c == "sylsum") return cmd_sylsum();
        if (c == "cofactors") return cmd_cofactors();
        if (c == "schur") return cmd_schur();
        if (c == "interp") return cmd_interp();
        if (c == "verify") return cmd_verify();
        if (c == "show-theorem1") return cmd_show_theorem1();
        throw InputError("unknown command '" + c + "'");
    }

   private:
    void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

    int cmd_sres() {
        const PolyInput<F> in = read_poly_input<F>(o_, true);
        const long d = require(o_.d, "--d");
        const long m = in.f.degree();
        const long n = in.g.degree();
        if (!sres_admissible(m, n, d))
            throw InputError("--d = " + std::to_string(d) + " is not admissible for m = " + std::to_string(m) +
                             ", n = " + std::to_string(n) + " (need d <= min(m, n), and d < m when m = n)");
        const UniPoly<F> s = sres(in.f, in.g, d);
        if (json_)
            emit(poly_to_json(s));
        else
            out_ << to_string(s) << '\n';
        return kExitOk;
    }

    int cmd_res() {
        const PolyInput<F> in = read_poly_input<F>(o_, true);
        const F r = resultant(in.f, in.g);
        if (json_)
            emit(Json{{"resultant", r.to_string()}});
        else
            out_ << r.to_string() << '\n';
        return kExitOk;
    }

    int cmd_sylsum() {
        const PolyInput<F> in = read_poly_input<F>(o_, false);
        const long p = require(o_.p, "--p");
        const long q = require(o_.q, "--q");
        check_range(p, 0, static_cast<long>(in.a->size()), "--p (need 0 <= p <= |A|)");
        check_range(q, 0, static_cast<long>(in.b->size()), "--q (need 0 <= q <= |B|)");
        const UniPoly<F> s = syl_double(*in.a, *in.b, p, q);
        if (json_)
            emit(poly_to_json(s));
        else
            out_ << to_string(s) << '\n';
        return kExitOk;
    }

    int cmd_cofactors() {
        const PolyInput<F> in = read_poly_input<F>(o_, true);
        const long k = require(o_.k, "--k");
        check_cofactor_index(in.f.degree(), in.g.degree(), k);
        const Cofactors<F> det = bezout_cofactors_det(in.f, in.g, k);
        std::vector<std::pair<std::string, Cofactors<F>>> forms{{"determinant", det}};
        if (in.a) {
            forms.emplace_back("roots", cofactors_from_roots(*in.a, *in.b, k));
            forms.emplace_back("exchange", cofactors_exchange_form(*in.a, *in.b, k));
        }
        const bool agree = std::all_of(forms.begin(), forms.end(), [&](const auto& form) {
            return form.second.f == det.f && form.second.g == det.g;
        });
        const bool bezout = sres(in.f, in.g, k) == det.f * in.f + det.g * in.g;
        if (json_) {
            Json j{{"k", k}};
            for (const auto& [name, c] : forms) j[name] = Json{{"F", poly_to_json(c.f)}, {"G", poly_to_json(c.g)}};
            j["agree"] = agree;
            j["bezout"] = bezout;
            emit(j);
        } else {
            for (const auto& [name, c] : forms) {
                out_ << "F_" << k << " (" << name << "): " << to_string(c.f) << '\n';
                out_ << "G_" << k << " (" << name << "): " << to_string(c.g) << '\n';
            }
            out_ << "forms agree: " << (agree ? "yes" : "NO") << '\n';
            out_ << "Sres_" << k << " = F f + G g: " << (bezout ? "yes" : "NO") << '\n';
        }
        return agree && bezout ? kExitOk : kExitCounterexample;
    }

    /// Recovers F_k and G_k by interpolating their Schur-determinant values
    /// at abscissae away from every root.
    int cmd_schur() {
        const PolyInput<F> in = read_poly_input<F>(o_, false);
        const long m = in.f.degree();
        const long n = in.g.degree();
        const long k = require(o_.k, "--k");
        check_cofactor_index(m, n, k);
        std::vector<F> ts;
        for (long v = 0; static_cast<long>(ts.size()) < std::max(m, n) - k; ++v) {
            const F t(v);
            if (!in.a->contains(t) && !in.b->contains(t)) ts.push_back(t);
        }
        const std::span<const F> ts_f(ts.data(), static_cast<std::size_t>(n - k));
        const std::span<const F> ts_g(ts.data(), static_cast<std::size_t>(m - k));
        std::vector<F> values_f, values_g;
        for (const F& t : ts_f) values_f.push_back(cofactor_f_schur_eval(*in.a, in.g, k, t));
        for (const F& t : ts_g) values_g.push_back(cofactor_g_schur_eval(*in.b, in.f, k, t));
        const UniPoly<F> schur_f = lagrange_interpolate<F>(ts_f, values_f);
        const UniPoly<F> schur_g = lagrange_interpolate<F>(ts_g, values_g);
        const Cofactors<F> det = bezout_cofactors_det(in.f, in.g, k);
        const bool agree = schur_f == det.f && schur_g == det.g;
        if (json_) {
            emit(Json{{"k", k}, {"F", poly_to_json(schur_f)}, {"G", poly_to_json(schur_g)}, {"agree", agree}});
        } else {
            out_ << "F_" << k << " (schur): " << to_string(schur_f) << '\n';
            out_ << "G_" << k << " (schur): " << to_string(schur_g) << '\n';
            out_ << "matches determinant form: " << (agree ? "yes" : "NO") << '\n';
        }
        return agree ? kExitOk : kExitCounterexample;
    }

    /// Values are listed in increasing bitmask order of the node subsets
    /// B \ B' (each of size |B| - d).
    int cmd_interp() {
        if (o_.roots_a || o_.coeffs_f || o_.coeffs_g) throw InputError("interp takes nodes --B only");
        const RootSet<F> nodes = parse_roots<F>(o_.roots_b, "--B");
        require_nonempty(nodes.size(), "--B");
        const long d = require(o_.d, "--d");
        check_range(d, 0, static_cast<long>(nodes.size()) - 1, "--d (need 0 <= d <= |B|-1)");
        if (!o_.values) throw InputError("--values is required");
        const std::vector<F> values = parse_scalars<F>(*o_.values, "--values");
        const std::vector<SubsetSelector> node_sets = subsets(nodes.size(), nodes.size() - static_cast<std::size_t>(d));
        if (values.size() != node_sets.size())
            throw InputError("--values needs C(|B|, d) = " + std::to_string(node_sets.size()) + " entries, got " +
                             std::to_string(values.size()));
        NodeValues<F> table;
        for (std::size_t i = 0; i < values.size(); ++i) table.emplace(node_sets[i].mask(), values[i]);
        const SymPolyInBasis<F> h = sym_interpolate(nodes, d, table);
        if (json_) {
            emit(sym_to_json(h));
        } else {
            for (const auto& [mask, c] : h.coeffs()) {
                const SubsetSelector s(mask, nodes.size());
                out_ << "B' = {";
                const std::vector<F> picked = s.pick(nodes.elems());
                for (std::size_t i = 0; i < picked.size(); ++i) out_ << (i ? "," : "") << picked[i].to_string();
                out_ << "}: " << c.to_string() << '\n';
            }
        }
        return kExitOk;
    }

    int cmd_verify() {
        if (o_.min_m < 1 || o_.min_n < 1) throw InputError("--min-m and --min-n must be >= 1");
        if (o_.max_m < o_.min_m || o_.max_n < o_.min_n) throw InputError("--max-m/--max-n below the minimum size");
        if (o_.max_m > 12 || o_.max_n > 12) throw InputError("--max-m and --max-n are capped at 12");
        if (o_.seeds < 1) throw InputError("--seeds must be >= 1");
        const long needed = o_.disjoint ? o_.max_m + o_.max_n : std::max(o_.max_m, o_.max_n);
        if (2 * o_.range + 1 < needed)
            throw InputError("--range " + std::to_string(o_.range) + " cannot hold " + std::to_string(needed) +
                             " distinct roots");
        SuiteConfig config;
        config.min_m = o_.min_m;
        config.max_m = o_.max_m;
        config.min_n = o_.min_n;
        config.max_n = o_.max_n;
        config.ordered_only = o_.ordered;
        config.seeds = o_.seeds;
        config.first_seed = o_.seed;
        config.range = o_.range;
        config.disjoint = o_.disjoint;
        const SuiteResult<F> result = run_suite<F>(config);
        if (json_) {
            emit(suite_to_json(result));
        } else {
            for (const auto& r : result.reports)
                if (!r.ok()) out_ << describe(r) << '\n';
            for (const auto& c : result.checks)
                if (!c.pass)
                    out_ << "FAIL " << c.check << " m=" << c.m << " n=" << c.n << " seed=" << c.seed << ' ' << c.params
                         << ": " << c.detail << '\n';
            out_ << "instances: " << result.instances << ", theorem reports: " << result.reports.size()
                 << ", identity checks: " << result.checks.size() << ", failures: " << result.failures() << '\n';
        }
        return result.all_pass() ? kExitOk : kExitCounterexample;
    }

    int cmd_show_theorem1() {
        Instance<F> inst;
        if (o_.roots_a || o_.roots_b) {
            RootSet<F> a = parse_roots<F>(o_.roots_a, "--A");
            RootSet<F> b = parse_roots<F>(o_.roots_b, "--B");
            require_nonempty(a.size(), "--A");
            require_nonempty(b.size(), "--B");
            inst = make_instance(std::move(a), std::move(b), o_.seed);
        } else {
            const long m = require(o_.m, "--m (or roots --A/--B)");
            const long n = require(o_.n, "--n (or roots --A/--B)");
            check_range(m, 1, 12, "--m");
            check_range(n, 1, 12, "--n");
            if (2 * o_.range + 1 < std::max(m, n))
                throw InputError("--range " + std::to_string(o_.range) + " cannot hold the requested roots");
            inst = gen_instance<F>(o_.seed, m, n, o_.range);
        }
        const std::vector<BranchReport<F>> reports = check_theorem1(inst);
        const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
        if (json_) {
            Json list = Json::array();
            for (const auto& r : reports) list.push_back(report_to_json(r));
            emit(list);
        } else {
            out_ << "A = " << join(inst.a.elems()) << ", B = " << join(inst.b.elems()) << '\n';
            for (const auto& r : reports) out_ << describe(r) << '\n';
        }
        return ok ? kExitOk : kExitCounterexample;
    }

    static std::string join(std::span<const F> values) {
        std::string s = "{";
        for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].to_string();
        return s + "}";
    }

    static std::string describe(const BranchReport<F>& r) {
        std::string s = (r.ok() ? "PASS" : "FAIL");
        s += " m=" + std::to_string(r.m) + " n=" + std::to_string(r.n) + " seed=" + std::to_string(r.seed) +
             " p=" + std::to_string(r.p) + " q=" + std::to_string(r.q) + " branch=" + r.branch +
             " expected=" + to_string(r.expected) + " computed=" + to_string(r.computed);
        if (!r.forms_agree) s += " [forms disagree]";
        if (!r.degree_ok) s += " [degree above d]";
        if (r.condition_conflict) s += " [branch conditions conflict]";
        return s;
    }

    const Options& o_;
    std::ostream& out_;
    bool json_;
};

void add_roots(CLI::App* cmd, Options& o, bool coeffs) {
    cmd->add_option("--A", o.roots_a, "roots of f, comma-separated rationals");
    cmd->add_option("--B", o.roots_b, "roots of g, comma-separated rationals");
    if (coeffs) {
        cmd->add_option("--f", o.coeffs_f, "coefficients of f in ascending powers");
        cmd->add_option("--g", o.coeffs_g, "coefficients of g in ascending powers");
    }
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--prime", o.prime, "work modulo this prime instead of over the rationals");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact Sylvester sums, subresultants and Bezout cofactors", "sylv"};
    app.require_subcommand(1, 1);

    auto* sres_cmd = app.add_subcommand("sres", "subresultant Sres_d(f, g)");
    add_roots(sres_cmd, o, true);
    sres_cmd->add_option("--d", o.d, "subresultant index");

    auto* res_cmd = app.add_subcommand("res", "resultant Res(f, g)");
    add_roots(res_cmd, o, true);

    auto* syl_cmd = app.add_subcommand("sylsum", "double sum Syl_{p,q}(A, B)");
    add_roots(syl_cmd, o, false);
    syl_cmd->add_option("--p", o.p, "size of A'");
    syl_cmd->add_option("--q", o.q, "size of B'");

    auto* cof_cmd = app.add_subcommand("cofactors", "Bezout cofactors F_k, G_k in every available form");
    add_roots(cof_cmd, o, true);
    cof_cmd->add_option("--k", o.k, "cofactor index");

    auto* schur_cmd = app.add_subcommand("schur", "F_k, G_k recovered from their Schur-determinant forms");
    add_roots(schur_cmd, o, false);
    schur_cmd->add_option("--k", o.k, "cofactor index");

    auto* interp_cmd = app.add_subcommand("interp", "symmetric Lagrange interpolation on the nodes B");
    interp_cmd->add_option("--B", o.roots_b, "interpolation nodes, comma-separated rationals");
    interp_cmd->add_option("--d", o.d, "degree bound per variable");
    interp_cmd->add_option("--values", o.values, "values at the node subsets in increasing bitmask order");

    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite over seeded instances");
    verify_cmd->add_option("--min-m", o.min_m, "smallest |A|");
    verify_cmd->add_option("--max-m", o.max_m, "largest |A|");
    verify_cmd->add_option("--min-n", o.min_n, "smallest |B|");
    verify_cmd->add_option("--max-n", o.max_n, "largest |B|");
    verify_cmd->add_option("--seeds", o.seeds, "instances per size");
    verify_cmd->add_option("--seed", o.seed, "first seed");
    verify_cmd->add_option("--range", o.range, "roots are drawn from [-range, range]");
    verify_cmd->add_flag("--ordered", o.ordered, "only sizes with m <= n");
    verify_cmd->add_flag("--disjoint", o.disjoint, "draw A and B disjoint");

    auto* show_cmd = app.add_subcommand("show-theorem1", "branch table of the double-sum description for one instance");
    add_roots(show_cmd, o, false);
    show_cmd->add_option("--m", o.m, "|A| of a generated instance");
    show_cmd->add_option("--n", o.n, "|B| of a generated instance");
    show_cmd->add_option("--seed", o.seed, "seed of a generated instance");
    show_cmd->add_option("--range", o.range, "roots are drawn from [-range, range]");

    const std::vector<CLI::App*> commands{sres_cmd, res_cmd, syl_cmd, cof_cmd, schur_cmd, interp_cmd, verify_cmd, show_cmd};
    for (auto* cmd : commands) {
        add_common(cmd, o);
        cmd->allow_extras();
    }
    app.allow_extras();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        std::string message = e.what();
        std::replace(message.begin(), message.end(), '\n', ' ');
        err << "sylv: " << message << '\n';
        return kExitInputError;
    }
    std::vector<std::string> extras = app.remaining(true);
    if (!extras.empty()) {
        std::string joined;
        for (const std::string& a : extras) joined += (joined.empty() ? "" : " ") + a;
        err << "sylv: unexpected arguments: " << joined << '\n';
        return kExitInputError;
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        if (o.prime) {
            ModP::validate_modulus(*o.prime);
            ModP::Scope scope(*o.prime);
            return Runner<ModP>(o, out).dispatch();
        }
        return Runner<Rational>(o, out).dispatch();
    } catch (const InputError& e) {
        err << "sylv: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "sylv: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::domain_error& e) {
        err << "sylv: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "sylv: internal inconsistency: " << e.what() << '\n';
        return kExitCounterexample;
    }
}

}  // namespace sylv::cli
