#include "sylv/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "sylv/schur.hpp"
#include "sylv/subres.hpp"
#include "sylv/subset.hpp"
#include "sylv/sylvester.hpp"
#include "sylv/syminterp.hpp"

namespace sylv {

namespace {

std::string join_params(std::initializer_list<std::pair<const char*, long>> kv) {
    std::string out;
    for (const auto& [key, value] : kv) {
        if (!out.empty()) out += ' ';
        out += key;
        out += '=';
        out += std::to_string(value);
    }
    return out;
}

template <ExactField F>
F scalar_of(long sign_exponent, const BigInt& factor) {
    return signed_scalar<F>(sign_exponent) * F::from_integer(factor);
}

template <ExactField F>
std::string mismatch(const UniPoly<F>& expected, const UniPoly<F>& computed) {
    return "expected " + to_string(expected) + ", computed " + to_string(computed);
}

template <ExactField F>
std::string mismatch(const F& expected, const F& computed) {
    return "expected " + expected.to_string() + ", computed " + computed.to_string();
}

/// Accumulates CheckResults for one instance.
template <ExactField F>
class Recorder {
   public:
    explicit Recorder(const Instance<F>& inst) : inst_(inst) {}

    void add(std::string check, std::string params, bool pass, std::string detail = {}) {
        out_.push_back(CheckResult{std::move(check), std::move(params), inst_.m(), inst_.n(), inst_.seed, pass,
                                   pass ? std::string{} : std::move(detail)});
    }

    void expect_equal(std::string check, std::string params, const UniPoly<F>& expected, const UniPoly<F>& computed) {
        const bool pass = expected == computed;
        add(std::move(check), std::move(params), pass, pass ? std::string{} : mismatch(expected, computed));
    }

    std::vector<CheckResult> take() { return std::move(out_); }

   private:
    const Instance<F>& inst_;
    std::vector<CheckResult> out_;
};

/// All Syl_{p,q}(A, B) of one instance.
template <ExactField F>
class SylTable {
   public:
    explicit SylTable(const Instance<F>& inst) : cols_(inst.n() + 1) {
        for (long p = 0; p <= inst.m(); ++p)
            for (long q = 0; q <= inst.n(); ++q) values_.push_back(syl_double(inst.a, inst.b, p, q));
    }
    const UniPoly<F>& operator()(long p, long q) const { return values_[static_cast<std::size_t>(p * cols_ + q)]; }

   private:
    long cols_;
    std::vector<UniPoly<F>> values_;
};

/// Calls fn(point) for every point of the product grid sets[0] x sets[1] x ...
template <ExactField F, class Fn>
void for_each_grid_point(const std::vector<std::vector<F>>& sets, Fn&& fn) {
    std::vector<std::size_t> idx(sets.size(), 0);
    std::vector<F> point(sets.size());
    for (const auto& s : sets)
        if (s.empty()) return;
    while (true) {
        for (std::size_t i = 0; i < sets.size(); ++i) point[i] = sets[i][idx[i]];
        fn(std::as_const(point));
        std::size_t i = 0;
        while (i < sets.size() && ++idx[i] == sets[i].size()) idx[i++] = 0;
        if (i == sets.size()) return;
    }
}

template <ExactField F>
std::string point_text(std::span<const F> point) {
    std::string out = "(";
    for (std::size_t i = 0; i < point.size(); ++i) out += (i ? "," : "") + point[i].to_string();
    return out + ")";
}

/// H_{A'}(X) = sum_{B'} R(B\B', A\A') R(X, B') / R(B\B', B'), |B'| = q.
template <ExactField F>
F h_aprime_eval(const Instance<F>& inst, SubsetSelector a_prime, long q, std::span<const F> point) {
    const std::vector<F> a_rest = a_prime.complement().pick(inst.a.elems());
    F out(0L);
    for (const SubsetSelector sb : subsets(inst.b.size(), static_cast<std::size_t>(q))) {
        const std::vector<F> b_in = sb.pick(inst.b.elems());
        const std::vector<F> b_out = sb.complement().pick(inst.b.elems());
        out += rprod<F>(b_out, a_rest) * rprod<F>(point, b_in) / rprod<F>(b_out, b_in);
    }
    return out;
}

}  // namespace

bool theorem1_sres_condition(long m, long n, long d) { return (0 <= d && d < m) || (m == d && d < n); }

bool single_sum_sres_condition(long m, long n, long d) {
    return (0 <= d && d <= std::min(m - 1, n)) || (d == m && m < n);
}

std::string single_sum_branch(long m, long n, long d) {
    if (d < 0 || d > n) throw std::invalid_argument("single sum Syl_{0,d} needs 0 <= d <= n");
    if (single_sum_sres_condition(m, n, d)) return "sres";
    if (m < d && d < n - 1) return "zero";
    if (m < d && d == n - 1) return "f";
    return "g";  // m <= d = n
}

template <ExactField F>
Instance<F> make_instance(RootSet<F> a, RootSet<F> b, std::uint64_t seed) {
    Instance<F> inst;
    inst.seed = seed;
    inst.disjoint = std::none_of(a.begin(), a.end(), [&](const F& v) { return b.contains(v); });
    inst.f = poly_from_roots(a);
    inst.g = poly_from_roots(b);
    inst.a = std::move(a);
    inst.b = std::move(b);
    return inst;
}

template <ExactField F>
Instance<F> gen_instance(std::uint64_t seed, long m, long n, long range, bool disjoint) {
    if (m < 1 || n < 1) throw std::invalid_argument("instances need m, n >= 1");
    if (range < 0) throw std::invalid_argument("negative root range");
    const std::uint64_t pool = 2 * static_cast<std::uint64_t>(range) + 1;
    const std::uint64_t needed = disjoint ? static_cast<std::uint64_t>(m + n) : static_cast<std::uint64_t>(std::max(m, n));
    if (pool < needed)
        throw std::invalid_argument("range " + std::to_string(range) + " cannot hold " + std::to_string(needed) +
                                    " distinct roots");

    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n)};
    std::mt19937_64 rng(sequence);
    // Rejection sampling keeps the draw portable (std distributions are not).
    const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % pool);
    auto draw = [&]() {
        std::uint64_t v;
        do v = rng();
        while (v >= limit);
        return static_cast<long>(v % pool) - range;
    };

    std::vector<long> a_roots;
    while (static_cast<long>(a_roots.size()) < m) {
        const long v = draw();
        if (std::find(a_roots.begin(), a_roots.end(), v) == a_roots.end()) a_roots.push_back(v);
    }
    std::vector<long> b_roots;
    while (static_cast<long>(b_roots.size()) < n) {
        const long v = draw();
        const bool clash = std::find(b_roots.begin(), b_roots.end(), v) != b_roots.end() ||
                           (disjoint && std::find(a_roots.begin(), a_roots.end(), v) != a_roots.end());
        if (!clash) b_roots.push_back(v);
    }
    auto to_field = [](const std::vector<long>& v) { return std::vector<F>(v.begin(), v.end()); };
    Instance<F> inst = make_instance(RootSet<F>(to_field(a_roots)), RootSet<F>(to_field(b_roots)), seed);
    inst.disjoint = inst.disjoint || disjoint;
    return inst;
}

template <ExactField F>
Instance<F> swapped(const Instance<F>& inst) {
    Instance<F> out = inst;
    std::swap(out.a, out.b);
    std::swap(out.f, out.g);
    return out;
}

template <ExactField F>
Theorem1Rhs<F> theorem1_expected(const Instance<F>& inst, long p, long q) {
    const long m = inst.m();
    const long n = inst.n();
    if (m > n) throw std::invalid_argument("the case description is stated for m <= n; swap the instance first");
    if (p < 0 || p > m || q < 0 || q > n) throw std::invalid_argument("(p, q) outside [0, m] x [0, n]");
    const long d = p + q;
    const long k = m + n - d - 1;

    if (d == m + n) return {"res_f_g", inst.f * inst.g * resultant(inst.f, inst.g), std::nullopt};
    if (n <= d) {
        const long sigma = (d - m) * (n - q) + d - n - 1;
        const Cofactors<F> cof = bezout_cofactors_det(inst.f, inst.g, k);
        const UniPoly<F> ff = cof.f * inst.f;
        const UniPoly<F> first = (ff * F::from_integer(binomial(k, m - p)) -
                                  cof.g * inst.g * F::from_integer(binomial(k, n - q))) *
                                 signed_scalar<F>(sigma);
        const UniPoly<F> second = (sres(inst.f, inst.g, k) * F::from_integer(binomial(k, n - q)) -
                                   ff * F::from_integer(binomial(k + 1, m - p))) *
                                  signed_scalar<F>(sigma + 1);
        return {"bezout", first, second};
    }
    if (theorem1_sres_condition(m, n, d))
        return {"sres", sres(inst.f, inst.g, d) * scalar_of<F>(p * (m - d), binomial(d, p)), std::nullopt};
    if (m < d && d < n - 1) return {"zero", UniPoly<F>{}, std::nullopt};
    return {"f", inst.f * scalar_of<F>((p + 1) * (m + n - 1), binomial(m, p)), std::nullopt};  // m < d = n-1
}

template <ExactField F>
std::vector<BranchReport<F>> check_theorem1(const Instance<F>& inst) {
    const bool flip = inst.m() > inst.n();
    const Instance<F> oriented = flip ? swapped(inst) : inst;
    const long om = oriented.m();
    const long on = oriented.n();

    std::vector<BranchReport<F>> out;
    for (long p = 0; p <= inst.m(); ++p) {
        for (long q = 0; q <= inst.n(); ++q) {
            BranchReport<F> r;
            r.m = inst.m();
            r.n = inst.n();
            r.p = p;
            r.q = q;
            r.seed = inst.seed;
            r.d = p + q;
            const long op = flip ? q : p;
            const long oq = flip ? p : q;
            r.k = om + on - r.d - 1;
            r.sigma = (r.d - om) * (on - oq) + r.d - on - 1;
            r.c = (r.d - om) * (on - oq) + r.d - on;
            r.e = (r.d - om) * (oq + 1);

            const Theorem1Rhs<F> rhs = theorem1_expected(oriented, op, oq);
            const F sign = flip ? signed_scalar<F>(p * q + (inst.m() - p) * (inst.n() - q)) : F(1L);
            r.branch = flip ? "sym:" + rhs.branch : rhs.branch;
            r.expected = rhs.value * sign;
            r.computed = syl_double(inst.a, inst.b, p, q);
            r.pass = r.expected == r.computed;
            r.forms_agree = !rhs.second_form || *rhs.second_form == rhs.value;
            r.degree_ok = r.expected.degree() <= r.d && r.computed.degree() <= r.d;
            if (op == 0) r.condition_conflict = theorem1_sres_condition(om, on, r.d) != single_sum_sres_condition(om, on, r.d);
            out.push_back(std::move(r));
        }
    }
    return out;
}

template <ExactField F>
std::vector<std::vector<F>> certification_grid(const Instance<F>& inst, std::size_t vars, std::size_t per_var) {
    std::vector<std::vector<F>> out(vars);
    long next = 0;
    for (auto& set : out) {
        while (set.size() < per_var) {
            const F candidate(next++);
            if (inst.a.contains(candidate) || inst.b.contains(candidate)) continue;
            set.push_back(candidate);
        }
    }
    return out;
}

template <ExactField F>
std::vector<CheckResult> check_section_props(const Instance<F>& inst) {
    const long m = inst.m();
    const long n = inst.n();
    const SylTable<F> syl(inst);
    Recorder<F> rec(inst);

    std::map<long, UniPoly<F>> sres_cache;
    auto sres_d = [&](long d) -> const UniPoly<F>& {
        auto it = sres_cache.find(d);
        if (it == sres_cache.end()) it = sres_cache.emplace(d, sres(inst.f, inst.g, d)).first;
        return it->second;
    };
    std::map<long, Cofactors<F>> cof_cache;
    auto cof_k = [&](long k) -> const Cofactors<F>& {
        auto it = cof_cache.find(k);
        if (it == cof_cache.end()) it = cof_cache.emplace(k, bezout_cofactors_det(inst.f, inst.g, k)).first;
        return it->second;
    };

    for (long p = 0; p <= m; ++p) {
        for (long q = 0; q <= n; ++q) {
            const long d = p + q;
            const std::string params = join_params({{"p", p}, {"q", q}, {"d", d}});

            if (d <= std::min(m - 1, n - 1)) {
                const F factor = scalar_of<F>(p * (m - d), binomial(d, p));
                rec.expect_equal("dsmall-single", params, syl(0, d) * factor, syl(p, q));
                rec.expect_equal("dsmall-sres", params, sres_d(d) * factor, syl(p, q));
            }

            if (d <= n - 1) {
                UniPoly<F> expected;
                if (d <= std::min(m, n - 1))
                    expected = sres_d(d) * scalar_of<F>(p * (m - d), binomial(d, p));
                else if (m < d && d < n - 1)
                    expected = UniPoly<F>{};
                else
                    expected = inst.f * scalar_of<F>((p + 1) * (m + n - 1), binomial(m, p));
                rec.expect_equal("d-below-n", params, expected, syl(p, q));
            }

            if (std::max(m, n) <= d && d <= m + n - 1) {
                const long k = m + n - d - 1;
                const long c = (d - m) * (n - q) + d - n;
                const long e = (d - m) * (q + 1);
                const UniPoly<F> decomposition = syl(0, k) * scalar_of<F>(c, binomial(k, n - q)) +
                                                 syl(m, d - m) * scalar_of<F>(e, binomial(k + 1, m - p));
                rec.expect_equal("dbig", params, decomposition, syl(p, q));
                if (m <= n) {
                    const UniPoly<F> branch = theorem1_expected(inst, p, q).value;
                    rec.expect_equal("dbig-vs-branch", params, branch, decomposition);
                }
                const UniPoly<F> sres_form =
                    (sres_d(k) * F::from_integer(binomial(k, n - q)) -
                     cof_k(k).f * inst.f * F::from_integer(binomial(k + 1, m - p))) *
                    signed_scalar<F>(c);
                rec.expect_equal("dbig-sres-form", params, sres_form, syl(p, q));
            }

            if (m <= d && d <= n - 1) {
                const auto grid = certification_grid(inst, static_cast<std::size_t>(n - q), static_cast<std::size_t>(q + 1));
                for (const SubsetSelector a_prime : subsets(inst.a.size(), static_cast<std::size_t>(p))) {
                    const UniPoly<F> f_rest = poly_from_roots<F>(a_prime.complement().pick(inst.a.elems()));
                    bool pass = true;
                    std::string detail;
                    for_each_grid_point(grid, [&](const std::vector<F>& point) {
                        if (!pass) return;
                        F expected(1L);
                        for (const F& t : point) expected *= f_rest(t);
                        const F computed = h_aprime_eval(inst, a_prime, q, std::span<const F>(point));
                        if (!(expected == computed)) {
                            pass = false;
                            detail = "at " + point_text<F>(point) + ": " + mismatch(expected, computed);
                        }
                    });
                    rec.add("h-aprime", params + " A'=" + std::to_string(a_prime.mask()), pass, detail);
                }
            }
        }
    }

    for (long d = 0; d <= n - 1; ++d) {
        const std::string params = join_params({{"d", d}});
        if (d <= m) rec.expect_equal("single-sum-sres", params, sres_d(d), syl(0, d));
        if (m <= d) {
            UniPoly<F> expected;
            if (m < d && d < n - 1)
                expected = UniPoly<F>{};
            else
                expected = inst.f * signed_scalar<F>((m - d) * (n - d));
            rec.expect_equal("single-sum-cases", params, expected, syl(0, d));
        }
    }

    for (long d = std::max(m, n); d <= m + n - 1; ++d) {
        const long k = m + n - d - 1;
        rec.expect_equal("syl-m-dm", join_params({{"d", d}, {"k", k}}),
                         cof_k(k).f * inst.f * signed_scalar<F>((d - m) * n + m + n - 1), syl(m, d - m));
    }
    return rec.take();
}

template <ExactField F>
std::vector<CheckResult> check_misc(const Instance<F>& inst) {
    const long m = inst.m();
    const long n = inst.n();
    const SylTable<F> syl(inst);
    const Instance<F> other = swapped(inst);
    Recorder<F> rec(inst);

    for (long d = 0; d <= std::min(m, n); ++d) {
        if (d == m && d == n) {
            // The exchange argument needs d <= m-1 here: Syl_{m,0} = f while Syl_{0,n} = g.
            rec.expect_equal("single-sum-sign-corner-f", join_params({{"d", d}}), inst.f, syl(d, 0));
            rec.expect_equal("single-sum-sign-corner-g", join_params({{"d", d}}), inst.g, syl(0, d));
            continue;
        }
        rec.expect_equal("single-sum-sign", join_params({{"d", d}}), syl(0, d) * signed_scalar<F>(d * (m - d)),
                         syl(d, 0));
    }

    for (long p = 0; p <= m; ++p)
        for (long q = 0; q <= n; ++q)
            rec.expect_equal("syl-symmetry", join_params({{"p", p}, {"q", q}}),
                             syl_double(other.a, other.b, q, p) * signed_scalar<F>(p * q + (m - p) * (n - q)),
                             syl(p, q));

    for (long d = 0; d <= std::min(m, n); ++d) {
        if (!sres_admissible(m, n, d)) continue;
        rec.expect_equal("sres-symmetry", join_params({{"d", d}}),
                         sres(inst.g, inst.f, d) * signed_scalar<F>((m - d) * (n - d)), sres(inst.f, inst.g, d));
    }

    // x_1...x_{m-d} = sum_{A'} (prod_{a not in A'} a) R(X, A') / R(A\A', A'), for 1 <= d <= m-1.
    for (long d = 1; d <= m - 1; ++d) {
        const std::size_t vars = static_cast<std::size_t>(m - d);
        NodeValues<F> values;
        for (const SubsetSelector node : subsets(inst.a.size(), vars)) {
            F prod(1L);
            for (const F& v : node.pick(inst.a.elems())) prod *= v;
            values.emplace(node.mask(), prod);
        }
        const SymPolyInBasis<F> h = sym_interpolate(inst.a, d, values);
        bool pass = true;
        std::string detail;
        for_each_grid_point(certification_grid(inst, vars, static_cast<std::size_t>(d + 1)), [&](const std::vector<F>& pt) {
            if (!pass) return;
            F product(1L);
            for (const F& t : pt) product *= t;
            F display(0L);
            for (const SubsetSelector sa : subsets(inst.a.size(), static_cast<std::size_t>(d))) {
                const std::vector<F> in = sa.pick(inst.a.elems());
                const std::vector<F> out = sa.complement().pick(inst.a.elems());
                F weight(1L);
                for (const F& v : out) weight *= v;
                display += weight * rprod<F>(pt, in) / rprod<F>(out, in);
            }
            const F interpolated = sym_eval(h, std::span<const F>(pt));
            if (!(display == product) || !(interpolated == product)) {
                pass = false;
                detail = "at " + point_text<F>(pt) + ": product " + product.to_string() + ", display " +
                         display.to_string() + ", interpolant " + interpolated.to_string();
            }
        });
        rec.add("product-identity", join_params({{"d", d}}), pass, detail);
    }

    for (long d = 0; d <= n - 1; ++d) {
        const std::size_t vars = static_cast<std::size_t>(n - d);
        const std::string params = join_params({{"d", d}});
        const F sign = signed_scalar<F>((m - d) * (n - d));

        // Node values.
        bool nodes_ok = true;
        std::string nodes_detail;
        for (const SubsetSelector sb : subsets(inst.b.size(), static_cast<std::size_t>(d))) {
            const std::vector<F> node = sb.complement().pick(inst.b.elems());
            F expected = sign;
            for (const F& beta : node) expected *= inst.f(beta);
            const F computed = msyl_eval(inst.a, inst.b, d, std::span<const F>(node));
            if (!(expected == computed)) {
                nodes_ok = false;
                nodes_detail = "at node " + point_text<F>(node) + ": " + mismatch(expected, computed);
            }
        }
        rec.add("msyl-nodes", params, nodes_ok, nodes_detail);

        const auto grid = certification_grid(inst, vars, static_cast<std::size_t>(d + 1));
        if (d <= m) {
            bool pass = true;
            std::string detail;
            for_each_grid_point(grid, [&](const std::vector<F>& pt) {
                if (!pass) return;
                const F sum = msyl_eval(inst.a, inst.b, d, std::span<const F>(pt));
                const F det = msyl_det_eval(inst.a, inst.b, d, std::span<const F>(pt));
                if (!(sum == det)) {
                    pass = false;
                    detail = "at " + point_text<F>(pt) + ": subset sum " + sum.to_string() + ", determinant " +
                             det.to_string();
                }
            });
            rec.add("msyl-determinant", params, pass, detail);
        }
        if (m <= d) {
            bool pass = true;
            std::string detail;
            for_each_grid_point(grid, [&](const std::vector<F>& pt) {
                if (!pass) return;
                F expected = sign;
                for (const F& t : pt) expected *= inst.f(t);
                const F computed = msyl_eval(inst.a, inst.b, d, std::span<const F>(pt));
                if (!(expected == computed)) {
                    pass = false;
                    detail = "at " + point_text<F>(pt) + ": " + mismatch(expected, computed);
                }
            });
            rec.add("msyl-low-degree-f", params, pass, detail);
        }

        // Coefficient of x_1^d ... x_{n-d-1}^d as a polynomial in x_{n-d}:
        // tensor divided differences over d+1 abscissae per variable, then
        // interpolation in the last variable.
        const auto coeff_grid = certification_grid(inst, vars, static_cast<std::size_t>(d + 1));
        const std::vector<std::vector<F>> inner(coeff_grid.begin(), coeff_grid.end() - 1);
        const std::vector<F>& ts = coeff_grid.back();
        std::vector<std::vector<F>> weights;
        for (const auto& set : inner) {
            std::vector<F> w;
            for (std::size_t i = 0; i < set.size(); ++i) {
                F den(1L);
                for (std::size_t j = 0; j < set.size(); ++j)
                    if (j != i) den *= set[i] - set[j];
                w.push_back(den.inverse());
            }
            weights.push_back(std::move(w));
        }
        std::vector<F> top_values;
        for (const F& t : ts) {
            F acc(0L);
            std::vector<std::size_t> idx(inner.size(), 0);
            while (true) {
                std::vector<F> pt;
                F w(1L);
                for (std::size_t i = 0; i < inner.size(); ++i) {
                    pt.push_back(inner[i][idx[i]]);
                    w *= weights[i][idx[i]];
                }
                pt.push_back(t);
                acc += w * msyl_eval(inst.a, inst.b, d, std::span<const F>(pt));
                std::size_t i = 0;
                while (i < inner.size() && ++idx[i] == inner[i].size()) idx[i++] = 0;
                if (i == inner.size()) break;
            }
            top_values.push_back(acc);
        }
        rec.expect_equal("msyl-top-coefficient", params, syl(0, d), lagrange_interpolate<F>(ts, top_values));
    }

    for (long d = 0; d <= n; ++d) {
        const std::string branch = single_sum_branch(m, n, d);
        UniPoly<F> expected;
        if (branch == "sres")
            expected = sres(inst.f, inst.g, d);
        else if (branch == "f")
            expected = inst.f * signed_scalar<F>(m + n - 1);
        else if (branch == "g")
            expected = inst.g;
        rec.expect_equal("single-sum-table", join_params({{"d", d}}) + " branch=" + branch, expected, syl(0, d));
    }
    return rec.take();
}

template <ExactField F>
std::vector<CheckResult> check_exchange(const Instance<F>& inst) {
    const long m = inst.m();
    const long n = inst.n();
    Recorder<F> rec(inst);
    for (long p = 0; p <= std::min(m, n); ++p) {
        for (long r = 0; r <= m - p; ++r) {
            const std::string params = join_params({{"p", p}, {"r", r}});
            bool pass = true;
            bool reconciled = true;
            std::string detail;
            const F orientation = signed_scalar<F>(p * (m - p));
            auto run = [&](const std::vector<Operand<F>>& xs) {
                const ExchangeSides<F> sides = exchange_sides<F>(inst.a, inst.b, p, xs);
                const UniPoly<F> intro = exchange_lhs_swapped<F>(inst.a, inst.b, p, xs);
                if (pass && !(sides.lhs == sides.rhs)) {
                    pass = false;
                    detail = mismatch(sides.rhs, sides.lhs);
                }
                if (!(intro == sides.lhs * orientation) || !(intro == sides.rhs * orientation)) reconciled = false;
            };
            if (r == 0) {
                run({});
            } else {
                const auto grid = certification_grid(inst, static_cast<std::size_t>(r - 1), static_cast<std::size_t>(p + 1));
                for_each_grid_point(grid, [&](const std::vector<F>& pt) {
                    std::vector<Operand<F>> xs{kX};
                    xs.insert(xs.end(), pt.begin(), pt.end());
                    run(xs);
                });
            }
            rec.add("exchange", params, pass, detail);
            rec.add("exchange-orientation", params, reconciled, "swapped-denominator sum is not (-1)^{p(m-p)} times the other");
        }
    }
    return rec.take();
}

template <ExactField F>
std::vector<CheckResult> check_cofactors(const Instance<F>& inst) {
    const long m = inst.m();
    const long n = inst.n();
    Recorder<F> rec(inst);
    for (long k = 0; k <= std::min(m - 1, n - 1); ++k) {
        const std::string params = join_params({{"k", k}});
        const Cofactors<F> det = bezout_cofactors_det(inst.f, inst.g, k);
        rec.expect_equal("bezout", params, sres(inst.f, inst.g, k), det.f * inst.f + det.g * inst.g);

        const Cofactors<F> roots = cofactors_from_roots(inst.a, inst.b, k);
        rec.expect_equal("cofactor-roots-F", params, det.f, roots.f);
        rec.expect_equal("cofactor-roots-G", params, det.g, roots.g);
        const Cofactors<F> exch = cofactors_exchange_form(inst.a, inst.b, k);
        rec.expect_equal("cofactor-exchange-F", params, det.f, exch.f);
        rec.expect_equal("cofactor-exchange-G", params, det.g, exch.g);

        rec.add("cofactor-degree", params, det.f.degree() <= n - k - 1 && det.g.degree() <= m - k - 1,
                "deg F = " + std::to_string(det.f.degree()) + ", deg G = " + std::to_string(det.g.degree()));
        rec.expect_equal("cofactor-symmetry", params, bezout_cofactors_det(inst.g, inst.f, k).f *
                                                          signed_scalar<F>((m - k) * (n - k)),
                         det.g);

        // n-k points exceed deg F_k; m-k points exceed deg G_k.
        const auto ts = certification_grid(inst, 1, static_cast<std::size_t>(std::max(n - k, m - k)))[0];
        bool schur_f = true, schur_g = true, special = true, binet = true;
        std::string detail_f, detail_g, detail_special;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const F& t = ts[i];
            if (static_cast<long>(i) < n - k) {
                const F value = cofactor_f_schur_eval(inst.a, inst.g, k, t);
                if (!(value == det.f(t))) {
                    schur_f = false;
                    detail_f = "at " + t.to_string() + ": " + mismatch(det.f(t), value);
                }
                const SchurPair<F> pair = schur_special_case(inst.a, n, k, t);
                if (!(pair.cofactor == pair.schur)) {
                    special = false;
                    detail_special = "at " + t.to_string() + ": " + mismatch(pair.cofactor, pair.schur);
                }
                binet = binet && cauchy_binet_factorization_check(inst.a, inst.g, k, t);
            }
            if (static_cast<long>(i) < m - k) {
                const F value = cofactor_g_schur_eval(inst.b, inst.f, k, t);
                if (!(value == det.g(t))) {
                    schur_g = false;
                    detail_g = "at " + t.to_string() + ": " + mismatch(det.g(t), value);
                }
            }
        }
        rec.add("schur-form-F", params, schur_f, detail_f);
        rec.add("schur-form-G", params, schur_g, detail_g);
        rec.add("schur-x^n", params, special, detail_special);
        rec.add("cauchy-binet", params, binet, "matrix factorization differs");
    }
    return rec.take();
}

template <ExactField F>
std::size_t SuiteResult<F>::failures() const {
    std::size_t out = 0;
    for (const auto& r : reports) out += r.ok() ? 0 : 1;
    for (const auto& c : checks) out += c.pass ? 0 : 1;
    return out;
}

template <ExactField F>
SuiteResult<F> run_suite(const SuiteConfig& config) {
    SuiteResult<F> out;
    auto append = [&](std::vector<CheckResult> more) {
        out.checks.insert(out.checks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };
    for (long m = config.min_m; m <= config.max_m; ++m) {
        for (long n = config.min_n; n <= config.max_n; ++n) {
            if (config.ordered_only && m > n) continue;
            for (long s = 0; s < config.seeds; ++s) {
                const Instance<F> inst =
                    gen_instance<F>(config.first_seed + static_cast<std::uint64_t>(s), m, n, config.range, config.disjoint);
                ++out.instances;
                if (config.theorem1) {
                    auto reports = check_theorem1(inst);
                    out.reports.insert(out.reports.end(), std::make_move_iterator(reports.begin()),
                                       std::make_move_iterator(reports.end()));
                }
                if (config.section_props) append(check_section_props(inst));
                if (config.misc) append(check_misc(inst));
                if (config.exchange) append(check_exchange(inst));
                if (config.cofactors) append(check_cofactors(inst));
            }
        }
    }
    return out;
}

#define SYLV_INSTANTIATE_VERIFY(F)                                                                     \
    template Instance<F> make_instance(RootSet<F>, RootSet<F>, std::uint64_t);                        \
    template Instance<F> gen_instance(std::uint64_t, long, long, long, bool);                         \
    template Instance<F> swapped(const Instance<F>&);                                                 \
    template Theorem1Rhs<F> theorem1_expected(const Instance<F>&, long, long);                        \
    template std::vector<BranchReport<F>> check_theorem1(const Instance<F>&);                        \
    template std::vector<std::vector<F>> certification_grid(const Instance<F>&, std::size_t, std::size_t); \
    template std::vector<CheckResult> check_section_props(const Instance<F>&);                       \
    template std::vector<CheckResult> check_misc(const Instance<F>&);                                \
    template std::vector<CheckResult> check_exchange(const Instance<F>&);                            \
    template std::vector<CheckResult> check_cofactors(const Instance<F>&);                           \
    template struct SuiteResult<F>;                                                                   \
    template SuiteResult<F> run_suite(const SuiteConfig&);

SYLV_INSTANTIATE_VERIFY(Rational)
SYLV_INSTANTIATE_VERIFY(ModP)

}  // namespace sylv
