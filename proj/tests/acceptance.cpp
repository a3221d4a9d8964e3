// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sylv/schur.hpp"
#include "sylv/subres.hpp"
#include "sylv/subset.hpp"
#include "sylv/sylvester.hpp"
#include "sylv/syminterp.hpp"
#include "sylv/verify.hpp"

using sylv::Rational;
using P = sylv::UniPoly<Rational>;
using Roots = sylv::RootSet<Rational>;
using Inst = sylv::Instance<Rational>;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string where(const Inst& inst, const std::string& extra) {
    return "m=" + std::to_string(inst.m()) + " n=" + std::to_string(inst.n()) + " seed=" + std::to_string(inst.seed) +
           " " + extra;
}

/// Instance with sizes drawn uniformly from [1, max_size].
Inst random_instance(std::mt19937_64& rng, std::uint64_t seed, long max_size) {
    const long m = oracle::random_between(rng, 1, max_size);
    const long n = oracle::random_between(rng, 1, max_size);
    return sylv::gen_instance<Rational>(seed, m, n, 10);
}

Rational point_off_roots(std::mt19937_64& rng, const Inst& inst) {
    std::vector<Rational> taken(inst.a.begin(), inst.a.end());
    taken.insert(taken.end(), inst.b.begin(), inst.b.end());
    return oracle::random_distinct(rng, 1, 40, taken).front();
}

Outcome theorem1_sweep() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (long m = 1; m <= 5; ++m)
        for (long n = m; n <= 5; ++n)
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const Inst inst = sylv::gen_instance<Rational>(seed, m, n, 10);
                for (const auto& r : sylv::check_theorem1(inst)) {
                    const std::string at = where(inst, "p=" + std::to_string(r.p) + " q=" + std::to_string(r.q));
                    o.expect(r.pass, at + " branch " + r.branch + ": expected " + sylv::to_string(r.expected) +
                                         ", computed " + sylv::to_string(r.computed));
                    o.expect(r.forms_agree, at + ": the two displayed forms differ");
                    o.expect(r.degree_ok, at + ": degree above p+q");
                    o.expect(!r.condition_conflict, at + ": branch conditions conflict");
                }
            }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(seconds < 120.0, "sweep took " + std::to_string(seconds) + " s");
    return o;
}

Outcome fixtures() {
    Outcome o;
    const Roots a{1, 2}, b{3, 4};
    const std::vector<Rational> av{1, 2}, bv{3, 4};
    const P f = sylv::poly_from_roots(a), g = sylv::poly_from_roots(b);
    const P sres1 = sylv::sres(f, g, 1);
    const auto c0 = sylv::bezout_cofactors_det(f, g, 0);
    const auto c1 = sylv::bezout_cofactors_det(f, g, 1);

    o.expect(sres1 == (P{10, -4}), "Sres_1 = " + sylv::to_string(sres1));
    o.expect(sylv::syl_double(a, b, 0, 1) == (P{10, -4}), "Syl_{0,1}");
    o.expect(sylv::syl_double(a, b, 1, 0) == (P{-10, 4}), "Syl_{1,0}");
    o.expect(sylv::resultant(f, g) == Rational(12L), "Res");
    o.expect(c0.f == (P{18, -4}), "F_0 = " + sylv::to_string(c0.f));
    o.expect(c0.g == (P{-2, 4}), "G_0 = " + sylv::to_string(c0.g));
    o.expect(c0.f * f + c0.g * g == P{12}, "F_0 f + G_0 g");
    o.expect(c1.f == P{-1}, "F_1 = " + sylv::to_string(c1.f));
    o.expect(sylv::syl_double(a, b, 2, 0) == f, "Syl_{2,0}");

    // Oracles: direct subset sums, the Poisson product and the 3x3 / 4x4 Leibniz determinants.
    o.expect(oracle::resultant_from_roots(av, bv) == Rational(12L), "Poisson product");
    for (long x = -3; x <= 3; ++x) {
        const Rational t(x);
        o.expect(oracle::syl_double_at(av, bv, 0, 1, t) == Rational(10 - 4 * x), "oracle Syl_{0,1}");
        o.expect(oracle::syl_double_at(av, bv, 1, 0, t) == Rational(4 * x - 10), "oracle Syl_{1,0}");
        o.expect(oracle::syl_double_at(av, bv, 2, 0, t) == f(t), "oracle Syl_{2,0}");
    }
    const sylv::Matrix<Rational> sylvester{{1, -3, 2, 0}, {0, 1, -3, 2}, {1, -7, 12, 0}, {0, 1, -7, 12}};
    o.expect(oracle::leibniz_det(sylvester) == Rational(12L), "Leibniz resultant");
    return o;
}

Outcome bezout_identity() {
    Outcome o;
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Inst inst = random_instance(rng, seed, 6);
        for (long k = 0; k <= std::min(inst.m(), inst.n()) - 1; ++k) {
            const auto c = sylv::bezout_cofactors_det(inst.f, inst.g, k);
            o.expect(sylv::sres(inst.f, inst.g, k) == c.f * inst.f + c.g * inst.g, where(inst, "k=" + std::to_string(k)));
        }
    }
    return o;
}

Outcome triple_agreement() {
    Outcome o;
    std::mt19937_64 rng(4);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Inst inst = random_instance(rng, 1000 + seed, 6);
        for (long k = 0; k <= std::min(inst.m(), inst.n()) - 1; ++k) {
            const std::string at = where(inst, "k=" + std::to_string(k));
            const auto det = sylv::bezout_cofactors_det(inst.f, inst.g, k);
            const auto roots = sylv::cofactors_from_roots(inst.a, inst.b, k);
            const auto exch = sylv::cofactors_exchange_form(inst.a, inst.b, k);
            o.expect(det.f == roots.f && det.g == roots.g, at + ": determinant vs roots form");
            o.expect(det.f == exch.f && det.g == exch.g, at + ": determinant vs exchange form");
        }
    }
    return o;
}

Outcome exchange_lemma() {
    Outcome o;
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n)
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const Inst inst = sylv::gen_instance<Rational>(seed, m, n, 10);
                for (const auto& c : sylv::check_exchange(inst))
                    o.expect(c.pass, where(inst, c.check + " " + c.params + " " + c.detail));
            }
    return o;
}

Outcome symmetric_interpolation() {
    Outcome o;
    std::mt19937_64 rng(6);
    for (long n = 1; n <= 6; ++n)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Roots b = sylv::gen_instance<Rational>(seed, 1, n, 10).b;
            const std::size_t size = static_cast<std::size_t>(n);
            for (long d = 0; d <= n - 1; ++d) {
                const std::string at = "n=" + std::to_string(n) + " seed=" + std::to_string(seed) + " d=" + std::to_string(d);
                sylv::NodeValues<Rational> values;
                for (const auto node : sylv::subsets(size, size - static_cast<std::size_t>(d)))
                    values.emplace(node.mask(), Rational(oracle::random_between(rng, -30, 30)));
                const auto h = sylv::sym_interpolate(b, d, values);
                for (const auto& [mask, value] : values) {
                    const auto node = sylv::SubsetSelector(mask, size).pick(b.elems());
                    o.expect(sylv::sym_eval(h, std::span<const Rational>(node)) == value, at + ": round trip");
                }
                const auto basis = sylv::subsets(size, static_cast<std::size_t>(d));
                o.expect(sylv::BigInt(static_cast<long>(basis.size())) == sylv::binomial(n, d), at + ": basis count");
                o.expect(sylv::BigInt(static_cast<long>(h.coeffs().size())) == sylv::binomial(n, d), at + ": coefficient count");
                for (const auto& bp : basis) {
                    const auto e = sylv::SymPolyInBasis<Rational>::basis_element(b, d, bp.mask());
                    for (const auto& other : basis) {
                        const auto node = other.complement().pick(b.elems());
                        const bool zero = sylv::sym_eval(e, std::span<const Rational>(node)).is_zero();
                        o.expect(zero == (other.mask() != bp.mask()), at + ": Kronecker property");
                    }
                }
                o.expect(sylv::basis_independence_check(b, d), at + ": independence determinant");
            }
        }
    return o;
}

Outcome matrix_forms() {
    Outcome o;
    for (long m = 1; m <= 4; ++m)
        for (long n = 1; n <= 4; ++n)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const Inst inst = sylv::gen_instance<Rational>(seed, m, n, 10);
                for (long d = 0; d <= std::min(n - 1, m); ++d) {
                    const auto grid = sylv::certification_grid(inst, static_cast<std::size_t>(n - d), static_cast<std::size_t>(d + 1));
                    std::vector<std::size_t> idx(grid.size(), 0);
                    while (true) {
                        std::vector<Rational> pt;
                        for (std::size_t i = 0; i < grid.size(); ++i) pt.push_back(grid[i][idx[i]]);
                        const std::span<const Rational> s(pt);
                        o.expect(sylv::msyl_det_eval(inst.a, inst.b, d, s) == sylv::msyl_eval(inst.a, inst.b, d, s),
                                 where(inst, "grid d=" + std::to_string(d)));
                        std::size_t i = 0;
                        while (i < grid.size() && ++idx[i] == grid[i].size()) idx[i++] = 0;
                        if (i == grid.size()) break;
                    }
                }
            }
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Inst inst = random_instance(rng, 2000 + seed, 6);
        const long d = oracle::random_between(rng, 0, std::min(inst.n() - 1, inst.m()));
        const auto pt = oracle::random_distinct(rng, static_cast<std::size_t>(inst.n() - d), 50);
        const std::span<const Rational> s(pt);
        const Rational det = sylv::msyl_det_eval(inst.a, inst.b, d, s);
        o.expect(det == sylv::msyl_eval(inst.a, inst.b, d, s), where(inst, "random point d=" + std::to_string(d)));
        const std::vector<Rational> av(inst.a.begin(), inst.a.end()), bv(inst.b.begin(), inst.b.end());
        o.expect(det == oracle::msyl_at(av, bv, static_cast<std::size_t>(d), pt), where(inst, "oracle sum"));
    }
    return o;
}

Outcome schur_forms() {
    Outcome o;
    std::mt19937_64 rng(8);
    for (int it = 0; it < 50; ++it) {
        const std::size_t l = static_cast<std::size_t>(oracle::random_between(rng, 1, 5));
        std::vector<long> parts;
        for (std::size_t i = 0; i < l; ++i) parts.push_back(oracle::random_between(rng, 0, 4));
        std::sort(parts.rbegin(), parts.rend());
        const sylv::Partition lambda(parts);
        auto xs = oracle::random_distinct(rng, l, 12);
        const Rational value = sylv::schur_eval<Rational>(lambda, xs);
        o.expect(value == oracle::schur_by_tableaux(parts, xs), "bialternant vs tableaux");
        std::shuffle(xs.begin(), xs.end(), rng);
        o.expect(sylv::schur_eval<Rational>(lambda, xs) == value, "bialternant symmetry");
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Inst inst = random_instance(rng, 3000 + seed, 6);
        const long k = oracle::random_between(rng, 0, std::min(inst.m(), inst.n()) - 1);
        const Rational t = point_off_roots(rng, inst);
        const auto det = sylv::bezout_cofactors_det(inst.f, inst.g, k);
        const std::string at = where(inst, "k=" + std::to_string(k) + " t=" + t.to_string());
        o.expect(sylv::cofactor_f_schur_eval(inst.a, inst.g, k, t) == det.f(t), at + ": F_k Schur form");
        o.expect(sylv::cofactor_g_schur_eval(inst.b, inst.f, k, t) == det.g(t), at + ": G_k Schur form");
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Inst inst = random_instance(rng, 4000 + seed, 6);
        const long k = oracle::random_between(rng, 0, std::min(inst.m(), inst.n()) - 1);
        const Rational t = point_off_roots(rng, inst);
        const auto pair = sylv::schur_special_case(inst.a, inst.n(), k, t);
        o.expect(pair.cofactor == pair.schur, where(inst, "F_k(f, x^n) k=" + std::to_string(k)));
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Inst inst = random_instance(rng, 5000 + seed, 6);
        const long k = oracle::random_between(rng, 0, std::min(inst.m(), inst.n()) - 1);
        const Rational t = point_off_roots(rng, inst);
        o.expect(sylv::cauchy_binet_factorization_check(inst.a, inst.g, k, t),
                 where(inst, "Cauchy-Binet k=" + std::to_string(k)));
    }
    return o;
}

Outcome single_sum_table() {
    Outcome o;
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const Inst inst = sylv::gen_instance<Rational>(seed, m, n, 10);
                for (long d = 0; d <= n; ++d) {
                    const std::string branch = sylv::single_sum_branch(m, n, d);
                    P expected;
                    if (branch == "sres") expected = sylv::sres(inst.f, inst.g, d);
                    if (branch == "f") expected = inst.f * sylv::signed_scalar<Rational>(m + n - 1);
                    if (branch == "g") expected = inst.g;
                    o.expect(sylv::syl_double(inst.a, inst.b, 0, d) == expected,
                             where(inst, "d=" + std::to_string(d) + " branch " + branch));
                }
            }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"double-sum description sweep, 1 <= m <= n <= 5, 5 seeds", theorem1_sweep},
        {"fixture regression A={1,2}, B={3,4}", fixtures},
        {"Bezout identity on 100 random instances", bezout_identity},
        {"cofactor triple agreement on 50 random instances", triple_agreement},
        {"exchange identity and orientation reconciliation", exchange_lemma},
        {"symmetric Lagrange interpolation, |B| <= 6", symmetric_interpolation},
        {"determinantal MSyl on grids and random points", matrix_forms},
        {"Schur forms, x^n special case and Cauchy-Binet", schur_forms},
        {"closing single-sum table, m, n <= 6", single_sum_table},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %zu: %s (%zu checks)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), o.checked, o.pass ? "" : ": ", o.detail.c_str());
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
