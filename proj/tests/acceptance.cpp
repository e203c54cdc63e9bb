// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Each check recomputes from scratch through the public interfaces.

#include <chrono>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "taukit/arith.hpp"
#include "taukit/congruence.hpp"
#include "taukit/diophantine.hpp"
#include "taukit/fib_sieve.hpp"
#include "taukit/fm_polynomial.hpp"
#include "taukit/lucas.hpp"
#include "taukit/pipeline.hpp"
#include "taukit/tau_table.hpp"
#include "taukit/thue_sieve.hpp"

using namespace taukit;

namespace {

int failures = 0;

void report(int idx, bool pass, const std::string& what, const std::string& note = "") {
    std::cout << "CRITERION " << idx << ": " << (pass ? "PASS" : "FAIL") << " - " << what;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

bool expect(bool cond, const char* what) {
    if (!cond) std::cout << "  check failed: " << what << std::endl;
    return cond;
}
#define EXPECT(...) ok = expect((__VA_ARGS__), #__VA_ARGS__) && ok

long tau_pp_mod(const TauTable& t, std::uint64_t p, unsigned long d, long m) {
    long A = mod_l(t.at(p), m);
    long Q = static_cast<long>(powmod(p % static_cast<std::uint64_t>(m), 11,
                                      static_cast<std::uint64_t>(m)));
    long prev = 1 % m, cur = A;
    if (d == 1) return prev;
    for (unsigned long i = 2; i < d; ++i) {
        long next = ((A * cur - Q * prev) % m + m) % m;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;

    // ---- 1: exact coefficients and the intro factorizations ----
    auto t0 = clock::now();
    TauTable t5000 = TauTable::expand(5000);
    {
        bool ok = true;
        EXPECT(t5000.at(2) == -24);
        EXPECT(t5000.at(3) == 252);
        EXPECT(t5000.at(277) == Integer("-2") * Integer("8209466002937"));
        EXPECT(t5000.at(1297) == Integer("2") * Integer("58734858143062873"));
        EXPECT(t5000.at(163) == Integer("-4") * Integer("89458189897"));
        EXPECT(t5000.at(4603) == Integer("4") * Integer("56958468932026008713"));
        EXPECT(t5000.at(967) == Integer("8") * Integer("2311913038549627"));
        EXPECT(t5000.at(2647) == Integer("8") * Integer("1344910678663379137"));
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        EXPECT(secs < 60.0);
        report(1, ok, "exact coefficients to 5000 and the seven printed factorizations",
               std::to_string(secs).substr(0, 5) + " s");
    }

    TauTable table = TauTable::expand(10'000);
    PipelineConfig cfg;

    // ---- 2: the eight exceptional residue sets, 14 triples total ----
    Theorem1Result t1r = run_theorem1(cfg, table);
    {
        bool ok = true;
        using S = std::set<unsigned long>;
        EXPECT(t1r.exceptional.at(1) == S{461});
        EXPECT(t1r.exceptional.at(-1) == S{599});
        Theorem2Result r2 = run_theorem2(2, cfg, table);
        Theorem2Result r4 = run_theorem2(4, cfg, table);
        Theorem2Result r8 = run_theorem2(8, cfg, table);
        EXPECT(r2.l_sets.at(1) == S{});
        EXPECT(r2.l_sets.at(-1) == S{587});
        EXPECT(r4.l_sets.at(1) == S{23, 449, 569, 863});
        EXPECT(r4.l_sets.at(-1) == S{241, 397, 811});
        EXPECT(r8.l_sets.at(1) == S{457});
        EXPECT(r8.l_sets.at(-1) == S{3, 293, 983});
        std::size_t total = t1r.exceptional.at(1).size() + t1r.exceptional.at(-1).size();
        for (const Theorem2Result* r : {&r2, &r4, &r8})
            total += r->l_sets.at(1).size() + r->l_sets.at(-1).size();
        EXPECT(total == 14);
        report(2, ok, "eight exceptional residue sets reproduced; 14 triples");
    }

    // ---- 3: congruence-stage survivor pairs, 10 + 10 ----
    {
        bool ok = true;
        using P = std::pair<unsigned long, unsigned long>;
        auto pairs = [](const std::vector<Survivor>& v) {
            std::set<P> out;
            for (const Survivor& s : v) out.insert({s.ell, s.d});
            return out;
        };
        std::set<P> plus = {{277, 23}, {281, 5}, {421, 7}, {461, 5}, {631, 79},
                            {827, 23}, {827, 59}, {967, 7}, {967, 11}, {967, 23}};
        std::set<P> minus = {{367, 23}, {443, 17}, {599, 5}, {643, 23}, {643, 107},
                             {827, 59}, {829, 23}, {829, 83}, {919, 5}, {919, 17}};
        EXPECT(t1r.survivors.at(1).size() == 10);
        EXPECT(t1r.survivors.at(-1).size() == 10);
        EXPECT(pairs(t1r.survivors.at(1)) == plus);
        EXPECT(pairs(t1r.survivors.at(-1)) == minus);
        // the residue sieve alone admits 8 further (ell, 3) pairs; those are
        // closed by the bounded square-value search, which is evidence, not
        // proof (every one of them has a realized prime matching the target
        // in all five moduli, so no residue argument can remove them)
        std::size_t extra = t1r.residue_survivors.at(1).size() - t1r.survivors.at(1).size() +
                            t1r.residue_survivors.at(-1).size() - t1r.survivors.at(-1).size();
        EXPECT(t1r.residue_survivors.at(1).size() == 16);
        EXPECT(t1r.residue_survivors.at(-1).size() == 12);
        report(3, ok, "survivor pairs: 10 + 10 after the cubic square-value search",
               std::to_string(extra) + " residue-only pairs closed by bounded search");
    }

    // ---- 4: Fibonacci-Lucas residue exclusion ----
    {
        auto t4 = clock::now();
        bool ok = true;
        FibSieveResult r281 = fib_lucas_mod(19, 4, 89);
        EXPECT(r281.period == 44);
        EXPECT(r281.classes.empty());
        FibSieveResult a = fib_lucas_mod(42, 13, 89);
        FibSieveResult b = fib_lucas_mod(42, 13, 199);
        EXPECT(a.classes == std::set<unsigned long>{1, 12, 23, 34});
        EXPECT(b.period == 22);
        EXPECT(b.classes == std::set<unsigned long>{11});
        EXPECT(crt_incompatible(a, b));
        long u = 0, v = 0;
        EXPECT(find_ideal_generator(Integer(281), u, v) && dj_exclude(Integer(281), u, v).excluded);
        EXPECT(find_ideal_generator(Integer(-919), u, v) && dj_exclude(Integer(-919), u, v).excluded);
        double secs = std::chrono::duration<double>(clock::now() - t4).count();
        EXPECT(secs < 1.0);
        report(4, ok, "quartic-target exclusion: periods, classes, +281 and -919 ruled out",
               std::to_string(secs).substr(0, 5) + " s");
    }

    // ---- 5: exhaustive small-equation searches ----
    {
        bool ok = true;
        auto e1 = solve_p_squared_eq(1'000'000, 64);
        EXPECT(e1.size() == 1 && e1[0].eps == 1 && e1[0].p == 2 && e1[0].r == 1);
        auto e2 = search_two_ell_power(1'000'000, 99, 64);
        EXPECT(!e2.empty());
        for (const auto& s : e2) {
            if (s.p != 3 || s.eps != -1) {
                ok = expect(false, "unexpected family in 2*ell^j = p^d + eps");
                break;
            }
        }
        auto e3 = search_eight_ell_power(1'000'000, 99, 64);
        EXPECT(!e3.empty());
        for (const auto& s : e3) {
            if (s.p != 7 || s.eps != 1) {
                ok = expect(false, "unexpected family in 8*ell^j = p^d + eps");
                break;
            }
        }
        report(5, ok, "equation searches to p <= 10^6, d <= 99, j <= 64: known families only");
    }

    // ---- 6: defective-case prime-power check ----
    {
        bool ok = true;
        DefectiveCaseReport k3 = genEVT_defective_check(3);
        EXPECT(k3.three_branch.value == 121);
        EXPECT(k3.three_branch.solution.has_value() &&
               k3.three_branch.solution->first == 11 && k3.three_branch.solution->second == 1);
        DefectiveCaseReport k6 = genEVT_defective_check(6);
        EXPECT(!k6.three_branch.solution.has_value() && !k6.three_branch.is_one);
        EXPECT(!k6.seven_branch.solution.has_value() && !k6.seven_branch.is_one);
        report(6, ok, "defective-case values: k=3 gives 121 = 11^2, k=6 gives none");
    }

    // ---- 7: property sweeps ----
    {
        bool ok = true;
        // multiplicativity + recurrence
        for (std::uint64_t n = 1; n <= 2000 && ok; ++n)
            if (table.tau_of(n) != table.at(n)) ok = expect(false, "multiplicative assembly");
        // parity law
        for (std::uint64_t n = 1; n <= 10'000 && ok; ++n) {
            bool odd = mpz_odd_p(table.at(n).get_mpz_t()) != 0;
            std::uint64_t r = static_cast<std::uint64_t>(
                mpz_class(sqrt(Integer(static_cast<unsigned long>(n)))).get_ui());
            if (odd != (n % 2 == 1 && r * r == n)) ok = expect(false, "parity law");
        }
        // coefficient bound at primes
        for (std::uint64_t p : primes_up_to(5000))
            if (!(table.at(p) * table.at(p) <
                  4 * pow_ui(Integer(static_cast<unsigned long>(p)), 11)))
                ok = expect(false, "square-root bound");
        // Lucas divisibility / apparition
        LucasContext fib = make_context(1, -1);
        for (std::uint64_t ell : {3ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull}) {
            auto r = rank_of_apparition(fib, Integer(static_cast<unsigned long>(ell)));
            if (!r || *r > ell + 1) { ok = expect(false, "rank bound"); continue; }
            for (unsigned long n = 1; n <= 3 * *r; ++n)
                if ((mod_u64(u_n(fib, n), ell) == 0) != (n % *r == 0))
                    ok = expect(false, "apparition divisibility");
        }
        for (std::uint64_t p : {11ull, 13ull}) {
            LucasContext ctx = tau_context(p, table);
            for (unsigned long i = 1; i <= 8; ++i)
                if (u_n(ctx, i) !=
                    tau_prime_power(table.at(p), Integer(static_cast<unsigned long>(p)), i - 1))
                    ok = expect(false, "tau Lucas context");
        }
        // residue tables
        for (std::uint64_t p : primes_up_to(10'000)) {
            for (unsigned long d = 1; d <= 30; ++d) {
                if (p == 23) {
                    if (tau_pp_mod(table, p, d, 23) != 1) ok = expect(false, "p = 23 clause");
                } else if (!allowed_residues(d, 23).count(tau_pp_mod(table, p, d, 23))) {
                    ok = expect(false, "mod-23 table");
                }
                if (!allowed_residues(d, 12).count(tau_pp_mod(table, p, d, 12)) ||
                    !allowed_residues(d, 5).count(tau_pp_mod(table, p, d, 5)) ||
                    !allowed_residues(d, 7).count(tau_pp_mod(table, p, d, 7)))
                    ok = expect(false, "residue tables mod 12/5/7");
            }
        }
        // even-index form family
        auto fm = generate_fm(10);
        for (std::uint64_t p : primes_up_to(50))
            for (unsigned long m = 1; m <= 5; ++m)
                if (fm[2 * m].eval(pow_ui(Integer(static_cast<unsigned long>(p)), 11),
                                   table.at(p) * table.at(p)) !=
                    tau_prime_power(table.at(p), Integer(static_cast<unsigned long>(p)), 2 * m))
                    ok = expect(false, "form family cross-check");
        // quartic curve identity
        for (std::uint64_t p : primes_up_to(200)) taup4_point(p, table.at(p));
        report(7, ok, "property sweeps: multiplicativity, parity, bounds, ranks, tables, forms");
    }

    // ---- 8: the sixteen listed instances ----
    {
        bool ok = true;
        LDReport rep = verify_LD_lists(table, 10'000);
        EXPECT(rep.entries.size() == 16);
        EXPECT(!rep.any_solution_found);
        int certificates = 0, evidence = 0;
        for (const auto& e : rep.entries) {
            if (!e.search_hits.empty()) ok = expect(false, "search hit on a listed instance");
            if (e.certificate.status == "excluded") ++certificates; else ++evidence;
        }
        std::string note = std::to_string(certificates) + " modular certificates, " +
                           std::to_string(evidence) + " evidence-only";
        EXPECT(t1r.any_evidence_only == (evidence > 0));
        report(8, ok, "listed instances: empty exact search to 10^4, outcomes recorded", note);
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << std::endl;
    return failures == 0 ? 0 : 1;
}
