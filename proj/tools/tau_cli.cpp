// Command-line front end: exact tau values, the congruence/Lucas/Thue sieves,
// and the two headline verification pipelines.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "taukit/congruence.hpp"
#include "taukit/diophantine.hpp"
#include "taukit/fib_sieve.hpp"
#include "taukit/lucas.hpp"
#include "taukit/pipeline.hpp"
#include "taukit/tau_table.hpp"
#include "taukit/thue_sieve.hpp"

using nlohmann::json;
using namespace taukit;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kEvidenceOnly = 2;

struct GlobalOpts {
    std::string json_path;
    std::string config_path;
    PipelineConfig cfg;
};

void load_config(GlobalOpts& g) {
    if (g.config_path.empty()) return;
    std::ifstream in(g.config_path);
    if (!in) throw std::runtime_error("cannot open config file " + g.config_path);
    json j = json::parse(in);
    if (j.contains("ell_max")) g.cfg.ell_max = j["ell_max"].get<unsigned long>();
    if (j.contains("p_max")) g.cfg.p_max = j["p_max"].get<std::uint64_t>();
    if (j.contains("n_max")) g.cfg.n_max = j["n_max"].get<std::uint64_t>();
    if (j.contains("restrict_t2")) g.cfg.restrict_t2 = j["restrict_t2"].get<bool>();
    if (j.contains("thue_search_bound"))
        g.cfg.thue_search_bound = j["thue_search_bound"].get<std::uint64_t>();
    if (j.contains("thue_pool")) g.cfg.thue_pool = j["thue_pool"].get<std::vector<std::uint64_t>>();
    if (j.contains("dj_pool")) g.cfg.dj_pool = j["dj_pool"].get<std::vector<std::uint64_t>>();
}

void emit(const GlobalOpts& g, const json& j) {
    if (g.json_path.empty()) return;
    std::ofstream out(g.json_path);
    if (!out) throw std::runtime_error("cannot write " + g.json_path);
    out << j.dump(2) << "\n";
}

TauTable table_covering(std::uint64_t limit, const std::string& cache) {
    if (!cache.empty() && std::filesystem::exists(cache)) {
        TauTable t = TauTable::load(cache);
        if (t.limit() >= limit) return t;
    }
    TauTable t = TauTable::expand(limit);
    if (!cache.empty()) t.save(cache);
    return t;
}

std::string set_str(const std::set<unsigned long>& s) {
    std::string out = "{";
    bool first = true;
    for (unsigned long v : s) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ramanujan tau values and the even-value classification pipelines"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--json", g.json_path, "write a structured JSON report to this file");
    app.add_option("--config", g.config_path, "JSON file setting bounds and modulus pools");

    // compute
    auto* c_compute = app.add_subcommand("compute", "exact tau(n)");
    std::uint64_t opt_n = 1;
    std::string opt_cache;
    c_compute->add_option("--n", opt_n, "index n >= 1")->required();
    c_compute->add_option("--cache", opt_cache, "coefficient cache file (created if absent)");

    // sieve
    auto* c_sieve = app.add_subcommand("sieve", "congruence sieve for tau(p^{d-1}) = A");
    std::string opt_value;
    unsigned long opt_d = 2;
    c_sieve->add_option("--value", opt_value, "target value A (integer)")->required();
    c_sieve->add_option("--d", opt_d, "exponent parameter d >= 2")->required();

    // lucas
    auto* c_lucas = app.add_subcommand("lucas", "Lucas sequence term u_n for (A, Q)");
    std::string opt_A, opt_Q;
    unsigned long opt_ln = 1;
    c_lucas->add_option("--A", opt_A, "A = alpha + beta")->required();
    c_lucas->add_option("--Q", opt_Q, "Q = alpha * beta")->required();
    c_lucas->add_option("--n", opt_ln, "term index n >= 1")->required();

    // dj
    auto* c_dj = app.add_subcommand("dj", "Fibonacci-Lucas exclusion for tau(p^4) = A");
    std::string opt_target;
    c_dj->add_option("--target", opt_target, "target value A")->required();

    // thue
    auto* c_thue = app.add_subcommand("thue", "modular exclusion for tau(p^{d-1}) = sign*ell");
    unsigned long opt_ell = 0, opt_td = 0;
    int opt_sign = 1;
    std::uint64_t opt_thue_pmax = 10'000;
    c_thue->add_option("--ell", opt_ell, "odd prime ell")->required();
    c_thue->add_option("--d", opt_td, "exponent parameter d > 2")->required();
    c_thue->add_option("--sign", opt_sign, "+1 or -1 (default +1)");
    c_thue->add_option("--p-max", opt_thue_pmax, "bound for the exact search");

    // theorem1
    auto* c_t1 = app.add_subcommand("theorem1", "odd-prime-value classification, tau(n) = ±ell");
    c_t1->add_option("--ell-max", g.cfg.ell_max, "upper bound for ell (default 1000)");

    // theorem2
    auto* c_t2 = app.add_subcommand("theorem2", "even-value classification, tau(n) = ±t*ell");
    unsigned opt_t = 2;
    c_t2->add_option("--t", opt_t, "2, 4 or 8")->required();
    c_t2->add_option("--ell-max", g.cfg.ell_max, "upper bound for ell (default 1000)");

    // examples
    auto* c_ex = app.add_subcommand("examples", "first tau(p) = ±2ell, ±4ell, ±8ell");
    c_ex->add_option("--p-max", g.cfg.p_max, "prime scan bound (default 5000)");

    CLI11_PARSE(app, argc, argv);

    try {
        load_config(g);

        if (c_compute->parsed()) {
            TauTable t = table_covering(opt_n, opt_cache);
            Integer v = t.at(opt_n);
            std::cout << "tau(" << opt_n << ") = " << v.get_str() << "\n";
            emit(g, json{{"n", opt_n}, {"tau", v.get_str()}});
            return kOk;
        }

        if (c_sieve->parsed()) {
            Integer a(opt_value);
            SieveVerdict v = sieve_prime_power_target(a, opt_d);
            std::cout << "tau(p^" << opt_d - 1 << ") = " << a.get_str()
                      << (v.pass ? ": consistent" : ": excluded") << "\n";
            for (const std::string& r : v.reasons) std::cout << "  " << r << "\n";
            emit(g, json{{"value", a.get_str()}, {"d", opt_d}, {"pass", v.pass}, {"reasons", v.reasons}});
            return kOk;
        }

        if (c_lucas->parsed()) {
            LucasContext ctx = make_context(Integer(opt_A), Integer(opt_Q));
            Integer v = u_n(ctx, opt_ln);
            std::cout << "u_" << opt_ln << " = " << v.get_str() << "\n";
            emit(g, json{{"A", opt_A}, {"Q", opt_Q}, {"n", opt_ln}, {"u_n", v.get_str()}});
            return kOk;
        }

        if (c_dj->parsed()) {
            Integer a(opt_target);
            long u = 0, v = 0;
            if (!find_ideal_generator(a, u, v)) {
                std::cout << "no generator u^2 - 5 v^2 = ±" << Integer(abs(a)).get_str() << " found\n";
                emit(g, json{{"target", a.get_str()}, {"verdict", "inconclusive"},
                             {"reason", "no-generator"}});
                return kEvidenceOnly;
            }
            DjCertificate cert = dj_exclude(a, u, v, g.cfg.dj_pool);
            std::cout << "tau(p^4) = " << a.get_str() << ": "
                      << (cert.excluded ? "excluded" : "inconclusive") << " (generator " << u
                      << ", " << v << ")\n";
            emit(g, to_json(cert));
            return cert.excluded ? kOk : kEvidenceOnly;
        }

        if (c_thue->parsed()) {
            ThueInstance inst{opt_ell, opt_td, opt_sign};
            const auto pool = g.cfg.thue_pool.empty() ? default_thue_pool() : g.cfg.thue_pool;
            SieveCertificate cert = modular_exclusion(inst, pool);
            TauTable t = table_covering(opt_thue_pmax, "");
            auto hits = bounded_search(inst, opt_thue_pmax, t);
            std::cout << "tau(p^" << opt_td - 1 << ") = " << (opt_sign == 1 ? "" : "-") << opt_ell
                      << ": " << cert.status;
            if (cert.status == "excluded") std::cout << " (mod " << cert.excluding_modulus << ")";
            std::cout << "; exact search to " << opt_thue_pmax << " found " << hits.size()
                      << " solution(s)\n";
            json j = to_json(cert);
            j["search_bound"] = opt_thue_pmax;
            j["search_hits"] = hits;
            emit(g, j);
            if (!hits.empty()) return kError;
            return cert.status == "excluded" ? kOk : kEvidenceOnly;
        }

        if (c_t1->parsed()) {
            std::uint64_t need = std::max<std::uint64_t>(g.cfg.ell_max, g.cfg.thue_search_bound);
            TauTable t = table_covering(need, "");
            Theorem1Result r = run_theorem1(g.cfg, t);
            for (int eps : {1, -1}) {
                std::cout << "exceptional ell (eps = " << (eps == 1 ? "+1" : "-1")
                          << "): " << set_str(r.exceptional[eps]) << "\n";
                std::cout << "  congruence survivors:";
                for (const Survivor& s : r.survivors[eps])
                    std::cout << " (" << s.ell << "," << s.d << ")";
                std::cout << "\n";
            }
            if (r.any_evidence_only)
                std::cout << "note: some exclusions rest on bounded-search evidence only\n";
            emit(g, to_json(r));
            return r.any_evidence_only ? kEvidenceOnly : kOk;
        }

        if (c_t2->parsed()) {
            TauTable t = table_covering(g.cfg.ell_max, "");
            Theorem2Result r = run_theorem2(opt_t, g.cfg, t);
            for (int eps : {1, -1})
                std::cout << "L_" << opt_t << (eps == 1 ? "^+" : "^-") << " = "
                          << set_str(r.l_sets[eps]) << "\n";
            emit(g, to_json(r));
            return r.any_evidence_only ? kEvidenceOnly : kOk;
        }

        if (c_ex->parsed()) {
            TauTable t = table_covering(g.cfg.p_max, "");
            auto ex = first_examples(g.cfg.p_max, t);
            for (const FirstExample& e : ex) {
                std::cout << (e.sign == 1 ? "+" : "-") << e.t << " * ell: ";
                if (e.found)
                    std::cout << "p = " << e.p << ", ell = " << e.ell.get_str() << "\n";
                else
                    std::cout << "no example up to " << g.cfg.p_max << "\n";
            }
            emit(g, to_json(ex));
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
