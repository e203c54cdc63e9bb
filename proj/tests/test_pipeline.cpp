#include <doctest.h>

#include <algorithm>

#include "taukit/pipeline.hpp"

using namespace taukit;

namespace {

const TauTable& table() {
    static TauTable t = TauTable::expand(10'000);
    return t;
}

const PipelineConfig& cfg() {
    static PipelineConfig c;  // defaults: ell_max 1000, p_max 5000, n_max 1e5
    return c;
}

const Theorem1Result& t1() {
    static Theorem1Result r = run_theorem1(cfg(), table());
    return r;
}

}  // namespace

TEST_CASE("odd-prime targets: exceptional sets and survivors") {
    CHECK(t1().exceptional.at(1) == std::set<unsigned long>{461});
    CHECK(t1().exceptional.at(-1) == std::set<unsigned long>{599});
    CHECK(t1().survivors.at(1).size() == 10);
    CHECK(t1().survivors.at(-1).size() == 10);
    // the residue stage alone admits 8 extra (ell, 3) pairs; the bounded
    // square-value search narrows them away
    CHECK(t1().residue_survivors.at(1).size() == 16);
    CHECK(t1().residue_survivors.at(-1).size() == 12);
    for (int eps : {1, -1})
        for (const Survivor& s : t1().survivors.at(eps)) CHECK(s.d != 3);

    for (const ExclusionReport& r : t1().reports) {
        CHECK((r.verdict == "excluded" || r.verdict == "exceptional" || r.verdict == "evidence-only"));
        CHECK(!r.chain.empty());
        if (r.verdict == "exceptional") CHECK(!r.shapes.empty());
    }
}

TEST_CASE("exceptional odd-prime targets have quartic shape only") {
    for (const ExclusionReport& r : t1().reports) {
        if (r.verdict != "exceptional") continue;
        REQUIRE(r.shapes.size() == 1);
        CHECK(r.shapes[0].find("p^4") != std::string::npos);
    }
}

TEST_CASE("target 281: chain ends at the Fibonacci-Lucas step") {
    auto it = std::find_if(t1().reports.begin(), t1().reports.end(), [](const ExclusionReport& r) {
        return r.eps == 1 && r.ell == 281;
    });
    REQUIRE(it != t1().reports.end());
    CHECK(it->verdict == "excluded");
    REQUIRE(!it->chain.empty());
    CHECK(it->chain.back().module == "fibonacci-sieve");
    CHECK(it->chain.back().step == "exclude");
}

TEST_CASE("even targets: the six residue sets and the 14-triple count") {
    Theorem2Result r2 = run_theorem2(2, cfg(), table());
    Theorem2Result r4 = run_theorem2(4, cfg(), table());
    Theorem2Result r8 = run_theorem2(8, cfg(), table());
    CHECK(r2.l_sets.at(1) == std::set<unsigned long>{});
    CHECK(r2.l_sets.at(-1) == std::set<unsigned long>{587});
    CHECK(r4.l_sets.at(1) == std::set<unsigned long>{23, 449, 569, 863});
    CHECK(r4.l_sets.at(-1) == std::set<unsigned long>{241, 397, 811});
    CHECK(r8.l_sets.at(1) == std::set<unsigned long>{457});
    CHECK(r8.l_sets.at(-1) == std::set<unsigned long>{3, 293, 983});

    std::size_t total = t1().exceptional.at(1).size() + t1().exceptional.at(-1).size();
    for (const Theorem2Result* r : {&r2, &r4, &r8})
        total += r->l_sets.at(1).size() + r->l_sets.at(-1).size();
    CHECK(total == 14);
}

TEST_CASE("realized target -8*3 is reported with its instance") {
    Theorem2Result r8 = run_theorem2(8, cfg(), table());
    auto it = std::find_if(r8.reports.begin(), r8.reports.end(), [](const ExclusionReport& r) {
        return r.eps == -1 && r.ell == 3;
    });
    REQUIRE(it != r8.reports.end());
    CHECK(it->verdict == "exceptional");
    REQUIRE(!it->instances.empty());
    CHECK(it->instances.front() == 2);
}

TEST_CASE("first-example table") {
    auto ex = first_examples(5000, table());
    auto find = [&ex](int sign, unsigned t) -> const FirstExample& {
        for (const FirstExample& e : ex)
            if (e.sign == sign && e.t == t) return e;
        throw std::logic_error("slot missing");
    };
    CHECK(find(-1, 2).p == 277);
    CHECK(find(-1, 2).ell == Integer("8209466002937"));
    CHECK(find(1, 2).p == 1297);
    CHECK(find(1, 2).ell == Integer("58734858143062873"));
    CHECK(find(-1, 4).p == 163);
    CHECK(find(-1, 4).ell == Integer("89458189897"));
    CHECK(find(1, 4).p == 4603);
    CHECK(find(1, 4).ell == Integer("56958468932026008713"));
    CHECK(find(-1, 8).p == 2);
    CHECK(find(-1, 8).ell == 3);
    CHECK(find(1, 8).p == 967);
    CHECK(find(1, 8).ell == Integer("2311913038549627"));
}

TEST_CASE("shape classification") {
    // -4*ell targets decompose three ways
    Classification c = classify_n_for_target(-1, 4, 241, cfg(), table());
    REQUIRE(c.shapes.size() == 3);
    CHECK(c.shapes[0].tau2_prime_count == 0);
    CHECK(c.shapes[1].tau2_prime_count == 1);
    CHECK(c.shapes[2].tau2_prime_count == 2);
    CHECK(c.shapes[0].admissible);  // 241 is in the -4 residue set
    CHECK(c.instances.empty());

    Classification c83 = classify_n_for_target(-1, 8, 3, cfg(), table());
    REQUIRE(!c83.instances.empty());
    CHECK(c83.instances.front() == 2);

    Classification c461 = classify_n_for_target(1, 1, 461, cfg(), table());
    REQUIRE(c461.shapes.size() == 1);
    CHECK(c461.shapes[0].admissible);
    CHECK(c461.shapes[0].residual.find("p^{d-1}") != std::string::npos);
    CHECK(c461.instances.empty());
}

TEST_CASE("reports serialize") {
    auto j = to_json(t1());
    CHECK(j.contains("reports"));
    CHECK(j["exceptional"]["plus"] == std::set<unsigned long>{461});
}
