// Acceptance run: one PASS/FAIL line per criterion.
#include "hd/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

using namespace hd;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

bool all_of(const SuiteReport& rep, const char* key) {
    for (auto& r : rep.records)
        if (!r.value(key, false)) return false;
    return true;
}

std::string failing(const SuiteReport& rep, const char* key, int limit = 6) {
    std::string s;
    int k = 0;
    for (auto& r : rep.records)
        if (!r.value(key, false) && k++ < limit) s += (s.empty() ? "" : " ") + r["instance"].get<std::string>();
    return s;
}

SweepConfig config(int l, int window) {
    SweepConfig c;
    c.l = l;
    c.window = window;
    return c;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int n, const std::string& name, const std::function<Verdict()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !v.pass;
        std::printf("criterion %2d: %s  %s  [%.1fs]  %s\n", n, v.pass ? "PASS" : "FAIL", name.c_str(), s, v.detail.c_str());
        std::fflush(stdout);
    };

    SuiteReport d2, v3, v4;
    report(1, "D^2 identity, l <= 4, window [-2,2]", [&] {
        d2 = run_suite("d2", config(4, 2));
        return Verdict{all_of(d2, "d2_printed"), std::to_string(d2.records.size()) + " modules; failing: " + failing(d2, "d2_printed")};
    });
    report(2, "anticommutation with Delta(s~_alpha)", [&] {
        return Verdict{all_of(d2, "anticommutation"), std::to_string(d2.records.size()) + " modules; failing: " + failing(d2, "anticommutation")};
    });

    report(3, "vanishing theorem, l = 3, 4, window 3", [&] {
        v3 = run_suite("vanishing", config(3, 3));
        v4 = run_suite("vanishing", config(4, 3));
        bool ok = true;
        std::string d;
        for (auto* v : {&v3, &v4}) {
            ok = ok && all_of(*v, "hd_ok") && v->summary["count_ok"].get<bool>();
            d += "l=" + std::to_string(v->summary["l"].get<int>()) + ": nonzero " + std::to_string(v->summary["nonzero"].get<long long>()) +
                 " (expected " + std::to_string(v->summary["distinct_odd_partitions"].get<long long>()) + "), off-prediction: " +
                 failing(*v, "hd_ok", 10) + "; mismatches modulo central translation " +
                 std::to_string(v->summary["hd_failures_mod_center"].get<long long>()) + ". ";
        }
        return Verdict{ok, d};
    });

    report(4, "golden values", [&] {
        auto g = run_suite("golden", SweepConfig{});
        std::string d;
        for (auto& r : g.records) d += r["instance"].get<std::string>() + (r["pass"].get<bool>() ? " ok " : " FAIL ");
        return Verdict{g.pass, d};
    });

    report(5, "ladder theorem, l <= 5", [&] {
        auto rep = run_suite("ladder", config(5, 0));
        return Verdict{rep.pass, std::to_string(rep.records.size()) + " ladders; uniform readings " + rep.summary["uniform_readings"].dump() +
                                     "; character mismatches: " + failing(rep, "characters_equal")};
    });

    report(6, "multiplicity one via BGG sums, l <= 6", [&] {
        auto rep = run_suite("bgg", config(6, 0));
        return Verdict{rep.pass, std::to_string(rep.records.size()) + " ladders; failing: " + failing(rep, "pass")};
    });

    report(7, "combinatorial examples", [&] {
        auto rep = run_suite("paper-examples", SweepConfig{});
        std::string d;
        for (auto& r : rep.records) d += r["got"].get<std::string>() + " | ";
        return Verdict{rep.pass, d};
    });

    report(8, "Dirac index of E'", [&] {
        bool ok = all_of(v3, "index_ok") && all_of(v4, "index_ok");
        return Verdict{ok, std::to_string(v3.records.size() + v4.records.size()) + " modules; failing: " + failing(v3, "index_ok") + " " +
                               failing(v4, "index_ok")};
    });

    report(9, "Kato modules and D_A, l <= 4", [&] {
        auto rep = run_suite("kato", config(4, 2));
        long long temp = 0;
        for (auto& r : rep.records) temp += r["tempered"].get<bool>();
        return Verdict{rep.pass, std::to_string(temp) + " tempered, " + std::to_string(rep.records.size() - temp) + " others (" +
                                     std::to_string(rep.summary["nontempered_with_vanishing_hda"].get<long long>()) +
                                     " with H_DA = 0); failing: " + failing(rep, "pass")};
    });

    report(10, "spin bookkeeping, l <= 6", [&] {
        auto rep = run_suite("spin", config(6, 0));
        return Verdict{rep.pass, "failing: " + failing(rep, "pass")};
    });

    report(11, "type C, n = 2, m = 17/10", [&] {
        SweepConfig c;
        c.type = 'C';
        c.n = 2;
        c.m = Rat(17, 10);
        auto rep = run_suite("typec", c);
        return Verdict{rep.pass, std::to_string(rep.records.size()) + " modules; nonzero central characters " +
                                     rep.summary["nonzero_central_characters"].dump() + " (P_2 = 2); " +
                                     rep.summary["family_322"].get<std::string>()};
    });

    std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
