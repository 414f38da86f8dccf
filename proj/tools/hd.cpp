// hd: reports and verification sweeps for Dirac cohomology of graded Hecke algebra modules.
#include "hd/suites.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace hd;

namespace {

constexpr int kUsage = 2;

void print_summary(std::ostream& os, const SuiteReport& rep) {
    os << (rep.pass ? "PASS " : "FAIL ") << rep.suite << ": " << rep.records.size() << " records, "
       << rep.summary["failures"].get<long long>() << " failures, " << rep.seconds << " s\n";
    for (auto& [k, v] : rep.summary.items())
        if (k != "failures" && k != "pass") os << "    " << k << " = " << v.dump() << "\n";
    for (auto& r : rep.records)
        if (!r["pass"].get<bool>()) os << "    FAIL " << r["instance"].get<std::string>() << "  replay: " << r["replay"].get<std::string>() << "\n";
}

Rat parse_rat(const std::string& s, const char* what) {
    try {
        return Rat::parse(s);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string(what) + ": '" + s + "' is not a rational number");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac cohomology of graded Hecke algebra modules: reports and sweeps"};
    app.require_subcommand(1);

    std::string mtext;
    bool as_json = false;
    auto* info = app.add_subcommand("segment-info", "combinatorics of one multisegment");
    info->add_option("multisegment", mtext, "e.g. \"[4,5];[2,4];[1,3]\"")->required();
    info->add_flag("--json", as_json, "print one JSON line instead of text");

    auto* bgg = app.add_subcommand("bgg", "BGG terms of a ladder and the resulting W-character");
    bgg->add_option("multisegment", mtext)->required();

    std::string rtext = "1";
    auto* report = app.add_subcommand("module-report", "E(m), L(m) and their Dirac cohomology");
    report->add_option("multisegment", mtext)->required();
    report->add_option("--r", rtext, "parameter r (rational)");

    SweepConfig cfg;
    std::string mpar = "17/10", type = "A", out;
    std::vector<std::string> suites;
    auto* tc = app.add_subcommand("typec-sweep", "type C standard modules induced from one-dimensional characters");
    tc->add_option("--n", cfg.n, "rank")->check(CLI::Range(1, 3));
    tc->add_option("--m", mpar, "long-root parameter, exact rational");
    tc->add_option("--window", cfg.window, "|nu| bound (half-integer grid)")->check(CLI::NonNegativeNumber);
    tc->add_option("--r", rtext);
    tc->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
    tc->add_option("--out", out, "JSON-lines output file");

    auto* run = app.add_subcommand("run", "verification suites");
    run->add_option("--suite", suites, "suite name (repeatable)")->required()->check(CLI::IsMember(suite_names()));
    run->add_option("--type", type)->check(CLI::IsMember({"A", "C"}));
    run->add_option("--l", cfg.l, "type A size (upper bound for range suites)");
    run->add_option("--n", cfg.n, "type C rank")->check(CLI::Range(1, 3));
    run->add_option("--window", cfg.window, "endpoint window B")->check(CLI::NonNegativeNumber);
    run->add_option("--m", mpar);
    run->add_option("--r", rtext);
    run->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
    run->add_option("--out", out, "JSON-lines output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        cfg.r = parse_rat(rtext, "--r");
        cfg.m = parse_rat(mpar, "--m");
        cfg.type = type[0];

        if (*info || *bgg || *report) {
            Multisegment m;
            try {
                m = Multisegment::parse(mtext);
            } catch (const ParseError& e) {
                std::cerr << "hd: cannot parse multisegment: " << e.what() << "\n";
                return kUsage;
            }
            if (*info) {
                json j = segment_info(m);
                if (as_json) {
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "multisegment " << m.str() << "  l=" << m.l() << " n=" << m.n() << "\n";
                    std::cout << "m-profile " << j["m_profile_line"].get<std::string>() << "\n";
                    std::cout << "lambda " << j["lambda"].get<std::string>() << "  in_Z=" << j["in_Z"] << " ladder=" << j["ladder"]
                              << " elliptic_cc=" << j["elliptic_cc"] << "\n";
                    if (j.contains("temp")) std::cout << "temp " << j["temp"].get<std::string>() << "\n";
                    if (j.contains("w")) {
                        std::cout << "w " << j["w"].get<std::string>() << "  J(f_i) " << j["J_by_b"].get<std::string>() << "  J(f_j) "
                                  << j["J_by_a"].get<std::string>() << "\n";
                        std::cout << "alpha " << j["alpha"].get<std::string>() << "  hk " << j["hk"].dump() << "  ht " << j["ht"].dump() << "\n";
                    }
                }
            } else if (*bgg) {
                std::cout << bgg_report(m).dump() << "\n";
            } else {
                std::cout << module_report(m, cfg.r).dump() << "\n";
            }
            return 0;
        }

        if (*tc) {
            cfg.type = 'C';
            suites = {"typec"};
        }
        std::ofstream file;
        if (!out.empty()) {
            file.open(out);
            if (!file) {
                std::cerr << "hd: cannot open " << out << "\n";
                return kUsage;
            }
        }
        std::ostream& records = out.empty() ? std::cout : file;
        std::ostream& summary = out.empty() ? std::cerr : std::cout;
        bool all_pass = true;
        for (auto& s : suites) {
            SuiteReport rep = run_suite(s, cfg);
            for (auto& r : rep.records) records << r.dump() << "\n";
            json tail = {{"suite", s}, {"summary", rep.summary}, {"skipped", rep.skipped}};
            records << tail.dump() << "\n";
            print_summary(summary, rep);
            all_pass = all_pass && rep.pass;
        }
        return all_pass ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "hd: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hd: " << e.what() << "\n";
        return kUsage;
    }
}
