#pragma once
// Verification sweeps and per-instance reports shared by the hd tool and the acceptance run.
#include "hd/awring.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hd {

using json = nlohmann::json;

struct SweepConfig {
    char type = 'A';
    int l = 4;        // type A: l; sweeps run over the documented range up to l
    int n = 2;        // type C rank
    int window = 2;   // endpoints (type A) or |nu| (type C) bounded by window
    Rat r{1};
    Rat m{17, 10};
    int jobs = 1;
};

struct SuiteReport {
    std::string suite;
    bool pass = true;
    std::vector<json> records;  // sorted by instance
    json summary = json::object();
    std::vector<std::string> skipped;
    double seconds = 0;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite or out-of-range config.
SuiteReport run_suite(const std::string& suite, const SweepConfig& cfg);

json segment_info(const Multisegment& m);
json bgg_report(const Multisegment& m);
json module_report(const Multisegment& m, const Rat& r);

// Central character of the s_lambda family as text: "W_7(m,m+1,...)" from the contents.
std::string family_string(const Partition& lambda);
// The same family evaluated at a parameter value, as an orbit representative.
QVec family_point(const RootSystem& rs, const Partition& lambda, const Rat& m);

}  // namespace hd
