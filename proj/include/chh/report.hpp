#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chh/series.hpp"

namespace chh {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;  // basis | hh | poincare
    int s = 2;
    int r = 0;
    int charge = 1;
    int maxDegree = 8;
    bool maxDegreeSet = false;
    std::string method = "complex";  // complex | formula | closed-form
    std::string target;              // hom-u2 | rep-f2-u2
    std::string format = "table";    // json | table
    bool showMonomials = false;
};

struct Report {
    RunConfig config;
    std::string convention;  // absolute | comodule
    std::vector<std::pair<int, std::string>> dims;
    std::optional<Series> series;
    std::map<int, std::vector<std::string>> monomials;
    std::vector<std::string> warnings;
    double seconds = 0;  // shown in table mode only; JSON stays byte-stable
};

Report runBasis(const RunConfig& cfg);
Report runHH(const RunConfig& cfg);
Report runPoincare(const RunConfig& cfg);

// Canonical JSON: sorted keys, no whitespace, exact decimal-string numbers.
// Byte-identical for identical configs.
std::string renderJson(const Report& report);
std::string renderTable(const Report& report);

}  // namespace chh
