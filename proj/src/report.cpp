#include "chh/report.hpp"

#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <sstream>

#include "chh/checks.hpp"
#include "chh/hochschild.hpp"
#include "chh/kdef.hpp"

namespace chh {

namespace {

void requireChargeWindow(int charge) {
    if (charge < 0 || charge > 2) throw UsageError("charge must be between 0 and 2");
}

Series comodulePolynomial(const Series& absolute) {
    const int D = absolute.truncation();
    return mul(absolute, mul(Series::polynomial({1, 0, -1}, D),
                             Series::polynomial({1, 0, 0, 0, -1}, D)));
}

void fillDims(Report& report, const Series& s) {
    for (int d = 0; d <= s.truncation(); ++d) report.dims.emplace_back(d, s.coeff(d).str());
}

class Stopwatch {
public:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

Report runBasis(const RunConfig& cfg) {
    const Stopwatch timer;
    requireChargeWindow(cfg.charge);
    if (cfg.s < 0 || cfg.maxDegree < 0) throw UsageError("basis: s and max-degree must be non-negative");
    Report report;
    report.config = cfg;
    report.convention = "absolute";
    const KdefAlgebra kd = makeKdefAlgebra(cfg.s);
    for (int d = 0; d <= cfg.maxDegree; ++d) {
        report.dims.emplace_back(d, std::to_string(kd.presentation->quotientDim(d, cfg.charge)));
        if (cfg.showMonomials) {
            std::vector<std::string> labels;
            for (const Monomial& m : kd.presentation->quotientMonomials(d, cfg.charge))
                labels.push_back(m.str());
            report.monomials.emplace(d, std::move(labels));
        }
    }
    report.seconds = timer.elapsed();
    return report;
}

Report runHH(const RunConfig& cfg) {
    const Stopwatch timer;
    requireChargeWindow(cfg.charge);
    if (cfg.s < 0 || cfg.r < 0 || cfg.maxDegree < 0)
        throw UsageError("hh: s, r and max-degree must be non-negative");

    Series absolute(cfg.maxDegree);
    if (cfg.method == "complex") {
        absolute = iteratedDimsDirect(cfg.s, cfg.r, cfg.charge, cfg.maxDegree);
    } else if (cfg.method == "formula") {
        absolute = iteratedDimsFormula(cfg.s, cfg.r, cfg.charge, cfg.maxDegree);
    } else if (cfg.method == "closed-form") {
        if (cfg.charge != 2) throw UsageError("hh: method closed-form applies to charge 2 only");
        const int full = std::max(cfg.maxDegree, pU2Degree(cfg.s, cfg.r));
        absolute = mul(pU2(cfg.s, cfg.r, full).retruncated(cfg.maxDegree), psB2(cfg.maxDegree));
    } else {
        throw UsageError("hh: unknown method '" + cfg.method + "'");
    }

    Report report;
    report.config = cfg;
    if (cfg.method == "closed-form" && pU2Degree(cfg.s, cfg.r) > cfg.maxDegree)
        report.warnings.push_back("comodule polynomial continues beyond the truncation (degree " +
                                  std::to_string(pU2Degree(cfg.s, cfg.r)) + ")");
    fillDims(report, absolute);
    if (cfg.charge == 2) {
        report.convention = "comodule";
        report.series = comodulePolynomial(absolute);
    } else {
        report.convention = "absolute";
        report.series = absolute;
    }
    report.seconds = timer.elapsed();
    return report;
}

Report runPoincare(const RunConfig& cfg) {
    const Stopwatch timer;
    if (cfg.r < 0) throw UsageError("poincare: r must be non-negative");
    Report report;
    report.config = cfg;
    if (cfg.target == "hom-u2") {
        if (cfg.s < 0) throw UsageError("poincare: s must be non-negative");
        const int natural = pU2Degree(cfg.s, cfg.r);
        const int D = cfg.maxDegreeSet ? cfg.maxDegree : std::max(natural, 0);
        report.config.maxDegree = D;
        report.series = pU2(cfg.s, cfg.r, D);  // throws TruncationError when clipped
        report.convention = "comodule";
    } else if (cfg.target == "rep-f2-u2") {
        if (cfg.s != 2) throw UsageError("poincare: the representation-variety target requires s = 2");
        const int natural = pRepF2Degree(cfg.r);
        const int D = cfg.maxDegreeSet ? cfg.maxDegree : std::max(natural, 0);
        report.config.maxDegree = D;
        if (D < natural)
            throw TruncationError("poincare: polynomial degree " + std::to_string(natural) +
                                  " exceeds truncation " + std::to_string(D));
        report.series = pRepF2(cfg.r, D);
        report.convention = "absolute";
    } else {
        throw UsageError("poincare: target must be hom-u2 or rep-f2-u2");
    }
    fillDims(report, *report.series);
    report.seconds = timer.elapsed();
    return report;
}

namespace {

nlohmann::json seriesJson(const Series& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int d = 0; d <= s.truncation(); ++d) coeffs.push_back(s.coeff(d).str());
    return nlohmann::json{{"truncation", s.truncation()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace

std::string renderJson(const Report& report) {
    const RunConfig& cfg = report.config;
    nlohmann::json config;
    config["command"] = cfg.command;
    config["format"] = cfg.format;
    config["max_degree"] = cfg.maxDegree;
    if (cfg.command == "basis" || cfg.command == "hh") {
        config["s"] = cfg.s;
        config["charge"] = cfg.charge;
    }
    if (cfg.command == "hh") {
        config["r"] = cfg.r;
        config["method"] = cfg.method;
    }
    if (cfg.command == "poincare") {
        config["target"] = cfg.target;
        config["s"] = cfg.s;
        config["r"] = cfg.r;
    }

    nlohmann::json j;
    j["config"] = std::move(config);
    j["convention"] = report.convention;
    nlohmann::json dims;
    for (const auto& [d, v] : report.dims) dims[std::to_string(d)] = v;
    j["dims"] = std::move(dims);
    if (report.series) j["series"] = seriesJson(*report.series);
    if (!report.monomials.empty()) {
        nlohmann::json mono;
        for (const auto& [d, labels] : report.monomials) mono[std::to_string(d)] = labels;
        j["monomials"] = std::move(mono);
    }
    j["warnings"] = report.warnings;
    return j.dump();
}

std::string renderTable(const Report& report) {
    const RunConfig& cfg = report.config;
    std::ostringstream os;
    os << "command: " << cfg.command;
    if (cfg.command == "basis" || cfg.command == "hh") os << "  s=" << cfg.s;
    if (cfg.command == "hh") os << "  r=" << cfg.r;
    if (cfg.command == "basis" || cfg.command == "hh") os << "  charge=" << cfg.charge;
    if (cfg.command == "hh") os << "  method=" << cfg.method;
    if (cfg.command == "poincare") os << "  target=" << cfg.target << "  s=" << cfg.s << "  r=" << cfg.r;
    os << "  max-degree=" << cfg.maxDegree << "\n";
    os << "convention: " << report.convention << "\n";
    for (const auto& [d, v] : report.dims) {
        if (cfg.command == "poincare")
            os << "t^" << d << ": " << v << "\n";
        else
            os << "(d=" << d << ",c=" << cfg.charge << "): dim " << v << "\n";
        auto it = report.monomials.find(d);
        if (it != report.monomials.end())
            for (const std::string& label : it->second) os << "    " << label << "\n";
    }
    if (report.series) os << "series: " << report.series->str() << "\n";
    for (const std::string& w : report.warnings) os << "warning: " << w << "\n";
    os << "time: " << std::fixed << std::setprecision(3) << report.seconds << " s\n";
    return os.str();
}

}  // namespace chh
