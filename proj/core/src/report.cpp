#include "delsub/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace delsub {

namespace {

using Json = nlohmann::ordered_json;

Json detail_json(const DetailValue& v) {
    return std::visit([](const auto& x) { return Json(x); }, v);
}

std::string detail_text(const DetailValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::string>) return x;
            else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
            else if constexpr (std::is_same_v<T, double>) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6f", x);
                return buf;
            } else return std::to_string(x);
        },
        v);
}

Json report_json(const VerificationReport& r, bool timing) {
    Json j;
    j["target"] = r.target;
    j["n_range"] = Json::array({r.n_min, r.n_max});
    j["verdict"] = std::string(to_string(r.verdict));
    j["pairs_checked"] = r.pairs_checked;
    j["extremal_observed"] = r.extremal_observed;
    j["bound"] = r.bound;
    j["equality_cases"] = r.equality_cases;
    Json ces = Json::array();
    for (const auto& c : r.counterexamples) ces.push_back(Json{{"x", c.x}, {"y", c.y}, {"reason", c.reason}});
    j["counterexamples"] = std::move(ces);
    j["counterexamples_total"] = r.counterexamples_total;
    Json details = Json::object();
    for (const auto& [k, v] : r.details) details[k] = detail_json(v);
    j["details"] = std::move(details);
    if (timing) j["elapsed"] = r.elapsed;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_json(const VerificationReport& report, bool timing) { return report_json(report, timing).dump(2); }

std::string to_json(const std::vector<VerificationReport>& reports, bool timing) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, timing));
    return arr.dump(2);
}

std::string to_text(const VerificationReport& r, bool timing) {
    std::ostringstream os;
    os << r.target << " n=" << r.n_min;
    if (r.n_max != r.n_min) os << ".." << r.n_max;
    os << ": " << to_string(r.verdict) << "\n";
    os << "  pairs checked     " << r.pairs_checked << "\n";
    os << "  extremal / bound  " << r.extremal_observed << " / " << r.bound << "\n";
    os << "  equality cases    " << r.equality_cases << "\n";
    os << "  counterexamples   " << r.counterexamples_total << "\n";
    for (const auto& c : r.counterexamples) {
        os << "    " << (c.x.empty() ? "-" : c.x);
        if (!c.y.empty()) os << " " << c.y;
        os << ": " << c.reason << "\n";
    }
    for (const auto& [k, v] : r.details) os << "  " << k << " = " << detail_text(v) << "\n";
    if (timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", r.elapsed);
        os << "  elapsed           " << buf << " s\n";
    }
    return os.str();
}

std::string to_csv(const std::vector<VerificationReport>& reports, bool timing) {
    std::ostringstream os;
    os << "target,n_min,n_max,verdict,pairs_checked,extremal_observed,bound,equality_cases,counterexamples_total";
    if (timing) os << ",elapsed";
    os << "\n";
    for (const auto& r : reports) {
        os << csv_field(r.target) << ',' << r.n_min << ',' << r.n_max << ',' << to_string(r.verdict) << ','
           << r.pairs_checked << ',' << r.extremal_observed << ',' << r.bound << ',' << r.equality_cases << ','
           << r.counterexamples_total;
        if (timing) os << ',' << r.elapsed;
        os << "\n";
    }
    return os.str();
}

}  // namespace delsub
