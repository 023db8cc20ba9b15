#include "apsum/jsonio.hpp"

namespace apsum {

namespace {

Json rational_array(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const Rational& v : values)
        arr.push_back(v.str());
    return arr;
}

}  // namespace

Json to_json(const TruncatedSeries& s) { return rational_array(s.coeffs()); }

Json to_json(const LaurentSeries& s) {
    Json j;
    j["depth"] = s.depth();
    j["coeffs"] = rational_array(s.coeffs());
    return j;
}

Json to_json(const BernoulliPoly& p) {
    Json j;
    j["alpha"] = p.alpha();
    j["degree"] = p.degree();
    j["coeffs"] = rational_array(p.coeffs());
    return j;
}

Json to_json(const VerifyReport& report) {
    Json j;
    j["grid"] = report.grid;
    j["summary"] = {{"checks", report.records.size()},
                    {"passed", report.passed},
                    {"failed", report.failed}};
    Json checks = Json::array();
    for (const CheckRecord& r : report.records) {
        Json c;
        c["check"] = r.check;
        c["params"] = r.params;
        c["source"] = r.source;
        c["status"] = r.pass ? "pass" : "fail";
        if (!r.pass) {
            Json mm = Json::array();
            for (const auto& m : r.mismatches)
                mm.push_back(m);
            c["mismatches"] = mm;
        }
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace apsum
