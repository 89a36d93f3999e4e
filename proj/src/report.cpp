#include "fractrace/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fractrace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9e", x);
    return buf;
}

void VerificationReport::measure(const std::string& what, double err, double tol) {
    bool ok = std::isfinite(err) && err <= tol;
    if (std::isfinite(err)) {
        if (err > max_rel_err) max_rel_err = err;
    } else {
        max_rel_err = INFINITY;
    }
    std::string line = what + " err=" + format_double(err) + " tol=" + format_double(tol);
    if (ok)
        details.push_back(line);
    else
        fail(line);
}

void VerificationReport::merge(const VerificationReport& other) {
    if (!other.pass) pass = false;
    if (!(other.max_rel_err <= max_rel_err)) max_rel_err = other.max_rel_err;
    for (const auto& d : other.details) details.push_back(other.check + ": " + d);
}

std::string report_to_json(const std::vector<VerificationReport>& reports, int indent) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json o;
        o["schema"] = 1;
        o["check"] = r.check;
        o["gamma"] = r.gamma;
        o["n"] = r.n;
        o["status"] = r.pass ? "pass" : "fail";
        // fixed-precision text keeps reports byte-identical across runs
        if (std::isfinite(r.max_rel_err))
            o["max_rel_err"] = std::strtod(format_double(r.max_rel_err).c_str(), nullptr);
        else
            o["max_rel_err"] = "inf";
        o["details"] = r.details;
        arr.push_back(o);
    }
    return arr.dump(indent) + "\n";
}

std::string report_to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "schema,check,gamma,n,status,max_rel_err,detail_count\n";
    for (const auto& r : reports)
        os << 1 << ',' << r.check << ',' << r.gamma << ',' << r.n << ',' << (r.pass ? "pass" : "fail") << ','
           << (std::isfinite(r.max_rel_err) ? format_double(r.max_rel_err) : "inf") << ',' << r.details.size()
           << '\n';
    return os.str();
}

}  // namespace fractrace
