#pragma once

#include <string>
#include <vector>

namespace fractrace {

struct VerificationReport {
    std::string check;
    std::string gamma;
    int n = 0;
    bool pass = true;
    double max_rel_err = 0.0;
    std::vector<std::string> details;

    VerificationReport() = default;
    VerificationReport(std::string check_name, std::string gamma_label, int dim)
        : check(std::move(check_name)), gamma(std::move(gamma_label)), n(dim) {}

    void note(const std::string& line) { details.push_back(line); }
    void fail(const std::string& line) {
        pass = false;
        details.push_back("FAIL " + line);
    }
    // Records err against tol; a NaN error counts as failure.
    void measure(const std::string& what, double err, double tol);
    void merge(const VerificationReport& other);
};

std::string format_double(double x);
std::string report_to_json(const std::vector<VerificationReport>& reports, int indent = 2);
std::string report_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace fractrace
