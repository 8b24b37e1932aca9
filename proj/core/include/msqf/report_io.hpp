#ifndef MSQF_REPORT_IO_HPP
#define MSQF_REPORT_IO_HPP

#include "msqf/verification.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace msqf {

/// Everything a run needs, echoed verbatim into every output file.
struct RunConfig {
    std::string command;          // verify | compute | multiplier
    std::string target;           // theorem id, square function, or table name
    int n = 1;
    double L = 16.0;
    int N = 1024;
    double t_min = 0.00390625;    // 2^-8
    double t_max = 256.0;         // 2^8
    int m = 16;
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> lambda;
    std::vector<double> p_list;
    std::string family = "gauss-deriv";
    int index = 0;
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    bool svg = false;
    bool write_json = true;
    bool write_csv = true;

    std::string echo_json() const;   // one-line JSON object
};

/// 17 significant digits (JSON) / 10 (CSV); fixed "%.{sig}g" formatting.
std::string format_double(double v, int sig);

std::string report_to_json(const VerificationReport& r, const RunConfig& cfg);
std::string report_to_csv(const VerificationReport& r, const RunConfig& cfg);

/// CSV of (point coordinates, value) rows for `compute`.
std::string values_to_csv(const std::vector<std::vector<double>>& coords,
                          const std::vector<double>& values, const RunConfig& cfg);

struct MultiplierRow {
    double xi;
    double re, im, modulus, normalized_modulus;
};

std::string multiplier_to_csv(const std::vector<MultiplierRow>& rows, const RunConfig& cfg);

/// Static semilog polyline plot of modulus and normalized modulus.
std::string multiplier_to_svg(const std::vector<MultiplierRow>& rows, const std::string& title);

void write_text_file(const std::string& path, const std::string& content);

} // namespace msqf

#endif
