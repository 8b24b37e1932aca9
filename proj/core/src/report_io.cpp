#include "msqf/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace msqf {

std::string format_double(double v, int sig) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        if (c == '"' || c == '\\') { out.push_back('\\'); out.push_back(c); }
        else if (c == '\n') out += "\\n";
        else out.push_back(c);
    }
    return out;
}

void append_double_array(std::string& out, const std::vector<double>& v, int sig) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_double(v[i], sig);
    }
    out += ']';
}

} // namespace

std::string RunConfig::echo_json() const {
    std::string o = "{";
    o += "\"command\":\"" + json_escape(command) + "\"";
    o += ",\"target\":\"" + json_escape(target) + "\"";
    o += ",\"n\":" + std::to_string(n);
    o += ",\"L\":" + format_double(L, 17);
    o += ",\"N\":" + std::to_string(N);
    o += ",\"t_min\":" + format_double(t_min, 17);
    o += ",\"t_max\":" + format_double(t_max, 17);
    o += ",\"m\":" + std::to_string(m);
    o += ",\"alpha\":"; append_double_array(o, alpha, 17);
    o += ",\"beta\":"; append_double_array(o, beta, 17);
    o += ",\"lambda\":"; append_double_array(o, lambda, 17);
    o += ",\"p\":"; append_double_array(o, p_list, 17);
    o += ",\"family\":\"" + json_escape(family) + "\"";
    o += ",\"index\":" + std::to_string(index);
    o += ",\"seed\":" + std::to_string(seed);
    o += ",\"svg\":" + std::string(svg ? "true" : "false");
    o += "}";
    return o;
}

std::string report_to_json(const VerificationReport& r, const RunConfig& cfg) {
    std::string o = "{";
    o += "\"theorem\":\"" + json_escape(r.theorem) + "\"";
    o += ",\"family\":\"" + json_escape(r.family) + "\"";
    o += ",\"config\":" + cfg.echo_json();
    o += ",\"points\":[";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const ReportPoint& p = r.points[i];
        if (i) o += ',';
        o += "{\"x\":";
        append_double_array(o, p.x, 17);
        o += ",\"lhs\":" + format_double(p.lhs, 17);
        o += ",\"rhs\":" + format_double(p.rhs, 17);
        o += ",\"ratio\":" + format_double(p.ratio, 17);
        o += "}";
    }
    o += "],\"summary\":{";
    o += "\"min\":" + format_double(r.summary.min, 17);
    o += ",\"max\":" + format_double(r.summary.max, 17);
    o += ",\"spread\":" + format_double(r.summary.spread, 17);
    o += ",\"residual_max\":" + format_double(r.summary.residual_max, 17);
    o += "},\"tolerance\":" + format_double(r.tolerance, 17);
    o += ",\"pass\":" + std::string(r.pass ? "true" : "false");
    o += "}\n";
    return o;
}

std::string report_to_csv(const VerificationReport& r, const RunConfig& cfg) {
    std::ostringstream os;
    os << "# config: " << cfg.echo_json() << "\n";
    std::size_t dim = 0;
    for (const auto& p : r.points) dim = std::max(dim, p.x.size());
    os << "theorem,family,index";
    for (std::size_t d = 0; d < dim; ++d) os << ",x" << (d + 1);
    os << ",lhs,rhs,ratio,min,max,spread,residual_max,pass\n";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const ReportPoint& p = r.points[i];
        os << r.theorem << ',' << r.family << ',' << i;
        for (std::size_t d = 0; d < dim; ++d)
            os << ',' << (d < p.x.size() ? format_double(p.x[d], 10) : "");
        os << ',' << format_double(p.lhs, 10) << ',' << format_double(p.rhs, 10) << ','
           << format_double(p.ratio, 10) << ',' << format_double(r.summary.min, 10) << ','
           << format_double(r.summary.max, 10) << ',' << format_double(r.summary.spread, 10)
           << ',' << format_double(r.summary.residual_max, 10) << ','
           << (r.pass ? "1" : "0") << "\n";
    }
    return os.str();
}

std::string values_to_csv(const std::vector<std::vector<double>>& coords,
                          const std::vector<double>& values, const RunConfig& cfg) {
    if (coords.size() != values.size())
        throw std::invalid_argument("values_to_csv: size mismatch");
    std::ostringstream os;
    os << "# config: " << cfg.echo_json() << "\n";
    const std::size_t dim = coords.empty() ? 1 : coords[0].size();
    for (std::size_t d = 0; d < dim; ++d) os << 'x' << (d + 1) << ',';
    os << "value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t d = 0; d < dim; ++d) os << format_double(coords[i][d], 10) << ',';
        os << format_double(values[i], 10) << "\n";
    }
    return os.str();
}

std::string multiplier_to_csv(const std::vector<MultiplierRow>& rows, const RunConfig& cfg) {
    std::ostringstream os;
    os << "# config: " << cfg.echo_json() << "\n";
    os << "xi,re,im,modulus,normalized_modulus\n";
    for (const MultiplierRow& r : rows) {
        os << format_double(r.xi, 10) << ',' << format_double(r.re, 10) << ','
           << format_double(r.im, 10) << ',' << format_double(r.modulus, 10) << ','
           << format_double(r.normalized_modulus, 10) << "\n";
    }
    return os.str();
}

namespace {

// map rows into plot coordinates, log10 y with floor
std::string polyline(const std::vector<MultiplierRow>& rows, bool normalized, double x0,
                     double x1, double y0, double y1, double xi_min, double xi_max,
                     double lg_min, double lg_max) {
    std::string pts;
    for (const MultiplierRow& r : rows) {
        const double v = normalized ? r.normalized_modulus : r.modulus;
        const double lg = std::log10(std::max(v, 1e-300));
        const double px = x0 + (x1 - x0) * (r.xi - xi_min) / (xi_max - xi_min);
        const double py = y1 - (y1 - y0) * (lg - lg_min) / (lg_max - lg_min);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px, py);
        pts += buf;
    }
    return pts;
}

} // namespace

std::string multiplier_to_svg(const std::vector<MultiplierRow>& rows, const std::string& title) {
    if (rows.empty()) throw std::invalid_argument("multiplier_to_svg: no rows");
    double xi_min = rows.front().xi, xi_max = rows.back().xi;
    if (xi_max <= xi_min) xi_max = xi_min + 1.0;
    double lg_min = 1e300, lg_max = -1e300;
    for (const MultiplierRow& r : rows) {
        for (double v : {r.modulus, r.normalized_modulus}) {
            const double lg = std::log10(std::max(v, 1e-300));
            lg_min = std::min(lg_min, lg);
            lg_max = std::max(lg_max, lg);
        }
    }
    if (lg_max <= lg_min) lg_max = lg_min + 1.0;
    const double x0 = 60, x1 = 740, y0 = 40, y1 = 420;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"480\" "
          "viewBox=\"0 0 800 480\">\n"
       << "<rect width=\"800\" height=\"480\" fill=\"white\"/>\n"
       << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title
       << " (log10 modulus vs xi)</text>\n"
       << "<line x1=\"" << x0 << "\" y1=\"" << y1 << "\" x2=\"" << x1 << "\" y2=\"" << y1
       << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
       << "\" stroke=\"black\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\""
       << polyline(rows, false, x0, x1, y0, y1, xi_min, xi_max, lg_min, lg_max) << "\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\""
       << polyline(rows, true, x0, x1, y0, y1, xi_min, xi_max, lg_min, lg_max) << "\"/>\n";
    os << "<text x=\"70\" y=\"52\" font-size=\"12\" fill=\"#1f77b4\">modulus</text>\n"
       << "<text x=\"70\" y=\"68\" font-size=\"12\" fill=\"#d62728\">normalized</text>\n"
       << "</svg>\n";
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace msqf
