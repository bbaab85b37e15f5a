#include "tvg/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tvg {

using ordered_json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw InvalidInput("cannot read file: " + path);
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidInput("cannot open file for writing: " + path);
    out << text;
    if (!out)
        throw InvalidInput("cannot write file: " + path);
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string point_set_digest(const PointSet& ps) {
    std::ostringstream ss;
    ss << ps.dim << '\n';
    for (const Point& p : ps.points) {
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            if (i > 0)
                ss << ' ';
            ss << fmt17(p(i));
        }
        ss << '\n';
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(ss.str())));
    return buf;
}

namespace {

PointSet rows_to_point_set(const std::vector<std::vector<double>>& rows, int declared_dim) {
    if (rows.empty())
        throw InvalidInput("point input contains no points");
    const int dim = declared_dim > 0 ? declared_dim : static_cast<int>(rows.front().size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim)
            throw InvalidInput("point rows disagree on dimension");
        for (double v : row)
            if (!std::isfinite(v))
                throw InvalidInput("point input contains a non-finite value");
    }
    return make_point_set(rows);
}

std::vector<std::vector<double>> json_rows(const ordered_json& arr) {
    if (!arr.is_array() || arr.empty())
        throw InvalidInput("\"points\" must be a non-empty array");
    std::vector<std::vector<double>> rows;
    for (const auto& row : arr) {
        if (!row.is_array() || row.empty())
            throw InvalidInput("each point must be a non-empty array of numbers");
        std::vector<double> r;
        for (const auto& v : row) {
            if (!v.is_number())
                throw InvalidInput("point coordinates must be numbers");
            r.push_back(v.get<double>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

PointSet parse_points_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_array())
        return rows_to_point_set(json_rows(j), 0);
    if (!j.is_object() || !j.contains("points"))
        throw InvalidInput("point JSON must be an object with a \"points\" array");
    int dim = 0;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer() || j["dim"].get<int>() <= 0)
            throw InvalidInput("\"dim\" must be a positive integer");
        dim = j["dim"].get<int>();
    }
    return rows_to_point_set(json_rows(j["points"]), dim);
}

namespace {

bool parse_double_cell(const std::string& cell, double& out) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin)
        return false;
    while (*end != '\0') {
        if (!std::isspace(static_cast<unsigned char>(*end)))
            return false;
        ++end;
    }
    return true;
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

} // namespace

PointSet parse_points_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (trim(line).empty())
            continue;
        std::vector<double> row;
        bool all_numeric = true;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            double v = 0.0;
            if (!parse_double_cell(trim(cell), v)) {
                all_numeric = false;
                break;
            }
            row.push_back(v);
        }
        if (!all_numeric) {
            if (first_data_line) {
                first_data_line = false;  // header row
                continue;
            }
            throw InvalidInput("CSV cell is not a number: " + line);
        }
        first_data_line = false;
        rows.push_back(std::move(row));
    }
    return rows_to_point_set(rows, 0);
}

PointSet read_point_file(const std::string& path) {
    const std::string text = read_text_file(path);
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        return (c == '{' || c == '[') ? parse_points_json(text) : parse_points_csv(text);
    }
    throw InvalidInput("point file is empty: " + path);
}

Matching read_matching_file(const std::string& path, int n) {
    ordered_json j;
    try {
        j = ordered_json::parse(read_text_file(path));
    } catch (const ordered_json::exception& e) {
        throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    const ordered_json* arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.is_object() && j.contains("edges"))
        arr = &j["edges"];
    else
        throw InvalidInput("matching JSON must be an object with an \"edges\" array");
    std::vector<Edge> edges;
    for (const auto& e : *arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InvalidInput("each edge must be a pair of integer indices");
        edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    return make_matching(n, std::move(edges));
}

namespace {

ordered_json json_point(const Point& p) {
    ordered_json a = ordered_json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i)
        a.push_back(p(i));
    return a;
}

ordered_json json_points(const PointSet& ps) {
    ordered_json a = ordered_json::array();
    for (const Point& p : ps.points)
        a.push_back(json_point(p));
    return a;
}

ordered_json json_edges(const std::vector<Edge>& edges) {
    ordered_json a = ordered_json::array();
    for (const Edge& e : edges)
        a.push_back(ordered_json::array({e[0], e[1]}));
    return a;
}

ordered_json json_tool() {
    return ordered_json{{"name", kToolName}, {"version", kToolVersion}};
}

} // namespace

std::string certificate_document(const PointSet& ps, const std::vector<Edge>& edges,
                                 const std::string& graph_kind, const std::string& method,
                                 const TverbergCertificate& cert,
                                 const std::vector<double>& dots) {
    ordered_json doc;
    doc["tool"] = json_tool();
    doc["input"] = ordered_json{{"dim", ps.dim},
                                {"n", ps.size()},
                                {"digest", point_set_digest(ps)},
                                {"points", json_points(ps)}};
    doc["graph"] = ordered_json{{"kind", graph_kind}, {"edges", json_edges(edges)}};
    doc["method"] = method;
    ordered_json c;
    c["classification"] = to_string(cert.classification);
    c["witness"] = json_point(cert.witness);
    c["value"] = cert.value;
    c["depth"] = cert.depth;
    c["slacks"] = cert.slacks;
    if (!dots.empty())
        c["dots"] = dots;
    doc["certificate"] = std::move(c);
    return doc.dump(2) + "\n";
}

std::string report_document(const HuntReport& report) {
    ordered_json doc;
    doc["tool"] = json_tool();
    doc["config"] = ordered_json{{"dim", report.config.dim},
                                 {"n", report.config.n},
                                 {"trials", report.config.trials},
                                 {"seed", report.config.seed},
                                 {"descent_steps", report.config.descent_steps},
                                 {"step_size", report.config.step_size}};
    doc["min_ratio"] = report.min_ratio;
    doc["argmin_trial"] = report.argmin_trial;
    doc["ratios"] = report.ratios;
    doc["zero_depth_trials"] = report.zero_depth_trials;
    doc["descent_trace"] = report.descent_trace;
    doc["argmin"] = ordered_json{{"dim", report.argmin.dim},
                                 {"digest", point_set_digest(report.argmin)},
                                 {"points", json_points(report.argmin)}};
    return doc.dump(2) + "\n";
}

namespace {

struct Frame {
    double xmin, xmax, ymin, ymax;
    double flip(double y) const { return ymin + ymax - y; }
};

void svg_circle(std::ostringstream& out, const Frame& fr, const Point& c, double r,
                const std::string& style) {
    out << "  <circle cx=\"" << fmt17(c(0)) << "\" cy=\"" << fmt17(fr.flip(c(1)))
        << "\" r=\"" << fmt17(r) << "\" " << style << "/>\n";
}

void svg_line(std::ostringstream& out, const Frame& fr, const Point& a, const Point& b,
              const std::string& style) {
    out << "  <line x1=\"" << fmt17(a(0)) << "\" y1=\"" << fmt17(fr.flip(a(1)))
        << "\" x2=\"" << fmt17(b(0)) << "\" y2=\"" << fmt17(fr.flip(b(1))) << "\" " << style
        << "/>\n";
}

} // namespace

std::string render_svg(const PointSet& ps, const std::vector<Edge>& edges,
                       const TverbergCertificate* cert) {
    if (ps.dim != 2)
        throw InvalidInput("render_svg: only planar configurations are drawable");
    std::vector<Ball> balls;
    for (const Edge& e : edges) {
        if (e[0] < 0 || e[1] >= ps.size() || e[0] >= e[1])
            throw InvalidInput("render_svg: edge endpoints out of range");
        balls.push_back(induced_ball(ps[e[0]], ps[e[1]]));
    }

    Frame fr{ps[0](0), ps[0](0), ps[0](1), ps[0](1)};
    const auto take = [&](double x, double y) {
        fr.xmin = std::min(fr.xmin, x);
        fr.xmax = std::max(fr.xmax, x);
        fr.ymin = std::min(fr.ymin, y);
        fr.ymax = std::max(fr.ymax, y);
    };
    for (const Point& p : ps.points)
        take(p(0), p(1));
    for (const Ball& b : balls) {
        take(b.center(0) - b.radius, b.center(1) - b.radius);
        take(b.center(0) + b.radius, b.center(1) + b.radius);
    }
    if (cert) {
        const double r = std::max(cert->value, 0.0);
        take(cert->witness(0) - r, cert->witness(1) - r);
        take(cert->witness(0) + r, cert->witness(1) + r);
    }
    const double ext = std::max({fr.xmax - fr.xmin, fr.ymax - fr.ymin, 1e-9});
    const double pad = 0.1 * ext;
    const double w = fr.xmax - fr.xmin + 2 * pad;
    const double h = fr.ymax - fr.ymin + 2 * pad;
    const double sw = 0.004 * ext;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
        << fmt17(800.0 * h / w) << "\" viewBox=\"" << fmt17(fr.xmin - pad) << ' '
        << fmt17(fr.ymin - pad) << ' ' << fmt17(w) << ' ' << fmt17(h) << "\">\n";
    const std::string disc_style = "fill=\"#4682b4\" fill-opacity=\"0.15\" "
                                   "stroke=\"#4682b4\" stroke-width=\"" +
                                   fmt17(sw) + "\"";
    for (const Ball& b : balls)
        svg_circle(out, fr, b.center, b.radius, disc_style);
    const std::string edge_style =
        "stroke=\"#222222\" stroke-width=\"" + fmt17(1.5 * sw) + "\"";
    for (const Edge& e : edges)
        svg_line(out, fr, ps[e[0]], ps[e[1]], edge_style);
    if (cert && cert->value >= 0.0)
        svg_circle(out, fr, cert->witness, cert->value,
                   "fill=\"none\" stroke=\"#2e8b57\" stroke-dasharray=\"" +
                       fmt17(3.0 * sw) + "\" stroke-width=\"" + fmt17(sw) + "\"");
    for (const Point& p : ps.points)
        svg_circle(out, fr, p, 2.0 * sw, "fill=\"#000000\"");
    if (cert) {
        const Point& wp = cert->witness;
        const double c = 4.0 * sw;
        const std::string cross_style =
            "stroke=\"#c0392b\" stroke-width=\"" + fmt17(sw) + "\"";
        svg_line(out, fr, make_point({wp(0) - c, wp(1)}), make_point({wp(0) + c, wp(1)}),
                 cross_style);
        svg_line(out, fr, make_point({wp(0), wp(1) - c}), make_point({wp(0), wp(1) + c}),
                 cross_style);
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace tvg
