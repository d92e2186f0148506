#include "ugit/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "ugit/error.hpp"

namespace ugit {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 50.0;

// Infinitesimal parts enter the picture at a fixed visual scale.
const Rat kEpsOffset(3, 20);

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Frame {
    double min_x, max_x, min_y, max_y;

    double px(double x) const {
        return kMargin + (x - min_x) / (max_x - min_x) * (kWidth - 2 * kMargin);
    }
    double py(double y) const {
        return kHeight - kMargin - (y - min_y) / (max_y - min_y) * (kHeight - 2 * kMargin);
    }
};

double plot_coord(const EpsRat& v) {
    return (v.std_part() + kEpsOffset * v.inf_part()).to_double();
}

void line(std::string& out, const Frame& f, double x1, double y1, double x2, double y2,
          const char* stroke, const char* extra) {
    out += "  <line x1=\"" + fmt(f.px(x1)) + "\" y1=\"" + fmt(f.py(y1)) + "\" x2=\"" +
           fmt(f.px(x2)) + "\" y2=\"" + fmt(f.py(y2)) + "\" stroke=\"" + stroke + "\"" + extra +
           "/>\n";
}

} // namespace

std::string render_svg(const std::vector<WeightTableRow>& table, long long grade,
                       long long n_param) {
    if (table.empty()) fail("EmptyTable", "weight diagram needs a nonempty table");

    std::vector<double> xs, ys;
    for (const WeightTableRow& row : table) {
        xs.push_back(plot_coord(row.w1));
        ys.push_back(plot_coord(row.w2));
    }

    const double n = static_cast<double>(n_param);
    const double g = static_cast<double>(grade);
    const double apex[3][2] = {{0.0, 0.0}, {n, -g * n}, {-n, -g * n}};
    const double ray_t = std::max(2.0, n);

    std::vector<double> bx = xs, by = ys;
    for (const auto& a : apex) {
        bx.push_back(a[0]);
        by.push_back(a[1]);
        for (double dir : {1.0, -1.0}) {
            bx.push_back(a[0] + dir * ray_t);
            by.push_back(a[1] + g * ray_t);
        }
    }
    bx.push_back(0.0);
    by.push_back(0.0);

    Frame f{*std::min_element(bx.begin(), bx.end()), *std::max_element(bx.begin(), bx.end()),
            *std::min_element(by.begin(), by.end()), *std::max_element(by.begin(), by.end())};
    if (f.max_x - f.min_x < 1.0) { f.min_x -= 0.5; f.max_x += 0.5; }
    if (f.max_y - f.min_y < 1.0) { f.min_y -= 0.5; f.max_y += 0.5; }

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
           fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
           "\" fill=\"white\"/>\n";

    line(out, f, f.min_x, 0.0, f.max_x, 0.0, "#999999", " stroke-width=\"1\"");
    line(out, f, 0.0, f.min_y, 0.0, f.max_y, "#999999", " stroke-width=\"1\"");

    for (const auto& a : apex)
        for (double dir : {1.0, -1.0})
            line(out, f, a[0], a[1], a[0] + dir * ray_t, a[1] + g * ray_t, "#555555",
                 " stroke-width=\"1\" stroke-dasharray=\"4 3\"");

    const struct { const char* name; const char* color; } clusters[3] = {
        {"P0", "#111111"}, {"P1", "#1f77b4"}, {"P2", "#d62728"}};

    std::vector<std::string> present;
    for (const auto& c : clusters) {
        bool any = false;
        for (const WeightTableRow& row : table)
            if (row.fixed_point == c.name) { any = true; break; }
        if (!any) continue;
        present.push_back(c.name);
        out += "  <g id=\"cluster-" + std::string(c.name) + "\" fill=\"" + c.color + "\">\n";
        for (const WeightTableRow& row : table) {
            if (row.fixed_point != c.name) continue;
            out += "    <circle cx=\"" + fmt(f.px(plot_coord(row.w1))) + "\" cy=\"" +
                   fmt(f.py(plot_coord(row.w2))) + "\" r=\"3.00\"><title>" +
                   escape(row.fixed_point) + " block " + std::to_string(row.block) + " j=" +
                   std::to_string(row.position) + ": (" + escape(row.w1.str()) + ", " +
                   escape(row.w2.str()) + ")</title></circle>\n";
        }
        out += "  </g>\n";
    }

    double ly = 16.0;
    out += "  <g font-family=\"monospace\" font-size=\"11\">\n";
    out += "    <text x=\"8.00\" y=\"" + fmt(ly) +
           "\">eps drawn as a 0.15-unit offset (exact values in tooltips)</text>\n";
    for (const auto& c : clusters) {
        if (std::find(present.begin(), present.end(), c.name) == present.end()) continue;
        ly += 14.0;
        out += "    <rect x=\"8.00\" y=\"" + fmt(ly - 9.0) +
               "\" width=\"9.00\" height=\"9.00\" fill=\"" + c.color + "\"/>\n";
        out += "    <text x=\"22.00\" y=\"" + fmt(ly) + "\">" + c.name + "</text>\n";
    }
    out += "  </g>\n";
    out += "</svg>\n";
    return out;
}

void emit_svg(const std::vector<WeightTableRow>& table, long long grade, long long n_param,
              const std::string& path) {
    std::string body = render_svg(table, grade, n_param);
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("IoError", "cannot open output file: " + path);
    out << body;
    if (!out) fail("IoError", "write failed: " + path);
}

} // namespace ugit
