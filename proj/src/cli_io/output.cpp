#include "riderlab/cli_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>

namespace riderlab {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Canvas {
    long w, h;
    double cell, margin;

    double px(const BigInt& x) const { return margin + x.get_d() * cell; }
    double py(const BigInt& y) const { return margin + (static_cast<double>(h) - y.get_d()) * cell; }
};

Canvas make_canvas(long w, long h, const SvgOptions& o) {
    const long big = std::max({w, h, 1L});
    const double cell = std::min(o.cell, o.max_canvas / static_cast<double>(big));
    return {w, h, cell, std::max(o.cell, 12.0)};
}

std::string header(const Canvas& c) {
    const double width = 2 * c.margin + static_cast<double>(c.w) * c.cell;
    const double height = 2 * c.margin + static_cast<double>(c.h) * c.cell;
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\" data-extent=\"" + std::to_string(c.w) + "x" +
           std::to_string(c.h) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string grid(const Canvas& c, const SvgOptions& o) {
    std::string s = "<g class=\"grid\" stroke=\"#ccc\" stroke-width=\"0.5\">\n";
    // thin lines only when they stay legible
    if (o.grid && c.cell >= 3) {
        for (long x = 0; x <= c.w; ++x)
            s += "<line x1=\"" + num(c.px(x)) + "\" y1=\"" + num(c.py(0)) + "\" x2=\"" + num(c.px(x)) + "\" y2=\"" +
                 num(c.py(c.h)) + "\"/>\n";
        for (long y = 0; y <= c.h; ++y)
            s += "<line x1=\"" + num(c.px(0)) + "\" y1=\"" + num(c.py(y)) + "\" x2=\"" + num(c.px(c.w)) + "\" y2=\"" +
                 num(c.py(y)) + "\"/>\n";
    }
    s += "<rect x=\"" + num(c.px(0)) + "\" y=\"" + num(c.py(c.h)) + "\" width=\"" + num(c.w * c.cell) + "\" height=\"" +
         num(c.h * c.cell) + "\" fill=\"none\" stroke=\"#888\"/>\n</g>\n";
    return s;
}

std::string segment(const Canvas& c, const IntPoint& a, const IntPoint& b) {
    return "<line x1=\"" + num(c.px(a.x)) + "\" y1=\"" + num(c.py(a.y)) + "\" x2=\"" + num(c.px(b.x)) + "\" y2=\"" +
           num(c.py(b.y)) + "\"/>\n";
}

std::string pieces(const Canvas& c, const std::vector<IntPoint>& pts, const SvgOptions& o) {
    const double r = std::max(2.0, std::min(c.cell, 24.0) * 0.35);
    std::string s = "<g class=\"pieces\">\n";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        s += "<circle cx=\"" + num(c.px(pts[k].x)) + "\" cy=\"" + num(c.py(pts[k].y)) + "\" r=\"" + num(r) +
             "\" fill=\"#1f4e79\"/>\n";
        if (o.labels)
            s += "<text x=\"" + num(c.px(pts[k].x)) + "\" y=\"" + num(c.py(pts[k].y) + r * 0.4) +
                 "\" font-size=\"" + num(r * 1.1) + "\" text-anchor=\"middle\" fill=\"white\">" +
                 std::to_string(k + 1) + "</text>\n";
    }
    return s + "</g>\n";
}

}  // namespace

std::string emit_svg(const GeneratedConfig& config, const SvgOptions& opts) {
    const auto [w, h] = config.extent();
    const Canvas c = make_canvas(w.get_si(), h.get_si(), opts);
    std::string s = header(c) + grid(c, opts);
    s += "<g class=\"attacks\" stroke=\"#c0392b\" stroke-width=\"1\">\n";
    for (const auto& e : config.equations)
        if (e.i <= config.positions.size() && e.j <= config.positions.size())
            s += segment(c, config.positions[e.i - 1], config.positions[e.j - 1]);
    s += "</g>\n" + pieces(c, config.positions, opts);
    return s + "</svg>\n";
}

std::string emit_svg(const Trajectory& trajectory, const SvgOptions& opts) {
    BigInt l = 1;
    for (const auto& p : trajectory.points) l = lcm(lcm(l, p.x.denominator()), p.y.denominator());
    std::vector<IntPoint> pts;
    for (const auto& p : trajectory.points)
        pts.push_back({(p.x * Rational(l)).numerator(), (p.y * Rational(l)).numerator()});
    const Canvas c = make_canvas(l.get_si(), l.get_si(), opts);
    std::string s = header(c) + grid(c, opts);
    s += "<g class=\"attacks\" stroke=\"#c0392b\" stroke-width=\"1\">\n";
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) s += segment(c, pts[k], pts[k + 1]);
    s += "</g>\n" + pieces(c, pts, opts);
    return s + "</svg>\n";
}

std::string counts_csv(const std::vector<std::pair<long, BigInt>>& rows) {
    std::string s = "n,count\n";
    for (const auto& [n, v] : rows) s += std::to_string(n) + "," + v.get_str() + "\n";
    return s;
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["piece"] = piece;
    j["q"] = q;
    j["n_range"] = {n_min, n_max};
    j["outputs"] = outputs;
    j["cache_keys"] = cache_keys;
    j["started"] = started;
    j["finished"] = finished;
    return j.dump(2) + "\n";
}

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace riderlab
