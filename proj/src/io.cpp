#include "bsk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace bsk::io {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view s) {
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::runtime_error("bad number: '" + std::string(s) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

std::vector<Point> read_points_csv(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#')
            continue;
        const std::size_t comma = body.find(',');
        if (comma == std::string_view::npos)
            throw std::runtime_error("points csv line " + std::to_string(lineno) +
                                     ": expected 'x,y'");
        pts.push_back({parse_double(trim(body.substr(0, comma))),
                       parse_double(trim(body.substr(comma + 1)))});
    }
    return pts;
}

void write_points_csv(std::ostream& out, std::span<const Point> pts) {
    for (const Point& p : pts)
        out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

std::vector<Point> read_points_csv_file(const std::string& path) {
    auto in = open_in(path);
    return read_points_csv(in);
}

void write_points_csv_file(const std::string& path, std::span<const Point> pts) {
    auto out = open_out(path);
    write_points_csv(out, pts);
}

std::string graph_to_json(std::span<const Point> pts, const SkeletonGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const Point& p : pts)
        j["vertices"].push_back({p.x, p.y});
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges)
        j["edges"].push_back({a, b});
    return j.dump();
}

void parse_graph_json(const std::string& text, std::vector<Point>& pts,
                      SkeletonGraph& g) {
    const nlohmann::json j = nlohmann::json::parse(text);
    pts.clear();
    for (const auto& v : j.at("vertices"))
        pts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<std::uint32_t>(),
                           e.at(1).get<std::uint32_t>());
    g = graph_from_edges(PointSet(pts), std::move(edges));
}

void write_graph_json_file(const std::string& path, std::span<const Point> pts,
                           const SkeletonGraph& g) {
    auto out = open_out(path);
    out << graph_to_json(pts, g) << '\n';
}

void read_graph_json_file(const std::string& path, std::vector<Point>& pts,
                          SkeletonGraph& g) {
    auto in = open_in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    parse_graph_json(buf.str(), pts, g);
}

namespace {

struct Frame {
    double minx, miny, scale, height;
    double tx(double x) const { return (x - minx) * scale; }
    double ty(double y) const { return height - (y - miny) * scale; }
};

Frame fit_frame(std::span<const Point> pts, double width, double margin) {
    double minx = pts[0].x, maxx = pts[0].x;
    double miny = pts[0].y, maxy = pts[0].y;
    for (const Point& p : pts) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const double spanx = std::max(maxx - minx, 1e-9);
    const double spany = std::max(maxy - miny, 1e-9);
    const double scale = (width - 2 * margin) / spanx;
    Frame f;
    f.minx = minx - margin / scale;
    f.miny = miny - margin / scale;
    f.scale = scale;
    f.height = spany * scale + 2 * margin;
    return f;
}

}  // namespace

void write_svg(std::ostream& out, std::span<const Point> pts,
               const SkeletonGraph& g, const SvgOptions& opts) {
    if (pts.empty())
        throw std::invalid_argument("write_svg: no points");
    const Frame f = fit_frame(pts, opts.width, opts.margin);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width
        << "\" height=\"" << f.height << "\">\n";
    if (opts.draw_diamond && pts.size() >= 2) {
        const Point a = pts.front(), b = pts.back();
        const double len = dist(a, b);
        const double half = std::tan(opts.diamond_angle / 2);
        const double ux = (b.x - a.x) / len, uy = (b.y - a.y) / len;
        const double h = half * len / 2;
        const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        const Point top{mid.x - uy * h, mid.y + ux * h};
        const Point bot{mid.x + uy * h, mid.y - ux * h};
        out << "  <polygon points=\"" << f.tx(a.x) << ',' << f.ty(a.y) << ' '
            << f.tx(top.x) << ',' << f.ty(top.y) << ' ' << f.tx(b.x) << ','
            << f.ty(b.y) << ' ' << f.tx(bot.x) << ',' << f.ty(bot.y)
            << "\" fill=\"none\" stroke=\"#c0c0c0\" stroke-dasharray=\"4 2\"/>\n";
    }
    for (auto [a, b] : g.edges) {
        out << "  <line x1=\"" << f.tx(pts[a].x) << "\" y1=\"" << f.ty(pts[a].y)
            << "\" x2=\"" << f.tx(pts[b].x) << "\" y2=\"" << f.ty(pts[b].y)
            << "\" stroke=\"#3060c0\" stroke-width=\"1\"/>\n";
    }
    if (opts.draw_vertices) {
        for (const Point& p : pts)
            out << "  <circle cx=\"" << f.tx(p.x) << "\" cy=\"" << f.ty(p.y)
                << "\" r=\"2\" fill=\"#202020\"/>\n";
    }
    out << "</svg>\n";
}

void write_svg_file(const std::string& path, std::span<const Point> pts,
                    const SkeletonGraph& g, const SvgOptions& opts) {
    auto out = open_out(path);
    write_svg(out, pts, g, opts);
}

void write_curve_svg_file(const std::string& path,
                          const std::vector<std::pair<double, double>>& xy) {
    if (xy.empty())
        throw std::invalid_argument("write_curve_svg_file: empty series");
    std::vector<Point> pts;
    pts.reserve(xy.size());
    for (auto [x, y] : xy)
        pts.push_back({x, y});
    auto out = open_out(path);
    const Frame f = fit_frame(pts, 800.0, 30.0);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
        << f.height << "\">\n  <polyline points=\"";
    for (const Point& p : pts)
        out << f.tx(p.x) << ',' << f.ty(p.y) << ' ';
    out << "\" fill=\"none\" stroke=\"#3060c0\" stroke-width=\"1.5\"/>\n</svg>\n";
}

}  // namespace bsk::io
