#ifndef BSK_IO_HPP
#define BSK_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bsk/geom.hpp"
#include "bsk/skeleton.hpp"

namespace bsk::io {

// One "x,y" pair per line, shortest round-trip decimals, '#' comments and
// blank lines ignored on input.
std::vector<Point> read_points_csv(std::istream& in);
void write_points_csv(std::ostream& out, std::span<const Point> pts);

std::vector<Point> read_points_csv_file(const std::string& path);
void write_points_csv_file(const std::string& path, std::span<const Point> pts);

// {"vertices": [[x,y],...], "edges": [[i,j],...]}
std::string graph_to_json(std::span<const Point> pts, const SkeletonGraph& g);
void parse_graph_json(const std::string& text, std::vector<Point>& pts,
                      SkeletonGraph& g);
void write_graph_json_file(const std::string& path, std::span<const Point> pts,
                           const SkeletonGraph& g);
void read_graph_json_file(const std::string& path, std::vector<Point>& pts,
                          SkeletonGraph& g);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

struct SvgOptions {
    double width = 800.0;
    double margin = 20.0;
    bool draw_vertices = true;
    // Optional diamond overlay between the first and last vertex.
    bool draw_diamond = false;
    double diamond_angle = 0.0;
};

void write_svg(std::ostream& out, std::span<const Point> pts,
               const SkeletonGraph& g, const SvgOptions& opts = {});
void write_svg_file(const std::string& path, std::span<const Point> pts,
                    const SkeletonGraph& g, const SvgOptions& opts = {});

// Simple polyline plot for (x, y) series, used by the exponent curve.
void write_curve_svg_file(const std::string& path,
                          const std::vector<std::pair<double, double>>& xy);

}  // namespace bsk::io

#endif
