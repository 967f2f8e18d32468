// betaskel: beta-skeletons, fractal adversarial paths, dilation
// measurement, and greedy routing from the command line.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsk/dilation.hpp"
#include "bsk/fractal.hpp"
#include "bsk/io.hpp"
#include "bsk/routing.hpp"
#include "bsk/skeleton.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

constexpr int kExitOk = 0;
constexpr int kExitBadParams = 1;
constexpr int kExitLemmaFailure = 2;
constexpr int kExitIoError = 3;

struct LemmaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Portable uniform double in [0,1) from the raw 64-bit stream.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double cov = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (xs[i] - mx) * (ys[i] - my);
        var += (xs[i] - mx) * (xs[i] - mx);
    }
    return cov / var;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty())
        return std::cout;
    file.open(path);
    if (!file)
        throw std::runtime_error("cannot open for writing: " + path);
    return file;
}

bsk::SkeletonGraph path_graph(const bsk::PointSet& ps) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i + 1 < ps.size(); ++i)
        edges.emplace_back(i, i + 1);
    return bsk::graph_from_edges(ps, std::move(edges));
}

// Lists the edge-set difference between the built skeleton and the path,
// for the lemma-failure diagnostic.
void report_skeleton_mismatch(const bsk::PointSet& ps,
                              const bsk::SkeletonGraph& skel) {
    std::vector<std::string> extra, missing;
    for (auto [a, b] : skel.edges)
        if (b != a + 1)
            extra.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    for (std::uint32_t i = 0; i + 1 < ps.size(); ++i)
        if (!skel.has_edge(i, i + 1))
            missing.push_back("(" + std::to_string(i) + "," +
                              std::to_string(i + 1) + ")");
    std::ostringstream msg;
    msg << "skeleton differs from the fractal path: " << extra.size()
        << " extra, " << missing.size() << " missing edges";
    std::size_t shown = 0;
    for (const auto& e : extra) {
        msg << "\n  extra " << e;
        if (++shown >= 20)
            break;
    }
    shown = 0;
    for (const auto& e : missing) {
        msg << "\n  missing " << e;
        if (++shown >= 20)
            break;
    }
    throw LemmaError(msg.str());
}

struct Options {
    double beta = 1.0;
    double theta = kPi / 4;
    int depth = 1;
    std::size_t k = 1;
    std::optional<std::uint64_t> seed;
    std::string input;
    std::string output;
    std::string format = "csv";
    bool check = false;
};

void emit_points(const Options& opt, const std::vector<bsk::Point>& pts,
                 bool with_path_edges) {
    if (opt.format == "csv") {
        std::ofstream file;
        bsk::io::write_points_csv(open_output(file, opt.output), pts);
    } else if (opt.format == "json") {
        bsk::PointSet ps(pts);
        const bsk::SkeletonGraph g =
            with_path_edges ? path_graph(ps) : bsk::SkeletonGraph{ps.size(), {}, {}};
        std::ofstream file;
        open_output(file, opt.output) << bsk::io::graph_to_json(pts, g) << '\n';
    } else if (opt.format == "svg") {
        bsk::PointSet ps(pts);
        const bsk::SkeletonGraph g = with_path_edges
                                         ? path_graph(ps)
                                         : bsk::SkeletonGraph{ps.size(), {}, {}};
        std::ofstream file;
        bsk::io::write_svg(open_output(file, opt.output), pts, g);
    } else {
        throw CLI::ValidationError("--format must be csv, json or svg");
    }
}

void emit_graph(const Options& opt, const std::vector<bsk::Point>& pts,
                const bsk::SkeletonGraph& g) {
    if (opt.format == "svg") {
        std::ofstream file;
        bsk::io::write_svg(open_output(file, opt.output), pts, g);
        return;
    }
    std::ofstream file;
    open_output(file, opt.output) << bsk::io::graph_to_json(pts, g) << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"beta-skeleton construction, fractal paths, dilation and "
                 "greedy routing"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--check", opt.check,
                 "strict mode: reject unseeded random generation");

    // generate
    auto* gen = app.add_subcommand("generate", "generate a point set");
    gen->require_subcommand(1);
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output", opt.output, "output file (default stdout)");
        cmd->add_option("--format", opt.format, "csv|json|svg")
            ->default_val("csv");
    };

    auto* gen_fractal = gen->add_subcommand("fractal", "recursive path P");
    gen_fractal->add_option("--theta", opt.theta, "construction angle (radians)")
        ->required();
    gen_fractal->add_option("--depth", opt.depth, "recursion depth")->required();
    std::string orientation = "alternating";
    gen_fractal->add_option("--orientation", orientation,
                            "alternating|uniform");
    add_common(gen_fractal);

    auto* gen_random = gen->add_subcommand("random", "uniform in unit square");
    std::size_t count = 0;
    gen_random->add_option("--n", count, "number of points")->required();
    gen_random->add_option("--seed", opt.seed, "RNG seed");
    add_common(gen_random);

    auto* gen_grid = gen->add_subcommand("grid", "n-by-n unit grid");
    gen_grid->add_option("--n", count, "points per side")->required();
    add_common(gen_grid);

    auto* gen_collinear =
        gen->add_subcommand("collinear", "equally spaced on the x-axis");
    gen_collinear->add_option("--n", count, "number of points")->required();
    add_common(gen_collinear);

    // skeleton
    auto* skel = app.add_subcommand("skeleton", "build the (k-)beta-skeleton");
    skel->add_option("--input", opt.input, "points csv")->required();
    skel->add_option("--beta", opt.beta, "skeleton parameter")->required();
    skel->add_option("--k", opt.k, "k-skeleton parameter (default 1)");
    add_common(skel);

    // mst
    auto* mst = app.add_subcommand("mst", "Euclidean minimum spanning tree");
    mst->add_option("--input", opt.input, "points csv")->required();
    add_common(mst);

    // dilation
    auto* dil = app.add_subcommand("dilation", "measure graph dilation");
    dil->add_option("--input", opt.input, "graph json")->required();
    std::int64_t src = -1, dst = -1;
    dil->add_option("--source", src, "pair dilation: source index");
    dil->add_option("--target", dst, "pair dilation: target index");
    dil->add_option("--output", opt.output, "output file (default stdout)");

    // route
    auto* route = app.add_subcommand("route", "greedy routing on a skeleton");
    route->add_option("--input", opt.input, "graph json")->required();
    route->add_option("--beta", opt.beta, "skeleton parameter")->required();
    route->add_option("--source", src, "source index")->required();
    route->add_option("--target", dst, "target index")->required();
    bool do_prune = false;
    route->add_flag("--prune", do_prune, "also emit the pruned tree walk");
    route->add_option("--output", opt.output, "output file (default stdout)");

    // experiment
    auto* exp = app.add_subcommand("experiment", "growth and exponent experiments");
    exp->require_subcommand(1);

    auto* growth = exp->add_subcommand(
        "growth", "dilation growth of the fractal family");
    growth->add_option("--theta", opt.theta, "construction angle")->required();
    growth->add_option("--beta", opt.beta, "skeleton parameter")->required();
    int k_max = 3;
    growth->add_option("--k-max", k_max, "maximum depth")->required();
    growth->add_option("--output", opt.output, "output csv (default stdout)");

    auto* curve = exp->add_subcommand("exponent-curve",
                                      "upper-bound exponent as a function of beta");
    double beta_min = 0.05, beta_max = 0.86;
    int steps = 50;
    curve->add_option("--beta-min", beta_min, "lower end of the beta range");
    curve->add_option("--beta-max", beta_max, "upper end of the beta range");
    curve->add_option("--steps", steps, "number of samples");
    curve->add_option("--output", opt.output, "output csv (default stdout)");
    std::string curve_svg;
    curve->add_option("--svg", curve_svg, "also write an svg line plot");

    // render
    auto* render = app.add_subcommand("render", "render a graph json to svg");
    render->add_option("--input", opt.input, "graph json")->required();
    render->add_option("--output", opt.output, "output svg")->required();
    double diamond_theta = 0.0;
    render->add_option("--diamond-theta", diamond_theta,
                       "overlay the endpoint diamond with this corner angle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help and friends
        std::cerr << e.what() << '\n';
        return kExitBadParams;
    }

    if (gen_fractal->parsed()) {
        bsk::Orientation scheme;
        if (orientation == "alternating")
            scheme = bsk::Orientation::alternating;
        else if (orientation == "uniform")
            scheme = bsk::Orientation::uniform;
        else
            throw CLI::ValidationError("--orientation must be alternating or uniform");
        const bsk::FractalPath path =
            bsk::generate_fractal({opt.theta, opt.depth, scheme});
        emit_points(opt, path.vertices, true);
    } else if (gen_random->parsed()) {
        if (!opt.seed) {
            if (opt.check)
                throw CLI::ValidationError(
                    "--check requires --seed for random generation");
            opt.seed = std::random_device{}();
        }
        std::mt19937_64 rng(*opt.seed);
        std::vector<bsk::Point> pts;
        pts.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            const double x = uniform01(rng);
            const double y = uniform01(rng);
            pts.push_back({x, y});
        }
        emit_points(opt, pts, false);
    } else if (gen_grid->parsed()) {
        std::vector<bsk::Point> pts;
        for (std::size_t r = 0; r < count; ++r)
            for (std::size_t c = 0; c < count; ++c)
                pts.push_back({static_cast<double>(c), static_cast<double>(r)});
        emit_points(opt, pts, false);
    } else if (gen_collinear->parsed()) {
        std::vector<bsk::Point> pts;
        for (std::size_t i = 0; i < count; ++i)
            pts.push_back({static_cast<double>(i), 0.0});
        emit_points(opt, pts, true);
    } else if (skel->parsed()) {
        const bsk::PointSet ps(bsk::io::read_points_csv_file(opt.input));
        const bsk::SkeletonGraph g = bsk::build_k_skeleton(ps, opt.beta, opt.k);
        std::vector<bsk::Point> pts(ps.points().begin(), ps.points().end());
        emit_graph(opt, pts, g);
    } else if (mst->parsed()) {
        const bsk::PointSet ps(bsk::io::read_points_csv_file(opt.input));
        const bsk::SkeletonGraph g = bsk::euclidean_mst(ps);
        std::vector<bsk::Point> pts(ps.points().begin(), ps.points().end());
        emit_graph(opt, pts, g);
    } else if (dil->parsed()) {
        std::vector<bsk::Point> pts;
        bsk::SkeletonGraph g;
        bsk::io::read_graph_json_file(opt.input, pts, g);
        const bsk::PointSet ps(pts);
        nlohmann::json j;
        if (src >= 0 && dst >= 0) {
            const auto d = bsk::pair_dilation(g, ps, static_cast<std::uint32_t>(src),
                                              static_cast<std::uint32_t>(dst));
            j["pair"] = {src, dst};
            if (d)
                j["dilation"] = *d;
            else
                j["unreachable"] = true;
        } else {
            const bsk::DilationReport rep = bsk::graph_dilation(g, ps);
            j["max_dilation"] = rep.max_dilation;
            j["witness"] = {rep.witness_pair.first, rep.witness_pair.second};
            j["disconnected"] = rep.disconnected;
        }
        std::ofstream file;
        open_output(file, opt.output) << j.dump() << '\n';
    } else if (route->parsed()) {
        std::vector<bsk::Point> pts;
        bsk::SkeletonGraph g;
        bsk::io::read_graph_json_file(opt.input, pts, g);
        const bsk::PointSet ps(pts);
        const bsk::RouteResult res =
            bsk::greedy_route(g, ps, opt.beta, static_cast<std::uint32_t>(src),
                              static_cast<std::uint32_t>(dst));
        nlohmann::json j;
        j["path"] = res.path;
        j["length"] = res.length;
        j["boundary_length"] = res.boundary_length;
        j["triangles"] = res.tree.nodes.size();
        j["leaves"] = bsk::leaf_count(res.tree);
        if (do_prune) {
            const bsk::PruneResult pr = bsk::prune_tree(res.tree, ps.points());
            double wl = 0;
            for (std::size_t i = 0; i + 1 < pr.walk.size(); ++i)
                wl += bsk::dist(ps[pr.walk[i]], ps[pr.walk[i + 1]]);
            j["pruned"] = {
                {"walk", pr.walk},
                {"walk_length", wl},
                {"boundary_length", bsk::boundary_length(pr.tree, ps.points())},
                {"leaves", bsk::leaf_count(pr.tree)},
            };
        }
        std::ofstream file;
        open_output(file, opt.output) << j.dump() << '\n';
    } else if (growth->parsed()) {
        std::ofstream file;
        std::ostream& out = open_output(file, opt.output);
        // The lemma precondition is checked at depth 1 before any rows.
        {
            const bsk::FractalPath probe =
                bsk::generate_fractal({opt.theta, 1, bsk::Orientation::alternating});
            const bsk::PointSet ps(probe.vertices);
            const bsk::SkeletonGraph skel = bsk::build_skeleton(ps, opt.beta);
            if (skel.edges.size() != ps.size() - 1 ||
                !bsk::verify_is_skeleton(probe, opt.beta))
                report_skeleton_mismatch(ps, skel);
        }
        out << "k,n,beta,theta,endpoint_dilation,greedy_length,upper_bound,"
               "lower_bound\n";
        const double l1 = bsk::fractal_unit_dilation(opt.theta);
        std::vector<double> log_n, log_dil;
        for (int k = 1; k <= k_max; ++k) {
            const bsk::FractalPath path =
                bsk::generate_fractal({opt.theta, k, bsk::Orientation::alternating});
            const bsk::PointSet ps(path.vertices);
            const bsk::SkeletonGraph skel = bsk::build_skeleton(ps, opt.beta);
            const bsk::SkeletonGraph expect = path_graph(ps);
            if (skel.edges != expect.edges)
                report_skeleton_mismatch(ps, skel);
            const std::uint32_t last = static_cast<std::uint32_t>(ps.size() - 1);
            const double dil = *bsk::pair_dilation(skel, ps, 0, last);
            const bsk::RouteResult res =
                bsk::greedy_route(skel, ps, opt.beta, 0, last);
            const double ub = bsk::dilation_upper_bound(ps.size(), opt.beta);
            out << k << ',' << ps.size() << ',' << bsk::io::format_double(opt.beta)
                << ',' << bsk::io::format_double(opt.theta) << ','
                << bsk::io::format_double(dil) << ','
                << bsk::io::format_double(res.length) << ','
                << bsk::io::format_double(ub) << ','
                << bsk::io::format_double(std::pow(l1, k)) << '\n';
            log_n.push_back(std::log(static_cast<double>(ps.size())));
            log_dil.push_back(std::log(dil));
        }
        if (log_n.size() >= 2)
            out << "# fitted_exponent = "
                << bsk::io::format_double(fit_slope(log_n, log_dil)) << '\n';
    } else if (curve->parsed()) {
        if (!(beta_min > 0.0 && beta_min < beta_max &&
              beta_max < std::sqrt(3.0) / 2.0))
            throw CLI::ValidationError(
                "need 0 < beta-min < beta-max < sqrt(3)/2");
        if (steps < 2)
            throw CLI::ValidationError("--steps must be at least 2");
        std::ofstream file;
        std::ostream& out = open_output(file, opt.output);
        out << "beta,upper_c\n";
        std::vector<std::pair<double, double>> xy;
        for (int i = 0; i < steps; ++i) {
            const double b =
                beta_min + (beta_max - beta_min) * i / (steps - 1);
            const double c = bsk::upper_exponent(b);
            out << bsk::io::format_double(b) << ','
                << bsk::io::format_double(c) << '\n';
            xy.emplace_back(b, c);
        }
        if (!curve_svg.empty())
            bsk::io::write_curve_svg_file(curve_svg, xy);
    } else if (render->parsed()) {
        std::vector<bsk::Point> pts;
        bsk::SkeletonGraph g;
        bsk::io::read_graph_json_file(opt.input, pts, g);
        bsk::io::SvgOptions svg;
        if (diamond_theta > 0.0) {
            svg.draw_diamond = true;
            svg.diamond_angle = diamond_theta;
        }
        bsk::io::write_svg_file(opt.output, pts, g, svg);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const LemmaError& e) {
        std::cerr << "lemma precondition failed: " << e.what() << '\n';
        return kExitLemmaFailure;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitBadParams;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return kExitBadParams;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return kExitBadParams;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIoError;
    }
}
