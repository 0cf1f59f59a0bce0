// Command-line front end: experiment runners plus direct queries against the
// Farey graph, the half-plane net's electric space, and the hyperbolicity
// toolkit.  Experiment subcommands exit 0 (pass), 1 (fail), 2 (inconclusive);
// usage or input errors exit 3.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "teichlab/experiments.hpp"
#include "teichlab/farey.hpp"
#include "teichlab/gromov.hpp"
#include "teichlab/hnet.hpp"
#include "teichlab/report.hpp"
#include "teichlab/teich.hpp"

using namespace teichlab;

namespace {

LabConfig g_cfg;
std::string g_out;

void add_common(CLI::App* cmd) {
    cmd->add_option("--epsilon", g_cfg.epsilon, "thin-region threshold");
    cmd->add_option("--grid", g_cfg.spacing, "net spacing in (x, log y)");
    cmd->add_option("--window", g_cfg.window, "half-width of the slope-value window");
    cmd->add_option("--seed", g_cfg.seed, "rng seed");
    cmd->add_option("--cone-denom", g_cfg.cone_denom_bound,
                    "denominator bound for coned horoballs (0: auto)");
    cmd->add_option("--apex-denom", g_cfg.apex_denom_bound,
                    "denominator bound for seeded horoball samples");
    cmd->add_option("--out", g_out, "also write the JSON output to this file");
}

int emit_report(const ExperimentReport& rep) {
    std::string s = rep.dump();
    std::fwrite(s.data(), 1, s.size(), stdout);
    if (!g_out.empty()) write_text_file(g_out, s);
    return rep.exit_code();
}

int emit_json(const nlohmann::json& j, int code = 0) {
    std::string s = j.dump(2) + "\n";
    std::fwrite(s.data(), 1, s.size(), stdout);
    if (!g_out.empty()) write_text_file(g_out, s);
    return code;
}

Slope parse_slope(const std::string& text) {
    auto s = Slope::parse(text);
    if (!s) throw std::invalid_argument("not a slope: '" + text + "' (expected p/q)");
    return *s;
}

ContinuedFraction parse_cf(const std::string& text) {
    auto cf = ContinuedFraction::parse(text);
    if (!cf)
        throw std::invalid_argument("not a continued fraction: '" + text +
                                    "' (expected e.g. [1;(1)] or [0;2,2])");
    return *cf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

TeichPoint parse_point(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 2) throw std::invalid_argument("not a point: '" + s + "' (expected x,y)");
    return TeichPoint::of(std::stod(parts[0]), std::stod(parts[1]));
}

MetricSample load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    f >> j;
    nlohmann::json rows = j.is_object() ? j.at("matrix") : j;
    std::vector<std::string> labels;
    if (j.is_object() && j.contains("labels"))
        labels = j.at("labels").get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < rows.size(); ++i) labels.push_back(std::to_string(i));
    std::vector<double> m;
    for (const auto& row : rows)
        for (const auto& v : row) m.push_back(v.get<double>());
    return MetricSample::from_matrix(std::move(labels), std::move(m));
}

NetParams net_params_for(const std::vector<TeichPoint>& cover) {
    NetParams np;
    np.x_min = -g_cfg.window - 0.25;
    np.x_max = g_cfg.window + 0.25;
    np.y_min = g_cfg.y_min;
    np.y_max = g_cfg.y_max;
    np.spacing = g_cfg.spacing;
    np.epsilon = g_cfg.epsilon;
    np.apex_denom_bound = g_cfg.apex_denom_bound;
    for (const auto& p : cover) {
        np.x_min = std::min(np.x_min, p.x - 0.75);
        np.x_max = std::max(np.x_max, p.x + 0.75);
        np.y_min = std::min(np.y_min, p.y);
        np.y_max = std::max(np.y_max, p.y);
    }
    np.cone_denom_bound = g_cfg.cone_denom_bound
                              ? g_cfg.cone_denom_bound
                              : (i64)std::ceil(std::sqrt(np.epsilon / np.y_min)) + 64;
    return np;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "lab: curve-graph and half-plane experiments for the once-punctured torus\n"
        "(Farey graph distances, electric cone-off spaces, hyperbolicity audits)"};
    app.require_subcommand(1);

    // ---- experiment subcommands ----
    std::string target_s, f_s, g_s, seq_s;
    double T = 12.0, step = 0.25;
    int n = 40, geodesics = 10;
    i64 denom = 21;

    auto* ray = app.add_subcommand("ray", "electric distance profile along a geodesic ray");
    ray->add_option("--target", target_s, "continued fraction of the target, e.g. [1;(1)]")
        ->required();
    ray->add_option("--T", T, "ray length");
    ray->add_option("--step", step, "sampling step");
    add_common(ray);

    auto* sep = app.add_subcommand("separate", "Gromov-product profile of two rays");
    sep->add_option("--f", f_s, "first target (continued fraction)")->required();
    sep->add_option("--g", g_s, "second target (continued fraction)")->required();
    sep->add_option("--n", n, "samples per ray");
    add_common(sep);

    auto* qi = app.add_subcommand("qi-audit",
                                  "curve graph vs electric space quasi-isometry constants");
    qi->add_option("--denom", denom, "slope denominator bound");
    qi->add_option("--geodesics", geodesics, "random geodesics for the quasigeodesic fits");
    add_common(qi);

    auto* segs = app.add_subcommand("segments", "accumulation of cross segments onto a line");
    segs->add_option("--f", f_s, "first target (continued fraction)")->required();
    segs->add_option("--g", g_s, "second target (continued fraction)")->required();
    segs->add_option("--n", n, "number of segments");
    add_common(segs);

    auto* bmap = app.add_subcommand("boundary-map",
                                    "graph divergence vs numeric convergence of a slope sequence");
    bmap->add_option("--seq", seq_s, "comma-separated slopes, e.g. 1/1,2/1,3/2,5/3")->required();
    add_common(bmap);

    // ---- farey ----
    auto* farey = app.add_subcommand("farey", "curve-graph queries");
    farey->require_subcommand(1);
    std::string a_s, b_s;
    i64 fbound = 0, threshold = 1;
    bool fpath = false, no_verify = false;
    auto* fdist = farey->add_subcommand("dist", "graph distance between two slopes");
    fdist->add_option("a", a_s, "first slope p/q")->required();
    fdist->add_option("b", b_s, "second slope p/q")->required();
    fdist->add_option("--bound", fbound, "search denominator bound (0: 4 max-height^2)");
    fdist->add_option("--threshold", threshold, "intersection number joining slopes (1 or 2)");
    fdist->add_flag("--path", fpath, "also print one geodesic path");
    fdist->add_flag("--no-verify", no_verify, "skip the bound-doubling verification");

    int radius = 2;
    std::string edges_out = "farey_ball_edges.csv", dist_out = "farey_ball_dist.csv";
    auto* fball = farey->add_subcommand("ball", "ball around a slope, exported as CSV");
    fball->add_option("center", a_s, "center slope p/q")->required();
    fball->add_option("radius", radius, "ball radius")->required();
    fball->add_option("--bound", fbound, "universe denominator bound (0: 4 max-height^2)");
    fball->add_option("--threshold", threshold, "intersection number joining slopes (1 or 2)");
    fball->add_option("--edges-out", edges_out, "edge-list CSV path");
    fball->add_option("--dist-out", dist_out, "distance CSV path");

    // ---- electric ----
    auto* el = app.add_subcommand("electric", "electric (cone-off) space over the half-plane net");
    el->require_subcommand(1);
    std::string from_s, to_s, export_path;
    auto* edist = el->add_subcommand("dist", "electric distance between two half-plane points");
    edist->add_option("from", from_s, "source point x,y")->required();
    edist->add_option("to", to_s, "target point x,y")->required();
    edist->add_option("--export", export_path, "write the electric graph as weighted edge CSV");
    add_common(edist);

    auto* eprof = el->add_subcommand("profile", "CSV profile t, d_el(basepoint, ray(t))");
    eprof->add_option("--ray", target_s, "continued fraction of the ray target")->required();
    eprof->add_option("--T", T, "ray length");
    eprof->add_option("--step", step, "sampling step");
    add_common(eprof);

    // ---- gromov ----
    auto* gr = app.add_subcommand("gromov", "hyperbolicity toolkit on a metric sample");
    gr->require_subcommand(1);
    std::string matrix_path, pairs_path;
    DeltaOptions dopts;
    auto* gdelta = gr->add_subcommand("delta", "four-point delta of a distance matrix");
    gdelta->add_option("--matrix", matrix_path, "JSON matrix file: [[..]] or {labels, matrix}")
        ->required();
    gdelta->add_option("--cutoff", dopts.exact_cutoff, "exhaustive scan limit");
    gdelta->add_option("--samples", dopts.sample_points, "subsample size past the cutoff");
    gdelta->add_option("--seed", dopts.seed, "subsample seed");
    gdelta->add_option("--out", g_out, "also write the JSON output to this file");

    auto* gfit = gr->add_subcommand("qi-fit", "fit (k, mu) to paired distances");
    gfit->add_option("--pairs", pairs_path, "CSV file with rows d0,d1")->required();
    gfit->add_option("--out", g_out, "also write the JSON output to this file");

    std::string gseq_s;
    std::size_t gbase = 0, gtail = 3;
    double gthreshold = 0.0;
    auto* gconv = gr->add_subcommand("converge", "convergence-at-infinity profile");
    gconv->add_option("--matrix", matrix_path, "JSON matrix file")->required();
    gconv->add_option("--seq", gseq_s, "comma-separated point indices")->required();
    gconv->add_option("--base", gbase, "basepoint index");
    gconv->add_option("--tail", gtail, "minimum tail length");
    gconv->add_option("--threshold", gthreshold, "divergence threshold (0: auto)");
    gconv->add_option("--out", g_out, "also write the JSON output to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ray->parsed()) return emit_report(ray_profile(parse_cf(target_s), T, step, g_cfg));
        if (sep->parsed())
            return emit_report(separation_profile(parse_cf(f_s), parse_cf(g_s), n, g_cfg));
        if (qi->parsed()) return emit_report(qi_audit(denom, g_cfg, geodesics));
        if (segs->parsed())
            return emit_report(segment_accumulation(parse_cf(f_s), parse_cf(g_s), n, g_cfg));
        if (bmap->parsed()) {
            std::vector<Slope> seq;
            for (const auto& tok : split(seq_s, ',')) seq.push_back(parse_slope(tok));
            return emit_report(boundary_map_audit(seq, g_cfg));
        }

        if (fdist->parsed()) {
            FareyParams params{threshold};
            FareyOptions opts;
            opts.denom_bound = fbound;
            opts.verify_insensitivity = !no_verify;
            Slope a = parse_slope(a_s), b = parse_slope(b_s);
            nlohmann::json j;
            j["a"] = a.str();
            j["b"] = b.str();
            j["distance"] = farey_distance(a, b, params, opts);
            if (fpath) {
                j["path"] = nlohmann::json::array();
                for (const Slope& s : geodesic_path(a, b, params, opts)) j["path"].push_back(s.str());
            }
            return emit_json(j);
        }
        if (fball->parsed()) {
            FareyBall bl = ball(parse_slope(a_s), radius, FareyParams{threshold}, fbound);
            std::string edges = "vertex1,vertex2\n";
            for (const auto& [i, j] : bl.edges)
                edges += bl.vertices[i].str() + "," + bl.vertices[j].str() + "\n";
            std::string dists = "vertex,dist\n";
            for (std::size_t i = 0; i < bl.vertices.size(); ++i)
                dists += bl.vertices[i].str() + "," + std::to_string(bl.dist[i]) + "\n";
            write_text_file(edges_out, edges);
            write_text_file(dist_out, dists);
            nlohmann::json j;
            j["center"] = bl.center.str();
            j["radius"] = bl.radius;
            j["denom_bound"] = bl.denom_bound;
            j["vertices"] = bl.vertices.size();
            j["edges"] = bl.edges.size();
            j["edges_csv"] = edges_out;
            j["dist_csv"] = dist_out;
            return emit_json(j);
        }

        if (edist->parsed()) {
            TeichPoint from = parse_point(from_s), to = parse_point(to_s);
            NetParams np = net_params_for({from, to});
            HNet net = build_hnet(np, {from, to});
            MetricSample base = net_metric(net);
            ElectricSpace sp = net_electric(net, base);
            if (!export_path.empty()) {
                std::string csv = "kind,a,b,weight\n";
                for (std::size_t c = 0; c < sp.cone_count(); ++c)
                    for (std::size_t u : sp.cones().members[c])
                        csv += "cone," + sp.cones().names[c] + ",p" + std::to_string(u) + ",0.5\n";
                for (std::size_t i = 0; i < sp.base_size(); ++i)
                    for (std::size_t j = i + 1; j < sp.base_size(); ++j)
                        csv += "base,p" + std::to_string(i) + ",p" + std::to_string(j) + "," +
                               csv_num(sp.base_dist(i, j)) + "\n";
                write_text_file(export_path, csv);
            }
            nlohmann::json j;
            j["from"] = {from.x, from.y};
            j["to"] = {to.x, to.y};
            j["net_points"] = net.points.size();
            j["cones"] = sp.cone_count();
            j["base_dist"] = sp.base_dist(net.extras_begin, net.extras_begin + 1);
            j["electric_dist"] = sp.dist(net.extras_begin, net.extras_begin + 1);
            return emit_json(j);
        }
        if (eprof->parsed()) {
            ExperimentReport rep = ray_profile(parse_cf(target_s), T, step, g_cfg);
            std::fwrite(rep.profile_csv.data(), 1, rep.profile_csv.size(), stdout);
            if (!g_out.empty()) write_text_file(g_out, rep.profile_csv);
            return 0;
        }

        if (gdelta->parsed()) {
            MetricSample sample = load_matrix(matrix_path);
            DeltaReport rep = delta_four_point(sample, dopts);
            nlohmann::json j;
            j["delta"] = rep.delta;
            j["witness"] = {{"base", sample.label(rep.witness[0])},
                            {"x", sample.label(rep.witness[1])},
                            {"y", sample.label(rep.witness[2])},
                            {"z", sample.label(rep.witness[3])},
                            {"indices", rep.witness}};
            j["points_used"] = rep.points_used;
            j["points_total"] = rep.points_total;
            j["exhaustive"] = rep.exhaustive;
            return emit_json(j);
        }
        if (gfit->parsed()) {
            std::ifstream f(pairs_path);
            if (!f) throw std::runtime_error("cannot open " + pairs_path);
            std::vector<QiPair> pairs;
            std::string line;
            while (std::getline(f, line)) {
                if (line.empty()) continue;
                auto parts = split(line, ',');
                if (parts.size() != 2) continue;
                try {
                    pairs.push_back(QiPair{std::stod(parts[0]), std::stod(parts[1])});
                } catch (const std::invalid_argument&) {
                    continue;  // header row
                }
            }
            QiFit fit = quasi_isometry_fit(pairs);
            nlohmann::json j;
            j["pairs"] = pairs.size();
            j["k"] = fit.k;
            j["mu"] = fit.mu;
            j["finite"] = fit.finite;
            j["witness_k"] = fit.witness_k;
            j["witness_mu"] = fit.witness_mu;
            return emit_json(j);
        }
        if (gconv->parsed()) {
            MetricSample sample = load_matrix(matrix_path);
            std::vector<std::size_t> seq;
            for (const auto& tok : split(gseq_s, ',')) seq.push_back(std::stoul(tok));
            ConvergenceReport rep = convergence_at_infinity(sample, gbase, seq, gtail, gthreshold);
            nlohmann::json j;
            j["verdict"] = rep.verdict;
            j["profile"] = rep.profile;
            j["threshold"] = rep.threshold;
            j["rise"] = rep.rise;
            return emit_json(j, rep.verdict == "inconclusive" ? 2 : 0);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 3;  // unreachable: a subcommand is required
}
