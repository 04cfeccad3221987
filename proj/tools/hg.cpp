// Command-line front end for neighborhood growth computations on the
// Hamming plane: exact smallest spanning sets, energy-entropy rates and
// their support, Euclidean-limit diagnostics, and Monte Carlo spanning
// probabilities.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamming/euclid.hpp"
#include "hamming/extremal.hpp"
#include "hamming/growth.hpp"
#include "hamming/io.hpp"
#include "hamming/randmc.hpp"
#include "hamming/rate.hpp"
#include "hamming/young.hpp"

using namespace hamming;
using nlohmann::json;

namespace {

struct Output {
    std::string path;  // empty = stdout
    void emit(const std::string& text) const {
        if (path.empty())
            std::cout << text;
        else
            write_file(path, text);
    }
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

json pointset_json(const PointSet& a) {
    json j;
    j["box"] = {a.box_n, a.box_m};
    auto pts = json::array();
    for (const Cell& c : a.points) pts.push_back({c.u, c.v});
    j["points"] = pts;
    return j;
}

json cells_json(const std::vector<Cell>& cells) {
    auto pts = json::array();
    for (const Cell& c : cells) pts.push_back({c.u, c.v});
    return pts;
}

long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::atoll(v);
}

PointSet load_pointset(const std::string& path) { return parse_pointset_text(read_file(path)); }

Enhancement parse_enh(const std::string& s) {
    if (s.empty()) return {};
    std::vector<int> vals;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) vals.push_back((int)Rat::parse(tok).num());
    return Enhancement(vals);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"neighborhood growth dynamics on the Hamming plane"};
    app.require_subcommand(1);

    std::string zero_spec, in_path, out_path, format = "json";
    std::string alpha_s = "0", beta_s = "0";
    long long budget = env_ll("HG_BUDGET_NODES", 20'000'000);
    int threads = (int)env_ll("HG_THREADS", (long long)std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    auto add_common = [&](CLI::App* cmd, bool with_zero = true) {
        if (with_zero) cmd->add_option("--zero", zero_spec, "zero-set spec")->required();
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--format", format, "json|csv|plain");
        cmd->add_option("--budget", budget, "search node budget");
    };

    // evolve / span / tmax
    std::string f_spec, g_spec;
    auto* c_evolve = app.add_subcommand("evolve", "run the growth to its fixpoint");
    add_common(c_evolve);
    c_evolve->add_option("--in", in_path, "point-set file")->required();
    c_evolve->add_option("--f", f_spec, "row enhancement, comma separated");
    c_evolve->add_option("--g", g_spec, "column enhancement, comma separated");

    auto* c_span = app.add_subcommand("span", "does the configuration span?");
    add_common(c_span);
    c_span->add_option("--in", in_path, "point-set file")->required();

    auto* c_tmax = app.add_subcommand("tmax", "completion-time bound");
    add_common(c_tmax);

    // gamma family
    auto* c_gamma = app.add_subcommand("gamma", "smallest spanning set");
    add_common(c_gamma);
    auto* c_gthin = app.add_subcommand("gamma-thin", "smallest thin spanning set");
    add_common(c_gthin);
    auto* c_gbar = app.add_subcommand("gamma-bar-thin", "smallest spanning enhancement pair");
    add_common(c_gbar);
    std::string rect_spec, inner_spec;
    auto* c_gbounds = app.add_subcommand("gamma-bounds", "lower and upper bounds");
    add_common(c_gbounds);
    c_gbounds->add_option("--rect", rect_spec, "comparison rectangle AxB");
    c_gbounds->add_option("--inner", inner_spec, "inner diagram rows for the sequence bound");

    // rho / rate family
    bool brute = false;
    auto* c_rho = app.add_subcommand("rho", "energy maximum over subsets");
    add_common(c_rho, false);
    c_rho->add_option("--in", in_path, "point-set file")->required();
    c_rho->add_option("--alpha", alpha_s, "column cost")->required();
    c_rho->add_option("--beta", beta_s, "row cost")->required();
    c_rho->add_flag("--brute", brute, "use the exhaustive oracle");

    int pad = 1, max_size = 0, bounds_k = -1;
    bool grid = false, enhanced = false;
    std::string grid_step = "1/10";
    auto* c_rate = app.add_subcommand("rate", "power-law rate of the spanning probability");
    add_common(c_rate);
    c_rate->add_option("--alpha", alpha_s, "exponent of the width");
    c_rate->add_option("--beta", beta_s, "exponent of the height");
    c_rate->add_option("--pad", pad, "search box padding (default 1)");
    c_rate->add_option("--max-size", max_size, "candidate size cap beyond gamma");
    c_rate->add_flag("--grid", grid, "emit the whole surface as CSV");
    c_rate->add_option("--grid-step", grid_step, "grid step (default 1/10)");
    c_rate->add_option("--bounds", bounds_k, "also emit bounds with this shrink parameter");
    c_rate->add_flag("--enhanced", enhanced, "compute the enhancement rate instead");

    int rr_a = 0, rr_b = 0;
    std::string method = "closed";
    auto* c_rrect = app.add_subcommand("rate-rect", "exact rate for the line growth");
    add_common(c_rrect, false);
    c_rrect->add_option("--a", rr_a, "rectangle width")->required();
    c_rrect->add_option("--b", rr_b, "rectangle height")->required();
    c_rrect->add_option("--alpha", alpha_s)->required();
    c_rrect->add_option("--beta", beta_s)->required();
    c_rrect->add_option("--method", method, "closed|recursion|both");

    int theta = 0;
    auto* c_rbp = app.add_subcommand("rate-bp", "diagonal rate for threshold growth");
    add_common(c_rbp, false);
    c_rbp->add_option("--theta", theta, "threshold")->required();
    c_rbp->add_option("--alpha", alpha_s)->required();

    std::string boundary_path;
    bool sgrid = false;
    auto* c_supp = app.add_subcommand("support", "support of the rate function");
    add_common(c_supp);
    c_supp->add_option("--alpha", alpha_s, "query point");
    c_supp->add_option("--beta", beta_s, "query point");
    c_supp->add_flag("--grid", sgrid, "emit membership on the grid");
    c_supp->add_option("--grid-step", grid_step, "grid step (default 1/10)");
    c_supp->add_option("--emit-boundary", boundary_path, "write the boundary polyline CSV");

    // euclid
    std::string shape_spec, ns_spec;
    auto* c_euclid = app.add_subcommand("euclid", "Euclidean-limit diagnostics");
    auto* c_series = c_euclid->add_subcommand("series", "scaled gamma sequence");
    c_series->add_option("--shape", shape_spec, "Euclidean shape spec")->required();
    c_series->add_option("--n", ns_spec, "comma-separated scales")->required();
    c_series->add_option("--out", out_path);
    c_series->add_option("--budget", budget);
    auto* c_refs = c_euclid->add_subcommand("refs", "closed-form reference values");
    c_refs->add_option("--shape", shape_spec, "Euclidean shape spec")->required();
    c_refs->add_option("--alpha", alpha_s)->required();
    c_refs->add_option("--beta", beta_s)->required();
    c_refs->add_option("--out", out_path);
    c_refs->add_option("--format", format);

    // Monte Carlo
    std::string p_spec;
    int reps = 1000;
    long long seed = -1;
    long long cell_cap = 100'000'000;
    auto* c_mc = app.add_subcommand("mc-span", "Monte Carlo spanning probability");
    add_common(c_mc);
    c_mc->add_option("--alpha", alpha_s)->required();
    c_mc->add_option("--beta", beta_s)->required();
    c_mc->add_option("--p", p_spec, "decreasing densities, comma separated")->required();
    c_mc->add_option("--reps", reps, "replicates per density")->required();
    c_mc->add_option("--seed", seed, "RNG seed")->required();
    c_mc->add_option("--threads", threads, "worker threads");
    c_mc->add_option("--cell-cap", cell_cap, "resource cap on N*M");

    std::string model = "rost";
    long long sample_n = 0;
    auto* c_sample = app.add_subcommand("sample-young", "random Young diagram samplers");
    c_sample->add_option("--model", model, "rost|vershik")->required();
    c_sample->add_option("--n", sample_n, "cardinality / step count")->required();
    c_sample->add_option("--seed", seed, "RNG seed")->required();
    c_sample->add_option("--emit-boundary", boundary_path, "write scaled boundary CSV");
    c_sample->add_option("--out", out_path);
    c_sample->add_option("--format", format);

    std::string curve = "rost", rmax_s = "2";
    auto* c_dist = app.add_subcommand("shape-dist", "distance to a limit curve");
    c_dist->add_option("--zero", zero_spec, "diagram spec or @file");
    c_dist->add_option("--model", model, "sample instead: rost|vershik");
    c_dist->add_option("--n", sample_n, "sample cardinality");
    c_dist->add_option("--seed", seed, "RNG seed");
    c_dist->add_option("--curve", curve, "rost|vershik")->required();
    c_dist->add_option("--r-max", rmax_s, "right end of the comparison window");
    c_dist->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    Output out{out_path};
    try {
        if (*c_evolve) {
            auto z = parse_zero_spec(zero_spec);
            auto a = load_pointset(in_path);
            auto r = evolve(z, parse_enh(f_spec), parse_enh(g_spec), a);
            if (format == "plain") {
                out.emit(pointset_to_text(r.final));
            } else {
                json j;
                j["final"] = pointset_json(r.final);
                j["steps"] = r.steps;
                j["filled_box"] = r.filled_box;
                out.emit(j.dump() + "\n");
            }
        } else if (*c_span) {
            auto z = parse_zero_spec(zero_spec);
            bool s = spans(z, load_pointset(in_path));
            json j;
            j["spans"] = s;
            out.emit(j.dump() + "\n");
        } else if (*c_tmax) {
            json j;
            j["bound"] = tmax_bound(parse_zero_spec(zero_spec));
            out.emit(j.dump() + "\n");
        } else if (*c_gamma || *c_gthin) {
            auto z = parse_zero_spec(zero_spec);
            GammaResult r = *c_gamma ? gamma(z, {budget}) : gamma_thin(z, {budget});
            json j;
            j["value"] = r.value;
            j["witness"] = pointset_json(r.witness);
            j["bounds"] = r.lower_bounds;
            j["bounds"]["upper"] = r.upper_bound;
            j["nodes"] = r.nodes;
            out.emit(j.dump() + "\n");
        } else if (*c_gbar) {
            auto z = parse_zero_spec(zero_spec);
            auto r = gamma_bar_thin(z, {budget});
            json j;
            j["value"] = r.value;
            j["f"] = r.f.values();
            j["g"] = r.g.values();
            out.emit(j.dump() + "\n");
        } else if (*c_gbounds) {
            auto z = parse_zero_spec(zero_spec);
            json j;
            if (!rect_spec.empty()) {
                auto xpos = rect_spec.find('x');
                if (xpos == std::string::npos) throw invalid_input("rect needs AxB");
                int ra = (int)Rat::parse(rect_spec.substr(0, xpos)).num();
                int rb = (int)Rat::parse(rect_spec.substr(xpos + 1)).num();
                auto y = parse_zero_spec(inner_spec.empty() ? "1" : inner_spec);
                Rat v = line_sequence_bound(z, ra, rb, y, {budget});
                j["line_sequence_exact"] = v.str();
            }
            j["bounds"] = gamma_bounds(z, {budget});
            out.emit(j.dump() + "\n");
        } else if (*c_rho) {
            RateQuery q(Rat::parse(alpha_s), Rat::parse(beta_s));
            auto a = load_pointset(in_path);
            RateResult r = brute ? rho_bruteforce(q, a) : rho(q, a);
            json j;
            j["value"] = r.value.str();
            j["witness_b"] = cells_json(r.witness_b);
            out.emit(j.dump() + "\n");
        } else if (*c_rate) {
            auto z = parse_zero_spec(zero_spec);
            if (enhanced) {
                RateQuery q(Rat::parse(alpha_s), Rat::parse(beta_s));
                auto r = enhancement_rate(z, q, {budget});
                json j;
                j["value"] = r.value.str();
                j["witness"] = cells_json(r.witness_a);
                j["f"] = r.f.values();
                j["g"] = r.g.values();
                out.emit(j.dump() + "\n");
            } else if (grid) {
                Rat step = Rat::parse(grid_step);
                std::ostringstream csv;
                csv << "alpha,beta,value\n";
                bool rect = !z.empty() &&
                            z.rows() == std::vector<int>((size_t)z.height(), z.width());
                RateSearch* rs = rect ? nullptr : new RateSearch(z, pad, max_size, {budget});
                for (Rat a(0); a <= Rat(1); a += step) {
                    for (Rat b(0); b <= Rat(1); b += step) {
                        Rat v;
                        if (rect && a < Rat(1) && b < Rat(1)) {
                            v = rate_rect_closed(z.width(), z.height(), RateQuery(a, b));
                        } else if (rect) {
                            v = Rat(0);  // rate vanishes on the far edges
                        } else {
                            v = rs->query(RateQuery(a, b)).value;
                        }
                        csv << a.str() << "," << b.str() << "," << v.str() << "\n";
                    }
                }
                delete rs;
                out.emit(csv.str());
            } else {
                RateQuery q(Rat::parse(alpha_s), Rat::parse(beta_s));
                RateSearch rs(z, pad, max_size, {budget});
                RateResult r = rs.query(q);
                json j;
                j["value"] = r.value.str();
                j["exact"] = r.exact;
                j["complete"] = r.complete;
                j["witness_a"] = pointset_json(r.witness_a);
                j["witness_b"] = cells_json(r.witness_b);
                if (bounds_k >= 0) {
                    json jb;
                    for (const auto& [name, v] : rate_bounds(z, q, bounds_k, {budget}))
                        jb[name] = v.str();
                    j["bounds"] = jb;
                }
                out.emit(j.dump() + "\n");
                if (!r.complete) return 3;
            }
        } else if (*c_rrect) {
            RateQuery q(Rat::parse(alpha_s), Rat::parse(beta_s));
            json j;
            if (method == "closed" || method == "both")
                j["value"] = rate_rect_closed(rr_a, rr_b, q).str();
            if (method == "recursion")
                j["value"] = rate_rect_recursion(rr_a, rr_b, q).str();
            if (method == "both") {
                j["recursion"] = rate_rect_recursion(rr_a, rr_b, q).str();
                j["agree"] = j["value"] == j["recursion"];
            }
            out.emit(j.dump() + "\n");
        } else if (*c_rbp) {
            json j;
            j["value"] = rate_bootstrap_diag(theta, Rat::parse(alpha_s)).str();
            out.emit(j.dump() + "\n");
        } else if (*c_supp) {
            auto z = parse_zero_spec(zero_spec);
            SupportRegion region(z);
            if (!boundary_path.empty()) {
                std::ostringstream csv;
                csv << "alpha,beta\n";
                for (const auto& [a, b] : region.boundary_polyline())
                    csv << a.str() << "," << b.str() << "\n";
                write_file(boundary_path, csv.str());
            }
            if (sgrid) {
                Rat step = Rat::parse(grid_step);
                std::ostringstream csv;
                csv << "alpha,beta,inside\n";
                for (Rat a(0); a <= Rat(1); a += step)
                    for (Rat b(0); b <= Rat(1); b += step)
                        csv << a.str() << "," << b.str() << ","
                            << (region.contains(RateQuery(a, b)) ? 1 : 0) << "\n";
                out.emit(csv.str());
            } else {
                RateQuery q(Rat::parse(alpha_s), Rat::parse(beta_s));
                auto pos = region.classify(q);
                json j;
                j["inside"] = region.contains(q);
                j["position"] = pos == SupportRegion::Position::interior   ? "interior"
                                : pos == SupportRegion::Position::boundary ? "boundary"
                                                                           : "outside";
                out.emit(j.dump() + "\n");
            }
        } else if (*c_series) {
            auto e = parse_euclid_spec(shape_spec);
            std::vector<int> ns;
            std::istringstream in(ns_spec);
            std::string tok;
            while (std::getline(in, tok, ',')) ns.push_back((int)Rat::parse(tok).num());
            auto series = scaled_gamma_series(e, ns, {budget});
            std::ostringstream csv;
            csv << "n,value,reference\n";
            for (const auto& entry : series.entries) {
                csv << entry.n << "," << entry.scaled.str() << ",";
                if (series.reference) csv << series.reference->str();
                csv << "\n";
            }
            out.emit(csv.str());
        } else if (*c_refs) {
            auto e = parse_euclid_spec(shape_spec);
            RateQuery q(Rat::parse(alpha_s), Rat::parse(beta_s));
            auto refs = reference_values(e, q);
            if (format == "csv") {
                std::ostringstream csv;
                csv << "name,value,exact\n";
                for (const auto& r : refs) {
                    csv << r.name << "," << fmt_double(r.value) << ",";
                    if (r.exact) csv << r.exact->str();
                    csv << "\n";
                }
                out.emit(csv.str());
            } else {
                json j;
                for (const auto& r : refs) {
                    if (r.exact)
                        j[r.name] = r.exact->str();
                    else
                        j[r.name] = r.value;
                }
                out.emit(j.dump() + "\n");
            }
        } else if (*c_mc) {
            McConfig cfg;
            cfg.z = parse_zero_spec(zero_spec);
            cfg.alpha = Rat::parse(alpha_s);
            cfg.beta = Rat::parse(beta_s);
            std::istringstream in(p_spec);
            std::string tok;
            while (std::getline(in, tok, ',')) cfg.p_list.push_back(std::stod(tok));
            cfg.replicates = reps;
            cfg.seed = (uint64_t)seed;
            cfg.cell_cap = cell_cap;
            cfg.threads = threads;
            McEstimate est = span_probability(cfg);
            std::ostringstream csv;
            csv << "p,N,M,successes,replicates,phat,wilson_lo,wilson_hi\n";
            for (const auto& r : est.rows)
                csv << fmt_double(r.p) << "," << r.n << "," << r.m << "," << r.successes
                    << "," << r.replicates << "," << fmt_double(r.phat) << ","
                    << fmt_double(r.wilson_lo) << "," << fmt_double(r.wilson_hi) << "\n";
            if (est.slope_ok)
                csv << "# slope " << fmt_double(est.slope) << " stderr "
                    << fmt_double(est.slope_stderr) << "\n";
            out.emit(csv.str());
        } else if (*c_sample) {
            YoungDiagram y = model == "rost"
                                 ? rost_sample(sample_n, (uint64_t)seed)
                                 : vershik_sample(sample_n, (uint64_t)seed);
            if (!boundary_path.empty()) {
                double scale = std::sqrt((double)std::max<long long>(y.cardinality(), 1));
                LimitCurve lc = model == "rost" ? LimitCurve::rost : LimitCurve::vershik;
                std::ostringstream csv;
                csv << "x,height,curve\n";
                const auto& rows = y.rows();
                for (long long j = 1; j <= (long long)y.width(); ++j) {
                    long long h =
                        std::lower_bound(rows.begin(), rows.end(), j,
                                         [](int len, long long jj) { return len >= jj; }) -
                        rows.begin();
                    double x = (double)j / scale;
                    csv << fmt_double(x) << "," << fmt_double((double)h / scale) << ","
                        << fmt_double(limit_curve_height(lc, x)) << "\n";
                }
                write_file(boundary_path, csv.str());
            }
            if (format == "plain")
                out.emit(y.str() + "\n");
            else
                out.emit(diagram_to_json(y) + "\n");
        } else if (*c_dist) {
            YoungDiagram y;
            if (!zero_spec.empty()) {
                y = parse_zero_spec(zero_spec);
            } else {
                if (seed < 0) throw invalid_input("sampling requires --seed");
                y = model == "rost" ? rost_sample(sample_n, (uint64_t)seed)
                                    : vershik_sample(sample_n, (uint64_t)seed);
            }
            LimitCurve lc = curve == "rost" ? LimitCurve::rost : LimitCurve::vershik;
            double d = shape_distance(y, lc, Rat::parse(rmax_s).to_double());
            json j;
            j["distance"] = d;
            j["cells"] = y.cardinality();
            out.emit(j.dump() + "\n");
        }
    } catch (const budget_exceeded& e) {
        json j;
        j["error"] = e.what();
        if (e.best_upper >= 0) {
            j["best_lower"] = e.best_lower;
            j["best_upper"] = e.best_upper;
        }
        std::cerr << j.dump() << "\n";
        return 3;
    } catch (const resource_limit& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return 2;
    }
    return 0;
}
