// Command-line front end.  Every subcommand reads a .problem file (see
// data/ for examples) and prints a text or JSON report.
//
// Exit codes: 0 success, 2 parse error, 3 budget exceeded, 4 precondition
// violated, 5 verification failed (an invariance check came out unequal).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "bilip/problem.hpp"
#include "bilip/sampler.hpp"

using namespace bilip;
using nlohmann::json;

namespace {

struct Options {
    std::string order = "grevlex";
    std::uint64_t seed = 1;
    long max_steps = 1'000'000;
    long timeout_seconds = 600;
    std::string format = "text";
    std::vector<long> scales = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
    int pairs = 200;

    Budget budget() const {
        Budget b;
        b.max_steps = max_steps;
        b.timeout_seconds = static_cast<double>(timeout_seconds);
        return b;
    }
    MonomialOrder monomial_order() const {
        return order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    }
};

void emit(const Options& opt, const std::string& text, const json& j) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

json ideal_json(const Ideal& I) {
    json j;
    j["vars"] = I.ring->variables();
    j["generators"] = json::array();
    for (const auto& g : I.generators) j["generators"].push_back(g.to_string());
    return j;
}

std::string ideal_text(const Ideal& I) {
    std::ostringstream os;
    for (const auto& g : I.generators) os << g.to_string() << "\n";
    if (I.generators.empty()) os << "0\n";
    std::string s = os.str();
    s.pop_back();
    return s;
}

AffinePoint require_point(const ProblemFile& pf) {
    if (!pf.point) throw PreconditionError("this subcommand needs a point: section");
    return *pf.point;
}

AlgebraicMap require_map(const ProblemFile& pf) {
    if (!pf.map) throw PreconditionError("this subcommand needs an ambient map: section");
    return *pf.map;
}

Parametrization require_param(const ProblemFile& pf) {
    if (!pf.parametrization)
        throw PreconditionError("this subcommand needs a parametrization (params + map:)");
    return *pf.parametrization;
}

LinearProjection require_matrix(const ProblemFile& pf) {
    if (!pf.matrix) throw PreconditionError("this subcommand needs a matrix: section");
    return *pf.matrix;
}

std::string matrix_text(const LinearProjection& M) {
    std::ostringstream os;
    for (std::size_t i = 0; i < M.rows.size(); ++i) {
        for (std::size_t j = 0; j < M.rows[i].size(); ++j)
            os << (j ? " " : "") << to_string(M.rows[i][j]);
        if (i + 1 < M.rows.size()) os << "\n";
    }
    return os.str();
}

json matrix_json(const LinearProjection& M) {
    json rows = json::array();
    for (const auto& r : M.rows) {
        json row = json::array();
        for (const auto& e : r) row.push_back(to_string(e));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bi-Lipschitz certification toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--order", opt.order, "term order for gb/nf")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    app.add_option("--seed", opt.seed, "RNG seed for sampling and searches");
    app.add_option("--max-steps", opt.max_steps, "reduction-step budget");
    app.add_option("--timeout-seconds", opt.timeout_seconds, "wall-clock budget");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--scales", opt.scales, "sampling box half-widths")->delimiter(',');
    app.add_option("--pairs", opt.pairs, "sampled parameter pairs per scale");
    // BILIP_THREADS caps internal parallelism; the current implementation is
    // sequential, so any value is accepted and acts as a cap of 1.
    (void)std::getenv("BILIP_THREADS");

    std::string file, file2, poly_str, by_str;
    std::vector<std::string> drop;
    int target = 1, attempts = 20, vr = 1, vd = 3;
    long cloud_scale = 16;

    auto add_file = [&](CLI::App* s) { s->add_option("file", file, "problem file")->required(); };

    add_file(app.add_subcommand("gb", "reduced Groebner basis of the ideal"));
    auto* nf = app.add_subcommand("nf", "normal form of a polynomial modulo the ideal");
    add_file(nf);
    nf->add_option("--poly", poly_str, "polynomial in the ambient variables")->required();
    auto* elim = app.add_subcommand("eliminate", "eliminate the listed variables");
    add_file(elim);
    elim->add_option("--drop", drop, "variables to eliminate")->delimiter(',')->required();
    add_file(app.add_subcommand("implicitize", "ideal of the parametrized set"));
    auto* sat = app.add_subcommand("saturate", "saturate the ideal by a polynomial");
    add_file(sat);
    sat->add_option("--by", by_str, "polynomial to saturate by")->required();
    auto* inter = app.add_subcommand("intersect", "intersect the varieties of two files");
    add_file(inter);
    inter->add_option("file2", file2, "second problem file")->required();
    add_file(app.add_subcommand("dim", "dimension of the variety"));
    add_file(app.add_subcommand("degree", "degree of the variety"));
    add_file(app.add_subcommand("tangent-cone", "tangent cone at the point"));
    add_file(app.add_subcommand("mult", "multiplicity at the point"));
    add_file(app.add_subcommand("tangent-dim", "Zariski tangent dimension at the point"));
    add_file(app.add_subcommand("secant", "secant-direction cone"));
    add_file(app.add_subcommand("certify-projection", "certify the matrix as bi-Lipschitz"));
    add_file(app.add_subcommand("graph", "ideal of the graph of the map"));
    add_file(app.add_subcommand("verify-degree", "degree invariance pipeline"));
    add_file(app.add_subcommand("verify-mult", "multiplicity invariance pipeline"));
    auto* cs = app.add_subcommand("center-search", "search for a certified projection");
    add_file(cs);
    cs->add_option("--target", target, "target dimension")->required();
    cs->add_option("--attempts", attempts, "random draws before giving up");
    auto* ver = app.add_subcommand("veronese", "toric ideal of a Veronese cone");
    ver->add_option("--r", vr, "projective source dimension")->required();
    ver->add_option("--d", vd, "embedding degree")->required();
    auto* np = app.add_subcommand("normality-proxy", "tangent-dimension drop report");
    np->add_option("--r", vr, "projective source dimension")->required();
    np->add_option("--d", vd, "embedding degree")->required();
    np->add_option("--target", target, "projection target dimension")->required();
    np->add_option("--attempts", attempts, "center-search attempts");
    auto* dist = app.add_subcommand("distortion", "empirical two-sided distortion");
    add_file(dist);
    dist->add_option("file2", file2, "target parametrization")->required();
    auto* cloud = app.add_subcommand("secant-cloud", "sampled normalized secant directions");
    add_file(cloud);
    cloud->add_option("--scale", cloud_scale, "sampling box half-width");

    // Let global flags appear after the subcommand name.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Budget budget = opt.budget();
    const std::string cmd = app.get_subcommands().front()->get_name();

    try {
        ProblemFile pf;
        if (!file.empty()) pf = parse_problem_file(file);

        if (cmd == "gb") {
            GroebnerBasis gb = groebner_basis(pf.variety_ideal(budget), opt.monomial_order(), budget);
            Ideal out(pf.variety_ideal(budget).ring, gb.elements);
            emit(opt, ideal_text(out), ideal_json(out));
        } else if (cmd == "nf") {
            Ideal I = pf.variety_ideal(budget);
            Polynomial f = parse_polynomial(poly_str, I.ring);
            GroebnerBasis gb = groebner_basis(I, opt.monomial_order(), budget);
            BudgetGuard guard(budget);
            Polynomial r = normal_form(f, gb.elements, gb.order, &guard);
            emit(opt, r.to_string(), json{{"normal_form", r.to_string()}});
        } else if (cmd == "eliminate") {
            Ideal E = eliminate(pf.variety_ideal(budget),
                                std::set<std::string>(drop.begin(), drop.end()), budget);
            emit(opt, ideal_text(E), ideal_json(E));
        } else if (cmd == "implicitize") {
            Ideal I = implicitize(require_param(pf), budget);
            emit(opt, ideal_text(I), ideal_json(I));
        } else if (cmd == "saturate") {
            Ideal I = pf.variety_ideal(budget);
            Ideal S = saturate(I, parse_polynomial(by_str, I.ring), budget);
            emit(opt, ideal_text(S), ideal_json(S));
        } else if (cmd == "intersect") {
            Ideal A = pf.variety_ideal(budget);
            Ideal B = transport(parse_problem_file(file2).variety_ideal(budget), A.ring);
            Ideal I = intersect(A, B, budget);
            emit(opt, ideal_text(I), ideal_json(I));
        } else if (cmd == "dim") {
            int d = dimension(pf.variety_ideal(budget), budget);
            emit(opt, std::to_string(d), json{{"dimension", d}});
        } else if (cmd == "degree") {
            Integer d = degree(pf.variety_ideal(budget), budget);
            emit(opt, d.get_str(), json{{"degree", d.get_str()}});
        } else if (cmd == "tangent-cone") {
            Ideal C = tangent_cone(pf.variety_ideal(budget), require_point(pf), budget);
            emit(opt, ideal_text(C), ideal_json(C));
        } else if (cmd == "mult") {
            Integer m = multiplicity(pf.variety_ideal(budget), require_point(pf), budget);
            emit(opt, m.get_str(), json{{"multiplicity", m.get_str()}});
        } else if (cmd == "tangent-dim") {
            int d = zariski_tangent_dim(pf.variety_ideal(budget), require_point(pf), budget);
            emit(opt, std::to_string(d), json{{"tangent_dim", d}});
        } else if (cmd == "secant") {
            SecantCone sc = pf.parametrization
                                ? secant_cone_parametric(*pf.parametrization, budget)
                                : secant_cone(pf.variety_ideal(budget), budget);
            emit(opt, ideal_text(sc.ideal), ideal_json(sc.ideal));
        } else if (cmd == "certify-projection") {
            Certification c = certify_projection(pf.variety_ideal(budget), require_matrix(pf), budget);
            bool ok = c == Certification::BiLipschitz;
            emit(opt, ok ? "BiLipschitz" : "NotBiLipschitz", json{{"bi_lipschitz", ok}});
        } else if (cmd == "graph") {
            Ideal G = graph_ideal(require_map(pf), budget);
            emit(opt, ideal_text(G), ideal_json(G));
        } else if (cmd == "verify-degree") {
            AlgebraicMap f = require_map(pf);
            Ideal I = pf.variety_ideal(budget);
            f.source = I;
            auto rep = verify_degree_invariance(I, f, pf.parametrization, budget);
            std::ostringstream os;
            os << "deg X=" << rep.deg_X.get_str() << " deg graph=" << rep.deg_graph.get_str()
               << " deg Y=" << rep.deg_Y.get_str() << " certified=" << std::boolalpha
               << rep.certified;
            if (rep.numeric_certificate) os << " (numeric certificate)";
            json j{{"deg_X", rep.deg_X.get_str()},
                   {"deg_graph", rep.deg_graph.get_str()},
                   {"deg_Y", rep.deg_Y.get_str()},
                   {"certified", rep.certified},
                   {"numeric_certificate", rep.numeric_certificate},
                   {"equal", rep.degrees_equal()}};
            emit(opt, os.str(), j);
            if (!rep.degrees_equal()) return 5;
        } else if (cmd == "verify-mult") {
            AlgebraicMap f = require_map(pf);
            Ideal I = pf.variety_ideal(budget);
            f.source = I;
            auto rep = verify_multiplicity_invariance(I, f, require_point(pf), budget);
            std::ostringstream os;
            os << "mult X=" << rep.mult_X.get_str() << " mult graph=" << rep.mult_graph.get_str()
               << " mult Y=" << rep.mult_Y.get_str() << " certified=" << std::boolalpha
               << rep.certified;
            json j{{"mult_X", rep.mult_X.get_str()},
                   {"mult_graph", rep.mult_graph.get_str()},
                   {"mult_Y", rep.mult_Y.get_str()},
                   {"certified", rep.certified},
                   {"equal", rep.values_equal()}};
            emit(opt, os.str(), j);
            if (!rep.values_equal()) return 5;
        } else if (cmd == "center-search") {
            auto res = random_center_search(pf.variety_ideal(budget), target, opt.seed, attempts,
                                            budget);
            if (!res.projection) {
                emit(opt, "inconclusive after " + std::to_string(res.attempts_used) + " attempts",
                     json{{"found", false}, {"attempts", res.attempts_used}});
            } else {
                emit(opt, matrix_text(*res.projection),
                     json{{"found", true},
                          {"attempts", res.attempts_used},
                          {"matrix", matrix_json(*res.projection)}});
            }
        } else if (cmd == "veronese") {
            Ideal I = veronese_cone(vr, vd, budget);
            emit(opt, ideal_text(I), ideal_json(I));
        } else if (cmd == "normality-proxy") {
            auto rep = normality_proxy_report(vr, vd, target, opt.seed, attempts, budget);
            std::ostringstream os;
            os << "cone tangent dim=" << rep.cone_tangent_dim;
            json j{{"cone_tangent_dim", rep.cone_tangent_dim}};
            if (rep.projection) {
                os << " certified projection:\n" << matrix_text(*rep.projection);
                j["matrix"] = matrix_json(*rep.projection);
            } else {
                os << " no certified projection found";
            }
            if (rep.image_tangent_dim) {
                os << "\nimage tangent dim=" << *rep.image_tangent_dim;
                j["image_tangent_dim"] = *rep.image_tangent_dim;
            }
            emit(opt, os.str(), j);
        } else if (cmd == "distortion") {
            Parametrization p = require_param(pf);
            Parametrization q = require_param(parse_problem_file(file2));
            auto rep = distortion(p, q, opt.pairs, opt.scales, opt.seed);
            if (opt.format == "json") {
                json recs = json::array();
                for (const auto& r : rep.records)
                    recs.push_back({{"scale", r.scale},
                                    {"min_ratio", r.min_ratio},
                                    {"max_ratio", r.max_ratio},
                                    {"skipped", r.skipped}});
                std::cout << json{{"records", recs}}.dump(2) << "\n";
            } else {
                std::cout << rep.to_csv();
            }
        } else if (cmd == "secant-cloud") {
            auto cloud_pts = secant_cloud(require_param(pf), opt.pairs, opt.seed, cloud_scale);
            if (opt.format == "json") {
                json rows = json::array();
                for (const auto& u : cloud_pts) {
                    json row = json::array();
                    for (const auto& c : u) row.push_back(to_string(c));
                    rows.push_back(row);
                }
                std::cout << json{{"directions", rows}}.dump(2) << "\n";
            } else {
                for (const auto& u : cloud_pts) {
                    for (std::size_t i = 0; i < u.size(); ++i)
                        std::cout << (i ? " " : "") << to_string(u[i]);
                    std::cout << "\n";
                }
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
