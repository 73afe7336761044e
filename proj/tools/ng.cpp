// ng: command-line front end for the numbers game library.
//
// Subcommands: play, replay, classify, spectral, orbit, reduce, check-poset,
// catalog-list. JSON on stdout; domain errors as JSON on stderr with exit
// code 1; usage errors exit 2.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "numbersgame/numbersgame.hpp"

namespace ng = numbersgame;
using ng::json;

namespace {

struct CommonArgs {
    std::string graph;
    std::string mode = "auto";  // auto | exact | approx
    double ratio = 1.0;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

ng::CatalogGraph load_graph(const CommonArgs& a) {
    ng::CatalogGraph g = [&]() -> ng::CatalogGraph {
        if (std::filesystem::exists(a.graph)) {
            json j = read_json_file(a.graph);
            std::string kind = j.at("kind").get<std::string>();
            if (kind == "gcm") return ng::gcm_from_json(j);
            if (kind == "egcm") return ng::egcm_from_json(j);
            throw std::invalid_argument("kind must be \"gcm\" or \"egcm\"");
        }
        return ng::catalog(a.graph, a.ratio);
    }();
    if (a.mode == "approx" && std::holds_alternative<ng::GcmGraph>(g))
        return ng::to_approx(std::get<ng::GcmGraph>(g));
    if (a.mode == "exact" && std::holds_alternative<ng::EgcmGraph>(g)) {
        const auto& e = std::get<ng::EgcmGraph>(g);
        std::vector<ng::Rational> m;
        for (double v : e.amplitudes()) {
            if (std::rint(v) != v)
                throw std::invalid_argument("graph has non-integer amplitudes; exact mode impossible");
            m.push_back(ng::Rational(static_cast<long>(std::llrint(v))));
        }
        return ng::GcmGraph::validate(e.n(), std::move(m));
    }
    return g;
}

template <class S>
ng::Position<S> parse_position(const std::string& text, int n) {
    if (text == "ones") return ng::Position<S>(n, ng::scalar_traits<S>::one());
    if (text.rfind("omega:", 0) == 0) {
        int i = std::stoi(text.substr(6));
        if (i < 1 || i > n) throw std::invalid_argument("omega index out of range: " + text);
        ng::Position<S> pos(n, ng::scalar_traits<S>::zero());
        pos[i - 1] = ng::scalar_traits<S>::one();
        return pos;
    }
    json j = json::parse(text);
    if constexpr (ng::scalar_traits<S>::exact)
        return ng::rational_position_from_json(j, n);
    else
        return ng::double_position_from_json(j, n);
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok) - 1);
    }
    return out;
}

ng::Policy make_policy(const std::string& spec) {
    if (spec == "lowest") return ng::lowest_policy();
    if (spec.rfind("random:", 0) == 0) return ng::random_policy(std::stoul(spec.substr(7)));
    throw std::invalid_argument("policy must be lowest or random:<seed>");
}

template <class S>
long default_limit(const ng::AmplitudeGraph<S>& g) {
    auto rec = ng::recognize(g);
    if (rec.all_finite) return 10 * ng::longest_length(rec);
    return 10'000;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"numbers game on GCM / E-GCM graphs"};
    app.require_subcommand(1);
    CommonArgs common;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", common.graph, "graph file or catalog id")->required();
        sub->add_option("--mode", common.mode, "exact|approx (default: follow the graph)")
            ->check(CLI::IsMember({"auto", "exact", "approx"}));
        sub->add_option("--ratio", common.ratio, "asymmetry ratio for catalog E-GCM edges");
    };

    std::string position = "ones", policy = "lowest", word, fired, poset_path;
    long limit = -1, cap = ng::kDefaultOrbitCap;
    int threads = 1;
    bool quiet = false, no_certify = false, dump = false, infer = false;

    auto* play = app.add_subcommand("play", "play the game to a terminal position");
    add_common(play);
    play->add_option("--position", position, "JSON array, ones, or omega:<i>");
    play->add_option("--policy", policy, "lowest or random:<seed>");
    play->add_option("--limit", limit, "maximum firings (default 10*l(w0) or 10000)");
    play->add_flag("--no-certify", no_certify, "skip divergence certification");
    play->add_flag("--quiet", quiet, "omit the firing trace");

    auto* replay = app.add_subcommand("replay", "replay a recorded firing sequence");
    add_common(replay);
    replay->add_option("--position", position, "start position");
    replay->add_option("--fired", fired, "comma-separated 1-based node sequence")->required();

    auto* classify = app.add_subcommand("classify", "structural and spectral classification");
    add_common(classify);

    auto* spectral = app.add_subcommand("spectral", "firing-matrix spectral report");
    add_common(spectral);

    auto* orbit = app.add_subcommand("orbit", "reflection orbit of a dominant position");
    add_common(orbit);
    orbit->add_option("--position", position, "strongly dominant seed");
    orbit->add_option("--cap", cap, "abort if the orbit exceeds this many positions");
    orbit->add_option("--threads", threads, "worker threads (results independent of the value)");
    orbit->add_flag("--dump", dump, "include the full position list");

    auto* reduce = app.add_subcommand("reduce", "check whether a word is reduced");
    add_common(reduce);
    reduce->add_option("--word", word, "comma-separated 1-based generator indices")->required();

    auto* check = app.add_subcommand("check-poset", "M-structure check of an edge-colored poset");
    add_common(check);
    check->add_option("--poset", poset_path, "poset JSON file")->required();
    check->add_flag("--infer", infer, "run the finite-type inference with descent");

    auto* list = app.add_subcommand("catalog-list", "list catalog families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            json out = json::array();
            for (const auto& e : ng::catalog_list())
                out.push_back(json{{"id", e.id}, {"mode", e.mode}, {"summary", e.summary}});
            emit(out);
            return 0;
        }
        ng::CatalogGraph graph = load_graph(common);
        auto visit = [&](auto&& fn) { return std::visit(fn, graph); };

        if (play->parsed()) {
            visit([&](const auto& g) {
                using S = typename std::decay_t<decltype(g)>::Scalar;
                ng::PlayOptions opt;
                opt.limit = limit >= 0 ? limit : default_limit(g);
                opt.certify = !no_certify;
                opt.keep_trace = !quiet;
                auto res = ng::play(g, parse_position<S>(position, g.n()), opt, make_policy(policy));
                emit(ng::play_result_to_json(res, !quiet));
            });
        } else if (replay->parsed()) {
            visit([&](const auto& g) {
                using S = typename std::decay_t<decltype(g)>::Scalar;
                auto final_pos = ng::replay(g, parse_position<S>(position, g.n()), parse_index_list(fired));
                emit(json{{"final", ng::position_to_json(final_pos)},
                          {"terminal", ng::is_terminal(g, final_pos)}});
            });
        } else if (classify->parsed()) {
            visit([&](const auto& g) {
                json out = ng::classification_to_json(ng::recognize(g));
                out["spectral"] = ng::spectral_report_to_json(g);
                emit(out);
            });
        } else if (spectral->parsed()) {
            visit([&](const auto& g) { emit(ng::spectral_report_to_json(g)); });
        } else if (orbit->parsed()) {
            visit([&](const auto& g) {
                using S = typename std::decay_t<decltype(g)>::Scalar;
                auto res = ng::orbit(g, parse_position<S>(position, g.n()), cap);
                json out{{"finite", res.finite}};
                if (res.finite) {
                    out["size"] = res.size;
                    out["longest_length"] = res.longest_length;
                    if (dump) {
                        json ps = json::array();
                        for (const auto& p : res.positions) ps.push_back(ng::position_to_json(p));
                        out["positions"] = std::move(ps);
                    }
                }
                emit(out);
            });
        } else if (reduce->parsed()) {
            visit([&](const auto& g) {
                emit(json{{"reduced", ng::is_reduced(g, parse_index_list(word))}});
            });
        } else if (check->parsed()) {
            if (!std::holds_alternative<ng::GcmGraph>(graph))
                throw std::invalid_argument("check-poset requires an integer GCM graph");
            const auto& g = std::get<ng::GcmGraph>(graph);
            auto p = ng::poset_from_json(read_json_file(poset_path));
            json out = ng::structure_report_to_json(ng::check_m_structure(p, g));
            if (infer) {
                auto inf = ng::infer_finite_type(p, g);
                json colors = json::array();
                for (int c : inf.fired_colors) colors.push_back(c + 1);
                out["inference"] = json{{"classification", ng::classification_to_json(inf.classification)},
                                        {"descent_chain", inf.descent_chain},
                                        {"fired_colors", std::move(colors)}};
            }
            emit(out);
        }
        return 0;
    } catch (const ng::Error& e) {
        std::cerr << ng::error_to_json(e.code, e.what()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << ng::error_to_json("Error", e.what()).dump() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
