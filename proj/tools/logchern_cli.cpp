// Command-line surface: the certified vanishing pipeline, ring normal-form
// queries, and the wall/stability tables.

#include "logchern/certify.hpp"
#include "logchern/stability.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--out", out.out_path, "also write the report to this path");
}

void emit(const OutputOptions& opts, const std::string& text, const json& structured) {
    std::string payload = opts.format == "structured" ? structured.dump(2) + "\n" : text;
    std::cout << payload;
    if (!opts.out_path.empty()) {
        std::filesystem::path p(opts.out_path);
        if (p.is_relative()) {
            if (const char* dir = std::getenv("LOGCHERN_OUT_DIR")) p = std::filesystem::path(dir) / p;
        }
        std::ofstream f(p);
        if (!f) throw std::runtime_error("cannot write '" + p.string() + "'");
        f << payload;
    }
}

json stability_report(const std::string& command, json data) {
    return json{{"version", "1"}, {"command", command}, {"data", std::move(data)}};
}

logchern::VerifyOptions load_verify_options(const std::string& rings_dir, int trunc) {
    logchern::VerifyOptions opts;
    opts.truncation = trunc;
    if (!rings_dir.empty()) {
        namespace fs = std::filesystem;
        auto maybe = [&](const char* file) -> std::optional<logchern::RingPresentation> {
            fs::path p = fs::path(rings_dir) / file;
            if (!fs::exists(p)) return std::nullopt;
            return logchern::load_presentation(p.string());
        };
        opts.b = maybe("b.pres");
        opts.btilde = maybe("btilde.pres");
        opts.s1 = maybe("s1.pres");
    }
    return opts;
}

int run_verify(const std::string& target, const std::string& rings_dir, int trunc,
               const OutputOptions& out) {
    logchern::Verifier verifier(load_verify_options(rings_dir, trunc));
    logchern::Report report;
    report.command = "verify " + target;
    if (target == "stages") report.certificates = verifier.verify_stages();
    else if (target == "c7") report.certificates = verifier.verify_c7();
    else if (target == "c8") report.certificates = verifier.verify_c8();
    else report.certificates = verifier.verify_all();
    emit(out, logchern::to_text(report), logchern::to_json(report));
    return report.all_match() ? 0 : 1;
}

const char* bundled_presentation(const std::string& name) {
    if (name == "b") return logchern::bundled::b_presentation;
    if (name == "btilde") return logchern::bundled::btilde_presentation;
    if (name == "s1") return logchern::bundled::s1_presentation;
    throw std::runtime_error("unknown bundled ring '" + name + "' (expected b, btilde or s1)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the log-cotangent Chern vanishing and the"
                 " wall-crossing combinatorics for rank-3 bundles on a nodal curve"};
    app.require_subcommand(1);

    // verify
    std::string target = "all", rings_dir;
    int trunc = 16;
    OutputOptions vout;
    auto* verify = app.add_subcommand("verify", "run the certified pipeline");
    verify->add_option("target", target, "c7, c8, stages or all")
        ->check(CLI::IsMember({"c7", "c8", "stages", "all"}));
    verify->add_option("--trunc", trunc, "working truncation degree (even, >= 2)")
        ->check(CLI::Range(2, 64));
    verify->add_option("--rings", rings_dir,
                       "directory with b.pres/btilde.pres/s1.pres overriding the bundled rings");
    add_output_flags(verify, vout);

    // nf
    std::string pres_path, ring_name = "btilde", poly_text;
    OutputOptions nfout;
    auto* nf = app.add_subcommand("nf", "normal form of a polynomial in a presented ring");
    nf->add_option("--presentation", pres_path, "ring presentation file");
    nf->add_option("--ring", ring_name, "bundled ring: b, btilde or s1");
    nf->add_option("poly", poly_text, "polynomial text")->required();
    add_output_flags(nf, nfout);

    // walls
    int w_rank = 3;
    long long w_chi = 4;
    OutputOptions wout;
    auto* walls = app.add_subcommand("walls", "wall set for the given rank and chi");
    walls->add_option("--rank", w_rank)->required();
    walls->add_option("--chi", w_chi)->required();
    add_output_flags(walls, wout);

    // destab
    int d_rank = 3;
    long long d_chi = 4;
    std::string d_wall = "1/3";
    OutputOptions dout;
    auto* destab = app.add_subcommand("destab", "destabilizing invariants on a wall");
    destab->add_option("--rank", d_rank)->required();
    destab->add_option("--chi", d_chi)->required();
    destab->add_option("--wall", d_wall)->required();
    add_output_flags(destab, dout);

    // transfer
    std::string chain_text;
    OutputOptions tout;
    auto* transfer_cmd = app.add_subcommand("transfer", "transfer dimensions along a chain");
    transfer_cmd->add_option("--chain", chain_text, "e.g. \"r=3: [1,1,0] [1,0,0]\"")->required();
    add_output_flags(transfer_cmd, tout);

    // patterns
    int p_n = 2, p_marked = 1;
    OutputOptions pout;
    auto* patterns = app.add_subcommand("patterns", "destabilizing subsheaf patterns");
    patterns->add_option("--n", p_n)->required();
    patterns->add_option("--marked", p_marked)->required();
    add_output_flags(patterns, pout);

    // dims
    long long genus = 2, genus_to = 0;
    OutputOptions gout;
    auto* dims = app.add_subcommand("dims", "dimension table for a given genus");
    dims->add_option("--genus", genus)->required();
    dims->add_option("--to", genus_to, "also check every genus up to this bound");
    add_output_flags(dims, gout);

    // catalog
    std::string family = "sigma_plus";
    OutputOptions cout_opts;
    auto* catalog = app.add_subcommand("catalog", "flip-locus type catalog");
    catalog->add_option("--family", family)->check(CLI::IsMember({"sigma_plus", "sigma_minus"}));
    add_output_flags(catalog, cout_opts);

    // rings
    std::string export_dir, show_name;
    auto* rings = app.add_subcommand("rings", "bundled ring presentations");
    rings->add_option("--export", export_dir, "write b.pres/btilde.pres/s1.pres here");
    rings->add_option("--show", show_name, "print one bundled presentation");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace logchern;
        namespace st = logchern::stability;

        if (*verify) return run_verify(target, rings_dir, trunc, vout);

        if (*nf) {
            RingPresentation pres = pres_path.empty()
                                        ? parse_presentation(bundled_presentation(ring_name))
                                        : load_presentation(pres_path);
            QuotientRing ring(pres);
            Polynomial result = ring.parse_nf(poly_text);
            emit(nfout, result.to_string() + "\n",
                 stability_report("nf", json{{"input", poly_text}, {"nf", result.to_string()}}));
            return 0;
        }

        if (*walls) {
            auto set = st::lambda_set(w_rank, w_chi);
            auto oracle = st::lambda_oracle(w_rank, w_chi);
            bool agree = set.size() == oracle.size();
            for (std::size_t i = 0; agree && i < set.size(); ++i) agree = set[i].alpha == oracle[i];
            std::ostringstream os;
            json jwalls = json::array();
            os << "walls for rank " << w_rank << ", chi " << w_chi << ":\n";
            for (const auto& w : set) {
                os << "  " << to_string(w.alpha) << "   witness chi0=" << w.chi0
                   << " r0=" << w.r0 << " rdag=" << w.r_dag << "\n";
                jwalls.push_back({{"alpha", to_string(w.alpha)},
                                  {"chi0", w.chi0},
                                  {"r0", w.r0},
                                  {"rdag", w.r_dag}});
            }
            os << (agree ? "oracle scan agrees\n" : "ORACLE DISAGREES\n");
            emit(wout, os.str(),
                 stability_report("walls", json{{"rank", w_rank},
                                                {"chi", w_chi},
                                                {"walls", std::move(jwalls)},
                                                {"oracle_agrees", agree}}));
            return agree ? 0 : 1;
        }

        if (*destab) {
            Rational wall = rational_from_string(d_wall);
            auto triples = st::destab_triples(d_rank, d_chi, wall);
            std::ostringstream os;
            json jt = json::array();
            os << "destabilizing invariants at wall " << to_string(wall) << ":\n";
            for (const auto& t : triples) {
                os << "  (r0=" << t.r0 << ", rdag=" << t.r_dag << ", chi=" << t.chiF << ") -> "
                   << st::to_string(t.side) << "\n";
                jt.push_back({{"r0", t.r0},
                              {"rdag", t.r_dag},
                              {"chi", t.chiF},
                              {"side", st::to_string(t.side)}});
            }
            emit(dout, os.str(),
                 stability_report("destab", json{{"rank", d_rank},
                                                 {"chi", d_chi},
                                                 {"wall", to_string(wall)},
                                                 {"triples", std::move(jt)}}));
            return 0;
        }

        if (*transfer_cmd) {
            st::ChainBundle cb = st::parse_chain(chain_text);
            auto res = st::transfer(cb);
            std::ostringstream os;
            os << cb.to_string() << "\n  W:";
            for (int d : res.dims) os << " " << d;
            os << "\n  transfer " << res.t_forward << ", regular: "
               << (st::is_regular(cb) ? "yes" : "no") << "\n";
            emit(tout, os.str(),
                 stability_report("transfer", json{{"chain", cb.to_string()},
                                                   {"dims", res.dims},
                                                   {"t_forward", res.t_forward},
                                                   {"regular", st::is_regular(cb)}}));
            return 0;
        }

        if (*patterns) {
            auto list = st::enumerate_destab_patterns(p_n, p_marked);
            std::ostringstream os;
            json jp = json::array();
            os << list.size() << " patterns for n=" << p_n << ", marked=q" << p_marked << "\n";
            for (const auto& p : list) {
                os << st::to_string(p);
                json rows = json::array();
                for (const auto& s : p.summands) rows.push_back(st::to_string(s, p.n));
                jp.push_back({{"summands", std::move(rows)}});
            }
            emit(pout, os.str(),
                 stability_report("patterns", json{{"n", p_n},
                                                   {"marked", p_marked},
                                                   {"count", list.size()},
                                                   {"patterns", std::move(jp)}}));
            return 0;
        }

        if (*dims) {
            long long hi = genus_to > 0 ? genus_to : genus;
            std::ostringstream os;
            json jall = json::array();
            for (long long g = genus; g <= hi; ++g) {
                auto table = st::dims_table(g);
                os << "g=" << g << ":";
                json jt;
                for (const auto& [k, v] : table) {
                    os << " " << k << "=" << v;
                    jt[k] = v;
                }
                os << "\n";
                jall.push_back(json{{"genus", g}, {"dims", std::move(jt)}});
            }
            emit(gout, os.str(), stability_report("dims", json{{"tables", std::move(jall)}}));
            return 0;
        }

        if (*catalog) {
            auto cat = st::type_catalog(family == "sigma_plus" ? st::Family::SigmaPlus
                                                               : st::Family::SigmaMinus);
            std::ostringstream os;
            os << family << ": " << cat.entries.size() << " types\n";
            json je = json::array();
            for (const auto& e : cat.entries) {
                os << st::to_string(e);
                je.push_back({{"id", e.id},
                              {"n", e.n},
                              {"marked", e.marked},
                              {"rows", e.rows},
                              {"twists", e.twists},
                              {"reflection_of", e.reflection_of},
                              {"identified_with", e.identified_with}});
            }
            json data{{"family", family}, {"count", cat.entries.size()}, {"entries", std::move(je)}};
            if (family == "sigma_plus") {
                os << "identifications:";
                json ji = json::array();
                for (const auto& [x, y] : cat.identifications) {
                    os << " " << x << "=" << y;
                    ji.push_back({x, y});
                }
                os << "\nintersections: a^b=" << cat.ab_intersection
                   << " a^c=" << cat.ac_intersection << " b^c="
                   << (cat.bc_intersection.empty() ? "(empty)" : cat.bc_intersection) << "\n";
                data["identifications"] = std::move(ji);
                data["ab_intersection"] = cat.ab_intersection;
                data["ac_intersection"] = cat.ac_intersection;
                data["bc_intersection"] = cat.bc_intersection;
            }
            emit(cout_opts, os.str(), stability_report("catalog", std::move(data)));
            return 0;
        }

        if (*rings) {
            if (!export_dir.empty()) {
                namespace fs = std::filesystem;
                fs::create_directories(export_dir);
                auto write = [&](const char* file, const char* text) {
                    std::ofstream f(fs::path(export_dir) / file);
                    f << text;
                };
                write("b.pres", logchern::bundled::b_presentation);
                write("btilde.pres", logchern::bundled::btilde_presentation);
                write("s1.pres", logchern::bundled::s1_presentation);
                std::cout << "wrote b.pres, btilde.pres, s1.pres to " << export_dir << "\n";
            }
            if (!show_name.empty()) std::cout << bundled_presentation(show_name);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
