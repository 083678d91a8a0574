// Command-line front end: build | nerve | vk | certificate | vkf-demo | recheck.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nerverep/nerverep.hpp"

namespace {

using namespace nerverep;

std::string output_path;

void emit(const Json& j)
{
    const std::string text = dump_json(j);
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out)
        throw ParseError("cannot write " + output_path);
    out << text;
}

std::vector<Rational> parse_list(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_rational(item));
    return out;
}

Face parse_face(const std::string& text)
{
    std::vector<VertexId> vs;
    for (const auto& q : parse_list(text)) {
        if (denominator(q) != 1 || q.sign() < 0)
            throw ParseError("vertex ids are nonnegative integers: " + text);
        vs.push_back(static_cast<VertexId>(numerator(q)));
    }
    return Face(vs);
}

int report(const Certificate& cert)
{
    emit(certificate_to_json(cert));
    std::cerr << kind_name(cert);
    if (const auto* r = std::get_if<ObstructionReport>(&cert))
        std::cerr << " (" << (r->certificate.vanishes ? "vanishes" : "nonvanishing") << ")";
    std::cerr << "\n";
    return exit_code_for(cert);
}

ComplexFile subdivided(const SimplicialComplex& k)
{
    const SdComplex sd = barycentric_subdivision(k);
    return ComplexFile{sd.complex, sd.labels()};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Nerves of convex families, barycentric subdivision, and mod-2 Van Kampen obstructions"};
    app.require_subcommand(1);
    app.add_option("-o,--output", output_path, "Write the JSON result here instead of stdout");

    auto* build = app.add_subcommand("build", "Write a complex: skeleton N K | sd FILE | sd2 FILE");
    build->require_subcommand(1);
    int skel_n = 0, skel_k = 0;
    unsigned first_id = 0;
    auto* skeleton = build->add_subcommand("skeleton", "k-skeleton of the n-simplex");
    skeleton->add_option("n", skel_n)->required();
    skeleton->add_option("k", skel_k)->required();
    skeleton->add_option("--first-id", first_id, "Label of the first vertex (default 0)");
    std::string sd_file;
    auto* sd = build->add_subcommand("sd", "Barycentric subdivision with its label table");
    sd->add_option("file", sd_file)->required();
    auto* sd2 = build->add_subcommand("sd2", "Second barycentric subdivision");
    sd2->add_option("file", sd_file)->required();

    std::string family_file, mode = "helly";
    std::size_t cap = default_nerve_cap;
    auto* nerve = app.add_subcommand("nerve", "Nerve of a convex family");
    nerve->add_option("family", family_file)->required();
    nerve->add_option("--mode", mode, "helly (default) or exhaustive")->check(CLI::IsMember({"helly", "exhaustive"}));
    nerve->add_option("--cap", cap, "Maximum number of bodies");

    std::string complex_file, params_text;
    int d = 1;
    auto* vk = app.add_subcommand("vk", "Mod-2 Van Kampen obstruction in R^{2d}");
    vk->add_option("complex", complex_file)->required();
    vk->add_option("d", d)->required();
    vk->add_option("--params", params_text, "Moment-curve parameters t1,t2,... (default 1..n)");

    std::string inject_face, inject_point, inject_stage = "lemma";
    auto* cert = app.add_subcommand("certificate", "Check a claimed representation of sd L in R^{2d}");
    cert->add_option("family", family_file)->required();
    cert->add_option("complex", complex_file)->required();
    cert->add_option("d", d)->required();
    cert->add_option("--inject-face", inject_face, "Test hook: face of sd L whose witness is replaced");
    cert->add_option("--inject-point", inject_point, "Test hook: replacement witness p1,p2,...");
    cert->add_option("--inject-stage", inject_stage, "witness | lemma (default)")
        ->check(CLI::IsMember({"witness", "lemma"}));

    auto* demo = app.add_subcommand("vkf-demo", "Crossing pair of disjoint d-faces of the (2d+2)-simplex");
    demo->add_option("d", d)->required();
    demo->add_option("--params", params_text, "Moment-curve parameters (default 1..2d+3)");

    std::string cert_file;
    auto* recheck_cmd = app.add_subcommand("recheck", "Re-verify a certificate file");
    recheck_cmd->add_option("file", cert_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? exit_code::ok : exit_code::parse_error;
    }

    try {
        if (*skeleton) {
            emit(complex_to_json(skeleton_complex(skel_n, skel_k, first_id)));
            return exit_code::ok;
        }
        if (*sd) {
            const ComplexFile in = complex_file_from_json(read_json_file(sd_file));
            emit(complex_file_to_json(subdivided(in.complex)));
            return exit_code::ok;
        }
        if (*sd2) {
            const ComplexFile in = complex_file_from_json(read_json_file(sd_file));
            const ComplexFile once = subdivided(in.complex);
            Json out = complex_file_to_json(subdivided(once.complex));
            out["inner_labels"] = complex_file_to_json(once).at("labels");
            emit(out);
            return exit_code::ok;
        }
        if (*nerve) {
            const ConvexFamily family = family_from_json(read_json_file(family_file));
            emit(complex_to_json(mode == "exhaustive" ? nerve_exhaustive(family, cap) : nerve_helly(family, cap)));
            return exit_code::ok;
        }
        if (*vk) {
            const SimplicialComplex k = complex_from_json(read_json_file(complex_file));
            const auto params = params_text.empty() ? default_params(k.vertices().size()) : parse_list(params_text);
            return report(obstruction_report(k, d, moment_curve_placement(k, d, params)));
        }
        if (*cert) {
            const ConvexFamily family = family_from_json(read_json_file(family_file));
            const SimplicialComplex l = complex_from_json(read_json_file(complex_file));
            PipelineOptions opts;
            if (!inject_face.empty() || !inject_point.empty()) {
                if (inject_face.empty() || inject_point.empty())
                    throw ParseError("--inject-face and --inject-point go together");
                opts.injection = WitnessInjection{parse_face(inject_face), parse_list(inject_point),
                                                  inject_stage == "witness"
                                                      ? WitnessInjection::Stage::before_membership_check
                                                      : WitnessInjection::Stage::after_membership_check};
            }
            return report(run_certificate_pipeline(family, l, d, opts));
        }
        if (*demo) {
            std::optional<std::vector<Rational>> params;
            if (!params_text.empty())
                params = parse_list(params_text);
            return report(vkf_demo(d, params));
        }
        if (*recheck_cmd) {
            const RecheckResult r = recheck(read_json_file(cert_file));
            std::cout << (r.ok ? "VERIFIED: " : "REJECTED: ") << r.message << "\n";
            return r.ok ? exit_code::ok : exit_code::mismatch;
        }
    } catch (const GenericityError& e) {
        std::cerr << "genericity failure: " << e.what() << "\n"
                  << "rerun with different --params (distinct rationals, e.g. perturbed values)\n";
        return exit_code::genericity;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << "\n";
        return exit_code::parse_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::parse_error;
    }
    return exit_code::parse_error;
}
