// qlc: command-line front end. Exit status 0 iff every check passes, 1 on a failed check,
// 2 on usage or document errors.

#include "koszul/report.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#ifndef KOSZUL_FIXTURE_DIR
#define KOSZUL_FIXTURE_DIR ""
#endif

namespace {

// A path, or the name of a bundled fixture.
std::string resolve_document(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return arg;
    fs::path bundled = fs::path(KOSZUL_FIXTURE_DIR) / (arg + ".json");
    if (!std::string(KOSZUL_FIXTURE_DIR).empty() && fs::exists(bundled)) return bundled.string();
    return arg;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace koszul;
    CLI::App app{"Curved Koszul duality computations for QLC presentations"};
    app.require_subcommand(1);
    std::string out_path;
    bool timing = false, json_stdout = false;
    app.add_option("--out", out_path, "Write the JSON report here");
    app.add_flag("--timing", timing, "Include wall time in the outputs");
    app.add_flag("--json", json_stdout, "Print the JSON report instead of the table");

    RunOptions opt;
    std::string document, method = "koszul", kind = "plus", bounds = "4:0:4";
    int uc_n_max = 4;
    auto doc_arg = [&](CLI::App* sub) {
        sub->add_option("document", document, "Presentation file or bundled fixture name")->required();
    };
    const std::map<std::string, std::string> blurbs{
        {"validate", "Check the presentation conditions"},
        {"split", "Print the homogeneous split (R, ∇, ω)"},
        {"dual", "Build the curved Koszul dual coalgebra"},
        {"axioms", "Check the curved coalgebra axioms"},
        {"koszul-cert", "Koszulness certificate of the quadratic part, with PBW"},
        {"cobar", "Cobar complex and its identities"},
        {"resolve", "Koszul bimodule resolution of F≤N A"},
        {"hh", "Hochschild homology, stable dimensions"},
        {"hc", "Cyclic homology of the dual algebra"},
        {"ft-compare", "Compare R♮, X⁺ and the dual cyclic complex"},
        {"lie", "Curved Lie dual of a commutative presentation"},
        {"uc-compare", "Co-PBW comparison and the Lie resolution"}};
    std::map<std::string, CLI::App*> subs;
    for (const auto& name : command_names()) {
        CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
        doc_arg(sub);
        subs[name] = sub;
    }
    for (const char* name : {"dual", "axioms", "koszul-cert", "cobar", "lie"})
        subs[name]->add_option("--max-weight", opt.max_weight, "Weight bound W")->capture_default_str();
    for (const char* name : {"resolve", "hh", "ft-compare"})
        subs[name]->add_option("--truncate", opt.truncate, "Filtration bound N")->capture_default_str();
    subs["hh"]->add_option("--method", method, "koszul or bar")->check(CLI::IsMember({"koszul", "bar"}))->capture_default_str();
    subs["hh"]->add_option("--max-degree", opt.max_degree, "Highest reported degree")->capture_default_str();
    subs["hc"]->add_option("--kind", kind, "per, plus, minus, dual-per, dual-plus or dual-minus")->capture_default_str();
    subs["hc"]->add_option("--bounds", bounds, "W:nmin:nmax")->capture_default_str();
    subs["hc"]->add_option("--algebra", opt.algebra, "dual or quadratic")->capture_default_str();
    subs["ft-compare"]->add_option("--n-max", opt.n_max, "Highest n")->capture_default_str();
    subs["uc-compare"]->add_option("--n-max", uc_n_max, "Highest weight")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        opt.method = method == "bar" ? HochschildMethod::bar : HochschildMethod::koszul;
        if (command == "hc") {
            try {
                opt.kind = parse_cyclic_kind(kind);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            opt.bounds = parse_bounds(bounds);
        }
        if (command == "uc-compare") opt.n_max = uc_n_max;
        PresentationDocument doc = load_document(resolve_document(document));
        Report rep = run(command, doc, opt);
        if (json_stdout) std::cout << rep.to_json(timing).dump(2) << "\n";
        else std::cout << rep.text(timing);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw UsageError("cannot write " + out_path);
            out << rep.to_json(timing).dump(2) << "\n";
        }
        return rep.all_pass() ? 0 : 1;
    } catch (const DocumentError& e) {
        std::cerr << "qlc: " << document << ": " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "qlc: " << e.what() << "\n";
        return 2;
    }
}
