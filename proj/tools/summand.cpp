// summand: exact decomposition of modules over finite-dimensional algebras.
//
// Exit codes: 0 success, 1 verify-property failure (or internal error),
// 2 usage/parse error, 3 modulus too small, 4 randomized search exhausted.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "summand/decompose.hpp"
#include "summand/errors.hpp"
#include "summand/instance.hpp"
#include "summand/projcover.hpp"
#include "summand/report.hpp"

namespace {

using namespace summand;

struct CommonArgs {
    std::string file;
    std::uint64_t seed = 0;
    bool json = false;
    bool witnesses = false;
};

void emit(const OrderedJson& report, const CommonArgs& args) {
    if (args.json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << render_text(report);
}

const Module& need_module(const Instance& inst, const std::string& name) {
    const Module* m = inst.find_module(name);
    if (!m) throw ParseError("no module named \"" + name + "\" in the instance");
    return *m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Krull-Schmidt decomposition engine for modules over "
                 "finite-dimensional algebras over prime fields"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string module_name, second_name, suite = "all";

    auto add_common = [&](CLI::App* cmd, bool needs_module,
                          bool needs_second = false) {
        cmd->add_option("file", args.file, "JSON instance file")->required();
        if (needs_module)
            cmd->add_option("module", module_name, "module name")->required();
        if (needs_second)
            cmd->add_option("second", second_name, "second module name")
                ->required();
        cmd->add_option("--seed", args.seed, "random seed (default 0)");
        cmd->add_flag("--json", args.json, "machine-readable JSON report");
        cmd->add_flag("--witnesses", args.witnesses,
                      "include witness matrices in the report");
    };

    CLI::App* decompose_cmd = app.add_subcommand(
        "decompose", "decompose a module into indecomposable summands");
    add_common(decompose_cmd, true);

    CLI::App* cover_cmd =
        app.add_subcommand("projcover", "compute a projective cover");
    add_common(cover_cmd, true);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run the property suites against the instance");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--suite", suite,
                           "all | radical | covers | uniqueness | fitting");

    CLI::App* hom_cmd =
        app.add_subcommand("hom", "dimension and basis of Hom(M, N)");
    add_common(hom_cmd, true, true);

    CLI::App* end_cmd =
        app.add_subcommand("end", "endomorphism algebra of a module");
    add_common(end_cmd, true);

    CLI::App* radhom_cmd = app.add_subcommand(
        "radhom", "radical Rad(M, N) inside Hom(M, N)");
    add_common(radhom_cmd, true, true);

    CLI::App* isiso_cmd =
        app.add_subcommand("is-iso", "decide isomorphism of two modules");
    add_common(isiso_cmd, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Instance inst = load_instance(args.file);
        ReportOptions opt{args.seed, args.witnesses};

        if (decompose_cmd->parsed()) {
            const Module& m = need_module(inst, module_name);
            Decomposition dec = krull_schmidt(m, args.seed);
            emit(decompose_report(inst, module_name, dec, opt), args);
        } else if (cover_cmd->parsed()) {
            const Module& m = need_module(inst, module_name);
            CoverResult cover = projective_cover(m, args.seed);
            emit(cover_report(inst, module_name, cover, opt), args);
        } else if (verify_cmd->parsed()) {
            VerifyOutcome outcome = run_verify(inst, suite, args.seed);
            emit(outcome.report, args);
            return outcome.all_pass ? 0 : 1;
        } else if (hom_cmd->parsed()) {
            const Module& m = need_module(inst, module_name);
            const Module& n = need_module(inst, second_name);
            emit(hom_report(inst, module_name, second_name, hom_space(m, n),
                            opt),
                 args);
        } else if (end_cmd->parsed()) {
            const Module& m = need_module(inst, module_name);
            emit(end_report(inst, module_name, end_algebra(m), opt), args);
        } else if (radhom_cmd->parsed()) {
            const Module& m = need_module(inst, module_name);
            const Module& n = need_module(inst, second_name);
            emit(radhom_report(inst, module_name, second_name, rad_hom(m, n),
                               opt),
                 args);
        } else if (isiso_cmd->parsed()) {
            const Module& m = need_module(inst, module_name);
            const Module& n = need_module(inst, second_name);
            emit(isiso_report(inst, module_name, second_name,
                              isomorphism(m, n), opt),
                 args);
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ModulusError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const RetryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
