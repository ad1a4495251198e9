#include "branchlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    using namespace branchlab;
    CLI::App app{"Exact branching of finite-dimensional representations to symmetric subalgebras"};
    app.require_subcommand(1);

    JobSpec job;
    std::string weight, output;
    long bound = 0;
    std::string zeta, nu;

    struct Sub {
        const char* name;
        const char* help;
    };
    const std::vector<Sub> subs{
        {"branch", "decompose V_lambda into k-types"},
        {"verify", "run the identity suite"},
        {"spherical", "test whether the trivial k-type occurs in V_lambda"},
        {"fiber", "enumerate the fiber of a label, or of the label of --weight"},
        {"minimal", "minimal element of the fiber over (zeta, nu)"},
        {"mstructure", "component group and h_m data"},
        {"ps-params", "dual weight and principal-series parameters"},
        {"classify", "real-form classification and structure identities"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--realform,-r", job.realform, "preset name or real-form JSON file")->required();
        sub->add_option("--weight,-w", weight, "highest weight in fundamental coordinates, e.g. 1,1");
        sub->add_option("--bound,-b", bound, "bound on the sum of weight coefficients")->check(CLI::NonNegativeNumber);
        sub->add_option("--zeta", zeta, "signs on I_s, e.g. -1 or \"\"");
        sub->add_option("--nu", nu, "values on the h_m basis, e.g. -2");
        sub->add_option("--method", job.method, "kostant, oracle or both")->check(CLI::IsMember({"kostant", "oracle", "both"}));
        sub->add_option("--output,-o", output, "output file (default: standard output)");
        sub->add_option("--format,-f", job.format, "table or structured")->check(CLI::IsMember({"table", "structured"}));
        sub->callback([&job, name = std::string(s.name)] { job.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (CLI::App* sub : app.get_subcommands()) {
        if (sub->count("--weight")) {
            try {
                job.weight = parse_weight(weight);
            } catch (const Error& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
        }
        if (sub->count("--bound")) job.bound = bound;
        if (sub->count("--zeta")) job.zeta = zeta;
        if (sub->count("--nu")) job.nu = nu;
    }

    JobResult res = run_job(job);
    if (!res.error.empty()) std::cerr << res.error << "\n";
    if (!res.output.empty()) {
        if (output.empty()) {
            std::cout << res.output;
        } else {
            std::ofstream out(output);
            if (!out) {
                std::cerr << "cannot write " << output << "\n";
                return 2;
            }
            out << res.output;
        }
    }
    return res.exit_code;
}
