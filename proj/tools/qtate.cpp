#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qtate/checks.hpp"

using namespace qtate;

namespace {

int emit(const Json& report, const std::string& format, const std::string& out_path) {
    std::string text;
    if (format == "json") {
        text = report.dump(2) + "\n";
    } else {
        std::ostringstream os;
        if (report.contains("criteria")) {
            for (const auto& c : report["criteria"])
                os << (c["status"] == "pass" ? "PASS" : "FAIL") << "  criterion "
                   << c["criterion"].get<int>() << ": " << c["title"].get<std::string>() << "\n";
        } else {
            for (const auto& c : report["checks"])
                os << (c["status"] == "pass" ? "PASS" : c["status"] == "info" ? "INFO" : "FAIL")
                   << "  " << c["name"].get<std::string>() << "\n";
        }
        os << (report["all_pass"].get<bool>() ? "all checks passed" : "FAILURES present") << "\n";
        text = os.str();
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return report["all_pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the Tate-cohomology secondary product for generalized "
                 "quaternion groups, and realizability decisions via matric Massey products"};
    app.require_subcommand(1);

    RunConfig rc;
    std::string field_s = "GF2", format = "json", out_path, matrix_path, kind_s = "m";
    int random_matrix = 0;
    app.add_option("--t", rc.t, "group parameter t (power of 2, 2..max-t)");
    app.add_option("--field", field_s, "coefficient field: GF2 or GF4");
    app.add_option("--window", rc.window, "s-exponent window for cocycle checks");
    app.add_option("--max-degree", rc.max_degree, "degree bound for enumerate-massey");
    app.add_option("--seed", rc.seed, "seed for sampled presentations");
    app.add_option("--max-t", rc.max_t, "upper bound accepted for t");
    app.add_option("--format", format, "output format: json or text");
    app.add_option("--out", out_path, "write the report to this path instead of stdout");

    auto* sub_group = app.add_subcommand("verify-group", "group-algebra identities");
    auto* sub_res = app.add_subcommand("verify-resolution", "d^2 = 0 and exactness");
    auto* sub_hom = app.add_subcommand("verify-homotopies", "chain maps, homotopies, period obstructions");
    auto* sub_f2 = app.add_subcommand("verify-f2", "the 36-pair homotopy table");
    auto* sub_dump = app.add_subcommand("dump-m", "full secondary product and class-of-h tables");
    auto* sub_gamma = app.add_subcommand("check-gamma", "non-triviality certificate for the secondary class");
    sub_gamma->add_option("--kind", kind_s, "representative: m, m', m'' or m~");
    auto* sub_mod = app.add_subcommand("check-module", "realizability decision for a presented module");
    sub_mod->add_option("--matrix", matrix_path, "presentation matrix (JSON: rows, cols, entries)");
    sub_mod->add_option("--random", random_matrix, "use the n-th seeded random presentation instead");
    sub_mod->add_option("--kind", kind_s, "representative: m, m', m'' or m~");
    auto* sub_enum = app.add_subcommand("enumerate-massey", "scalar triples with ab = 0 = bc");
    auto* sub_repro = app.add_subcommand("reproduce-paper", "run the full acceptance suite");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        rc.field = parse_field(field_s);
        if (sub_group->parsed()) return emit(report_json(rc, "verify-group", check_group(rc)), format, out_path);
        if (sub_res->parsed())
            return emit(report_json(rc, "verify-resolution", check_resolution(rc)), format, out_path);
        if (sub_hom->parsed())
            return emit(report_json(rc, "verify-homotopies", check_homotopies(rc)), format, out_path);
        if (sub_f2->parsed()) return emit(report_json(rc, "verify-f2", check_f2_suite(rc)), format, out_path);
        if (sub_dump->parsed()) {
            Json rep = report_json(rc, "dump-m", {});
            rep["tables"] = dump_m_table(rc);
            return emit(rep, format, out_path);
        }
        if (sub_gamma->parsed())
            return emit(report_json(rc, "check-gamma", check_gamma(rc, parse_mkind(kind_s))),
                        format, out_path);
        if (sub_enum->parsed())
            return emit(report_json(rc, "enumerate-massey", check_enumeration(rc)), format, out_path);
        if (sub_mod->parsed()) {
            const Variant var = variant_for_t(rc.t);
            LambdaMatrix A;
            if (!matrix_path.empty()) {
                std::ifstream f(matrix_path);
                if (!f) {
                    std::cerr << "cannot read matrix file: " << matrix_path << "\n";
                    return 2;
                }
                Json j;
                f >> j;
                A = matrix_from_json(var, j);
            } else if (random_matrix > 0) {
                std::mt19937_64 rng(rc.seed);
                for (int k = 0; k < random_matrix; ++k) A = sample_presentation(var, rng);
            } else {
                std::cerr << "check-module needs --matrix <file> or --random <n>\n";
                return 2;
            }
            return emit(report_json(rc, "check-module", check_module(rc, A, parse_mkind(kind_s))),
                        format, out_path);
        }
        if (sub_repro->parsed())
            return emit(acceptance_report_json(run_acceptance_suite()), format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
