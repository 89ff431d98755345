// fpoly: F-polynomials of classical types from weighted path families,
// with a representation-theoretic cross-check.

#include <fpoly/engine.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

fpoly::CoxeterWord parse_coxeter(const std::string& csv) {
    fpoly::CoxeterWord c;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad coxeter entry: " + item);
        c.entries.push_back(v);
    }
    return c;
}

struct Options {
    std::string type = "A";
    int rank = 0;
    std::string coxeter;
    int k = 1;
    int m = 0;
    std::string format = "text";
    std::string method = "paths";
    std::string output;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--type", opt.type, "Lie type: A, B, C or D")->required();
    cmd->add_option("--rank", opt.rank, "rank n")->required();
    cmd->add_option("--coxeter", opt.coxeter,
                    "Coxeter word i1,...,in (a permutation of 1..n)")
        ->required();
}

int run_compute(const Options& opt) {
    fpoly::FRequest req{{fpoly::family_from_char(opt.type.at(0)), opt.rank},
                        parse_coxeter(opt.coxeter),
                        opt.k,
                        opt.m,
                        fpoly::method_from_str(opt.method)};
    fpoly::FResult res = fpoly::f_polynomial(req);
    if (opt.format == "json")
        std::cout << res.polynomial.to_json().dump() << "\n";
    else
        std::cout << res.polynomial.str() << "\n";
    return 0;
}

int run_table(const Options& opt) {
    fpoly::LieType type{fpoly::family_from_char(opt.type.at(0)), opt.rank};
    auto results =
        fpoly::f_table(type, parse_coxeter(opt.coxeter), fpoly::method_from_str(opt.method));
    if (opt.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : results)
            out.push_back({{"k", r.k},
                           {"m", r.m},
                           {"h", r.h},
                           {"label", r.label.letters},
                           {"polynomial", r.polynomial.to_json()}});
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& r : results)
            std::cout << "k=" << r.k << " m=" << r.m << " h=" << r.h << " label="
                      << r.label.str() << ": " << r.polynomial.str() << "\n";
    }
    return 0;
}

int run_crosscheck(const Options& opt) {
    fpoly::LieType type{fpoly::family_from_char(opt.type.at(0)), opt.rank};
    fpoly::CrosscheckReport report = fpoly::crosscheck(type, parse_coxeter(opt.coxeter));
    std::cout << report.str() << "\n";
    return report.ok() ? 0 : 1;
}

int run_export_dot(const Options& opt) {
    fpoly::LieType type{fpoly::family_from_char(opt.type.at(0)), opt.rank};
    type.validate();
    fpoly::CoxeterWord c = parse_coxeter(opt.coxeter);
    fpoly::SchemeVariant variant;
    switch (type.family) {
        case fpoly::Family::A: variant = fpoly::SchemeVariant::AVector; break;
        case fpoly::Family::B:
            variant = opt.k == type.rank ? fpoly::SchemeVariant::BSpin
                                         : fpoly::SchemeVariant::BVector;
            break;
        case fpoly::Family::C: variant = fpoly::SchemeVariant::CVector; break;
        case fpoly::Family::D: variant = fpoly::SchemeVariant::DVector; break;
        default: throw std::invalid_argument("bad type");
    }
    std::string dot = fpoly::export_dot(fpoly::build_network(variant, type.rank, c));
    if (opt.output.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::invalid_argument("cannot open output file: " + opt.output);
        out << dot;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-polynomials of cluster algebras of classical types"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* compute = app.add_subcommand("compute", "one F-polynomial for (k, m)");
    add_common(compute, opt);
    compute->add_option("--k", opt.k, "fundamental index")->required();
    compute->add_option("--m", opt.m, "twist power, 0 <= m <= h(k;c)")->required();
    compute->add_option("--format", opt.format, "text | json");
    compute->add_option("--method", opt.method, "paths | rep | both");

    CLI::App* table = app.add_subcommand("table", "all (k, m) F-polynomials");
    add_common(table, opt);
    table->add_option("--format", opt.format, "text | json");
    table->add_option("--method", opt.method, "paths | rep | both");

    CLI::App* crosscheck =
        app.add_subcommand("crosscheck", "verify both pipelines agree on every (k, m)");
    add_common(crosscheck, opt);

    CLI::App* export_dot = app.add_subcommand("export-dot", "emit the network as DOT");
    add_common(export_dot, opt);
    export_dot->add_option("--k", opt.k,
                           "fundamental index selecting the network variant (type B)");
    export_dot->add_option("--output", opt.output, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*compute) return run_compute(opt);
        if (*table) return run_table(opt);
        if (*crosscheck) return run_crosscheck(opt);
        if (*export_dot) return run_export_dot(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
