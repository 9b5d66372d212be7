#include "crystalpoly/affine_a11.hpp"
#include "crystalpoly/explore.hpp"
#include "crystalpoly/json_io.hpp"
#include "crystalpoly/type_a.hpp"
#include "crystalpoly/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace crystalpoly;

struct TypedWeight {
    CartanKind kind;
    Weight lambda;
};

TypedWeight parse_typed(const std::string& type, const std::vector<Int>& coeffs,
                        int rank) {
    TypedWeight tw;
    tw.lambda = Weight{coeffs};
    if (type == "a") {
        tw.kind = CartanKind::FiniteA;
        if (rank != 0 && rank != static_cast<int>(coeffs.size()))
            throw CLI::ValidationError("--rank disagrees with --lambda length");
        LambdaA check(tw.lambda);  // validates sign pattern
    } else if (type == "a1affine") {
        tw.kind = CartanKind::AffineA1;
        if (rank != 0 && rank != 2)
            throw CLI::ValidationError("--rank must be 2 for a1affine");
        LambdaAffine check(tw.lambda);  // validates level constraints
    } else {
        throw CLI::ValidationError("--type must be a or a1affine");
    }
    return tw;
}

IotaSequence iota_for(const TypedWeight& tw) {
    return tw.kind == CartanKind::FiniteA
               ? IotaSequence::finite_a(static_cast<int>(tw.lambda.coeffs.size()),
                                        IotaSide::Both)
               : IotaSequence::affine_a1(IotaSide::Both);
}

void write_output(const std::string& payload, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_file);
    out << payload;
}

int run_explore(const TypedWeight& tw, Index depth, const std::string& format,
                const std::string& out_file) {
    const IotaSequence iota = iota_for(tw);
    const FinSuppVector seed{tw.lambda};
    const CrystalGraph g = bfs_component(seed, iota, depth);
    write_output(format == "dot" ? graph_to_dot(g) : graph_to_json(g), out_file);
    if (g.truncated) {
        std::cerr << "warning: vertex budget hit; graph is partial\n";
        return 3;
    }
    return 0;
}

int run_hwv(const TypedWeight& tw) {
    FinSuppVector v = tw.kind == CartanKind::FiniteA
                          ? hwv_a(LambdaA(tw.lambda),
                                  static_cast<Index>(tw.lambda.coeffs.size()))
                          : hwv_affine(LambdaAffine(tw.lambda),
                                       LambdaAffine(tw.lambda).c_cutoff());
    const IotaSequence iota = iota_for(tw);
    const bool ok = is_highest_weight(v, iota);
    const Weight wt = weight_of(v, iota);
    std::cout << "{\"vector\": " << vector_to_json(v)
              << ", \"is_highest_weight\": " << (ok ? "true" : "false")
              << ", \"weight\": [";
    for (size_t i = 0; i < wt.coeffs.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << wt.coeffs[i];
    }
    std::cout << "]}\n";
    return ok ? 0 : 1;
}

int run_forms(const TypedWeight& tw, Index window, Index gen_depth,
              const std::string& family, const std::string& out_file) {
    const IotaSequence iota = iota_for(tw);
    const Index sub_window = window + gen_depth * iota.period();
    std::vector<FormSet> sets;
    if (family == "xi") {
        if (tw.kind == CartanKind::FiniteA) {
            std::vector<LinearForm> pos, neg;
            for (Index j = 1; j <= window; ++j) {
                pos.push_back(LinearForm::coordinate(j));
                neg.push_back(LinearForm::coordinate(-j, -1));
            }
            sets.push_back(FormSet{"XiPlus", window, gen_depth,
                                   s_bar_closure(pos, iota, tw.lambda, sub_window,
                                                 static_cast<int>(gen_depth), 1)});
            sets.push_back(FormSet{"XiMinus", window, gen_depth,
                                   s_bar_closure(neg, iota, tw.lambda, sub_window,
                                                 static_cast<int>(gen_depth), -1)});
        } else {
            sets.push_back(FormSet{
                "XiAffineRestricted", window, gen_depth,
                xi_family(iota, tw.lambda, window, static_cast<int>(gen_depth), 2)});
        }
    } else if (family == "xiprime") {
        if (tw.kind == CartanKind::FiniteA) {
            sets.push_back(
                FormSet{"XiPrimeA", window, gen_depth,
                        xi_prime_family_a(LambdaA(tw.lambda), window, gen_depth)});
        } else {
            sets.push_back(FormSet{"XiPrimeAffine", window, gen_depth,
                                   xi_prime_family_affine(LambdaAffine(tw.lambda),
                                                          window, gen_depth)});
        }
    } else {
        throw CLI::ValidationError("--family must be xi or xiprime");
    }
    write_output(form_sets_to_json(sets), out_file);
    return 0;
}

int run_oracle(const TypedWeight& tw, Index depth, Index window, Index gen_depth) {
    OracleParams params;
    params.kind = tw.kind;
    params.lambda = tw.lambda;
    params.bfs_depth = depth;
    params.window = window;
    params.gen_depth = gen_depth;
    const OracleReport report = oracle_compare(params);
    std::cout << oracle_report_to_json(report) << "\n";
    return report.verdict == OracleVerdict::Equal ? 0 : 1;
}

int run_verify(const std::string& suite) {
    const SuiteResult result = run_suite(suite);
    std::cout << result.suite << ": " << (result.ok ? "ok" : "FAIL") << " ("
              << result.checks << " checks)";
    if (!result.detail.empty()) std::cout << " " << result.detail;
    std::cout << "\n";
    return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice model of tensor-product crystals with "
                 "polyhedral inequality generation"};
    app.require_subcommand(1);

    std::string type = "a";
    int rank = 0;
    std::vector<Int> lambda;
    Index depth = 1;
    Index window = 6;
    Index gen_depth = 4;
    std::string format = "json";
    std::string out_file;
    std::string family = "xi";
    std::string suite;
    std::string grid = "default";

    auto add_typed = [&](CLI::App* cmd, bool need_lambda = true) {
        cmd->add_option("--type", type, "a or a1affine")->required();
        cmd->add_option("--rank", rank, "rank (optional; inferred from --lambda)");
        auto* opt = cmd->add_option("--lambda", lambda,
                                    "weight coefficients c1,c2,...");
        opt->delimiter(',');
        if (need_lambda) opt->required();
    };

    auto* explore = app.add_subcommand("explore", "breadth-first component search");
    add_typed(explore);
    explore->add_option("--depth", depth, "search radius")->required();
    explore->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    explore->add_option("--out", out_file, "output file (default stdout)");

    auto* hwv = app.add_subcommand("hwv", "highest-weight vector and check");
    add_typed(hwv);

    auto* forms = app.add_subcommand("forms", "generate inequality families");
    add_typed(forms);
    forms->add_option("--window", window, "seed index window")->required();
    forms->add_option("--gen-depth", gen_depth, "rewrite chain cap")->required();
    forms->add_option("--family", family, "xi or xiprime")
        ->check(CLI::IsMember({"xi", "xiprime"}));
    forms->add_option("--out", out_file, "output file (default stdout)");

    auto* oracle = app.add_subcommand(
        "oracle", "compare component against inequality solutions");
    add_typed(oracle);
    oracle->add_option("--depth", depth, "weight-depth bound")->required();
    oracle->add_option("--window", window, "enumeration window")->required();
    oracle->add_option("--gen-depth", gen_depth, "rewrite chain cap")->required();

    auto* verify = app.add_subcommand("verify", "property sweeps");
    verify->add_option("--suite", suite, "lemma52|lemma55|lemma63|csum|pn")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--grid", grid, "grid selection (default)")
        ->check(CLI::IsMember({"default"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(explore))
            return run_explore(parse_typed(type, lambda, rank), depth, format,
                               out_file);
        if (app.got_subcommand(hwv)) return run_hwv(parse_typed(type, lambda, rank));
        if (app.got_subcommand(forms))
            return run_forms(parse_typed(type, lambda, rank), window, gen_depth,
                             family, out_file);
        if (app.got_subcommand(oracle))
            return run_oracle(parse_typed(type, lambda, rank), depth, window,
                              gen_depth);
        if (app.got_subcommand(verify)) return run_verify(suite);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
