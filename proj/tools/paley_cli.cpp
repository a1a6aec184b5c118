#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paley/paley.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

bool is_odd_prime_power(paley::int64 n, paley::int64& p, int& alpha) {
    auto factors = paley::factorize(n);
    if (factors.size() != 1 || factors[0].first == 2) return false;
    p = factors[0].first;
    alpha = factors[0].second;
    return true;
}

int cmd_check(paley::int64 n) {
    if (n < 3) {
        std::cout << "excluded (n must be >= 3)\n";
        return kExitDomain;
    }
    std::cout << "n = " << n << " =";
    for (auto [p, e] : paley::factorize(n)) {
        std::cout << " " << p;
        if (e > 1) std::cout << "^" << e;
    }
    std::cout << "\n";
    if (paley::is_admissible(n)) {
        std::cout << "admissible, x=" << paley::sqrt_of_minus_one(n) << "\n";
        return kExitOk;
    }
    auto m = paley::Modulus::of(n);
    if (m.s > 1)
        std::cout << "inadmissible (divisible by 4)\n";
    else {
        for (auto [p, e] : m.factors)
            if (p % 4 != 1) {
                std::cout << "inadmissible (prime " << p << " = 3 mod 4)\n";
                break;
            }
    }
    return kExitDomain;
}

int cmd_props(paley::int64 n) {
    if (!paley::is_admissible(n)) {
        std::cerr << "error: n = " << n << " is not admissible\n";
        return kExitDomain;
    }
    paley::Graph g = paley::Graph::paley(n);
    auto [lo, hi] = paley::degree_profile(g);
    std::cout << "vertices " << n << "\n"
              << "degree " << lo << (lo == hi ? "" : " (irregular!)") << "\n"
              << "edges " << g.edge_count() << "\n"
              << "connected " << (paley::is_connected(g) ? "yes" : "no") << "\n"
              << "cycle " << (paley::is_cycle(g) ? "yes" : "no") << "\n"
              << "self-complementary-edge-count "
              << (paley::self_complementary_edge_test(n) ? "yes" : "no") << "\n";
    paley::int64 p;
    int alpha;
    if (is_odd_prime_power(n, p, alpha)) {
        auto d = paley::decomposition_report(p, alpha);
        std::cout << "decomposition " << d.block_count << " blocks of G(" << p << "), "
                  << d.intra_block_edges << " intra edges, " << d.inter_block_edges
                  << " star edges, "
                  << (d.blocks_isomorphic && d.star_structure_verified ? "verified" : "MISMATCH")
                  << "\n";
    }
    return kExitOk;
}

int cmd_count(paley::int64 n, int order, const std::string& method) {
    if (!paley::is_admissible(n)) {
        std::cerr << "error: n = " << n << " is not admissible\n";
        return kExitDomain;
    }
    paley::int64 p = 0;
    int alpha = 0;
    bool prime_power = is_odd_prime_power(n, p, alpha);
    bool want_formula = method == "formula" || method == "both";
    bool want_brute = method == "brute" || method == "both";
    if (want_formula && !prime_power) {
        std::cerr << "error: no closed formula for composite n = " << n << "\n";
        return kExitDomain;
    }
    paley::bigint formula_count, brute_count;
    if (want_formula) {
        formula_count = order == 3 ? paley::k3_formula(p, alpha) : paley::k4_formula(p, alpha);
        std::cout << "formula " << formula_count << "\n";
    }
    if (want_brute) {
        paley::Graph g = paley::Graph::paley(n);
        brute_count =
            order == 3 ? paley::count_triangles_brute(g) : paley::count_k4_brute(g);
        std::cout << "brute " << brute_count << "\n";
    }
    if (want_formula && want_brute && formula_count != brute_count) {
        std::cerr << "error: formula/brute mismatch\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_jacobi(paley::int64 p, int alpha) {
    paley::PrimePowerModulus m;
    try {
        m = paley::PrimePowerModulus::of(p, alpha);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    paley::GaussianInt j =
        paley::jacobi_sum(paley::Character::quartic(m), paley::Character::quadratic(m));
    paley::GaussianInt k = j * j + j.conj() * j.conj();
    std::cout << "J=" << j.str() << "\n"
              << "norm=" << j.norm() << "\n"
              << "K=" << k.re << "\n";
    return kExitOk;
}

int cmd_verify(paley::int64 max_n, paley::int64 max_prime, std::vector<int> alphas, bool json) {
    if (alphas.empty()) alphas = {1};
    auto report = paley::run_verification(max_n, max_prime, alphas);
    if (json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "pass" : "FAIL") << " " << c.name << " [" << c.params << "]";
            if (!c.pass) std::cout << " expected=" << c.expected << " actual=" << c.actual;
            std::cout << "\n";
        }
        std::cout << "summary: " << report.pass_count() << " pass, " << report.fail_count()
                  << " fail\n";
    }
    return report.all_pass() ? kExitOk : kExitMismatch;
}

int cmd_export(paley::int64 n, const std::string& format, const std::string& out_path) {
    if (!paley::is_admissible(n)) {
        std::cerr << "error: n = " << n << " is not admissible\n";
        return kExitDomain;
    }
    std::string payload =
        paley::export_graph(paley::Graph::paley(n), paley::parse_export_format(format));
    if (out_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << payload;
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    std::cout << payload.size() << " bytes written to " << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Paley-type graphs on Z_n: construction, character sums, clique counts"};
    app.require_subcommand(1);

    paley::int64 n = 0, p = 0, max_n = 500, max_prime = 41;
    int order = 3, alpha = 1;
    std::string method = "both", format = "edge-list", out_path;
    std::vector<int> alphas{1, 2};
    bool json = false;

    auto* check = app.add_subcommand("check", "Admissibility verdict and witness for n");
    check->add_option("n", n)->required();

    auto* props = app.add_subcommand("props", "Structural property table for G_n");
    props->add_option("n", n)->required();

    auto* count = app.add_subcommand("count", "Clique counts of G_n");
    count->add_option("n", n)->required();
    count->add_option("--order", order)->check(CLI::IsMember({3, 4}));
    count->add_option("--method", method)->check(CLI::IsMember({"formula", "brute", "both"}));

    auto* jacobi = app.add_subcommand("jacobi", "Jacobi sum J(psi,chi) mod p^alpha");
    jacobi->add_option("p", p)->required();
    jacobi->add_option("alpha", alpha)->required();

    auto* verify = app.add_subcommand("verify", "Run the full verification sweep");
    verify->add_option("--max-n", max_n);
    verify->add_option("--max-prime", max_prime);
    verify->add_option("--alphas", alphas)->delimiter(',');
    verify->add_flag("--json", json);

    auto* exp = app.add_subcommand("export", "Export G_n (edge-list, dot or json)");
    exp->add_option("n", n)->required();
    exp->add_option("--format", format)->check(CLI::IsMember({"edge-list", "dot", "json"}));
    exp->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(n);
        if (props->parsed()) return cmd_props(n);
        if (count->parsed()) return cmd_count(n, order, method);
        if (jacobi->parsed()) return cmd_jacobi(p, alpha);
        if (verify->parsed()) return cmd_verify(max_n, max_prime, alphas, json);
        if (exp->parsed()) return cmd_export(n, format, out_path);
    } catch (const paley::not_admissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
