// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

// hodgefock verify <suite> [flags]
//
// Exit codes: 0 all cases pass, 1 some case failed, 2 invalid configuration.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hodgefock/errors.hpp"
#include "hodgefock/verify.hpp"

namespace {

constexpr int kConfigErrorExit = 2;

template <typename T>
void copy_if_set(const CLI::Option* opt, T value, std::optional<T>& target) {
    if (opt->count() > 0) target = value;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Boson-Fermion Fock calculus identities"};
    app.set_version_flag("--version", std::string(HODGEFOCK_VERSION));
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run verification suites over a parameter grid");
    std::string suite_name;
    std::string format_name = "json";
    hodgefock::VerifyConfig cfg;
    int dim = 0;
    int n = 0;
    int k = 0;
    int q = 0;
    std::string out;

    verify->add_option("suite", suite_name, "weitzenboeck|exactness|split|decomposition|rep|chaos|all")->required();
    verify->add_option("--max-dim", cfg.max_dim, "Largest dimension d of H")->capture_default_str();
    verify->add_option("--max-n", cfg.max_n, "Largest total degree n = k + q")->capture_default_str();
    auto* dim_opt = verify->add_option("--dim", dim, "Single dimension (overrides --max-dim)");
    auto* n_opt = verify->add_option("--n", n, "Single total degree (overrides --max-n)");
    auto* k_opt = verify->add_option("--k", k, "Single symmetric degree");
    auto* q_opt = verify->add_option("--q", q, "Single exterior degree");
    verify->add_option("--trials", cfg.trials, "Random tensors per signature in the split suite")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Seed for random trials")->capture_default_str();
    verify->add_option("--format", format_name, "json|text")->capture_default_str();
    auto* out_opt = verify->add_option("--out", out, "Write the report to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigErrorExit;
    }

    try {
        cfg.suite = hodgefock::parse_suite(suite_name);
        cfg.format = hodgefock::parse_format(format_name);
        copy_if_set(dim_opt, dim, cfg.dim);
        copy_if_set(n_opt, n, cfg.n);
        copy_if_set(k_opt, k, cfg.k);
        copy_if_set(q_opt, q, cfg.q);
        if (out_opt->count() > 0) cfg.out = out;
        hodgefock::validate(cfg);
    } catch (const hodgefock::ConfigError& e) {
        std::cerr << "hodgefock: " << e.what() << "\n";
        return kConfigErrorExit;
    }

    const auto report = hodgefock::run_verify(cfg);
    const std::string text = hodgefock::render_report(report, cfg.format);
    if (cfg.out) {
        std::ofstream file(*cfg.out, std::ios::binary);
        if (!file) {
            std::cerr << "hodgefock: cannot open " << *cfg.out << "\n";
            return kConfigErrorExit;
        }
        file << text;
    } else {
        std::cout << text;
    }
    return hodgefock::exit_code(report);
}
