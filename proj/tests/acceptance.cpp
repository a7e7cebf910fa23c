// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "hodgefock/chaos.hpp"
#include "hodgefock/fock_ops.hpp"
#include "hodgefock/linalg.hpp"
#include "hodgefock/verify.hpp"

using namespace hodgefock;
using json = nlohmann::json;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

VerifyConfig grid(Suite s, int max_dim, int max_n) {
    VerifyConfig cfg;
    cfg.suite = s;
    cfg.max_dim = max_dim;
    cfg.max_n = max_n;
    return cfg;
}

// Every case passes or is an empty-space skip; extra(c) may add per-case checks.
Outcome check_report(const Report& r, const std::function<bool(const CaseResult&)>& extra = {}) {
    int pass = 0;
    int skip = 0;
    for (const auto& c : r.cases) {
        if (c.status == Status::skip && c.details.value("dim", -1) == 0) {
            ++skip;
            continue;
        }
        if (c.status != Status::pass || (extra && !extra(c))) return {false, "failed case " + c.name};
        ++pass;
    }
    if (pass == 0) return {false, "no cases ran"};
    return {true, std::to_string(pass) + " cases, " + std::to_string(skip) + " empty"};
}

std::vector<Exponent> exponents_up_to(int d, int max_degree) {
    std::vector<Exponent> out;
    Exponent e(d, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == d) {
            out.push_back(e);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[i] = a;
            rec(i + 1, left - a);
        }
        e[i] = 0;
    };
    rec(0, max_degree);
    return out;
}

std::vector<std::vector<int>> keys(int d, int q) {
    std::vector<std::vector<int>> out;
    for (const auto& s : k_subsets(d, q)) out.push_back(s.members());
    return out;
}

std::vector<FormField> monomial_fields(int d, int q, int max_degree) {
    std::vector<FormField> out;
    for (const auto& key : keys(d, q))
        for (const auto& e : exponents_up_to(d, max_degree)) {
            FormField u(d, q);
            u.add(key, Poly::monomial(d, e));
            out.push_back(std::move(u));
        }
    return out;
}

Outcome weitzenboeck() {
    return check_report(run_verify(grid(Suite::weitzenboeck, 4, 5)),
                        [](const CaseResult& c) { return c.details.at("defect") == "0"; });
}

Outcome exactness() {
    return check_report(run_verify(grid(Suite::exactness, 4, 5)),
                        [](const CaseResult& c) { return c.details.at("harmonic") == 0; });
}

Outcome split() {
    auto cfg = grid(Suite::split, 3, 4);
    cfg.trials = 100;
    return check_report(run_verify(cfg), [](const CaseResult& c) {
        return c.details.at("trials") == 100 && c.details.at("failures") == 0;
    });
}

Outcome decomposition() { return check_report(run_verify(grid(Suite::decomposition, 3, 4))); }

Outcome rep() {
    int distinct = 0;
    for (int n = 1; n <= 5; ++n) {
        auto cfg = grid(Suite::rep, n, n);
        cfg.dim = n;
        cfg.n = n;
        const auto r = run_verify(cfg);
        const auto o = check_report(r);
        if (!o.ok) return o;
        for (const auto& c : r.cases) distinct += c.details.value("distinct_labels", 0);
    }
    return {true, std::to_string(distinct) + " distinct labels"};
}

Outcome chaos() {
    const auto suite = check_report(run_verify(grid(Suite::chaos, 3, 5)));
    if (!suite.ok) return suite;

    std::size_t checks = 0;
    // Ψ is an isometry on symmetric basis pairs up to total degree 6.
    for (int d = 1; d <= 3; ++d) {
        std::vector<FockTensor> basis;
        for (int k = 0; k <= 6; ++k)
            for (const auto& b : enum_basis(d, k, 0)) basis.push_back(FockTensor::basis(d, b));
        std::vector<Poly> images;
        for (const auto& b : basis) images.push_back(psi(b));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const Rational rhs = basis[i].k() == basis[j].k() ? inner(basis[i], basis[j]) : Rational(0);
                if (gaussian_inner(images[i], images[j]) != rhs) return {false, "isometry"};
                ++checks;
            }
    }
    // d♯ and d*♯ are adjoint on monomial fields up to degree 5.
    for (int d = 1; d <= 3; ++d)
        for (int q = 0; q < d; ++q) {
            const auto us = monomial_fields(d, q, 5);
            const auto vs = monomial_fields(d, q + 1, 5);
            std::vector<FormField> dus;
            for (const auto& u : us) dus.push_back(d_sharp(u));
            std::vector<FormField> dvs;
            for (const auto& v : vs) dvs.push_back(d_star_sharp(v));
            for (std::size_t i = 0; i < us.size(); ++i)
                for (std::size_t j = 0; j < vs.size(); ++j) {
                    if (gaussian_inner(dus[i], vs[j]) != gaussian_inner(us[i], dvs[j])) return {false, "adjointness"};
                    ++checks;
                }
        }
    // Harmonic fields on degree-4 truncations: none for q ≥ 1, constants for q = 0.
    for (int d = 1; d <= 3; ++d)
        for (int q = 0; q <= 3 && q <= d; ++q) {
            const auto fields = monomial_fields(d, q, 4);
            // index the monomial coordinates (key, exponent)
            std::vector<std::pair<std::vector<int>, Exponent>> coords;
            for (const auto& key : keys(d, q))
                for (const auto& e : exponents_up_to(d, 4)) coords.emplace_back(key, e);
            linalg::DenseMatrix m(coords.size(), std::vector<Rational>(fields.size()));
            for (std::size_t col = 0; col < fields.size(); ++col) {
                const FormField lap = hodge_laplacian(fields[col]);
                for (std::size_t row = 0; row < coords.size(); ++row)
                    m[row][col] = lap.component(coords[row].first).coeff(coords[row].second);
            }
            const auto ker = linalg::kernel_basis(m, fields.size());
            if (q >= 1 && !ker.empty()) return {false, "harmonic q=" + std::to_string(q)};
            if (q == 0) {
                if (ker.size() != 1) return {false, "harmonic q=0 dimension"};
                for (std::size_t col = 0; col < fields.size(); ++col) {
                    const bool constant = fields[col].component({}).degree() == 0;
                    if (!constant && ker[0][col] != Rational(0)) return {false, "harmonic q=0 not constant"};
                }
            }
            ++checks;
        }
    return {true, suite.note + ", " + std::to_string(checks) + " extra checks"};
}

struct Run {
    std::string out;
    int status = -1;
};

Run run_cli(const std::string& args) {
    Run r;
    const std::string cmd = std::string("\"") + HODGEFOCK_CLI_PATH + "\" " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

Outcome cli_determinism() {
    const std::string args = "verify all --max-dim 3 --max-n 4 --seed 42 --format json";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    if (a.status != 0 || b.status != 0) return {false, "exit status " + std::to_string(a.status)};
    if (a.out != b.out) return {false, "reports differ"};
    const auto j = json::parse(a.out, nullptr, false);
    if (j.is_discarded() || j.value("status", "") != "pass") return {false, "overall status is not pass"};
    return {true, std::to_string(a.out.size()) + " identical bytes, " + std::to_string(j.at("cases").size()) +
                      " cases"};
}

struct Criterion {
    int id;
    const char* name;
    double budget_s; // 0: no runtime bound
    Outcome (*run)();
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "weitzenboeck identity, d<=4 n<=5", 10, weitzenboeck},
        {2, "exactness and zero harmonic part, d<=4 n<=5", 30, exactness},
        {3, "hodge split on 100 seeded tensors per signature, d<=3 n<=4", 0, split},
        {4, "decomposition by intersection, d<=3 n<=4", 60, decomposition},
        {5, "representation split, characters and witnesses, d=n<=5", 0, rep},
        {6, "chaos model: isometry, diagram, laplacian, adjointness, harmonic", 60, chaos},
        {7, "cli determinism", 0, cli_determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.budget_s > 0 && secs >= c.budget_s) o = {false, "over runtime budget"};
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << o.note << "; " << secs << " s)";
        std::cout << line.str() << std::endl;
        if (!o.ok) ++failed;
    }
    std::cout << (failed == 0 ? "acceptance: all criteria pass" : "acceptance: " + std::to_string(failed) + " failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
