// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hodgefock/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "hodgefock/chaos.hpp"
#include "hodgefock/errors.hpp"
#include "hodgefock/fock_ops.hpp"
#include "hodgefock/hodge.hpp"
#include "hodgefock/rep_theory.hpp"
#include "hodgefock/tensor_core.hpp"

namespace hodgefock {
namespace {

using nlohmann::json;

constexpr Suite kConcreteSuites[] = {Suite::weitzenboeck, Suite::exactness, Suite::split,
                                     Suite::decomposition, Suite::rep,      Suite::chaos};

// Ambient dimension d^n above which the subspace suite is skipped.
constexpr std::int64_t kDecompositionAmbientLimit = 1024;
// Characters are compared over all of S_n up to this n.
constexpr int kCharacterMaxN = 4;

struct Job {
    Suite suite;
    int d;
    int n;
    int k;
};

struct Counter {
    int checks = 0;
    int failures = 0;
    void expect(bool ok) {
        ++checks;
        if (!ok) ++failures;
    }
};

std::int64_t ipow(int base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

CaseResult weitzenboeck_case(int d, int k, int q) {
    CaseResult r;
    const auto dim = space_dim(Signature{d, k, q});
    r.details["dim"] = dim;
    if (dim == 0) {
        r.status = Status::skip;
        r.details["reason"] = "empty space";
        return r;
    }
    const Rational defect = weitzenboeck_defect(d, k, q);
    r.details["defect"] = defect.to_string();
    r.status = defect.is_zero() ? Status::pass : Status::fail;
    return r;
}

CaseResult exactness_case(int d, int k, int q) {
    CaseResult r;
    const auto row = exactness_row(d, k, q);
    r.details = json{{"dim", row.dim},
                     {"rank_lower", row.rank_lower},
                     {"kernel_lower", row.kernel_lower},
                     {"rank_raise", row.rank_raise},
                     {"kernel_raise", row.kernel_raise},
                     {"image_lower_in", row.image_lower_in},
                     {"image_raise_in", row.image_raise_in},
                     {"harmonic", row.harmonic},
                     {"lower_exact", row.lower_exact()},
                     {"raise_exact", row.raise_exact()}};
    r.status = row.ok() ? Status::pass : Status::fail;
    return r;
}

CaseResult split_case(int d, int k, int q, int trials, std::uint64_t seed) {
    CaseResult r;
    const Signature sig{d, k, q};
    const auto dim = space_dim(sig);
    r.details["dim"] = dim;
    if (dim == 0) {
        r.status = Status::skip;
        r.details["reason"] = "empty space";
        return r;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(q)};
    std::mt19937_64 gen(seq);
    const FockTensor zero(sig);
    int failures = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const FockTensor t = random_fock_tensor(sig, gen);
        const auto [plus, minus] = hodge_split(t);
        bool ok = plus + minus == t;
        if (k >= 1) ok = ok && lower(plus).is_zero();
        if (q >= 1) ok = ok && raise(minus).is_zero();
        ok = ok && inner(plus, minus).is_zero();
        const auto again_plus = hodge_split(plus);
        const auto again_minus = hodge_split(minus);
        ok = ok && again_plus.plus == plus && again_plus.minus == zero;
        ok = ok && again_minus.plus == zero && again_minus.minus == minus;
        if (!ok) ++failures;
    }
    r.details["trials"] = trials;
    r.details["failures"] = failures;
    r.status = failures == 0 ? Status::pass : Status::fail;
    return r;
}

CaseResult decomposition_case(int d, int k, int q) {
    CaseResult r;
    const auto dim = space_dim(Signature{d, k, q});
    r.details["dim"] = dim;
    if (dim == 0) {
        r.status = Status::skip;
        r.details["reason"] = "empty space";
        return r;
    }
    if (ipow(d, k + q) > kDecompositionAmbientLimit) {
        r.status = Status::skip;
        r.details["reason"] = "ambient dimension above " + std::to_string(kDecompositionAmbientLimit);
        return r;
    }
    const Subspace a = embedded_space(d, k, q);
    const Subspace plus = intersect(a, span_all_positions(d, k + 1, q - 1));
    const Subspace minus = intersect(a, span_all_positions(d, k - 1, q + 1));
    const auto mutual = intersect(plus, minus).dim();
    const auto kernel_lower =
        static_cast<std::size_t>(dim) - operator_matrix(FockOperator::lower, d, k, q).rank();
    r.details["plus"] = plus.dim();
    r.details["minus"] = minus.dim();
    r.details["mutual"] = mutual;
    r.details["kernel_lower"] = kernel_lower;
    const bool ok = a.dim() == static_cast<std::size_t>(dim) && plus.dim() + minus.dim() == a.dim() &&
                    mutual == 0 && plus.dim() == kernel_lower;
    r.status = ok ? Status::pass : Status::fail;
    return r;
}

// Character of [k][1^q] at p: fixed k-subsets a, weighted by the sign of p on the complement.
std::int64_t induced_character(const Permutation& p, int k) {
    const int n = p.degree();
    std::int64_t total = 0;
    for (const auto& a : k_subsets(n, k)) {
        const auto members = a.members();
        std::vector<bool> in_a(n + 1, false);
        for (int i : members) in_a[i] = true;
        if (!std::all_of(members.begin(), members.end(), [&](int i) { return in_a[p(i)]; })) continue;
        int sign = 1;
        std::vector<bool> seen(n + 1, false);
        for (int i = 1; i <= n; ++i) {
            if (in_a[i] || seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = p(j)) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        total += sign;
    }
    return total;
}

// v is symmetric under the transpositions of slots lo..hi (adjacent ones generate).
bool symmetric_in(const FullTensor& v, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (permute(v, Permutation::transposition(v.n(), i, i + 1)) != v) return false;
    return true;
}

bool skew_in(const FullTensor& v, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (permute(v, Permutation::transposition(v.n(), i, i + 1)) != v * Rational(-1)) return false;
    return true;
}

CaseResult rep_case(int d, int k, int q) {
    CaseResult r;
    const int n = k + q;
    const auto labels = enum_basis(d, k, q);
    if (labels.empty()) {
        r.status = Status::skip;
        r.details["reason"] = "empty space";
        return r;
    }
    const auto expect_plus = q >= 1 ? hook_dim(HookShape(n, q - 1)) : 0;
    const auto expect_minus = k >= 1 ? hook_dim(HookShape(n, q)) : 0;
    const auto perms = n <= kCharacterMaxN ? Permutation::all(n) : std::vector<Permutation>{};

    Counter c;
    int distinct = 0;
    int degenerate = 0;
    for (const auto& label : labels) {
        if (!label.distinct_entries()) {
            ++degenerate;
            continue;
        }
        ++distinct;
        const auto split = split_orbit(label, d);
        c.expect(static_cast<std::int64_t>(split.span.dim()) == binomial(n, k));
        c.expect(static_cast<std::int64_t>(split.plus.dim()) == expect_plus);
        c.expect(static_cast<std::int64_t>(split.minus.dim()) == expect_minus);
        c.expect(split.span.contains(split.plus) && split.span.contains(split.minus));
        for (const auto& p : perms) {
            const Rational whole = action_trace(split.span, p);
            c.expect(whole == action_trace(split.plus, p) + action_trace(split.minus, p));
            c.expect(whole == Rational(static_cast<long>(induced_character(p, k))));
        }
        if (k >= 1 && q >= 1) {
            const auto w = witnesses(label, d);
            c.expect(!w.plus.is_zero() && split.plus.contains(w.plus));
            c.expect(symmetric_in(w.plus, 1, k + 1) && skew_in(w.plus, k + 2, n));
            c.expect(!w.minus.is_zero() && split.minus.contains(w.minus));
            c.expect(symmetric_in(w.minus, 1, k - 1) && skew_in(w.minus, k, n));
        }
    }
    r.details["distinct_labels"] = distinct;
    r.details["degenerate_labels"] = degenerate;
    r.details["orbit_dim"] = binomial(n, k);
    r.details["plus_dim"] = expect_plus;
    r.details["minus_dim"] = expect_minus;
    r.details["checks"] = c.checks;
    r.details["failures"] = c.failures;
    if (degenerate > 0) r.details["annotation"] = "degenerate-orbit";
    r.status = c.failures == 0 ? Status::pass : Status::fail;
    return r;
}

CaseResult chaos_case(int d, int k, int q) {
    CaseResult r;
    const int n = k + q;
    const auto basis = enum_basis(d, k, q);
    r.details["dim"] = basis.size();
    if (basis.empty()) {
        r.status = Status::skip;
        r.details["reason"] = "empty space";
        return r;
    }
    std::vector<FormField> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(psi_q(FockTensor::basis(d, b)));
    const auto below = k >= 1 ? enum_basis(d, k - 1, q + 1) : std::vector<MixedIndex>{};

    Counter c;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const FockTensor b = FockTensor::basis(d, basis[i]);
        const FormField& u = images[i];
        c.expect(psi_q_inverse(u) == std::map<int, FockTensor>{{k, b}});

        const FormField du = d_sharp(u);
        c.expect(k >= 1 ? du == psi_q(lower(b)) : du.is_zero());
        c.expect(d_sharp(du).is_zero());
        if (q >= 2) c.expect(d_star_sharp(d_star_sharp(u)).is_zero());

        const FormField lap = hodge_laplacian(u);
        c.expect(lap == u * Rational(n));
        c.expect(lap == u.map_components([](const Poly& f) { return ou(f); }) + u * Rational(q));

        for (std::size_t j = 0; j < basis.size(); ++j)
            c.expect(gaussian_inner(u, images[j]) == inner(b, FockTensor::basis(d, basis[j])));
        for (const auto& w : below) {
            const FormField v = psi_q(FockTensor::basis(d, w));
            c.expect(gaussian_inner(du, v) == gaussian_inner(u, d_star_sharp(v)));
        }
    }
    r.details["checks"] = c.checks;
    r.details["failures"] = c.failures;
    r.status = c.failures == 0 ? Status::pass : Status::fail;
    return r;
}

CaseResult run_job(const Job& job, const VerifyConfig& cfg) {
    const int q = job.n - job.k;
    CaseResult r;
    try {
        switch (job.suite) {
        case Suite::weitzenboeck: r = weitzenboeck_case(job.d, job.k, q); break;
        case Suite::exactness: r = exactness_case(job.d, job.k, q); break;
        case Suite::split: r = split_case(job.d, job.k, q, cfg.trials, cfg.seed); break;
        case Suite::decomposition: r = decomposition_case(job.d, job.k, q); break;
        case Suite::rep: r = rep_case(job.d, job.k, q); break;
        case Suite::chaos: r = chaos_case(job.d, job.k, q); break;
        case Suite::all: throw std::logic_error("run_job: 'all' is not a concrete suite");
        }
    } catch (const std::exception& e) {
        r = CaseResult{};
        r.status = Status::fail;
        r.details["error"] = e.what();
    }
    r.name = to_string(job.suite) + "/d=" + std::to_string(job.d) + "/n=" + std::to_string(job.n) +
             "/k=" + std::to_string(job.k);
    r.params = json{{"d", job.d}, {"n", job.n}, {"k", job.k}, {"q", q}};
    return r;
}

std::vector<Job> make_jobs(const VerifyConfig& cfg) {
    std::vector<Suite> suites;
    if (cfg.suite == Suite::all) {
        suites.assign(std::begin(kConcreteSuites), std::end(kConcreteSuites));
    } else {
        suites.push_back(cfg.suite);
    }
    std::vector<int> dims;
    if (cfg.dim) {
        dims.push_back(*cfg.dim);
    } else {
        for (int d = 1; d <= cfg.max_dim; ++d) dims.push_back(d);
    }
    std::vector<int> ns;
    if (cfg.n) {
        ns.push_back(*cfg.n);
    } else if (cfg.k && cfg.q) {
        ns.push_back(*cfg.k + *cfg.q);
    } else {
        for (int n = 1; n <= cfg.max_n; ++n) ns.push_back(n);
    }

    std::vector<Job> jobs;
    for (Suite s : suites)
        for (int d : dims)
            for (int n : ns)
                for (int k = 0; k <= n; ++k) {
                    if (cfg.k && k != *cfg.k) continue;
                    if (cfg.q && n - k != *cfg.q) continue;
                    jobs.push_back({s, d, n, k});
                }
    return jobs;
}

void run_pool(std::size_t count, const std::function<void(std::size_t)>& task) {
    const std::size_t workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) task(i);
        });
    }
    for (auto& t : threads) t.join();
}

template <typename E>
E parse_enum(std::string_view name, std::initializer_list<E> values, const char* what) {
    for (E v : values)
        if (to_string(v) == name) return v;
    throw ConfigError(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

std::string summarize(const json& details) {
    std::string out;
    for (const auto& [key, value] : details.items()) {
        if (!out.empty()) out += " ";
        out += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    return out;
}

} // namespace

std::string to_string(Suite s) {
    switch (s) {
    case Suite::weitzenboeck: return "weitzenboeck";
    case Suite::exactness: return "exactness";
    case Suite::split: return "split";
    case Suite::decomposition: return "decomposition";
    case Suite::rep: return "rep";
    case Suite::chaos: return "chaos";
    case Suite::all: return "all";
    }
    return "?";
}

std::string to_string(Format f) { return f == Format::json ? "json" : "text"; }

std::string to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
    }
    return "?";
}

Suite parse_suite(std::string_view name) {
    return parse_enum(name,
                      {Suite::weitzenboeck, Suite::exactness, Suite::split, Suite::decomposition, Suite::rep,
                       Suite::chaos, Suite::all},
                      "suite");
}

Format parse_format(std::string_view name) { return parse_enum(name, {Format::json, Format::text}, "format"); }

Status parse_status(std::string_view name) {
    return parse_enum(name, {Status::pass, Status::fail, Status::skip}, "status");
}

void validate(const VerifyConfig& cfg) {
    if (cfg.max_dim < 1) throw ConfigError("max-dim must be >= 1");
    if (cfg.max_n < 1) throw ConfigError("max-n must be >= 1");
    if (cfg.trials < 0) throw ConfigError("trials must be >= 0");
    if (cfg.dim && *cfg.dim < 1) throw ConfigError("dim must be >= 1");
    if (cfg.n && *cfg.n < 1) throw ConfigError("n must be >= 1");
    if (cfg.k && *cfg.k < 0) throw ConfigError("k must be >= 0");
    if (cfg.q && *cfg.q < 0) throw ConfigError("q must be >= 0");
    if (cfg.n && cfg.k && *cfg.k > *cfg.n) throw ConfigError("k exceeds n");
    if (cfg.n && cfg.q && *cfg.q > *cfg.n) throw ConfigError("q exceeds n");
    if (cfg.n && cfg.k && cfg.q && *cfg.k + *cfg.q != *cfg.n) throw ConfigError("k + q must equal n");
    if (!cfg.n && cfg.k && cfg.q && *cfg.k + *cfg.q < 1) throw ConfigError("k + q must be >= 1");
}

json config_json(const VerifyConfig& cfg) {
    json j{{"suite", to_string(cfg.suite)}, {"max_dim", cfg.max_dim}, {"max_n", cfg.max_n},
           {"trials", cfg.trials},          {"seed", cfg.seed},        {"format", to_string(cfg.format)}};
    if (cfg.dim) j["dim"] = *cfg.dim;
    if (cfg.n) j["n"] = *cfg.n;
    if (cfg.k) j["k"] = *cfg.k;
    if (cfg.q) j["q"] = *cfg.q;
    return j;
}

Status overall_status(const std::vector<CaseResult>& cases) {
    const bool failed = std::any_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == Status::fail; });
    return failed ? Status::fail : Status::pass;
}

unsigned worker_count() {
    if (const char* env = std::getenv("HODGEFOCK_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

Report run_verify(const VerifyConfig& cfg) {
    validate(cfg);
    const auto jobs = make_jobs(cfg);
    Report report;
    report.config = config_json(cfg);
    report.cases.resize(jobs.size());
    run_pool(jobs.size(), [&](std::size_t i) { report.cases[i] = run_job(jobs[i], cfg); });
    report.status = overall_status(report.cases);
    return report;
}

std::string render_report(const Report& r, Format format) {
    if (format == Format::json) {
        json cases = json::array();
        for (const auto& c : r.cases)
            cases.push_back(json{{"name", c.name}, {"params", c.params}, {"status", to_string(c.status)}, {"details", c.details}});
        const json j{{"tool", r.tool}, {"version", r.version}, {"config", r.config},
                     {"cases", std::move(cases)}, {"status", to_string(r.status)}};
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << r.tool << " " << r.version << "\n";
    std::size_t width = 4;
    for (const auto& c : r.cases) width = std::max(width, c.name.size());
    os << std::left << std::setw(static_cast<int>(width)) << "case" << "  status  details\n";
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& c : r.cases) {
        ++counts[static_cast<int>(c.status)];
        os << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(6) << to_string(c.status)
           << "  " << summarize(c.details) << "\n";
    }
    os << "overall: " << to_string(r.status) << " (" << r.cases.size() << " cases: " << counts[0] << " pass, "
       << counts[1] << " fail, " << counts[2] << " skip)\n";
    return os.str();
}

Report parse_report(std::string_view json_text) {
    try {
        const json j = json::parse(json_text);
        Report r;
        r.tool = j.at("tool").get<std::string>();
        r.version = j.at("version").get<std::string>();
        r.config = j.at("config");
        for (const auto& c : j.at("cases")) {
            CaseResult cr;
            cr.name = c.at("name").get<std::string>();
            cr.params = c.at("params");
            cr.status = parse_status(c.at("status").get<std::string>());
            cr.details = c.at("details");
            r.cases.push_back(std::move(cr));
        }
        r.status = parse_status(j.at("status").get<std::string>());
        return r;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("parse_report: ") + e.what());
    }
}

int exit_code(const Report& r) { return r.status == Status::fail ? 1 : 0; }

} // namespace hodgefock
