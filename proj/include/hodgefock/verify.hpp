// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief Batch verification over (d, n, k) grids and report serialization.
 *
 * Cases run on a worker pool (HODGEFOCK_WORKERS overrides the default of one
 * worker per hardware thread). Each case owns a fixed slot in the output, so
 * reports do not depend on scheduling. Rationals are serialized as "p/q"
 * strings and the JSON carries no timing, so a fixed config renders to
 * byte-identical output.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hodgefock {

enum class Suite { weitzenboeck, exactness, split, decomposition, rep, chaos, all };
enum class Format { json, text };

std::string to_string(Suite s);
std::string to_string(Format f);
/// Throws ConfigError on an unknown name.
Suite parse_suite(std::string_view name);
Format parse_format(std::string_view name);

struct VerifyConfig {
    Suite suite = Suite::all;
    int max_dim = 3;
    int max_n = 4;
    int trials = 100;
    std::uint64_t seed = 42;
    Format format = Format::json;
    std::optional<std::string> out;
    // Single-case overrides of the grid.
    std::optional<int> dim;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> q;
};

/// Throws ConfigError when a range or override is invalid.
void validate(const VerifyConfig& cfg);

/// Config echo as stored in reports; `out` is not part of it.
nlohmann::json config_json(const VerifyConfig& cfg);

enum class Status { pass, fail, skip };

std::string to_string(Status s);
Status parse_status(std::string_view name);

struct CaseResult {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::pass;
    nlohmann::json details = nlohmann::json::object();

    friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

struct Report {
    std::string tool = "hodgefock";
    std::string version = HODGEFOCK_VERSION;
    nlohmann::json config = nlohmann::json::object();
    std::vector<CaseResult> cases;
    Status status = Status::pass;

    friend bool operator==(const Report&, const Report&) = default;
};

/// pass unless some case failed.
Status overall_status(const std::vector<CaseResult>& cases);

/// Runs the selected suites. Throws ConfigError for an invalid config; a
/// failing or throwing case is recorded, never propagated.
Report run_verify(const VerifyConfig& cfg);

std::string render_report(const Report& r, Format format);

/// Inverse of render_report(r, Format::json). Throws ConfigError on malformed input.
Report parse_report(std::string_view json_text);

/// 0 on pass, 1 on fail.
int exit_code(const Report& r);

/// HODGEFOCK_WORKERS if set and positive, else hardware concurrency (at least 1).
unsigned worker_count();

} // namespace hodgefock
