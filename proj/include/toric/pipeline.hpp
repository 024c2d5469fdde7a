#pragma once

#include "toric/cke.hpp"
#include "toric/fan.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toric {

using Json = nlohmann::ordered_json;

// Everything indices-related is 1-based in documents, 0-based in memory.
struct JobSpec {
    std::string label;
    std::optional<Fan> inline_fan;
    std::optional<std::pair<int, int>> bundle;
    std::string transform_mode = "auto";  // "auto" | "identity" | "explicit"
    IMat transform_matrix;                // used when transform_mode == "explicit"
    std::optional<std::vector<std::size_t>> parametrized;  // one ray set; nullopt = orbits
    Rational base_offset = Rational(1, 2);
    Rational window_lo = Rational(0);
    Rational window_hi = Rational(1);
    std::optional<std::size_t> coordinate;  // nullopt = detect from moment support
};

JobSpec job_from_json(const Json& doc);
Json job_to_json(const JobSpec& job);

Fan job_fan(const JobSpec& job);

// fan + polytope + KE + reductivity + divisor classes
Json analyze_report(const JobSpec& job);

struct CkeOutcome {
    Json report;
    std::string classification;
    bool decisive = false;
};

CkeOutcome run_cke(const JobSpec& job);

// One row per projective-bundle fan with m >= r >= 1 and m+r+1 <= max_dim
// (bundle(m,r) and bundle(r,m) give the same manifold, so only m >= r runs).
Json scan_report(int max_dim);

std::vector<std::string> fixture_names();
JobSpec fixture_job(const std::string& name);

}  // namespace toric
