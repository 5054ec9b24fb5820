// Copyright 2026 The Jumpcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JUMPCODE_REPORT_IO_HPP
#define JUMPCODE_REPORT_IO_HPP

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "jumpcode/capacity.hpp"
#include "jumpcode/simulate.hpp"

namespace jumpcode {

/// CSV for capacity curves: header `gamma,q_capacity,c_capacity`, one row per
/// grid point, capacities at 12 significant digits, line-feed terminated.
inline void emit_curves(const CapacityCurve& quantum, const CapacityCurve& classical,
                        std::ostream& out) {
    if (quantum.points.size() != classical.points.size())
        throw std::invalid_argument("emit_curves: curve grids differ");
    out << "gamma,q_capacity,c_capacity\n";
    char buffer[128];
    for (std::size_t i = 0; i < quantum.points.size(); ++i) {
        if (quantum.points[i].first != classical.points[i].first)
            throw std::invalid_argument("emit_curves: curve grids differ");
        std::snprintf(buffer, sizeof(buffer), "%.12f,%#.12g,%#.12g\n", quantum.points[i].first,
                      quantum.points[i].second, classical.points[i].second);
        out << buffer;
    }
}

inline void emit_curves(const CapacityCurve& quantum, const CapacityCurve& classical,
                        const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_curves: cannot open " + path);
    emit_curves(quantum, classical, out);
    if (!out) throw std::runtime_error("emit_curves: write failed for " + path);
}

inline std::pair<CapacityCurve, CapacityCurve> parse_curves(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "gamma,q_capacity,c_capacity")
        throw std::runtime_error("parse_curves: bad header");
    CapacityCurve quantum{"q_capacity", {}};
    CapacityCurve classical{"c_capacity", {}};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double g = 0.0, q = 0.0, c = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &g, &q, &c) != 3)
            throw std::runtime_error("parse_curves: bad row: " + line);
        quantum.points.emplace_back(g, q);
        classical.points.emplace_back(g, c);
    }
    return {std::move(quantum), std::move(classical)};
}

/// Plan echo. The worker count is an execution knob with no effect on the
/// outcome, so it stays out of the report: the same plan must produce the
/// same bytes no matter how it was scheduled.
inline nlohmann::ordered_json plan_to_json(const TrialPlan& plan) {
    return nlohmann::ordered_json{
        {"seed", plan.seed},
        {"trials", plan.trials},
        {"gamma", plan.gamma},
        {"code", plan.code},
        {"mode", to_string(plan.mode)},
        {"decoder", to_string(plan.decoder)},
        {"sampler", to_string(plan.sampler)},
        {"bp_max_iters", plan.bp_max_iters},
    };
}

/// Report as a single JSON object. Timing is run-dependent, so the emitted
/// wall_time_seconds is 0 unless include_timing is set; measured time stays
/// available on the in-memory report. This keeps fixed-seed reports
/// byte-identical across runs and worker counts.
inline nlohmann::ordered_json report_to_json(const SimulationReport& report,
                                             bool include_timing = false) {
    nlohmann::ordered_json j;
    j["plan"] = plan_to_json(report.plan);
    j["failures"] = report.failures;
    j["failure_rate"] = report.failure_rate;
    j["wilson_95_interval"] = {report.wilson_95_interval.lo, report.wilson_95_interval.hi};
    j["wall_time_seconds"] = include_timing ? report.wall_time_seconds : 0.0;
    return j;
}

inline nlohmann::ordered_json channel_check_to_json(const ChannelCheckReport& check,
                                                    bool include_timing = false) {
    nlohmann::ordered_json j = report_to_json(check.report, include_timing);
    j["empirical_matrix"] = check.empirical;
    j["expected_matrix"] = check.expected;
    j["violating_cells"] = check.violating_cells;
    j["pass"] = check.pass;
    return j;
}

inline void emit_report(const nlohmann::ordered_json& j, std::ostream& out) {
    out << j.dump(2) << "\n";
}

inline void emit_report(const nlohmann::ordered_json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_report: cannot open " + path);
    emit_report(j, out);
    if (!out) throw std::runtime_error("emit_report: write failed for " + path);
}

}  // namespace jumpcode

#endif  // JUMPCODE_REPORT_IO_HPP
