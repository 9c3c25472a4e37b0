// Copyright 2026 The qassert Authors
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

#include "qassert/report.h"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qassert {

namespace {

std::string row_meaning(const RunStatistics &stats, const std::string &bits, const std::set<std::string> &expected) {
    std::vector<std::string> parts;
    auto assert_pos = stats.assertion_positions();
    if (!assert_pos.empty()) {
        std::string failed;
        for (size_t k : assert_pos) {
            if (bits[k] == '1') {
                failed += (failed.empty() ? "" : ", ") + stats.creg_names[k].substr(kAssertCregPrefix.size());
            }
        }
        parts.push_back(failed.empty() ? "no assertion error" : "assertion error (" + failed + ")");
    }
    if (!expected.empty()) {
        parts.push_back(expected.contains(stats.data_bits(bits)) ? "expected" : "unexpected");
    }
    std::string out;
    for (const auto &p : parts) {
        out += (out.empty() ? "" : ", ") + p;
    }
    return out;
}

std::string render_table(const RunStatistics &stats, const std::optional<FilterReport> &report,
                         const RunMetadata &meta) {
    std::ostringstream out;
    if (!meta.circuit_name.empty()) {
        out << "circuit: " << meta.circuit_name << "\n";
    }
    out << "shots: " << stats.total_shots << "  seed: " << meta.seed;
    if (meta.noise) {
        out << "  gate-p: " << meta.noise->gate_flip_p << "  readout-p: " << meta.noise->readout_flip_p
            << (meta.noise->depolarizing ? "  depolarizing" : "");
    }
    out << "\n";
    out << "cregs (left to right):";
    for (const auto &name : stats.creg_names) {
        out << " " << name;
    }
    out << "\n";
    if (meta.postselected_view) {
        out << "post-selected: only shots passing every assertion\n";
    }
    out << "\n";

    std::set<std::string> expected(meta.expected.begin(), meta.expected.end());
    size_t width = std::max<size_t>(4, stats.creg_names.size());
    out << std::left << std::setw(static_cast<int>(width)) << "bits" << "  " << std::right << std::setw(10) << "count"
        << "  " << std::setw(8) << "%" << "  meaning\n";
    for (const auto &[bits, n] : stats.counts) {
        double frac = stats.total_shots ? static_cast<double>(n) / static_cast<double>(stats.total_shots) : 0.0;
        out << std::left << std::setw(static_cast<int>(width)) << bits << "  " << std::right << std::setw(10) << n
            << "  " << std::setw(8) << format_percent(frac) << "  " << row_meaning(stats, bits, expected) << "\n";
    }

    if (!stats.assertion_fail_counts.empty()) {
        out << "\nassertion failures:\n";
        for (const auto &[label, n] : stats.assertion_fail_counts) {
            double frac = stats.total_shots ? static_cast<double>(n) / static_cast<double>(stats.total_shots) : 0.0;
            out << "  " << label << ": " << n << " (" << format_percent(frac) << ")\n";
        }
    }
    if (report) {
        auto opt = [](const std::optional<double> &v) { return v ? format_percent(*v) : std::string("undefined"); };
        out << "\nfilter report:\n";
        out << "  raw error rate:      " << format_percent(report->raw_error_rate) << "\n";
        out << "  filtered error rate: " << opt(report->filtered_error_rate) << "\n";
        out << "  relative reduction:  " << opt(report->relative_reduction) << "\n";
        out << "  kept fraction:       " << format_percent(report->kept_fraction) << " (" << report->kept_shots
            << " shots)\n";
    }
    return out.str();
}

std::string render_json(const RunStatistics &stats, const std::optional<FilterReport> &report,
                        const RunMetadata &meta) {
    using nlohmann::json;
    json doc;
    doc["circuit"] = meta.circuit_name;
    doc["shots"] = stats.total_shots;
    doc["seed"] = meta.seed;
    doc["postselected"] = meta.postselected_view;
    if (meta.noise) {
        doc["noise"] = {{"gate_flip_p", meta.noise->gate_flip_p},
                        {"readout_flip_p", meta.noise->readout_flip_p},
                        {"depolarizing", meta.noise->depolarizing}};
    } else {
        doc["noise"] = nullptr;
    }
    doc["cregs"] = stats.creg_names;
    doc["expected"] = meta.expected;
    doc["counts"] = json::object();
    for (const auto &[bits, n] : stats.counts) {
        doc["counts"][bits] = n;
    }
    doc["assertion_failures"] = json::object();
    for (const auto &[label, n] : stats.assertion_fail_counts) {
        doc["assertion_failures"][label] = n;
    }
    if (report) {
        auto opt = [](const std::optional<double> &v) { return v ? json(*v) : json(nullptr); };
        doc["filter"] = {{"raw_error_rate", report->raw_error_rate},
                         {"filtered_error_rate", opt(report->filtered_error_rate)},
                         {"relative_reduction", opt(report->relative_reduction)},
                         {"kept_fraction", report->kept_fraction},
                         {"kept_shots", report->kept_shots}};
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::string format_percent(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%#.4g%%", value * 100.0);
    return buf;
}

std::string render_report(const RunStatistics &stats, const std::optional<FilterReport> &report, ReportFormat format,
                          const RunMetadata &meta) {
    if (format == ReportFormat::Json) {
        return render_json(stats, report, meta);
    }
    return render_table(stats, report, meta);
}

}  // namespace qassert
