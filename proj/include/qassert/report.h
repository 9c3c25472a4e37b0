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

#ifndef QASSERT_REPORT_H
#define QASSERT_REPORT_H

#include <optional>
#include <string>
#include <vector>

#include "qassert/runner.h"

namespace qassert {

enum class ReportFormat { Table, Json };

/// Run parameters echoed into reports.
struct RunMetadata {
    std::string circuit_name;
    uint64_t seed = 0;
    std::optional<NoiseModel> noise;
    std::vector<std::string> expected;
    bool postselected_view = false;
};

/// `value` as a percentage with 4 significant digits, e.g. 0.938 -> "93.80%".
std::string format_percent(double value);

/// Table: one row per observed bitstring (count, percentage, meaning), then a
/// filter section when `report` is given. Json: counts, assertion failures,
/// rates, seed and noise settings; output is byte-stable for equal inputs.
std::string render_report(const RunStatistics &stats, const std::optional<FilterReport> &report, ReportFormat format,
                          const RunMetadata &meta = {});

}  // namespace qassert

#endif
