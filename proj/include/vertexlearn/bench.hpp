// Copyright (c) the vertexlearn contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vertexlearn {

/// Suite names accepted by run_bench.
std::vector<std::string> bench_suites();

/// Write one deterministic CSV report. Row order is fixed by the input grid,
/// never by timing. Unknown suite names raise UsageError.
void run_bench(const std::string& suite, std::ostream& out);

}  // namespace vertexlearn
