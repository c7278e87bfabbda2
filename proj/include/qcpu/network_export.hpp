// Copyright 2026 The qcpu Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// Deterministic text and DOT renderings of factor networks.
///
/// DOT node ids: `f_<m>_<n>` for factors (prefixed `q<j>_` inside the j-th
/// block of a composed network) and `conn_<i>` for connectors, numbered in
/// application order. Output is byte-stable across runs.

#pragma once

#include "qcpu/qcpu.hpp"

#include <string>

namespace qcpu {

enum class ExportFormat { Text, Dot };

/// Parses "text" or "dot"; throws FormatError otherwise.
ExportFormat parse_export_format(const std::string &name);

std::string export_network(const QcpuNetwork &network, ExportFormat format);
std::string export_network(const ComposedNetwork &network, ExportFormat format);
std::string export_network(const ScalableNetwork &network, ExportFormat format);

} // namespace qcpu
