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

#include "qcpu/network_export.hpp"

#include <cstdio>
#include <sstream>

namespace qcpu {
namespace {

std::string format_complex(cplx value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.15g%+.15gi", value.real(),
                  value.imag());
    return buffer;
}

std::string factor_label(const QcpuFactor &f) {
    std::ostringstream out;
    out << "(" << f.m << ", " << f.n << ", " << format_complex(f.coeff) << ")";
    return out.str();
}

void dot_factor_nodes(std::ostringstream &out, const QcpuNetwork &net,
                      const std::string &id_prefix, const std::string &indent) {
    std::string previous;
    for (const auto &f : net.factors()) {
        const std::string id =
            id_prefix + "f_" + std::to_string(f.m) + "_" + std::to_string(f.n);
        out << indent << id << " [shape=box, label=\"" << factor_label(f)
            << "\"];\n";
        if (!previous.empty())
            out << indent << previous << " -> " << id << ";\n";
        previous = id;
    }
}

std::string connector_label(TraceStep::Kind kind) {
    return kind == TraceStep::Kind::ConnectorRaise ? "C†" : "C";
}

} // namespace

ExportFormat parse_export_format(const std::string &name) {
    if (name == "text")
        return ExportFormat::Text;
    if (name == "dot")
        return ExportFormat::Dot;
    throw FormatError("unknown export format: " + name);
}

std::string export_network(const QcpuNetwork &network, ExportFormat format) {
    std::ostringstream out;
    if (format == ExportFormat::Text) {
        out << "network " << (network.label().empty() ? "Q" : network.label())
            << " [register dim " << network.shape().dim << ", "
            << network.factors().size() << " factors]\n";
        for (const auto &f : network.factors())
            out << "  factor " << factor_label(f) << "\n";
        return out.str();
    }
    out << "digraph network {\n  rankdir=LR;\n";
    if (!network.label().empty())
        out << "  label=\"" << network.label() << "\";\n";
    dot_factor_nodes(out, network, "", "  ");
    out << "}\n";
    return out.str();
}

std::string export_network(const ComposedNetwork &network,
                           ExportFormat format) {
    const auto &trace = network.trace();
    if (format == ExportFormat::Text) {
        std::ostringstream out;
        out << "composed network [register dim " << network.shape().dim
            << "]\napplication order:\n";
        for (const auto &step : trace) {
            if (step.kind == TraceStep::Kind::Block)
                out << "  Q[" << step.label << "]\n";
            else
                out << "  " << connector_label(step.kind) << "\n";
        }
        return out.str();
    }
    std::ostringstream out;
    out << "digraph network {\n  rankdir=LR;\n";
    std::string previous;
    int connector_count = 0;
    for (const auto &step : trace) {
        std::string id;
        if (step.kind == TraceStep::Kind::Block) {
            id = "q_" + std::to_string(step.block_index);
            out << "  " << id << " [shape=box3d, label=\"Q[" << step.label
                << "]\"];\n";
        } else {
            id = "conn_" + std::to_string(connector_count++);
            out << "  " << id << " [shape=circle, label=\""
                << connector_label(step.kind) << "\"];\n";
        }
        if (!previous.empty())
            out << "  " << previous << " -> " << id << ";\n";
        previous = id;
    }
    out << "}\n";
    return out.str();
}

std::string export_network(const ScalableNetwork &network,
                           ExportFormat format) {
    if (format == ExportFormat::Text) {
        std::ostringstream out;
        out << "scalable network [input dim " << network.input_dim()
            << " (identity), out chain below]\n"
            << export_network(network.chain(), format);
        return out.str();
    }
    return export_network(network.chain(), format);
}

} // namespace qcpu
