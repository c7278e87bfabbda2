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

#include "qcpu/report.hpp"

#include "qcpu/errors.hpp"

#include <cstdio>
#include <fstream>

namespace qcpu {
namespace {

std::string format_double(double d) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.15g", d);
    return buffer;
}

void write_escaped(std::string &out, const std::string &s) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buffer[8];
                std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
                out += buffer;
            } else {
                out += c;
            }
        }
    }
    out += '"';
}

void write_indent(std::string &out, int indent) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
}

} // namespace

void JsonValue::write(std::string &out, int indent) const {
    if (std::holds_alternative<std::nullptr_t>(value_)) {
        out += "null";
    } else if (const bool *b = std::get_if<bool>(&value_)) {
        out += *b ? "true" : "false";
    } else if (const std::int64_t *i = std::get_if<std::int64_t>(&value_)) {
        out += std::to_string(*i);
    } else if (const double *d = std::get_if<double>(&value_)) {
        out += format_double(*d);
    } else if (const std::string *s = std::get_if<std::string>(&value_)) {
        write_escaped(out, *s);
    } else if (const Array *a = std::get_if<Array>(&value_)) {
        if (a->empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < a->size(); ++i) {
            write_indent(out, indent + 1);
            (*a)[i].write(out, indent + 1);
            out += (i + 1 < a->size()) ? ",\n" : "\n";
        }
        write_indent(out, indent);
        out += ']';
    } else if (const Object *o = std::get_if<Object>(&value_)) {
        if (o->empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (const auto &[key, value] : *o) {
            write_indent(out, indent + 1);
            write_escaped(out, key);
            out += ": ";
            value.write(out, indent + 1);
            out += (++i < o->size()) ? ",\n" : "\n";
        }
        write_indent(out, indent);
        out += '}';
    }
}

std::string JsonValue::dump() const {
    std::string out;
    write(out, 0);
    return out;
}

JsonValue RunReport::to_json() const {
    JsonValue::Object root;
    root["algorithm"] = algorithm;
    if (!params.empty())
        root["params"] = params;
    if (seed)
        root["seed"] = *seed;
    if (!amplitudes.empty()) {
        JsonValue::Array amps;
        JsonValue::Object labels;
        for (const auto &[label, value] : amplitudes) {
            amps.push_back(JsonValue::Array{JsonValue(value.real()),
                                            JsonValue(value.imag())});
            labels[label] = static_cast<std::int64_t>(amps.size() - 1);
        }
        root["amplitudes"] = std::move(amps);
        root["amplitude_index"] = std::move(labels);
    }
    if (probabilities) {
        JsonValue::Object probs;
        for (const auto &[index, p] : *probabilities)
            probs[std::to_string(index)] = p;
        root["probabilities"] = std::move(probs);
    }
    if (outcome)
        root["outcome"] = *outcome;
    if (!residuals.empty()) {
        JsonValue::Object res;
        for (const auto &[name, value] : residuals)
            res[name] = value;
        root["residuals"] = std::move(res);
    }
    for (const auto &[key, value] : extras)
        root[key] = value;
    if (wall_time_ms)
        root["wall_time_ms"] = *wall_time_ms;
    return JsonValue(std::move(root));
}

void write_json_file(const JsonValue &value, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open " + path + " for writing");
    out << value.dump() << "\n";
    if (!out)
        throw Error("write failed for " + path);
}

void write_report(const RunReport &report, const std::string &path) {
    write_json_file(report.to_json(), path);
}

} // namespace qcpu
