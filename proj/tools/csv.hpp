// SPDX-License-Identifier: Apache-2.0
//
// dipolefade - channel statistics of randomly oriented dipole links
// Copyright (C) 2026 The dipolefade authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Minimal RFC-4180-style CSV emission with '#'-prefixed metadata comment
// lines. All numeric formatting is fixed ("%.17g") so identical runs yield
// byte-identical files.

#ifndef DIPOLEFADE_TOOLS_CSV_HPP
#define DIPOLEFADE_TOOLS_CSV_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dfcli {

// Shortest representation that round-trips exactly; deterministic.
inline std::string fmt_double(double v) {
    char buf[40];
    for (int precision : {15, 16, 17}) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

class CsvWriter {
  public:
    void comment(std::string_view text) {
        buffer_ += "# ";
        buffer_ += text;
        buffer_ += '\n';
    }

    void header(const std::vector<std::string> &columns) { append_fields(columns); }

    void row(std::initializer_list<double> values) {
        std::string line;
        for (double v : values) {
            if (!line.empty()) line += ',';
            line += fmt_double(v);
        }
        buffer_ += line;
        buffer_ += '\n';
    }

    void row(const std::vector<std::string> &fields) { append_fields(fields); }

    const std::string &str() const { return buffer_; }

    /// Write to a file path, or to stdout when path is "-".
    void flush_to(const std::string &path) const {
        if (path == "-" || path.empty()) {
            std::cout << buffer_;
            std::cout.flush();
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << buffer_;
    }

  private:
    void append_fields(const std::vector<std::string> &fields) {
        std::string line;
        for (const std::string &f : fields) {
            if (!line.empty()) line += ',';
            line += csv_field(f);
        }
        buffer_ += line;
        buffer_ += '\n';
    }

    std::string buffer_;
};

} // namespace dfcli

#endif // DIPOLEFADE_TOOLS_CSV_HPP
