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

#ifndef DIPOLEFADE_TOOLS_COMPLEX_ARG_HPP
#define DIPOLEFADE_TOOLS_COMPLEX_ARG_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfcli {

inline double parse_real(const std::string &text) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used])))
        ++used;
    if (used != text.size())
        throw std::invalid_argument("trailing characters in number: '" + text + "'");
    return v;
}

/// Complex flag value: "re,im", polar "mag∠phase" (or ASCII "mag@phase",
/// phase in radians), or a bare real.
inline std::complex<double> parse_complex(const std::string &text) {
    if (text.empty()) throw std::invalid_argument("empty complex value");

    const std::size_t comma = text.find(',');
    if (comma != std::string::npos) {
        return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
    }

    static const std::string kAngleUtf8 = "∠"; // the angle sign
    std::size_t split = text.find(kAngleUtf8);
    std::size_t skip = kAngleUtf8.size();
    if (split == std::string::npos) {
        split = text.find('@');
        skip = 1;
    }
    if (split != std::string::npos) {
        const double mag = parse_real(text.substr(0, split));
        const double phase = parse_real(text.substr(split + skip));
        return std::polar(mag, phase);
    }

    return {parse_real(text), 0.0};
}

} // namespace dfcli

#endif // DIPOLEFADE_TOOLS_COMPLEX_ARG_HPP
