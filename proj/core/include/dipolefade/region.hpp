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

#ifndef DIPOLEFADE_REGION_HPP
#define DIPOLEFADE_REGION_HPP

namespace dipolefade {

/// Propagation region of the receiver. Selects which marginal alignment
/// law applies: the near-field law, the far-field law, or (in the
/// transition) the full two-dimensional channel statistics.
enum class RegionKind {
    NearField,
    FarField,
    Transition,
};

inline const char *to_string(RegionKind r) {
    switch (r) {
        case RegionKind::NearField: return "near";
        case RegionKind::FarField: return "far";
        case RegionKind::Transition: return "transition";
    }
    return "?";
}

} // namespace dipolefade

#endif // DIPOLEFADE_REGION_HPP
