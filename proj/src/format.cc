// Copyright 2026 The Photonmesh Authors
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

#include "photonmesh/format.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace photonmesh {

std::string format_number(double x) {
    if (x == 0) {
        return "0";
    }
    char buf[64];
    if (std::abs(x) < 1e-4) {
        std::snprintf(buf, sizeof(buf), "%.14e", x);
    } else {
        std::snprintf(buf, sizeof(buf), "%.15g", x);
    }
    return buf;
}

double round_to_printed(double x) {
    return std::strtod(format_number(x).c_str(), nullptr);
}

}  // namespace photonmesh
