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

#ifndef PHOTONMESH_FORMAT_H
#define PHOTONMESH_FORMAT_H

#include <string>

namespace photonmesh {

/// 15 significant digits; lowercase scientific notation when 0 < |x| < 1e-4.
/// Negative zero prints as "0".
std::string format_number(double x);

/// The double closest to format_number(x); used for JSON output so that
/// serialized values carry the same 15 digits as text output.
double round_to_printed(double x);

}  // namespace photonmesh

#endif
