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

#ifndef PHOTONMESH_CLI_H
#define PHOTONMESH_CLI_H

#include <ostream>

namespace photonmesh {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitIllegalCascade = 2;
inline constexpr int kExitPlacementOverflow = 3;
inline constexpr int kExitParseError = 4;

/// Entry point of the `photonmesh` tool. Never throws; every failure is
/// reported on `err` and mapped to an exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace photonmesh

#endif
