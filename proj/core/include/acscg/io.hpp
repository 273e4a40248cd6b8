// Copyright 2026 The acscg Authors
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

#ifndef ACSCG_IO_HPP
#define ACSCG_IO_HPP

#include <string>

#include "acscg/game.hpp"

namespace acscg {

// JSON game-spec documents. Closed-form content only: theta-family kernels,
// linear/affine coupling, zero/log-affine penalties, or a catalog reference
// (name + parameters) for instances whose kernels or coupling are function
// handles. Handle-backed games without a catalog reference cannot be saved.
//
// load_game validates the reconstructed instance and throws InvalidGameError
// listing the failed invariant or the malformed field. Numbers round-trip
// bit-exactly.
GameSpec load_game(const std::string& path);
void save_game(const GameSpec& game, const std::string& path);

std::string game_to_json_text(const GameSpec& game);
GameSpec game_from_json_text(const std::string& text);

}  // namespace acscg

#endif  // ACSCG_IO_HPP
