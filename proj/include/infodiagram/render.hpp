// Copyright 2026 The Infodiagram Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "infodiagram/document.hpp"

namespace infodiagram {

// Static Venn diagram of a two- or three-generator document, one labeled cell
// per atom with its eta to 6 significant digits. Same document, same bytes.
// Throws DomainError for other sizes.
std::string render_svg(const DiagramDocument& doc);

}  // namespace infodiagram
