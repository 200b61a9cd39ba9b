// Copyright 2026 The oddrank authors.
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
#include <vector>

#include "oddrank/classify.hpp"

namespace oddrank {

/// One row of a reproduced table: a representative state, the family
/// subscripts it must land in, and the signature actually computed.
struct TableRow {
  std::string family;
  std::string state_name;
  std::vector<int> expected;
  std::vector<int> computed;
  bool pass = false;
};

struct TableReport {
  std::string table_id;
  std::string caption;
  std::vector<int> qubits;
  std::vector<TableRow> rows;
  bool all_pass = false;
};

/// Reproduces one of the published family tables from the representative
/// states, in exact-rational mode:
///   "1" - three-qubit partition by the rank w.r.t. each single qubit
///   "3" - three-qubit partition by the ranks w.r.t. qubits 1, 2
///   "4" - three-qubit partition by the ranks w.r.t. qubits 1, 2, 3
///   "5" - the nine five-qubit families over qubits 1, 2
///   "2" - the general-odd-n patterns behind table 5, instantiated at n = 5
/// Throws std::invalid_argument for any other id.
TableReport reproduce_table(const std::string& table_id);

/// Ids accepted by reproduce_table, in display order.
std::vector<std::string> table_catalog();

}  // namespace oddrank
