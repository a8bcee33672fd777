// Copyright 2026 The qcert authors
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
//
// JSON schemas (entries are [re, im] pairs, matrices are lists of rows):
//   channel:       {"dim_in", "dim_out", "kraus": [matrix, ...]}
//   decomposition: {"dim_A", "dim_B", "embed": matrix}
//   isometry:      {"dim_in", "dim_out", "dim_env", "v": matrix}
//   scheme:        {"k", "n", "secret_dim", "share_dims", "encoder": matrix}
//   basis:         [vector, ...] (column vectors of a subspace embedding)

#pragma once

#include <string>

#include "qcert/secret_sharing.hpp"
#include "qcert/stinespring.hpp"

namespace qcert {

// Malformed input files (maps to CLI exit code 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

KrausChannel channel_from_json(const std::string& text);
std::string channel_to_json(const KrausChannel& c);
KrausChannel load_channel(const std::string& path);
void save_channel(const std::string& path, const KrausChannel& c);

SubsystemDecomposition decomposition_from_json(const std::string& text);
std::string decomposition_to_json(const SubsystemDecomposition& d);
SubsystemDecomposition load_decomposition(const std::string& path);

StinespringIsometry isometry_from_json(const std::string& text);
std::string isometry_to_json(const StinespringIsometry& v);

ThresholdScheme scheme_from_json(const std::string& text);
std::string scheme_to_json(const ThresholdScheme& s);
ThresholdScheme load_scheme(const std::string& path);
void save_scheme(const std::string& path, const ThresholdScheme& s);

// Basis-vector list for the dim_A = 1 subspace case.
SubsystemDecomposition load_subspace_basis(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qcert
