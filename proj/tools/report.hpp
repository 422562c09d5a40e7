// Copyright 2026 The Frobenia Authors
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

#ifndef FROBENIA_TOOLS_REPORT_HPP
#define FROBENIA_TOOLS_REPORT_HPP

#include <filesystem>
#include <string>

#include "frobenia/check.hpp"
#include "io.hpp"

namespace frobenia::cli {

using io::Json;

enum class Status { ok, refuted, error };

const char* to_string(Status s);
int exit_code(Status s);

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
    Status status = Status::ok;

    /// Records the file and its SHA-256 under inputs.files.
    void add_file(const std::filesystem::path& path);
    void add_parameter(const std::string& key, Json value);
    /// Downgrades ok to refuted.
    void refute() { status = status == Status::error ? status : Status::refuted; }

    Json to_json() const;
};

std::string sha256_file(const std::filesystem::path& path);

Json check_json(const IdentityCheck& c);

} // namespace frobenia::cli

#endif
