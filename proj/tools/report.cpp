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

#include "report.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include <openssl/evp.h>

namespace frobenia::cli {

const char* to_string(Status s)
{
    switch (s) {
    case Status::ok:
        return "ok";
    case Status::refuted:
        return "refuted";
    case Status::error:
        return "error";
    }
    return "error";
}

int exit_code(Status s)
{
    switch (s) {
    case Status::ok:
        return 0;
    case Status::refuted:
        return 1;
    case Status::error:
        return 2;
    }
    return 2;
}

std::string sha256_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io::IoError(path.string(), "cannot open file");
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 initialization failed");
    std::array<char, 1 << 14> buf{};
    while (in) {
        in.read(buf.data(), buf.size());
        if (in.gcount() > 0)
            EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

void Report::add_file(const std::filesystem::path& path)
{
    if (!inputs.contains("files"))
        inputs["files"] = Json::array();
    inputs["files"].push_back({{"path", path.string()}, {"sha256", sha256_file(path)}});
}

void Report::add_parameter(const std::string& key, Json value)
{
    inputs["parameters"][key] = std::move(value);
}

Json Report::to_json() const
{
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["status"] = to_string(status);
    j["exact"] = true;
    return j;
}

Json check_json(const IdentityCheck& c)
{
    Json j;
    j["passed"] = c.passed;
    if (!c.passed) {
        j["where"] = c.where;
        j["witness"] = c.witness ? io::element_json(*c.witness) : Json();
    }
    return j;
}

} // namespace frobenia::cli
