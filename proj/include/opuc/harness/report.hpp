// Copyright 2026-present the opuc project
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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "opuc/roots.hpp"

namespace opuc::harness {

inline constexpr const char* kReportSchema = "opuc.report/1";

/// Shortest form with at most 17 significant digits, '.' decimal point,
/// independent of the locale. Non-finite values print as nan, inf, -inf.
std::string format_number(double v);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);
    void add_row(std::vector<std::string> cells);
    std::size_t rows() const { return rows_.size(); }
    std::string str() const;
    void write(const std::filesystem::path& path) const;

    static std::string num(double v) { return format_number(v); }
    static std::string num(std::size_t v) { return std::to_string(v); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Columns n, index, re, im, modulus, argument.
CsvTable zeros_table(std::size_t n, const ZeroSet& zeros);
void append_zeros(CsvTable& table, std::size_t n, const ZeroSet& zeros);

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

/// Writes the whole string, creating parent directories; throws Errc::io.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace opuc::harness
