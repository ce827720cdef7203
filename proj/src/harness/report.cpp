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

#include "opuc/harness/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace opuc::harness {

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw Error(Errc::invalid_parameter, "CSV row width does not match the header");
    }
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += cells[i];
        }
        out += '\n';
    };
    line(header_);
    for (const auto& r : rows_) {
        line(r);
    }
    return out;
}

void CsvTable::write(const std::filesystem::path& path) const { write_text_file(path, str()); }

void append_zeros(CsvTable& t, std::size_t n, const ZeroSet& zs) {
    for (std::size_t i = 0; i < zs.size(); ++i) {
        t.add_row({CsvTable::num(n), CsvTable::num(i), CsvTable::num(zs.zeros[i].real()),
                   CsvTable::num(zs.zeros[i].imag()), CsvTable::num(zs.modulus(i)),
                   CsvTable::num(zs.argument(i))});
    }
}

CsvTable zeros_table(std::size_t n, const ZeroSet& zs) {
    CsvTable t({"n", "index", "re", "im", "modulus", "argument"});
    append_zeros(t, n, zs);
    return t;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw Error(Errc::io, "cannot create " + path.parent_path().string() + ": " +
                                      ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) {
        throw Error(Errc::io, "cannot write " + path.string());
    }
}

}  // namespace opuc::harness
