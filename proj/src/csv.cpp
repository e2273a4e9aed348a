// SPDX-License-Identifier: Apache-2.0
//
// irs-opt: IRS-assisted link power modelling and placement optimization
// Copyright (C) 2026 The irs-opt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irs/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <system_error>

#include "irs/error.hpp"

namespace irs {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

CsvTable::CsvTable(std::string schema, std::vector<std::string> header) : columns_(header.size()) {
    buffer_ = "#schema=" + schema + "\n";
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c) buffer_ += ',';
        buffer_ += header[c];
    }
    buffer_ += '\n';
}

CsvTable::Row& CsvTable::Row::operator<<(double v) {
    cell(format_double(v));
    return *this;
}

CsvTable::Row& CsvTable::Row::operator<<(std::size_t v) {
    cell(std::to_string(v));
    return *this;
}

CsvTable::Row& CsvTable::Row::operator<<(long v) {
    cell(std::to_string(v));
    return *this;
}

CsvTable::Row& CsvTable::Row::operator<<(std::string_view v) {
    cell(std::string(v));
    return *this;
}

void CsvTable::Row::cell(std::string text) { cells_.push_back(std::move(text)); }

CsvTable::Row::~Row() {
    // Incomplete rows are a programming error; pad so the table stays rectangular.
    cells_.resize(table_.columns_);
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        if (c) table_.buffer_ += ',';
        table_.buffer_ += cells_[c];
    }
    table_.buffer_ += '\n';
    ++table_.rows_;
}

void CsvTable::write(const std::filesystem::path& path) const { write_file_atomic(path, buffer_); }

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot rename " + tmp.string() + ": " + ec.message());
}

} // namespace irs
