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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace irs {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// In-memory CSV table. Output is UTF-8 with LF line endings and a leading
/// `#schema=` comment line.
class CsvTable {
public:
    CsvTable(std::string schema, std::vector<std::string> header);

    class Row {
    public:
        Row& operator<<(double v);
        Row& operator<<(std::size_t v);
        Row& operator<<(long v);
        Row& operator<<(std::string_view v);
        ~Row();
        Row(const Row&) = delete;
        Row& operator=(const Row&) = delete;

    private:
        friend class CsvTable;
        explicit Row(CsvTable& table) : table_(table) {}
        void cell(std::string text);
        CsvTable& table_;
        std::vector<std::string> cells_;
    };

    Row row() { return Row(*this); }
    std::size_t row_count() const noexcept { return rows_; }
    std::string str() const { return buffer_; }

    /// Writes to a sibling temp file and renames it into place.
    void write(const std::filesystem::path& path) const;

private:
    std::size_t columns_;
    std::size_t rows_ = 0;
    std::string buffer_;
};

void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace irs
