// SPDX-License-Identifier: Apache-2.0
//
// widebeam: array-factor beam widening and patch antenna radiation models
// Copyright (C) 2026 The widebeam authors
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

#include "widebeam/array_synthesis.hpp"
#include "widebeam/far_field_pattern.hpp"
#include "widebeam/magnetic_currents.hpp"
#include "widebeam/patch_geometry.hpp"
#include "widebeam/pattern_cut.hpp"
#include "widebeam/pattern_metrics.hpp"

#include "json.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace widebeam::io {

/// Malformed input file. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error
{
  public:
    ParseError(std::string source, std::size_t line, const std::string &what);

    const std::string &source() const { return source_; }
    std::size_t line() const { return line_; }

  private:
    std::string source_;
    std::size_t line_;
};

/// Numbers in text outputs: 12 significant digits, '.' decimal separator.
std::string format_number(double v);

std::string read_text_file(const std::filesystem::path &path);
/// Writes with '\n' line endings, creating parent directories.
void write_text_file(const std::filesystem::path &path, std::string_view content);

// Far-field pattern CSV: theta_deg,phi_deg,re_etheta,im_etheta,re_ephi,im_ephi
void write_pattern_csv(std::ostream &os, const FarFieldPattern &p);
FarFieldPattern read_pattern_csv(std::istream &is, const std::string &source = "<pattern>");

// Ludwig-3 cut CSV: '# phi_deg=<v>' comment line, then theta_deg,l3h_db,l3v_db
void write_cut_csv(std::ostream &os, const PatternCut &cut);
PatternCut read_cut_csv(std::istream &is, const std::string &source = "<cut>");

// JSON documents
nlohmann::json to_json(const ArrayExcitation &exc);
ArrayExcitation excitation_from_json(const nlohmann::json &j, const std::string &source = "<excitation>");

nlohmann::json to_json(const PatchGeometry &g);
PatchGeometry geometry_from_json(const nlohmann::json &j, const std::string &source = "<geometry>");

/// List of {x, y, ux, uy, re_amp, im_amp, length}. The frequency is not part of the file.
nlohmann::json to_json(const MagneticCurrentSet &set);
MagneticCurrentSet currents_from_json(const nlohmann::json &j, double frequency_hz,
                                      const std::string &source = "<currents>");

nlohmann::json to_json(const PatternMetrics &m);
nlohmann::json to_json(const CutComparison &c);

/// Parse JSON text, mapping syntax errors to ParseError with the offending line.
nlohmann::json parse_json(std::string_view text, const std::string &source);

/// Two-column key,value CSV rendering of a flat JSON object.
std::string flat_json_to_csv(const nlohmann::json &j);

// Path convenience wrappers
FarFieldPattern load_pattern(const std::filesystem::path &path);
PatternCut load_cut(const std::filesystem::path &path);
ArrayExcitation load_excitation(const std::filesystem::path &path);
PatchGeometry load_geometry(const std::filesystem::path &path);

} // namespace widebeam::io
