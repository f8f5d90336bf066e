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

#include "widebeam/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace widebeam::io {

namespace {

constexpr std::string_view kPatternHeader = "theta_deg,phi_deg,re_etheta,im_etheta,re_ephi,im_ephi";
constexpr std::string_view kCutHeader = "theta_deg,l3h_db,l3v_db";

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::optional<double> parse_double(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::vector<double> parse_row(std::string_view line, std::size_t columns, const std::string &source,
                               std::size_t line_no)
{
    std::vector<double> out;
    out.reserve(columns);
    std::size_t start = 0;
    while (true)
    {
        const std::size_t comma = line.find(',', start);
        const std::string_view field = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
        const auto v = parse_double(field);
        if (!v)
            throw ParseError(source, line_no, "invalid number '" + std::string(trim(field)) + "'");
        out.push_back(*v);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (out.size() != columns)
        throw ParseError(source, line_no, fmt::format("expected {} columns, found {}", columns, out.size()));
    return out;
}

/// Line-oriented CSV reader: '#' comments collected as key=value, one header, data rows.
struct CsvContent
{
    std::map<std::string, std::pair<std::string, std::size_t>> comments; // key -> (value, line)
    std::vector<std::pair<std::size_t, std::vector<double>>> rows;
};

CsvContent read_csv(std::istream &is, std::string_view header, std::size_t columns, const std::string &source)
{
    CsvContent content;
    bool have_header = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw))
    {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '#')
        {
            const std::string_view body = trim(line.substr(1));
            const std::size_t eq = body.find('=');
            if (eq != std::string_view::npos)
                content.comments[std::string(trim(body.substr(0, eq)))] = {std::string(trim(body.substr(eq + 1))),
                                                                           line_no};
            continue;
        }
        if (!have_header)
        {
            if (line != header)
                throw ParseError(source, line_no, "expected header '" + std::string(header) + "'");
            have_header = true;
            continue;
        }
        content.rows.emplace_back(line_no, parse_row(line, columns, source, line_no));
    }
    if (!have_header)
        throw ParseError(source, line_no, "missing header '" + std::string(header) + "'");
    if (content.rows.empty())
        throw ParseError(source, line_no, "no data rows");
    return content;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

double require_number(const nlohmann::json &j, const char *key, const std::string &source)
{
    if (!j.contains(key))
        throw ParseError(source, 0, std::string("missing key '") + key + "'");
    const auto &v = j.at(key);
    if (!v.is_number())
        throw ParseError(source, 0, std::string("key '") + key + "' must be a number");
    return v.get<double>();
}

template <typename F>
auto rethrow_invalid(const std::string &source, F &&f)
{
    try
    {
        return f();
    }
    catch (const std::invalid_argument &e)
    {
        throw ParseError(source, 0, e.what());
    }
}

void flatten(const nlohmann::json &j, const std::string &prefix, std::string &out)
{
    for (auto it = j.begin(); it != j.end(); ++it)
    {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object())
            flatten(*it, key, out);
        else if (it->is_number_float())
            out += key + "," + format_number(it->get<double>()) + "\n";
        else if (it->is_string())
        {
            std::string s = it->get<std::string>();
            if (s.find_first_of(",\"") != std::string::npos)
            {
                std::string quoted = "\"";
                for (char c : s)
                    quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
                s = quoted + "\"";
            }
            out += key + "," + s + "\n";
        }
        else
            out += key + "," + it->dump() + "\n";
    }
}

} // namespace

ParseError::ParseError(std::string source, std::size_t line, const std::string &what)
    : std::runtime_error(line ? fmt::format("{}:{}: {}", source, line, what) : fmt::format("{}: {}", source, what)),
      source_(std::move(source)), line_(line)
{
}

std::string format_number(double v)
{
    if (v == 0.0)
        v = 0.0; // drop the sign of negative zero
    return fmt::format("{:.12g}", v);
}

std::string read_text_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path.string(), 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view content)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

void write_pattern_csv(std::ostream &os, const FarFieldPattern &p)
{
    const auto &grid = p.grid();
    os << "# domain=" << to_string(grid.domain()) << '\n';
    if (p.frequency_hz())
        os << "# frequency_hz=" << format_number(*p.frequency_hz()) << '\n';
    os << "# convention=" << ludwig3_convention << '\n';
    os << kPatternHeader << '\n';
    for (std::size_t it = 0; it < grid.theta_count(); ++it)
        for (std::size_t ip = 0; ip < grid.phi_count(); ++ip)
        {
            const std::size_t i = grid.index(it, ip);
            os << format_number(rad_to_deg(grid.theta()[it])) << ',' << format_number(rad_to_deg(grid.phi()[ip]))
               << ',' << format_number(p.e_theta()[i].real()) << ',' << format_number(p.e_theta()[i].imag())
               << ',' << format_number(p.e_phi()[i].real()) << ',' << format_number(p.e_phi()[i].imag()) << '\n';
        }
}

FarFieldPattern read_pattern_csv(std::istream &is, const std::string &source)
{
    const CsvContent csv = read_csv(is, kPatternHeader, 6, source);

    std::vector<double> theta_deg, phi_deg;
    for (const auto &[line, row] : csv.rows)
    {
        theta_deg.push_back(row[0]);
        phi_deg.push_back(row[1]);
    }
    auto unique_sorted = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    theta_deg = unique_sorted(std::move(theta_deg));
    phi_deg = unique_sorted(std::move(phi_deg));

    if (csv.rows.size() != theta_deg.size() * phi_deg.size())
        throw ParseError(source, 0,
                         fmt::format("{} rows do not form a full {} x {} theta/phi grid", csv.rows.size(),
                                     theta_deg.size(), phi_deg.size()));

    Domain domain = theta_deg.back() <= 90.0 + 1e-9 ? Domain::upper_hemisphere : Domain::full_sphere;
    if (const auto it = csv.comments.find("domain"); it != csv.comments.end())
    {
        try
        {
            domain = domain_from_string(it->second.first);
        }
        catch (const std::invalid_argument &e)
        {
            throw ParseError(source, it->second.second, e.what());
        }
    }
    std::optional<double> frequency;
    if (const auto it = csv.comments.find("frequency_hz"); it != csv.comments.end())
    {
        frequency = parse_double(it->second.first);
        if (!frequency)
            throw ParseError(source, it->second.second, "invalid frequency_hz");
    }

    std::vector<double> theta(theta_deg.size()), phi(phi_deg.size());
    std::transform(theta_deg.begin(), theta_deg.end(), theta.begin(), deg_to_rad);
    std::transform(phi_deg.begin(), phi_deg.end(), phi.begin(), deg_to_rad);
    AngularGrid grid = rethrow_invalid(source, [&] { return AngularGrid(theta, phi, domain); });

    std::vector<Complex> et(grid.size()), ep(grid.size());
    std::vector<bool> seen(grid.size(), false);
    for (const auto &[line, row] : csv.rows)
    {
        const auto it = static_cast<std::size_t>(std::lower_bound(theta_deg.begin(), theta_deg.end(), row[0]) -
                                                  theta_deg.begin());
        const auto ip =
            static_cast<std::size_t>(std::lower_bound(phi_deg.begin(), phi_deg.end(), row[1]) - phi_deg.begin());
        const std::size_t i = grid.index(it, ip);
        if (seen[i])
            throw ParseError(source, line, "duplicate grid point");
        seen[i] = true;
        et[i] = {row[2], row[3]};
        ep[i] = {row[4], row[5]};
    }
    return rethrow_invalid(source, [&] { return FarFieldPattern(grid, std::move(et), std::move(ep), frequency); });
}

void write_cut_csv(std::ostream &os, const PatternCut &cut)
{
    cut.validate();
    os << "# phi_deg=" << format_number(rad_to_deg(cut.phi_plane)) << '\n';
    os << "# convention=" << ludwig3_convention << '\n';
    os << "# normalization=" << format_number(cut.normalization) << '\n';
    os << kCutHeader << '\n';
    for (std::size_t i = 0; i < cut.theta_deg.size(); ++i)
        os << format_number(cut.theta_deg[i]) << ',' << format_number(cut.l3h_db[i]) << ','
           << format_number(cut.l3v_db[i]) << '\n';
}

PatternCut read_cut_csv(std::istream &is, const std::string &source)
{
    const CsvContent csv = read_csv(is, kCutHeader, 3, source);
    const auto phi_it = csv.comments.find("phi_deg");
    if (phi_it == csv.comments.end())
        throw ParseError(source, 0, "missing '# phi_deg=<value>' comment line");
    const auto phi = parse_double(phi_it->second.first);
    if (!phi)
        throw ParseError(source, phi_it->second.second, "invalid phi_deg value");

    PatternCut cut;
    cut.phi_plane = deg_to_rad(*phi);
    if (const auto it = csv.comments.find("normalization"); it != csv.comments.end())
    {
        const auto v = parse_double(it->second.first);
        if (!v)
            throw ParseError(source, it->second.second, "invalid normalization value");
        cut.normalization = *v;
    }
    for (const auto &[line, row] : csv.rows)
    {
        if (!cut.theta_deg.empty() && !(row[0] > cut.theta_deg.back()))
            throw ParseError(source, line, "theta_deg must be strictly increasing");
        cut.theta_deg.push_back(row[0]);
        cut.l3h_db.push_back(row[1]);
        cut.l3v_db.push_back(row[2]);
    }
    return cut;
}

nlohmann::json to_json(const ArrayExcitation &exc)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Complex &c : exc.coefficients)
        coeffs.push_back({c.real(), c.imag()});
    return {{"m_max", exc.m_max}, {"spacing_over_lambda", exc.spacing_over_lambda}, {"coefficients", coeffs}};
}

ArrayExcitation excitation_from_json(const nlohmann::json &j, const std::string &source)
{
    if (!j.is_object())
        throw ParseError(source, 0, "excitation must be a JSON object");
    if (!j.contains("m_max") || !j.at("m_max").is_number_integer())
        throw ParseError(source, 0, "key 'm_max' must be an integer");
    if (!j.contains("coefficients") || !j.at("coefficients").is_array())
        throw ParseError(source, 0, "key 'coefficients' must be an array");

    ArrayExcitation exc;
    exc.m_max = j.at("m_max").get<int>();
    exc.spacing_over_lambda = require_number(j, "spacing_over_lambda", source);
    exc.coefficients.clear();
    for (const auto &c : j.at("coefficients"))
    {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
            throw ParseError(source, 0, "each coefficient must be a [re, im] pair");
        exc.coefficients.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    rethrow_invalid(source, [&] {
        exc.validate();
        return 0;
    });
    return exc;
}

nlohmann::json to_json(const PatchGeometry &g)
{
    return {{"l_p", g.l_p},     {"w_p", g.w_p}, {"l_par", g.l_par}, {"w_par", g.w_par},
            {"w_g", g.w_g},     {"h", g.h},     {"eps_r", g.eps_r}, {"tan_delta", g.tan_delta}};
}

PatchGeometry geometry_from_json(const nlohmann::json &j, const std::string &source)
{
    if (!j.is_object())
        throw ParseError(source, 0, "geometry must be a JSON object");
    PatchGeometry g;
    g.l_p = require_number(j, "l_p", source);
    g.w_p = require_number(j, "w_p", source);
    g.l_par = require_number(j, "l_par", source);
    g.w_par = require_number(j, "w_par", source);
    g.w_g = require_number(j, "w_g", source);
    g.h = require_number(j, "h", source);
    g.eps_r = require_number(j, "eps_r", source);
    g.tan_delta = j.contains("tan_delta") ? require_number(j, "tan_delta", source) : 0.0;
    rethrow_invalid(source, [&] {
        g.validate();
        return 0;
    });
    return g;
}

nlohmann::json to_json(const MagneticCurrentSet &set)
{
    nlohmann::json out = nlohmann::json::array();
    for (const MagneticCurrent &e : set.elements)
        out.push_back({{"x", e.x},
                       {"y", e.y},
                       {"ux", e.ux},
                       {"uy", e.uy},
                       {"re_amp", e.amplitude.real()},
                       {"im_amp", e.amplitude.imag()},
                       {"length", e.length}});
    return out;
}

MagneticCurrentSet currents_from_json(const nlohmann::json &j, double frequency_hz, const std::string &source)
{
    if (!j.is_array())
        throw ParseError(source, 0, "current set must be a JSON array");
    MagneticCurrentSet set;
    set.frequency_hz = frequency_hz;
    for (const auto &e : j)
    {
        if (!e.is_object())
            throw ParseError(source, 0, "each current must be a JSON object");
        set.elements.push_back({require_number(e, "x", source), require_number(e, "y", source),
                                require_number(e, "ux", source), require_number(e, "uy", source),
                                Complex{require_number(e, "re_amp", source), require_number(e, "im_amp", source)},
                                require_number(e, "length", source)});
    }
    rethrow_invalid(source, [&] {
        set.validate();
        return 0;
    });
    return set;
}

nlohmann::json to_json(const PatternMetrics &m)
{
    return {{"hpbw_deg", m.hpbw_deg},
            {"directivity_dbi", m.directivity_dbi},
            {"peak_theta_deg", m.peak_theta_deg},
            {"peak_phi_deg", m.peak_phi_deg},
            {"hpbw_plane_deg", m.hpbw_plane_deg},
            {"convention", std::string(ludwig3_convention)}};
}

nlohmann::json to_json(const CutComparison &c)
{
    auto pol = [](const PolarizationError &e) {
        return nlohmann::json{{"rms_db", e.rms_db}, {"max_db", e.max_db}, {"samples", e.samples}};
    };
    return {{"rms_db", c.rms_db},
            {"max_db", c.max_db},
            {"theta_min_deg", c.theta_min_deg},
            {"theta_max_deg", c.theta_max_deg},
            {"l3h", pol(c.l3h)},
            {"l3v", pol(c.l3v)},
            {"convention", std::string(ludwig3_convention)}};
}

nlohmann::json parse_json(std::string_view text, const std::string &source)
{
    try
    {
        return nlohmann::json::parse(text.begin(), text.end());
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ParseError(source, line_of_offset(text, e.byte ? e.byte - 1 : 0), "invalid JSON");
    }
}

std::string flat_json_to_csv(const nlohmann::json &j)
{
    std::string out = "key,value\n";
    flatten(j, "", out);
    return out;
}

FarFieldPattern load_pattern(const std::filesystem::path &path)
{
    std::istringstream in(read_text_file(path));
    return read_pattern_csv(in, path.string());
}

PatternCut load_cut(const std::filesystem::path &path)
{
    std::istringstream in(read_text_file(path));
    return read_cut_csv(in, path.string());
}

ArrayExcitation load_excitation(const std::filesystem::path &path)
{
    return excitation_from_json(parse_json(read_text_file(path), path.string()), path.string());
}

PatchGeometry load_geometry(const std::filesystem::path &path)
{
    return geometry_from_json(parse_json(read_text_file(path), path.string()), path.string());
}

} // namespace widebeam::io
