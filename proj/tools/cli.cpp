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

#include "cli.hpp"

#include "widebeam/array_synthesis.hpp"
#include "widebeam/io.hpp"
#include "widebeam/magnetic_currents.hpp"
#include "widebeam/pattern_cut.hpp"
#include "widebeam/pattern_metrics.hpp"

#include "CLI11.hpp"
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace widebeam::cli {

namespace fs = std::filesystem;

namespace {

struct GlobalOptions
{
    std::string output_dir = ".";
    std::string format = "json";
    double theta_step_deg = 0.25;
    double phi_step_deg = 1.0;
};

struct SynthesizeOptions
{
    std::string element;
    std::string element_column = "total";
    std::string element_reference = "broadside";
    int m_max = 1;
    double spacing = 0.5;
    std::string taper = "fejer";
    double clip_floor = 1e-6;
    std::size_t quadrature_samples = default_quadrature_samples;
};

struct ArrayFactorOptions
{
    std::string excitation;
};

struct PatchOptions
{
    std::string geometry;
    std::string mode = "1";
    double frequency = 36e9;
    std::optional<double> separation;
    std::optional<std::string> mode1_weight;
    std::optional<std::string> mode2_weight;
    std::optional<std::string> array;
};

struct CompareOptions
{
    std::string reference;
    std::string measured;
    double tolerance_db = 1.0;
    double floor_db = -40.0;
};

struct ResonanceArgs
{
    std::vector<std::string> geometry;
    double frequency = 36e9;
};

struct MetricsOptions
{
    std::string pattern;
    std::optional<double> phi_plane_deg;
};

class UsageError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

void write_report(const GlobalOptions &g, const std::string &stem, const nlohmann::json &j)
{
    if (g.format == "csv")
        io::write_text_file(fs::path(g.output_dir) / (stem + ".csv"), io::flat_json_to_csv(j));
    else
        io::write_text_file(fs::path(g.output_dir) / (stem + ".json"), dump(j));
}

std::string power_db_text(double p, double peak)
{
    if (!(p > 0.0) || !(peak > 0.0))
        return io::format_number(db_floor);
    return io::format_number(std::max(db_floor, 10.0 * std::log10(p / peak)));
}

std::size_t theta_count(double range_deg, double step_deg)
{
    const double n = range_deg / step_deg;
    if (!(step_deg > 0.0) || std::abs(n - std::round(n)) > 1e-6 || std::round(n) < 2.0)
        throw UsageError(fmt::format("--theta-step-deg must divide {} evenly", range_deg));
    return static_cast<std::size_t>(std::round(n)) + 1;
}

Complex parse_weight(const std::string &text, const char *flag)
{
    auto number = [&](std::string_view s) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
            throw UsageError(fmt::format("{} expects 're' or 're,im', got '{}'", flag, text));
        return v;
    };
    const std::string_view view(text);
    const std::size_t comma = view.find(',');
    if (comma == std::string_view::npos)
        return {number(view), 0.0};
    return {number(view.substr(0, comma)), number(view.substr(comma + 1))};
}

// Element magnitude C(theta) from a cut file, theta measured from the array axis.
std::function<double(double)> element_from_cut(const SynthesizeOptions &o)
{
    const PatternCut cut = io::load_cut(o.element);
    cut.validate();
    std::vector<std::pair<double, double>> samples; // (axis angle rad, magnitude)
    for (std::size_t i = 0; i < cut.theta_deg.size(); ++i)
    {
        const double h = std::pow(10.0, cut.l3h_db[i] / 20.0);
        const double v = std::pow(10.0, cut.l3v_db[i] / 20.0);
        double mag = 0.0;
        if (o.element_column == "l3h")
            mag = h;
        else if (o.element_column == "l3v")
            mag = v;
        else
            mag = std::hypot(h, v);
        const double angle = o.element_reference == "broadside" ? 90.0 - cut.theta_deg[i] : cut.theta_deg[i];
        samples.emplace_back(deg_to_rad(angle), mag);
    }
    std::sort(samples.begin(), samples.end());

    return [samples](double t) {
        if (t < samples.front().first || t > samples.back().first)
            return 0.0;
        auto hi = std::lower_bound(samples.begin(), samples.end(), std::make_pair(t, -std::numeric_limits<double>::infinity()));
        if (hi == samples.begin())
            return hi->second;
        if (hi == samples.end())
            return samples.back().second;
        const auto lo = hi - 1;
        const double f = (t - lo->first) / (hi->first - lo->first);
        return lo->second + f * (hi->second - lo->second);
    };
}

int cmd_synthesize(const GlobalOptions &g, const SynthesizeOptions &o, std::ostream &diag)
{
    std::function<double(double)> element;
    if (o.element == "sin-theta")
        element = [](double t) { return std::sin(t); };
    else
        element = element_from_cut(o);

    const std::vector<double> nodes = linspace(0.0, pi, o.quadrature_samples);
    std::vector<double> c_nodes(nodes.size());
    std::transform(nodes.begin(), nodes.end(), c_nodes.begin(), element);
    const SynthesisTarget target = SynthesisTarget::inverse_of_element(nodes, c_nodes, o.clip_floor);

    ArrayExcitation exc = synthesize_coefficients(target, o.m_max, o.spacing, o.quadrature_samples);
    if (o.taper == "fejer")
        exc = fejer_taper(exc);

    const AngularGrid grid = AngularGrid::theta_only(0.0, pi, theta_count(180.0, g.theta_step_deg));
    std::vector<double> c_grid(grid.theta_count());
    std::transform(grid.theta().begin(), grid.theta().end(), c_grid.begin(), element);
    const std::vector<double> field = composite_pattern(c_grid, exc, grid);
    std::vector<double> power(field.size());
    std::transform(field.begin(), field.end(), power.begin(), [](double f) { return f * f; });

    const Peak peak = find_peak(grid, power);
    PatternMetrics m;
    m.hpbw_deg = hpbw_deg(grid.theta(), power);
    m.directivity_dbi = directivity_dbi(grid, power);
    m.peak_theta_deg = rad_to_deg(peak.theta);
    m.peak_phi_deg = rad_to_deg(peak.phi);
    m.hpbw_plane_deg = 0.0;

    std::string csv;
    csv += "# element=" + o.element + "\n";
    csv += "# normalization=" + io::format_number(peak.power) + "\n";
    csv += "theta_deg,power,power_db\n";
    for (std::size_t i = 0; i < power.size(); ++i)
        csv += io::format_number(rad_to_deg(grid.theta()[i])) + "," + io::format_number(power[i]) + "," +
               power_db_text(power[i], peak.power) + "\n";

    io::write_text_file(fs::path(g.output_dir) / "excitation.json", dump(io::to_json(exc)));
    io::write_text_file(fs::path(g.output_dir) / "composite.csv", csv);
    write_report(g, "metrics", io::to_json(m));

    diag << fmt::format("synthesize: M={} c_1={} hpbw={:.2f} deg directivity={:.2f} dBi\n", o.m_max,
                        o.m_max > 0 ? io::format_number(exc.coefficient(1).real()) : std::string("n/a"), m.hpbw_deg,
                        m.directivity_dbi);
    return exit_ok;
}

int cmd_array_factor(const GlobalOptions &g, const ArrayFactorOptions &o, std::ostream &diag)
{
    const ArrayExcitation exc = io::load_excitation(o.excitation);
    const AngularGrid grid = AngularGrid::theta_only(0.0, pi, theta_count(180.0, g.theta_step_deg));
    const std::vector<Complex> af = array_factor(exc, grid);

    double peak = 0.0;
    for (const Complex &f : af)
        peak = std::max(peak, std::abs(f));

    std::string csv = "# normalization=" + io::format_number(peak) + "\n";
    csv += "theta_deg,re_af,im_af,magnitude_db\n";
    for (std::size_t i = 0; i < af.size(); ++i)
        csv += io::format_number(rad_to_deg(grid.theta()[i])) + "," + io::format_number(af[i].real()) + "," +
               io::format_number(af[i].imag()) + "," + power_db_text(std::norm(af[i]), peak * peak) + "\n";
    io::write_text_file(fs::path(g.output_dir) / "array_factor.csv", csv);
    diag << fmt::format("array-factor: {} samples, peak |F| = {}\n", af.size(), io::format_number(peak));
    return exit_ok;
}

void write_pattern_outputs(const GlobalOptions &g, const FarFieldPattern &p, nlohmann::json metrics)
{
    std::ostringstream pattern_csv, cut0_csv, cut90_csv;
    io::write_pattern_csv(pattern_csv, p);
    io::write_cut_csv(cut0_csv, make_pattern_cut(p, 0.0));
    io::write_cut_csv(cut90_csv, make_pattern_cut(p, half_pi));
    io::write_text_file(fs::path(g.output_dir) / "pattern.csv", pattern_csv.str());
    io::write_text_file(fs::path(g.output_dir) / "cut_phi0.csv", cut0_csv.str());
    io::write_text_file(fs::path(g.output_dir) / "cut_phi90.csv", cut90_csv.str());
    write_report(g, "metrics", metrics);
}

int cmd_patch(const GlobalOptions &g, const PatchOptions &o, std::ostream &diag)
{
    const PatchGeometry geometry = io::load_geometry(o.geometry);
    if (!(o.frequency > 0.0))
        throw UsageError("--frequency must be positive");
    const double phi_quarter = 90.0 / g.phi_step_deg;
    if (std::abs(phi_quarter - std::round(phi_quarter)) > 1e-6)
        throw UsageError("--phi-step-deg must divide 90 so that the principal cuts lie on the grid");

    const AngularGrid grid =
        AngularGrid::sampled(Domain::upper_hemisphere, deg_to_rad(g.theta_step_deg), deg_to_rad(g.phi_step_deg));

    std::optional<FarFieldPattern> pattern;
    if (o.mode == "1")
    {
        const MagneticCurrentSet set = mode1_currents(geometry, o.frequency);
        io::write_text_file(fs::path(g.output_dir) / "currents.json", dump(io::to_json(set)));
        pattern = far_field(set, grid);
    }
    else if (o.mode == "2")
    {
        const MagneticCurrentSet set = mode2_currents(geometry, o.frequency, o.separation);
        io::write_text_file(fs::path(g.output_dir) / "currents.json", dump(io::to_json(set)));
        pattern = far_field(set, grid);
    }
    else
    {
        if (!o.mode1_weight || !o.mode2_weight)
            throw UsageError("--mode mix requires --mode1-weight and --mode2-weight");
        const Complex w1 = parse_weight(*o.mode1_weight, "--mode1-weight");
        const Complex w2 = parse_weight(*o.mode2_weight, "--mode2-weight");
        const MagneticCurrentSet set1 = mode1_currents(geometry, o.frequency);
        const MagneticCurrentSet set2 = mode2_currents(geometry, o.frequency, o.separation);
        io::write_text_file(fs::path(g.output_dir) / "currents_mode1.json", dump(io::to_json(set1)));
        io::write_text_file(fs::path(g.output_dir) / "currents_mode2.json", dump(io::to_json(set2)));
        pattern = superpose_modes(far_field(set1, grid), w1, far_field(set2, grid), w2);
    }

    if (o.array)
        pattern = apply_linear_array(*pattern, io::load_excitation(*o.array), Vec3{1.0, 0.0, 0.0});

    const PatternMetrics m = compute_metrics(*pattern);
    nlohmann::json metrics = io::to_json(m);
    const GreatCircleCut cut0 = great_circle_cut(*pattern, 0.0);
    const GreatCircleCut cut90 = great_circle_cut(*pattern, half_pi);
    metrics["hpbw_phi0_deg"] = hpbw_deg(cut0.theta, cut0.power());
    metrics["hpbw_phi90_deg"] = hpbw_deg(cut90.theta, cut90.power());
    metrics["frequency_hz"] = o.frequency;
    metrics["mode"] = o.mode;
    write_pattern_outputs(g, *pattern, metrics);

    diag << fmt::format("patch: mode {} at {} GHz, directivity {:.2f} dBi, HPBW phi=0 {:.1f} deg, phi=90 {:.1f} deg\n",
                        o.mode, io::format_number(o.frequency / 1e9), m.directivity_dbi,
                        metrics["hpbw_phi0_deg"].get<double>(), metrics["hpbw_phi90_deg"].get<double>());
    return exit_ok;
}

int cmd_compare(const GlobalOptions &g, const CompareOptions &o, std::ostream &diag)
{
    const PatternCut a = io::load_cut(o.reference);
    const PatternCut b = io::load_cut(o.measured);
    CutComparison r;
    try
    {
        r = compare_cuts(a, b, o.floor_db);
    }
    catch (const std::invalid_argument &e)
    {
        throw io::ParseError(o.measured, 0, e.what());
    }
    nlohmann::json report = io::to_json(r);
    report["tolerance_db"] = o.tolerance_db;
    report["floor_db"] = o.floor_db;
    const bool pass = r.rms_db <= o.tolerance_db;
    report["pass"] = pass;
    write_report(g, "comparison", report);
    diag << fmt::format("compare: RMS {:.3f} dB (L3H {:.3f}, L3V {:.3f}), max {:.3f} dB, tolerance {} dB: {}\n",
                        r.rms_db, r.l3h.rms_db, r.l3v.rms_db, r.max_db, io::format_number(o.tolerance_db),
                        pass ? "pass" : "FAIL");
    return pass ? exit_ok : exit_tolerance;
}

int cmd_resonance(const GlobalOptions &g, const ResonanceArgs &o, std::ostream &diag)
{
    std::vector<PatchGeometry> geoms;
    for (const auto &path : o.geometry)
        geoms.push_back(io::load_geometry(path));

    nlohmann::json report = nlohmann::json::object();
    for (std::size_t i = 0; i < geoms.size(); ++i)
    {
        const double f = estimate_resonance(geoms[i]);
        report[fmt::format("geometry_{}", i + 1)] = {{"source", o.geometry[i]},
                                                     {"resonance_hz", f},
                                                     {"effective_permittivity", effective_permittivity(geoms[i])},
                                                     {"fringing_extension_m", fringing_extension(geoms[i])}};
        diag << fmt::format("resonance: {} -> {:.3f} GHz\n", o.geometry[i], f / 1e9);
    }
    if (geoms.size() == 2)
    {
        const double ratio = bandwidth_ratio(geoms[0], geoms[1], o.frequency);
        report["bandwidth_ratio"] = ratio;
        report["frequency_hz"] = o.frequency;
        diag << fmt::format("resonance: bandwidth ratio (1 relative to 2) = {}\n", io::format_number(ratio));
    }
    write_report(g, "resonance", report);
    return exit_ok;
}

int cmd_metrics(const GlobalOptions &g, const MetricsOptions &o, std::ostream &diag)
{
    const FarFieldPattern p = io::load_pattern(o.pattern);
    std::optional<double> plane;
    if (o.phi_plane_deg)
        plane = deg_to_rad(*o.phi_plane_deg);
    const PatternMetrics m = compute_metrics(p, plane);
    write_report(g, "metrics", io::to_json(m));
    diag << fmt::format("metrics: hpbw {:.2f} deg, directivity {:.2f} dBi\n", m.hpbw_deg, m.directivity_dbi);
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &diag)
{
    CLI::App app{"Array-factor beam widening, patch radiation models and pattern-cut tooling", "widebeam"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--output-dir", global.output_dir, "Directory for output files")->capture_default_str();
    app.add_option("--format", global.format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--theta-step-deg", global.theta_step_deg, "Theta sampling step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--phi-step-deg", global.phi_step_deg, "Phi sampling step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    SynthesizeOptions syn;
    auto *synthesize = app.add_subcommand("synthesize", "Fourier-synthesize a widening array for an element pattern");
    synthesize->add_option("--element", syn.element, "'sin-theta' or a cut CSV file")->required();
    synthesize->add_option("--element-column", syn.element_column, "Cut column used as element magnitude")
        ->check(CLI::IsMember({"total", "l3h", "l3v"}))
        ->capture_default_str();
    synthesize->add_option("--element-reference", syn.element_reference,
                           "Cut angles measured from broadside (array along +x) or from the array axis")
        ->check(CLI::IsMember({"broadside", "axis"}))
        ->capture_default_str();
    synthesize->add_option("--m-max", syn.m_max, "Array half-size M (2M+1 elements)")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    synthesize->add_option("--spacing", syn.spacing, "Element spacing d/lambda")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    synthesize->add_option("--taper", syn.taper, "Coefficient taper")
        ->check(CLI::IsMember({"fejer", "none"}))
        ->capture_default_str();
    synthesize->add_option("--clip-floor", syn.clip_floor, "Element clip level before inversion")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    synthesize->add_option("--quadrature-samples", syn.quadrature_samples, "Uniform quadrature samples over [0, pi]")
        ->check(CLI::Range(std::size_t{3}, std::size_t{10000000}))
        ->capture_default_str();

    ArrayFactorOptions afo;
    auto *af = app.add_subcommand("array-factor", "Evaluate the array factor of an excitation file");
    af->add_option("--excitation", afo.excitation, "Excitation JSON file")->required()->check(CLI::ExistingFile);

    PatchOptions po;
    auto *patch = app.add_subcommand("patch", "Radiation of the patch resonant modes (magnetic-current model)");
    patch->add_option("--geometry", po.geometry, "Geometry JSON file")->required();
    patch->add_option("--mode", po.mode, "Resonant mode")
        ->check(CLI::IsMember({"1", "2", "mix"}))
        ->capture_default_str();
    patch->add_option("--frequency", po.frequency, "Frequency [Hz]")->capture_default_str();
    patch->add_option("--separation", po.separation, "Mode-2 current separation [m] (default w_p)");
    patch->add_option("--mode1-weight", po.mode1_weight, "Complex weight 're,im' of mode 1 (mix)");
    patch->add_option("--mode2-weight", po.mode2_weight, "Complex weight 're,im' of mode 2 (mix)");
    patch->add_option("--array", po.array, "Excitation JSON applied as a linear array along x");

    CompareOptions co;
    auto *compare = app.add_subcommand("compare", "Compare two Ludwig-3 pattern cuts");
    compare->add_option("--reference", co.reference, "Reference cut CSV")->required();
    compare->add_option("--measured", co.measured, "Cut CSV compared against the reference")->required();
    compare->add_option("--tolerance-db", co.tolerance_db, "RMS threshold for exit code 0")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    compare->add_option("--floor-db", co.floor_db, "Exclude samples below this level")->capture_default_str();

    ResonanceArgs ro;
    auto *resonance = app.add_subcommand("resonance", "Resonance estimate and bandwidth ratio");
    resonance->add_option("--geometry", ro.geometry, "One or two geometry JSON files")->required()->expected(1, 2);
    resonance->add_option("--frequency", ro.frequency, "Common frequency for the bandwidth ratio [Hz]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    MetricsOptions mo;
    auto *metrics = app.add_subcommand("metrics", "HPBW, directivity and peak of a pattern CSV");
    metrics->add_option("--pattern", mo.pattern, "Pattern CSV file")->required();
    metrics->add_option("--phi-plane-deg", mo.phi_plane_deg, "Cut plane for the HPBW (default: peak azimuth)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &)
    {
        diag << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError &e)
    {
        diag << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try
    {
        if (synthesize->parsed())
            return cmd_synthesize(global, syn, diag);
        if (af->parsed())
            return cmd_array_factor(global, afo, diag);
        if (patch->parsed())
            return cmd_patch(global, po, diag);
        if (compare->parsed())
            return cmd_compare(global, co, diag);
        if (resonance->parsed())
            return cmd_resonance(global, ro, diag);
        if (metrics->parsed())
            return cmd_metrics(global, mo, diag);
    }
    catch (const std::exception &e)
    {
        diag << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}

} // namespace widebeam::cli
