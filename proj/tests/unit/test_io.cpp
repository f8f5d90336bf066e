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

#include "doctest.h"

#include "support/oracles.hpp"
#include "widebeam/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

using namespace widebeam;

namespace {

FarFieldPattern sample_pattern()
{
    const AngularGrid g = AngularGrid::sampled(Domain::upper_hemisphere, deg_to_rad(15.0), deg_to_rad(45.0));
    std::vector<Complex> et(g.size()), ep(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
    {
        et[i] = {std::cos(0.1 * double(i)), -1.0 / 3.0};
        ep[i] = {1e-7 * double(i), std::sin(double(i))};
    }
    return FarFieldPattern(g, et, ep, 36e9);
}

std::string expect_parse_error(const std::function<void()> &f)
{
    try
    {
        f();
    }
    catch (const io::ParseError &e)
    {
        return e.what();
    }
    FAIL("no ParseError raised");
    return {};
}

} // namespace

TEST_CASE("number formatting")
{
    CHECK(io::format_number(0.5) == "0.5");
    CHECK(io::format_number(-0.0) == "0");
    CHECK(io::format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(io::format_number(36e9) == "36000000000");
    CHECK(io::format_number(-1.5e-20) == "-1.5e-20");
}

TEST_CASE("pattern CSV round trip")
{
    const FarFieldPattern p = sample_pattern();
    std::ostringstream os;
    io::write_pattern_csv(os, p);
    const std::string text = os.str();
    CHECK(text.find("# domain=upper-hemisphere\n") == 0);
    CHECK(text.find("theta_deg,phi_deg,re_etheta,im_etheta,re_ephi,im_ephi\n") != std::string::npos);
    CHECK(text.find("# convention=") != std::string::npos);

    std::istringstream is(text);
    const FarFieldPattern q = io::read_pattern_csv(is);
    REQUIRE(q.grid().theta_count() == p.grid().theta_count());
    REQUIRE(q.grid().phi_count() == p.grid().phi_count());
    CHECK(q.grid().domain() == p.grid().domain());
    for (std::size_t i = 0; i < p.grid().theta_count(); ++i)
        CHECK(q.grid().theta()[i] == doctest::Approx(p.grid().theta()[i]).epsilon(1e-12));
    for (std::size_t i = 0; i < p.grid().phi_count(); ++i)
        CHECK(q.grid().phi()[i] == doctest::Approx(p.grid().phi()[i]).epsilon(1e-12));
    REQUIRE(q.frequency_hz().has_value());
    CHECK(*q.frequency_hz() == 36e9);
    for (std::size_t i = 0; i < p.grid().size(); ++i)
    {
        CHECK(std::abs(q.e_theta()[i] - p.e_theta()[i]) < 1e-11);
        CHECK(std::abs(q.e_phi()[i] - p.e_phi()[i]) < 1e-11);
    }

    // writing the re-read pattern gives identical bytes
    std::ostringstream again;
    io::write_pattern_csv(again, q);
    CHECK(again.str() == text);
}

TEST_CASE("pattern CSV in arbitrary row order, no comments")
{
    std::istringstream is("theta_deg,phi_deg,re_etheta,im_etheta,re_ephi,im_ephi\n"
                          "90,180,1,0,0,0\n"
                          "0,0,2,0,0,0\n"
                          "45,180,3,0,0,0\n"
                          "0,180,4,0,0,0\n"
                          "90,0,5,0,0,0\n"
                          "45,0,6,0,0,0\n");
    const FarFieldPattern p = io::read_pattern_csv(is);
    CHECK(p.grid().domain() == Domain::upper_hemisphere);
    CHECK(p.grid().theta_count() == 3);
    CHECK(p.grid().phi_count() == 2);
    CHECK(p.e_theta()[p.grid().index(1, 0)].real() == 6.0);
    CHECK(p.e_theta()[p.grid().index(0, 1)].real() == 4.0);
    CHECK_FALSE(p.frequency_hz().has_value());
}

TEST_CASE("pattern CSV errors carry the line number")
{
    const std::string header = "theta_deg,phi_deg,re_etheta,im_etheta,re_ephi,im_ephi\n";
    auto parse = [](const std::string &text) {
        std::istringstream is(text);
        return io::read_pattern_csv(is, "p.csv");
    };
    CHECK(expect_parse_error([&] { parse(header + "0,0,1,0,0,0\n45,0,x,0,0,0\n90,0,1,0,0,0\n"); }) ==
          "p.csv:3: invalid number 'x'");
    CHECK(expect_parse_error([&] { parse(header + "0,0,1,0,0\n"); }).find("p.csv:2:") == 0);
    CHECK(expect_parse_error([&] { parse("theta,phi\n"); }).find("p.csv:1:") == 0);
    CHECK(expect_parse_error([&] { parse(header); }).find("no data rows") != std::string::npos);
    CHECK(expect_parse_error([&] { parse(header + "0,0,1,0,0,0\n45,0,1,0,0,0\n45,0,1,0,0,0\n90,0,1,0,0,0\n"); })
              .find("p.csv") == 0);
    CHECK(expect_parse_error([&] { parse(header + "0,0,1,0,0,0\n45,0,1,0,0,0\n90,10,1,0,0,0\n"); })
              .find("full") != std::string::npos);
    CHECK(expect_parse_error([&] {
              parse("# domain=moon\n" + header + "0,0,1,0,0,0\n45,0,1,0,0,0\n90,0,1,0,0,0\n");
          }).find("p.csv:1:") == 0);
}

TEST_CASE("cut CSV round trip and errors")
{
    PatternCut cut;
    cut.phi_plane = half_pi;
    cut.theta_deg = {-90.0, 0.0, 90.0};
    cut.l3h_db = {-300.0, -12.5, -40.0};
    cut.l3v_db = {-3.0, 0.0, -3.0};
    cut.normalization = 2.5;

    std::ostringstream os;
    io::write_cut_csv(os, cut);
    CHECK(os.str().find("# phi_deg=90\n") == 0);
    std::istringstream is(os.str());
    const PatternCut back = io::read_cut_csv(is);
    CHECK(back.phi_plane == doctest::Approx(half_pi));
    CHECK(back.theta_deg == cut.theta_deg);
    CHECK(back.l3h_db == cut.l3h_db);
    CHECK(back.l3v_db == cut.l3v_db);
    CHECK(back.normalization == 2.5);

    std::istringstream no_phi("theta_deg,l3h_db,l3v_db\n0,0,0\n1,0,0\n");
    CHECK(expect_parse_error([&] { io::read_cut_csv(no_phi, "c.csv"); }).find("phi_deg") != std::string::npos);
    std::istringstream backwards("# phi_deg=0\ntheta_deg,l3h_db,l3v_db\n1,0,0\n0,0,0\n");
    CHECK(expect_parse_error([&] { io::read_cut_csv(backwards, "c.csv"); }).find("c.csv:4:") == 0);
}

TEST_CASE("excitation JSON")
{
    ArrayExcitation e;
    e.m_max = 1;
    e.spacing_over_lambda = 0.5;
    e.coefficients = {{-0.15, 0.0}, {1.0, 0.0}, {-0.15, 1e-3}};
    const nlohmann::json j = io::to_json(e);
    CHECK(j["m_max"] == 1);
    CHECK(j["coefficients"].size() == 3);
    CHECK(j["coefficients"][2][1] == 1e-3);
    const ArrayExcitation back = io::excitation_from_json(j);
    CHECK(back.coefficients == e.coefficients);
    CHECK(back.spacing_over_lambda == 0.5);

    nlohmann::json bad = j;
    bad["coefficients"].erase(0);
    CHECK_THROWS_AS(io::excitation_from_json(bad), std::exception);
    bad = j;
    bad["coefficients"][0] = "x";
    CHECK_THROWS_AS(io::excitation_from_json(bad), io::ParseError);
    bad = j;
    bad.erase("spacing_over_lambda");
    CHECK_THROWS_AS(io::excitation_from_json(bad), io::ParseError);
}

TEST_CASE("geometry JSON and files")
{
    const PatchGeometry g = PatchGeometry::reference_design();
    const PatchGeometry back = io::geometry_from_json(io::to_json(g));
    CHECK(back.l_p == g.l_p);
    CHECK(back.w_g == g.w_g);
    CHECK(back.eps_r == g.eps_r);
    CHECK(back.tan_delta == g.tan_delta);

    const auto dir = testing::scratch_dir("io");
    io::write_text_file(dir / "nested" / "g.json", io::to_json(g).dump(2));
    CHECK(io::load_geometry(dir / "nested" / "g.json").h == g.h);

    io::write_text_file(dir / "broken.json", "{\n  \"l_p\": 1,\n  oops\n}\n");
    CHECK(expect_parse_error([&] { io::load_geometry(dir / "broken.json"); }).find("broken.json:3:") !=
          std::string::npos);
    CHECK_THROWS_AS(io::load_geometry(dir / "missing.json"), io::ParseError);

    nlohmann::json j = io::to_json(g);
    j["eps_r"] = 0.2;
    CHECK_THROWS_AS(io::geometry_from_json(j), std::exception);
    std::filesystem::remove_all(dir);
}

TEST_CASE("current set JSON")
{
    const MagneticCurrentSet s = mode2_currents(PatchGeometry::reference_design(), 36e9);
    const nlohmann::json j = io::to_json(s);
    REQUIRE(j.is_array());
    const MagneticCurrentSet back = io::currents_from_json(j, 36e9);
    REQUIRE(back.elements.size() == 2);
    CHECK(back.elements[1].amplitude == s.elements[1].amplitude);
    CHECK(back.elements[0].x == s.elements[0].x);
    CHECK(back.frequency_hz == 36e9);
    CHECK_THROWS_AS(io::currents_from_json(nlohmann::json::object(), 36e9), io::ParseError);
}

TEST_CASE("report rendering")
{
    PatternMetrics m{.hpbw_deg = 120.0, .directivity_dbi = 1.5, .peak_theta_deg = 0.0, .peak_phi_deg = 0.0,
                     .hpbw_plane_deg = 0.0};
    const nlohmann::json j = io::to_json(m);
    CHECK(j["hpbw_deg"] == 120.0);
    CHECK(j.contains("convention"));

    const std::string csv = io::flat_json_to_csv(j);
    CHECK(csv.find("key,value\n") == 0);
    CHECK(csv.find("hpbw_deg,120\n") != std::string::npos);

    nlohmann::json nested;
    nested["a"]["b"] = 1;
    CHECK(io::flat_json_to_csv(nested).find("a.b,1\n") != std::string::npos);
}
