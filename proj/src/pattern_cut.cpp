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

#include "widebeam/pattern_cut.hpp"
#include "widebeam/pattern_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace widebeam {

namespace {

double to_db(double magnitude, double reference)
{
    if (!(magnitude > 0.0))
        return db_floor;
    return std::max(db_floor, 20.0 * std::log10(magnitude / reference));
}

// Linear interpolation of (x, y) at xq; xq must lie within [x.front(), x.back()].
double interpolate(const std::vector<double> &x, const std::vector<double> &y, double xq)
{
    auto hi = std::lower_bound(x.begin(), x.end(), xq);
    if (hi == x.end())
        return y.back();
    const auto j = static_cast<std::size_t>(hi - x.begin());
    if (*hi == xq || j == 0)
        return y[j];
    const double f = (xq - x[j - 1]) / (x[j] - x[j - 1]);
    return y[j - 1] + f * (y[j] - y[j - 1]);
}

struct Accumulator
{
    double sum_sq = 0.0;
    double max_abs = 0.0;
    std::size_t n = 0;

    void add(double e)
    {
        sum_sq += e * e;
        max_abs = std::max(max_abs, std::abs(e));
        ++n;
    }
    PolarizationError result() const { return {n ? std::sqrt(sum_sq / double(n)) : 0.0, max_abs, n}; }
};

} // namespace

void PatternCut::validate() const
{
    if (theta_deg.size() != l3h_db.size() || theta_deg.size() != l3v_db.size())
        throw std::invalid_argument("pattern cut columns must have equal length");
    if (theta_deg.empty())
        throw std::invalid_argument("pattern cut is empty");
    for (std::size_t i = 1; i < theta_deg.size(); ++i)
        if (!(theta_deg[i] > theta_deg[i - 1]))
            throw std::invalid_argument("pattern cut theta must be strictly increasing");
    for (std::size_t i = 0; i < theta_deg.size(); ++i)
        if (!std::isfinite(theta_deg[i]) || !std::isfinite(l3h_db[i]) || !std::isfinite(l3v_db[i]))
            throw std::invalid_argument("pattern cut values must be finite");
}

PatternCut make_pattern_cut(const FarFieldPattern &p, double phi_plane)
{
    const GreatCircleCut gc = great_circle_cut(p, phi_plane);
    const std::size_t n = gc.theta.size();

    std::vector<double> mag_h(n), mag_v(n);
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const Ludwig3 l3 = to_ludwig3(gc.e_theta[i], gc.e_phi[i], gc.phi[i]);
        mag_h[i] = std::abs(l3.horizontal);
        mag_v[i] = std::abs(l3.vertical);
        peak = std::max({peak, mag_h[i], mag_v[i]});
    }

    PatternCut cut;
    cut.phi_plane = gc.phi_plane;
    cut.normalization = peak > 0.0 ? peak : 1.0;
    cut.theta_deg.resize(n);
    cut.l3h_db.resize(n);
    cut.l3v_db.resize(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        cut.theta_deg[i] = rad_to_deg(gc.theta[i]);
        cut.l3h_db[i] = to_db(mag_h[i], cut.normalization);
        cut.l3v_db[i] = to_db(mag_v[i], cut.normalization);
    }
    return cut;
}

CutComparison compare_cuts(const PatternCut &a, const PatternCut &b, double floor_db)
{
    a.validate();
    b.validate();

    const double lo = std::max(a.theta_deg.front(), b.theta_deg.front());
    const double hi = std::min(a.theta_deg.back(), b.theta_deg.back());

    std::vector<double> theta, ah, av, bh, bv;
    if (lo <= hi)
        for (std::size_t i = 0; i < a.theta_deg.size(); ++i)
        {
            const double t = a.theta_deg[i];
            if (t < lo || t > hi)
                continue;
            theta.push_back(t);
            ah.push_back(a.l3h_db[i]);
            av.push_back(a.l3v_db[i]);
            bh.push_back(interpolate(b.theta_deg, b.l3h_db, t));
            bv.push_back(interpolate(b.theta_deg, b.l3v_db, t));
        }
    if (theta.empty())
        throw std::invalid_argument("pattern cuts do not overlap in theta");

    auto normalize = [](std::vector<double> &h, std::vector<double> &v) {
        const double peak = std::max(*std::max_element(h.begin(), h.end()), *std::max_element(v.begin(), v.end()));
        for (double &x : h)
            x -= peak;
        for (double &x : v)
            x -= peak;
    };
    normalize(ah, av);
    normalize(bh, bv);

    Accumulator acc_h, acc_v, acc_all;
    for (std::size_t i = 0; i < theta.size(); ++i)
    {
        if (ah[i] >= floor_db && bh[i] >= floor_db)
        {
            acc_h.add(bh[i] - ah[i]);
            acc_all.add(bh[i] - ah[i]);
        }
        if (av[i] >= floor_db && bv[i] >= floor_db)
        {
            acc_v.add(bv[i] - av[i]);
            acc_all.add(bv[i] - av[i]);
        }
    }

    CutComparison r;
    r.l3h = acc_h.result();
    r.l3v = acc_v.result();
    const PolarizationError all = acc_all.result();
    r.rms_db = all.rms_db;
    r.max_db = all.max_db;
    r.theta_min_deg = theta.front();
    r.theta_max_deg = theta.back();
    return r;
}

} // namespace widebeam
