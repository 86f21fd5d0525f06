// Copyright 2026 The ghzbox Authors
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

#include "ghzbox/doublewell.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ghzbox/errors.hpp"

namespace ghzbox {

void WellGeometry::validate() const {
    if (!(well_width > 0.0)) throw std::invalid_argument("well_width must be positive");
    if (!(gap >= 0.0)) throw std::invalid_argument("gap must be non-negative");
    if (quantum_number < 1) throw std::invalid_argument("quantum_number must be at least 1");
}

double WellGeometry::wall(Label side) const {
    switch (side) {
        case Label::L:
            return left_edge;
        case Label::R:
            return left_edge + well_width + gap;
        default:
            throw std::invalid_argument("well side must be L or R");
    }
}

double square_well_wave(const WellGeometry& g, Label side, double x) {
    g.validate();
    const double x0 = g.wall(side);
    const double w = g.well_width;
    if (x < x0 || x > x0 + w) return 0.0;
    return std::sqrt(2.0 / w) * std::sin(g.quantum_number * std::numbers::pi * (x - x0) / w);
}

std::vector<WaveSample> superposition_samples(const WellGeometry& g, PhaseFactor beta, std::span<const double> grid) {
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw std::invalid_argument("grid must be sorted");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<WaveSample> out;
    out.reserve(grid.size());
    for (double x : grid) {
        const Amplitude psi =
            inv_sqrt2 * (Amplitude{square_well_wave(g, Label::L, x), 0.0} + beta.value() * square_well_wave(g, Label::R, x));
        out.push_back({x, psi});
    }
    return out;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
    if (count < 2) throw std::invalid_argument("a grid needs at least 2 points");
    std::vector<double> out(static_cast<std::size_t>(count));
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
    out.back() = hi;
    return out;
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("trapezoid: size mismatch");
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        acc += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    }
    return acc;
}

double h2plus_orbital(const Point3& center, const Point3& point) {
    const double r = std::hypot(point.x - center.x, point.y - center.y, point.z - center.z);
    return std::exp(-r) / std::sqrt(std::numbers::pi);
}

void OrbitalGeometry::validate() const {
    if (!(separation > 0.0)) throw std::invalid_argument("separation must be positive");
}

Amplitude lcao_amplitude(const OrbitalGeometry& og, PhaseFactor beta, const Point3& point) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return inv_sqrt2 * (Amplitude{h2plus_orbital(og.left_nucleus(), point), 0.0} +
                        beta.value() * h2plus_orbital(og.right_nucleus(), point));
}

double orbital_overlap(const OrbitalGeometry& og) {
    og.validate();
    // mu = (r_L + r_R)/R in [1, inf), nu = (r_L - r_R)/R in [-1, 1],
    // dV = (R^3/8)(mu^2 - nu^2) dmu dnu dphi, Psi_L Psi_R = exp(-R mu)/pi.
    // With t = mu - 1 the phi integral contributes 2 pi.
    const double R = og.separation;
    auto over_nu = [R](double t) {
        const double mu = 1.0 + t;
        auto integrand = [mu](double nu) { return mu * mu - nu * nu; };
        return boost::math::quadrature::gauss<double, 7>::integrate(integrand, -1.0, 1.0) * std::exp(-R * t);
    };
    boost::math::quadrature::exp_sinh<double> outer;
    const double radial = outer.integrate(over_nu);
    return (R * R * R / 8.0) * 2.0 * std::exp(-R) * radial;
}

std::string_view to_string(Figure figure) {
    switch (figure) {
        case Figure::Fig2:
            return "fig2";
        case Figure::Fig9:
            return "fig9";
        case Figure::Fig10:
            return "fig10";
    }
    return "?";
}

std::optional<Figure> parse_figure(std::string_view tag) {
    for (Figure f : {Figure::Fig2, Figure::Fig9, Figure::Fig10}) {
        if (tag == to_string(f)) return f;
    }
    return std::nullopt;
}

namespace {

// Odd point count, exact zero at the middle and exact mirror pairs.
std::vector<double> symmetric_grid(double half_width, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    const int mid = (count - 1) / 2;
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = half_width * static_cast<double>(i - mid) / mid;
    }
    return out;
}

void append_well_series(FigureData& data, const std::string& name, const WellGeometry& g, PhaseFactor beta,
                        std::span<const double> grid) {
    data.series.push_back(name);
    for (const WaveSample& s : superposition_samples(g, beta, grid)) {
        data.rows.push_back({name, {s.x, 0.0, 0.0}, s.psi, std::norm(s.psi)});
    }
}

void append_orbital_series(FigureData& data, const std::string& name, const OrbitalGeometry& og, PhaseFactor beta,
                           std::span<const double> xs, std::span<const double> zs) {
    data.series.push_back(name);
    for (double z : zs) {
        for (double x : xs) {
            const Point3 p{x, 0.0, z};
            const Amplitude psi = lcao_amplitude(og, beta, p);
            data.rows.push_back({name, p, psi, std::norm(psi)});
        }
    }
}

}  // namespace

FigureData emit_figure_data(Figure figure, int resolution, const FigureOptions& options) {
    if (resolution < kMinFigureResolution) {
        throw std::invalid_argument("resolution must be at least " + std::to_string(kMinFigureResolution) + ", got " +
                                    std::to_string(resolution));
    }
    FigureData data{figure, 1, {}, {}, std::nullopt, std::nullopt, options.overlap_threshold};
    const WellGeometry& g = options.well;
    g.validate();
    const double margin = 0.25 * g.well_width;
    const std::vector<double> grid = uniform_grid(g.left_edge - margin, g.right_end() + margin, resolution);

    switch (figure) {
        case Figure::Fig2:
            append_well_series(data, "beta", g, PhaseFactor(options.fig2_beta), grid);
            break;
        case Figure::Fig9:
            append_well_series(data, "plus1", g, PhaseFactor::one(), grid);
            append_well_series(data, "minus1", g, PhaseFactor::minus_one(), grid);
            break;
        case Figure::Fig10: {
            const OrbitalGeometry& og = options.orbitals;
            og.validate();
            data.dims = 3;
            const int n = resolution % 2 == 0 ? resolution + 1 : resolution;
            const double half_x = 0.5 * og.separation + 4.0;
            const double half_z = 4.0;
            const std::vector<double> xs = symmetric_grid(half_x, n);
            const std::vector<double> zs = symmetric_grid(half_z, n);
            append_orbital_series(data, "bonding", og, PhaseFactor::one(), xs, zs);
            append_orbital_series(data, "antibonding", og, PhaseFactor::minus_one(), xs, zs);
            data.overlap = orbital_overlap(og);
            data.separation = og.separation;
            break;
        }
    }
    return data;
}

FigureData emit_figure_data(std::string_view tag, int resolution, const FigureOptions& options) {
    const auto figure = parse_figure(tag);
    if (!figure) throw UnknownFigureError("unknown figure tag '" + std::string(tag) + "' (expected fig2, fig9, fig10)");
    return emit_figure_data(*figure, resolution, options);
}

namespace {

void put_double(std::ostream& out, double v) {
    char buf[64];
    // Exact zeros print as 0 rather than -0.
    if (v == 0.0) v = 0.0;
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    out.write(buf, res.ptr - buf);
}

}  // namespace

void write_csv(std::ostream& out, const FigureData& data) {
    out << (data.dims == 3 ? "series,x,y,z,psi_re,psi_im,density\n" : "series,x,psi_re,psi_im,density\n");
    for (const FigureRow& row : data.rows) {
        out << row.series << ',';
        put_double(out, row.point.x);
        if (data.dims == 3) {
            out << ',';
            put_double(out, row.point.y);
            out << ',';
            put_double(out, row.point.z);
        }
        out << ',';
        put_double(out, row.psi.real());
        out << ',';
        put_double(out, row.psi.imag());
        out << ',';
        put_double(out, row.density);
        out << '\n';
    }
}

}  // namespace ghzbox
