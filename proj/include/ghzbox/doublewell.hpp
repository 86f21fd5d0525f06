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

#ifndef GHZBOX_DOUBLEWELL_HPP
#define GHZBOX_DOUBLEWELL_HPP

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghzbox/boxbasis.hpp"
#include "ghzbox/qstate.hpp"

namespace ghzbox {

/// Two infinitely deep square wells of equal width separated by `gap`.
struct WellGeometry {
    double well_width = 1.0;
    double gap = 0.5;
    double left_edge = 0.0;
    int quantum_number = 1;

    /// Throws std::invalid_argument on width <= 0, gap < 0 or n < 1.
    void validate() const;
    /// Left wall of the L or R well.
    double wall(Label side) const;
    double right_end() const { return left_edge + 2.0 * well_width + gap; }
    /// Midpoint of the gap between the wells.
    double center() const { return left_edge + well_width + 0.5 * gap; }
};

struct WaveSample {
    double x;
    Amplitude psi;
};

/// sqrt(2/w) sin(n pi (x - x0) / w) inside the chosen well, 0 elsewhere.
double square_well_wave(const WellGeometry& g, Label side, double x);

/// (Psi_L + beta Psi_R) / sqrt(2) at every grid point. The grid must be sorted.
std::vector<WaveSample> superposition_samples(const WellGeometry& g, PhaseFactor beta, std::span<const double> grid);

/// `count` evenly spaced points covering [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, int count);

/// Trapezoidal rule over samples y(x) on a sorted grid.
double trapezoid(std::span<const double> x, std::span<const double> y);

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Hydrogen 1s orbital exp(-r) / sqrt(pi) in units of the Bohr radius.
double h2plus_orbital(const Point3& center, const Point3& point);

/// Two nuclei on the x axis at -separation/2 and +separation/2.
struct OrbitalGeometry {
    double separation = 10.0;

    void validate() const;
    Point3 left_nucleus() const { return {-0.5 * separation, 0.0, 0.0}; }
    Point3 right_nucleus() const { return {0.5 * separation, 0.0, 0.0}; }
};

/// (Psi_L + beta Psi_R) / sqrt(2) with Psi_L, Psi_R the 1s orbitals on each nucleus.
Amplitude lcao_amplitude(const OrbitalGeometry& og, PhaseFactor beta, const Point3& point);

/// Overlap integral of the two 1s orbitals, by quadrature in prolate
/// spheroidal coordinates.
double orbital_overlap(const OrbitalGeometry& og);

/// Overlap below which the two orbitals are treated as orthogonal.
inline constexpr double kDefaultOverlapThreshold = 0.01;

enum class Figure { Fig2, Fig9, Fig10 };

std::string_view to_string(Figure figure);
std::optional<Figure> parse_figure(std::string_view tag);

struct FigureOptions {
    WellGeometry well{};
    /// Relative phase of the single curve of fig2.
    Amplitude fig2_beta{1.0, 0.0};
    OrbitalGeometry orbitals{};
    double overlap_threshold = kDefaultOverlapThreshold;
};

struct FigureRow {
    std::string series;
    Point3 point;
    Amplitude psi;
    double density;
};

struct FigureData {
    Figure figure;
    /// 1 for well figures (x only), 3 for orbital figures (x, y, z).
    int dims = 1;
    std::vector<std::string> series;
    std::vector<FigureRow> rows;
    /// Orbital figures only.
    std::optional<double> overlap;
    std::optional<double> separation;
    double overlap_threshold = kDefaultOverlapThreshold;
};

inline constexpr int kMinFigureResolution = 16;

/// Plot data for one figure. Well figures sample `resolution` points along x;
/// fig10 samples the y = 0 plane on an odd square grid of at least
/// `resolution` points per side so the midplane x = 0 is included.
/// Throws std::invalid_argument for resolution < 16.
FigureData emit_figure_data(Figure figure, int resolution, const FigureOptions& options = {});

/// Throws UnknownFigureError for an unrecognized tag.
FigureData emit_figure_data(std::string_view tag, int resolution, const FigureOptions& options = {});

/// Header `series,x[,y,z],psi_re,psi_im,density`, one row per sample,
/// 17 significant digits, '.' decimal point regardless of locale.
void write_csv(std::ostream& out, const FigureData& data);

}  // namespace ghzbox

#endif  // GHZBOX_DOUBLEWELL_HPP
