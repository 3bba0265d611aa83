#ifndef ROSENAU_IO_HPP
#define ROSENAU_IO_HPP

#include <string>
#include <vector>

#include "rosenau/classify.hpp"
#include "rosenau/diagnostics.hpp"
#include "rosenau/evolve.hpp"
#include "rosenau/fourier.hpp"
#include "rosenau/petviashvili.hpp"

#include <json.hpp>

namespace rosenau {

// Full-precision decimal serialization (17 significant digits) so replays
// reproduce CSV output byte for byte.
std::string fmt17(double x);

// profile.csv columns: X,u,u',u'' (spectral derivatives).
void write_profile_csv(const std::string& path, const SpectralField& field,
                       FourierWorkspace& ws);
// Same numbers, whitespace-separated with a comment header (gnuplot-friendly).
void write_profile_dat(const std::string& path, const SpectralField& field,
                       FourierWorkspace& ws);

// Reads the X,u columns back; the X column must match the grid nodes.
SpectralField read_profile_csv(const std::string& path, const Grid& grid);

void write_trace_csv(const std::string& path, const IterationTrace& trace);

void write_sweep_csv(const std::string& path, const std::vector<SweepEntry>& table);

// trajectory.csv columns: t,X,u,u',u''.
void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          FourierWorkspace& ws);
void write_invariants_csv(const std::string& path, const Trajectory& traj);

// Minimal static SVG line plot.
void write_svg_plot(const std::string& path, const std::vector<double>& xs,
                    const std::vector<double>& ys, const std::string& title,
                    const std::string& xlabel, const std::string& ylabel);

nlohmann::json params_to_json(const EquationParams& params);
nlohmann::json regime_report_to_json(const RegimeReport& report);

void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace rosenau

#endif
