#include "rosenau/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rosenau {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace

void write_profile_csv(const std::string& path, const SpectralField& field,
                       FourierWorkspace& ws) {
    const SpectralField ux = differentiate(field, 1, ws);
    const SpectralField uxx = differentiate(field, 2, ws);
    auto out = open_out(path);
    out << "X,u,u',u''\n";
    for (int j = 0; j < field.grid().N; ++j)
        out << fmt17(field.grid().node(j)) << "," << fmt17(field[j]) << "," << fmt17(ux[j])
            << "," << fmt17(uxx[j]) << "\n";
}

void write_profile_dat(const std::string& path, const SpectralField& field,
                       FourierWorkspace& ws) {
    const SpectralField ux = differentiate(field, 1, ws);
    const SpectralField uxx = differentiate(field, 2, ws);
    auto out = open_out(path);
    out << "# X u u' u''\n";
    for (int j = 0; j < field.grid().N; ++j)
        out << fmt17(field.grid().node(j)) << " " << fmt17(field[j]) << " " << fmt17(ux[j])
            << " " << fmt17(uxx[j]) << "\n";
}

SpectralField read_profile_csv(const std::string& path, const Grid& grid) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file '" + path + "'");
    std::vector<double> xs, us;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'X') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double x, u;
        if (row >> x >> u) {
            xs.push_back(x);
            us.push_back(u);
        }
    }
    if (static_cast<int>(us.size()) != grid.N)
        throw std::runtime_error("profile file '" + path + "' has " + std::to_string(us.size()) +
                                 " rows, grid expects " + std::to_string(grid.N));
    for (int j = 0; j < grid.N; ++j)
        if (std::abs(xs[j] - grid.node(j)) > 1e-9 * (1.0 + std::abs(grid.node(j))))
            throw std::runtime_error("profile file nodes do not match the grid (row " +
                                     std::to_string(j) + ")");
    return SpectralField(grid, std::move(us));
}

void write_trace_csv(const std::string& path, const IterationTrace& trace) {
    auto out = open_out(path);
    out << "n,Error,StabErr,Res,M\n";
    for (const auto& r : trace.records)
        out << r.n << "," << fmt17(r.error) << "," << fmt17(r.stab_err) << "," << fmt17(r.res)
            << "," << fmt17(r.M) << "\n";
}

void write_sweep_csv(const std::string& path, const std::vector<SweepEntry>& table) {
    auto out = open_out(path);
    out << "cs,amplitude,converged,skipped,note\n";
    for (const auto& e : table)
        out << fmt17(e.cs) << "," << fmt17(e.amplitude) << "," << (e.converged ? 1 : 0) << ","
            << (e.skipped ? 1 : 0) << "," << e.note << "\n";
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          FourierWorkspace& ws) {
    auto out = open_out(path);
    out << "t,X,u,u',u''\n";
    for (const auto& s : traj.samples) {
        SpectralField u(traj.grid, s.values);
        const SpectralField ux = differentiate(u, 1, ws);
        const SpectralField uxx = differentiate(u, 2, ws);
        for (int j = 0; j < traj.grid.N; ++j)
            out << fmt17(s.t) << "," << fmt17(traj.grid.node(j)) << "," << fmt17(u[j]) << ","
                << fmt17(ux[j]) << "," << fmt17(uxx[j]) << "\n";
    }
}

void write_invariants_csv(const std::string& path, const Trajectory& traj) {
    auto out = open_out(path);
    out << "t,V,H\n";
    for (const auto& s : traj.samples)
        out << fmt17(s.t) << "," << fmt17(s.V) << "," << fmt17(s.H) << "\n";
}

void write_svg_plot(const std::string& path, const std::vector<double>& xs,
                    const std::vector<double>& ys, const std::string& title,
                    const std::string& xlabel, const std::string& ylabel) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("svg plot needs matching nonempty x/y");
    double xmin = xs[0], xmax = xs[0], ymin = ys[0], ymax = ys[0];
    for (size_t i = 0; i < xs.size(); ++i) {
        xmin = std::min(xmin, xs[i]);
        xmax = std::max(xmax, xs[i]);
        ymin = std::min(ymin, ys[i]);
        ymax = std::max(ymax, ys[i]);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double pad_y = 0.05 * (ymax - ymin);
    ymin -= pad_y;
    ymax += pad_y;

    const int W = 720, H = 480, ML = 70, MR = 20, MT = 40, MB = 50;
    auto px = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };

    auto out = open_out(path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
        << "' viewBox='0 0 " << W << " " << H << "'>\n"
        << "<rect width='100%' height='100%' fill='white'/>\n"
        << "<rect x='" << ML << "' y='" << MT << "' width='" << W - ML - MR << "' height='"
        << H - MT - MB << "' fill='none' stroke='black'/>\n"
        << "<text x='" << W / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
        << "</text>\n"
        << "<text x='" << W / 2 << "' y='" << H - 12 << "' text-anchor='middle' font-size='13'>"
        << xlabel << "</text>\n"
        << "<text x='18' y='" << H / 2
        << "' text-anchor='middle' font-size='13' transform='rotate(-90 18 " << H / 2 << ")'>"
        << ylabel << "</text>\n";
    // axis extents
    out << "<text x='" << ML << "' y='" << H - MB + 16 << "' font-size='11'>" << xmin
        << "</text>\n"
        << "<text x='" << W - MR << "' y='" << H - MB + 16
        << "' text-anchor='end' font-size='11'>" << xmax << "</text>\n"
        << "<text x='" << ML - 4 << "' y='" << H - MB << "' text-anchor='end' font-size='11'>"
        << ymin << "</text>\n"
        << "<text x='" << ML - 4 << "' y='" << MT + 10 << "' text-anchor='end' font-size='11'>"
        << ymax << "</text>\n";
    out << "<polyline fill='none' stroke='#1f77b4' stroke-width='1.2' points='";
    for (size_t i = 0; i < xs.size(); ++i) out << px(xs[i]) << "," << py(ys[i]) << " ";
    out << "'/>\n</svg>\n";
}

nlohmann::json params_to_json(const EquationParams& p) {
    return {{"alpha", p.alpha}, {"beta", p.beta},  {"gamma", p.gamma},
            {"epsilon", p.epsilon}, {"eta", p.eta}};
}

nlohmann::json regime_report_to_json(const RegimeReport& rep) {
    nlohmann::json j;
    j["cs"] = rep.coefficients.cs;
    j["a"] = rep.coefficients.a;
    j["b"] = rep.coefficients.b;
    j["mu1"] = rep.coefficients.mu1;
    j["mu2"] = rep.coefficients.mu2;
    j["rho"] = rep.coefficients.rho;
    j["delta"] = rep.coefficients.delta;
    j["label"] = region_name(rep.label);
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : rep.roots.roots) roots.push_back({r.real(), r.imag()});
    j["roots"] = roots;
    j["lambda_sq"] = {{rep.roots.lambda_sq[0].real(), rep.roots.lambda_sq[0].imag()},
                      {rep.roots.lambda_sq[1].real(), rep.roots.lambda_sq[1].imag()}};
    nlohmann::json waves = nlohmann::json::array();
    for (const auto& w : rep.predicted_waves) waves.push_back(wave_name(w));
    j["predicted_waves"] = waves;
    if (rep.nearest_curve) {
        j["nearest_curve"] = {{"curve", curve_name(rep.nearest_curve->id)},
                              {"signed_distance", rep.nearest_curve->signed_distance},
                              {"within_band", rep.nearest_curve->within_band}};
    }
    j["coercive"] = rep.coercive;
    j["x_plus"] = rep.thresholds.x_plus;
    j["x_minus"] = rep.thresholds.x_minus;
    for (const auto& [name, value] : rep.thresholds.family_thresholds)
        j["family_thresholds"][name] = value;
    return j;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

}  // namespace rosenau
