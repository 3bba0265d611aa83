#include "rosenau/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rosenau/errors.hpp"

namespace rosenau {

namespace {

double ipow(double u, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= u;
    return r;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

double eval_nonlinearity(const NonlinearitySpec& spec, double u, double ux, double uxx) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SinglePower>) {
                return ipow(u, v.p + 1) / (v.p + 1);
            } else if constexpr (std::is_same_v<T, CubicQuintic>) {
                return ipow(u, 3) / 3.0 + v.r * ipow(u, 5) / 5.0;
            } else if constexpr (std::is_same_v<T, PowerSum>) {
                double g = 0.0;
                for (const auto& t : v.terms) g += t.coefficient * ipow(u, t.degree);
                return g;
            } else {
                return v.A * u * u / 2.0 + v.B * ipow(u, v.m + 1) / (v.m + 1) +
                       v.s * (ux * ux / 2.0 + u * uxx);
            }
        },
        spec.variant);
}

std::optional<int> homogeneity_degree(const NonlinearitySpec& spec) {
    if (const auto* sp = std::get_if<SinglePower>(&spec.variant)) return sp->p + 2;
    return std::nullopt;
}

std::optional<int> lowest_degree(const NonlinearitySpec& spec) {
    return std::visit(
        [](const auto& v) -> std::optional<int> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SinglePower>) {
                return v.p + 1;
            } else if constexpr (std::is_same_v<T, CubicQuintic>) {
                return 3;
            } else if constexpr (std::is_same_v<T, PowerSum>) {
                std::optional<int> d;
                for (const auto& t : v.terms) {
                    if (t.coefficient == 0.0) continue;
                    if (!d || t.degree < *d) d = t.degree;
                }
                return d;
            } else {
                return std::nullopt;
            }
        },
        spec.variant);
}

bool has_primitive(const NonlinearitySpec& spec) {
    return !std::holds_alternative<DerivativeForm>(spec.variant);
}

double eval_primitive(const NonlinearitySpec& spec, double u) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SinglePower>) {
                return ipow(u, v.p + 2) / ((v.p + 2.0) * (v.p + 1.0));
            } else if constexpr (std::is_same_v<T, CubicQuintic>) {
                return ipow(u, 4) / 12.0 + v.r * ipow(u, 6) / 30.0;
            } else if constexpr (std::is_same_v<T, PowerSum>) {
                double G = 0.0;
                for (const auto& t : v.terms)
                    G += t.coefficient * ipow(u, t.degree + 1) / (t.degree + 1.0);
                return G;
            } else {
                throw NoPrimitive("derivative-form nonlinearity has no pointwise primitive");
            }
        },
        spec.variant);
}

std::optional<double> default_exponent(const NonlinearitySpec& spec) {
    auto d = lowest_degree(spec);
    if (!d || *d < 2) return std::nullopt;
    return static_cast<double>(*d) / (*d - 1.0);
}

bool needs_derivatives(const NonlinearitySpec& spec) {
    if (const auto* df = std::get_if<DerivativeForm>(&spec.variant)) return df->s != 0.0;
    return false;
}

std::string describe(const NonlinearitySpec& spec) {
    std::ostringstream os;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SinglePower>) {
                os << "power:" << v.p;
            } else if constexpr (std::is_same_v<T, CubicQuintic>) {
                os << "cubic-quintic:" << v.r;
            } else if constexpr (std::is_same_v<T, PowerSum>) {
                os << "powersum:";
                bool first = true;
                for (const auto& t : v.terms) {
                    if (!first) os << ",";
                    os << t.coefficient << "," << t.degree;
                    first = false;
                }
            } else {
                os << "derivative:" << v.A << ":" << v.B << ":" << v.m << ":" << v.s;
            }
        },
        spec.variant);
    return os.str();
}

NonlinearitySpec parse_nonlinearity(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.empty()) throw std::invalid_argument("empty nonlinearity spec");
    const std::string& kind = parts[0];
    if (kind == "power") {
        int p = parts.size() > 1 ? std::stoi(parts[1]) : 1;
        if (p < 1) throw std::invalid_argument("power nonlinearity needs p >= 1");
        return {SinglePower{p}};
    }
    if (kind == "cubic-quintic") {
        double r = parts.size() > 1 ? std::stod(parts[1]) : 0.0;
        return {CubicQuintic{r}};
    }
    if (kind == "powersum") {
        PowerSum ps;
        if (parts.size() > 1 && !parts[1].empty()) {
            auto items = split(parts[1], ',');
            if (items.size() % 2 != 0)
                throw std::invalid_argument("powersum needs coefficient,degree pairs");
            for (size_t i = 0; i + 1 < items.size(); i += 2) {
                PowerTerm t{std::stod(items[i]), std::stoi(items[i + 1])};
                if (t.degree < 2) throw std::invalid_argument("powersum degrees must be >= 2");
                ps.terms.push_back(t);
            }
        }
        return {ps};
    }
    if (kind == "derivative") {
        if (parts.size() != 5)
            throw std::invalid_argument("derivative nonlinearity needs derivative:A:B:m:s");
        DerivativeForm df{std::stod(parts[1]), std::stod(parts[2]), std::stoi(parts[3]),
                          std::stod(parts[4])};
        if (df.m < 1) throw std::invalid_argument("derivative nonlinearity needs m >= 1");
        return {df};
    }
    throw std::invalid_argument("unknown nonlinearity '" + kind + "'");
}

}  // namespace rosenau
