#include "pdmho/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pdmho {

DerivedParams derive_params(const ModelParams& params) {
    if (!(params.alpha > 0.0) || !std::isfinite(params.alpha))
        throw std::domain_error("derive_params: alpha must be > 0");
    if (!(params.omega > 0.0) || !std::isfinite(params.omega))
        throw std::domain_error("derive_params: omega must be > 0");

    DerivedParams dp;
    dp.alpha = params.alpha;
    dp.omega = params.omega;
    dp.Delta = std::hypot(params.omega, params.alpha);
    dp.lambda = 0.5 * (params.alpha + dp.Delta);
    dp.nu = dp.lambda / dp.alpha;

    if (const auto* rad = std::get_if<RadialSector>(&params.sector)) {
        if (rad->d < 2) throw std::domain_error("derive_params: radial sector needs d >= 2");
        if (rad->l < 0) throw std::domain_error("derive_params: l must be >= 0");
        dp.dim = rad->d;
        dp.L = rad->l + 0.5 * (rad->d - 3);
        dp.delicate = (rad->d == 2 && rad->l == 0);
    } else {
        const auto& lin = std::get<LineSector>(params.sector);
        dp.line = true;
        dp.parity = lin.parity;
        dp.dim = 1;
        dp.L = (lin.parity == Parity::even) ? -1.0 : 0.0;
    }
    return dp;
}

MassProfile mass_and_profiles(const DerivedParams& dp, double r) {
    const double f = 1.0 + dp.alpha * r * r;
    return {f, 1.0 / (f * f), 2.0 * dp.alpha * r};
}

EffectivePotentials effective_potentials(const DerivedParams& dp, double r) {
    const double ll1 = dp.L * (dp.L + 1.0);
    if (r == 0.0 && ll1 != 0.0)
        throw std::domain_error("effective_potentials: singular point r = 0");
    const double a = dp.alpha, w2 = dp.omega * dp.omega;
    EffectivePotentials out;
    out.V_tilde_eff = (r == 0.0 ? 0.0 : ll1 / (r * r)) + 0.25 * (w2 - 8.0 * a * a) * r * r - a;
    out.V_eff = 0.25 * (w2 - 4.0 * a * a * (ll1 + 2.0 * dp.dim)) * r * r
              - a * (2.0 * ll1 + 2.0 * dp.dim - 1.0);
    return out;
}

double t_of_r(const DerivedParams& dp, double r) {
    const double ar2 = dp.alpha * r * r;
    return (ar2 - 1.0) / (ar2 + 1.0);
}

double r_of_t(const DerivedParams& dp, double t) {
    if (t >= 1.0) throw std::domain_error("r_of_t: t must be < 1");
    if (t < -1.0) throw std::domain_error("r_of_t: t must be >= -1");
    return std::sqrt((1.0 + t) / (dp.alpha * (1.0 - t)));
}

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw std::invalid_argument(std::string("unknown key \"") + it.key() + "\" in " + where);
    }
}

}  // namespace

ModelParams params_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("parameter JSON must be an object");
    reject_unknown(j, {"alpha", "omega", "sector"}, "parameters");
    ModelParams p;
    p.alpha = j.at("alpha").get<double>();
    p.omega = j.at("omega").get<double>();
    const json& s = j.at("sector");
    const std::string type = s.at("type").get<std::string>();
    if (type == "radial") {
        reject_unknown(s, {"type", "d", "l"}, "sector");
        p.sector = RadialSector{s.at("d").get<int>(), s.at("l").get<int>()};
    } else if (type == "line") {
        reject_unknown(s, {"type", "parity"}, "sector");
        const std::string par = s.at("parity").get<std::string>();
        if (par != "even" && par != "odd")
            throw std::invalid_argument("sector parity must be \"even\" or \"odd\"");
        p.sector = LineSector{par == "even" ? Parity::even : Parity::odd};
    } else {
        throw std::invalid_argument("sector type must be \"radial\" or \"line\"");
    }
    return p;
}

std::string params_to_json(const ModelParams& params) {
    nlohmann::json j;
    j["alpha"] = params.alpha;
    j["omega"] = params.omega;
    if (const auto* rad = std::get_if<RadialSector>(&params.sector)) {
        j["sector"] = {{"type", "radial"}, {"d", rad->d}, {"l", rad->l}};
    } else {
        const auto& lin = std::get<LineSector>(params.sector);
        j["sector"] = {{"type", "line"},
                       {"parity", lin.parity == Parity::even ? "even" : "odd"}};
    }
    return j.dump();
}

std::string sector_name(const DerivedParams& dp) {
    std::ostringstream os;
    if (dp.line) {
        os << "line:" << (dp.parity == Parity::even ? "even" : "odd");
    } else {
        os << "radial:d=" << dp.dim << ",L=" << dp.L;
    }
    return os.str();
}

}  // namespace pdmho
