#include "pdmho/report.hpp"

#include <json.hpp>

namespace pdmho {

ResidualReport make_report(std::string identity, double residual, double scale, GridMeta grid) {
    ResidualReport r;
    r.identity = std::move(identity);
    r.residual = residual;
    r.scale = scale;
    r.relative = (scale > 0.0) ? residual / scale : residual;
    r.grid = grid;
    return r;
}

namespace {

nlohmann::json to_json_obj(const ResidualReport& r) {
    return {{"identity", r.identity},
            {"residual", r.residual},
            {"scale", r.scale},
            {"relative", r.relative},
            {"grid", {{"h", r.grid.h}, {"n", r.grid.n}, {"r_max", r.grid.r_max}}}};
}

}  // namespace

std::string report_to_json(const ResidualReport& r) { return to_json_obj(r).dump(); }

std::string reports_to_json(const std::vector<ResidualReport>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(to_json_obj(r));
    return arr.dump(2);
}

}  // namespace pdmho
