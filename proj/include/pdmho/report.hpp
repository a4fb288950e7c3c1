#pragma once

#include <string>
#include <vector>

// Named residual reports produced by the verification suites.

namespace pdmho {

struct GridMeta {
    double h = 0;
    std::size_t n = 0;
    double r_max = 0;
};

struct ResidualReport {
    std::string identity;
    double residual = 0;  // L2 of the mismatch on the trimmed interior window
    double scale = 0;     // L2 scale of the compared quantities
    double relative = 0;  // residual / scale
    GridMeta grid;
};

ResidualReport make_report(std::string identity, double residual, double scale, GridMeta grid);

// {"identity":..., "residual":..., "scale":..., "relative":..., "grid":{...}}
std::string report_to_json(const ResidualReport& r);
std::string reports_to_json(const std::vector<ResidualReport>& rs);

}  // namespace pdmho
