#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pdmho/grid.hpp"
#include "pdmho/model.hpp"
#include "pdmho/oracle.hpp"

// CSV/JSON emitters. All floats are written with 17 significant digits so
// outputs are bitwise reproducible and diffable.

namespace pdmho {

std::string fmt17(double x);

// Parameter echo used as the first header line of every CSV.
std::string param_echo(const DerivedParams& dp);

// columns: n, E_closed [, E_oracle]
void write_spectrum_csv(std::ostream& os, const DerivedParams& dp, int n_max,
                        const std::vector<double>* oracle_energies = nullptr);

// columns: r (or x), t, psi_n for each requested n
void write_wavefunction_csv(std::ostream& os, const DerivedParams& dp, const GridPtr& grid,
                            const std::vector<int>& ns);

// columns: n, E_closed, E_h, E_h2, E_extrap, rel_err, overlap
void write_oracle_csv(std::ostream& os, const DerivedParams& dp,
                      const std::vector<SpectrumCheck>& checks);

// columns: table, n, closed_form, quadrature, abs_diff
struct ElementComparison {
    std::string table;
    int n;
    double closed_form;
    double quadrature;
};
void write_elements_csv(std::ostream& os, const DerivedParams& dp,
                        const std::vector<ElementComparison>& rows);

// columns: alpha, n, e_dev, kplus_dev
struct LimitRow {
    double alpha;
    int n;
    double e_dev, kplus_dev;
};
void write_limit_csv(std::ostream& os, const DerivedParams& dp, const std::vector<LimitRow>& rows);

}  // namespace pdmho
