#include "pdmho/io.hpp"

#include <cstdio>

#include "pdmho/spectrum.hpp"

namespace pdmho {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string param_echo(const DerivedParams& dp) {
    std::string s = "# alpha=" + fmt17(dp.alpha) + " omega=" + fmt17(dp.omega)
                  + " sector=" + sector_name(dp) + " lambda=" + fmt17(dp.lambda)
                  + " Delta=" + fmt17(dp.Delta) + " L=" + fmt17(dp.L);
    return s;
}

void write_spectrum_csv(std::ostream& os, const DerivedParams& dp, int n_max,
                        const std::vector<double>* oracle_energies) {
    os << param_echo(dp) << "\n";
    os << (oracle_energies ? "n,E_closed,E_oracle\n" : "n,E_closed\n");
    for (int n = 0; n <= n_max; ++n) {
        os << n << "," << fmt17(energy(dp, n));
        if (oracle_energies) os << "," << fmt17((*oracle_energies)[n]);
        os << "\n";
    }
}

void write_wavefunction_csv(std::ostream& os, const DerivedParams& dp, const GridPtr& grid,
                            const std::vector<int>& ns) {
    os << param_echo(dp) << " grid_n=" << grid->size() << " rmax=" << fmt17(grid->r_max()) << "\n";
    os << (dp.line ? "x,t" : "r,t");
    for (int n : ns) os << ",psi_" << n;
    os << "\n";
    int n_max = 0;
    for (int n : ns) n_max = std::max(n_max, n);
    const auto tower = psi_tower_on_grid(dp, n_max, grid);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const double r = grid->pts[i];
        os << fmt17(r) << "," << fmt17(t_of_r(dp, std::abs(r)));
        for (int n : ns) os << "," << fmt17(tower[n].v[i]);
        os << "\n";
    }
}

void write_oracle_csv(std::ostream& os, const DerivedParams& dp,
                      const std::vector<SpectrumCheck>& checks) {
    os << param_echo(dp) << "\n";
    os << "n,E_closed,E_h,E_h2,E_extrap,rel_err,overlap\n";
    for (const auto& c : checks) {
        os << c.n << "," << fmt17(c.E_closed) << "," << fmt17(c.E_h) << "," << fmt17(c.E_h2) << ","
           << fmt17(c.E_extrap) << "," << fmt17(c.rel_err) << "," << fmt17(c.overlap) << "\n";
    }
}

void write_elements_csv(std::ostream& os, const DerivedParams& dp,
                        const std::vector<ElementComparison>& rows) {
    os << param_echo(dp) << "\n";
    os << "table,n,closed_form,quadrature,abs_diff\n";
    for (const auto& r : rows) {
        os << r.table << "," << r.n << "," << fmt17(r.closed_form) << "," << fmt17(r.quadrature)
           << "," << fmt17(std::abs(r.closed_form - r.quadrature)) << "\n";
    }
}

void write_limit_csv(std::ostream& os, const DerivedParams& dp, const std::vector<LimitRow>& rows) {
    os << param_echo(dp) << "\n";
    os << "alpha,n,e_dev,kplus_dev\n";
    for (const auto& r : rows)
        os << fmt17(r.alpha) << "," << r.n << "," << fmt17(r.e_dev) << "," << fmt17(r.kplus_dev)
           << "\n";
}

}  // namespace pdmho
