// Batch front end: spectra, wavefunction tables, operator-identity
// verification, constant-mass-limit sweeps, irrep tables, oracle comparison.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pdmho/io.hpp"
#include "pdmho/ladder.hpp"
#include "pdmho/oracle.hpp"
#include "pdmho/repalg.hpp"
#include "pdmho/spectrum.hpp"
#include "pdmho/verify.hpp"

namespace {

using namespace pdmho;

struct CommonOpts {
    double alpha = 3.0;
    double omega = 4.0;
    std::string sector = "radial:3,0";
    std::string config;
    int nmax = 8;
    std::size_t grid_n = 4001;
    double rmax = 0.0;
    std::string out;
    bool use_oracle = false;
    bool json = false;
};

Sector parse_sector(const std::string& s) {
    if (s.rfind("radial", 0) == 0) {
        RadialSector rs;
        const auto colon = s.find(':');
        if (colon != std::string::npos) {
            if (std::sscanf(s.c_str() + colon + 1, "%d,%d", &rs.d, &rs.l) != 2)
                throw CLI::ValidationError("--sector", "expected radial:d,l");
        }
        return rs;
    }
    if (s == "line:even") return LineSector{Parity::even};
    if (s == "line:odd") return LineSector{Parity::odd};
    throw CLI::ValidationError("--sector", "expected radial:d,l | line:even | line:odd");
}

ModelParams resolve_params(const CommonOpts& c) {
    if (!c.config.empty()) {
        std::ifstream in(c.config);
        if (!in) throw CLI::ValidationError("--config", "cannot open " + c.config);
        std::stringstream ss;
        ss << in.rdbuf();
        return params_from_json(ss.str());
    }
    ModelParams p;
    p.alpha = c.alpha;
    p.omega = c.omega;
    p.sector = parse_sector(c.sector);
    return p;
}

std::ostream& open_out(const CommonOpts& c, std::ofstream& file) {
    if (c.out.empty() || c.out == "-") return std::cout;
    file.open(c.out);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + c.out);
    return file;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--alpha", c.alpha, "deformation strength (> 0)");
    cmd->add_option("--omega", c.omega, "oscillator frequency (> 0)");
    cmd->add_option("--sector", c.sector, "radial:d,l | line:even | line:odd");
    cmd->add_option("--config", c.config, "JSON parameter file (overrides flags)");
    cmd->add_option("--nmax", c.nmax, "highest quantum number");
    cmd->add_option("--grid-n", c.grid_n, "grid points for residual checks / tabulation");
    cmd->add_option("--rmax", c.rmax, "grid extent override");
    cmd->add_option("--out", c.out, "output path (default stdout)");
    cmd->add_flag("--json", c.json, "emit JSON where applicable");
}

int cmd_spectrum(const CommonOpts& c) {
    const DerivedParams dp = derive_params(resolve_params(c));
    std::ofstream file;
    auto& os = open_out(c, file);
    if (c.use_oracle) {
        std::vector<int> ns(c.nmax + 1);
        for (int i = 0; i <= c.nmax; ++i) ns[i] = i;
        OracleConfig cfg;
        cfg.r_max = c.rmax;
        cfg.with_vectors = false;
        const auto checks = verify_spectrum(dp, ns, cfg);
        std::vector<double> oracle(ns.size());
        for (std::size_t i = 0; i < ns.size(); ++i) oracle[i] = checks[i].E_extrap;
        write_spectrum_csv(os, dp, c.nmax, &oracle);
    } else {
        write_spectrum_csv(os, dp, c.nmax);
    }
    return 0;
}

int cmd_wavefunction(const CommonOpts& c, const std::string& nlist) {
    const DerivedParams dp = derive_params(resolve_params(c));
    std::vector<int> ns;
    if (nlist.empty()) {
        for (int i = 0; i <= c.nmax; ++i) ns.push_back(i);
    } else {
        std::stringstream ss(nlist);
        std::string tok;
        while (std::getline(ss, tok, ',')) ns.push_back(std::stoi(tok));
    }
    int n_top = 0;
    for (int n : ns) n_top = std::max(n_top, n);
    const double rm = c.rmax > 0.0 ? c.rmax : domain_for_mass(dp, n_top, 1e-6);
    const GridPtr g = dp.line ? make_line_grid(rm, std::max<std::size_t>(c.grid_n / 2, 8))
                              : make_radial_grid(rm, std::max<std::size_t>(c.grid_n, 16));
    std::ofstream file;
    auto& os = open_out(c, file);
    write_wavefunction_csv(os, dp, g, ns);
    return 0;
}

int cmd_verify(const CommonOpts& c) {
    const DerivedParams dp = derive_params(resolve_params(c));
    VerifyOptions o;
    o.grid_n = c.grid_n;
    o.r_max = c.rmax;
    const VerifyResult vr = run_verification(dp, o);
    std::ofstream file;
    auto& os = open_out(c, file);
    if (c.json) {
        os << verify_to_json(vr, dp, o) << "\n";
    } else {
        os << param_echo(dp) << "\n";
        for (const auto& e : vr.entries) {
            os << (e.pass ? "PASS" : "FAIL") << "  " << e.report.identity << "  relative="
               << fmt17(e.report.relative) << "  tolerance=" << fmt17(e.tolerance) << "\n";
        }
        os << (vr.pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    }
    return vr.pass ? 0 : 1;
}

int cmd_limit(const CommonOpts& c) {
    ModelParams base = resolve_params(c);
    std::vector<LimitRow> rows;
    const DerivedParams dp_echo = derive_params(base);
    for (int k = 0; k <= 16; ++k) {
        ModelParams p = base;
        p.alpha = std::pow(10.0, -1.0 - 0.25 * k);  // 1e-1 .. 1e-5
        const DerivedParams dp = derive_params(p);
        const DeformedElements de = deformed_elements(dp, c.nmax);
        for (int n = 0; n <= c.nmax; ++n) {
            LimitRow r;
            r.alpha = p.alpha;
            r.n = n;
            double m = n;
            if (dp.line) m = 2.0 * n + (dp.parity == Parity::odd ? 1.0 : 0.0);
            const double e_const = dp.line ? dp.omega * (m + 0.5)
                                           : dp.omega * (2.0 * n + dp.L + 1.5);
            r.e_dev = std::abs(energy(dp, n) - e_const);
            r.kplus_dev = std::abs(de.k_plus[n] - su11_k_plus(dp, n));
            rows.push_back(r);
        }
    }
    std::ofstream file;
    auto& os = open_out(c, file);
    write_limit_csv(os, dp_echo, rows);
    return 0;
}

int cmd_irrep(const CommonOpts& c) {
    const DerivedParams dp = derive_params(resolve_params(c));
    std::ofstream file;
    auto& os = open_out(c, file);
    if (c.json) {
        std::ostringstream body;
        const auto dump_rc = [&](const RepCoefficients& rc) {
            std::ostringstream s;
            s << "{\"p0\":" << fmt17(rc.p0) << ",\"parity\":\""
              << (rc.line ? (rc.parity == Parity::even ? "even" : "odd") : "radial")
              << "\",\"near_degenerate\":" << (rc.near_degenerate ? "true" : "false")
              << ",\"lambda_p\":[";
            for (std::size_t i = 0; i < rc.lambda_p.size(); ++i)
                s << (i ? "," : "") << fmt17(rc.lambda_p[i]);
            s << "],\"a_sq\":[";
            for (std::size_t i = 0; i < rc.a_sq.size(); ++i) s << (i ? "," : "") << fmt17(rc.a_sq[i]);
            s << "],\"a_n\":[";
            for (std::size_t i = 0; i < rc.a_n.size(); ++i) s << (i ? "," : "") << fmt17(rc.a_n[i]);
            s << "],\"b_n\":[";
            for (std::size_t i = 0; i < rc.b_n.size(); ++i) s << (i ? "," : "") << fmt17(rc.b_n[i]);
            s << "],\"g_n\":[";
            for (std::size_t i = 0; i < rc.g_n.size(); ++i) s << (i ? "," : "") << fmt17(rc.g_n[i]);
            s << "]}";
            return s.str();
        };
        const QJ3Params q = qj3_params(dp);
        body << "{\"schema_version\":1,\"qj3\":{\"A2\":" << fmt17(q.A2) << ",\"C2\":" << fmt17(q.C2)
             << ",\"D\":" << fmt17(q.D) << ",\"G1\":" << fmt17(q.G1) << ",\"G2\":" << fmt17(q.G2)
             << "},\"irreps\":[";
        if (dp.line) {
            const auto irreps = line_irreps(dp, c.nmax);
            body << dump_rc(irreps[0]) << "," << dump_rc(irreps[1]);
        } else {
            body << dump_rc(rep_coefficients(dp, c.nmax));
        }
        body << "]}";
        os << body.str() << "\n";
        return 0;
    }
    // CSV: closed-form vs quadrature element tables
    std::vector<ElementComparison> rows;
    const TildeElements te = tilde_elements(dp, c.nmax);
    const DeformedElements de = deformed_elements(dp, c.nmax);
    const BasisQuadrature bq(dp, c.nmax);
    VerifyOptions o;
    for (int n = 0; n <= c.nmax; ++n) {
        if (n >= 1) rows.push_back({"a_n", n, te.a[n], bq.t_element(n - 1, n)});
        rows.push_back({"b_n", n, te.b[n], bq.t_element(n, n)});
        rows.push_back({"k0", n, de.k0[n], energy(dp, n) / (4.0 * dp.lambda)});
    }
    std::ofstream f2;
    auto& os2 = open_out(c, f2);
    (void)os2;
    write_elements_csv(os, dp, rows);
    return 0;
}

int cmd_oracle_compare(const CommonOpts& c) {
    const DerivedParams dp = derive_params(resolve_params(c));
    std::vector<int> ns;
    for (int i = 0; i <= c.nmax; ++i) ns.push_back(i);
    OracleConfig cfg;
    cfg.r_max = c.rmax;
    const auto checks = verify_spectrum(dp, ns, cfg);
    std::ofstream file;
    auto& os = open_out(c, file);
    write_oracle_csv(os, dp, checks);
    if (dp.delicate)
        std::cerr << "note: d=2, l=0 sector (L=-1/2): oracle convergence not certified\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deformed-mass oscillator toolkit: spectra, wavefunctions, algebra verification"};
    app.require_subcommand(1);

    CommonOpts c;
    std::string nlist;

    auto* spectrum = app.add_subcommand("spectrum", "closed-form (and oracle) energies as CSV");
    add_common(spectrum, c);
    spectrum->add_flag("--oracle", c.use_oracle, "also run the finite-difference oracle");

    auto* wavefn = app.add_subcommand("wavefunction", "tabulate psi_n on a grid as CSV");
    add_common(wavefn, c);
    wavefn->add_option("--nlist", nlist, "comma-separated list of n (default 0..nmax)");

    auto* verify = app.add_subcommand("verify", "run the operator-identity verification suites");
    add_common(verify, c);

    auto* limit = app.add_subcommand("limit", "constant-mass-limit deviation sweep as CSV");
    add_common(limit, c);

    auto* irrep = app.add_subcommand("irrep", "irrep coefficient tables (CSV or --json)");
    add_common(irrep, c);

    auto* oracle = app.add_subcommand("oracle-compare", "closed-form vs extrapolated oracle energies");
    add_common(oracle, c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) return cmd_spectrum(c);
        if (wavefn->parsed()) return cmd_wavefunction(c, nlist);
        if (verify->parsed()) return cmd_verify(c);
        if (limit->parsed()) return cmd_limit(c);
        if (irrep->parsed()) return cmd_irrep(c);
        if (oracle->parsed()) return cmd_oracle_compare(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
