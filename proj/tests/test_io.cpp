#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pdmho/io.hpp"
#include "pdmho/spectrum.hpp"
#include "pdmho/verify.hpp"

using namespace pdmho;

namespace {
DerivedParams ref() { return derive_params({3.0, 4.0, RadialSector{3, 0}}); }

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

int count_fields(const std::string& line) {
    int n = 1;
    for (char c : line)
        if (c == ',') ++n;
    return n;
}
}  // namespace

TEST_CASE("full-precision formatting round-trips") {
    for (double x : {1.0 / 3.0, 15.0, 1.8998355191963330, -2.7e-15, 119.0}) {
        const std::string s = fmt17(x);
        CHECK(std::stod(s) == x);
    }
}

TEST_CASE("spectrum csv") {
    std::ostringstream os;
    write_spectrum_csv(os, ref(), 2);
    const auto ls = lines_of(os.str());
    REQUIRE(ls.size() == 5);
    CHECK(ls[0].rfind("# alpha=3", 0) == 0);
    CHECK(ls[1] == "n,E_closed");
    CHECK(ls[2] == "0,15");
    CHECK(ls[3] == "1,55");
    CHECK(ls[4] == "2,119");
}

TEST_CASE("wavefunction csv layout and sign structure") {
    const DerivedParams dp = ref();
    const GridPtr g = make_radial_grid(6.0, 300);
    std::ostringstream os;
    write_wavefunction_csv(os, dp, g, {0, 1});
    const auto ls = lines_of(os.str());
    REQUIRE(ls.size() == 2 + 300);
    CHECK(ls[1] == "r,t,psi_0,psi_1");
    CHECK(count_fields(ls[2]) == 2 + 2);
    // psi_0 positive everywhere, psi_1 exactly one sign change
    int flips = 0;
    double prev1 = 0.0;
    for (std::size_t i = 2; i < ls.size(); ++i) {
        std::stringstream row(ls[i]);
        std::string tok;
        std::vector<double> vals;
        while (std::getline(row, tok, ',')) vals.push_back(std::stod(tok));
        CHECK(vals[2] > 0.0);
        if (i > 2 && prev1 * vals[3] < 0.0) ++flips;
        prev1 = vals[3];
    }
    CHECK(flips == 1);
}

TEST_CASE("csv output is deterministic") {
    const DerivedParams dp = ref();
    const GridPtr g = make_radial_grid(4.0, 101);
    std::ostringstream a, b;
    write_wavefunction_csv(a, dp, g, {0, 1, 2});
    write_wavefunction_csv(b, dp, g, {0, 1, 2});
    CHECK(a.str() == b.str());
}

TEST_CASE("oracle and limit csv headers") {
    std::ostringstream os;
    write_oracle_csv(os, ref(), {});
    CHECK(lines_of(os.str())[1] == "n,E_closed,E_h,E_h2,E_extrap,rel_err,overlap");

    std::ostringstream os2;
    write_limit_csv(os2, ref(), {{1e-3, 0, 1.0, 2.0}});
    const auto ls = lines_of(os2.str());
    CHECK(ls[1] == "alpha,n,e_dev,kplus_dev");
    CHECK(count_fields(ls[2]) == 4);

    std::ostringstream os3;
    write_elements_csv(os3, ref(), {{"a_n", 1, 0.5, 0.5 + 1e-12}});
    const auto ls3 = lines_of(os3.str());
    CHECK(ls3[1] == "table,n,closed_form,quadrature,abs_diff");
}

TEST_CASE("verification report json schema") {
    const DerivedParams dp = ref();
    VerifyOptions o;
    o.grid_n = 501;  // coarse: some entries may fail, schema must still hold
    std::vector<VerifyEntry> es = suite_jacobi(dp);
    VerifyResult vr;
    for (auto& e : es) {
        vr.pass = vr.pass && e.pass;
        vr.entries.push_back(e);
    }
    const std::string js = verify_to_json(vr, dp, o);
    CHECK(js.find("\"schema_version\": 1") != std::string::npos);
    CHECK(js.find("\"entries\"") != std::string::npos);
    CHECK(js.find("\"tolerance\"") != std::string::npos);
    CHECK(js.find("\"pass\"") != std::string::npos);
}
