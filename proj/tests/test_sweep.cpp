#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jt/sweep.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

using namespace jt;

namespace {

SweepSpec small_eb_spec() {
    SweepSpec spec;
    spec.model = Model::eb;
    spec.variable = SweepVariable::coupling;
    spec.min = 0.2;
    spec.max = 1.4;
    spec.count = 4;
    spec.fock = 30;
    return spec;
}

SweepSpec small_ee_spec() {
    SweepSpec spec;
    spec.model = Model::ee;
    spec.variable = SweepVariable::c1;
    spec.min = 0.0;
    spec.max = 1.0;
    spec.count = 5;
    spec.coupling = 1.0;
    spec.fock = 14;
    return spec;
}

bool records_identical(const std::vector<SweepRecord>& a, const std::vector<SweepRecord>& b) {
    if (a.size() != b.size()) return false;
    auto same = [](double x, double y) {
        return (std::isnan(x) && std::isnan(y)) || x == y;
    };
    for (size_t i = 0; i < a.size(); ++i) {
        if (!same(a[i].coupling_over_omega, b[i].coupling_over_omega)) return false;
        if (!same(a[i].c1, b[i].c1)) return false;
        if (!same(a[i].gamma, b[i].gamma)) return false;
        if (!same(a[i].delta, b[i].delta)) return false;
        if (!same(a[i].entropy, b[i].entropy)) return false;
        if (!same(a[i].ansatz_entropy, b[i].ansatz_entropy)) return false;
        if (!same(a[i].abs_diff, b[i].abs_diff)) return false;
        if (!same(a[i].delta_s, b[i].delta_s)) return false;
        if (!same(a[i].ground_energy, b[i].ground_energy)) return false;
        if (a[i].fock != b[i].fock || a[i].converged != b[i].converged) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parallel and serial sweeps agree exactly") {
    for (const SweepSpec& spec : {small_eb_spec(), small_ee_spec()}) {
        const auto par = run_sweep(spec);
        const auto ser = run_sweep_serial(spec);
        REQUIRE(par.size() == size_t(spec.count));
        CHECK(records_identical(par, ser));
    }
}

TEST_CASE("CSV output is deterministic and well-formed") {
    const SweepSpec spec = small_eb_spec();
    const auto rows = run_sweep(spec);
    std::ostringstream a, b;
    write_csv(a, spec, rows);
    write_csv(b, spec, run_sweep(spec));
    CHECK(a.str() == b.str());

    std::istringstream in(a.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "L_over_omega,c1,gamma,delta,entropy,ground_energy,N,converged");
    int lines = 0;
    for (std::string line; std::getline(in, line);) {
        ++lines;
        CHECK(std::count(line.begin(), line.end(), ',') == 7);
    }
    CHECK(lines == spec.count);
}

TEST_CASE("two-mode CSV carries the ansatz comparison columns") {
    const SweepSpec spec = small_ee_spec();
    const auto rows = run_sweep(spec);
    std::ostringstream out;
    write_csv(out, spec, rows);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "L_over_omega,c1,gamma,delta,entropy,ansatz_entropy,abs_diff,delta_s,"
          "ground_energy,N,converged");
    // shared degenerate pair: identical energy and truncation on every row
    for (size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].ground_energy == rows[0].ground_energy);
        CHECK(rows[i].fock == rows[0].fock);
        CHECK(rows[i].delta_s == rows[0].delta_s);
    }
}

TEST_CASE("JSON output parses and mirrors the CSV cells") {
    const SweepSpec spec = small_eb_spec();
    const auto rows = run_sweep(spec);
    std::ostringstream out;
    write_json(out, spec, rows);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc.at("spec").at("model") == "eb");
    CHECK(doc.at("spec").at("count") == spec.count);
    REQUIRE(doc.at("rows").size() == size_t(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        const auto& row = doc.at("rows").at(i);
        CHECK(row.at("L_over_omega") == format_number(rows[i].coupling_over_omega));
        CHECK(row.at("entropy") == format_number(rows[i].entropy));
        CHECK(row.at("converged") == (rows[i].converged ? "1" : "0"));
    }
}

TEST_CASE("number formatting uses 12 significant digits") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(-1.4457426105) == "-1.4457426105");
}

TEST_CASE("spec validation rejects malformed grids") {
    SweepSpec spec = small_eb_spec();
    spec.count = 1;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = small_eb_spec();
    spec.min = 2.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = small_eb_spec();
    spec.variable = SweepVariable::c1;
    spec.min = -0.5;
    spec.max = 0.5;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = small_eb_spec();
    spec.omega = 0.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    CHECK_THROWS_AS(parse_model("foo"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variable("bar"), std::invalid_argument);
}

TEST_CASE("unconverged rows are reported") {
    std::vector<SweepRecord> rows(2);
    CHECK_FALSE(any_unconverged(rows));
    rows[1].converged = false;
    CHECK(any_unconverged(rows));
}
