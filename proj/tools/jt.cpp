#include "jt/ansatz.hpp"
#include "jt/classical.hpp"
#include "jt/eb_model.hpp"
#include "jt/ee_model.hpp"
#include "jt/entanglement.hpp"
#include "jt/quadrature.hpp"
#include "jt/sweep.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

// Data goes to --out (default stdout); diagnostics go to stderr only.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

int run_sweep_cmd(const jt::SweepSpec& spec, const std::string& format,
                  const std::string& out_path) {
    const auto rows = jt::run_sweep(spec);
    OutputTarget out(out_path);
    if (format == "json")
        jt::write_json(out.stream(), spec, rows);
    else
        jt::write_csv(out.stream(), spec, rows);
    if (jt::any_unconverged(rows)) {
        std::cerr << "warning: some rows did not converge within the truncation cap\n";
        return 2;
    }
    return 0;
}

int run_bifurcation_cmd(const std::string& model, double delta, double omega, double l_min,
                        double l_max, int count, const std::string& format,
                        const std::string& out_path) {
    OutputTarget out(out_path);
    std::ostream& os = out.stream();
    if (model == "eb") {
        jt::EbParams p;
        p.field = delta;
        p.omega = omega;
        const double threshold = jt::bifurcation_threshold_eb(p);
        const auto rows = jt::bifurcation_diagram_eb(p, l_min, l_max, count);
        if (format == "json") {
            nlohmann::ordered_json doc;
            doc["model"] = "eb";
            doc["threshold"] = threshold;
            doc["rows"] = nlohmann::ordered_json::array();
            for (const auto& r : rows)
                doc["rows"].push_back({{"coupling", r.coupling},
                                       {"branch", r.branch},
                                       {"q", r.q},
                                       {"spin_x", r.spin_x},
                                       {"spin_z", r.spin_z},
                                       {"stability", jt::to_string(r.stability)}});
            os << doc.dump(2) << "\n";
        } else {
            os << "coupling,branch,q,spin_x,spin_z,stability,threshold\n";
            for (const auto& r : rows)
                os << jt::format_number(r.coupling) << "," << r.branch << ","
                   << jt::format_number(r.q) << "," << jt::format_number(r.spin_x) << ","
                   << jt::format_number(r.spin_z) << "," << jt::to_string(r.stability) << ","
                   << jt::format_number(threshold) << "\n";
        }
        return 0;
    }
    // two-mode model
    jt::EeParams p;
    p.field = delta;
    p.omega = omega;
    const jt::EeThreshold th = jt::bifurcation_threshold_ee(p);
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["model"] = "ee";
        doc["threshold"] = th.threshold;
        doc["threshold_candidates"] = {{"L_squared_equals_4_omega_delta", th.candidate_quartic},
                                       {"L_squared_equals_16_omega2_delta2", th.candidate_printed}};
        doc["rows"] = nlohmann::ordered_json::array();
        for (int i = 0; i < count; ++i) {
            p.coupling = l_min + (l_max - l_min) * i / (count - 1.0);
            for (const auto& fp : jt::fixed_points_ee(p))
                doc["rows"].push_back({{"coupling", p.coupling},
                                       {"branch", fp.branch},
                                       {"q_theta", fp.state.q_theta},
                                       {"q_eps", fp.state.q_eps},
                                       {"spin_theta", fp.state.spin_theta},
                                       {"spin_eps", fp.state.spin_eps},
                                       {"spin_w", fp.state.spin_w},
                                       {"stability", jt::to_string(fp.stability)}});
        }
        os << doc.dump(2) << "\n";
    } else {
        os << "coupling,branch,q_theta,q_eps,spin_theta,spin_eps,spin_w,stability,"
              "threshold,threshold_form_a,threshold_form_b\n";
        for (int i = 0; i < count; ++i) {
            p.coupling = l_min + (l_max - l_min) * i / (count - 1.0);
            for (const auto& fp : jt::fixed_points_ee(p))
                os << jt::format_number(p.coupling) << "," << fp.branch << ","
                   << jt::format_number(fp.state.q_theta) << ","
                   << jt::format_number(fp.state.q_eps) << ","
                   << jt::format_number(fp.state.spin_theta) << ","
                   << jt::format_number(fp.state.spin_eps) << ","
                   << jt::format_number(fp.state.spin_w) << "," << jt::to_string(fp.stability)
                   << "," << jt::format_number(th.threshold) << ","
                   << jt::format_number(th.candidate_quartic) << ","
                   << jt::format_number(th.candidate_printed) << "\n";
        }
    }
    return 0;
}

struct Check {
    std::string name;
    double value;
    double bound;
    bool pass;
};

int run_verify_cmd(const std::string& suite, const std::string& out_path) {
    std::vector<Check> checks;
    auto add = [&](const std::string& name, double value, double bound) {
        checks.push_back({name, value, bound, value <= bound});
    };

    if (suite == "conservation") {
        jt::EeParams p;
        p.coupling = 1.0;
        p.field = 0.5;
        p.fock = 20;
        const jt::ConservedJ j = jt::conserved_j_w(p);
        add("interior_commutator_selected_spin_factor",
            j.spin_factor == 0.5 ? j.residual_half : j.residual_one, 1e-10);
        checks.push_back({"selected_spin_factor", j.spin_factor, 0.5, j.spin_factor == 0.5});
    } else if (suite == "degeneracy") {
        jt::EbParams eb;
        eb.coupling = 1.0;
        eb.fock = 40;
        const auto pairs = jt::hermitian_eig(jt::build_hamiltonian_fock(eb), 10);
        double worst = 0;
        for (size_t i = 0; i + 1 < pairs.size(); i += 2)
            worst = std::max(worst, std::abs(pairs[i + 1].value - pairs[i].value));
        add("eb_delta0_pairwise_degeneracy", worst, 1e-8);
        jt::EeParams ee;
        ee.coupling = 1.0;
        ee.fock = 25;
        add("ee_delta0_ground_pair_gap", jt::ground_pair_at(ee).pair_gap, 1e-7);
    } else if (suite == "basis-equivalence") {
        jt::EbParams p;
        p.coupling = 1.0;
        p.field = 0.5;
        p.fock = 60;
        const auto fock = jt::hermitian_eig(jt::build_hamiltonian_fock(p), 5);
        const auto displ = jt::hermitian_eig(jt::build_hamiltonian_displaced(p), 5);
        double worst = 0;
        for (int i = 0; i < 5; ++i)
            worst = std::max(worst, std::abs(fock[i].value - displ[i].value));
        add("displaced_vs_fock_lowest5", worst, 1e-7);
    } else if (suite == "ansatz-integrals") {
        const double alpha = 1.0;
        const double root_pi = std::sqrt(3.14159265358979323846);
        const double ea = std::exp(alpha * alpha) * alpha * root_pi;
        auto gauss = [&](auto f) { return jt::integrate(f, 0.0, 20.0, 1e-12); };
        const double cosh2 =
            gauss([&](double q) { return std::exp(-q * q) * std::pow(std::cosh(alpha * q), 2) * q; });
        const double sinh2 =
            gauss([&](double q) { return std::exp(-q * q) * std::pow(std::sinh(alpha * q), 2) * q; });
        const double coshsinh = gauss([&](double q) {
            return std::exp(-q * q) * std::cosh(alpha * q) * std::sinh(alpha * q) * q;
        });
        add("cosh2_integral", std::abs(cosh2 - (0.5 + 0.25 * ea * std::erf(alpha))), 1e-10);
        add("sinh2_integral", std::abs(sinh2 - 0.25 * ea * std::erf(alpha)), 1e-10);
        add("coshsinh_integral", std::abs(coshsinh - 0.25 * ea), 1e-10);
    } else {
        throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");
    }

    bool all_pass = true;
    nlohmann::ordered_json doc;
    doc["suite"] = suite;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
        all_pass = all_pass && c.pass;
        doc["checks"].push_back(
            {{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"pass", c.pass}});
    }
    doc["pass"] = all_pass;
    OutputTarget out(out_path);
    out.stream() << doc.dump(2) << "\n";
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jahn-Teller ground-state entanglement toolkit"};
    app.require_subcommand(1);

    std::string model = "eb", variable = "coupling", format = "csv", out_path, suite;
    double vmin = 0.0, vmax = 1.0;
    int count = 11, fock = 0, threads = 0;
    double coupling = 1.0, omega = 1.0, delta = 0.0, c1 = 0.70710678118654752, gamma = 0.0;

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep of ground-state observables");
    sweep->add_option("--model", model, "eb or ee")->check(CLI::IsMember({"eb", "ee"}));
    sweep->add_option("--sweep", variable, "swept variable: coupling, c1, gamma, delta")
        ->check(CLI::IsMember({"coupling", "c1", "gamma", "delta"}));
    sweep->add_option("--min", vmin, "grid minimum");
    sweep->add_option("--max", vmax, "grid maximum");
    sweep->add_option("--count", count, "grid size");
    sweep->add_option("--coupling", coupling, "fixed coupling L");
    sweep->add_option("--omega", omega, "oscillator frequency");
    sweep->add_option("--delta", delta, "transverse field");
    sweep->add_option("--c1", c1, "superposition weight");
    sweep->add_option("--gamma", gamma, "superposition phase");
    sweep->add_option("--fock", fock, "starting Fock truncation per mode");
    sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", out_path, "output path (default stdout)");
    sweep->add_option("--threads", threads, "worker threads (default: cores)");

    CLI::App* bif = app.add_subcommand("bifurcation", "classical fixed-point branches");
    bif->add_option("--model", model, "eb or ee")->check(CLI::IsMember({"eb", "ee"}));
    bif->add_option("--min", vmin, "coupling grid minimum");
    bif->add_option("--max", vmax, "coupling grid maximum");
    bif->add_option("--count", count, "grid size");
    bif->add_option("--omega", omega, "oscillator frequency");
    bif->add_option("--delta", delta, "transverse field");
    bif->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    bif->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "diagnostic suites");
    verify
        ->add_option("--suite", suite,
                     "conservation, degeneracy, basis-equivalence, or ansatz-integrals")
        ->required()
        ->check(CLI::IsMember(
            {"conservation", "degeneracy", "basis-equivalence", "ansatz-integrals"}));
    verify->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
#ifdef _OPENMP
        if (threads > 0) omp_set_num_threads(threads);
#endif
        if (sweep->parsed()) {
            jt::SweepSpec spec;
            spec.model = jt::parse_model(model);
            spec.variable = jt::parse_variable(variable);
            spec.min = vmin;
            spec.max = vmax;
            spec.count = count;
            spec.coupling = coupling;
            spec.omega = omega;
            spec.field = delta;
            spec.c1 = c1;
            spec.gamma = gamma;
            spec.fock = fock;
            return run_sweep_cmd(spec, format, out_path);
        }
        if (bif->parsed())
            return run_bifurcation_cmd(model, delta, omega, vmin, vmax, count, format, out_path);
        if (verify->parsed()) return run_verify_cmd(suite, out_path);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
