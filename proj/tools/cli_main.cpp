// Command-line frontend: kernel evaluation, weighted-bound verification,
// identity checks, oracle comparison and field reconstruction, all emitting
// deterministic CSV.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <axikernel/bessel.hpp>
#include <axikernel/errors.hpp>
#include <axikernel/fields.hpp>
#include <axikernel/grid_io.hpp>
#include <axikernel/kernel.hpp>
#include <axikernel/norms.hpp>

namespace ax = axikernel;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGateFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    ax::QuadratureSpec spec;                    // tolerance overrides land here
    std::string in_path, out_path;
    std::string out_stream_path, out_velocity_path;
    std::vector<double> p_values{1.0, 1.5, 1.9};
    std::vector<double> delta_values{0.0, 0.5, 0.9};
    std::vector<double> r_samples{0.25, 0.5, 1.0, 2.0, 4.0};
    std::string grid_spec;
    double summary_delta = 0.5;
    bool stamp = false;
    long seed = 0; // reserved; all commands here are deterministic
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ax::data_error(path + ": cannot open for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::vector<double> parse_numbers(const std::string& text, char sep) {
    std::vector<double> out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, sep)) {
        if (token.empty()) throw ax::data_error("empty number in '" + text + "'");
        const char* begin = token.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0')
            throw ax::data_error("malformed number '" + token + "'");
        out.push_back(v);
    }
    return out;
}

ax::RectilinearGrid parse_grid(const std::string& text) {
    // rmin:rmax:nr,zmin:zmax:nz
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ax::data_error("--grid expects rmin:rmax:nr,zmin:zmax:nz");
    auto parse_axis = [](const std::string& part) {
        const auto nums = parse_numbers(part, ':');
        if (nums.size() != 3 || nums[2] < 1 || nums[2] != std::floor(nums[2]))
            throw ax::data_error("--grid axis expects min:max:count");
        return ax::RectilinearGrid::linspace(nums[0], nums[1],
                                             static_cast<std::size_t>(nums[2]));
    };
    ax::RectilinearGrid grid;
    grid.r_axis = parse_axis(text.substr(0, comma));
    grid.z_axis = parse_axis(text.substr(comma + 1));
    grid.validate();
    return grid;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

int cmd_eval(const RunConfig& cfg, const std::string& quantity,
             const std::vector<std::string>& inline_points) {
    const bool needs_time = (quantity == "G" || quantity == "dzG");
    const std::size_t arity = needs_time ? 4 : 3;

    std::vector<std::vector<double>> points;
    for (const auto& p : inline_points) points.push_back(parse_numbers(p, ','));
    if (!cfg.in_path.empty()) {
        std::ifstream in(cfg.in_path);
        if (!in) throw ax::data_error(cfg.in_path + ": cannot open for reading");
        std::string line;
        long line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            if (std::isalpha(static_cast<unsigned char>(line[0]))) continue; // header row
            try {
                points.push_back(parse_numbers(line, ','));
            } catch (const ax::data_error& e) {
                throw ax::data_error(cfg.in_path + ":" + std::to_string(line_no) + ": " +
                                     e.what());
            }
        }
    }
    if (points.empty()) throw ax::data_error("eval: no points given");
    for (const auto& p : points)
        if (p.size() != arity)
            throw ax::data_error("eval: " + quantity + " points need " +
                                 std::to_string(arity) + " comma-separated values");

    Output out(cfg.out_path);
    auto& os = out.stream();
    os << (needs_time ? "t,r,rho,zeta,value,error_estimate,flag\n"
                      : "r,rho,zeta,value,error_estimate,flag\n");
    for (const auto& p : points) {
        for (double v : p) os << fmt(v) << ',';
        try {
            if (quantity == "G") {
                os << fmt(ax::heat_kernel({p[0], p[1], p[2], p[3]})) << ",0,ok\n";
            } else if (quantity == "dzG") {
                os << fmt(ax::heat_kernel_dz({p[0], p[1], p[2], p[3]})) << ",0,ok\n";
            } else if (quantity == "Gamma") {
                const auto q = ax::green_function_quad(p[0], p[1], p[2], cfg.spec);
                os << fmt(q.value) << ',' << fmt(q.error_estimate) << ",ok\n";
            } else {
                const auto q = ax::green_function_dz_quad(p[0], p[1], p[2], cfg.spec);
                os << fmt(q.value) << ',' << fmt(q.error_estimate) << ",ok\n";
            }
        } catch (const ax::singularity_error&) {
            os << ",,singular\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify-bounds
// ---------------------------------------------------------------------------

int cmd_verify_bounds(const RunConfig& cfg, const std::vector<std::string>& kinds,
                      double gate_lp, double gate_l2, double gate_dz) {
    for (double p : cfg.p_values)
        if (p < 1.0 || p >= 2.0)
            throw CLI::ValidationError("--p values must lie in [1, 2); got " + fmt(p));
    for (double d : cfg.delta_values)
        if (d < 0.0 || d >= 1.0)
            throw CLI::ValidationError("--delta values must lie in [0, 1); got " + fmt(d));

    struct Row {
        ax::NormKind kind;
        double parameter, gate;
    };
    std::vector<Row> rows;
    for (const auto& kind : kinds) {
        if (kind == "lp") {
            for (double p : cfg.p_values) rows.push_back({ax::NormKind::lp_inverse_rho, p, gate_lp});
        } else if (kind == "l2") {
            rows.push_back({ax::NormKind::l2_rho, 0.0, gate_l2});
        } else if (kind == "dz") {
            for (double d : cfg.delta_values)
                rows.push_back({ax::NormKind::dz_l1_rho_delta, d, gate_dz});
        } else {
            throw CLI::ValidationError("--kinds entries must be lp, l2 or dz");
        }
    }

    Output out(cfg.out_path);
    auto& os = out.stream();
    os << "kind,parameter,r,value,fitted_exponent,reference_exponent,constant,"
          "max_ratio_deviation\n";
    bool all_pass = true;
    for (const Row& row : rows) {
        const ax::NormReport rep =
            ax::scaling_report(row.kind, row.parameter, cfg.r_samples, cfg.spec);
        const char* name = row.kind == ax::NormKind::lp_inverse_rho ? "lp"
                           : row.kind == ax::NormKind::l2_rho       ? "l2"
                                                                    : "dz";
        for (std::size_t i = 0; i < rep.r_samples.size(); ++i) {
            os << name << ',' << fmt(rep.parameter) << ',' << fmt(rep.r_samples[i]) << ','
               << fmt(rep.values[i]) << ',' << fmt(rep.fitted_exponent) << ','
               << fmt(rep.reference_exponent) << ',' << fmt(rep.constant) << ','
               << fmt(rep.max_ratio_deviation) << '\n';
        }
        if (std::abs(rep.fitted_exponent - rep.reference_exponent) > row.gate)
            all_pass = false;
    }
    return all_pass ? kExitOk : kExitGateFailure;
}

// ---------------------------------------------------------------------------
// identity-check
// ---------------------------------------------------------------------------

int cmd_identity_check(const RunConfig& cfg, const std::vector<std::string>& checks) {
    auto wanted = [&](const std::string& name) {
        for (const auto& c : checks)
            if (c == name || c == "all") return true;
        return false;
    };
    for (const auto& c : checks)
        if (c != "all" && c != "id1" && c != "id2" && c != "lemma" &&
            c != "first-moment" && c != "semigroup" && c != "scaling")
            throw CLI::ValidationError("--checks entries must be id1, id2, lemma, "
                                       "first-moment, semigroup, scaling or all");

    Output out(cfg.out_path);
    auto& os = out.stream();
    os << "check,parameters,lhs,rhs,error,tolerance,status\n";
    bool all_pass = true;

    auto emit = [&](const std::string& check, const std::string& params, double lhs,
                    double rhs, double err, double tol) {
        const bool pass = err <= tol;
        all_pass = all_pass && pass;
        os << check << ',' << params << ',' << fmt(lhs) << ',' << fmt(rhs) << ','
           << fmt(err) << ',' << fmt(tol) << ',' << (pass ? "pass" : "FAIL") << '\n';
    };

    for (double a : {0.1, 0.5, 1.0, 2.0, 4.0, 10.0}) {
        if (wanted("id1")) {
            const auto id1 = ax::verify_identity_id1(a, cfg.spec);
            emit("ID1", "a=" + fmt(a), id1.lhs, id1.rhs, id1.relative_error, 1e-8);
        }
        if (wanted("id2")) {
            const auto id2 = ax::verify_identity_id2(a, cfg.spec);
            emit("ID2", "a=" + fmt(a), id2.lhs, id2.rhs, id2.relative_error, 1e-8);
        }
        if (wanted("lemma")) {
            const auto lem = ax::verify_lemma_sphere(a, cfg.spec);
            emit("Lemma3.1", "A=" + fmt(a), lem.lhs, lem.rhs, lem.relative_error, 1e-8);
        }
    }

    if (wanted("first-moment")) {
        ax::QuadratureSpec mass_spec = cfg.spec;
        mass_spec.rel_tol = std::min(mass_spec.rel_tol, 2e-7);
        mass_spec.abs_tol = std::min(mass_spec.abs_tol, 1e-10);
        mass_spec.truncation_drop = std::min(mass_spec.truncation_drop, 1e-17);
        for (double t : {0.1, 1.0, 10.0})
            for (double r : {0.5, 1.0, 2.0}) {
                const auto rep = ax::first_moment_check(t, r, mass_spec);
                emit("first-moment", "t=" + fmt(t) + ";r=" + fmt(r), rep.lhs, rep.rhs,
                     std::abs(rep.lhs - rep.rhs), 1e-6);
            }
    }

    if (wanted("semigroup")) {
        ax::QuadratureSpec semi_spec = cfg.spec;
        semi_spec.rel_tol = std::max(semi_spec.rel_tol, 1e-6);
        const double semigroup_tuples[][5] = {{0.5, 0.5, 1.0, 1.0, 0.0},
                                              {1.0, 2.0, 1.0, 1.0, 0.5},
                                              {0.25, 0.75, 0.5, 1.5, 1.0},
                                              {1.0, 1.0, 2.0, 0.7, -0.3},
                                              {2.0, 1.0, 1.0, 1.0, 2.0}};
        for (const auto& q : semigroup_tuples) {
            const auto rep = ax::semigroup_check(q[0], q[1], q[2], q[3], q[4], semi_spec);
            emit("semigroup",
                 "s=" + fmt(q[0]) + ";t=" + fmt(q[1]) + ";r=" + fmt(q[2]) +
                     ";rho=" + fmt(q[3]) + ";zeta=" + fmt(q[4]),
                 rep.lhs, rep.rhs, rep.relative_error, 1e-4);
        }
    }

    if (wanted("scaling")) {
        const double base = ax::green_function(1.0, 1.5, 0.8, cfg.spec);
        for (double lambda : {0.5, 2.0, 4.0}) {
            const double scaled =
                lambda * ax::green_function(lambda, 1.5 * lambda, 0.8 * lambda, cfg.spec);
            emit("gamma-scaling", "lambda=" + fmt(lambda), scaled, base,
                 std::abs(scaled - base) / base, 1e-8);
        }
    }

    return all_pass ? kExitOk : kExitGateFailure;
}

// ---------------------------------------------------------------------------
// oracle-compare
// ---------------------------------------------------------------------------

int cmd_oracle_compare(const RunConfig& cfg, const std::vector<std::string>& extra_points,
                       double gate) {
    // deterministic default battery: 20 off-diagonal points spanning two
    // decades of radius and both signs of zeta
    std::vector<std::array<double, 3>> pts = {
        {1.0, 1.0, 1.0},    {1.0, 1.0, -0.5},  {0.3, 0.7, 0.2},   {0.7, 0.3, -0.2},
        {2.0, 2.0, 0.8},    {0.5, 2.5, 0.0},   {2.5, 0.5, 1.5},   {1.2, 0.8, 0.05},
        {0.8, 1.2, -0.05},  {3.0, 3.0, 4.0},   {0.1, 0.1, 0.15},  {0.1, 1.0, 0.0},
        {1.0, 0.1, -1.0},   {4.0, 1.0, 2.0},   {1.0, 4.0, -2.0},  {1.5, 1.5, 0.1},
        {0.25, 0.35, 0.04}, {2.2, 1.9, -0.25}, {0.6, 0.6, 3.0},   {3.5, 0.2, 0.6}};
    for (const auto& s : extra_points) {
        const auto nums = parse_numbers(s, ',');
        if (nums.size() != 3)
            throw ax::data_error("--points entries need r,rho,zeta");
        pts.push_back({nums[0], nums[1], nums[2]});
    }

    Output out(cfg.out_path);
    auto& os = out.stream();
    os << "r,rho,zeta,gamma_time_integral,gamma_ring_oracle,rel_error,status\n";
    bool all_pass = true;
    for (const auto& p : pts) {
        const double via_time = ax::green_function(p[0], p[1], p[2], cfg.spec);
        const double via_ring = ax::green_function_oracle(p[0], p[1], p[2], cfg.spec);
        const double err = std::abs(via_time - via_ring) / std::abs(via_ring);
        const bool pass = err <= gate;
        all_pass = all_pass && pass;
        os << fmt(p[0]) << ',' << fmt(p[1]) << ',' << fmt(p[2]) << ',' << fmt(via_time)
           << ',' << fmt(via_ring) << ',' << fmt(err) << ',' << (pass ? "pass" : "FAIL")
           << '\n';
    }
    return all_pass ? kExitOk : kExitGateFailure;
}

// ---------------------------------------------------------------------------
// reconstruct
// ---------------------------------------------------------------------------

int cmd_reconstruct(const RunConfig& cfg) {
    if (cfg.in_path.empty()) throw CLI::ValidationError("reconstruct requires --in");
    if (cfg.grid_spec.empty()) throw CLI::ValidationError("reconstruct requires --grid");
    const ax::MeridianScalarField omega = ax::read_scalar_field_csv(cfg.in_path);
    if (omega.quantity != ax::FieldQuantity::omega_theta)
        throw ax::data_error(cfg.in_path + ": quantity must be omega_theta");
    const ax::RectilinearGrid target = parse_grid(cfg.grid_spec);

    const ax::ReconstructedFlow flow = ax::velocity_from_vorticity(omega, target, cfg.spec);
    if (!cfg.out_stream_path.empty())
        ax::write_scalar_field_csv(cfg.out_stream_path, flow.stream, cfg.stamp);
    if (!cfg.out_velocity_path.empty())
        ax::write_velocity_field_csv(cfg.out_velocity_path, flow.velocity, cfg.stamp);

    double sup_L = 0.0, sup_weighted_ur = 0.0;
    for (std::size_t i = 0; i < flow.stream.nr(); ++i) {
        const double r = flow.stream.r_axis[i];
        for (std::size_t j = 0; j < flow.stream.nz(); ++j) {
            sup_L = std::max(sup_L, std::abs(flow.stream.at(i, j)));
            if (r > 0.0)
                sup_weighted_ur =
                    std::max(sup_weighted_ur, std::pow(r, cfg.summary_delta) *
                                                  std::abs(flow.velocity.ur_at(i, j)));
        }
    }
    std::cout << "sup_abs_L_theta=" << fmt(sup_L) << '\n';
    std::cout << "sup_r_pow_delta_abs_u_r=" << fmt(sup_weighted_ur)
              << " delta=" << fmt(cfg.summary_delta) << '\n';

    // Roundtrip residual: apply -(Laplacian - 1/r^2) to the reconstructed
    // stream function and compare with the input vorticity (bilinear) on
    // interior nodes inside the source support.
    if (flow.stream.nr() >= 5 && flow.stream.nz() >= 5) {
        const ax::MeridianScalarField op = ax::apply_vorticity_operator(flow.stream);
        double sup_res = 0.0, sup_omega = 0.0;
        for (std::size_t i = 2; i + 2 < op.nr(); ++i) {
            const double r = op.r_axis[i];
            if (r < omega.r_axis.front() || r > omega.r_axis.back()) continue;
            if (r == 0.0) continue;
            for (std::size_t j = 2; j + 2 < op.nz(); ++j) {
                const double z = op.z_axis[j];
                if (z < omega.z_axis.front() || z > omega.z_axis.back()) continue;
                // bilinear sample of the input on its own grid
                const auto ir = std::upper_bound(omega.r_axis.begin(), omega.r_axis.end(), r) -
                                omega.r_axis.begin();
                const auto iz = std::upper_bound(omega.z_axis.begin(), omega.z_axis.end(), z) -
                                omega.z_axis.begin();
                const std::size_t i0 = std::min<std::size_t>(std::max<long>(ir - 1, 0),
                                                             omega.nr() - 2);
                const std::size_t j0 = std::min<std::size_t>(std::max<long>(iz - 1, 0),
                                                             omega.nz() - 2);
                const double u = (r - omega.r_axis[i0]) /
                                 (omega.r_axis[i0 + 1] - omega.r_axis[i0]);
                const double v = (z - omega.z_axis[j0]) /
                                 (omega.z_axis[j0 + 1] - omega.z_axis[j0]);
                const double w = (1 - u) * ((1 - v) * omega.at(i0, j0) +
                                            v * omega.at(i0, j0 + 1)) +
                                 u * ((1 - v) * omega.at(i0 + 1, j0) +
                                      v * omega.at(i0 + 1, j0 + 1));
                sup_res = std::max(sup_res, std::abs(op.at(i, j) - w));
                sup_omega = std::max(sup_omega, std::abs(w));
            }
        }
        if (sup_omega > 0.0)
            std::cout << "operator_roundtrip_sup_rel=" << fmt(sup_res / sup_omega) << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Green function and heat kernel of the axisymmetric operator "
                 "-(Laplacian - 1/r^2): evaluation, weighted-bound verification and "
                 "stream-function reconstruction"};
    app.require_subcommand(1);

    double tol_rel = -1.0, tol_abs = -1.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol-rel", tol_rel, "relative quadrature tolerance override");
        sub->add_option("--tol-abs", tol_abs, "absolute quadrature tolerance override");
        sub->add_option("--out", cfg.out_path, "write CSV here instead of stdout");
        sub->add_flag("--stamp", cfg.stamp, "include a timestamp line in file headers");
        sub->add_option("--seed", cfg.seed,
                        "reserved; deterministic commands ignore it");
    };

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate G, dzG, Gamma or dzGamma at points");
    std::string quantity;
    std::vector<std::string> inline_points;
    eval->add_option("quantity", quantity, "G | dzG | Gamma | dzGamma")
        ->required()
        ->check(CLI::IsMember({"G", "dzG", "Gamma", "dzGamma"}));
    eval->add_option("points", inline_points,
                     "points: t,r,rho,zeta for G/dzG or r,rho,zeta for Gamma/dzGamma");
    eval->add_option("--in", cfg.in_path, "read points from a CSV file (one per line)");
    add_common(eval);

    // verify-bounds
    auto* bounds = app.add_subcommand("verify-bounds",
                                      "weighted-norm scaling reports and exponent gates");
    std::vector<std::string> kinds{"lp", "l2", "dz"};
    double gate_lp = 1e-3, gate_l2 = 1e-3, gate_dz = 5e-3;
    bounds->add_option("--kinds", kinds, "subset of {lp, l2, dz}")
        ->delimiter(',');
    bounds->add_option("--p", cfg.p_values, "p values in [1,2) for the lp kind")
        ->delimiter(',');
    bounds->add_option("--delta", cfg.delta_values, "delta values in [0,1) for the dz kind")
        ->delimiter(',');
    bounds->add_option("--r-samples", cfg.r_samples, "radii for the scaling fit (>= 3)")
        ->delimiter(',');
    bounds->add_option("--gate-lp", gate_lp, "exponent gate for the lp kind");
    bounds->add_option("--gate-l2", gate_l2, "exponent gate for the l2 kind");
    bounds->add_option("--gate-dz", gate_dz, "exponent gate for the dz kind");
    add_common(bounds);

    // identity-check
    auto* identity = app.add_subcommand("identity-check",
                                        "Bessel identities, sphere-angle integral, "
                                        "steady-state mass law, semigroup, scaling");
    std::vector<std::string> checks{"all"};
    identity->add_option("--checks", checks,
                         "subset of {id1, id2, lemma, first-moment, semigroup, scaling}")
        ->delimiter(',');
    add_common(identity);

    // oracle-compare
    auto* oracle = app.add_subcommand("oracle-compare",
                                      "Gamma time integral vs the ring-potential oracle");
    std::vector<std::string> extra_points;
    double oracle_gate = 1e-6;
    oracle->add_option("--points", extra_points, "extra points r,rho,zeta");
    oracle->add_option("--gate", oracle_gate, "relative-error gate");
    add_common(oracle);

    // reconstruct
    auto* rec = app.add_subcommand("reconstruct",
                                   "stream function and velocity from a vorticity grid");
    rec->add_option("--in", cfg.in_path, "omega_theta CSV grid file");
    rec->add_option("--grid", cfg.grid_spec, "target grid rmin:rmax:nr,zmin:zmax:nz");
    rec->add_option("--out-stream", cfg.out_stream_path, "output CSV for L_theta");
    rec->add_option("--out-velocity", cfg.out_velocity_path, "output CSV for (u_r, u_z)");
    rec->add_option("--delta", cfg.summary_delta,
                    "delta for the sup r^delta |u_r| summary line");
    add_common(rec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (tol_rel > 0.0) cfg.spec.rel_tol = tol_rel;
        if (tol_abs > 0.0) cfg.spec.abs_tol = tol_abs;
        cfg.spec.truncation_drop = std::min(cfg.spec.truncation_drop, cfg.spec.rel_tol / 2.0);
        cfg.spec.validate();

        if (eval->parsed()) {
            cfg.command = "eval";
            return cmd_eval(cfg, quantity, inline_points);
        }
        if (bounds->parsed()) {
            cfg.command = "verify-bounds";
            if (tol_rel <= 0.0) cfg.spec.rel_tol = 1e-5; // norm battery default
            if (tol_abs <= 0.0) cfg.spec.abs_tol = 1e-10;
            cfg.spec.truncation_drop =
                std::min(cfg.spec.truncation_drop, cfg.spec.rel_tol / 2.0);
            return cmd_verify_bounds(cfg, kinds, gate_lp, gate_l2, gate_dz);
        }
        if (identity->parsed()) {
            cfg.command = "identity-check";
            return cmd_identity_check(cfg, checks);
        }
        if (oracle->parsed()) {
            cfg.command = "oracle-compare";
            return cmd_oracle_compare(cfg, extra_points, oracle_gate);
        }
        cfg.command = "reconstruct";
        return cmd_reconstruct(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ax::parameter_range_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ax::data_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ax::singularity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ax::accuracy_error& e) {
        std::cerr << "error: " << e.what()
                  << " (achieved estimate " << e.achieved_estimate() << ")\n";
        return kExitGateFailure;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGateFailure;
    }
}
