#pragma once

#include "gusym/gusym.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace gusym::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Thrown for malformed flags or inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int n = 0;
    int m = 0;
    std::string reference = "coherent"; // coherent | mixed:r | uniform-y | path to a state JSON file
    std::optional<double> tolerance;
    std::uint64_t seed = 1;
    std::uint64_t shots = 10000;
    std::string format = "text"; // text | json | csv
    std::string povm_path;
    std::string out_path;
    // sweep
    std::string n_range = "1:4";
    std::optional<int> m_offset;
    std::string m_range;
    std::string r_range;
    bool separable = false;
};

struct Reference {
    enum class Kind { coherent, mixed, uniform_y, file } kind = Kind::coherent;
    double r = 0.0;
    std::optional<SymmetricState> state; // set for file references
    std::string label;
};

inline std::string fmt(double v, int precision = 12) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

inline double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw UsageError("");
        return v;
    } catch (const std::exception&) {
        throw UsageError("cannot parse " + what + " from '" + s + "'");
    }
}

inline int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size())
            throw UsageError("");
        return v;
    } catch (const std::exception&) {
        throw UsageError("cannot parse " + what + " from '" + s + "'");
    }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        parts.push_back(cur);
    if (!s.empty() && s.back() == sep)
        parts.emplace_back();
    return parts;
}

inline Reference parse_reference(const std::string& text) {
    Reference ref;
    ref.label = text;
    if (text == "coherent") {
        ref.kind = Reference::Kind::coherent;
    } else if (text == "uniform-y") {
        ref.kind = Reference::Kind::uniform_y;
    } else if (text.rfind("mixed:", 0) == 0) {
        ref.kind = Reference::Kind::mixed;
        ref.r = parse_double(text.substr(6), "mixed reference weight r");
        if (!(ref.r >= 0.0 && ref.r <= 1.0))
            throw UsageError("mixed reference weight r must lie in [0, 1]");
    } else {
        ref.kind = Reference::Kind::file;
        ref.state = io::state_from_json(io::read_file(text));
        ref.label = "file";
    }
    return ref;
}

/// Resolves n from the reference file when the flag is absent, otherwise checks agreement.
inline int resolve_n(const RunConfig& cfg, const Reference& ref) {
    if (ref.state) {
        if (cfg.n != 0 && cfg.n != ref.state->n)
            throw UsageError("--n " + std::to_string(cfg.n) + " disagrees with the reference file (n = " +
                             std::to_string(ref.state->n) + ")");
        return ref.state->n;
    }
    if (cfg.n < 1)
        throw UsageError("--n must be a positive integer");
    return cfg.n;
}

/// Random phases for the uniform-y reference, drawn from the configured seed.
inline std::vector<double> seeded_phases(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> phases;
    for (int i = 0; i <= n; ++i)
        phases.push_back(2.0 * kPi * detail::uniform53(rng));
    return phases;
}

inline std::optional<SymmetricState> pure_reference(const Reference& ref, int n, std::uint64_t seed) {
    switch (ref.kind) {
    case Reference::Kind::coherent:
        return coherent_top(n);
    case Reference::Kind::uniform_y:
        return uniform_y_state(n, seeded_phases(n, seed));
    case Reference::Kind::file:
        return make_pure_reference(ref.state->n, ref.state->z_amplitudes());
    case Reference::Kind::mixed:
        return std::nullopt;
    }
    return std::nullopt;
}

struct Problem {
    int n = 0;
    int m = 0;
    Reference ref;
    GUEnsemble ensemble;
    MeasurementVector vector;
    double p_closed = 0.0;
};

inline Problem make_problem(const Reference& ref, int n, int m, std::uint64_t seed) {
    Problem pb;
    pb.n = n;
    pb.m = m;
    pb.ref = ref;
    if (auto psi = pure_reference(ref, n, seed)) {
        pb.ensemble = gu_ensemble(*psi, m);
        const PureClosedForm cf = pure_closed_form(*psi, m);
        pb.vector = cf.vector;
        pb.p_closed = cf.p_opt;
    } else {
        pb.ensemble = gu_ensemble_mixed(n, ref.r, m);
        const MixedClosedForm cf = popt_mixed(n, ref.r, m);
        pb.vector = cf.vector;
        pb.p_closed = cf.p_opt;
    }
    return pb;
}

inline Problem make_problem(const RunConfig& cfg) {
    const Reference ref = parse_reference(cfg.reference);
    const int n = resolve_n(cfg, ref);
    return make_problem(ref, n, cfg.m, cfg.seed);
}

inline json certificate_json(const HelstromCertificate& c) {
    json j{{"pass", c.pass},
           {"tolerance", c.tolerance},
           {"helstrom_ratio", c.helstrom_ratio},
           {"worst_min_eigenvalue", c.worst_min_eigenvalue()},
           {"worst_kernel_residual", c.worst_kernel_residual()}};
    if (c.commutator_norm)
        j["commutator_norm"] = *c.commutator_norm;
    return j;
}

inline std::string certificate_text(const HelstromCertificate& c) {
    std::ostringstream os;
    os << (c.pass ? "pass" : "FAIL") << " (min eig " << fmt(c.worst_min_eigenvalue(), 3) << ", kernel "
       << fmt(c.worst_kernel_residual(), 3);
    if (c.commutator_norm)
        os << ", [M,U] " << fmt(*c.commutator_norm, 3);
    os << ", tol " << fmt(c.tolerance, 3) << ")";
    return os.str();
}

inline void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f)
            return;
    throw UsageError("format '" + cfg.format + "' is not supported by " + cfg.command);
}

inline int cmd_popt(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    const double tol = cfg.tolerance.value_or(1e-6);
    const Problem pb = make_problem(cfg);
    const Povm closed = optimal_povm(pb.vector);
    const HelstromCertificate closed_cert = helstrom_certificate(pb.ensemble, closed, 1e-9);
    const OracleResult oracle = optimize_min_error(pb.ensemble);
    const HelstromCertificate oracle_cert = helstrom_certificate(pb.ensemble, oracle.povm, 1e-9);
    const double delta = std::abs(pb.p_closed - oracle.p_opt);
    const bool agree = delta <= tol;

    if (cfg.format == "json") {
        out << json{{"n", pb.n},
                    {"m", pb.m},
                    {"reference", pb.ref.label},
                    {"p_closed", pb.p_closed},
                    {"p_oracle", oracle.p_opt},
                    {"delta", delta},
                    {"tolerance", tol},
                    {"agree", agree},
                    {"oracle_iterations", oracle.iterations},
                    {"closed_certificate", certificate_json(closed_cert)},
                    {"oracle_certificate", certificate_json(oracle_cert)}}
                   .dump(2)
            << '\n';
    } else {
        out << "n " << pb.n << "  m " << pb.m << "  reference " << pb.ref.label << '\n'
            << "closed             " << fmt(pb.p_closed) << '\n'
            << "oracle             " << fmt(oracle.p_opt) << "  (" << oracle.iterations << " iterations)\n"
            << "delta              " << fmt(delta, 3) << (agree ? "  agree" : "  DISAGREE") << '\n'
            << "closed certificate " << certificate_text(closed_cert) << '\n'
            << "oracle certificate " << certificate_text(oracle_cert) << '\n';
    }
    return agree ? kOk : kFailure;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    if (cfg.povm_path.empty())
        throw UsageError("verify needs --povm <file>");
    const double tol = cfg.tolerance.value_or(1e-9);
    const Problem pb = make_problem(cfg);
    const Povm povm = io::povm_from_json(io::read_file(cfg.povm_path));
    if (povm.dimension != pb.n + 1)
        throw UsageError("POVM dimension " + std::to_string(povm.dimension) + " does not match n + 1 = " +
                         std::to_string(pb.n + 1));
    if (static_cast<int>(povm.size()) != pb.m)
        throw UsageError("POVM has " + std::to_string(povm.size()) + " elements, expected m = " +
                         std::to_string(pb.m));

    const double resid = povm.completeness_residual();
    const bool complete = povm.is_complete();
    std::optional<HelstromCertificate> cert;
    if (complete)
        cert = helstrom_certificate(pb.ensemble, povm, tol);
    const bool pass = cert && cert->pass;
    const double p = success_probability(pb.ensemble, povm);

    if (cfg.format == "json") {
        json j{{"n", pb.n},
               {"m", pb.m},
               {"reference", pb.ref.label},
               {"success_probability", p},
               {"completeness_residual", resid},
               {"min_element_eigenvalue", povm.min_element_eigenvalue()},
               {"pass", pass}};
        if (cert)
            j["certificate"] = certificate_json(*cert);
        out << j.dump(2) << '\n';
    } else {
        out << "success probability   " << fmt(p) << '\n'
            << "completeness residual " << fmt(resid, 3) << '\n'
            << "min element eigenval  " << fmt(povm.min_element_eigenvalue(), 3) << '\n';
        if (cert)
            out << "certificate           " << certificate_text(*cert) << '\n';
        else
            out << "certificate           FAIL (POVM is incomplete)\n";
    }
    return pass ? kOk : kFailure;
}

inline int cmd_export_povm(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    const Problem pb = make_problem(cfg);
    const json j = io::to_json(optimal_povm(pb.vector));
    if (cfg.out_path.empty())
        out << j.dump(2) << '\n';
    else
        io::write_file(cfg.out_path, j);
    return kOk;
}

inline int cmd_separable(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    const Reference ref = parse_reference(cfg.reference);
    const int n = resolve_n(cfg, ref);
    require_within_cap(n, "separable");
    const Problem pb = make_problem(ref, n, cfg.m, cfg.seed);
    const SeparablePovm sep = separable_povm(pb.vector);
    const SeparableReport rep = verify_separable(pb.ensemble, sep);
    const double delta = std::abs(rep.p_separable - rep.p_global);

    if (cfg.format == "json") {
        out << json{{"n", n},
                    {"m", pb.m},
                    {"reference", ref.label},
                    {"p_global", rep.p_global},
                    {"p_separable", rep.p_separable},
                    {"delta", delta},
                    {"c", sep.c},
                    {"summands_per_outcome", sep.summand_count()},
                    {"completeness_residual", rep.completeness_residual},
                    {"psd_floor", rep.psd_floor},
                    {"is_valid_povm", rep.is_valid_povm},
                    {"inconclusive_probability", rep.inconclusive_probability}}
                   .dump(2)
            << '\n';
    } else {
        out << "p_global              " << fmt(rep.p_global) << '\n'
            << "p_separable           " << fmt(rep.p_separable) << '\n'
            << "delta                 " << fmt(delta, 3) << '\n'
            << "c                     " << fmt(sep.c) << '\n'
            << "summands per outcome  " << sep.summand_count() << '\n'
            << "completeness residual " << fmt(rep.completeness_residual, 3) << '\n'
            << "psd_floor             " << fmt(rep.psd_floor, 3) << (rep.is_valid_povm ? "" : "  (I - sum E not PSD)")
            << '\n';
    }
    return delta <= cfg.tolerance.value_or(1e-9) ? kOk : kFailure;
}

inline int cmd_majorana(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    const Reference ref = parse_reference(cfg.reference);
    const int n = resolve_n(cfg, ref);
    const auto psi = pure_reference(ref, n, cfg.seed);
    if (!psi)
        throw UsageError("majorana needs a pure reference (coherent, uniform-y or a state file)");
    MajoranaDecomposition dec;
    try {
        dec = majorana_decompose(*psi);
    } catch (const RootFindingError& e) {
        out << "root finding failed; residuals:";
        for (double r : e.residuals())
            out << ' ' << fmt(r, 3);
        out << '\n';
        return kFailure;
    }
    const double fid = fidelity(*psi, majorana_reconstruct(dec.points, n).state);

    if (cfg.format == "json") {
        json pts = json::array();
        for (const auto& p : dec.points)
            pts.push_back({{"polar", p.polar}, {"azimuth", p.azimuth}});
        json roots = json::array();
        for (const auto& t : dec.roots)
            roots.push_back(io::to_json(t));
        out << json{{"n", n},
                    {"points", pts},
                    {"roots", roots},
                    {"roots_at_infinity", dec.roots_at_infinity},
                    {"residuals", dec.residuals},
                    {"normalization", dec.normalization},
                    {"fidelity", fid}}
                   .dump(2)
            << '\n';
    } else {
        out << "point  polar            azimuth\n";
        for (std::size_t i = 0; i < dec.points.size(); ++i)
            out << std::setw(5) << i << "  " << std::setw(15) << std::left << fmt(dec.points[i].polar) << "  "
                << fmt(dec.points[i].azimuth) << std::right << '\n';
        out << "roots:";
        for (const auto& t : dec.roots)
            out << " (" << fmt(t.real()) << ", " << fmt(t.imag()) << ")";
        out << "\nroots at infinity " << dec.roots_at_infinity << "\nresiduals:";
        for (double r : dec.residuals)
            out << ' ' << fmt(r, 3);
        out << "\nnormalization " << fmt(dec.normalization) << "\nround-trip fidelity " << fmt(fid, 16) << '\n';
    }
    return kOk;
}

inline json simulation_json(const SimulationReport& rep) {
    return {{"p_empirical", rep.p_empirical},
            {"p_exact", rep.p_exact},
            {"shots", rep.shots},
            {"seed", rep.seed},
            {"confusion", rep.confusion}};
}

inline int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    if (cfg.shots < 1)
        throw UsageError("--shots must be >= 1");
    const Problem pb = make_problem(cfg);
    const SimulationReport rep = simulate(pb.ensemble, optimal_povm(pb.vector), cfg.shots, cfg.seed);
    if (cfg.format == "json") {
        out << simulation_json(rep).dump(2) << '\n';
    } else {
        const double sigma = std::sqrt(rep.p_exact * (1.0 - rep.p_exact) / static_cast<double>(rep.shots));
        out << "p_empirical " << fmt(rep.p_empirical) << '\n'
            << "p_exact     " << fmt(rep.p_exact) << "  (sigma " << fmt(sigma, 3) << ")\n"
            << "shots " << rep.shots << "  seed " << rep.seed << "\nconfusion [sent][outcome]\n";
        for (const auto& row : rep.confusion) {
            for (std::size_t h = 0; h < row.size(); ++h)
                out << (h ? " " : "") << row[h];
            out << '\n';
        }
    }
    return kOk;
}

struct IntRange {
    int lo = 0;
    int hi = -1;
};

inline IntRange parse_int_range(const std::string& s, const std::string& what) {
    const auto parts = split(s, ':');
    if (parts.size() != 2)
        throw UsageError(what + " must look like lo:hi");
    return {parse_int(parts[0], what), parse_int(parts[1], what)};
}

inline std::vector<double> parse_r_range(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() != 3)
        throw UsageError("--r-range must look like lo:hi:step");
    const double lo = parse_double(parts[0], "--r-range");
    const double hi = parse_double(parts[1], "--r-range");
    const double step = parse_double(parts[2], "--r-range");
    if (!(step > 0.0))
        throw UsageError("--r-range step must be positive");
    std::vector<double> out;
    if (hi < lo)
        return out;
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i)
        out.push_back(std::min(hi, lo + static_cast<double>(i) * step));
    return out;
}

inline const char* kSweepHeader =
    "n,m,reference,r,p_closed,p_oracle,delta,certificate,p_srm,p_separable,wall_time_ms";

/// One CSV row; failures are recorded in the certificate column and reported through the return value.
inline bool sweep_row(const Reference& ref, int n, int m, const RunConfig& cfg, double tol, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const std::string kind = ref.kind == Reference::Kind::mixed ? "mixed" : ref.label;
    const std::string r_col = ref.kind == Reference::Kind::mixed ? fmt(ref.r) : "";
    std::ostringstream row;
    row << n << ',' << m << ',' << kind << ',' << r_col << ',';
    bool ok = true;
    try {
        const Problem pb = make_problem(ref, n, m, cfg.seed);
        const OracleResult oracle = optimize_min_error(pb.ensemble);
        const Povm closed = optimal_povm(pb.vector);
        const bool cert = helstrom_certificate(pb.ensemble, closed, 1e-9).pass;
        const double p_srm = success_probability(pb.ensemble, square_root_measurement(pb.ensemble));
        const double delta = std::abs(pb.p_closed - oracle.p_opt);
        std::string p_sep;
        if (cfg.separable && n <= full_space_cap())
            p_sep = fmt(verify_separable(pb.ensemble, separable_povm(pb.vector)).p_separable);
        ok = delta <= tol;
        row << fmt(pb.p_closed) << ',' << fmt(oracle.p_opt) << ',' << fmt(delta, 3) << ','
            << (cert ? "pass" : "fail") << ',' << fmt(p_srm) << ',' << p_sep << ',';
    } catch (const std::exception& e) {
        ok = false;
        std::string msg = e.what();
        for (char& ch : msg)
            if (ch == ',' || ch == '\n')
                ch = ';';
        row << ",,,error: " << msg << ",,,";
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row << fmt(ms, 4);
    out << row.str() << '\n';
    return ok;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "csv"});
    const double tol = cfg.tolerance.value_or(1e-6);
    const IntRange ns = parse_int_range(cfg.n_range, "--n-range");
    if (!cfg.m_range.empty() && cfg.m_offset)
        throw UsageError("--m-range and --m-offset are mutually exclusive");
    const bool explicit_m = !cfg.m_range.empty();
    const IntRange ms = explicit_m ? parse_int_range(cfg.m_range, "--m-range") : IntRange{};
    const int offset = cfg.m_offset.value_or(1);

    std::vector<Reference> refs;
    if (cfg.reference == "mixed") {
        if (cfg.r_range.empty())
            throw UsageError("--reference mixed needs --r-range lo:hi:step");
        for (double r : parse_r_range(cfg.r_range)) {
            Reference ref;
            ref.kind = Reference::Kind::mixed;
            ref.r = r;
            ref.label = "mixed";
            refs.push_back(ref);
        }
    } else {
        refs.push_back(parse_reference(cfg.reference));
    }

    std::ostringstream csv;
    csv << kSweepHeader << '\n';
    bool all_ok = true;
    for (int n = ns.lo; n <= ns.hi; ++n) {
        const int m_lo = explicit_m ? ms.lo : n + offset;
        const int m_hi = explicit_m ? ms.hi : n + offset;
        for (int m = m_lo; m <= m_hi; ++m)
            for (const auto& ref : refs)
                all_ok = sweep_row(ref, n, m, cfg, tol, csv) && all_ok;
    }
    if (cfg.out_path.empty())
        out << csv.str();
    else {
        std::ofstream f(cfg.out_path);
        if (!f)
            throw UsageError("cannot write " + cfg.out_path);
        f << csv.str();
    }
    return all_ok ? kOk : kFailure;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.tolerance && !(*cfg.tolerance > 0.0))
        throw UsageError("--tol must be positive");
    if (cfg.command == "popt")
        return cmd_popt(cfg, out);
    if (cfg.command == "verify")
        return cmd_verify(cfg, out);
    if (cfg.command == "export-povm")
        return cmd_export_povm(cfg, out);
    if (cfg.command == "separable")
        return cmd_separable(cfg, out);
    if (cfg.command == "majorana")
        return cmd_majorana(cfg, out);
    if (cfg.command == "simulate")
        return cmd_simulate(cfg, out);
    if (cfg.command == "sweep")
        return cmd_sweep(cfg, out);
    throw UsageError("unknown command " + cfg.command);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Minimum-error discrimination of geometrically uniform symmetric qubit states", "gusym"};
    app.require_subcommand(1);

    auto common = [&cfg](CLI::App* sub, bool needs_m) {
        sub->add_option("--n", cfg.n, "number of qubits (taken from the file for file references)");
        auto* m = sub->add_option("--m", cfg.m, "number of states in the orbit");
        if (needs_m)
            m->required();
        sub->add_option("--reference", cfg.reference, "coherent | mixed:r | uniform-y | path to state JSON");
        sub->add_option("--tol", cfg.tolerance, "tolerance for the pass/fail decision");
        sub->add_option("--seed", cfg.seed, "seed for uniform-y phases and simulation");
        sub->add_option("--format", cfg.format, "text | json | csv");
    };

    auto* popt = app.add_subcommand("popt", "closed-form and oracle success probabilities");
    common(popt, true);
    auto* verify = app.add_subcommand("verify", "Helstrom certificate of a POVM file");
    common(verify, true);
    verify->add_option("--povm", cfg.povm_path, "POVM JSON file")->required();
    auto* exp = app.add_subcommand("export-povm", "write the closed-form POVM as JSON");
    common(exp, true);
    exp->add_option("--out", cfg.out_path, "output file (stdout when absent)");
    auto* sep = app.add_subcommand("separable", "lift the optimal POVM to a separable full-space POVM");
    common(sep, true);
    auto* maj = app.add_subcommand("majorana", "Majorana decomposition of the reference state");
    common(maj, false);
    auto* sim = app.add_subcommand("simulate", "seeded shot simulation of the closed-form measurement");
    common(sim, true);
    sim->add_option("--shots", cfg.shots, "number of shots");
    auto* sweep = app.add_subcommand("sweep", "CSV sweep over n, m and r");
    common(sweep, false);
    sweep->add_option("--n-range", cfg.n_range, "lo:hi, inclusive");
    sweep->add_option("--m-offset", cfg.m_offset, "m = n + offset (default 1)");
    sweep->add_option("--m-range", cfg.m_range, "lo:hi, inclusive; overrides the offset");
    sweep->add_option("--r-range", cfg.r_range, "lo:hi:step for --reference mixed");
    sweep->add_flag("--separable", cfg.separable, "also compute the separable success probability");
    sweep->add_option("--out", cfg.out_path, "output file (stdout when absent)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    for (const auto* sub : app.get_subcommands())
        cfg.command = sub->get_name();

    try {
        return dispatch(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConstraintViolation& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace gusym::cli
