// Command-line front end: batch germ analysis, claim reproduction and
// plot-data emission. Exit codes: 0 success, 1 claim failure, 2 usage.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "metjet/claims.hpp"
#include "metjet/contact.hpp"
#include "metjet/csv.hpp"
#include "metjet/gallery.hpp"
#include "metjet/homogeneity.hpp"
#include "metjet/jet_metrics.hpp"
#include "metjet/valued_monoid.hpp"

namespace {

using namespace metjet;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

struct ScheduleFlags {
    std::optional<std::string> r0;
    std::optional<double> ratio;
    std::optional<int> shells;
    std::optional<int> spp;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;

    void attach(CLI::App* cmd) {
        cmd->add_option("--r0", r0, "outer radius (decimal or +exp(L) form)");
        cmd->add_option("--ratio", ratio, "shell ratio in (0,1)");
        cmd->add_option("--shells", shells, "number of shells");
        cmd->add_option("--spp", spp, "samples per shell");
        cmd->add_option("--seed", seed, "sampling seed");
        cmd->add_option("--tol", tol, "verdict tolerance");
    }

    // germ-aware defaults unless explicitly overridden
    ShellSchedule resolve(const Germ& g) const {
        ShellSchedule s = recommended_schedule(g);
        if (r0) s.r0 = sp_parse(*r0);
        if (ratio) s.ratio = *ratio;
        if (shells) s.shells = *shells;
        if (spp) s.samples_per_shell = *spp;
        if (seed) s.rng_seed = *seed;
        s.validate();
        return s;
    }

    Tolerances tolerances() const {
        Tolerances t;
        if (tol) t.tol = *tol;
        return t;
    }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string describe_schedule(const ShellSchedule& s) {
    return "r0=" + sp_format(s.r0) + " ratio=" + fmt_double(s.ratio) +
           " shells=" + std::to_string(s.shells) +
           " spp=" + std::to_string(s.samples_per_shell) +
           " seed=" + std::to_string(s.rng_seed);
}

int cmd_analyze(const std::string& germ_name, const ScheduleFlags& flags,
                const std::string& out_path) {
    const Germ g = make_named(germ_name);
    const ShellSchedule s = flags.resolve(g);
    const Tolerances tols = flags.tolerances();

    const JetSummary summary = jet_summary(g, s, tols);
    std::cout << "germ: " << germ_name << "\n";
    std::cout << "schedule: " << describe_schedule(s) << "\n";
    std::cout << "norm_to_zero: " << fmt_double(summary.norm_to_zero.estimate)
              << (summary.norm_to_zero.converged ? " (converged)" : " (not converged)") << "\n";
    std::cout << "lipschitz_ratio: " << fmt_double(summary.rho.estimate)
              << (summary.rho.converged ? " (converged)" : " (not converged)")
              << (summary.rho_is_jet_ratio ? " [ratio of the jet]"
                                           : " [ratio of this representative]")
              << "\n";
    std::cout << "good_jet: " << to_string(summary.good_jet) << "\n";

    // linearity at a schedule able to see the decay for slow oscillators
    ShellSchedule ls = s;
    if (g.meta().label == "uncanny" || g.meta().label == "uncanny_ext") {
        ls.r0 = ScalePoint{1, -1000.0};
        ls.ratio = std::exp(-700.0);
        ls.shells = 4300;
        ls.samples_per_shell = 64;
    }
    const LinearityReport lin = linearity_test(g, ls, tols);
    std::cout << "linearity: " << to_string(lin.verdict)
              << " (additivity " << fmt_double(lin.additivity.estimate) << ", scaling "
              << fmt_double(lin.scaling.estimate) << ")\n";

    const double k = g.meta().exact_fractal_ratio.value_or(0.5);
    std::cout << "homogeneity:";
    for (const auto& [name, monoid] :
         {std::pair<std::string, ValuedMonoid>{"R", ValuedMonoid::reals()},
          {"R+", ValuedMonoid::nonneg_reals()},
          {"Nk:" + fmt_double(k), ValuedMonoid::powers_of(k)}}) {
        ShellSchedule hs = s;
        hs.shells = std::min(hs.shells, 24);
        hs.samples_per_shell = std::min(hs.samples_per_shell, 256);
        std::cout << " " << name << "=" << to_string(homogeneity_test(g, monoid, hs).verdict);
    }
    std::cout << "\n";

    if (!out_path.empty()) {
        write_file(out_path + ".norm.csv", summary.norm_to_zero.to_csv());
        write_file(out_path + ".rho.csv", summary.rho.to_csv());
    }
    return kExitOk;
}

int cmd_compare(const std::string& name_a, const std::string& name_b, const ScheduleFlags& flags,
                const std::string& out_path) {
    const Germ a = make_named(name_a);
    const Germ b = make_named(name_b);
    if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
        std::cerr << "error: germs have different dimensions\n";
        return kExitUsage;
    }
    // schedule from the more structured germ of the two
    const ShellSchedule s =
        flags.resolve(a.meta().exact_fractal_ratio || a.meta().label == "uncanny" ||
                              a.meta().label == "uncanny_ext"
                          ? a
                          : b);
    const Tolerances tols = flags.tolerances();
    const LimitEstimate d = quasi_distance(a, b, s, tols);
    const TangencyVerdict verdict = tangency_test(a, b, s, tols);
    std::cout << "germs: " << name_a << " vs " << name_b << "\n";
    std::cout << "schedule: " << describe_schedule(s) << "\n";
    std::cout << "distance: " << fmt_double(d.estimate)
              << (d.converged ? " (converged)" : " (not converged)") << "\n";
    std::cout << "tangency: " << to_string(verdict) << "\n";
    if (!out_path.empty()) write_file(out_path, d.to_csv());
    return kExitOk;
}

int cmd_contact(const std::string& germ_name, const std::string& monoid_spec,
                const ScheduleFlags& flags, int steps, const std::string& out_path) {
    const Germ g = make_named(germ_name);
    const ValuedMonoid m = ValuedMonoid::parse(monoid_spec);
    ContactOptions opt;
    if (steps > 0) opt.n_steps = steps;
    const ContactResult res = extract_contact(g, m, {}, opt);
    std::cout << "germ: " << germ_name << "  monoid: " << m.to_string() << "\n";
    std::cout << "verdict: " << to_string(res.verdict) << "\n";
    for (std::size_t d = 0; d < res.traces.size(); ++d) {
        const auto& tr = res.traces[d];
        std::cout << "direction " << d << ": oscillation=" << fmt_double(tr.oscillation)
                  << " alternations=" << tr.sign_alternations
                  << (tr.cauchy ? " (cauchy)" : "") << "\n";
    }
    if (res.verdict == ContactVerdict::found) {
        std::cout << "contact samples (x -> h(x)/x):\n";
        for (double lm : {0.0, -1.0, -5.0, -20.0}) {
            for (int sign : {1, -1}) {
                const ScalePoint y{sign, lm};
                const ScalePoint hv = res.contact->eval1(y);
                std::cout << "  " << sp_format(y) << " -> "
                          << fmt_double(sp_mag_ratio(hv, y) *
                                        (hv.sign == 0 ? 0.0 : hv.sign * y.sign))
                          << "\n";
            }
        }
    }
    if (!out_path.empty()) write_file(out_path, res.trace_csv());
    (void)flags;
    return kExitOk;
}

int cmd_samples(const std::string& germ_name, const std::string& logmag_range,
                const std::string& x_range, int count, const std::string& out_path) {
    const Germ g = make_named(germ_name);
    if (count < 1) {
        std::cerr << "error: --count must be >= 1\n";
        return kExitUsage;
    }
    auto parse_range = [](const std::string& r, double& lo, double& hi) {
        const auto dots = r.find("..");
        if (dots == std::string::npos)
            throw std::invalid_argument("range must look like A..B: " + r);
        lo = std::stod(r.substr(0, dots));
        hi = std::stod(r.substr(dots + 2));
    };

    std::string csv = "log_x,sign,f_ratio\n";
    if (!logmag_range.empty()) {
        double lo = 0, hi = 0;
        parse_range(logmag_range, lo, hi);
        for (int i = 0; i < count; ++i) {
            const double lm = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
            const int sign = i % 2 == 0 ? 1 : -1;
            const ScalePoint x{sign, lm};
            const double ratio = sp_mag_ratio(g.eval1(x), x);
            const ScalePoint fx = g.eval1(x);
            const double signed_ratio = fx.sign == 0 ? 0.0 : ratio * fx.sign * sign;
            csv += fmt_double(lm);
            csv += ',';
            csv += std::to_string(sign);
            csv += ',';
            csv += fmt_double(signed_ratio);
            csv += '\n';
        }
    } else if (!x_range.empty()) {
        double lo = 0, hi = 0;
        parse_range(x_range, lo, hi);
        for (int i = 0; i < count; ++i) {
            const double x = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
            if (x == 0.0) {
                csv += "-inf,0,0\n";
                continue;
            }
            const ScalePoint sx = ScalePoint::from_double(x);
            const ScalePoint fx = g.eval1(sx);
            const double signed_ratio =
                fx.sign == 0 ? 0.0 : sp_mag_ratio(fx, sx) * fx.sign * sx.sign;
            csv += fmt_double(sx.logmag);
            csv += ',';
            csv += std::to_string(sx.sign);
            csv += ',';
            csv += fmt_double(signed_ratio);
            csv += '\n';
        }
    } else {
        std::cerr << "error: give --logmag A..B or --x A..B\n";
        return kExitUsage;
    }

    if (!out_path.empty())
        write_file(out_path, csv);
    else
        std::cout << csv;
    return kExitOk;
}

int cmd_claims(const std::string& filter, const std::string& out_path) {
    const auto outcomes = run_claims(filter);
    if (outcomes.empty()) {
        std::cerr << "no claims matched filter: " << filter << "\n";
        return kExitUsage;
    }
    const std::string csv = claims_csv(outcomes, true);
    std::cout << csv;
    if (!out_path.empty()) write_file(out_path, csv);
    return all_passed(outcomes) ? kExitOk : kExitClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metjet: metric differential calculus for black-box germs"};
    app.require_subcommand(1);

    ScheduleFlags flags;
    std::string out_path;
    std::string germ_a, germ_b, monoid_spec, filter;
    std::string logmag_range, x_range;
    int count = 1000;
    int steps = 0;

    auto* analyze = app.add_subcommand("analyze", "jet summary and verdicts for one germ");
    analyze->add_option("germ", germ_a, "germ name")->required();
    flags.attach(analyze);
    analyze->add_option("--out", out_path, "CSV trace path prefix");

    auto* compare = app.add_subcommand("compare", "quasi-distance and tangency of two germs");
    compare->add_option("germ_a", germ_a)->required();
    compare->add_option("germ_b", germ_b)->required();
    flags.attach(compare);
    compare->add_option("--out", out_path, "CSV trace path");

    auto* contact = app.add_subcommand("contact", "zoom-limit contact extraction");
    contact->add_option("germ", germ_a)->required();
    contact->add_option("monoid", monoid_spec, "R, R+, or Nk:<k>")->required();
    contact->add_option("--steps", steps, "zoom steps");
    flags.attach(contact);
    contact->add_option("--out", out_path, "CSV trace path");

    auto* samples = app.add_subcommand("samples", "emit germ samples for plotting");
    samples->add_option("germ", germ_a)->required();
    samples->add_option("--logmag", logmag_range, "log-magnitude range A..B");
    samples->add_option("--x", x_range, "plain range A..B");
    samples->add_option("--count", count, "row count");
    samples->add_option("--out", out_path, "CSV path (default stdout)");

    auto* claims = app.add_subcommand("claims", "run the numeric claims suite");
    claims->add_option("--filter", filter, "claim id pattern ('*' wildcard)");
    claims->add_option("--out", out_path, "CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(germ_a, flags, out_path);
        if (compare->parsed()) return cmd_compare(germ_a, germ_b, flags, out_path);
        if (contact->parsed()) return cmd_contact(germ_a, monoid_spec, flags, steps, out_path);
        if (samples->parsed()) return cmd_samples(germ_a, logmag_range, x_range, count, out_path);
        if (claims->parsed()) return cmd_claims(filter, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClaimFailure;
    }
    return kExitUsage;
}
