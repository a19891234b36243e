#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include <symreal/errors.hpp>
#include <symreal/karasev.hpp>
#include <symreal/poisson.hpp>
#include <symreal/rooted_tree.hpp>
#include <symreal/serialize.hpp>
#include <symreal/weights.hpp>

namespace symreal::cli
{

namespace
{

using nlohmann::json;

/// Input problems that map to exit code 2.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

PoissonStructure read_poisson(const RunConfig &config)
{
    if (!config.poisson_path) {
        throw UsageError("--poisson FILE is required");
    }
    std::ifstream in(*config.poisson_path);
    if (!in) {
        throw UsageError("cannot open " + config.poisson_path->string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return load_poisson(buf.str());
}

void require_order(const RunConfig &config)
{
    if (config.order == 0) {
        throw UsageError("--order must be at least 1");
    }
}

std::string csv_field(const std::string &s)
{
    return "\"" + s + "\"";
}

int run_trees(const RunConfig &config, std::ostream &out)
{
    const auto trees = enumerate_trees(config.max_degree);
    if (config.format == Format::csv) {
        out << "canonical,degree,sym\n";
        for (const auto &t : trees) {
            out << csv_field(t.canonical()) << ',' << t.degree() << ',' << symmetry_order(t) << '\n';
        }
        return exit_ok;
    }
    json rows = json::array();
    for (const auto &t : trees) {
        rows.push_back({{"canonical", t.canonical()}, {"degree", t.degree()}, {"sym", symmetry_order(t)}});
    }
    out << rows.dump(2) << '\n';
    return exit_ok;
}

int run_weights(const RunConfig &config, std::ostream &out)
{
    const auto table = weight_table(config.max_degree);
    auto coeff_strings = [](const UniPoly &p) {
        std::vector<std::string> v;
        for (const auto &c : p.coefficients()) {
            v.push_back(c.to_string());
        }
        return v;
    };
    if (config.format == Format::csv) {
        out << "canonical,degree,sym,weight,angle_poly\n";
        for (const auto &e : table) {
            std::string poly;
            for (const auto &c : coeff_strings(e.angle_poly)) {
                poly += (poly.empty() ? "" : " ") + c;
            }
            out << csv_field(e.tree.canonical()) << ',' << e.tree.degree() << ',' << symmetry_order(e.tree) << ','
                << e.weight.to_string() << ',' << csv_field(poly) << '\n';
        }
        return exit_ok;
    }
    json rows = json::array();
    for (const auto &e : table) {
        rows.push_back({{"canonical", e.tree.canonical()},
                        {"degree", e.tree.degree()},
                        {"sym", symmetry_order(e.tree)},
                        {"weight", e.weight.to_string()},
                        {"angle_poly", coeff_strings(e.angle_poly)}});
    }
    out << rows.dump(2) << '\n';
    return exit_ok;
}

/// Returns false when the structure fails Jacobi and strict mode is on.
bool jacobi_gate(const PoissonStructure &pi, const RunConfig &config, std::ostream &err)
{
    const auto report = jacobi_check(pi);
    if (report.holds) {
        return true;
    }
    const auto &[i, j, k] = *report.triple;
    err << (config.strict ? "error" : "warning") << ": bivector violates the Jacobi identity at (i,j,k)=(" << i + 1
        << "," << j + 1 << "," << k + 1 << "): " << report.residual.to_string() << '\n';
    return !config.strict;
}

RealizationSeries build_series(const PoissonStructure &pi, SeriesKind kind, const RunConfig &config)
{
    switch (kind) {
        case SeriesKind::source:
            return source_series(pi, config.order, config.memo_limit);
        case SeriesKind::target:
            return target_series(pi, config.order, config.memo_limit);
        case SeriesKind::karasev:
            return karasev_series(pi, config.order);
    }
    throw std::logic_error("unreachable series kind");
}

int run_realize(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    require_order(config);
    const auto pi = read_poisson(config);
    if (!jacobi_gate(pi, config, err)) {
        return exit_failed;
    }
    const std::string doc = series_document(build_series(pi, config.map_kind, config));
    if (config.out_path) {
        std::ofstream file(*config.out_path);
        if (!file) {
            throw UsageError("cannot write " + config.out_path->string());
        }
        file << doc;
    } else {
        out << doc;
    }
    return exit_ok;
}

void report_witness(std::ostream &out, Check c, const std::string &where, const PhasePoly &value)
{
    out << to_string(c) << ": FAIL at " << where << ": " << value.to_string() << '\n';
}

int run_verify(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    require_order(config);
    if (config.checks.empty()) {
        throw UsageError("--checks must name at least one check");
    }
    const auto pi = read_poisson(config);
    if (config.checks.contains(Check::linear) && !pi.is_linear()) {
        throw UsageError("check 'linear' needs a linear Poisson structure");
    }
    if (!jacobi_gate(pi, config, err)) {
        return exit_failed;
    }
    const unsigned n = config.order;
    const auto source = source_series(pi, n, config.memo_limit);
    std::optional<RealizationSeries> karasev;
    auto alpha = [&]() -> const RealizationSeries & {
        if (!karasev) {
            karasev = karasev_series(pi, n);
        }
        return *karasev;
    };

    bool all_ok = true;
    for (const Check c : config.checks) {
        bool ok = true;
        switch (c) {
            case Check::bracket: {
                if (const auto hit = first_nonzero(realization_residual(source, pi, n))) {
                    ok = false;
                    report_witness(out, c,
                                   "order " + std::to_string(hit->first.order) + ", (i,j)=("
                                       + std::to_string(hit->first.i + 1) + "," + std::to_string(hit->first.j + 1) + ")",
                                   hit->second);
                }
                break;
            }
            case Check::compare: {
                const auto cmp = compare_series(source, alpha(), n);
                if (!cmp.equal) {
                    ok = false;
                    const auto &w = *cmp.first_difference;
                    report_witness(out, c,
                                   "order " + std::to_string(w.order) + ", component " + std::to_string(w.component + 1),
                                   w.value);
                }
                break;
            }
            case Check::h1: {
                for (const auto &[key, poly] : verify_h1(pi, alpha(), n)) {
                    if (!poly.is_zero()) {
                        ok = false;
                        report_witness(out, c,
                                       "order " + std::to_string(key.first) + ", component "
                                           + std::to_string(key.second + 1),
                                       poly);
                        break;
                    }
                }
                break;
            }
            case Check::homogeneity:
            case Check::pairing: {
                for (const auto *s : {&source, &alpha()}) {
                    const auto w = c == Check::homogeneity ? check_homogeneity(s->series, n)
                                                           : check_pairing(s->series, n);
                    if (w) {
                        ok = false;
                        std::string where = std::string(to_string(s->kind)) + " order " + std::to_string(w->order);
                        if (c == Check::homogeneity) {
                            where += ", component " + std::to_string(w->component + 1);
                        }
                        report_witness(out, c, where, w->value);
                        break;
                    }
                }
                break;
            }
            case Check::linear: {
                const auto cmp = compare_series(source, linear_closed_form(pi, n), n);
                if (!cmp.equal) {
                    ok = false;
                    const auto &w = *cmp.first_difference;
                    report_witness(out, c,
                                   "order " + std::to_string(w.order) + ", component " + std::to_string(w.component + 1),
                                   w.value);
                }
                break;
            }
        }
        if (ok) {
            out << to_string(c) << ": ok through order " << n << '\n';
        }
        all_ok = all_ok && ok;
    }
    return all_ok ? exit_ok : exit_failed;
}

int run_jacobi(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    const auto pi = read_poisson(config);
    const auto report = jacobi_check(pi);
    if (report.holds) {
        out << "jacobi: ok\n";
        return exit_ok;
    }
    const auto &[i, j, k] = *report.triple;
    out << "jacobi: FAIL at (i,j,k)=(" << i + 1 << "," << j + 1 << "," << k + 1
        << "): " << report.residual.to_string() << '\n';
    if (config.strict) {
        return exit_failed;
    }
    err << "warning: not a Poisson structure (use --strict to fail)\n";
    return exit_ok;
}

} // namespace

Check check_from_string(std::string_view name)
{
    for (auto c : {Check::bracket, Check::compare, Check::h1, Check::homogeneity, Check::pairing, Check::linear}) {
        if (to_string(c) == name) {
            return c;
        }
    }
    throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

std::string_view to_string(Check c)
{
    switch (c) {
        case Check::bracket:
            return "bracket";
        case Check::compare:
            return "compare";
        case Check::h1:
            return "h1";
        case Check::homogeneity:
            return "homogeneity";
        case Check::pairing:
            return "pairing";
        case Check::linear:
            return "linear";
    }
    return "unknown";
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        switch (config.subcommand) {
            case Subcommand::trees:
                return run_trees(config, out);
            case Subcommand::weights:
                return run_weights(config, out);
            case Subcommand::realize:
                return run_realize(config, out, err);
            case Subcommand::verify:
                return run_verify(config, out, err);
            case Subcommand::jacobi:
                return run_jacobi(config, out, err);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
    } catch (const FormatError &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

} // namespace symreal::cli
