#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pie/chain.hpp"
#include "pie/checks.hpp"
#include "pie/families.hpp"
#include "pie/ffield.hpp"
#include "pie/graded.hpp"
#include "pie/incidence.hpp"
#include "pie/motivic.hpp"
#include "pie/poset.hpp"
#include "pie/spectral.hpp"
#include "pie/version.hpp"
#include "pie/zerocycles.hpp"

namespace {

// 0 ok, 1 verification failed, 2 bad input or unknown command, 3 cost guard.
int g_exit = 0;

nlohmann::json load_json(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open " + path);
        in = &file;
    }
    nlohmann::json j;
    try {
        *in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("bad json in " + path + ": " + e.what());
    }
    return j;
}

void emit(const nlohmann::json& report, const std::string& format) {
    if (format == "table") {
        for (const auto& [key, value] : report.items()) {
            if (value.is_string())
                std::cout << key << ": " << value.get<std::string>() << "\n";
            else
                std::cout << key << ": " << value.dump() << "\n";
        }
        return;
    }
    std::cout << report.dump(2) << "\n";
}

nlohmann::json rat_json(const pie::rat& r) {
    return nlohmann::json::array({pie::str(pie::numerator(r)), pie::str(pie::denominator(r))});
}

nlohmann::json report_base() { return {{"version", std::string(pie::version)}}; }

pie::finite_poset poset_from(const std::string& path, std::optional<long long> seed) {
    nlohmann::json spec = load_json(path);
    if (seed && spec.is_object()) spec["seed"] = *seed;
    return pie::build_family(spec);
}

nlohmann::json betti_json(const std::map<int, long long>& b) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [deg, dim] : b) out[std::to_string(deg)] = dim;
    return out;
}

nlohmann::json series_coefficients(const pie::mot_series& s, std::optional<long long> q) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= s.trunc; ++k) {
        if (q)
            coeffs.push_back(pie::str(s.at(k).eval_int(pie::bigint(*q))));
        else
            coeffs.push_back(s.at(k).to_json());
    }
    return coeffs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"poset, series, and point-count toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pie::version));

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    std::string poset_path, variety_path, table_path, oracle, suite = "all";
    std::optional<long long> seed, specialize_q, expect;
    std::optional<int> max_dim;
    long long q = 2, guard_bytes = 160'000'000;
    int trunc = 5, power = 1, d = 1, k = 1, dim_x = 0, k_max = 4, letters = 2, cutoff = 2,
        d_max = 7;
    std::vector<int> parts;

    const auto add_poset = [&](CLI::App* sub) {
        sub->add_option("--poset", poset_path, "poset or family description (json file, - for stdin)")
            ->required();
        sub->add_option("--seed", seed, "override the seed of a random family");
        sub->fallthrough();
    };
    const auto add_variety = [&](CLI::App* sub) {
        sub->add_option("--variety", variety_path, "cell variety (json file, - for stdin)")
            ->required();
        sub->fallthrough();
    };

    CLI::App* mobius = app.add_subcommand("mobius", "Moebius function by both routes");
    add_poset(mobius);
    mobius->callback([&] {
        const pie::finite_poset p = poset_from(poset_path, seed);
        const pie::incidence_context ctx(p);
        const auto recursive = pie::mobius_by_inversion<pie::bigint>(ctx);
        const auto topological = pie::mobius_topological(ctx);
        const bool agree = recursive == topological;
        nlohmann::json pairs = nlohmann::json::array();
        for (size_t i = 0; i < ctx.pairs().size(); ++i) {
            const auto [a, b] = ctx.pairs()[i];
            pairs.push_back({{"a", p.id(a)}, {"b", p.id(b)}, {"mu", pie::str(recursive.value[i])}});
        }
        nlohmann::json rep = report_base();
        rep["elements"] = p.size();
        rep["pairs"] = pairs;
        rep["routes_agree"] = agree;
        emit(rep, format);
        if (!agree) g_exit = 1;
    });

    CLI::App* nerve_cmd = app.add_subcommand("nerve", "order complex sizes and homology");
    add_poset(nerve_cmd);
    nerve_cmd->add_option("--max-dim", max_dim, "truncate the complex at this dimension");
    nerve_cmd->add_option("--guard-bytes", guard_bytes, "memory budget for the simplex list")
        ->capture_default_str();
    nerve_cmd->callback([&] {
        const pie::finite_poset p = poset_from(poset_path, seed);
        // 32 bytes is the budgeted average simplex footprint.
        const pie::nerve_complex nv = pie::nerve(p, max_dim, guard_bytes / 32);
        const pie::chain_complex_q c = pie::chain_complex(nv);
        nlohmann::json sizes = nlohmann::json::array();
        for (const auto& level : nv.simplices) sizes.push_back(level.size());
        const auto chi = pie::euler_characteristics(p);
        nlohmann::json rep = report_base();
        rep["elements"] = p.size();
        rep["simplices"] = sizes;
        rep["betti"] = betti_json(pie::betti(c, false));
        rep["betti_reduced"] = betti_json(pie::betti(c, true));
        rep["chi"] = pie::str(chi.chi);
        rep["chi_reduced"] = pie::str(chi.chi_reduced);
        emit(rep, format);
    });

    CLI::App* ss_rank = app.add_subcommand("ss-rank", "rank filtration spectral sequence");
    add_poset(ss_rank);
    ss_rank->callback([&] {
        const pie::rank_e1_report_t r = pie::rank_e1_report(poset_from(poset_path, seed));
        nlohmann::json rep = pie::rank_e1_to_json(r);
        rep["version"] = std::string(pie::version);
        emit(rep, format);
        if (!(r.e1_match && r.converges)) g_exit = 1;
    });

    CLI::App* ss_skel = app.add_subcommand(
        "ss-skeletal-compare", "antisymmetrization against the subset complex, level by level");
    ss_skel->add_option("--alphabet", letters, "number of letters")->required();
    ss_skel->add_option("--cutoff", cutoff, "largest multiset size")->required();
    ss_skel->fallthrough();
    ss_skel->callback([&] {
        const pie::asym_result a = pie::asym(pie::skeletal_e1(letters, cutoff));
        nlohmann::json rep = pie::asym_to_json(a);
        rep["version"] = std::string(pie::version);
        emit(rep, format);
        if (!(a.commutes && a.filtration_preserved && a.filtered_quasi_iso)) g_exit = 1;
    });

    const auto series_command = [&](CLI::App* sub, bool inverted) {
        add_variety(sub);
        sub->add_option("-N,--trunc", trunc, "series truncation")->required();
        sub->add_option("--specialize-q", specialize_q, "evaluate coefficients at this integer");
        sub->callback([&, inverted] {
            const pie::cellular_variety x = pie::variety_from_json(load_json(variety_path));
            pie::mot_series s = pie::kapranov_zeta(x, trunc);
            if (inverted) s = pie::invert(s);
            nlohmann::json rep = report_base();
            rep["N"] = trunc;
            if (specialize_q) rep["q"] = *specialize_q;
            rep["coefficients"] = series_coefficients(s, specialize_q);
            emit(rep, format);
        });
    };
    series_command(app.add_subcommand("zeta", "zeta series of a cell variety"), false);
    series_command(app.add_subcommand("zeta-invert", "inverse zeta series"), true);

    CLI::App* stable_lim = app.add_subcommand("stable-limit", "inverse zeta at t = L^{-n}");
    add_variety(stable_lim);
    stable_lim->add_option("-n,--power", power, "twisting power, must exceed the dimension")
        ->required();
    stable_lim->add_option("-N,--trunc", trunc, "powers of 1/L to keep")->required();
    stable_lim->callback([&] {
        const pie::cellular_variety x = pie::variety_from_json(load_json(variety_path));
        const pie::stable_limit_t sl = pie::stable_limit(x, power, trunc);
        nlohmann::json rep = report_base();
        rep["n"] = power;
        rep["trunc"] = sl.trunc;
        rep["series"] = sl.series.to_json();
        emit(rep, format);
    });

    CLI::App* stable_betti =
        app.add_subcommand("stable-betti", "stable homology table from a cohomology table");
    stable_betti
        ->add_option("--variety-cohomology", table_path, "graded table (json file, - for stdin)")
        ->required();
    stable_betti->add_option("--dim", dim_x, "dimension of the variety")->required();
    stable_betti->add_option("--kmax", k_max, "largest rank row")->required();
    stable_betti->fallthrough();
    stable_betti->callback([&] {
        const pie::graded_weighted_space v = pie::table_from_json(load_json(table_path));
        const pie::stable_homology_result st = pie::stable_homology_table(v, dim_x, k_max);
        nlohmann::json table = nlohmann::json::array();
        for (const auto& [ik, n] : st.table)
            table.push_back({{"i", ik.first}, {"k", ik.second}, {"dim", n}});
        nlohmann::json rep = report_base();
        rep["dim"] = dim_x;
        rep["k_max"] = st.k_max;
        rep["table"] = table;
        rep["poincare"] = st.poincare.to_json();
        emit(rep, format);
    });

    CLI::App* count = app.add_subcommand("count", "direct counts over a prime field");
    count->add_option("--oracle", oracle, "what to count")
        ->required()
        ->check(CLI::IsMember({"squarefree", "colored-a1", "colored-p1", "divisors-a1",
                               "divisors-p1", "smooth-p1"}));
    count->add_option("--q", q, "field size, prime")->required();
    count->add_option("--d", d, "degree");
    count->add_option("--parts", parts, "color degrees for the colored oracles")->delimiter(',');
    count->add_option("--expect", expect, "verify the count equals this value");
    count->fallthrough();
    count->callback([&] {
        long long n = 0;
        nlohmann::json rep = report_base();
        if (oracle == "squarefree")
            n = pie::count_squarefree_monic(q, d);
        else if (oracle == "colored-a1")
            n = pie::count_colored_configs(q, parts);
        else if (oracle == "colored-p1")
            n = pie::count_colored_configs_p1(q, parts);
        else if (oracle == "divisors-a1")
            n = pie::count_divisors_a1(q, d);
        else if (oracle == "divisors-p1")
            n = pie::count_divisors_p1(q, d);
        else
            n = pie::count_smooth_sections_p1(q, d);
        rep["oracle"] = oracle;
        rep["q"] = q;
        if (oracle == "colored-a1" || oracle == "colored-p1")
            rep["parts"] = parts;
        else
            rep["d"] = d;
        rep["count"] = n;
        if (expect) {
            rep["expect"] = *expect;
            rep["pass"] = n == *expect;
            if (n != *expect) g_exit = 1;
        }
        emit(rep, format);
    });

    CLI::App* density = app.add_subcommand("density", "squarefree density on the projective line");
    density->add_option("--q", q, "field size, prime")->required();
    density->add_option("--dmax", d_max, "largest degree")->capture_default_str();
    density->fallthrough();
    density->callback([&] {
        const pie::density_result dr = pie::density_report(q, d_max);
        nlohmann::json rows = nlohmann::json::array();
        for (const pie::density_row& row : dr.rows)
            rows.push_back({{"d", row.d}, {"smooth", row.smooth}, {"density", rat_json(row.density)}});
        nlohmann::json rep = report_base();
        rep["q"] = dr.q;
        rep["rows"] = rows;
        rep["limit"] = rat_json(dr.limit);
        rep["first_exact_d"] = dr.first_exact_d;
        emit(rep, format);
    });

    CLI::App* ie = app.add_subcommand("ie", "truncated discriminant count");
    ie->add_option("--q", q, "field size, prime")->required();
    ie->add_option("--d", d, "form degree")->required();
    ie->add_option("--k", k, "multiplicity cutoff")->required();
    ie->fallthrough();
    ie->callback([&] {
        const pie::ie_report r = pie::truncated_ie_discriminant(q, d, k);
        nlohmann::json rep = report_base();
        rep["q"] = r.q;
        rep["d"] = r.d;
        rep["k"] = r.k;
        rep["truncated_sum"] = r.truncated_sum;
        rep["exact"] = r.exact;
        rep["residual"] = r.residual;
        emit(rep, format);
    });

    CLI::App* vw = app.add_subcommand("vw", "colored counts against the specialized series inverse");
    vw->add_option("--q", q, "field size, prime")->required();
    vw->add_option("-N,--trunc", trunc, "largest degree")->required();
    vw->fallthrough();
    vw->callback([&] {
        const pie::vw_report r = pie::vw_inversion_check(q, trunc);
        nlohmann::json rep = report_base();
        rep["q"] = r.q;
        rep["N"] = r.N;
        rep["counted"] = r.counted;
        rep["specialized"] = r.specialized;
        rep["pass"] = r.pass;
        emit(rep, format);
        if (!r.pass) g_exit = 1;
    });

    CLI::App* check = app.add_subcommand("check", "run verification suites");
    check->add_option("suite", suite, "suite name or all")->capture_default_str();
    bool list_suites = false;
    check->add_flag("--list", list_suites, "list suite names and exit");
    check->fallthrough();
    check->callback([&] {
        if (list_suites) {
            nlohmann::json names = nlohmann::json::array();
            for (const auto& e : pie::check_registry()) names.push_back(e.name);
            nlohmann::json rep = report_base();
            rep["suites"] = names;
            emit(rep, format);
            return;
        }
        std::vector<pie::check_result> results;
        if (suite == "all")
            results = pie::run_all_checks();
        else
            results.push_back(pie::run_check(suite));
        const nlohmann::json rep = pie::checks_to_json(results);
        emit(rep, format);
        if (!rep["pass"].get<bool>()) g_exit = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const pie::cost_guard_error& e) {
        std::cerr << "cost guard: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const pie::truncation_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
