// Command-line surface: verification suites, machine-readable table
// reproductions, and direct access to the Pell / Fuchsian / spectral
// computations.  Output is JSON (or CSV with --format csv); exit status is
// 0 when all checks pass, 1 on failed checks, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlk/catalog_io.hpp"
#include "mlk/verify.hpp"

using namespace mlk;

namespace {

struct CommonOpts {
    std::string format = "json";
    int digits = 40;
    unsigned long seed = 20240801UL;
    std::string catalog_path;
};

int emit(const Report& rep, const CommonOpts& opts) {
    Report sorted = rep;
    sorted.sort_by_id();
    if (opts.format == "csv") std::cout << sorted.to_csv();
    else std::cout << sorted.to_json() << "\n";
    return sorted.all_pass() ? 0 : 1;
}

FamilySpec resolve_spec(const CommonOpts& opts, Series s, long p) {
    if (!opts.catalog_path.empty()) {
        std::ifstream in(opts.catalog_path);
        if (!in) throw error("cannot open catalog file " + opts.catalog_path);
        std::stringstream ss;
        ss << in.rdbuf();
        auto entries = catalog_from_json(ss.str());
        const FamilySpec* f = catalog_find(entries, s, p);
        if (!f) throw error("catalog file has no entry for this series and p");
        return *f;
    }
    return family_spec(s, p);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Milnor-lattice computations for the bimodal series and "
                 "quadrangle families"};
    app.require_subcommand(1);
    app.fallthrough();
    CommonOpts opts;
    if (const char* env = std::getenv("MLK_DIGITS")) opts.digits = std::atoi(env);
    app.add_option("--format", opts.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--digits", opts.digits, "numeric precision in decimal digits");
    app.add_option("--seed", opts.seed, "seed for randomized property runs");
    app.add_option("--catalog", opts.catalog_path, "catalog JSON to re-ingest");

    std::string series_arg, case_arg, family_arg, w_arg, method = "charpoly";
    long p_arg = 1, r_arg = 1, m_arg = 12, height = 50, dump_p = 1;
    int nwords = 20;

    auto* vf = app.add_subcommand("verify-family", "Orlik decomposition suite for one instance");
    vf->add_option("--series", series_arg, "series name (W#, S#, U, E3, Z1, Q2, W, S)")
        ->required();
    vf->add_option("--p", p_arg, "series parameter p (0 = quadrangle member)")->required();

    auto* mo = app.add_subcommand("monodromy", "action-list dump and diff");
    mo->add_option("--series", series_arg)->required();
    mo->add_option("--p", p_arg)->required();

    auto* ht = app.add_subcommand("herm-table", "hermitian eigenspace tables at p = m r");
    ht->add_option("--series", series_arg)->required();
    ht->add_option("--r", r_arg, "subseries index r >= 0")->required();

    auto* tr = app.add_subcommand("triangle", "triangle-group pipeline for one case");
    tr->add_option("--case", case_arg, "W10, S10, E30U10, Z10 or Q20")->required();
    tr->add_option("--words", nwords, "number of seeded random reductions");

    auto* pe = app.add_subcommand("pell", "bounded Pell search over Z[p1]");
    pe->add_option("--m", m_arg, "cyclotomic modulus")->required();
    pe->add_option("--w", w_arg,
                   "parameter: comma-separated rationals over the p1 power basis, "
                   "or a case name (W10, S10, E30U10, Z10, Q20)")
        ->required();
    pe->add_option("--height", height);

    auto* gz = app.add_subcommand("gz", "Pell-generated lattice automorphisms at p = m r");
    gz->add_option("--series", series_arg)->required();
    gz->add_option("--r", r_arg)->required();
    gz->add_option("--height", height);
    std::string check_matrix_path;
    gz->add_option("--check-matrix", check_matrix_path,
                   "verify a matrix file {rank, rows} against the instance instead");

    auto* sp = app.add_subcommand("spectra", "singularity spectrum of a family instance");
    sp->add_option("--family", family_arg, "instance name, e.g. E3_1 or Q2_0")->required();
    sp->add_option("--method", method)->check(CLI::IsMember({"weights", "charpoly", "both"}));

    auto* ca = app.add_subcommand("catalog", "dump the family catalog as JSON");
    ca->add_flag("--dump", "emit the catalog");
    ca->add_option("--p", dump_p, "series parameter at which edges are materialized");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    try {
        set_default_digits(opts.digits);
        if (vf->parsed()) {
            FamilySpec spec = resolve_spec(opts, parse_series(series_arg), p_arg);
            return emit(verify_family_report(spec), opts);
        }
        if (mo->parsed()) {
            FamilySpec spec = resolve_spec(opts, parse_series(series_arg), p_arg);
            Report rep;
            rep.command = "monodromy " + spec.id;
            SeifertLattice lat = lattice_from_stokes(stokes_matrix(spec));
            auto action = monodromy_action_list(spec);
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            bool all = true;
            for (long i = 0; i < spec.mu; ++i) {
                nlohmann::ordered_json row;
                row["basis_vector"] = i + 1;
                std::string img;
                for (long j = 0; j < spec.mu; ++j)
                    if (lat.M.at(j, i) != 0)
                        img += (img.empty() ? "" : " + ") + lat.M.at(j, i).get_str() + "*e" +
                               std::to_string(j + 1);
                row["image"] = img;
                bool same = true;
                for (long j = 0; j < spec.mu; ++j)
                    if (lat.M.at(j, i) != action[i][j]) same = false;
                row["matches_list"] = same;
                all = all && same;
                rows.push_back(row);
            }
            rep.add("action_list", all, "every basis image matches", all ? "match" : "diff");
            Report sorted = rep;
            if (opts.format == "csv") {
                std::cout << sorted.to_csv();
            } else {
                nlohmann::ordered_json out = nlohmann::ordered_json::parse(sorted.to_json());
                out["rows"] = rows;
                out["monodromy"] = nlohmann::ordered_json::parse(matrix_to_json(lat.M));
                std::cout << out.dump(2) << "\n";
            }
            return all ? 0 : 1;
        }
        if (ht->parsed()) return emit(herm_table_report(parse_series(series_arg), r_arg), opts);
        if (tr->parsed())
            return emit(triangle_report(parse_triangle_case(case_arg), nwords, opts.seed), opts);
        if (pe->parsed()) {
            Cyclo w(m_arg);
            try {
                TriangleCase c = parse_triangle_case(w_arg);
                FuchsianGroup g = triangle_group(c);
                m_arg = g.m;
                w = g.w;
            } catch (const error&) {
                std::vector<Rat> coords;
                std::stringstream ss(w_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) coords.emplace_back(tok);
                for (auto& r0 : coords) r0.canonicalize();
                w = real_from_p1_coords(m_arg, coords);
            }
            std::vector<PellSolution> sols;
            Report rep = pell_report(m_arg, w, height, &sols);
            if (opts.format == "csv") {
                std::cout << rep.to_csv();
            } else {
                nlohmann::ordered_json out = nlohmann::ordered_json::parse(rep.to_json());
                out["solutions"] = nlohmann::ordered_json::array();
                for (const auto& s : sols) {
                    nlohmann::ordered_json e;
                    auto pa = p1_coords(s.a), pc = p1_coords(s.c);
                    nlohmann::ordered_json ja = nlohmann::ordered_json::array(),
                                           jc = nlohmann::ordered_json::array();
                    for (const auto& v : pa) ja.push_back(v.get_str());
                    for (const auto& v : pc) jc.push_back(v.get_str());
                    e["a"] = ja;
                    e["c"] = jc;
                    out["solutions"].push_back(e);
                }
                std::cout << out.dump(2) << "\n";
            }
            return rep.all_pass() ? 0 : 1;
        }
        if (gz->parsed()) {
            if (!check_matrix_path.empty()) {
                std::ifstream in(check_matrix_path);
                if (!in) throw error("cannot open " + check_matrix_path);
                std::stringstream ss;
                ss << in.rdbuf();
                IntMat g = matrix_from_json(ss.str());
                HermData hd = herm_data(parse_series(series_arg), r_arg);
                Report rep;
                rep.command = "gz --check-matrix " + hd.spec.id;
                rep.add("preserves_L", is_form_automorphism(hd.lat, g),
                        "g in GL(mu, Z) with g^T L g = L", "");
                rep.add("commutes_with_M", g * hd.lat.M == hd.lat.M * g, "g M = M g", "");
                return emit(rep, opts);
            }
            std::vector<IntMat> gs;
            Report rep = gz_report(parse_series(series_arg), r_arg, height, &gs);
            if (opts.format == "csv") {
                std::cout << rep.to_csv();
            } else {
                Report sorted = rep;
                sorted.sort_by_id();
                nlohmann::ordered_json out = nlohmann::ordered_json::parse(sorted.to_json());
                out["automorphisms"] = nlohmann::ordered_json::array();
                for (const auto& g : gs)
                    out["automorphisms"].push_back(
                        nlohmann::ordered_json::parse(matrix_to_json(g)));
                std::cout << out.dump(2) << "\n";
            }
            return rep.all_pass() ? 0 : 1;
        }
        if (sp->parsed()) {
            FamilySpec spec = parse_family(family_arg);
            Spectrum s;
            Report rep = spectra_report(spec, method, &s);
            if (opts.format == "csv") {
                std::cout << rep.to_csv();
            } else {
                nlohmann::ordered_json out = nlohmann::ordered_json::parse(rep.to_json());
                out["spectrum"] = nlohmann::ordered_json::array();
                for (const auto& a : s) out["spectrum"].push_back(a.get_str());
                std::cout << out.dump(2) << "\n";
            }
            return rep.all_pass() ? 0 : 1;
        }
        if (ca->parsed()) {
            std::vector<FamilySpec> entries;
            for (auto s : {Series::Wsharp, Series::Ssharp, Series::U1, Series::E3, Series::Z1,
                           Series::Q2, Series::W1, Series::S1})
                entries.push_back(family_spec(s, dump_p));
            for (auto& q : quadrangle_catalog()) entries.push_back(q);
            std::cout << catalog_to_json(entries) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
