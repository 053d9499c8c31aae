// Command-line front end: coefficient tables, verification batches, and
// convergence experiments, all with deterministic machine-readable output.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvp/even_series.hpp"
#include "mvp/euclid_checks.hpp"
#include "mvp/laurent.hpp"
#include "mvp/multipoly.hpp"
#include "mvp/report.hpp"
#include "mvp/rng.hpp"
#include "mvp/tree.hpp"

namespace {

using mvp::CheckReport;
using mvp::ordered_json;
using mvp::Rational;
using mvp::TreeFn;

// --out is joined against MVP_OUT_DIR when set and the path is relative;
// empty --out means stdout.
void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("MVP_OUT_DIR"))
            p = std::filesystem::path(dir) / p;
    }
    std::ofstream os(p);
    if (!os)
        throw std::runtime_error("cannot open output file: " + p.string());
    os << text;
}

int emit_reports(const std::vector<CheckReport>& reports, const std::string& out) {
    ordered_json arr = ordered_json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        all_pass = all_pass && r.pass;
    }
    write_output(out, arr.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

TreeFn load_tree_fn(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open input file: " + path);
    ordered_json j = ordered_json::parse(is);
    return TreeFn::from_json(j);
}

// f(u) = q^(-2|u|), the standard radially decaying example.
TreeFn make_radial_decay(long q, int radius) {
    TreeFn f = TreeFn::make_zeroed(q, radius);
    f.provenance = "radial";
    f.at(0, 0) = Rational(1);
    for (int l = 1; l <= radius; ++l) {
        Rational v = mvp::rat_pow(Rational(1, q * q), l);
        std::size_t sz = f.level_size(l);
        for (std::size_t w = 0; w < sz; ++w)
            f.at(l, w) = v;
    }
    return f;
}

TreeFn build_named_fn(const std::string& name, const std::string& input, long q,
                      int radius) {
    if (name == "chi")
        return TreeFn::make_chi(q, std::max(1, std::min(radius, 2)));
    if (name == "const")
        return TreeFn::make_constant(Rational(1), q, std::max(1, std::min(radius, 2)));
    if (name == "busemann")
        return TreeFn::make_busemann(q, radius, 0);
    if (name == "radial")
        return make_radial_decay(q, radius);
    if (name == "file") {
        if (input.empty())
            throw CLI::ValidationError("--input is required with --function file");
        return load_tree_fn(input);
    }
    throw CLI::ValidationError("unknown function: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact verification toolkit for generalized mean value expansions:\n"
        "Bessel-coefficient averages over Euclidean spheres and horocyclic\n"
        "coefficient machinery on homogeneous trees.\n"};
    app.require_subcommand(1);

    // alpha
    auto* alpha = app.add_subcommand(
        "alpha", "Reciprocal-Bessel coefficient table (the sphere-average series weights)");
    int a_d = 3, a_order = 8;
    std::string a_out, a_format = "json";
    alpha->add_option("--d", a_d, "dimension, >= 1")->check(CLI::PositiveNumber);
    alpha->add_option("--order", a_order, "highest index emitted")->check(CLI::NonNegativeNumber);
    alpha->add_option("--out", a_out, "output file (default stdout)");
    alpha->add_option("--format", a_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // tree-coeffs
    auto* tc = app.add_subcommand(
        "tree-coeffs", "Laurent decomposition coefficients a(n,k) for the tree identity");
    long t_q = 2;
    int t_n = 5;
    std::string t_out, t_format = "csv";
    tc->add_option("--q", t_q, "branching number, >= 2")->check(CLI::Range(2l, 1000000l));
    tc->add_option("--n", t_n, "table extends over |n| <= N")->check(CLI::NonNegativeNumber);
    tc->add_option("--out", t_out, "output file (default stdout)");
    tc->add_option("--format", t_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    // gamma
    auto* gm = app.add_subcommand(
        "gamma", "Solve the horocyclic linear system for one gamma polynomial");
    long g_q = 2;
    int g_k = 3;
    std::string g_out;
    gm->add_option("--q", g_q, "branching number, >= 2")->check(CLI::Range(2l, 1000000l));
    gm->add_option("--k", g_k, "polynomial index")->check(CLI::NonNegativeNumber);
    gm->add_option("--out", g_out, "output file (default stdout)");

    // verify-euclid
    auto* ve = app.add_subcommand(
        "verify-euclid",
        "Mean-value, commuting, and annihilation checks on random polynomials");
    int e_d = 3, e_degree = 8, e_count = 20, e_kmax = 10;
    std::uint64_t e_seed = 1;
    double e_tol = 1e-10;
    std::string e_out;
    ve->add_option("--d", e_d, "dimension, >= 1")->check(CLI::PositiveNumber);
    ve->add_option("--degree", e_degree, "max total degree of sampled polynomials")
        ->check(CLI::NonNegativeNumber);
    ve->add_option("--count", e_count, "number of random polynomials")
        ->check(CLI::PositiveNumber);
    ve->add_option("--seed", e_seed, "RNG seed");
    ve->add_option("--kmax", e_kmax, "annihilation checked for k = 0..kmax")
        ->check(CLI::NonNegativeNumber);
    ve->add_option("--tolerance", e_tol, "numeric checks only; exact checks ignore it");
    ve->add_option("--out", e_out, "output file (default stdout)");

    // verify-tree
    auto* vt = app.add_subcommand(
        "verify-tree",
        "Cone identity batches plus three-way coefficient agreement");
    long v_q = 2;
    int v_n = 4, v_count = 5;
    std::uint64_t v_seed = 1;
    std::string v_out;
    vt->add_option("--q", v_q, "branching number, >= 2")->check(CLI::Range(2l, 1000000l));
    vt->add_option("--n", v_n, "identity depth; random functions get radius 2n")
        ->check(CLI::PositiveNumber);
    vt->add_option("--count", v_count, "number of random functions")
        ->check(CLI::NonNegativeNumber);
    vt->add_option("--seed", v_seed, "RNG seed");
    vt->add_option("--out", v_out, "output file (default stdout)");

    // converge
    auto* cv = app.add_subcommand(
        "converge", "Partial-sum sequences of the horocyclic expansions");
    long c_q = 2;
    int c_N = 6, c_radius = -1;
    std::string c_fn = "chi", c_input, c_kind = "cone", c_out;
    cv->add_option("--q", c_q, "branching number, >= 2")->check(CLI::Range(2l, 1000000l));
    cv->add_option("--N", c_N, "number of entries")->check(CLI::PositiveNumber);
    cv->add_option("--function", c_fn, "chi|const|busemann|radial|file")
        ->check(CLI::IsMember({"chi", "const", "busemann", "radial", "file"}));
    cv->add_option("--input", c_input, "TreeFn JSON (with --function file)");
    cv->add_option("--radius", c_radius, "ball radius (default 2N where needed)");
    cv->add_option("--kind", c_kind, "cone|full-boundary|horosummability")
        ->check(CLI::IsMember({"cone", "full-boundary", "horosummability"}));
    cv->add_option("--out", c_out, "output file (default stdout)");

    // holom
    auto* hl = app.add_subcommand(
        "holom", "Two-stage horocyclic evaluation of a harmonic function");
    long h_q = 2;
    int h_N = 4, h_radius = -1;
    double h_tol = 1e-10;
    std::string h_fn = "busemann", h_input, h_out;
    hl->add_option("--q", h_q, "branching number, >= 2")->check(CLI::Range(2l, 1000000l));
    hl->add_option("--N", h_N, "sequence length")->check(CLI::PositiveNumber);
    hl->add_option("--function", h_fn, "busemann|const|file")
        ->check(CLI::IsMember({"busemann", "const", "file"}));
    hl->add_option("--input", h_input, "TreeFn JSON (with --function file)");
    hl->add_option("--radius", h_radius, "ball radius (default 2N)");
    hl->add_option("--tolerance", h_tol, "applies only when the limit is inexact");
    hl->add_option("--out", h_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*alpha) {
            auto series = mvp::alpha_coeffs(a_d, a_order);
            std::string text = (a_format == "csv")
                                   ? mvp::coeffs_to_csv(series)
                                   : mvp::coeffs_to_json(series).dump(2) + "\n";
            write_output(a_out, text);
            return 0;
        }

        if (*tc) {
            auto table = mvp::CoeffTable::build(t_q, t_n);
            std::string text;
            if (t_format == "csv") {
                text = mvp::coeff_table_csv(table);
            } else {
                ordered_json arr = ordered_json::array();
                for (int n = -t_n; n <= t_n; ++n)
                    for (int k = 0; k <= std::abs(n); ++k) {
                        Rational a = table.a(n, k);
                        ordered_json rec;
                        rec["q"] = t_q;
                        rec["n"] = n;
                        rec["k"] = k;
                        rec["num"] = a.num_str();
                        rec["den"] = a.den_str();
                        arr.push_back(rec);
                    }
                text = arr.dump(2) + "\n";
            }
            write_output(t_out, text);
            return 0;
        }

        if (*gm) {
            auto g = mvp::solve_gamma(g_k, g_q);
            write_output(g_out, g.to_json().dump(2) + "\n");
            return 0;
        }

        if (*ve) {
            std::vector<CheckReport> reports;
            reports.push_back(mvp::convolution_check(e_d, 32));
            for (int k = 0; k <= e_kmax; ++k)
                reports.push_back(mvp::annihilation_check(k, e_d, std::max(e_kmax + 2, 12)));
            std::mt19937_64 eng(e_seed);
            for (int i = 0; i < e_count; ++i) {
                mvp::MultiPoly f = mvp::random_multipoly(e_d, e_degree, eng);
                reports.push_back(mvp::mvp_check(f, e_d));
                reports.push_back(mvp::commuting_check(f, e_d, 2));
            }
            (void)e_tol;  // all checks in this batch are exact
            return emit_reports(reports, e_out);
        }

        if (*vt) {
            std::vector<CheckReport> reports;

            CheckReport triple;
            triple.check = "triple_agreement";
            triple.params["q"] = v_q;
            triple.params["n"] = v_n;
            triple.pass = true;
            auto t1 = mvp::CoeffTable::build(v_q, v_n);
            auto t2 = mvp::CoeffTable::build_by_recurrence(v_q, v_n);
            std::vector<mvp::GammaPoly> gs;
            for (int k = 0; k <= v_n; ++k)
                gs.push_back(mvp::solve_gamma(k, v_q));
            for (int n = 0; n <= v_n && triple.pass; ++n)
                for (int k = 0; k <= n && triple.pass; ++k) {
                    Rational a = t1.a(n, k);
                    if (a != t2.a(n, k) ||
                        a != mvp::closed_form_a(n, gs[static_cast<std::size_t>(k)])) {
                        triple.pass = false;
                        triple.params["bad_n"] = n;
                        triple.params["bad_k"] = k;
                    }
                }
            reports.push_back(triple);

            auto table = mvp::CoeffTable::build(v_q, v_n);
            reports.push_back(
                mvp::cone_identity_check(TreeFn::make_chi(v_q, 1), v_n, table));
            reports.push_back(mvp::cone_identity_check(
                TreeFn::make_constant(Rational(1), v_q, 1), v_n, table));
            reports.push_back(mvp::cone_identity_check(
                TreeFn::make_busemann(v_q, 2 * v_n, 0), v_n, table));
            for (int i = 0; i < v_count; ++i)
                reports.push_back(mvp::cone_identity_check(
                    TreeFn::make_random(v_q, 2 * v_n, v_seed + static_cast<std::uint64_t>(i)),
                    v_n, table));
            return emit_reports(reports, v_out);
        }

        if (*cv) {
            int radius = (c_radius > 0) ? c_radius : 2 * c_N;
            TreeFn f = build_named_fn(c_fn, c_input, c_q, radius);
            mvp::PartialSumSeq seq;
            if (c_kind == "cone")
                seq = mvp::horocyclic_partial_sums(f, c_N);
            else if (c_kind == "full-boundary")
                seq = mvp::full_boundary_partial_sums(f, c_N);
            else
                seq = mvp::horosummability_seq(f, c_N);
            write_output(c_out, seq.to_jsonl());
            return 0;
        }

        if (*hl) {
            int radius = (h_radius > 0) ? h_radius : 2 * h_N;
            TreeFn h;
            if (h_fn == "busemann")
                h = TreeFn::make_busemann(h_q, radius, 0);
            else if (h_fn == "const")
                h = TreeFn::make_constant(Rational(1), h_q, std::max(1, std::min(radius, 2)));
            else {
                if (h_input.empty())
                    throw CLI::ValidationError("--input is required with --function file");
                h = load_tree_fn(h_input);
            }
            auto res = mvp::holom_check(h, h_N, h_tol);
            ordered_json j = res.report.to_json();
            ordered_json aseq = ordered_json::array();
            for (const auto& v : res.A_seq)
                aseq.push_back(v.str());
            ordered_json bseq = ordered_json::array();
            for (const auto& v : res.B_seq)
                bseq.push_back(v.str());
            j["A_seq"] = aseq;
            j["B_seq"] = bseq;
            write_output(h_out, j.dump(2) + "\n");
            return res.report.pass ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
