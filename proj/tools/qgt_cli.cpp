// Command-line front end: builds the algebraic objects and prints
// tables/reports as text, JSON, or CSV.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "qgt/chars.hpp"
#include "qgt/codes.hpp"
#include "qgt/gf.hpp"
#include "qgt/gring.hpp"
#include "qgt/mub.hpp"
#include "qgt/numtheory.hpp"
#include "qgt/pg.hpp"
#include "qgt/phase.hpp"

using json = nlohmann::ordered_json;
using namespace qgt;

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// round-tripped through 12 significant digits so JSON and text agree
double sig12(double v) { return std::stod(fmt12(v)); }

json complex_json(std::complex<double> z) {
    return json::array({sig12(z.real()), sig12(z.imag())});
}

std::vector<int> parse_poly(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

gf::Field field_from_q(int q) {
    auto f = numtheory::factorize(static_cast<std::uint64_t>(q));
    if (f.size() != 1) throw CLI::ValidationError("--q", "q must be a prime power");
    return gf::Field(static_cast<int>(f[0].first), f[0].second);
}

struct Options {
    std::string format = "text";
    double tol = 1e-9;
    int threads = 1;
    int seed = 0;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--tol", opt.tol);
    cmd->add_option("--threads", opt.threads);
    cmd->add_option("--seed", opt.seed);
}

int run_field_table(int p, int m, const std::string& g, const Options& opt) {
    std::optional<gf::ModPoly> modulus;
    if (!g.empty()) modulus = parse_poly(g);
    gf::Field f(p, m, modulus);
    auto rows = f.table();
    if (opt.format == "json") {
        json out;
        out["p"] = p;
        out["m"] = m;
        out["q"] = f.q();
        out["modulus"] = f.modulus();
        out["rows"] = json::array();
        for (const auto& r : rows)
            out["rows"].push_back({{"power", r.power},
                                   {"polynomial", r.polynomial},
                                   {"tuple", r.tuple},
                                   {"index", r.canonical_index}});
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("GF(%d), modulus coefficients (low to high):", f.q());
        for (int c : f.modulus()) std::printf(" %d", c);
        std::printf("\n%-6s %-12s %-10s %s\n", "power", "polynomial", "tuple", "index");
        for (const auto& r : rows) {
            std::string tup;
            for (int c : r.tuple) tup += std::to_string(c);
            std::printf("%-6s %-12s %-10s %d\n", r.power.c_str(), r.polynomial.c_str(),
                        tup.c_str(), r.canonical_index);
        }
    }
    return 0;
}

int run_ring_table(int m, const Options& opt) {
    gring::Ring r(m);
    json rows = json::array();
    for (int y = 0; y < r.size(); ++y) {
        gring::TwoAdicForm f = r.two_adic_decompose(y);
        rows.push_back({{"element", y},
                        {"coeffs", r.coeffs_of(y)},
                        {"a", f.a},
                        {"b", f.b},
                        {"gtrace", r.gtrace(y)},
                        {"char", complex_json(chars::ring_additive_char(r, 1, y))},
                        {"unit", r.is_unit(y)}});
    }
    if (opt.format == "json") {
        json out{{"m", m}, {"size", r.size()}, {"modulus", r.modulus()},
                 {"teichmuller", r.teichmuller()}, {"rows", rows}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("R_{4^%d}, %d elements\n", m, r.size());
        std::printf("%-8s %-6s %-6s %-7s %s\n", "element", "a", "b", "gtrace", "char");
        for (const auto& row : rows)
            std::printf("%-8d %-6d %-6d %-7d [%s, %s]\n", row["element"].get<int>(),
                        row["a"].get<int>(), row["b"].get<int>(), row["gtrace"].get<int>(),
                        fmt12(row["char"][0].get<double>()).c_str(),
                        fmt12(row["char"][1].get<double>()).c_str());
    }
    return 0;
}

int run_mub_verify(int odd_q, int even_m, int k, const Options& opt) {
    mub::BasisSet set;
    std::string kind;
    if (odd_q > 0) {
        gf::Field f = field_from_q(odd_q);
        set = mub::mub_odd(f, k);
        kind = "odd q=" + std::to_string(odd_q);
    } else {
        gring::Ring r(even_m);
        set = mub::mub_even(r, k);
        kind = "even m=" + std::to_string(even_m);
    }
    mub::UnbiasednessReport rep = mub::verify_unbiasedness(set, opt.tol);
    if (opt.format == "json") {
        json out{{"kind", kind},
                 {"dim", set.dim},
                 {"bases", set.bases.size()},
                 {"max_ortho_deviation", sig12(rep.max_ortho_deviation)},
                 {"max_abs_deviation", sig12(rep.max_abs_deviation)},
                 {"tolerance", sig12(rep.tolerance)},
                 {"pass", rep.pass}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("mub %s: %zu bases of dimension %d\n", kind.c_str(), set.bases.size(),
                    set.dim);
        std::printf("max ortho deviation %s\nmax unbiasedness deviation %s\nresult: %s\n",
                    fmt12(rep.max_ortho_deviation).c_str(), fmt12(rep.max_abs_deviation).c_str(),
                    rep.pass ? "pass" : "fail");
    }
    return rep.pass ? 0 : 1;
}

int run_code_distance(int n, int q, const std::string& g, const Options& opt) {
    gf::Field f = field_from_q(q);
    codes::LinearCode code = codes::cyclic_code(n, f, parse_poly(g));
    codes::DistanceReport rep = codes::min_distance(code);
    std::string note;
    if (n == 7 && q == 2 && code.k == 4 && rep.d_min == 3)
        note = "the [7,4] code has d=3, not d=4; it is not MDS";
    if (opt.format == "json") {
        json out{{"n", code.n},       {"k", code.k},
                 {"g", code.g},       {"d_min", rep.d_min},
                 {"correct_up_to", rep.correct_up_to},
                 {"detect_up_to", rep.detect_up_to},
                 {"singleton_gap", rep.singleton_gap},
                 {"is_mds", rep.is_mds}};
        if (!note.empty()) out["note"] = note;
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("[%d,%d] cyclic code over GF(%d)\n", code.n, code.k, q);
        std::printf("d_min %d, corrects %d, detects %d, singleton gap %d, mds %s\n", rep.d_min,
                    rep.correct_up_to, rep.detect_up_to, rep.singleton_gap,
                    rep.is_mds ? "yes" : "no");
        if (!note.empty()) std::printf("note: %s\n", note.c_str());
    }
    return 0;
}

int run_pg_build(int dim, int q, const Options& opt) {
    gf::Field f = field_from_q(q);
    pg::ProjectiveSpace s(dim, f);
    if (opt.format == "json") {
        json out{{"delta", dim}, {"q", q}, {"points", s.num_points()}, {"lines", s.num_lines()}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("PG(%d,%d): %d points, %d lines\n", dim, q, s.num_points(), s.num_lines());
    }
    return 0;
}

int run_pg_arcs(int dim, int q, const std::string& mode, const Options& opt) {
    gf::Field f = field_from_q(q);
    pg::ProjectiveSpace s(dim, f);
    pg::ArcSearchResult res = pg::arc_search(
        s, mode == "greedy" ? pg::SearchMode::greedy : pg::SearchMode::exhaustive);
    pg::ArcCertificate cert = pg::is_arc(s, res.points);
    json out{{"delta", dim}, {"q", q},     {"mode", mode},
             {"size", res.size}, {"points", res.points},
             {"certified_maximum", res.certified_maximum}, {"is_arc", cert.ok}};
    if (!cert.ok) out["violation"] = cert.violation;
    if (dim == 2 && cert.ok) {
        pg::TangentProfile prof = pg::tangent_profile(s, res.points);
        out["tangent_counts"] = prof.counts;
        out["is_oval"] = prof.is_oval;
        out["is_hyperoval"] = prof.is_hyperoval;
    }
    if (opt.format == "json") {
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("PG(%d,%d) %s search: size %d, points", dim, q, mode.c_str(), res.size);
        for (int p : res.points) std::printf(" %d", p);
        std::printf("\n");
        if (out.contains("is_oval"))
            std::printf("oval %s, hyperoval %s\n", out["is_oval"].get<bool>() ? "yes" : "no",
                        out["is_hyperoval"].get<bool>() ? "yes" : "no");
    }
    return cert.ok ? 0 : 1;
}

int run_pg_incidence(int q, const Options& opt) {
    gf::Field f = field_from_q(q);
    pg::ProjectiveSpace s(2, f);
    auto mat = pg::incidence_matrix(s);
    codes::PlaneAxiomReport rep = codes::plane_axioms_check(mat);
    if (opt.format == "json") {
        json out{{"q", q}, {"matrix", mat},       {"axioms_pass", rep.pass},
                 {"order", rep.order}, {"line_size", rep.line_size}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        for (const auto& row : mat) {
            std::string line;
            for (int v : row) line += v ? '1' : '0';
            std::printf("%s\n", line.c_str());
        }
        std::printf("axioms %s, order %d\n", rep.pass ? "pass" : "fail", rep.order);
    }
    return rep.pass ? 0 : 1;
}

int run_lock_sweep(int qmax, double beta, const Options& opt) {
    auto rows = phase::lock_sweep(qmax, beta);
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"q", r.q},
                           {"expectation_closed_form", sig12(r.expectation_closed_form)},
                           {"expectation_spectral", sig12(r.expectation_spectral)},
                           {"mangoldt_reference", sig12(r.mangoldt_reference)}});
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("q,expectation_closed_form,expectation_spectral,mangoldt_reference\n");
        for (const auto& r : rows)
            std::printf("%d,%s,%s,%s\n", r.q, fmt12(r.expectation_closed_form).c_str(),
                        fmt12(r.expectation_spectral).c_str(),
                        fmt12(r.mangoldt_reference).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational algebra toolkit: fields, rings, characters, MUBs, codes, geometries"};
    app.require_subcommand(1);

    Options opt;
    int p = 2, m = 1, q = 2, n = 7, dim = 2, a = 0, b = 0, h = 0, k = 0;
    int odd_q = 0, even_m = 0, qmax = 50;
    double beta = 1.0;
    std::string g, mode = "exhaustive";
    (void)a; (void)b; (void)h;

    CLI::App* field = app.add_subcommand("field", "finite field operations");
    CLI::App* field_table = field->add_subcommand("table", "element table of GF(p^m)");
    field_table->add_option("--p", p)->required();
    field_table->add_option("--m", m)->required();
    field_table->add_option("--g", g);
    add_common(field_table, opt);

    CLI::App* ring = app.add_subcommand("ring", "Galois ring operations");
    CLI::App* ring_table = ring->add_subcommand("table", "element table of R_{4^m}");
    ring_table->add_option("--m", m)->required();
    add_common(ring_table, opt);

    CLI::App* mubc = app.add_subcommand("mub", "mutually unbiased bases");
    CLI::App* mub_verify = mubc->add_subcommand("verify", "construct and verify a complete set");
    mub_verify->add_option("--odd-q,--q", odd_q);
    mub_verify->add_option("--even-m", even_m);
    mub_verify->add_option("--k", k);
    add_common(mub_verify, opt);

    CLI::App* code = app.add_subcommand("code", "cyclic codes");
    CLI::App* code_distance = code->add_subcommand("distance", "exhaustive minimum distance");
    code_distance->add_option("--n", n)->required();
    code_distance->add_option("--q", q)->required();
    code_distance->add_option("--g", g)->required();
    add_common(code_distance, opt);

    CLI::App* pgc = app.add_subcommand("pg", "projective geometries");
    CLI::App* pg_build = pgc->add_subcommand("build", "construct PG(delta,q)");
    pg_build->add_option("--dim", dim);
    pg_build->add_option("--q", q)->required();
    add_common(pg_build, opt);
    CLI::App* pg_arcs = pgc->add_subcommand("arcs", "maximum arc / cap search");
    pg_arcs->add_option("--dim", dim);
    pg_arcs->add_option("--q", q)->required();
    pg_arcs->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "greedy"}));
    add_common(pg_arcs, opt);
    CLI::App* pg_incidence = pgc->add_subcommand("incidence", "lines-by-points incidence matrix");
    pg_incidence->add_option("--q", q)->required();
    add_common(pg_incidence, opt);

    CLI::App* phasec = app.add_subcommand("phase", "phase operators");
    CLI::App* lock_sweep = phasec->add_subcommand("lock-sweep", "expectation sweep over q");
    lock_sweep->add_option("--qmax", qmax);
    lock_sweep->add_option("--beta", beta);
    add_common(lock_sweep, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (field_table->parsed()) return run_field_table(p, m, g, opt);
        if (ring_table->parsed()) return run_ring_table(m, opt);
        if (mub_verify->parsed()) {
            if ((odd_q > 0) == (even_m > 0))
                throw CLI::ValidationError("mub verify", "give exactly one of --odd-q, --even-m");
            return run_mub_verify(odd_q, even_m, k, opt);
        }
        if (code_distance->parsed()) return run_code_distance(n, q, g, opt);
        if (pg_build->parsed()) return run_pg_build(dim, q, opt);
        if (pg_arcs->parsed()) return run_pg_arcs(dim, q, mode, opt);
        if (pg_incidence->parsed()) return run_pg_incidence(q, opt);
        if (lock_sweep->parsed()) return run_lock_sweep(qmax, beta, opt);
    } catch (const CLI::Error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
