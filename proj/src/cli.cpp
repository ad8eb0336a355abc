#include "cubezero/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubezero/diamond.hpp"
#include "cubezero/oracle.hpp"
#include "cubezero/ringspec.hpp"

namespace cubezero::cli {
namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join_coords(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i].to_string();
    }
    return out;
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Holds: return "HOLDS";
        case Outcome::Fails: return "FAILS";
        default: return "UNKNOWN";
    }
}

// Short tag printed in the human report when no shortcut lemma applies.
std::string witness_tag(Verdict::Witness w) {
    switch (w) {
        case Verdict::Witness::ArtinianFiniteDim: return "Artinian";
        case Verdict::Witness::SocleCodimFinite: return "socle-codim";
        case Verdict::Witness::BadFunctional: return "badfunctional";
        case Verdict::Witness::BadFactor: return "badfactor";
        default: return "window";
    }
}

// Full witness name used in --json output.
std::string witness_name(Verdict::Witness w) {
    switch (w) {
        case Verdict::Witness::ArtinianFiniteDim: return "ArtinianFiniteDim";
        case Verdict::Witness::SocleCodimFinite: return "SocleCodimFinite";
        case Verdict::Witness::BadFunctional: return "BadFunctional";
        case Verdict::Witness::BadFactor: return "BadFactorCert";
        default: return "WindowExhausted";
    }
}

Verdict decide_file(const RingSpecFile& spec, std::size_t window) {
    if (spec.is_triple()) return decide_diamond(spec.triple());
    if (spec.is_struct()) return decide_diamond(spec.algebra());
    return decide_diamond(spec.sequence(), window);
}

int cmd_check(const std::string& path, std::size_t window, bool json, std::ostream& out) {
    RingSpecFile spec = parse_ring(read_file(path));
    Verdict v = decide_file(spec, window);
    if (json) {
        ordered_json j;
        j["verdict"] = outcome_name(v.outcome);
        j["witness"] = witness_name(v.witness);
        if (v.shortcut) j["lemma"] = *v.shortcut;
        else j["lemma"] = nullptr;
        j["window"] = window;
        j["details"] = v.detail;
        out << j.dump(2) << "\n";
    } else {
        std::string tag = v.shortcut ? *v.shortcut : witness_tag(v.witness);
        out << outcome_name(v.outcome) << " (" << tag << ")";
        if (!v.detail.empty()) out << ": " << v.detail;
        out << "\n";
    }
    switch (v.outcome) {
        case Outcome::Holds: return 0;
        case Outcome::Fails: return 1;
        default: return 2;
    }
}

int cmd_socle(const std::string& path, std::size_t window, std::ostream& out) {
    RingSpecFile spec = parse_ring(read_file(path));
    if (spec.is_hankel()) {
        FormRank r = form_rank(spec.sequence().form, window);
        out << "socle codim " << (r.finite ? "" : "at least ") << r.value << " in m\n";
        return 0;
    }
    SubspaceBasis basis = spec.is_triple() ? socle(spec.triple()).space()
                                           : algebra_socle(spec.algebra());
    out << "socle dim " << basis.dim() << " (ambient dim " << basis.ambient() << ")\n";
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        out << join_coords(basis.basis_vector(i)) << "\n";
    }
    return 0;
}

int cmd_gr(const std::string& path, std::ostream& out, std::ostream& err) {
    RingSpecFile spec = parse_ring(read_file(path));
    if (spec.is_hankel()) {
        err << "error: gr needs a finite-dimensional ring file (triple or struct)\n";
        return 3;
    }
    PresentedAlgebra a =
        spec.is_triple() ? algebra_from_triple(spec.triple()) : spec.algebra();
    GradedRing g = gr(a);
    out << serialize_triple(g.ring);
    return 0;
}

int cmd_ideals(const std::string& path, std::ostream& out, std::ostream& err) {
    RingSpecFile spec = parse_ring(read_file(path));
    if (!spec.is_triple()) {
        err << "error: ideals needs a triple ring file\n";
        return 3;
    }
    const TripleRing& s = spec.triple();
    std::vector<Ideal> ideals = enumerate_ideals(s);
    std::size_t si = 0;
    for (const Ideal& i : ideals) {
        if (is_subdirectly_irreducible(s, i)) ++si;
    }
    out << ideals.size() << " ideals, " << si << " SI\n";
    return 0;
}

Field parse_field_flag(const std::string& text) {
    if (text == "Q") {
        throw std::invalid_argument("verification by enumeration needs a finite field");
    }
    if (text.rfind("GF", 0) == 0 && text.size() > 2) {
        const std::string digits = text.substr(2);
        if (std::all_of(digits.begin(), digits.end(),
                        [](unsigned char c) { return std::isdigit(c); })) {
            return Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
        }
    }
    throw std::invalid_argument("unknown field '" + text + "' (use GF2, GF3, ...)");
}

struct VerifyFlags {
    std::string lemma;
    std::string field_text = "GF2";
    std::size_t dim_v = 2;
    std::size_t dim_w = 2;
    std::size_t dim = 3;
    bool all = false;
    std::size_t random = 0;
    std::uint64_t seed = 20240817;
    bool json = false;
};

Report run_triple_suite(const std::string& lemma, const std::vector<TripleRing>& rings) {
    Report merged;
    merged.lemma = lemma;
    for (const TripleRing& s : rings) {
        if (lemma == "squarezero" && !s.beta_is_zero()) continue;
        if (lemma == "correspondence") merged.merge(verify_correspondence(s));
        else if (lemma == "krull") merged.merge(verify_krull(s));
        else if (lemma == "colon-socle") merged.merge(verify_colon_socle(s));
        else merged.merge(verify_squarezero_length(s));
    }
    return merged;
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> kLemmas = {
        "correspondence", "krull", "colon-socle", "squarezero", "compare-vf", "finite-dual"};
    if (std::find(kLemmas.begin(), kLemmas.end(), flags.lemma) == kLemmas.end()) {
        err << "error: unknown lemma '" << flags.lemma << "'\n";
        return 3;
    }
    Field f = parse_field_flag(flags.field_text);

    Report report;
    if (flags.lemma == "finite-dual") {
        if (flags.all) {
            err << "error: finite-dual samples random functionals; use --random <count>\n";
            return 3;
        }
        std::size_t trials = flags.random ? flags.random : 100;
        report = verify_finite_dual_trivext(flags.dim_v, f, trials, flags.seed);
    } else if (flags.lemma == "compare-vf") {
        if (!flags.all) {
            err << "error: compare-vf needs --all (exhaustive structure-constant sweep)\n";
            return 3;
        }
        report.lemma = "compare-vf";
        for (std::size_t d = 1; d <= flags.dim; ++d) {
            for (const PresentedAlgebra& a : all_valid_presented(f, d)) {
                report.merge(verify_compare_vf(a));
            }
        }
    } else {
        std::vector<TripleRing> rings;
        if (flags.all) {
            if (!f.is_finite() || f.modulus() != 2) {
                err << "error: the exhaustive form sweep is GF2 only; "
                       "use --random <count> with GF3\n";
                return 3;
            }
            rings = all_symmetric_gf2_rings(flags.dim_v, flags.dim_w);
        } else if (flags.random) {
            if (!f.is_finite() || f.modulus() != 3) {
                err << "error: random ring sampling is GF3 only; use --all with GF2\n";
                return 3;
            }
            rings = sample_gf3_rings(flags.random, flags.seed);
        } else {
            err << "error: choose --all or --random <count>\n";
            return 3;
        }
        report = run_triple_suite(flags.lemma, rings);
        if (flags.random) report.notes.push_back("seed=" + std::to_string(flags.seed));
    }

    if (flags.json) {
        std::string details = report.summary();
        for (const std::string& note : report.notes) details += "; " + note;
        ordered_json j;
        j["verdict"] = report.ok() ? "PASS" : "FAIL";
        j["witness"] = nullptr;
        j["lemma"] = report.lemma;
        j["window"] = nullptr;
        j["details"] = details;
        out << j.dump(2) << "\n";
    } else {
        for (const std::string& line : report.failure_lines) out << line << "\n";
        for (const std::string& note : report.notes) out << note << "\n";
        out << report.summary() << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_hilbert_det(std::size_t n, std::ostream& out, std::ostream& err) {
    if (n == 0) {
        err << "error: hilbert-det needs n >= 1\n";
        return 3;
    }
    Field q = Field::rationals();
    Scalar formula = hilbert_det_formula(n);
    Scalar elimination = det(hankel_matrix(HankelSeq::hilbert(q), n));
    bool equal = formula == elimination;
    out << formula.to_string() << " (formula) " << (equal ? "=" : "!=") << " "
        << elimination.to_string() << " (elimination)\n";
    return equal ? 0 : 1;
}

int cmd_hankel_rank(const std::string& path, std::size_t window, std::ostream& out,
                    std::ostream& err) {
    RingSpecFile spec = parse_ring(read_file(path));
    if (!spec.is_hankel()) {
        err << "error: hankel-rank needs a hankel ring file\n";
        return 3;
    }
    FormRank r = form_rank(spec.sequence().form, window);
    out << (r.finite ? "FiniteRank " : "AtLeast ") << r.value << "\n";
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verdicts for commutative quasi-local rings with cube-zero "
                 "maximal ideal"};
    app.name("cubezero");
    app.require_subcommand(1);

    std::string check_file;
    std::size_t check_window = kDefaultWindow;
    bool check_json = false;
    CLI::App* check = app.add_subcommand(
        "check", "decide the injective-hull finiteness property for a ring file");
    check->add_option("file", check_file, "ring spec file")->required();
    check->add_option("--window", check_window, "Hankel truncation window");
    check->add_flag("--json", check_json, "machine-readable report");

    std::string socle_file;
    std::size_t socle_window = kDefaultWindow;
    CLI::App* socle_cmd =
        app.add_subcommand("socle", "print a basis of the socle (annihilator of m)");
    socle_cmd->add_option("file", socle_file, "ring spec file")->required();
    socle_cmd->add_option("--window", socle_window, "Hankel truncation window");

    std::string gr_file;
    CLI::App* gr_cmd = app.add_subcommand(
        "gr", "print the associated graded ring as a triple ring spec");
    gr_cmd->add_option("file", gr_file, "ring spec file")->required();

    std::string ideals_file;
    CLI::App* ideals_cmd =
        app.add_subcommand("ideals", "enumerate ideals of a finite triple ring");
    ideals_cmd->add_option("file", ideals_file, "ring spec file")->required();

    VerifyFlags vf;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "brute-force a structural lemma over small rings");
    verify_cmd->add_option("lemma", vf.lemma,
                           "correspondence | krull | colon-socle | squarezero | "
                           "compare-vf | finite-dual")
        ->required();
    verify_cmd->add_option("--field", vf.field_text, "GF2, GF3, ... (default GF2)");
    verify_cmd->add_option("--dimV", vf.dim_v, "max dim V (default 2)");
    verify_cmd->add_option("--dimW", vf.dim_w, "max dim W (default 2)");
    verify_cmd->add_option("--dim", vf.dim, "max algebra dim for compare-vf (default 3)");
    verify_cmd->add_flag("--all", vf.all, "exhaustive sweep");
    verify_cmd->add_option("--random", vf.random, "sample this many seeded random cases");
    verify_cmd->add_option("--seed", vf.seed, "RNG seed (default 20240817)");
    verify_cmd->add_flag("--json", vf.json, "machine-readable report");

    std::size_t det_n = 0;
    CLI::App* det_cmd = app.add_subcommand(
        "hilbert-det", "n-by-n Hilbert determinant: closed form vs elimination");
    det_cmd->add_option("n", det_n, "matrix size")->required();

    std::string rank_file;
    std::size_t rank_window = kDefaultWindow;
    CLI::App* rank_cmd = app.add_subcommand(
        "hankel-rank", "rank of the sequence's Hankel form within a window");
    rank_cmd->add_option("file", rank_file, "ring spec file")->required();
    rank_cmd->add_option("--window", rank_window, "Hankel truncation window");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 3;
    }

    try {
        if (check->parsed()) return cmd_check(check_file, check_window, check_json, out);
        if (socle_cmd->parsed()) return cmd_socle(socle_file, socle_window, out);
        if (gr_cmd->parsed()) return cmd_gr(gr_file, out, err);
        if (ideals_cmd->parsed()) return cmd_ideals(ideals_file, out, err);
        if (verify_cmd->parsed()) return cmd_verify(vf, out, err);
        if (det_cmd->parsed()) return cmd_hilbert_det(det_n, out, err);
        if (rank_cmd->parsed()) return cmd_hankel_rank(rank_file, rank_window, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "error: no command\n";
    return 3;
}

}  // namespace cubezero::cli
