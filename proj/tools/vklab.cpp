// vklab command-line workbench.
//
// Subcommands:
//   track    — compute the braid word of a curve's fiber monodromy along a loop
//   vk       — turn a braid monodromy factorization (.bmf) into a presentation (.gp)
//   analyze  — abelianization / Tietze / coset enumeration / homomorphism checks
//   galois   — Galois-theoretic invariants of a covering given by a sheet assignment
//   btilde   — structure checks for the braid quotient action on the G_0 model
//   examples — run the bundled example pipelines end to end
//
// Exit codes: 0 ok, 1 internal error, 2 numeric tracking failure,
//             3 validation refusal / bad mathematical input, 4 parse error.

#include <CLI11.hpp>

#include <vklab/braid.hpp>
#include <vklab/btilde.hpp>
#include <vklab/errors.hpp>
#include <vklab/galois.hpp>
#include <vklab/monodromy.hpp>
#include <vklab/presentation.hpp>
#include <vklab/tracker.hpp>
#include <vklab/vankampen.hpp>
#include <vklab/word.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fs = std::filesystem;
using namespace vklab;
using Side = HalfTwistPath::Side;

namespace {

// --- small report helpers ---------------------------------------------------

std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << v;
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void digest_line(const std::string& name, const std::string& content) {
    std::cout << "input " << name << " digest: " << hex64(fnv64(content)) << "\n";
}

int default_max_cosets() {
    if (const char* env = std::getenv("VKLAB_MAX_COSETS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
            // fall through to the built-in default
        }
    }
    return 50000;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ' ';
        out += parts[i];
    }
    return out;
}

// --- track --------------------------------------------------------------------

struct TrackArgs {
    std::string curve;
    std::vector<std::string> loop_parts;
    double tol = 1e-9;
};

int run_track(const TrackArgs& a) {
    std::string loop_text = join(a.loop_parts);
    std::cout << "command: track\n";
    digest_line("curve", a.curve);
    digest_line("loop", loop_text);

    PlaneCurve curve = PlaneCurve::parse(a.curve);
    LoopSpec loop = LoopSpec::parse(loop_text);
    CriticalSet crit = critical_x(curve);
    std::cout << "curve: " << curve.text() << "\n";
    std::cout << "y-degree: " << curve.y_degree() << "\n";
    std::cout << "critical x-values: " << crit.roots.size() << "\n";

    BraidWord w = track_braid(curve, loop, a.tol);
    std::cout << "strands: " << w.strands() << "\n";
    std::cout << "word: " << w.str() << "\n";
    std::cout << "exponent sum: " << exponent_sum(w) << "\n";
    std::cout << "permutation: " << permutation(w).cycles() << "\n";
    std::cout << "status: ok\n";
    return 0;
}

// --- vk -------------------------------------------------------------------------

struct VkArgs {
    std::string bmf_path;
    std::string out_path;
    std::string mode = "shortcut";
    bool projective = false;
};

int run_vk(const VkArgs& a) {
    std::cout << "command: vk\n";
    digest_line("bmf", slurp(a.bmf_path));

    Factorization f = read_bmf_file(a.bmf_path);
    ValidationReport rep = validate(f);
    std::cout << rep.str();
    if (!rep.factors_are_halftwists) {
        std::cout << "status: refused\n";
        throw Refusal("factorization has factors that are not conjugated half-twists");
    }

    VkMode mode = (a.mode == "full") ? VkMode::full : VkMode::shortcut;
    std::vector<std::string> warnings;
    GroupPresentation p = affine_presentation(f, mode, &warnings);
    for (const std::string& w : warnings) std::cout << "note: " << w << "\n";
    if (a.projective) p = projective_presentation(p, f);

    std::cout << (a.projective ? "projective" : "affine") << " presentation ("
              << a.mode << " relators):\n";
    std::cout << p.str() << "\n";
    std::cout << "abelianization: " << abelianization(p).str() << "\n";

    std::string out = a.out_path;
    if (out.empty()) out = fs::path(a.bmf_path).stem().string() + ".gp";
    std::ofstream os(out, std::ios::binary);
    if (!os) throw Error("cannot write file: " + out);
    write_gp(os, p);
    os.close();
    std::cout << "wrote: " << out << "\n";
    std::cout << "status: ok\n";
    return 0;
}

// --- analyze ----------------------------------------------------------------------

struct AnalyzeArgs {
    std::string gp_path;
    bool abel = false;
    bool tietze = false;
    int coset = 0;  // 0 = not requested
    std::vector<std::string> subgroup;
    std::string hom_path;
};

int run_analyze(const AnalyzeArgs& a) {
    std::cout << "command: analyze\n";
    digest_line("gp", slurp(a.gp_path));

    GroupPresentation p = read_gp_file(a.gp_path);
    std::cout << "generators: " << p.generators << "\n";
    std::cout << "relators: " << p.relators.size() << "\n";

    if (a.abel || (!a.tietze && a.coset == 0 && a.hom_path.empty())) {
        std::cout << "abelianization: " << abelianization(p).str() << "\n";
    }
    if (a.tietze) {
        GroupPresentation q = tietze_simplify(p);
        std::cout << "tietze presentation: " << q.str() << "\n";
        std::cout << "tietze abelianization: " << abelianization(q).str() << "\n";
        if (q.not_minimal) std::cout << "tietze note: simplification limit reached\n";
    }
    if (a.coset > 0) {
        std::vector<FreeWord> sub;
        for (const std::string& s : a.subgroup)
            sub.push_back(FreeWord::parse(s, p.generators));
        CosetTable t = todd_coxeter(p, sub, a.coset);
        if (t.complete)
            std::cout << "cosets: " << t.index() << "\n";
        else
            std::cout << "cosets: indeterminate (bound " << a.coset << ")\n";
    }
    if (!a.hom_path.empty()) {
        SheetAssignment s = read_sheets_file(a.hom_path, p);
        HomCheck hc = verify_hom(p, s.images);
        if (hc.ok)
            std::cout << "hom check: all relators map to identity\n";
        else
            std::cout << "hom check: relator " << hc.bad_relator << " not satisfied\n";
        std::cout << "hom transitive: " << (hc.transitive ? "yes" : "no") << "\n";
    }
    std::cout << "status: ok\n";
    return 0;
}

// --- galois ---------------------------------------------------------------------

struct GaloisArgs {
    std::string gp_path;
    std::string sheets_path;
    int max_cosets = 0;
};

int run_galois(const GaloisArgs& a) {
    std::cout << "command: galois\n";
    digest_line("gp", slurp(a.gp_path));
    digest_line("sheets", slurp(a.sheets_path));

    GroupPresentation p = read_gp_file(a.gp_path);
    SheetAssignment s = read_sheets_file(a.sheets_path, p);
    s.validate(p);
    int bound = a.max_cosets > 0 ? a.max_cosets : default_max_cosets();
    GaloisResult r = galois_group(p, s, bound);
    std::cout << r.str();
    std::cout << "status: ok\n";
    return 0;
}

// --- btilde ---------------------------------------------------------------------

struct BtildeArgs {
    int n = 9;
    bool verify_action = false;
    bool quadrangle = false;
    bool series = false;
    std::vector<std::string> prime;  // g, frame index k, tau candidate
};

std::vector<std::pair<HalfTwistPath, HalfTwistPath>> default_transversal_pairs(int n) {
    std::vector<std::pair<HalfTwistPath, HalfTwistPath>> out;
    for (int i = 1; i + 3 <= n; ++i) {
        HalfTwistPath x(n, i, i + 2, {Side::below});
        HalfTwistPath y(n, i + 1, i + 3, {Side::below});
        out.emplace_back(x, y);
    }
    return out;
}

int run_btilde(const BtildeArgs& a0) {
    BtildeArgs a = a0;
    if (!a.verify_action && !a.quadrangle && !a.series && a.prime.empty())
        a.verify_action = true;

    std::cout << "command: btilde\n";
    std::cout << "model: G_0(" << a.n << "), braid strands: " << a.n << "\n";
    bool all_ok = true;

    if (a.verify_action) {
        ActionReport rep = verify_action_well_defined(a.n, default_transversal_pairs(a.n));
        std::cout << rep.str();
        all_ok = all_ok && rep.all_pass();
    }
    if (a.quadrangle) {
        for (int i = 1; i + 3 <= a.n; ++i) {
            HalfTwistPath x1(a.n, i, i + 1, {});
            HalfTwistPath x2(a.n, i + 1, i + 2, {});
            HalfTwistPath x3(a.n, i + 2, i + 3, {});
            HalfTwistPath x4(a.n, i, i + 3, {Side::below, Side::below});
            QuadrangleReport rep = quadrangle_check(x1, x2, x3, x4);
            std::cout << "quadrangle " << i << ": " << x1.str() << " " << x2.str() << " "
                      << x3.str() << " " << x4.str() << "\n";
            std::cout << rep.str();
            all_ok = all_ok && rep.all_pass();
        }
    }
    if (!a.prime.empty()) {
        if (a.prime.size() != 3)
            throw std::invalid_argument("--prime expects: <g> <frame-index> <tau-candidate>");
        G0Element g = g0_parse(a.n, a.prime[0]);
        int k = std::stoi(a.prime[1]);
        G0Element tau_c = g0_parse(a.n, a.prime[2]);
        if (k < 1 || k + 1 > a.n)
            throw std::invalid_argument("frame index out of range");
        std::vector<HalfTwistPath> consecutive;
        std::vector<HalfTwistPath> disjoint;
        for (int j = 1; j + 1 <= a.n; ++j) {
            if (j == k) continue;
            if (j == k - 1 || j == k + 1)
                consecutive.emplace_back(a.n, j, j + 1, std::vector<Side>{});
            else
                disjoint.emplace_back(a.n, j, j + 1, std::vector<Side>{});
        }
        PrimeCheckReport rep = prime_check(g, k, tau_c, consecutive, disjoint);
        std::cout << "prime element candidate: " << g.str() << " against frame " << k << "\n";
        std::cout << rep.str();
        all_ok = all_ok && rep.all_pass();
    }
    if (a.series) {
        SolvableSeriesReport rep = solvable_series_report(a.n);
        std::cout << rep.str();
        bool top_ok = a.n > 9 || rep.layers.front().verified;
        all_ok = all_ok && top_ok && rep.layers.back().verified;
    }

    std::cout << "all checks: " << (all_ok ? "PASS" : "FAIL") << "\n";
    std::cout << "status: " << (all_ok ? "ok" : "failed") << "\n";
    return all_ok ? 0 : 3;
}

// --- examples -------------------------------------------------------------------

struct ExamplesArgs {
    std::string dir = "data";
    bool run_all = false;
};

struct ExampleOutcome {
    int checks = 0;
    int failures = 0;
};

void check_line(ExampleOutcome& o, const std::string& name, bool pass,
                const std::string& detail = "") {
    ++o.checks;
    if (!pass) ++o.failures;
    std::cout << "  " << name << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
}

int run_examples(const ExamplesArgs& a) {
    std::cout << "command: examples\n";
    std::cout << "directory: " << a.dir << "\n";
    if (!fs::is_directory(a.dir)) throw Error("not a directory: " + a.dir);

    std::vector<std::string> bmfs, sheets;
    for (const auto& e : fs::directory_iterator(a.dir)) {
        if (!e.is_regular_file()) continue;
        std::string ext = e.path().extension().string();
        if (ext == ".bmf") bmfs.push_back(e.path().string());
        if (ext == ".sheets") sheets.push_back(e.path().string());
    }
    std::sort(bmfs.begin(), bmfs.end());
    std::sort(sheets.begin(), sheets.end());

    if (!a.run_all) {
        for (const auto& p : bmfs) std::cout << "example: " << p << "\n";
        for (const auto& p : sheets) std::cout << "sheet assignment: " << p << "\n";
        std::cout << "status: ok\n";
        return 0;
    }

    ExampleOutcome total;
    for (const auto& path : bmfs) {
        std::cout << "example " << fs::path(path).filename().string() << ":\n";
        Factorization f = read_bmf_file(path);
        ValidationReport rep = validate(f);
        check_line(total, "factors are conjugated half-twists", rep.factors_are_halftwists);
        if (!rep.factors_are_halftwists) continue;

        GroupPresentation pa_full = affine_presentation(f, VkMode::full);
        GroupPresentation pa_short = affine_presentation(f, VkMode::shortcut);
        AbelianInvariants ab_full = abelianization(pa_full);
        AbelianInvariants ab_short = abelianization(pa_short);
        check_line(total, "affine abelianization (full vs shortcut)",
                   ab_full.str() == ab_short.str(), ab_full.str());

        bool fulltwist = rep.product_is_full_twist;
        std::cout << "  product is full twist: " << (fulltwist ? "yes" : "no") << "\n";
        GroupPresentation use = pa_short;
        if (fulltwist) {
            GroupPresentation pp = projective_presentation(pa_short, f);
            AbelianInvariants abp = abelianization(pp);
            std::cout << "  projective abelianization: " << abp.str() << "\n";
            use = pp;
        }

        // pair a sheet assignment whose stem is a prefix of the bmf stem (or vice versa)
        std::string stem = fs::path(path).stem().string();
        for (const auto& spath : sheets) {
            std::string sstem = fs::path(spath).stem().string();
            if (stem.rfind(sstem, 0) == 0 || sstem.rfind(stem, 0) == 0) {
                SheetAssignment s = read_sheets_file(spath, use);
                s.validate(use);
                GaloisResult g = galois_group(use, s, default_max_cosets());
                std::istringstream gl(g.str());
                std::string line;
                while (std::getline(gl, line)) std::cout << "  " << line << "\n";
                check_line(total, "galois pipeline complete", g.complete);
            }
        }
    }
    std::cout << "examples checks: " << (total.checks - total.failures) << "/" << total.checks
              << " passed\n";
    std::cout << "status: " << (total.failures == 0 ? "ok" : "failed") << "\n";
    return total.failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vklab — braid monodromy and fundamental group workbench"};
    app.require_subcommand(1);

    TrackArgs ta;
    auto* track = app.add_subcommand("track", "track fiber monodromy of a plane curve");
    track->add_option("curve", ta.curve, "curve polynomial in x,y, e.g. \"y^2 - x\"")
        ->required();
    track->add_option("loop", ta.loop_parts, "loop spec, e.g. circle u=1 r=0.5 or polyline ...")
        ->required()
        ->expected(-1);
    track->add_option("--tol", ta.tol, "root isolation tolerance");

    VkArgs va;
    auto* vk = app.add_subcommand("vk", "presentation from a .bmf factorization");
    vk->add_option("bmf", va.bmf_path, "factorization file (.bmf)")->required();
    vk->add_option("-o,--out", va.out_path, "output presentation file (.gp)");
    vk->add_option("--mode", va.mode, "relator mode: shortcut | full")
        ->check(CLI::IsMember({"shortcut", "full"}));
    vk->add_flag("--projective", va.projective, "projective presentation (requires full twist)");

    AnalyzeArgs aa;
    auto* an = app.add_subcommand("analyze", "analyze a presentation (.gp)");
    an->add_option("gp", aa.gp_path, "presentation file (.gp)")->required();
    an->add_flag("--abel", aa.abel, "print abelianization");
    an->add_flag("--tietze", aa.tietze, "Tietze-simplify and print");
    an->add_option("--coset", aa.coset, "coset enumeration with this coset bound");
    an->add_option("--subgroup", aa.subgroup, "subgroup generator words for coset enumeration");
    an->add_option("--hom", aa.hom_path, "check a sheet-assignment homomorphism");

    GaloisArgs ga;
    auto* gal = app.add_subcommand("galois", "Galois analysis of a covering");
    gal->add_option("gp", ga.gp_path, "presentation file (.gp)")->required();
    gal->add_option("sheets", ga.sheets_path, "sheet assignment file (.sheets)")->required();
    gal->add_option("--max", ga.max_cosets, "coset bound (default VKLAB_MAX_COSETS or 50000)");

    BtildeArgs ba;
    auto* bt = app.add_subcommand("btilde", "braid quotient / G_0 model checks");
    bt->add_option("--n", ba.n, "number of strands (default 9)")->check(CLI::Range(3, 64));
    bt->add_flag("--verify-action", ba.verify_action, "verify the action is well defined");
    bt->add_flag("--quadrangle", ba.quadrangle, "run quadrangle relation checks");
    bt->add_flag("--series", ba.series, "print the solvable-by-symmetric layer report");
    bt->add_option("--prime", ba.prime, "prime check: <g> <frame-index> <tau-candidate>")
        ->expected(3);

    ExamplesArgs ea;
    auto* ex = app.add_subcommand("examples", "run bundled examples");
    ex->add_option("--dir", ea.dir, "examples directory (default data)");
    ex->add_flag("--run-all", ea.run_all, "run every example pipeline");

    CLI11_PARSE(app, argc, argv);

    try {
        if (track->parsed()) return run_track(ta);
        if (vk->parsed()) return run_vk(va);
        if (an->parsed()) return run_analyze(aa);
        if (gal->parsed()) return run_galois(ga);
        if (bt->parsed()) return run_btilde(ba);
        if (ex->parsed()) return run_examples(ea);
    } catch (const ParseError& e) {
        std::cout << "parse error: " << e.what() << "\n";
        std::cout << "status: parse error\n";
        return 4;
    } catch (const TrackingError& e) {
        std::cout << "tracking failure: " << e.what() << "\n";
        std::cout << "failure point: " << e.where.real() << " + " << e.where.imag() << "i\n";
        std::cout << "status: tracking failure\n";
        return 2;
    } catch (const Refusal& e) {
        std::cout << "refused: " << e.what() << "\n";
        std::cout << "status: refused\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cout << "invalid input: " << e.what() << "\n";
        std::cout << "status: invalid input\n";
        return 3;
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        std::cout << "status: error\n";
        return 1;
    }
    return 0;
}
