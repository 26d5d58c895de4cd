// Generates the bundled cubic-surface example:
//
//   data/cubic_surface.bmf — braid monodromy factorization of the branch
//                            curve (a 6-cuspidal sextic) of a 3-sheeted
//                            cubic cover of the plane
//   data/cubic.gp          — projective presentation of its complement
//   data/cubic.sheets      — the covering's sheet monodromy (degree 3)
//
// The sextic is 4a^3 + 27b^2 for polynomials a (degree 2), b (degree 3):
// the discriminant locus of t^3 + a t + b, i.e. the branch curve of the
// surface {t^3 + a(x,y) t + b(x,y) = 0}.  Its singular fibers over the
// x-line are 6 cusps (where a = b = 0) and 12 vertical tangencies.  The
// factorization is obtained by numerically tracking the fiber along one
// lasso per critical value — a straight tail from a base point far below
// and left of every critical value, then once counterclockwise around an
// octagon — ordered by the angle under which the base point sees the
// critical values.  Every derived claim is certified exactly before
// anything is written:
//   * each cusp word is (base)^3 for an explicit conjugated half-twist,
//   * the product over an angle-sorted order equals the full twist,
//   * the abelianizations and the Galois invariants match the expected
//     values for a smooth cubic cover.
//
// Exit code 0 and the three files on success; 1 with a diagnostic if no
// candidate curve passes certification.

#include <vklab/braid.hpp>
#include <vklab/errors.hpp>
#include <vklab/galois.hpp>
#include <vklab/monodromy.hpp>
#include <vklab/presentation.hpp>
#include <vklab/tracker.hpp>
#include <vklab/vankampen.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace vklab;
using cplx = std::complex<double>;

namespace {

struct Lasso {
    int crit = 0;  // index into the critical set
    LoopSpec loop = LoopSpec::circle({1.0, 0.0}, {0.0, 0.0});
    cplx dir;            // unit vector from the critical value toward the base
    double angle = 0.0;  // arg(critical value - base point)
    double dist = 0.0;
};

/* One lasso per critical value: a straight tail from u0 to the boundary of
 * the disk of radius rho, once counterclockwise around an octagon, and back.
 * Returns nothing when the tail or the octagon comes too close to another
 * critical value. */
std::optional<Lasso> build_lasso(const std::vector<cplx>& crit, int j, double rho, cplx u0) {
    const cplx xj = crit[j];
    const cplx dir = (u0 - xj) / std::abs(u0 - xj);
    const double theta = std::arg(dir);

    std::vector<cplx> oct;
    for (int k = 0; k < 8; ++k) {
        double th = theta + 2 * M_PI * k / 8;
        oct.push_back(xj + rho * cplx(std::cos(th), std::sin(th)));
    }
    std::vector<cplx> v;
    v.push_back(u0);
    for (const cplx& p : oct) v.push_back(p);
    v.push_back(oct.front());  // close the octagon; the polyline closes the tail

    LoopSpec loop = LoopSpec::polyline(v);
    if (loop.distance_to(xj) < 0.85 * rho) return std::nullopt;
    for (int k = 0; k < static_cast<int>(crit.size()); ++k)
        if (k != j && loop.distance_to(crit[k]) < 1.0 * rho) return std::nullopt;
    return Lasso{j, loop, dir, std::arg(xj - u0), std::abs(xj - u0)};
}

/* Certified half-twist cube root of the tracked cusp word w.  The circle
 * around the cusp value reads s_p s_p s_p once its radius makes the two
 * colliding fiber points the only sort-adjacent movers; shrinking the circle
 * does not change its braid, so the root is the tail transport conjugate of
 * s_p.  Certified exactly against w. */
std::optional<BraidWord> cusp_base(const PlaneCurve& curve, cplx u0, cplx xj, cplx dir,
                                   double rho, const BraidWord& w) {
    for (double r = rho; r >= rho / 64.0; r /= 2.0) {
        cplx entry = xj + r * dir;
        BraidWord circ = BraidWord::identity(w.strands());
        try {
            circ = track_braid(curve, LoopSpec::circle(entry, xj));
        } catch (const TrackingError&) {
            continue;
        }
        const auto& ls = circ.letters();
        if (ls.size() != 3 || !(ls[0] == ls[1] && ls[0] == ls[2]) || ls[0].sign != 1) continue;

        BraidWord t = BraidWord::identity(w.strands());
        try {
            t = track_transport(curve, {u0, entry});
        } catch (const TrackingError&) {
            continue;
        }
        BraidWord q = t * BraidWord(w.strands(), {ls[0]}) * t.inverse();
        if (exponent_sum(q) != 1) continue;
        if (!permutation(q).is_transposition()) continue;
        if (braids_equal(q.power(3), w)) return q;
    }
    return std::nullopt;
}

struct Attempt {
    std::string reason;
};

/* Tries one candidate sextic end to end; returns the factorization and the
 * failure diagnostics otherwise. */
std::optional<Factorization> try_candidate(const std::string& text, Attempt& why) {
    PlaneCurve curve = PlaneCurve::parse(text);
    if (curve.y_degree() != 6) {
        why.reason = "y-degree is not 6";
        return std::nullopt;
    }
    CriticalSet cs = critical_x(curve);
    const std::vector<cplx>& crit = cs.roots;
    if (crit.size() != 18) {
        why.reason = "expected 18 critical values, found " + std::to_string(crit.size());
        return std::nullopt;
    }

    double sep = 1e30, lo_re = 1e30, lo_im = 1e30;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        lo_re = std::min(lo_re, crit[i].real());
        lo_im = std::min(lo_im, crit[i].imag());
        for (std::size_t k = i + 1; k < crit.size(); ++k)
            sep = std::min(sep, std::abs(crit[i] - crit[k]));
    }
    const double rho = std::min(0.18 * sep, 0.3);
    const double pad = std::max(1.0, 10 * rho);

    // A few base points below and left of everything; straight tails must
    // clear every foreign disk, which can fail for unlucky alignments.
    const std::vector<cplx> bases = {
        cplx(lo_re - pad, lo_im - pad),      cplx(lo_re - 2 * pad, lo_im - pad),
        cplx(lo_re - pad, lo_im - 3 * pad),  cplx(lo_re - 3 * pad, lo_im - 2 * pad),
        cplx(lo_re - 5 * pad, lo_im - pad),  cplx(lo_re - pad, lo_im - 5 * pad),
    };

    for (const cplx& u0 : bases) {
        std::vector<Lasso> lassos;
        bool clear = true;
        for (int j = 0; j < static_cast<int>(crit.size()) && clear; ++j) {
            auto l = build_lasso(crit, j, rho, u0);
            if (!l) {
                std::ostringstream os;
                os << "no clear lasso from base " << u0 << " for critical value " << crit[j];
                why.reason = os.str();
                clear = false;
                break;
            }
            lassos.push_back(*l);
        }
        if (!clear) continue;

        std::vector<SingularFactor> factors;
        int cusps = 0, branches = 0;
        bool tracked = true;
        for (const Lasso& l : lassos) {
            BraidWord w = BraidWord::identity(6);
            try {
                w = track_braid(curve, l.loop);
            } catch (const TrackingError& e) {
                std::ostringstream os;
                os << "tracking failed near " << e.where << ": " << e.what();
                why.reason = os.str();
                tracked = false;
                break;
            }
            long long e = exponent_sum(w);
            if (e == 1) {
                ++branches;
                factors.emplace_back(SingKind::branch, 1, w);
            } else if (e == 3) {
                auto q = cusp_base(curve, u0, crit[l.crit], l.dir, rho, w);
                if (!q) {
                    why.reason = "cusp word has no certified half-twist cube root: " + w.str();
                    tracked = false;
                    break;
                }
                ++cusps;
                factors.emplace_back(SingKind::cusp, 3, *q);
            } else {
                why.reason = "unexpected local exponent sum " + std::to_string(e);
                tracked = false;
                break;
            }
        }
        if (!tracked) continue;
        if (cusps != 6 || branches != 12) {
            why.reason = "wrong singularity counts: " + std::to_string(cusps) + " cusps, " +
                         std::to_string(branches) + " tangencies";
            continue;
        }

        // Order search over angle-sorted sequences, certified against the
        // full twist.
        std::vector<int> order(lassos.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::pair(lassos[a].angle, lassos[a].dist) <
                   std::pair(lassos[b].angle, lassos[b].dist);
        });

        std::vector<std::vector<int>> orders;
        orders.push_back(order);
        orders.emplace_back(order.rbegin(), order.rend());

        BraidWord ft = full_twist(6);
        for (const auto& ord : orders) {
            BraidWord prod = BraidWord::identity(6);
            for (int i : ord) prod = prod * factors[static_cast<std::size_t>(i)].word();
            if (!permutation(prod).is_identity()) continue;
            if (exponent_sum(prod) != exponent_sum(ft)) continue;
            if (!braids_equal(prod, ft)) continue;

            Factorization f;
            f.strands = 6;
            f.label = "cubic_surface";
            for (int i : ord) f.factors.push_back(factors[static_cast<std::size_t>(i)]);
            return f;
        }
        why.reason = "no certified factor order composes to the full twist";
    }
    return std::nullopt;
}

std::vector<Permutation> s3_transpositions() {
    return {Permutation::parse_cycles("(1 2)", 3), Permutation::parse_cycles("(1 3)", 3),
            Permutation::parse_cycles("(2 3)", 3)};
}

}  // namespace

int main() {
    // Leading candidates keep every cusp value off the real axis (for
    // b = y^3 + x^3 + c that is c > 1/4): over a real cusp value the
    // spectator fiber roots pair up with exactly equal real parts, which
    // defeats the sorted tracking of the colliding pair at every radius.
    const std::vector<std::string> candidates = {
        "4*(x - y^2)^3 + 27*(y^3 + x^3 + 1)^2",
        "4*(x - y^2)^3 + 27*(y^3 + x^3 + 2)^2",
        "4*(x - y^2)^3 + 27*(y^3 + x^3 + x + 1)^2",
        "4*(x - y^2)^3 + 27*(y^3 + x^3 - 1)^2",
        "4*(x - y^2)^3 + 27*(y^3 + x^3 - x - 1)^2",
    };

    std::optional<Factorization> best;
    std::string used_curve;
    for (const std::string& text : candidates) {
        Attempt why;
        std::cout << "candidate: " << text << "\n";
        try {
            best = try_candidate(text, why);
        } catch (const std::exception& e) {
            why.reason = e.what();
        }
        if (best) {
            used_curve = text;
            break;
        }
        std::cout << "  rejected: " << why.reason << "\n";
    }
    if (!best) {
        std::cout << "no candidate curve survived certification\n";
        return 1;
    }
    Factorization f = *best;
    std::cout << "accepted curve: " << used_curve << "\n";

    ValidationReport rep = validate(f);
    std::cout << rep.str();
    if (!rep.all_ok()) {
        std::cout << "generated factorization failed validation\n";
        return 1;
    }

    GroupPresentation pa = affine_presentation(f, VkMode::full);
    AbelianInvariants aba = abelianization(pa);
    std::cout << "affine abelianization: " << aba.str() << "\n";
    if (aba.str() != "Z") {
        std::cout << "expected affine abelianization Z\n";
        return 1;
    }

    GroupPresentation pp = projective_presentation(pa, f);
    AbelianInvariants abp = abelianization(pp);
    std::cout << "projective abelianization: " << abp.str() << "\n";
    if (abp.str() != "Z/6") {
        std::cout << "expected projective abelianization Z/6\n";
        return 1;
    }

    // Sheet assignment: the lexicographically first transitive homomorphism
    // onto transpositions of S_3.
    std::vector<Permutation> t = s3_transpositions();
    std::optional<std::vector<int>> chosen;
    int solutions = 0;
    std::vector<int> pick(6, 0);
    for (int code = 0; code < 729; ++code) {
        int c = code;
        for (int i = 0; i < 6; ++i) {
            pick[i] = c % 3;
            c /= 3;
        }
        std::vector<Permutation> images;
        for (int i = 0; i < 6; ++i) images.push_back(t[static_cast<std::size_t>(pick[i])]);
        HomCheck hc = verify_hom(pp, images);
        if (!hc.ok || !hc.transitive) continue;
        ++solutions;
        std::vector<int> key(pick.begin(), pick.end());
        if (!chosen || key < *chosen) chosen = key;
    }
    std::cout << "transitive transposition homomorphisms: " << solutions << "\n";
    if (!chosen) {
        std::cout << "no sheet assignment exists\n";
        return 1;
    }
    std::vector<Permutation> images;
    for (int i = 0; i < 6; ++i) images.push_back(t[static_cast<std::size_t>((*chosen)[i])]);

    std::filesystem::create_directories("data");

    {
        std::ofstream os("data/cubic_surface.bmf", std::ios::binary);
        os << "# branch curve of a smooth cubic 3-sheeted cover of the plane\n";
        os << "# curve: " << used_curve << "\n";
        write_bmf(os, f);
    }
    {
        std::ofstream os("data/cubic.gp", std::ios::binary);
        os << "# projective complement of the 6-cuspidal sextic branch curve\n";
        write_gp(os, pp);
    }
    {
        std::ofstream os("data/cubic.sheets", std::ios::binary);
        os << "# sheet monodromy of the 3-sheeted cubic cover\n";
        os << "degree 3\n";
        for (int i = 0; i < 6; ++i)
            os << "sheet " << pp.label(i + 1) << " " << images[static_cast<std::size_t>(i)].cycles()
               << "\n";
    }

    GroupPresentation pp_read = read_gp_file("data/cubic.gp");
    SheetAssignment sa = read_sheets_file("data/cubic.sheets", pp_read);
    sa.validate(pp_read);
    GaloisResult g = galois_group(pp_read, sa, 50000);
    std::cout << g.str();
    bool galois_ok = g.complete && g.quotient_order == 6 && g.image_order == 6 &&
                     g.kernel_order == 1 && g.kernel.generators == 0;
    if (!galois_ok) {
        std::cout << "galois invariants do not match a smooth cubic cover\n";
        return 1;
    }

    std::cout << "wrote data/cubic_surface.bmf data/cubic.gp data/cubic.sheets\n";
    std::cout << "all certifications passed\n";
    return 0;
}
