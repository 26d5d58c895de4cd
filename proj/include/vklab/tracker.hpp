#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vklab/braid.hpp"

namespace vklab {

using Rational = boost::multiprecision::cpp_rational;

/* Univariate polynomial with exact rational coefficients, ascending powers. */
using RatPoly = std::vector<Rational>;

/* Plane curve p(x,y) = 0, monic in y of degree m >= 1, with exact rational
 * coefficients.  A nonzero constant leading y-coefficient is normalized
 * away on construction. */
class PlaneCurve {
 public:
  /* coeffs[k] is the x-polynomial multiplying y^k. */
  explicit PlaneCurve(std::vector<RatPoly> coeffs, std::string text = "");

  /* Expression grammar: + - * ^ ( ), implicit multiplication, integer or
   * fraction constants, variables x and y.  Examples: "y^2 - x^3",
   * "y^2 - (x-1)(x-2)(x-3)". */
  static PlaneCurve parse(const std::string& text);

  int y_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RatPoly>& coefficients() const { return coeffs_; }
  const std::string& text() const { return text_; }

  /* Coefficients (ascending, monic) of y -> p(x0, y). */
  std::vector<std::complex<double>> fiber(std::complex<double> x0) const;

 private:
  std::vector<RatPoly> coeffs_;
  std::string text_;
};

struct CriticalSet {
  std::vector<std::complex<double>> roots;  // sorted by (re, im)
  std::vector<double> radii;                // pairwise disjoint disks
  std::string str() const;
};

/* x-values with fewer than m fiber points: roots of res_y(p, dp/dy). */
CriticalSet critical_x(const PlaneCurve& c);

/* Closed loop in the x-plane with a marked base point, traversed
 * counterclockwise (circle) or in vertex order (polyline). */
class LoopSpec {
 public:
  enum class Kind { circle, polyline };

  static LoopSpec circle(std::complex<double> base,
                         std::complex<double> center);
  /* First vertex is the base point; the loop closes back to it. */
  static LoopSpec polyline(std::vector<std::complex<double>> vertices);

  /* "circle u=1 r=1 [c=0]" (default center u - r) or
   * "poly 1 1+1i -1 -1-1i"; complex literals like -0.5+0.25i. */
  static LoopSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::complex<double> base() const { return base_; }
  std::complex<double> at(double t) const;  // t in [0, 1]
  double distance_to(std::complex<double> z) const;
  /* Parameters of the polyline vertices, strictly inside (0, 1); empty for
   * circles.  Tracking must sample every one of them: a step that jumps an
   * entire segment would silently skip its monodromy. */
  std::vector<double> breakpoints() const;
  std::string str() const;

 private:
  LoopSpec() = default;
  Kind kind_ = Kind::circle;
  std::complex<double> base_{1.0, 0.0};
  std::complex<double> center_{0.0, 0.0};
  std::vector<std::complex<double>> vertices_;
  std::vector<double> cumlen_;
};

/* Braid monodromy of the curve along the loop: the fiber roots are tracked
 * adaptively, new roots matched to old by nearest neighbor only while every
 * root moved less than a third of the previous minimal root gap (the step
 * halves otherwise), and a letter s_i^{+-1} is recorded whenever the strands
 * at (re, im)-sorted positions i, i+1 exchange, positive when their relative
 * vector turns counterclockwise.  tol is the required margin between the
 * loop and every critical disk.  Throws TrackingError on margin violation,
 * step underflow, or a final permutation mismatch. */
BraidWord track_braid(const PlaneCurve& c, const LoopSpec& loop,
                      double tol = 1e-9);

/* Fiber transport along an open polyline (at least two vertices, need not
 * return to its start): the same adaptive tracking as track_braid, but with
 * no closure cross-check.  If w transports along the path and b is the
 * monodromy of a loop based at the path's endpoint, then w b w^-1 is the
 * monodromy of the conjugated loop based at the path's start. */
BraidWord track_transport(const PlaneCurve& c,
                          const std::vector<std::complex<double>>& path,
                          double tol = 1e-9);

}  // namespace vklab
