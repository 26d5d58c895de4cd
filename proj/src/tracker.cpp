#include "vklab/tracker.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "vklab/errors.hpp"

namespace vklab {

namespace {

using CD = std::complex<double>;

/* ------------------------------------------------ exact rational polys */

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly add(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

RatPoly neg(RatPoly a) {
  for (Rational& c : a) c = -c;
  return a;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

RatPoly scale(RatPoly a, const Rational& c) {
  for (Rational& v : a) v *= c;
  trim(a);
  return a;
}

RatPoly derivative(const RatPoly& a) {
  RatPoly out;
  for (size_t i = 1; i < a.size(); ++i) out.push_back(Rational(i) * a[i]);
  return out;
}

Rational eval(const RatPoly& a, const Rational& x) {
  Rational v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

CD eval_cd(const RatPoly& a, CD x) {
  CD v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * x + a[i].convert_to<double>();
  return v;
}

/* Remainder of a by b over the rationals; b nonzero. */
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  trim(a);
  while (degree(a) >= degree(b)) {
    Rational f = a.back() / b.back();
    int shift = degree(a) - degree(b);
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= f * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

RatPoly monic(RatPoly a) {
  trim(a);
  if (!a.empty()) a = scale(a, Rational(1) / a.back());
  return a;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = poly_rem(a, b);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

/* Quotient of a by b when the division is exact. */
RatPoly poly_quot(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q(a.empty() ? 0 : std::max(0, degree(a) - degree(b)) + 1,
            Rational(0));
  while (!a.empty() && degree(a) >= degree(b)) {
    Rational f = a.back() / b.back();
    int shift = degree(a) - degree(b);
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

/* res(f, g) over the rationals by the Euclidean recurrence. */
Rational resultant(RatPoly f, RatPoly g) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  Rational acc = 1;
  while (degree(g) > 0) {
    RatPoly r = poly_rem(f, g);
    if (r.empty()) return 0;
    int df = degree(f), dg = degree(g), dr = degree(r);
    Rational piece = 1;
    for (int i = 0; i < df - dr; ++i) piece *= g.back();
    if ((df * dg) % 2 != 0) piece = -piece;
    acc *= piece;
    f = std::move(g);
    g = std::move(r);
  }
  Rational c = g[0];
  for (int i = 0; i < degree(f); ++i) acc *= c;
  return acc;
}

/* Quotient of monic P by (x - t). */
RatPoly synth_div(const RatPoly& p, const Rational& t) {
  int n = degree(p);
  RatPoly q(n, Rational(0));
  q[n - 1] = p[n];
  for (int i = n - 2; i >= 0; --i) q[i] = p[i + 1] + t * q[i + 1];
  return q;
}

/* ----------------------------------------------------- expression parse */

/* Bivariate polynomial as y-power list of x-polynomials. */
using Poly2 = std::vector<RatPoly>;

void trim2(Poly2& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

Poly2 add2(const Poly2& a, const Poly2& b) {
  Poly2 out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = a[i];
    if (i < b.size()) out[i] = add(out[i], b[i]);
  }
  trim2(out);
  return out;
}

Poly2 neg2(Poly2 a) {
  for (RatPoly& c : a) c = neg(c);
  return a;
}

Poly2 mul2(const Poly2& a, const Poly2& b) {
  if (a.empty() || b.empty()) return {};
  Poly2 out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = add(out[i + j], mul(a[i], b[j]));
  trim2(out);
  return out;
}

struct ExprParser {
  const std::string& s;
  size_t i = 0;

  explicit ExprParser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool starts_atom() {
    skip();
    if (i >= s.size()) return false;
    char c = s[i];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
           c == 'x' || c == 'y' || c == '(';
  }

  Rational number() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::string intpart = s.substr(start, i - start);
    std::string fracpart;
    if (i < s.size() && s[i] == '.') {
      ++i;
      size_t fs = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      fracpart = s.substr(fs, i - fs);
    }
    if (intpart.empty() && fracpart.empty())
      throw ParseError("expected a number at position " +
                       std::to_string(start) + " in: " + s);
    Rational v(intpart.empty() ? "0" : intpart);
    if (!fracpart.empty()) {
      Rational den = 1;
      for (size_t k = 0; k < fracpart.size(); ++k) den *= 10;
      v += Rational(fracpart) / den;
    }
    if (i < s.size() && s[i] == '/') {
      size_t save = i;
      ++i;
      skip();
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        size_t ds = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          ++i;
        Rational den(s.substr(ds, i - ds));
        if (den == 0) throw ParseError("division by zero in: " + s);
        v /= den;
      } else {
        i = save;
      }
    }
    return v;
  }

  Poly2 atom() {
    skip();
    if (i >= s.size())
      throw ParseError("unexpected end of polynomial expression: " + s);
    char c = s[i];
    if (c == '(') {
      ++i;
      Poly2 e = expression();
      skip();
      if (i >= s.size() || s[i] != ')')
        throw ParseError("missing ')' in: " + s);
      ++i;
      return e;
    }
    if (c == 'x') {
      ++i;
      return Poly2{RatPoly{Rational(0), Rational(1)}};
    }
    if (c == 'y') {
      ++i;
      return Poly2{RatPoly{}, RatPoly{Rational(1)}};
    }
    return Poly2{RatPoly{number()}};
  }

  Poly2 factor() {
    Poly2 base = atom();
    skip();
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip();
      size_t ds = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      if (ds == i) throw ParseError("expected exponent after '^' in: " + s);
      int e = std::stoi(s.substr(ds, i - ds));
      Poly2 out{RatPoly{Rational(1)}};
      for (int k = 0; k < e; ++k) out = mul2(out, base);
      return out;
    }
    return base;
  }

  Poly2 term() {
    Poly2 out = factor();
    while (true) {
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        out = mul2(out, factor());
      } else if (starts_atom()) {
        out = mul2(out, factor());
      } else {
        return out;
      }
    }
  }

  Poly2 expression() {
    skip();
    bool negate = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      negate = s[i] == '-';
      ++i;
    }
    Poly2 out = term();
    if (negate) out = neg2(out);
    while (true) {
      skip();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        bool minus = s[i] == '-';
        ++i;
        Poly2 t = term();
        out = add2(out, minus ? neg2(t) : t);
      } else {
        return out;
      }
    }
  }
};

/* ------------------------------------------------------ numeric kernels */

std::vector<CD> companion_roots(std::vector<CD> coeffs) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0)
    coeffs.pop_back();
  int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return {};
  for (int k = 0; k < n; ++k) coeffs[k] /= coeffs[n];
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 1; r < n; ++r) m(r, r - 1) = 1.0;
  for (int r = 0; r < n; ++r) m(r, n - 1) = -coeffs[r];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  std::vector<CD> roots(n);
  for (int k = 0; k < n; ++k) roots[k] = solver.eigenvalues()(k);
  return roots;
}

/* Newton-polish z against the monic polynomial; returns the size of the
 * final correction as an accuracy estimate. */
double polish(const std::vector<CD>& coeffs, CD& z) {
  double last = 0.0;
  for (int it = 0; it < 50; ++it) {
    CD f = 0, fp = 0;
    for (size_t k = coeffs.size(); k-- > 0;) {
      fp = fp * z + f;
      f = f * z + coeffs[k];
    }
    if (std::abs(fp) < 1e-300) break;
    CD dz = f / fp;
    z -= dz;
    last = std::abs(dz);
    if (last <= 1e-14 * (1.0 + std::abs(z))) break;
  }
  return last;
}

bool lex_less(CD a, CD b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

/* 50-digit complex arithmetic for refining critical values: clustered roots
 * of the discriminant are too ill-conditioned for double-precision Newton,
 * and a critical value that is off by more than its stated radius silently
 * breaks every loop built around it. */
using HF = boost::multiprecision::cpp_bin_float_50;

struct HC {
  HF re, im;
};

HC hc_mul(const HC& a, const HC& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

HC hc_sub(const HC& a, const HC& b) { return {a.re - b.re, a.im - b.im}; }

HC hc_div(const HC& a, const HC& b) {
  HF n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

HF hc_abs(const HC& a) { return sqrt(a.re * a.re + a.im * a.im); }

/* Newton-refine z against the exact polynomial S; err receives the final
 * correction plus residual quotient as the accuracy estimate. */
CD refine_root(const RatPoly& S, CD z0, double& err) {
  std::vector<HC> c(S.size());
  for (size_t k = 0; k < S.size(); ++k)
    c[k] = {S[k].convert_to<HF>(), HF(0)};
  HC z{HF(z0.real()), HF(z0.imag())};
  HF last(1);
  for (int it = 0; it < 80; ++it) {
    HC f{HF(0), HF(0)}, fp{HF(0), HF(0)};
    for (size_t k = c.size(); k-- > 0;) {
      fp = hc_mul(fp, z);
      fp.re += f.re;
      fp.im += f.im;
      f = hc_mul(f, z);
      f.re += c[k].re;
      f.im += c[k].im;
    }
    if (hc_abs(fp) == 0) break;
    HC dz = hc_div(f, fp);
    z = hc_sub(z, dz);
    last = hc_abs(dz);
    if (last <= HF("1e-40") * (HF(1) + hc_abs(z))) break;
  }
  err = last.convert_to<double>();
  return {z.re.convert_to<double>(), z.im.convert_to<double>()};
}

double point_segment_distance(CD z, CD a, CD b) {
  CD ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double u = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + u * ab));
}

CD parse_complex(const std::string& tok) {
  auto fail = [&] { throw ParseError("bad complex literal: " + tok); };
  if (tok.empty()) fail();
  if (tok == "i" || tok == "+i") return {0, 1};
  if (tok == "-i") return {0, -1};
  const char* begin = tok.c_str();
  char* p = nullptr;
  double v1 = std::strtod(begin, &p);
  if (p == begin) fail();
  if (*p == '\0') return {v1, 0};
  if (*p == 'i' && *(p + 1) == '\0') return {0, v1};
  if ((*p == '+' || *p == '-') && *(p + 1) == 'i' && *(p + 2) == '\0')
    return {v1, *p == '+' ? 1.0 : -1.0};
  char* q = nullptr;
  double v2 = std::strtod(p, &q);
  if (q == p || *q != 'i' || *(q + 1) != '\0') fail();
  return {v1, v2};
}

std::string fmt_complex(CD z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) {
    if (z.imag() > 0) os << "+";
    os << z.imag() << "i";
  }
  return os.str();
}

}  // namespace

/* ------------------------------------------------------------ PlaneCurve */

PlaneCurve::PlaneCurve(std::vector<RatPoly> coeffs, std::string text)
    : coeffs_(std::move(coeffs)), text_(std::move(text)) {
  for (RatPoly& c : coeffs_) trim(c);
  trim2(coeffs_);
  if (coeffs_.size() < 2)
    throw std::invalid_argument("plane curve must have y-degree >= 1");
  const RatPoly& lead = coeffs_.back();
  if (degree(lead) != 0)
    throw std::invalid_argument(
        "plane curve must be monic in y (leading y-coefficient must be a "
        "nonzero constant)");
  Rational l = lead[0];
  if (l != 1)
    for (RatPoly& c : coeffs_) c = scale(std::move(c), Rational(1) / l);
}

PlaneCurve PlaneCurve::parse(const std::string& text) {
  ExprParser p(text);
  Poly2 poly = p.expression();
  p.skip();
  if (p.i != text.size())
    throw ParseError("trailing characters in polynomial: " + text);
  return PlaneCurve(std::move(poly), text);
}

std::vector<CD> PlaneCurve::fiber(CD x0) const {
  std::vector<CD> out(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = eval_cd(coeffs_[k], x0);
  return out;
}

/* ------------------------------------------------------------ critical_x */

std::string CriticalSet::str() const {
  std::ostringstream os;
  os << "critical values: " << roots.size() << "\n";
  for (size_t i = 0; i < roots.size(); ++i)
    os << "  " << fmt_complex(roots[i]) << " (radius " << radii[i] << ")\n";
  return os.str();
}

CriticalSet critical_x(const PlaneCurve& c) {
  const auto& pc = c.coefficients();
  const int m = c.y_degree();
  std::vector<RatPoly> py(m);
  for (int k = 1; k <= m; ++k) py[k - 1] = scale(pc[k], Rational(k));

  int dmax = 0;
  for (const RatPoly& q : pc) dmax = std::max(dmax, degree(q));
  const int D = dmax * (m - 1) + dmax * m;

  // Evaluate the y-resultant at D+1 rational points and interpolate.
  std::vector<Rational> ts, vs;
  for (int j = 0; j <= D; ++j) {
    Rational t = Rational(j) - Rational(D) / 2;
    RatPoly f(m + 1), g(m);
    for (int k = 0; k <= m; ++k)
      f[k] = k < static_cast<int>(pc.size()) ? eval(pc[k], t) : Rational(0);
    for (int k = 0; k < m; ++k) g[k] = eval(py[k], t);
    ts.push_back(t);
    vs.push_back(resultant(f, g));
  }

  RatPoly R;
  if (D == 0) {
    R = RatPoly{vs[0]};
    trim(R);
  } else {
    RatPoly P{Rational(1)};
    for (const Rational& t : ts) P = mul(P, RatPoly{-t, Rational(1)});
    for (int j = 0; j <= D; ++j) {
      RatPoly Q = synth_div(P, ts[j]);
      Rational denom = eval(Q, ts[j]);
      R = add(R, scale(Q, vs[j] / denom));
    }
  }
  if (R.empty())
    throw Error(
        "curve is not reduced: the discriminant in y vanishes identically");

  RatPoly S = monic(poly_quot(R, poly_gcd(R, derivative(R))));
  CriticalSet out;
  if (degree(S) < 1) return out;

  std::vector<CD> dc(S.size());
  for (size_t k = 0; k < S.size(); ++k) dc[k] = S[k].convert_to<double>();
  std::vector<CD> roots = companion_roots(dc);
  std::vector<double> res(roots.size());
  for (size_t k = 0; k < roots.size(); ++k) {
    polish(dc, roots[k]);
    roots[k] = refine_root(S, roots[k], res[k]);
  }

  std::vector<int> ord(roots.size());
  for (size_t k = 0; k < ord.size(); ++k) ord[k] = static_cast<int>(k);
  std::sort(ord.begin(), ord.end(),
            [&](int a, int b) { return lex_less(roots[a], roots[b]); });
  for (int k : ord) {
    double rad = std::max(4.0 * res[k], 1e-13 * (1.0 + std::abs(roots[k])));
    out.roots.push_back(roots[k]);
    out.radii.push_back(rad);
  }
  for (size_t a = 0; a < out.roots.size(); ++a)
    for (size_t b = a + 1; b < out.roots.size(); ++b)
      if (out.radii[a] + out.radii[b] >= std::abs(out.roots[a] - out.roots[b]))
        throw Error("critical values could not be isolated numerically");
  return out;
}

/* -------------------------------------------------------------- LoopSpec */

LoopSpec LoopSpec::circle(CD base, CD center) {
  if (std::abs(base - center) <= 0.0)
    throw std::invalid_argument("circle loop needs positive radius");
  LoopSpec l;
  l.kind_ = Kind::circle;
  l.base_ = base;
  l.center_ = center;
  return l;
}

LoopSpec LoopSpec::polyline(std::vector<CD> vertices) {
  if (vertices.size() >= 2 && std::abs(vertices.front() - vertices.back()) == 0)
    vertices.pop_back();
  if (vertices.size() < 3)
    throw std::invalid_argument("polyline loop needs at least 3 vertices");
  LoopSpec l;
  l.kind_ = Kind::polyline;
  l.vertices_ = std::move(vertices);
  l.base_ = l.vertices_.front();
  l.cumlen_.assign(1, 0.0);
  const size_t k = l.vertices_.size();
  for (size_t i = 0; i < k; ++i) {
    double seg = std::abs(l.vertices_[(i + 1) % k] - l.vertices_[i]);
    if (seg == 0.0)
      throw std::invalid_argument("polyline loop has a zero-length segment");
    l.cumlen_.push_back(l.cumlen_.back() + seg);
  }
  return l;
}

LoopSpec LoopSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  if (!(in >> kind)) throw ParseError("empty loop specification");
  if (kind == "circle") {
    bool have_u = false, have_r = false, have_c = false;
    CD u, cc;
    double r = 0;
    std::string tok;
    while (in >> tok) {
      if (tok.rfind("u=", 0) == 0) {
        u = parse_complex(tok.substr(2));
        have_u = true;
      } else if (tok.rfind("r=", 0) == 0) {
        CD rv = parse_complex(tok.substr(2));
        if (rv.imag() != 0 || rv.real() <= 0)
          throw ParseError("circle radius must be a positive real: " + tok);
        r = rv.real();
        have_r = true;
      } else if (tok.rfind("c=", 0) == 0) {
        cc = parse_complex(tok.substr(2));
        have_c = true;
      } else {
        throw ParseError("unknown circle parameter: " + tok);
      }
    }
    if (!have_u) throw ParseError("circle loop needs u=<base>");
    if (have_c) {
      if (have_r && std::abs(std::abs(u - cc) - r) > 1e-9 * (1.0 + r))
        throw ParseError("circle base point is not on the circle");
      return circle(u, cc);
    }
    if (!have_r) throw ParseError("circle loop needs r=<radius>");
    return circle(u, u - r);
  }
  if (kind == "poly") {
    std::vector<CD> vs;
    std::string tok;
    while (in >> tok) vs.push_back(parse_complex(tok));
    return polyline(std::move(vs));
  }
  throw ParseError("unknown loop kind: " + kind);
}

CD LoopSpec::at(double t) const {
  if (t >= 1.0) return base_;
  if (t <= 0.0) return base_;
  if (kind_ == Kind::circle) {
    double ang = 2.0 * std::numbers::pi * t;
    return center_ + (base_ - center_) * std::polar(1.0, ang);
  }
  double s = t * cumlen_.back();
  size_t i = 1;
  while (i < cumlen_.size() && cumlen_[i] < s) ++i;
  const size_t k = vertices_.size();
  CD a = vertices_[i - 1], b = vertices_[i % k];
  double u = (s - cumlen_[i - 1]) / (cumlen_[i] - cumlen_[i - 1]);
  return a + u * (b - a);
}

double LoopSpec::distance_to(CD z) const {
  if (kind_ == Kind::circle)
    return std::abs(std::abs(z - center_) - std::abs(base_ - center_));
  double best = std::abs(z - vertices_[0]);
  const size_t k = vertices_.size();
  for (size_t i = 0; i < k; ++i)
    best = std::min(best,
                    point_segment_distance(z, vertices_[i],
                                           vertices_[(i + 1) % k]));
  return best;
}

std::vector<double> LoopSpec::breakpoints() const {
  std::vector<double> out;
  if (kind_ == Kind::circle) return out;
  const double total = cumlen_.back();
  for (size_t i = 1; i + 1 < cumlen_.size(); ++i)
    out.push_back(cumlen_[i] / total);
  return out;
}

std::string LoopSpec::str() const {
  std::ostringstream os;
  if (kind_ == Kind::circle) {
    os << "circle u=" << fmt_complex(base_)
       << " r=" << std::abs(base_ - center_) << " c=" << fmt_complex(center_);
  } else {
    os << "poly";
    for (CD v : vertices_) os << ' ' << fmt_complex(v);
  }
  return os.str();
}

/* ------------------------------------------------------------ track_braid */

namespace {

std::vector<CD> solve_fiber(const PlaneCurve& c, CD x) {
  std::vector<CD> coeffs = c.fiber(x);
  std::vector<CD> roots = companion_roots(coeffs);
  for (CD& z : roots) polish(coeffs, z);
  return roots;
}

double min_gap(const std::vector<CD>& pts) {
  double g = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      g = std::min(g, std::abs(pts[i] - pts[j]));
  return g;
}

/* Output of the shared stepping loop: the emitted letters, the sorted fiber
 * at the start, its minimal gap, and the final position of every strand
 * (indexed by its start label). */
struct TrackCore {
  std::vector<Letter> letters;
  std::vector<CD> init;
  std::vector<CD> pos;
  double init_gap = 0.0;
};

/* stops: sorted parameters in (0, 1) that every step must land on (and never
 * jump across), so no polyline segment is skipped whole. */
template <class At>
TrackCore track_core(const PlaneCurve& c, const At& at,
                     const std::vector<double>& stops) {
  const int m = c.y_degree();
  TrackCore out;
  out.init = solve_fiber(c, at(0.0));
  std::sort(out.init.begin(), out.init.end(), lex_less);
  out.init_gap = min_gap(out.init);
  if (!(out.init_gap > 1e-12))
    throw TrackingError("fiber over the base point is degenerate", at(0.0));

  std::vector<CD>& pos = out.pos;       // position of the strand labelled l
  pos = out.init;
  std::vector<int> ord(m);              // label at each sorted slot
  for (int i = 0; i < m; ++i) ord[i] = i;

  std::vector<Letter>& letters = out.letters;
  double t = 0.0, h = 1.0 / 64.0;
  const double hmin = 1e-11, hmax = 1.0 / 32.0;
  size_t next_stop = 0;

  while (t < 1.0) {
    while (next_stop < stops.size() && stops[next_stop] <= t + 1e-15)
      ++next_stop;
    const double want = std::min(h, 1.0 - t);
    double step = want;
    if (next_stop < stops.size())
      step = std::min(step, stops[next_stop] - t);
    CD x = at(t + step);
    std::vector<CD> fresh = solve_fiber(c, x);

    auto reject = [&]() -> bool {
      h = step / 2.0;
      if (h < hmin)
        throw TrackingError("tracking step underflow", x);
      return true;
    };

    const double gap = min_gap(pos);
    std::vector<CD> next(m);
    std::vector<char> used(m, 0);
    bool ok = true;
    double max_move = 0.0;
    for (int l = 0; l < m && ok; ++l) {
      int best = -1;
      double bd = std::numeric_limits<double>::infinity();
      for (int j = 0; j < m; ++j) {
        double d = std::abs(fresh[j] - pos[l]);
        if (d < bd) {
          bd = d;
          best = j;
        }
      }
      if (bd >= gap / 3.0 || used[best]) {
        ok = false;
        break;
      }
      used[best] = 1;
      next[l] = fresh[best];
      max_move = std::max(max_move, bd);
    }
    if (!ok) {
      reject();
      continue;
    }
    if (min_gap(next) <= 1e-12) {
      reject();
      continue;
    }

    std::vector<int> nord(m);
    for (int i = 0; i < m; ++i) nord[i] = i;
    std::sort(nord.begin(), nord.end(),
              [&](int a, int b) { return lex_less(next[a], next[b]); });

    std::vector<Letter> emitted;
    bool admissible = true;
    for (int i = 0; i < m && admissible;) {
      if (nord[i] == ord[i]) {
        ++i;
        continue;
      }
      if (i + 1 < m && nord[i] == ord[i + 1] && nord[i + 1] == ord[i]) {
        int a = ord[i], b = ord[i + 1];
        CD d0 = pos[b] - pos[a], d1 = next[b] - next[a];
        double cross = std::imag(std::conj(d0) * d1);
        if (cross == 0.0) {
          admissible = false;
          break;
        }
        emitted.push_back({i + 1, cross > 0 ? 1 : -1});
        i += 2;
      } else {
        admissible = false;
      }
    }
    if (!admissible) {
      reject();
      continue;
    }

    letters.insert(letters.end(), emitted.begin(), emitted.end());
    pos = std::move(next);
    ord = std::move(nord);
    t += step;
    if (max_move < gap / 10.0) h = std::min(want * 1.3, hmax);
  }
  return out;
}

}  // namespace

BraidWord track_braid(const PlaneCurve& c, const LoopSpec& loop, double tol) {
  const int m = c.y_degree();
  CriticalSet crit = critical_x(c);
  for (size_t i = 0; i < crit.roots.size(); ++i)
    if (loop.distance_to(crit.roots[i]) < crit.radii[i] + tol)
      throw TrackingError("loop violates the margin around a critical value",
                          crit.roots[i]);
  if (m == 1) return BraidWord::identity(1);

  TrackCore core = track_core(c, [&loop](double t) { return loop.at(t); },
                              loop.breakpoints());
  const std::vector<CD>& init = core.init;
  const std::vector<CD>& pos = core.pos;
  const double init_gap = core.init_gap;

  // Close up: the final fiber is the initial one; read off the geometric
  // permutation and cross-check it against the recorded word.
  Permutation geo = Permutation::identity(m);
  {
    std::vector<int> target(m, -1);
    std::vector<char> used(m, 0);
    for (int l = 0; l < m; ++l) {
      int best = -1;
      double bd = std::numeric_limits<double>::infinity();
      for (int s = 0; s < m; ++s) {
        double d = std::abs(pos[l] - init[s]);
        if (d < bd) {
          bd = d;
          best = s;
        }
      }
      if (bd >= init_gap / 3.0 || used[best])
        throw TrackingError("fiber did not close up over the loop",
                            loop.base());
      used[best] = 1;
      target[l] = best;
    }
    std::vector<int> images(m);
    for (int l = 0; l < m; ++l) images[l] = target[l] + 1;
    std::vector<char> seen(m, 0);
    std::string text;
    for (int start = 0; start < m; ++start) {
      if (seen[start] || images[start] == start + 1) continue;
      text += "(";
      int cur = start;
      bool first = true;
      while (!seen[cur]) {
        seen[cur] = 1;
        text += (first ? "" : " ") + std::to_string(cur + 1);
        first = false;
        cur = images[cur] - 1;
      }
      text += ")";
    }
    if (text.empty()) text = "()";
    geo = Permutation::parse_cycles(text, m);
  }

  BraidWord word(m, std::move(core.letters));
  if (!(permutation(word) == geo))
    throw TrackingError("monodromy permutation mismatch", loop.base());
  return word;
}

BraidWord track_transport(const PlaneCurve& c, const std::vector<CD>& path,
                          double tol) {
  if (path.size() < 2)
    throw std::invalid_argument("transport path needs at least 2 vertices");
  std::vector<double> cum(1, 0.0);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    double seg = std::abs(path[i + 1] - path[i]);
    if (seg == 0.0)
      throw std::invalid_argument("transport path has a zero-length segment");
    cum.push_back(cum.back() + seg);
  }

  const int m = c.y_degree();
  CriticalSet crit = critical_x(c);
  for (size_t i = 0; i < crit.roots.size(); ++i) {
    double d = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j + 1 < path.size(); ++j)
      d = std::min(d,
                   point_segment_distance(crit.roots[i], path[j], path[j + 1]));
    if (d < crit.radii[i] + tol)
      throw TrackingError("path violates the margin around a critical value",
                          crit.roots[i]);
  }
  if (m == 1) return BraidWord::identity(1);

  auto at = [&](double t) -> CD {
    if (t <= 0.0) return path.front();
    if (t >= 1.0) return path.back();
    double s = t * cum.back();
    size_t i = 1;
    while (i + 1 < cum.size() && cum[i] < s) ++i;
    double u = (s - cum[i - 1]) / (cum[i] - cum[i - 1]);
    return path[i - 1] + u * (path[i] - path[i - 1]);
  };
  std::vector<double> stops;
  for (size_t i = 1; i + 1 < cum.size(); ++i) stops.push_back(cum[i] / cum.back());
  TrackCore core = track_core(c, at, stops);
  return BraidWord(m, std::move(core.letters));
}

}  // namespace vklab
