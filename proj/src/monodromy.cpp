#include "vklab/monodromy.hpp"

#include "vklab/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vklab {

std::string kind_name(SingKind k) {
  switch (k) {
    case SingKind::branch:
      return "branch";
    case SingKind::node:
      return "node";
    case SingKind::cusp:
      return "cusp";
    default:
      return "local";
  }
}

namespace {

void check_kind_eps(SingKind kind, int eps) {
  bool ok = (kind == SingKind::branch && eps == 1) ||
            (kind == SingKind::node && eps == 2) ||
            (kind == SingKind::cusp && eps == 3) ||
            (kind == SingKind::local_model && eps >= 1);
  if (!ok)
    throw std::invalid_argument("SingularFactor: eps " + std::to_string(eps) +
                                " inconsistent with kind " + kind_name(kind));
}

}  // namespace

SingularFactor::SingularFactor(SingKind kind, int eps, HalfTwistPath path)
    : kind_(kind), eps_(eps), path_(std::move(path)) {
  check_kind_eps(kind, eps);
}

SingularFactor::SingularFactor(SingKind kind, int eps,
                               BraidWord conjugated_halftwist)
    : kind_(kind), eps_(eps), word_(std::move(conjugated_halftwist)) {
  check_kind_eps(kind, eps);
}

BraidWord SingularFactor::base_word() const {
  return path_ ? halftwist_to_word(*path_) : *word_;
}

BraidWord SingularFactor::word() const { return base_word().power(eps_); }

int SingularFactor::strands() const {
  return path_ ? path_->strands() : word_->strands();
}

bool operator==(const SingularFactor& a, const SingularFactor& b) {
  return a.kind_ == b.kind_ && a.eps_ == b.eps_ && a.path_ == b.path_ &&
         a.word_ == b.word_;
}

BraidWord Factorization::product() const {
  BraidWord w = BraidWord::identity(strands);
  for (const SingularFactor& f : factors) w = w * f.word();
  return w;
}

Factorization local_model(int m) {
  if (m < 1) throw std::invalid_argument("local_model: m < 1");
  SingKind kind = m == 1   ? SingKind::branch
                  : m == 2 ? SingKind::node
                  : m == 3 ? SingKind::cusp
                           : SingKind::local_model;
  Factorization f;
  f.strands = 2;
  f.label = "y^2=x^" + std::to_string(m);
  f.factors.emplace_back(kind, m, HalfTwistPath(2, 1, 2, {}));
  return f;
}

ValidationReport validate(const Factorization& f) {
  ValidationReport r;
  r.exponent_sum_expected =
      static_cast<long long>(f.strands) * (f.strands - 1);
  std::vector<Permutation> perms;
  for (size_t i = 0; i < f.factors.size(); ++i) {
    const SingularFactor& fac = f.factors[i];
    if (fac.strands() != f.strands)
      throw std::invalid_argument("validate: factor strand count mismatch");
    switch (fac.kind()) {
      case SingKind::branch:
        ++r.count_branch;
        break;
      case SingKind::node:
        ++r.count_node;
        break;
      case SingKind::cusp:
        ++r.count_cusp;
        break;
      default:
        ++r.count_local;
    }
    BraidWord base = fac.base_word();
    r.exponent_sum_actual += static_cast<long long>(fac.eps()) *
                             exponent_sum(base);
    Permutation p = permutation(base);
    perms.push_back(p);
    if (!p.is_transposition() || exponent_sum(base) != 1) {
      r.factors_are_halftwists = false;
      r.bad_factors.push_back(static_cast<int>(i) + 1);
    }
  }
  r.transitive = transitive_on(perms, f.strands);
  r.product_is_full_twist = braids_equal(f.product(), full_twist(f.strands));
  return r;
}

bool ValidationReport::all_ok() const {
  return product_is_full_twist && transitive && factors_are_halftwists &&
         exponent_sum_actual == exponent_sum_expected;
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  os << "product == full twist: " << (product_is_full_twist ? "yes" : "no")
     << "\n";
  os << "exponent sum: " << exponent_sum_actual << " (expected "
     << exponent_sum_expected << ")\n";
  os << "transitive: " << (transitive ? "yes" : "no") << "\n";
  os << "factors: branch " << count_branch << ", node " << count_node
     << ", cusp " << count_cusp;
  if (count_local) os << ", local " << count_local;
  os << "\n";
  if (!factors_are_halftwists) {
    os << "non-half-twist factors at:";
    for (int i : bad_factors) os << ' ' << i;
    os << "\n";
  }
  return os.str();
}

namespace {

SingularFactor conjugate_factor(const SingularFactor& f, const BraidWord& c) {
  // (c^-1 Q c)^eps keeps kind and eps; the path form is lost.
  BraidWord base = c.inverse() * f.base_word() * c;
  return SingularFactor(f.kind(), f.eps(), base);
}

}  // namespace

Factorization hurwitz_move(const Factorization& f, int i) {
  if (i < 1 || i >= static_cast<int>(f.factors.size()))
    throw std::invalid_argument("hurwitz_move: position out of range");
  Factorization out = f;
  const SingularFactor& a = f.factors[i - 1];
  const SingularFactor& b = f.factors[i];
  out.factors[i - 1] = b;
  out.factors[i] = conjugate_factor(a, b.word());
  return out;
}

Factorization hurwitz_move_inverse(const Factorization& f, int i) {
  if (i < 1 || i >= static_cast<int>(f.factors.size()))
    throw std::invalid_argument("hurwitz_move: position out of range");
  Factorization out = f;
  const SingularFactor& a = f.factors[i - 1];
  const SingularFactor& b = f.factors[i];
  out.factors[i - 1] = conjugate_factor(b, a.word().inverse());
  out.factors[i] = a;
  return out;
}

Factorization read_bmf(std::istream& in) {
  Factorization f;
  bool have_strands = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    auto fail = [&](const std::string& why) {
      throw ParseError("bmf line " + std::to_string(lineno) + ": " + why);
    };
    if (key == "strands") {
      if (!(ls >> f.strands) || f.strands < 2) fail("bad strand count");
      have_strands = true;
    } else if (key == "label") {
      std::getline(ls, f.label);
      size_t s = f.label.find_first_not_of(" \t");
      f.label = s == std::string::npos ? "" : f.label.substr(s);
    } else if (key == "factor") {
      if (!have_strands) fail("factor before strands");
      std::string kind_s, form;
      int eps = 0;
      if (!(ls >> kind_s >> eps >> form)) fail("bad factor line");
      SingKind kind;
      if (kind_s == "branch")
        kind = SingKind::branch;
      else if (kind_s == "node")
        kind = SingKind::node;
      else if (kind_s == "cusp")
        kind = SingKind::cusp;
      else if (kind_s == "local")
        kind = SingKind::local_model;
      else {
        fail("unknown kind " + kind_s);
        continue;
      }
      std::string rest;
      std::getline(ls, rest);
      size_t s = rest.find_first_not_of(" \t");
      rest = s == std::string::npos ? "" : rest.substr(s);
      try {
        if (form == "path:") {
          f.factors.emplace_back(kind, eps,
                                 HalfTwistPath::parse(rest, f.strands));
        } else if (form == "word:") {
          f.factors.emplace_back(kind, eps, BraidWord::parse(rest, f.strands));
        } else {
          fail("expected path: or word:");
        }
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else {
      fail("unknown key " + key);
    }
  }
  if (!have_strands) throw ParseError("bmf: missing strands line");
  return f;
}

Factorization read_bmf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_bmf(in);
}

void write_bmf(std::ostream& out, const Factorization& f) {
  out << "strands " << f.strands << "\n";
  if (!f.label.empty()) out << "label " << f.label << "\n";
  for (const SingularFactor& fac : f.factors) {
    out << "factor " << kind_name(fac.kind()) << ' ' << fac.eps() << ' ';
    if (fac.has_path())
      out << "path: " << fac.path().str();
    else
      out << "word: " << fac.base_word().str();
    out << "\n";
  }
}

}  // namespace vklab
