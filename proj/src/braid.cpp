#include "vklab/braid.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "text_util.hpp"

namespace vklab {

Permutation::Permutation(int degree) {
  if (degree < 1) throw std::invalid_argument("Permutation: degree < 1");
  map_.resize(degree);
  std::iota(map_.begin(), map_.end(), 1);
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p(degree);
  if (a < 1 || a > degree || b < 1 || b > degree || a == b)
    throw std::invalid_argument("Permutation: bad transposition");
  std::swap(p.map_[a - 1], p.map_[b - 1]);
  return p;
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  Permutation p(degree);
  size_t i = 0;
  auto fail = [&] {
    throw ParseError("permutation: bad cycle notation in \"" + text + "\"");
  };
  auto skip_ws = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') fail();
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i]))) fail();
      int v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree) fail();
      cycle.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) fail();
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (p.map_[from - 1] != from) fail();  // repeated point
      p.map_[from - 1] = to;
    }
    any = true;
    skip_ws();
  }
  if (!any) fail();
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree())
    throw std::invalid_argument("Permutation: degree mismatch");
  Permutation out(degree());
  for (int i = 1; i <= degree(); ++i)
    out.map_[i - 1] = next.apply(apply(i));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (int i = 1; i <= degree(); ++i) out.map_[apply(i) - 1] = i;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) return false;
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) ++moved;
  if (moved != 2) return false;
  for (int i = 1; i <= degree(); ++i)
    if (apply(apply(i)) != i) return false;
  return true;
}

std::string Permutation::cycles() const {
  std::vector<bool> seen(degree(), false);
  std::string out;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i - 1] || apply(i) == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = apply(j);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

bool transitive_on(const std::vector<Permutation>& perms, int degree) {
  if (degree < 1) return false;
  std::vector<bool> hit(degree + 1, false);
  std::vector<int> stack = {1};
  hit[1] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Permutation& p : perms) {
      for (int w : {p.apply(v), p.inverse().apply(v)}) {
        if (!hit[w]) {
          hit[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
  }
  return count == degree;
}

namespace {

void reduce_into(std::vector<Letter>& stack, const Letter& l) {
  if (!stack.empty() && stack.back().gen == l.gen &&
      stack.back().sign == -l.sign) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands) {
  if (strands < 2) throw std::invalid_argument("BraidWord: strands < 2");
  for (const Letter& l : letters) {
    if (l.gen < 1 || l.gen > strands - 1)
      throw std::invalid_argument("BraidWord: generator index out of range");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("BraidWord: sign must be +1 or -1");
  }
  letters_.reserve(letters.size());
  for (const Letter& l : letters) reduce_into(letters_, l);
}

BraidWord BraidWord::generator(int strands, int i, int sign) {
  return BraidWord(strands, {Letter{i, sign}});
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_)
    throw std::invalid_argument("BraidWord: strand count mismatch");
  BraidWord out;
  out.strands_ = strands_;
  out.letters_ = letters_;
  out.letters_.reserve(letters_.size() + rhs.letters_.size());
  for (const Letter& l : rhs.letters_) reduce_into(out.letters_, l);
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.strands_ = strands_;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->gen, -it->sign});
  return out;
}

BraidWord BraidWord::power(int e) const {
  BraidWord out = identity(strands_);
  BraidWord base = e >= 0 ? *this : inverse();
  for (int k = 0; k < (e >= 0 ? e : -e); ++k) out = out * base;
  return out;
}

std::string BraidWord::str() const {
  return detail::print_letters(letters_, 's');
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
  return BraidWord(strands,
                   detail::parse_letters(text, 's', strands - 1, "braid"));
}

Permutation permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (const Letter& l : w.letters())
    p = p.then(Permutation::transposition(w.strands(), l.gen, l.gen + 1));
  return p;
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (const Letter& l : w.letters()) s += l.sign;
  return s;
}

BraidWord full_twist(int strands) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<size_t>(strands) * (strands - 1));
  for (int rep = 0; rep < strands; ++rep)
    for (int i = 1; i < strands; ++i) letters.push_back({i, 1});
  return BraidWord(strands, std::move(letters));
}

FreeEndomorphism artin_action(const BraidWord& w) {
  const int n = w.strands();
  std::vector<FreeWord> im;
  im.reserve(n);
  for (int j = 1; j <= n; ++j) im.push_back(FreeWord::generator(n, j));
  auto gen = [&](int j, int sign = 1) { return FreeWord::generator(n, j, sign); };
  for (const Letter& l : w.letters()) {
    const int i = l.gen;
    // Image of each current word under the action of one letter: substitute
    // the letter's generator images.
    FreeWord gi, gi1;
    if (l.sign > 0) {
      gi = gen(i + 1);
      gi1 = gen(i + 1) * gen(i) * gen(i + 1, -1);
    } else {
      gi = gen(i, -1) * gen(i + 1) * gen(i);
      gi1 = gen(i);
    }
    for (FreeWord& x : im) {
      FreeWord y = FreeWord::identity(n);
      for (const Letter& xl : x.letters()) {
        const FreeWord* rep;
        if (xl.gen == i)
          rep = &gi;
        else if (xl.gen == i + 1)
          rep = &gi1;
        else {
          y = y * FreeWord::generator(n, xl.gen, xl.sign);
          continue;
        }
        y = y * (xl.sign > 0 ? *rep : rep->inverse());
      }
      x = y;
    }
  }
  return FreeEndomorphism(std::move(im));
}

FreeWord apply_braid(const BraidWord& w, const FreeWord& x) {
  return artin_action(w).apply(x);
}

bool braids_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) return false;
  if (u == v) return true;
  return artin_action(u) == artin_action(v);
}

HalfTwistPath::HalfTwistPath(int strands, int a, int b,
                             std::vector<Side> passes)
    : strands_(strands), a_(a), b_(b), passes_(std::move(passes)) {
  if (strands < 2) throw std::invalid_argument("HalfTwistPath: strands < 2");
  if (a < 1 || b <= a || b > strands)
    throw std::invalid_argument("HalfTwistPath: need 1 <= a < b <= strands");
  if (static_cast<int>(passes_.size()) != b - a - 1)
    throw std::invalid_argument(
        "HalfTwistPath: need one side per puncture strictly between a and b");
}

std::string HalfTwistPath::str() const {
  std::string out = "H(" + std::to_string(a_) + "," + std::to_string(b_);
  if (!passes_.empty()) {
    out += ';';
    for (Side s : passes_) out += s == Side::above ? 'U' : 'D';
  }
  out += ')';
  return out;
}

HalfTwistPath HalfTwistPath::parse(const std::string& text, int strands) {
  auto fail = [&] {
    throw ParseError("half-twist path: bad syntax in \"" + text + "\"");
  };
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != 'H') fail();
  ++i;
  skip_ws();
  if (i >= text.size() || text[i] != '(') fail();
  ++i;
  auto read_int = [&]() -> int {
    skip_ws();
    if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
      fail();
    int v = 0;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return v;
  };
  int a = read_int();
  skip_ws();
  if (i >= text.size() || text[i] != ',') fail();
  ++i;
  int b = read_int();
  skip_ws();
  std::vector<HalfTwistPath::Side> passes;
  if (i < text.size() && text[i] == ';') {
    ++i;
    skip_ws();
    while (i < text.size() && (text[i] == 'U' || text[i] == 'D')) {
      passes.push_back(text[i] == 'U' ? Side::above : Side::below);
      ++i;
    }
    skip_ws();
  }
  if (i >= text.size() || text[i] != ')') fail();
  ++i;
  skip_ws();
  if (i != text.size()) fail();
  return HalfTwistPath(strands, a, b, std::move(passes));
}

BraidWord halftwist_to_word(const HalfTwistPath& p) {
  const int n = p.strands();
  std::vector<Letter> v;
  for (int k = p.b() - 1; k >= p.a() + 1; --k) {
    int sign = p.side_at(k) == HalfTwistPath::Side::below ? 1 : -1;
    v.push_back({k, sign});
  }
  std::vector<Letter> letters = v;
  letters.push_back({p.a(), 1});
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    letters.push_back({it->gen, -it->sign});
  return BraidWord(n, std::move(letters));
}

/* classify_pair embeds both paths as polylines over punctures 1..n placed on
 * a horizontal axis.  An arc from a to b runs through the point above or
 * below each intermediate puncture k at height 1 + min(k-a-1, b-k-1), so
 * strictly nested arcs on the same side never touch.  Depths are scaled by
 * 65 for the lexicographically smaller path and 64 for the other, which
 * breaks ties between translates of the same shape (true geometric crossings
 * survive, spurious tangencies do not).  Crossings are counted exactly with
 * integer orientation tests; contacts at shared endpoint punctures are not
 * crossings. */
namespace {

struct Pt {
  int64_t x, y;
};

int64_t orient(Pt a, Pt b, Pt c) {
  int64_t v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

bool on_segment(Pt a, Pt b, Pt p) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

std::vector<Pt> embed(const HalfTwistPath& p, int64_t scale) {
  std::vector<Pt> pts;
  pts.push_back({p.a(), 0});
  for (int k = p.a() + 1; k <= p.b() - 1; ++k) {
    int64_t depth = 1 + std::min(k - p.a() - 1, p.b() - k - 1);
    int64_t sgn = p.side_at(k) == HalfTwistPath::Side::above ? 1 : -1;
    pts.push_back({k, sgn * depth * scale});
  }
  pts.push_back({p.b(), 0});
  return pts;
}

std::string path_key(const HalfTwistPath& p) {
  std::string k = std::to_string(p.a()) + "," + std::to_string(p.b()) + ";";
  for (auto s : p.passes()) k += s == HalfTwistPath::Side::above ? 'U' : 'D';
  return k;
}

}  // namespace

PairClass classify_pair(const HalfTwistPath& p, const HalfTwistPath& q) {
  if (p.strands() != q.strands())
    throw std::invalid_argument("classify_pair: strand count mismatch");

  int shared = 0;
  for (int e1 : {p.a(), p.b()})
    for (int e2 : {q.a(), q.b()})
      if (e1 == e2) ++shared;

  const bool p_first = path_key(p) <= path_key(q);
  std::vector<Pt> P = embed(p, p_first ? 65 : 64);
  std::vector<Pt> Q = embed(q, p_first ? 64 : 65);

  auto is_shared_puncture = [&](Pt pt) {
    if (pt.y != 0) return false;
    for (int e1 : {p.a(), p.b()})
      for (int e2 : {q.a(), q.b()})
        if (e1 == e2 && pt.x == e1) return true;
    return false;
  };

  int crossings = 0;
  bool degenerate = false;
  for (size_t i = 0; i + 1 < P.size(); ++i) {
    for (size_t j = 0; j + 1 < Q.size(); ++j) {
      Pt a = P[i], b = P[i + 1], c = Q[j], d = Q[j + 1];
      int o1 = static_cast<int>(orient(a, b, c));
      int o2 = static_cast<int>(orient(a, b, d));
      int o3 = static_cast<int>(orient(c, d, a));
      int o4 = static_cast<int>(orient(c, d, b));
      if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        ++crossings;
        continue;
      }
      // Any touch that is not a shared endpoint puncture is degenerate.
      for (Pt e : {c, d})
        if (on_segment(a, b, e) && !is_shared_puncture(e)) degenerate = true;
      for (Pt e : {a, b})
        if (on_segment(c, d, e) && !is_shared_puncture(e)) degenerate = true;
    }
  }

  PairClass out{};
  out.crossings = crossings;
  out.shared_endpoints = shared;
  if (degenerate)
    out.kind = PairKind::other;
  else if (shared == 0 && crossings == 0)
    out.kind = PairKind::disjoint;
  else if (shared == 1 && crossings == 0)
    out.kind = PairKind::adjacent;
  else if (shared == 0 && crossings == 1)
    out.kind = PairKind::transversal;
  else
    out.kind = PairKind::other;
  return out;
}

std::string PairClass::str() const {
  switch (kind) {
    case PairKind::disjoint:
      return "disjoint";
    case PairKind::adjacent:
      return "adjacent";
    case PairKind::transversal:
      return "transversal";
    default:
      return "other(" + std::to_string(crossings) + ")";
  }
}

}  // namespace vklab
