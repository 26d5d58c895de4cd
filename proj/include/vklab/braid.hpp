#pragma once

#include <string>
#include <vector>

#include "vklab/word.hpp"

namespace vklab {

/* Permutation of {1..n}.  Products compose left to right: (p.then(q))(i)
 * = q(p(i)), matching the order in which braid letters act. */
class Permutation {
 public:
  explicit Permutation(int degree);
  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation transposition(int degree, int a, int b);

  /* "(1 2)(4 5)" cycle notation; "()" is the identity. */
  static Permutation parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(map_.size()); }
  int apply(int i) const { return map_[i - 1]; }
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_transposition() const;
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;  // 1-based images
};

/* Do the given permutations generate a transitive subgroup of S_n? */
bool transitive_on(const std::vector<Permutation>& perms, int degree);

/* Freely reduced word in the braid group B_strands on s1..s_{strands-1}.
 * Free reduction is the only normalization; equality in the group is
 * decided by braids_equal (the Artin action is faithful). */
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<Letter> letters);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }
  static BraidWord generator(int strands, int i, int sign = 1);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  BraidWord power(int e) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  /* Text form "s1 s2^-1"; identity prints as "1". */
  std::string str() const;
  static BraidWord parse(const std::string& text, int strands);

 private:
  int strands_ = 0;
  std::vector<Letter> letters_;
};

/* Image under B_n -> S_n, s_i -> (i i+1). */
Permutation permutation(const BraidWord& w);

/* Abelianization B_n -> Z. */
long long exponent_sum(const BraidWord& w);

/* Delta^2 = (s1 s2 ... s_{n-1})^n, the generator of the center. */
BraidWord full_twist(int strands);

/* Right action of B_n on F_n: s_i sends x_i -> x_{i+1},
 * x_{i+1} -> x_{i+1} x_i x_{i+1}^-1, fixing the rest; words act letter by
 * letter, left to right.  Faithful, so it doubles as the equality oracle. */
FreeEndomorphism artin_action(const BraidWord& w);
FreeWord apply_braid(const BraidWord& w, const FreeWord& x);

bool braids_equal(const BraidWord& u, const BraidWord& v);

/* Combinatorial encoding of a simple path between punctures a < b in the
 * disk: for each puncture strictly between them, whether the path passes
 * above or below.  H(path) is the positive half-twist along it. */
class HalfTwistPath {
 public:
  enum class Side { above, below };

  HalfTwistPath(int strands, int a, int b, std::vector<Side> passes);

  int strands() const { return strands_; }
  int a() const { return a_; }
  int b() const { return b_; }
  const std::vector<Side>& passes() const { return passes_; }
  Side side_at(int puncture) const { return passes_[puncture - a_ - 1]; }

  friend bool operator==(const HalfTwistPath&, const HalfTwistPath&) = default;

  /* Text form "H(1,4;DU)": sides listed for punctures a+1..b-1,
   * U = above, D = below.  "H(1,2)" has no side list. */
  std::string str() const;
  static HalfTwistPath parse(const std::string& text, int strands);

 private:
  int strands_;
  int a_, b_;
  std::vector<Side> passes_;
};

/* Word of the half-twist: V s_a V^-1 with V = s_{b-1}^e .. s_{a+1}^e in
 * descending index order, e = +1 where the path passes below, -1 above. */
BraidWord halftwist_to_word(const HalfTwistPath& p);

/* Mutual position of two half-twist paths in a fixed combinatorial
 * embedding (see classify_pair in braid.cpp for the embedding rule). */
enum class PairKind { disjoint, adjacent, transversal, other };

struct PairClass {
  PairKind kind;
  int crossings;          // interior crossings in the canonical embedding
  int shared_endpoints;   // common punctures among the four endpoints
  std::string str() const;
};

PairClass classify_pair(const HalfTwistPath& p, const HalfTwistPath& q);

}  // namespace vklab
