#include <doctest.h>

#include <vklab/braid.hpp>
#include <vklab/errors.hpp>
#include <vklab/word.hpp>

#include <random>
#include <vector>

using namespace vklab;
using Side = HalfTwistPath::Side;

namespace {

// Independent oracle for the braid action on the free group: substitute one
// braid letter at a time using the defining rules
//   sigma_i:      x_i -> x_{i+1},  x_{i+1} -> x_{i+1} x_i x_{i+1}^-1
//   sigma_i^-1:   x_i -> x_i^-1 x_{i+1} x_i,  x_{i+1} -> x_i
// written directly on letter sequences, without FreeEndomorphism.
FreeWord naive_artin(const BraidWord& b, const FreeWord& w0) {
  FreeWord w = w0;
  for (const Letter& l : b.letters()) {
    int i = l.gen;
    FreeWord out = FreeWord::identity(w.rank());
    FreeWord xi = FreeWord::generator(w.rank(), i);
    FreeWord xj = FreeWord::generator(w.rank(), i + 1);
    for (const Letter& m : w.letters()) {
      FreeWord img;
      if (m.gen == i) {
        img = (l.sign > 0) ? xj : xi.inverse() * xj * xi;
      } else if (m.gen == i + 1) {
        img = (l.sign > 0) ? xj * xi * xj.inverse() : xi;
      } else {
        img = FreeWord::generator(w.rank(), m.gen);
      }
      out = out * (m.sign > 0 ? img : img.inverse());
    }
    w = out;
  }
  return w;
}

BraidWord random_braid(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  BraidWord w = BraidWord::identity(n);
  for (int i = 0; i < len; ++i)
    w = w * BraidWord::generator(n, gen(rng)).power(sgn(rng) ? 1 : -1);
  return w;
}

}  // namespace

TEST_CASE("permutations compose, invert, and print cycles") {
  Permutation p = Permutation::parse_cycles("(1 2 3)", 4);
  Permutation q = Permutation::parse_cycles("(3 4)", 4);

  // Oracle: compose point by point, left factor first.
  Permutation pq = p.then(q);
  for (int i = 1; i <= 4; ++i) CHECK(pq.apply(i) == q.apply(p.apply(i)));

  CHECK(p.inverse().then(p).is_identity());
  CHECK(p.cycles() == "(1 2 3)");
  CHECK(Permutation::identity(5).cycles() == "()");
  CHECK(Permutation::transposition(5, 2, 4).is_transposition());
  CHECK_FALSE(p.is_transposition());
  CHECK(Permutation::parse_cycles("(1 2)(3 4)", 4) ==
        Permutation::transposition(4, 1, 2).then(Permutation::transposition(4, 3, 4)));
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 5)", 4), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 2)(2 3)", 4), ParseError);

  // transitivity of a set of permutations
  std::vector<Permutation> gens = {Permutation::transposition(4, 1, 2),
                                   Permutation::transposition(4, 2, 3),
                                   Permutation::transposition(4, 3, 4)};
  CHECK(transitive_on(gens, 4));
  std::vector<Permutation> split = {Permutation::transposition(4, 1, 2),
                                    Permutation::transposition(4, 3, 4)};
  CHECK_FALSE(transitive_on(split, 4));
}

TEST_CASE("braid words parse, reduce, and map to permutations") {
  BraidWord w = BraidWord::parse("s1 s2^-1 s1", 4);
  CHECK(w.str() == "s1 s2^-1 s1");
  CHECK(BraidWord::parse(w.str(), 4) == w);
  CHECK(BraidWord::identity(3).str() == "1");
  CHECK(BraidWord::parse("s1 s1^-1", 3).empty());
  CHECK_THROWS_AS(BraidWord::parse("s3", 3), ParseError);  // only s1, s2 in B_3

  CHECK(exponent_sum(BraidWord::parse("s1 s2^-1 s1 s3^2", 4)) == 3);

  // permutation oracle: fold transpositions letter by letter
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    BraidWord b = random_braid(rng, 5, trial % 10);
    Permutation expect = Permutation::identity(5);
    for (const Letter& l : b.letters())
      expect = expect.then(Permutation::transposition(5, l.gen, l.gen + 1));
    CHECK(permutation(b) == expect);
  }
}

TEST_CASE("Artin action matches direct substitution and is faithful on relations") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord b = random_braid(rng, 4, trial % 7);
    for (int g = 1; g <= 4; ++g) {
      FreeWord x = FreeWord::generator(4, g);
      CHECK(apply_braid(b, x) == naive_artin(b, x));
    }
    FreeWord w = FreeWord::parse("x1 x3^-1 x2", 4);
    CHECK(apply_braid(b, w) == naive_artin(b, w));
  }

  // braid relations hold under the action, distinct generators act differently
  BraidWord s1 = BraidWord::generator(4, 1);
  BraidWord s2 = BraidWord::generator(4, 2);
  BraidWord s3 = BraidWord::generator(4, 3);
  CHECK(braids_equal(s1 * s2 * s1, s2 * s1 * s2));
  CHECK(braids_equal(s1 * s3, s3 * s1));
  CHECK_FALSE(braids_equal(s1, s2));
  CHECK_FALSE(braids_equal(s1 * s2, s2 * s1));
  CHECK(braids_equal(s1 * s1.inverse(), BraidWord::identity(4)));

  // the action preserves the descending product x4 x3 x2 x1 (the boundary
  // of the punctured disk in this convention)
  FreeWord boundary = FreeWord::parse("x4 x3 x2 x1", 4);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord b = random_braid(rng, 4, 6);
    CHECK(apply_braid(b, boundary) == boundary);
  }
}

TEST_CASE("full twist is central with the expected invariants") {
  for (int n = 2; n <= 5; ++n) {
    BraidWord d2 = full_twist(n);
    CHECK(exponent_sum(d2) == n * (n - 1));
    CHECK(permutation(d2).is_identity());
    for (int i = 1; i < n; ++i) {
      BraidWord s = BraidWord::generator(n, i);
      CHECK(braids_equal(d2 * s, s * d2));
    }
  }
  CHECK(braids_equal(full_twist(2), BraidWord::parse("s1 s1", 2)));
}

TEST_CASE("half-twist paths print, parse, and expand to conjugated generators") {
  HalfTwistPath p(6, 1, 4, {Side::below, Side::above});
  CHECK(p.str() == "H(1,4;DU)");
  CHECK(HalfTwistPath::parse(p.str(), 6) == p);
  CHECK(HalfTwistPath::parse("H(2,3)", 6).str() == "H(2,3)");
  // shape violations are constructor errors ...
  CHECK_THROWS_AS(HalfTwistPath::parse("H(1,3)", 6),
                  std::invalid_argument);  // needs one side
  CHECK_THROWS_AS(HalfTwistPath::parse("H(3,1;D)", 6),
                  std::invalid_argument);  // a < b
  CHECK_THROWS_AS(HalfTwistPath::parse("H(1,7;DDDDD)", 6),
                  std::invalid_argument);  // b within the strands
  // ... while broken syntax is a parse error
  CHECK_THROWS_AS(HalfTwistPath::parse("H[1,2]", 6), ParseError);

  CHECK(halftwist_to_word(HalfTwistPath(3, 1, 2, {})) == BraidWord::parse("s1", 3));
  CHECK(halftwist_to_word(HalfTwistPath(4, 1, 3, {Side::below})) ==
        BraidWord::parse("s2 s1 s2^-1", 4));
  CHECK(halftwist_to_word(HalfTwistPath(4, 1, 3, {Side::above})) ==
        BraidWord::parse("s2^-1 s1 s2", 4));

  // every half-twist is a conjugate of a generator: exponent sum 1 and the
  // permutation is the transposition of the endpoints
  std::vector<HalfTwistPath> samples = {
      HalfTwistPath(6, 1, 4, {Side::below, Side::above}),
      HalfTwistPath(6, 2, 6, {Side::above, Side::above, Side::below}),
      HalfTwistPath(6, 3, 5, {Side::below}),
      HalfTwistPath(5, 1, 5, {Side::above, Side::below, Side::above}),
  };
  for (const HalfTwistPath& h : samples) {
    BraidWord w = halftwist_to_word(h);
    CHECK(exponent_sum(w) == 1);
    CHECK(permutation(w) ==
          Permutation::transposition(h.strands(), h.a(), h.b()));
  }
}

TEST_CASE("pairs of half-twist paths classify by intersection pattern") {
  HalfTwistPath h12(6, 1, 2, {});
  HalfTwistPath h34(6, 3, 4, {});
  HalfTwistPath h23(6, 2, 3, {});
  HalfTwistPath h13(6, 1, 3, {Side::below});
  HalfTwistPath h24(6, 2, 4, {Side::below});

  CHECK(classify_pair(h12, h34).kind == PairKind::disjoint);
  CHECK(classify_pair(h12, h23).kind == PairKind::adjacent);
  CHECK(classify_pair(h12, h23).shared_endpoints == 1);
  CHECK(classify_pair(h13, h24).kind == PairKind::transversal);
  CHECK(classify_pair(h13, h24).crossings == 1);
  // same endpoints on both paths is neither disjoint, adjacent, nor transversal
  CHECK(classify_pair(h13, HalfTwistPath(6, 1, 3, {Side::above})).kind ==
        PairKind::other);
  // symmetric in the two arguments
  CHECK(classify_pair(h24, h13).kind == PairKind::transversal);
  CHECK(classify_pair(h23, h12).kind == PairKind::adjacent);
}
