#include <doctest.h>

#include <vklab/errors.hpp>
#include <vklab/word.hpp>

#include <random>
#include <vector>

using namespace vklab;

namespace {

// Independent oracle: multiply two words by concatenating letter vectors and
// cancelling adjacent inverse pairs with an explicit stack, without going
// through FreeWord::operator*.
FreeWord naive_product(const FreeWord& u, const FreeWord& v) {
  std::vector<Letter> stack;
  auto push = [&](const Letter& l) {
    if (!stack.empty() && stack.back().gen == l.gen &&
        stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  };
  for (const Letter& l : u.letters()) push(l);
  for (const Letter& l : v.letters()) push(l);
  return FreeWord(u.rank(), stack);
}

FreeWord random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sgn(0, 1);
  FreeWord w = FreeWord::identity(rank);
  for (int i = 0; i < len; ++i) {
    int g = gen(rng);
    w = w * FreeWord::generator(rank, g).power(sgn(rng) ? 1 : -1);
  }
  return w;
}

}  // namespace

TEST_CASE("free words reduce, multiply, and invert") {
  FreeWord x1 = FreeWord::generator(3, 1);
  FreeWord x2 = FreeWord::generator(3, 2);

  CHECK((x1 * x1.inverse()).empty());
  CHECK(x1 * x2 != x2 * x1);
  CHECK((x1 * x2).inverse() == x2.inverse() * x1.inverse());
  CHECK(x1.power(3).length() == 3);
  CHECK(x1.power(-2) == x1.inverse() * x1.inverse());
  CHECK(x1.power(0) == FreeWord::identity(3));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    FreeWord u = random_word(rng, 3, trial % 9);
    FreeWord v = random_word(rng, 3, (trial * 5) % 11);
    CHECK(u * v == naive_product(u, v));
    CHECK((u * v) * v.inverse() == u);
    CHECK(u.inverse() * u == FreeWord::identity(3));
  }
}

TEST_CASE("word parsing and printing round-trip") {
  FreeWord w = FreeWord::parse("x1 x2^-1 x1 x1", 2);
  CHECK(w.str() == "x1 x2^-1 x1 x1");
  CHECK(FreeWord::parse(w.str(), 2) == w);
  CHECK(FreeWord::parse("1", 4) == FreeWord::identity(4));
  CHECK(FreeWord::identity(2).str() == "1");
  CHECK(FreeWord::parse("x2^3", 2) == FreeWord::generator(2, 2).power(3));
  CHECK(FreeWord::parse("x1 x1^-1", 2).empty());  // reduced on input

  CHECK_THROWS_AS(FreeWord::parse("x5", 2), ParseError);
  CHECK_THROWS_AS(FreeWord::parse("x0", 2), ParseError);
  CHECK_THROWS_AS(FreeWord::parse("y1", 2), ParseError);
  CHECK_THROWS_AS(FreeWord::parse("x1^", 2), ParseError);
}

TEST_CASE("conjugation, cyclic reduction, exponent sums") {
  FreeWord a = FreeWord::generator(2, 1);
  FreeWord b = FreeWord::generator(2, 2);

  // w^g = g^-1 w g
  CHECK(a.conjugate(b) == b.inverse() * a * b);
  CHECK(a.conjugate(b).conjugate(b.inverse()) == a);

  FreeWord w = b.inverse() * a * a * b;
  CHECK(w.cyclically_reduced() == a * a);
  CHECK(w.exponent_sum(1) == 2);
  CHECK(w.exponent_sum(2) == 0);
  CHECK((a * b.inverse() * a).exponent_sum(1) == 2);
  CHECK((a * b.inverse() * a).exponent_sum(2) == -1);
}

TEST_CASE("endomorphisms substitute and compose") {
  // phi: x1 -> x1 x2, x2 -> x2
  FreeEndomorphism phi({FreeWord::parse("x1 x2", 2), FreeWord::parse("x2", 2)});
  // psi: x1 -> x2, x2 -> x1
  FreeEndomorphism psi({FreeWord::parse("x2", 2), FreeWord::parse("x1", 2)});

  // Oracle: substitute letter by letter.
  auto substitute = [](const FreeEndomorphism& e, const FreeWord& w) {
    FreeWord out = FreeWord::identity(w.rank());
    for (const Letter& l : w.letters()) {
      FreeWord img = e.image(l.gen);
      out = out * (l.sign > 0 ? img : img.inverse());
    }
    return out;
  };

  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    FreeWord w = random_word(rng, 2, trial % 8);
    CHECK(phi.apply(w) == substitute(phi, w));
    // (phi then psi) applies phi first.
    CHECK(phi.then(psi).apply(w) == psi.apply(phi.apply(w)));
  }

  CHECK(FreeEndomorphism::identity(2).apply(FreeWord::parse("x1 x2^-1", 2)) ==
        FreeWord::parse("x1 x2^-1", 2));
  CHECK(phi.apply(FreeWord::parse("x1 x1^-1", 2)).empty());
}
