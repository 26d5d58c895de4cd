#include <doctest.h>

#include <vklab/braid.hpp>
#include <vklab/errors.hpp>
#include <vklab/monodromy.hpp>
#include <vklab/presentation.hpp>
#include <vklab/vankampen.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace vklab;
using Side = HalfTwistPath::Side;

#ifndef VKLAB_DATA_DIR
#error "VKLAB_DATA_DIR must point at the example data directory"
#endif

namespace {
const std::string kData = VKLAB_DATA_DIR;

AbelianInvariants abel(const GroupPresentation& p) { return abelianization(p); }

// The quotient by the squares of all generators: a finite hands-on invariant
// for comparing two presentations of the same group.
GroupPresentation with_squares(GroupPresentation p) {
  for (int g = 1; g <= p.generators; ++g)
    p.add_relator(FreeWord::generator(p.generators, g).power(2));
  return p;
}

}  // namespace

TEST_CASE("conjugated generator pairs satisfy the defining exchange") {
  std::vector<HalfTwistPath> samples = {
      HalfTwistPath(4, 1, 2, {}),
      HalfTwistPath(4, 1, 3, {Side::below}),
      HalfTwistPath(4, 1, 3, {Side::above}),
      HalfTwistPath(6, 2, 5, {Side::below, Side::above}),
      HalfTwistPath(6, 1, 6, {Side::above, Side::above, Side::below, Side::below}),
  };
  for (const HalfTwistPath& p : samples) {
    auto [A, B] = conjugated_pair(p);
    BraidWord H = halftwist_to_word(p);
    CHECK(apply_braid(H, A) == B);
    CHECK(apply_braid(H, B) == B * A * B.inverse());
  }
  auto [A, B] = conjugated_pair(HalfTwistPath(3, 1, 2, {}));
  CHECK(A == FreeWord::generator(3, 1));
  CHECK(B == FreeWord::generator(3, 2));
}

TEST_CASE("shortcut relators for the three local models") {
  // m = 1: the two sheets are identified
  GroupPresentation p1 = affine_presentation(local_model(1), VkMode::shortcut);
  CHECK(p1.generators == 2);
  REQUIRE(p1.relators.size() == 1);
  CHECK(p1.relators[0].cyclically_reduced() ==
        FreeWord::parse("x1 x2^-1", 2).cyclically_reduced());

  // m = 2: the generators commute
  GroupPresentation p2 = affine_presentation(local_model(2), VkMode::shortcut);
  REQUIRE(p2.relators.size() == 1);
  FreeWord comm = FreeWord::parse("x1 x2 x1^-1 x2^-1", 2);
  CHECK((p2.relators[0] == comm || p2.relators[0] == comm.inverse()));

  // m = 3: the braid relation
  GroupPresentation p3 = affine_presentation(local_model(3), VkMode::shortcut);
  REQUIRE(p3.relators.size() == 1);
  FreeWord braid = FreeWord::parse("x1 x2 x1 x2^-1 x1^-1 x2^-1", 2);
  CHECK((p3.relators[0] == braid || p3.relators[0] == braid.inverse()));
}

TEST_CASE("full and shortcut relators present the same group") {
  // the two modes give different relator sets; the groups must agree, which
  // we check on the strongest invariant available here
  for (int m = 1; m <= 3; ++m) {
    GroupPresentation full = affine_presentation(local_model(m), VkMode::full);
    GroupPresentation cut = affine_presentation(local_model(m), VkMode::shortcut);
    CHECK(abel(full) == abel(cut));
    // identical finite quotients by the sheet transpositions
    CosetTable tf = todd_coxeter(with_squares(full), {}, 64);
    CosetTable tc = todd_coxeter(with_squares(cut), {}, 64);
    REQUIRE(tf.complete);
    REQUIRE(tc.complete);
    CHECK(tf.index() == tc.index());
  }

  Factorization cubic = read_bmf_file(kData + "/cubic_surface.bmf");
  GroupPresentation full = affine_presentation(cubic, VkMode::full);
  GroupPresentation cut = affine_presentation(cubic, VkMode::shortcut);
  CHECK(abel(full) == abel(cut));
  CHECK(abel(full).str() == "Z");
}

TEST_CASE("word-form factors fall back to full relators with a note") {
  Factorization f;
  f.strands = 3;
  f.factors.emplace_back(SingKind::branch, 1, BraidWord::parse("s2 s1 s2^-1", 3));
  std::vector<std::string> warnings;
  GroupPresentation p = affine_presentation(f, VkMode::shortcut, &warnings);
  CHECK(p.generators == 3);
  CHECK_FALSE(warnings.empty());
  GroupPresentation q = affine_presentation(f, VkMode::full);
  CHECK(abel(p) == abel(q));
}

TEST_CASE("projective closure adds the product-of-generators relator") {
  Factorization conic;
  conic.strands = 2;
  conic.factors.emplace_back(SingKind::branch, 1, HalfTwistPath(2, 1, 2, {}));
  conic.factors.emplace_back(SingKind::branch, 1, HalfTwistPath(2, 1, 2, {}));

  GroupPresentation affine = affine_presentation(conic, VkMode::shortcut);
  CHECK(abel(affine).str() == "Z");

  GroupPresentation proj = projective_presentation(affine, conic);
  CHECK(proj.relators.size() == affine.relators.size() + 1);
  CHECK(proj.relators.back() == FreeWord::parse("x2 x1", 2));
  CHECK(abel(proj).str() == "Z/2");

  // a factorization whose product is not the full twist is refused
  GroupPresentation local = affine_presentation(local_model(3), VkMode::shortcut);
  CHECK_THROWS_AS(projective_presentation(local, local_model(3)), Refusal);
}

TEST_CASE("gp files round-trip") {
  GroupPresentation p;
  p.generators = 2;
  p.default_labels();
  p.add_relator(FreeWord::parse("x1 x2 x1 x2^-1 x1^-1 x2^-1", 2));

  std::ostringstream out;
  write_gp(out, p);
  std::istringstream in(out.str());
  GroupPresentation q = read_gp(in);
  CHECK(q.generators == 2);
  CHECK((q.labels == std::vector<std::string>{"G1", "G2"}));
  REQUIRE(q.relators.size() == 1);
  CHECK(q.relators[0] == p.relators[0]);

  std::istringstream bad("generators 2\nrel x3\n");
  CHECK_THROWS_AS(read_gp(bad), ParseError);
  std::istringstream nogen("rel x1\n");
  CHECK_THROWS_AS(read_gp(nogen), ParseError);
}
