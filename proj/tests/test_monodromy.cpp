#include <doctest.h>

#include <vklab/braid.hpp>
#include <vklab/errors.hpp>
#include <vklab/monodromy.hpp>

#include <sstream>
#include <string>

using namespace vklab;
using Side = HalfTwistPath::Side;

#ifndef VKLAB_DATA_DIR
#error "VKLAB_DATA_DIR must point at the example data directory"
#endif

namespace {
const std::string kData = VKLAB_DATA_DIR;
}

TEST_CASE("singular factors expose base word and power") {
  SingularFactor cusp(SingKind::cusp, 3, HalfTwistPath(4, 1, 3, {Side::below}));
  CHECK(cusp.kind() == SingKind::cusp);
  CHECK(cusp.eps() == 3);
  CHECK(cusp.has_path());
  CHECK(cusp.strands() == 4);
  CHECK(cusp.base_word() == BraidWord::parse("s2 s1 s2^-1", 4));
  CHECK(cusp.word() == cusp.base_word().power(3));

  SingularFactor wordform(SingKind::branch, 1, BraidWord::parse("s3 s2 s3^-1", 5));
  CHECK_FALSE(wordform.has_path());
  CHECK(wordform.word() == BraidWord::parse("s3 s2 s3^-1", 5));

  CHECK(std::string(kind_name(SingKind::branch)) == "branch");
  CHECK(std::string(kind_name(SingKind::node)) == "node");
  CHECK(std::string(kind_name(SingKind::cusp)) == "cusp");
}

TEST_CASE("local models of y^2 = x^m") {
  for (int m = 1; m <= 4; ++m) {
    Factorization f = local_model(m);
    CHECK(f.strands == 2);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].eps() == m);
    CHECK(f.product() == BraidWord::generator(2, 1).power(m));
  }
  CHECK(local_model(1).factors[0].kind() == SingKind::branch);
  CHECK(local_model(2).factors[0].kind() == SingKind::node);
  CHECK(local_model(3).factors[0].kind() == SingKind::cusp);
  CHECK(local_model(4).factors[0].kind() == SingKind::local_model);
  CHECK_THROWS_AS(local_model(0), std::invalid_argument);
}

TEST_CASE("validation separates full-twist factorizations from local models") {
  // two simple branch points: the branch curve of a smooth conic
  Factorization conic;
  conic.strands = 2;
  conic.label = "conic";
  conic.factors.emplace_back(SingKind::branch, 1, HalfTwistPath(2, 1, 2, {}));
  conic.factors.emplace_back(SingKind::branch, 1, HalfTwistPath(2, 1, 2, {}));
  ValidationReport good = validate(conic);
  CHECK(good.product_is_full_twist);
  CHECK(good.exponent_sum_expected == 2);
  CHECK(good.exponent_sum_actual == 2);
  CHECK(good.transitive);
  CHECK(good.factors_are_halftwists);
  CHECK(good.count_branch == 2);
  CHECK(good.all_ok());

  // a single cusp is not a full twist
  ValidationReport cusp = validate(local_model(3));
  CHECK_FALSE(cusp.product_is_full_twist);
  CHECK(cusp.exponent_sum_expected == 2);
  CHECK(cusp.exponent_sum_actual == 3);
  CHECK(cusp.count_cusp == 1);
  CHECK_FALSE(cusp.all_ok());

  // a factor that is not a conjugated half-twist is flagged
  Factorization bad;
  bad.strands = 3;
  bad.factors.emplace_back(SingKind::branch, 1, BraidWord::parse("s1 s2", 3));
  ValidationReport rep = validate(bad);
  CHECK_FALSE(rep.factors_are_halftwists);
  REQUIRE(rep.bad_factors.size() == 1);
  CHECK(rep.bad_factors[0] == 1);  // positions are 1-based
}

TEST_CASE("Hurwitz moves preserve the product and the kind multiset") {
  Factorization f;
  f.strands = 3;
  f.factors.emplace_back(SingKind::branch, 1, HalfTwistPath(3, 1, 2, {}));
  f.factors.emplace_back(SingKind::cusp, 3, HalfTwistPath(3, 2, 3, {}));
  f.factors.emplace_back(SingKind::branch, 1, HalfTwistPath(3, 1, 3, {Side::below}));

  // positions are 1-based: a move at i exchanges factors i and i+1
  for (int i = 1; i < static_cast<int>(f.factors.size()); ++i) {
    Factorization g = hurwitz_move(f, i);
    CHECK(braids_equal(g.product(), f.product()));
    CHECK(g.factors[i - 1].kind() == f.factors[i].kind());
    CHECK(g.factors[i].kind() == f.factors[i - 1].kind());
    CHECK(g.factors[i - 1].eps() == f.factors[i].eps());

    Factorization h = hurwitz_move_inverse(g, i);
    CHECK(braids_equal(h.product(), f.product()));
    REQUIRE(h.factors.size() == f.factors.size());
    for (size_t k = 0; k < f.factors.size(); ++k)
      CHECK(braids_equal(h.factors[k].word(), f.factors[k].word()));
  }

  CHECK_THROWS_AS(hurwitz_move(f, 0), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_move(f, 3), std::invalid_argument);
}

TEST_CASE("bmf files round-trip and reject malformed input") {
  std::string text =
      "# three strands\n"
      "strands 3\n"
      "label demo\n"
      "factor cusp 3 path: H(1,3;D)\n"
      "factor branch 1 word: s2 s1 s2^-1\n";
  std::istringstream in(text);
  Factorization f = read_bmf(in);
  CHECK(f.strands == 3);
  CHECK(f.label == "demo");
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].has_path());
  CHECK(f.factors[0].path() == HalfTwistPath(3, 1, 3, {Side::below}));
  CHECK_FALSE(f.factors[1].has_path());

  std::ostringstream out;
  write_bmf(out, f);
  std::istringstream readback(out.str());
  Factorization g = read_bmf(readback);
  CHECK(g.strands == f.strands);
  CHECK(g.label == f.label);
  REQUIRE(g.factors.size() == f.factors.size());
  for (size_t i = 0; i < f.factors.size(); ++i) CHECK(g.factors[i] == f.factors[i]);

  auto reject = [](const std::string& s) {
    std::istringstream in(s);
    CHECK_THROWS_AS(read_bmf(in), ParseError);
  };
  reject("factor branch 1 path: H(1,2)\n");             // missing strands
  reject("strands 2\nfactor pole 1 path: H(1,2)\n");    // unknown kind
  reject("strands 2\nfactor branch 0 path: H(1,2)\n");  // eps < 1
  reject("strands 2\nfactor branch 1 H(1,2)\n");        // missing form tag
  reject("strands x\n");
}

TEST_CASE("shipped example factorizations load with the advertised shapes") {
  Factorization branch = read_bmf_file(kData + "/branch.bmf");
  CHECK(branch.factors.size() == 1);
  CHECK(branch.factors[0].kind() == SingKind::branch);

  Factorization node = read_bmf_file(kData + "/node.bmf");
  CHECK(node.factors[0].kind() == SingKind::node);
  CHECK(node.factors[0].eps() == 2);

  Factorization cusp = read_bmf_file(kData + "/cusp.bmf");
  CHECK(cusp.factors[0].kind() == SingKind::cusp);
  CHECK(cusp.factors[0].eps() == 3);

  Factorization cubic = read_bmf_file(kData + "/cubic_surface.bmf");
  CHECK(cubic.strands == 6);
  CHECK(cubic.factors.size() == 18);
  ValidationReport rep = validate(cubic);
  CHECK(rep.all_ok());
  CHECK(rep.count_cusp == 6);
  CHECK(rep.count_branch == 12);
  CHECK(rep.exponent_sum_actual == 30);
}
