#include <doctest.h>

#include <vklab/errors.hpp>
#include <vklab/presentation.hpp>
#include <vklab/vankampen.hpp>
#include <vklab/word.hpp>

#include <string>
#include <vector>

using namespace vklab;

namespace {

GroupPresentation from_relators(int gens, const std::vector<std::string>& rels) {
  GroupPresentation p;
  p.generators = gens;
  p.default_labels();
  for (const std::string& r : rels) p.add_relator(FreeWord::parse(r, gens));
  return p;
}

// B_3 = <A, B | ABA = BAB>
GroupPresentation braid3() {
  return from_relators(2, {"x1 x2 x1 x2^-1 x1^-1 x2^-1"});
}

}  // namespace

TEST_CASE("Smith normal form on matrices with known elementary divisors") {
  using M = std::vector<std::vector<BigInt>>;

  CHECK(smith_normal_form(M{{BigInt(6)}}) == std::vector<BigInt>{BigInt(6)});
  // zero rows contribute no elementary divisors
  CHECK(smith_normal_form(M{{BigInt(0)}}).empty());

  // diag(2, 8) after column/row operations: divisors 2, 4 since det = -8
  std::vector<BigInt> d =
      smith_normal_form(M{{BigInt(2), BigInt(4)}, {BigInt(6), BigInt(8)}});
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);
  CHECK(d[0] * d[1] == 8);  // |det|

  // identity stays identity
  d = smith_normal_form(M{{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}});
  CHECK(d == std::vector<BigInt>(2, BigInt(1)));

  // a non-square example: rank 1, gcd 3
  d = smith_normal_form(M{{BigInt(3), BigInt(6), BigInt(9)}});
  REQUIRE(d.size() == 1);
  CHECK(d[0] == 3);

  // divisibility chain property on a random-ish dense matrix
  d = smith_normal_form(
      M{{BigInt(4), BigInt(7), BigInt(2)},
        {BigInt(10), BigInt(14), BigInt(6)},
        {BigInt(2), BigInt(21), BigInt(8)}});
  REQUIRE(d.size() == 3);
  for (size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] != 0 && d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
}

TEST_CASE("abelianizations of standard presentations") {
  CHECK(abelianization(from_relators(1, {})).str() == "Z");
  CHECK(abelianization(from_relators(1, {"x1^6"})).str() == "Z/6");
  CHECK(abelianization(from_relators(2, {"x1^2", "x2^3"})).str() == "Z/6");
  CHECK(abelianization(from_relators(2, {"x1^2", "x2^2"})).str() ==
        "Z/2 + Z/2");
  CHECK(abelianization(braid3()).str() == "Z");
  CHECK(abelianization(from_relators(2, {"x1", "x2"})).is_trivial());
  CHECK(abelianization(from_relators(0, {})).is_trivial());

  AbelianInvariants inv = abelianization(
      from_relators(3, {"x1 x2 x1^-1 x2^-1", "x3^4"}));
  CHECK(inv.free_rank == 2);
  REQUIRE(inv.torsion.size() == 1);
  CHECK(inv.torsion[0] == 4);
}

TEST_CASE("Tietze simplification reduces to minimal presentations") {
  // b = a eliminates b; one generator, no relators left
  GroupPresentation p = tietze_simplify(from_relators(2, {"x2 x1^-1"}));
  CHECK(p.generators == 1);
  CHECK(p.relators.empty());
  CHECK_FALSE(p.not_minimal);

  // duplicate relators up to rotation and inversion collapse
  GroupPresentation q = tietze_simplify(from_relators(
      2, {"x1 x2 x1 x2^-1 x1^-1 x2^-1", "x2 x1 x2 x1^-1 x2^-1 x1^-1"}));
  CHECK(q.relators.size() == 1);

  // the trivial word disappears
  GroupPresentation r = tietze_simplify(from_relators(1, {"x1 x1^-1"}));
  CHECK(r.relators.empty());
}

TEST_CASE("coset enumeration over finite and infinite quotients") {
  // symmetric group on three letters via its Coxeter presentation
  GroupPresentation s3 =
      from_relators(2, {"x1 x2 x1 x2^-1 x1^-1 x2^-1", "x1^2", "x2^2"});
  CosetTable t = todd_coxeter(s3, {}, 100);
  REQUIRE(t.complete);
  CHECK(t.index() == 6);
  CHECK(t.cosets() == 6);

  // the subgroup generated by one transposition has index 3
  CosetTable h = todd_coxeter(s3, {FreeWord::parse("x1", 2)}, 100);
  REQUIRE(h.complete);
  CHECK(h.index() == 3);

  // the full braid group is infinite: the bound is reached, not an error
  CosetTable inf = todd_coxeter(braid3(), {}, 10000);
  CHECK_FALSE(inf.complete);
  CHECK_THROWS_AS(inf.index(), Error);

  // trivial group
  CosetTable one = todd_coxeter(from_relators(1, {"x1"}), {}, 10);
  REQUIRE(one.complete);
  CHECK(one.index() == 1);

  // deterministic table export
  CHECK(todd_coxeter(s3, {}, 100).tsv() == t.tsv());
}

TEST_CASE("pure braid subgroup of B_3 via Reidemeister-Schreier") {
  // kernel of B_3 -> S_3: generated by the squares and one conjugate
  std::vector<FreeWord> sub = {FreeWord::parse("x1^2", 2),
                               FreeWord::parse("x2^2", 2),
                               FreeWord::parse("x2 x1^2 x2^-1", 2)};
  CosetTable t = todd_coxeter(braid3(), sub, 1000);
  REQUIRE(t.complete);
  CHECK(t.index() == 6);

  GroupPresentation p3 = reidemeister_schreier(t);
  GroupPresentation slim = tietze_simplify(p3);
  AbelianInvariants ab = abelianization(slim);
  CHECK(ab == abelianization(p3));
  CHECK(ab.free_rank == 3);  // F_2 x Z abelianizes to Z^3
  CHECK(ab.torsion.empty());
}

TEST_CASE("homomorphism verification against the symmetric group") {
  GroupPresentation b3 = braid3();
  std::vector<Permutation> good = {Permutation::transposition(3, 1, 2),
                                   Permutation::transposition(3, 2, 3)};
  HomCheck hc = verify_hom(b3, good);
  CHECK(hc.ok);
  CHECK(hc.transitive);
  CHECK(hc.bad_relator == 0);

  // both generators to the same transposition: still a homomorphism, but the
  // image fixes the third point
  std::vector<Permutation> collapsed = {Permutation::transposition(3, 1, 2),
                                        Permutation::transposition(3, 1, 2)};
  HomCheck hc2 = verify_hom(b3, collapsed);
  CHECK(hc2.ok);
  CHECK_FALSE(hc2.transitive);

  // a broken relator is reported by index
  GroupPresentation z2 = from_relators(1, {"x1^2"});
  HomCheck hc3 = verify_hom(z2, {Permutation::parse_cycles("(1 2 3)", 3)});
  CHECK_FALSE(hc3.ok);
  CHECK(hc3.bad_relator == 1);
}
