#include <doctest.h>

#include "support.hpp"

using namespace preproj;
using namespace testing_support;

namespace {

const RationalDomain Q = RationalDomain::rationals();

struct Fixture {
  DoubledQuiver dq{builtin_dynkin("D4")};
  const AlphabetPtr& A = dq.alphabet();
  PolyQ e(int label) const { return PolyQ::vertex(A, Q, *A->vertex_index(label)); }
  PolyQ p(std::string_view s) const { return parse_poly(s, A); }
};

}  // namespace

TEST_CASE("idempotents and composable products") {
  Fixture f;
  CHECK(f.e(1) * f.e(1) == f.e(1));
  CHECK((f.e(1) * f.e(2)).is_zero());
  PolyQ aa = f.p("a") * f.p("a*");
  REQUIRE(aa.size() == 1);
  CHECK(format_path(*f.A, aa.lead().m) == "a*a*");
  CHECK(path_source(*f.A, aa.lead().m) == *f.A->vertex_index(1));
  CHECK(is_cycle(*f.A, aa.lead().m));
  CHECK((f.p("a") * f.p("b")).is_zero());
}

// (1+x)(1-x+x^2-x^3) = 1 - x^4
TEST_CASE("telescoping product") {
  Fixture f;
  PolyQ one = PolyQ::one(f.A, Q);
  PolyQ alpha = f.p("a* * a");
  PolyQ lhs = (one + alpha) * (one - alpha + alpha.pow(2) - alpha.pow(3));
  CHECK(lhs == one - alpha.pow(4));
}

TEST_CASE("peirce pieces") {
  Fixture f;
  int v1 = *f.A->vertex_index(1), v3 = *f.A->vertex_index(3);
  PolyQ x = f.e(1) + f.p("a");
  CHECK(x.peirce(v1, v3) == f.p("a"));
  CHECK(x.peirce(v1, v1) == f.e(1));
  auto pres = additive_relations(f.dq, ScalarDomain::rationals());
  PolyQ radd = PolyQ::zero(f.A, Q);
  for (const auto& r : pres.relations) radd += r.poly;
  CHECK(radd.peirce(v3, v3) == -f.p("a* * a + b* * b + c* * c"));
}

TEST_CASE("geometric inverse") {
  Fixture f;
  PolyQ one = PolyQ::one(f.A, Q);
  CHECK(geometric_inverse(PolyQ::zero(f.A, Q), 3) == one);
  PolyQ alpha = f.p("a* * a");
  CHECK(geometric_inverse(alpha, 1) == one - alpha);
  PolyQ beta = f.p("b* * b");
  CHECK(geometric_inverse(beta, 2) == one - beta + beta.pow(2));
  CHECK_THROWS_AS(geometric_inverse(f.e(1) + alpha, 1), DomainError);
  CHECK_THROWS_AS(geometric_inverse(f.p("a"), 1), DomainError);
  // g(x)(1+x) = 1 + (terms above the bound)
  PolyQ gamma = f.p("c* * c");
  for (int b = 0; b <= 5; ++b) {
    PolyQ prod = geometric_inverse(gamma, b) * (one + gamma);
    CHECK(prod.truncated(2 * b + 1) == one);
  }
}

TEST_CASE("parser examples") {
  Fixture f;
  PolyQ x = f.p("1/2*a*a* - e_3");
  CHECK(x.size() == 2);
  CHECK(x.coefficient(f.p("a*a*").lead().m) == mpq_class(1, 2));
  CHECK_THROWS_WITH_AS(f.p("a*b"), doctest::Contains("non-composable"), ParseError);
  PolyQ sq = f.p("(1+a**a)^2");
  PolyQ al = f.p("a* * a");
  CHECK(sq == PolyQ::one(f.A, Q) + al.scaled(2) + al * al);
  // dX is an alternate spelling of X*.
  CHECK(f.p("da*a") == al);
  CHECK(f.p("4/6*a") == f.p("2/3*a"));
  CHECK(f.p("3*e_1 - e_1 - 2*e_1").is_zero());
}

TEST_CASE("parser errors carry positions") {
  Fixture f;
  try {
    f.p("a + + b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(f.p("zz"), ParseError);
  CHECK_THROWS_AS(f.p("e_9"), ParseError);
  CHECK_THROWS_AS(f.p("(a"), ParseError);
  CHECK_THROWS_AS(f.p("a^"), ParseError);
  CHECK_THROWS_AS(f.p("1/0"), ParseError);
  CHECK_THROWS_AS(f.p("a**"), ParseError);
  CHECK_THROWS_AS(f.p("a ?"), ParseError);
}

TEST_CASE("prime field conversion keeps residues canonical") {
  Fixture f;
  PolyP x = parse_poly_in(" 1/2*a - 3*b", f.A, PrimeField(5));
  CHECK(x.coefficient(f.p("a").lead().m) == 3);
  CHECK(x.coefficient(f.p("b").lead().m) == 2);
  CHECK_THROWS_AS(parse_poly_in("1/5*a", f.A, PrimeField(5)), DomainError);
  CHECK(format_poly(x) == "2*b + 3*a");
  // Z refuses fractions.
  CHECK_THROWS_AS(parse_poly_in("1/2*a", f.A, RationalDomain::integers()), DomainError);
}

TEST_CASE("mixing domains or alphabets is an error") {
  Fixture f;
  DoubledQuiver other(builtin_dynkin("D4"));
  CHECK_THROWS_AS(f.p("a") + parse_poly("a", other.alphabet()), DomainError);
  PolyQ z = convert(f.p("a"), RationalDomain::integers());
  CHECK_THROWS_AS(f.p("a") + z, DomainError);
}

TEST_CASE("format/parse round trip") {
  std::mt19937_64 rng(7);
  for (auto name : {"D4", "E6", "A3"}) {
    DoubledQuiver dq(builtin_dynkin(name));
    for (int i = 0; i < 300; ++i) {
      PolyQ x = random_poly(dq.alphabet(), rng, 6, 5);
      if (i % 3 == 0) {
        mpq_class c(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 7) + 1);
        c.canonicalize();
        x = x.scaled(c);
      }
      CHECK(parse_poly(format_poly(x), dq.alphabet()) == x);
    }
  }
}

// Randomized algebra laws. 4 alphabets x 1000 cases x 4 laws.
TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(20240611);
  std::size_t cases = 0;
  std::vector<AlphabetPtr> alphabets = {
      DoubledQuiver(builtin_dynkin("D4")).alphabet(), DoubledQuiver(builtin_dynkin("E6")).alphabet(),
      DoubledQuiver(builtin_dynkin("A3")).alphabet(), loop_alphabet({"x", "y"})};
  for (const auto& A : alphabets) {
    PolyQ one = PolyQ::one(A, Q);
    for (int i = 0; i < 1000; ++i) {
      PolyQ x = random_poly(A, rng, 4, 3), y = random_poly(A, rng, 4, 3), z = random_poly(A, rng, 4, 3);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(one * x == x);
      CHECK(x * one == x);
      // peirce(xy, i, k) = sum_j peirce(x, i, j) peirce(y, j, k)
      int n = A->num_vertices();
      int i0 = static_cast<int>(rng() % n), k0 = static_cast<int>(rng() % n);
      PolyQ sum = PolyQ::zero(A, Q);
      for (int j = 0; j < n; ++j) sum += x.peirce(i0, j) * y.peirce(j, k0);
      CHECK((x * y).peirce(i0, k0) == sum);
      PolyQ all = PolyQ::zero(A, Q);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) all += x.peirce(a, b);
      CHECK(all == x);
      cases += 4;
    }
  }
  MESSAGE("randomized cases: " << cases);
  CHECK(cases >= 16000);
}

TEST_CASE("prime field products agree with reduced rational products") {
  std::mt19937_64 rng(99);
  auto A = DoubledQuiver(builtin_dynkin("D5")).alphabet();
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField F(p);
    for (int i = 0; i < 250; ++i) {
      PolyQ x = random_poly(A, rng, 5, 3), y = random_poly(A, rng, 5, 3);
      CHECK(convert(x * y, F) == convert(x, F) * convert(y, F));
    }
  }
}
