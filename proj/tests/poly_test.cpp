#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bei/poly.hpp"

using namespace bei;

TEST_CASE("monomial arithmetic") {
  Monomial a = Monomial::var(0).mul(Monomial::var(2, 3));  // x0*x2^3
  Monomial b = Monomial::var(2).mul(Monomial::var(5));

  CHECK(a.deg == 4);
  CHECK(Monomial::one().is_one());
  CHECK(!a.is_one());

  Monomial ab = a.mul(b);
  CHECK(ab.deg == 6);
  CHECK(ab.e[2] == 4);

  CHECK(b.divides(ab));
  CHECK(!b.divides(a));
  Monomial q = ab.div(b);
  CHECK(q == a);

  Monomial l = a.lcm(b);
  CHECK(l.e[0] == 1);
  CHECK(l.e[2] == 3);
  CHECK(l.e[5] == 1);
  CHECK(l.deg == 5);

  Monomial g = a.gcd(b);
  CHECK(g.e[2] == 1);
  CHECK(g.deg == 1);

  CHECK(Monomial::var(0).coprime(Monomial::var(1)));
  CHECK(!a.coprime(b));
  CHECK(b.squarefree());
  CHECK(!a.squarefree());
}

TEST_CASE("monomial exponent overflow throws") {
  Monomial big = Monomial::var(0, 200);
  CHECK_THROWS_AS(big.mul(big), std::overflow_error);
  CHECK_NOTHROW(Monomial::var(0, 100).mul(Monomial::var(0, 100)));
}

TEST_CASE("lex vs degrevlex leading monomials of an edge binomial") {
  // n = 2: vars x1 x2 y1 y2.  The generator is x1*y2 - x2*y1.
  Monomial x1y2 = Monomial::var(0).mul(Monomial::var(3));
  Monomial x2y1 = Monomial::var(1).mul(Monomial::var(2));

  MonOrder lex{OrderKind::lex, 4, 0};
  CHECK(lex.greater(x1y2, x2y1));  // lex picks x1*y2

  MonOrder drl{OrderKind::degrevlex, 4, 0};
  CHECK(drl.greater(x2y1, x1y2));  // degrevlex picks the antidiagonal term

  // consistency of compare/less/greater
  CHECK(lex.compare(x1y2, x2y1) == 1);
  CHECK(lex.compare(x2y1, x1y2) == -1);
  CHECK(lex.compare(x1y2, x1y2) == 0);
  CHECK(drl.less(x1y2, x2y1));
}

TEST_CASE("degrevlex grades by total degree first") {
  MonOrder drl{OrderKind::degrevlex, 4, 0};
  Monomial cube = Monomial::var(3, 3);
  Monomial sq = Monomial::var(0, 2);
  CHECK(drl.greater(cube, sq));
}

TEST_CASE("elimination order puts the aux block on top") {
  // 5 vars, first one is t
  MonOrder elim{OrderKind::elim, 5, 1};
  Monomial t = Monomial::var(0);
  Monomial rest = Monomial::var(1, 4).mul(Monomial::var(4, 4));
  CHECK(elim.greater(t, rest));          // any t-multiple beats any t-free monomial
  CHECK(elim.greater(t.mul(t), t));
  Monomial a = Monomial::var(1, 2), b = Monomial::var(2, 2);
  CHECK(elim.compare(a, b) != 0);        // ties broken degrevlex on the tail
}

TEST_CASE("ring construction and variable naming") {
  Ring r = make_ring(3);
  CHECK(r.nvars == 6);
  CHECK(r.nverts() == 3);
  CHECK(r.aux == 0);
  CHECK(r.xvar(1) == 0);
  CHECK(r.xvar(3) == 2);
  CHECK(r.yvar(1) == 3);
  CHECK(r.yvar(3) == 5);
  CHECK(r.var_name(0) == "x1");
  CHECK(r.var_name(2) == "x3");
  CHECK(r.var_name(3) == "y1");
  CHECK(r.var_name(5) == "y3");
  CHECK_THROWS_AS(r.xvar(0), std::out_of_range);
  CHECK_THROWS_AS(r.yvar(4), std::out_of_range);

  CHECK_THROWS_AS(make_ring(0), std::invalid_argument);
  CHECK_THROWS_AS(make_ring(33), std::invalid_argument);  // 66 > 64 variables
  CHECK_NOTHROW(make_ring(32));
}

TEST_CASE("extending a ring with the elimination variable") {
  Ring r = make_ring(2);
  Ring s = extend_with_aux(r);
  CHECK(s.nvars == 5);
  CHECK(s.aux == 1);
  CHECK(s.ord.kind == OrderKind::elim);
  CHECK(s.ord.elim_block == 1);
  CHECK(s.var_name(0) == "t");
  CHECK(s.var_name(1) == "x1");
  CHECK(s.xvar(1) == 1);
  CHECK(s.yvar(2) == 4);
  CHECK_THROWS_AS(extend_with_aux(s), std::invalid_argument);
}

TEST_CASE("F_p field operations") {
  Fp f;  // default prime 32003
  CHECK(f.p == 32003);
  CHECK(f.add(32000, 10) == 7);
  CHECK(f.sub(3, 10) == 32003 - 7);
  CHECK(f.neg(1) == 32002);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(1000, 1000) == 1000000 % 32003);
  for (std::uint32_t a : {1u, 2u, 17u, 32002u, 12345u})
    CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.from_int(64006) == 0);
  CHECK(f.lift(32002) == -1);
  CHECK(f.lift(5) == 5);
  CHECK(f.to_string(32002) == "-1");
  CHECK(f.to_string(5) == "5");

  CHECK_THROWS_AS(Fp(4), std::invalid_argument);       // not prime
  CHECK_THROWS_AS(Fp(1), std::invalid_argument);
  CHECK_NOTHROW(Fp(2));
  CHECK_NOTHROW(Fp(101));
}

TEST_CASE("rational field operations") {
  QQ q;
  auto half = q.div(q.one(), q.from_int(2));
  CHECK(q.to_string(half) == "1/2");
  CHECK(q.is_zero(q.sub(half, half)));
  CHECK(q.mul(q.from_int(3), q.inv(q.from_int(3))) == q.one());
  CHECK_THROWS_AS(q.inv(q.zero()), std::domain_error);
  CHECK_THROWS_AS(q.div(q.one(), q.zero()), std::domain_error);
}

TEST_CASE("make_poly merges and drops zero terms") {
  Fp f;
  Ring r = make_ring(2);
  Monomial m = Monomial::var(0);
  auto p = make_poly(f, r, {{m, 5u}, {m, 32000u}, {Monomial::var(1), 32003u - 2u}});
  // 5 + 32000 = 2 mod p on x1; x2 coefficient is -2
  REQUIRE(p.terms.size() == 2);
  CHECK(p.terms[0].m == m);
  CHECK(p.terms[0].c == 2);
  CHECK(p.terms[1].c == 32001);

  auto z = make_poly(f, r, {{m, 1u}, {m, 32002u}});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK_THROWS_AS(z.lt(), std::domain_error);
}

TEST_CASE("polynomial ring arithmetic") {
  Fp f;
  Ring r = make_ring(2);
  auto x1 = var_poly(f, r, 0);
  auto x2 = var_poly(f, r, 1);
  auto y1 = var_poly(f, r, 2);

  auto s = add(f, x1, x2);
  CHECK(s.terms.size() == 2);
  CHECK(sub(f, s, x2) == x1);
  CHECK(add(f, x1, neg(f, x1)).is_zero());

  auto prod = mul(f, s, s);  // (x1+x2)^2 = x1^2 + 2 x1 x2 + x2^2
  REQUIRE(prod.terms.size() == 3);
  CHECK(prod.terms[1].c == 2);
  CHECK(prod.degree() == 2);
  CHECK(prod.homogeneous());
  CHECK(!add(f, prod, x1).homogeneous());

  auto scaled = mul_term(f, s, Monomial::var(2), f.from_int(3));
  CHECK(scaled.terms.size() == 2);
  CHECK(scaled.lt().m == x1.lt().m.mul(y1.lt().m));
  CHECK(scaled.lt().c == 3);
  CHECK(mul_term(f, s, Monomial::one(), f.zero()).is_zero());

  auto monic = make_monic(f, scaled);
  CHECK(monic.lt().c == 1);
  CHECK(make_monic(f, poly_zero<Fp>(r)).is_zero());

  Ring other = make_ring(3);
  auto w = var_poly(f, other, 0);
  CHECK_THROWS_AS(add(f, x1, w), std::invalid_argument);

  CHECK_THROWS_AS(var_poly(f, r, -1), std::out_of_range);
  CHECK_THROWS_AS(var_poly(f, r, 4), std::out_of_range);
}

TEST_CASE("edge binomials") {
  Fp f;
  Ring r = make_ring(3, OrderKind::lex);
  auto g12 = edge_binomial(f, r, 1, 2);
  CHECK(to_string(f, g12) == "x1*y2 - x2*y1");
  CHECK(g12.homogeneous());
  CHECK(g12.degree() == 2);
  CHECK(edge_binomial(f, r, 2, 1) == g12);  // endpoints normalized
  CHECK_THROWS_AS(edge_binomial(f, r, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(edge_binomial(f, r, 0, 2), std::out_of_range);

  Graph p3 = make_graph(3, {{1, 2}, {2, 3}});
  auto gens = binomial_edge_generators(f, r, p3);
  REQUIRE(gens.size() == 2);
  CHECK(to_string(f, gens[0]) == "x1*y2 - x2*y1");
  CHECK(to_string(f, gens[1]) == "x2*y3 - x3*y2");

  Ring small = make_ring(2);
  CHECK_THROWS_AS(binomial_edge_generators(f, small, p3), std::invalid_argument);
}

TEST_CASE("polynomial rendering") {
  Fp f;
  Ring r = make_ring(2, OrderKind::lex);
  CHECK(to_string(f, poly_zero<Fp>(r)) == "0");

  auto one = make_poly(f, r, {{Monomial::one(), 1u}});
  CHECK(to_string(f, one) == "1");

  auto p = make_poly(f, r, {{Monomial::var(0, 2), 1u},
                            {Monomial::var(1), 32001u},
                            {Monomial::one(), 7u}});
  CHECK(to_string(f, p) == "x1^2 - 2*x2 + 7");

  auto q = make_poly(f, r, {{Monomial::var(0), 32002u}});
  CHECK(to_string(f, q) == "-x1");

  QQ qq;
  Ring rq = make_ring(2, OrderKind::lex);
  auto h = make_poly(qq, rq, {{Monomial::var(0), mpq_class(1, 2)}});
  CHECK(to_string(qq, h) == "1/2*x1");
}
