#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "bei/groebner.hpp"

using namespace bei;

namespace {

const Fp F{};

FpPoly x_(const Ring& r, int i) { return var_poly(F, r, r.xvar(i)); }
FpPoly y_(const Ring& r, int i) { return var_poly(F, r, r.yvar(i)); }

}  // namespace

TEST_CASE("s-polynomials cancel leading terms") {
  Ring r = make_ring(2, OrderKind::lex);
  auto f = edge_binomial(F, r, 1, 2);
  auto s = s_polynomial(F, f, f);
  CHECK(s.is_zero());

  // S(x1^2, x1*y1 - 1) = y1 * oversight term
  auto a = mul(F, x_(r, 1), x_(r, 1));
  auto one = make_poly(F, r, {{Monomial::one(), 1u}});
  auto b = sub(F, mul(F, x_(r, 1), y_(r, 1)), one);
  auto sp = s_polynomial(F, a, b);
  CHECK(sp == x_(r, 1));
}

TEST_CASE("normal form is a full reduction") {
  Ring r = make_ring(2, OrderKind::lex);
  auto g = edge_binomial(F, r, 1, 2);  // x1*y2 - x2*y1
  std::vector<FpPoly> basis{g};

  // x1*y2 reduces to x2*y1
  auto m = mul(F, x_(r, 1), y_(r, 2));
  auto nf = normal_form(F, m, basis);
  CHECK(nf == mul(F, x_(r, 2), y_(r, 1)));

  // multiples of g vanish
  CHECK(normal_form(F, mul(F, g, g), basis).is_zero());
  CHECK(normal_form(F, mul_term(F, g, Monomial::var(0, 3), F.from_int(7)), basis)
            .is_zero());

  // reduction against the empty basis is the identity
  CHECK(normal_form(F, g, {}) == g);
  CHECK(normal_form(F, poly_zero<Fp>(r), basis).is_zero());
}

TEST_CASE("buchberger closes a non-basis generating set") {
  // under lex the four edge generators of the star are not a closed set;
  // the literal pairwise criterion certifies both the gap and the closure
  Ring r = make_ring(4, OrderKind::lex);
  Graph k13 = star_graph(3);
  auto I = binomial_edge_ideal(F, r, k13);
  CHECK(!is_groebner(F, I.gens));
  auto gb = buchberger(F, I);
  CHECK(is_groebner(F, gb.elems));
  CHECK(gb.elems.size() > I.gens.size());

  // path generators are already closed under lex
  Graph p3 = path_graph(3);
  Ring r3 = make_ring(3, OrderKind::lex);
  auto J = binomial_edge_ideal(F, r3, p3);
  CHECK(is_groebner(F, J.gens));
}

TEST_CASE("reduced basis is unique under generator shuffling") {
  Ring r = make_ring(4);
  Graph c4 = cycle_graph(4);
  auto I = binomial_edge_ideal(F, r, c4);
  auto ref = buchberger(F, I);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    auto gens = I.gens;
    std::shuffle(gens.begin(), gens.end(), rng);
    // also rescale by random nonzero constants
    for (auto& g : gens)
      g = mul_term(F, g, Monomial::one(), F.from_int(1 + int(rng() % 31000)));
    auto gb = buchberger(F, Ideal<Fp>{r, std::move(gens)});
    REQUIRE(gb.elems.size() == ref.elems.size());
    for (std::size_t i = 0; i < gb.elems.size(); ++i) CHECK(gb.elems[i] == ref.elems[i]);
  }
}

TEST_CASE("membership in the path ideal") {
  // the long off-diagonal minor x1*y3 - x3*y1 is not in the path ideal,
  // but multiplying by x2 or y2 lands inside
  Ring r = make_ring(3);
  Graph p3 = path_graph(3);
  auto gb = buchberger(F, binomial_edge_ideal(F, r, p3));

  auto minor13 = sub(F, mul(F, x_(r, 1), y_(r, 3)), mul(F, x_(r, 3), y_(r, 1)));
  CHECK(!ideal_membership(F, minor13, gb));
  CHECK(ideal_membership(F, mul(F, x_(r, 2), minor13), gb));
  CHECK(ideal_membership(F, mul(F, y_(r, 2), minor13), gb));

  // on the triangle the same minor is a generator
  Graph k3 = complete_graph(3);
  auto gb3 = buchberger(F, binomial_edge_ideal(F, r, k3));
  CHECK(ideal_membership(F, minor13, gb3));

  CHECK(ideal_membership(F, poly_zero<Fp>(r), gb));
  CHECK(make_ideal(r, std::vector<FpPoly>{minor13}).gens.size() == 1);
  CHECK_THROWS_AS(make_ideal(r, std::vector<FpPoly>{poly_zero<Fp>(r)}), std::invalid_argument);
}

TEST_CASE("ideal equality and sums") {
  Ring r = make_ring(3);
  Graph p3 = path_graph(3);
  auto I = binomial_edge_ideal(F, r, p3);

  // generating sets in different order cut out the same ideal
  auto flipped = Ideal<Fp>{r, {I.gens[1], I.gens[0]}};
  CHECK(ideal_equal(F, I, flipped));

  auto bigger = ideal_sum(I, binomial_edge_ideal(F, r, complete_graph(3)));
  CHECK(!ideal_equal(F, I, bigger));
  CHECK(ideal_equal(F, bigger, binomial_edge_ideal(F, r, complete_graph(3))));

  Ring other = make_ring(2);
  auto J = binomial_edge_ideal(F, other, path_graph(2));
  CHECK_THROWS_AS(ideal_sum(I, J), std::invalid_argument);
  CHECK_THROWS_AS(ideal_equal(F, I, J), std::invalid_argument);
}

TEST_CASE("initial ideals depend on the order") {
  Ring lex = make_ring(2, OrderKind::lex);
  Ring drl = make_ring(2, OrderKind::degrevlex);
  Graph p2 = path_graph(2);
  auto li = initial_ideal(buchberger(F, binomial_edge_ideal(F, lex, p2)));
  auto di = initial_ideal(buchberger(F, binomial_edge_ideal(F, drl, p2)));
  REQUIRE(li.size() == 1);
  REQUIRE(di.size() == 1);
  CHECK(li[0] == Monomial::var(0).mul(Monomial::var(3)));  // x1*y2
  CHECK(di[0] == Monomial::var(1).mul(Monomial::var(2)));  // x2*y1
}

TEST_CASE("elimination-based intersection") {
  Ring r = make_ring(1, OrderKind::lex);  // vars x1, y1
  auto X = make_ideal(r, std::vector<FpPoly>{x_(r, 1)});
  auto Y = make_ideal(r, std::vector<FpPoly>{y_(r, 1)});
  auto I = ideal_intersection(F, X, Y);
  REQUIRE(I.gens.size() == 1);
  CHECK(I.gens[0] == mul(F, x_(r, 1), y_(r, 1)));

  // intersection with a contained ideal returns the smaller one
  auto XY = make_ideal(r, std::vector<FpPoly>{mul(F, x_(r, 1), y_(r, 1))});
  CHECK(ideal_equal(F, ideal_intersection(F, X, XY), XY));
  CHECK(ideal_equal(F, ideal_intersection(F, X, X), X));
}

TEST_CASE("prime-component ideals") {
  Graph p3 = path_graph(3);
  Ring r = make_ring(3);

  // empty cut set: one component, all three minors
  auto p_empty = p_t_ideal(F, r, p3, {});
  CHECK(p_empty.gens.size() == 3);

  // cutting the middle vertex separates the endpoints
  auto p_mid = p_t_ideal(F, r, p3, {2});
  CHECK(p_mid.gens.size() == 2);  // just x2, y2
  CHECK(ideal_membership(F, x_(r, 2), p_mid));
  CHECK(!ideal_membership(F, edge_binomial(F, r, 1, 3), p_mid));

  // J sits inside every component ideal
  for (const auto& T : std::vector<std::vector<int>>{{}, {1}, {2}, {3}, {1, 2}}) {
    auto pt = buchberger(F, p_t_ideal(F, r, p3, T));
    for (const auto& g : binomial_edge_ideal(F, r, p3).gens)
      CHECK(ideal_membership(F, g, pt));
  }

  CHECK_THROWS_AS(p_t_ideal(F, r, p3, {4}), std::out_of_range);
}

TEST_CASE("intersection decomposition over all cut sets") {
  Ring r3 = make_ring(3);
  CHECK(verify_herzog_decomposition(F, r3, path_graph(3)));
  CHECK(verify_herzog_decomposition(F, r3, complete_graph(3)));
  Ring r4 = make_ring(4);
  CHECK(verify_herzog_decomposition(F, r4, cycle_graph(4)));
  Ring r7 = make_ring(7);
  CHECK_THROWS_AS(verify_herzog_decomposition(F, r7, path_graph(7)),
                  std::invalid_argument);
}

TEST_CASE("splitting at an internal vertex") {
  Ring r = make_ring(3);
  Graph p3 = path_graph(3);
  auto split = ohtani_split(F, r, p3, 2);
  CHECK(split.intersection_holds);
  CHECK(split.sum_holds);

  // endpoints are free, so the split is refused there
  CHECK_THROWS_AS(ohtani_split(F, r, p3, 1), std::invalid_argument);

  Ring r4 = make_ring(4);
  auto s2 = ohtani_split(F, r4, star_graph(3), 1);
  CHECK(s2.intersection_holds);
  CHECK(s2.sum_holds);
}

TEST_CASE("isolating a vertex drops its edges only") {
  Graph p3 = path_graph(3);
  Graph iso = isolate_vertex(p3, 2);
  CHECK(iso.n() == 3);
  CHECK(iso.edge_count() == 0);
  Graph c4 = cycle_graph(4);
  CHECK(isolate_vertex(c4, 1).edge_count() == 2);
}

TEST_CASE("characteristic-independent leading monomials") {
  // same initial ideal over F_p and Q on the 4-cycle
  Ring r = make_ring(4);
  Graph c4 = cycle_graph(4);
  auto fp_init = initial_ideal(buchberger(F, binomial_edge_ideal(F, r, c4)));
  QQ qq;
  auto qq_init = initial_ideal(buchberger(qq, binomial_edge_ideal(qq, r, c4)));
  REQUIRE(fp_init.size() == qq_init.size());
  for (std::size_t i = 0; i < fp_init.size(); ++i) CHECK(fp_init[i] == qq_init[i]);
}

TEST_CASE("basis dump format") {
  Ring r = make_ring(2, OrderKind::lex);
  auto gb = buchberger(F, binomial_edge_ideal(F, r, path_graph(2)));
  std::string s = gb_dump(F, gb);
  CHECK(s == "order lex prime 32003\nx1*y2 - x2*y1\n");
}
