#include <doctest.h>

#include "helpers.hpp"

using namespace ultk;
using namespace ultk::testing;

namespace {

Monomial random_monomial(Rng& rng, std::size_t nvars, std::uint32_t max_exp = 5) {
  std::vector<std::uint32_t> exps(nvars);
  for (auto& e : exps) e = static_cast<std::uint32_t>(rng.below(max_exp + 1));
  return Monomial(std::move(exps));
}

}  // namespace

TEST_CASE("weighted grevlex compares weighted degree first") {
  VariableTable table({"s", "t", "x", "y", "z"}, {3, 3, 2, 2, 2});
  auto order = MonomialOrder::weighted_grevlex();
  Monomial s2 = Monomial::variable(5, 0, 2);   // degree 6
  Monomial x3 = Monomial::variable(5, 2, 3);   // degree 6
  Monomial y = Monomial::variable(5, 3);       // degree 2
  CHECK(order.compare(s2, y, table) > 0);
  CHECK(order.compare(s2, x3, table) > 0);  // tie on degree, reverse-lex break
  CHECK(order.compare(Monomial::one(5), y, table) < 0);
}

TEST_CASE("order axioms hold on random monomial triples") {
  VariableTable table({"x", "y", "z"}, {2, 1, 3});
  std::vector<bool> elim{true, false, false};
  MonomialOrder orders[2] = {MonomialOrder::weighted_grevlex(),
                             MonomialOrder::block(elim, MonomialOrder::weighted_grevlex())};
  Rng rng(42);
  for (int iter = 0; iter < 400; ++iter) {
    Monomial a = random_monomial(rng, 3), b = random_monomial(rng, 3),
             c = random_monomial(rng, 3);
    for (const auto& order : orders) {
      int ab = order.compare(a, b, table);
      // Trichotomy against equality.
      CHECK((ab == 0) == (a == b));
      CHECK(ab == -order.compare(b, a, table));
      // Multiplicativity: a < b implies a*c < b*c.
      if (ab < 0) CHECK(order.compare(a * c, b * c, table) < 0);
      // Transitivity.
      int bc = order.compare(b, c, table);
      if (ab < 0 && bc < 0) CHECK(order.compare(a, c, table) < 0);
      // 1 is minimal.
      if (!a.is_one()) CHECK(order.compare(Monomial::one(3), a, table) < 0);
    }
  }
}

TEST_CASE("block order ranks eliminated variables above the rest") {
  VariableTable table({"u", "x", "y"}, {1, 1, 1});
  MonomialOrder block =
      MonomialOrder::block({true, false, false}, MonomialOrder::weighted_grevlex());
  Monomial u = Monomial::variable(3, 0);
  Monomial x5y5 = Monomial(std::vector<std::uint32_t>{0, 5, 5});
  CHECK(block.compare(u, x5y5, table) > 0);
  // Within the u-free block the inner order decides.
  Monomial x2 = Monomial::variable(3, 1, 2);
  Monomial y = Monomial::variable(3, 2);
  CHECK(block.compare(x2, y, table) > 0);
}

TEST_CASE("monomial divisibility and lcm") {
  Monomial a(std::vector<std::uint32_t>{2, 1, 0});
  Monomial b(std::vector<std::uint32_t>{1, 1, 0});
  CHECK(b.divides(a));
  CHECK(!a.divides(b));
  CHECK(a.lcm(b) == a);
  CHECK(a.divide(b) == Monomial(std::vector<std::uint32_t>{1, 0, 0}));
  CHECK(a.coprime(Monomial(std::vector<std::uint32_t>{0, 0, 7})));
  CHECK(!a.coprime(b));
}
