#include "tk/errors.hpp"
#include "tk/samples.hpp"
#include "tk/tor.hpp"
#include "tk/twist.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace tk;

namespace {

IntMatrix column(std::initializer_list<int> values) {
  IntMatrix m(static_cast<Index>(values.size()), 1);
  Index i = 0;
  for (int v : values) m(i++, 0) = v;
  return m;
}

Presentation single(const std::vector<std::string>& coefficients, unsigned d) {
  Presentation p;
  p.truncation = d;
  p.generators = {{"x", 0}};
  for (const auto& c : coefficients) p.relations.push_back({{0, parse_beta_poly(c)}});
  return p;
}

}  // namespace

TEST_CASE("kernels of maps between free modules", "[tor][kernel]") {
  for (unsigned d = 1; d <= 8; ++d) {
    const TruncRing ring(d);
    const IntMatrix k = kernel(ring, ring.coordinates(BetaPoly::beta(1)));
    REQUIRE(k.cols() == 1);
    const Integer sign = k(0, 0);
    for (unsigned j = 0; j <= d; ++j) REQUIRE(k(j, 0) == sign * (j % 2 == 0 ? 1 : -1));
    REQUIRE(ring.multiply(IntVector(ring.coordinates(BetaPoly::beta(1))), IntVector(k.col(0))).isZero());
  }
  const TruncRing ring(3);
  REQUIRE(kernel(ring, IntMatrix::Zero(8, 2)).cols() == 8);
  const IntMatrix identity = IntMatrix::Identity(4, 4).leftCols(1);
  REQUIRE(kernel(ring, identity).cols() == 0);
}

TEST_CASE("homology of small complexes", "[tor][homology]") {
  ChainComplex c;
  c.relations = {IntMatrix(1, 0), IntMatrix(1, 0)};
  c.boundaries = {column({2})};
  auto h = homology(c);
  REQUIRE(h[0].str() == "Z/2");
  REQUIRE(h[1].is_zero());

  c.boundaries = {column({0})};
  h = homology(c);
  REQUIRE(h[0].str() == "Z");
  REQUIRE(h[1].str() == "Z");

  ChainComplex zero;
  zero.relations = {IntMatrix(2, 0), IntMatrix(3, 0)};
  zero.boundaries = {IntMatrix::Zero(2, 3)};
  h = homology(zero);
  REQUIRE(h[0].str() == "Z^2");
  REQUIRE(h[1].str() == "Z^3");

  ChainComplex bad;
  bad.relations = {IntMatrix(1, 0), IntMatrix(1, 0), IntMatrix(1, 0)};
  bad.boundaries = {column({1}), column({1})};
  REQUIRE_THROWS_AS(homology(bad), NotAComplex);

  // Relations on the chain groups: Z/4 -(2)-> Z/4.
  ChainComplex rel;
  rel.relations = {column({4}), column({4})};
  rel.boundaries = {column({2})};
  h = homology(rel);
  REQUIRE(h[0].str() == "Z/2");
  REQUIRE(h[1].str() == "Z/2");
}

TEST_CASE("homology of free complexes by ranks agrees with the cycle computation", "[tor][homology][property]") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n0 = dim(rng), n1 = dim(rng), n2 = dim(rng);
    ChainComplex c;
    const IntMatrix d1 = random_matrix(rng, n0, n1, 4);
    const IntMatrix k = kernel_basis(d1);
    const IntMatrix d2 = k.cols() == 0 ? IntMatrix(IntMatrix::Zero(n1, n2)) : IntMatrix(k * random_matrix(rng, k.cols(), n2, 3));
    c.relations = {IntMatrix(n0, 0), IntMatrix(n1, 0), IntMatrix(n2, 0)};
    c.boundaries = {d1, d2};
    // A zero relation changes no group but forces the general path.
    ChainComplex general = c;
    for (auto& r : general.relations) r = IntMatrix::Zero(r.rows(), 1);
    REQUIRE(homology(c) == homology(general));
  }
}

TEST_CASE("free resolutions", "[tor][free]") {
  auto ring = std::make_shared<const TruncRing>(6);
  const auto res = free_resolution(TruncModule::free(ring, 1), 3);
  REQUIRE(res.generators(0) == 1);
  for (std::size_t s = 1; s < res.terms.size(); ++s) REQUIRE(res.generators(s) == 0);

  const auto by_n = free_resolution(TruncModule::from_presentation(ring, single({"3"}, 6), 0), 2);
  REQUIRE(by_n.generators(1) == 1);
  REQUIRE(by_n.generators(2) == 0);

  const auto by_b1 = free_resolution(TruncModule::from_presentation(ring, single({"b1"}, 6), 0), 2);
  REQUIRE(by_b1.generators(1) == 1);
  REQUIRE(by_b1.generators(2) == 1);
  // The first syzygy is the alternating sum.
  const IntVector syzygy = by_b1.maps[2].col(0);
  for (Index j = 0; j < syzygy.size(); ++j) REQUIRE(abs(syzygy(j)) == 1);
}

TEST_CASE("Tor of basic modules", "[tor]") {
  for (int n = 2; n <= 6; ++n) {
    const auto p = single({std::to_string(n) + " b1"}, 4);
    for (auto mode : {ResolutionMode::free, ResolutionMode::relative}) {
      const auto t = tor(p, mode == ResolutionMode::free ? 3 : 1, mode);
      REQUIRE(t[0].parity0 == AbelianGroup{0, {Integer(n)}});
      REQUIRE(t[0].parity1.is_zero());
    }
  }
  auto ring = std::make_shared<const TruncRing>(5);
  const auto t = tor(TruncModule::free(ring, 2), 3, ResolutionMode::free);
  REQUIRE(t[0].str() == "Z^2");
  for (unsigned s = 1; s <= 3; ++s) REQUIRE(t[s].is_zero());
  const auto tn = tor(TruncModule::from_presentation(ring, single({"7"}, 5), 0), 3, ResolutionMode::free);
  REQUIRE(tn[0].str() == "Z/7");
  for (unsigned s = 1; s <= 3; ++s) REQUIRE(tn[s].is_zero());
}

TEST_CASE("relative resolutions", "[tor][relative]") {
  auto ring = std::make_shared<const TruncRing>(4);
  const auto m = TruncModule::from_presentation(ring, single({"5 b1"}, 4), 0);
  const auto res = relative_resolution(m, 2);
  REQUIRE(res.terms.size() == 3);
  REQUIRE_NOTHROW(res.tensor_augmentation().check());

  std::vector<std::string> all;
  for (int i = 1; i <= 4; ++i) all.push_back("b" + std::to_string(i));
  // Z with every b_{>=1} acting as 0: U(M) = Z and E_0 = Lambda.
  const auto trivial = TruncModule::from_presentation(ring, single({"b1 - 1", "b2", "b3", "b4"}, 4), 0);
  REQUIRE(trivial.group().str() == "Z");
  REQUIRE(relative_resolution(trivial, 0).generators(0) == 1);
  // The b_{>=1} span an ideal, so killing them leaves Z = span(b_0).
  REQUIRE(TruncModule::from_presentation(ring, single(all, 4), 0).group().str() == "Z");

  const auto free = relative_resolution(TruncModule::free(ring, 1), 1);
  REQUIRE(free.generators(0) == ring->rank());
  const auto t = homology(free.tensor_augmentation());
  REQUIRE(t[0].str() == "Z");
  REQUIRE(t[1].is_zero());
}

TEST_CASE("Tor_0 agrees with twisted K in both modes", "[tor][twist]") {
  std::vector<Presentation> catalog;
  for (int n = 1; n <= 6; ++n) catalog.push_back(single({std::to_string(n) + " b1"}, 5));
  catalog.push_back(single({"b1", "b2", "b3", "b4", "b5"}, 5));
  catalog.push_back(single({"2 b1 + b2", "t^2 b3 - 3"}, 5));
  Presentation two;
  two.truncation = 3;
  two.generators = {{"x", 0}, {"y", 1}, {"z", 0}};
  two.relations = {{{0, parse_beta_poly("2 b1")}, {2, parse_beta_poly("4 + b2")}}, {{1, parse_beta_poly("6")}}};
  catalog.push_back(two);
  for (const auto& p : catalog) {
    const auto expected = twisted_k(p);
    REQUIRE(tor(p, 0, ResolutionMode::free)[0] == expected);
    REQUIRE(tor(p, 0, ResolutionMode::relative)[0] == expected);
  }
  REQUIRE_THROWS_AS(tor(single({"b5"}, 5), 0, ResolutionMode::free, 3), MalformedPresentation);
}

TEST_CASE("extended modules have no higher Tor", "[tor][property]") {
  std::mt19937 rng(307);
  std::uniform_int_distribution<int> rank(1, 3), trunc(1, 6);
  for (int trial = 0; trial < 10; ++trial) {
    auto ring = std::make_shared<const TruncRing>(trunc(rng));
    const Index u = rank(rng);
    const auto t = tor(scrambled_extended(rng, ring, u), 3, ResolutionMode::free);
    INFO("D = " << ring->truncation() << ", rank " << u);
    REQUIRE(t[0] == AbelianGroup{static_cast<std::size_t>(u), {}});
    for (unsigned s = 1; s <= 3; ++s) REQUIRE(t[s].is_zero());
  }
  // Relative mode on small cases.
  auto ring = std::make_shared<const TruncRing>(2);
  const auto t = tor(scrambled_extended(rng, ring, 1), 2, ResolutionMode::relative);
  REQUIRE(t[0].str() == "Z");
  REQUIRE(t[1].is_zero());
  REQUIRE(t[2].is_zero());
}
