#include "tk/samples.hpp"

#include "tk/linalg.hpp"

namespace tk {

namespace {

int draw(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

LaurentPoly uv(std::int64_t a, std::int64_t b, const Rational& c) { return LaurentPoly::monomial({"u", "v"}, {a, b}, c); }

}  // namespace

IntMatrix random_matrix(std::mt19937& rng, Index rows, Index cols, int bound) {
  IntMatrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = draw(rng, -bound, bound);
  return a;
}

IntMatrix random_unimodular(std::mt19937& rng, Index n) {
  IntMatrix p = IntMatrix::Identity(n, n);
  if (n < 2) return p;
  for (Index step = 0; step < 3 * n; ++step) {
    const Index i = draw(rng, 0, static_cast<int>(n - 1)), j = draw(rng, 0, static_cast<int>(n - 1));
    if (i != j) p.row(i) += draw(rng, -2, 2) * p.row(j);
  }
  return p;
}

TruncModule scrambled_extended(std::mt19937& rng, std::shared_ptr<const TruncRing> ring, Index rank) {
  const TruncModule e = TruncModule::extended(ring, IntMatrix(rank, 0));
  const IntMatrix p = random_unimodular(rng, e.rank());
  const IntMatrix q = unimodular_inverse(p);
  std::vector<IntMatrix> actions;
  for (unsigned k = 0; k < ring->rank(); ++k) actions.push_back(p * e.action(k) * q);
  return TruncModule(std::move(ring), IntMatrix(), std::move(actions));
}

KKElement random_kk_candidate(std::mt19937& rng, int max_degree) {
  static const int denominators[] = {1, 2, 3, 4, 6, 8, 12, 24};
  const int r = draw(rng, -max_degree, max_degree);
  const int kind = draw(rng, 0, 3);
  LaurentPoly f;
  if (kind <= 2) {
    // Integer combinations of p_i u^a v^-b, i <= 4 so that i! divides 24.
    for (int n = draw(rng, 1, 3); n > 0; --n) {
      const int i = draw(rng, 0, 4), b = draw(rng, 0, 2);
      f += p_poly(static_cast<unsigned>(i)).poly() * uv(r - i + b, -b, Rational(draw(rng, -6, 6)));
    }
  }
  if (kind >= 2) {
    for (int n = draw(rng, 1, 2); n > 0; --n) {
      const int e = draw(rng, -2, 4);
      const int d = denominators[draw(rng, 0, 7)];
      f += uv(r - e, e, Rational(draw(rng, -5, 5), d));
    }
  }
  return KKElement(f);
}

BetaPoly random_beta_poly(std::mt19937& rng, unsigned max_index, int terms) {
  for (;;) {
    BetaPoly::Terms t;
    for (int n = 0; n < terms; ++n) t[{draw(rng, -2, 2), static_cast<unsigned>(draw(rng, 0, static_cast<int>(max_index)))}] += draw(rng, -5, 5);
    BetaPoly x = BetaPoly::from_terms(t);
    if (!x.is_zero()) return x;
  }
}

}  // namespace tk
