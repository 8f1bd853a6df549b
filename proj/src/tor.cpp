#include "tk/tor.hpp"

#include "tk/errors.hpp"

namespace tk {

namespace {

/// Stages above this Z-rank are refused rather than left to run for hours.
constexpr Index kMaxStageRank = 4000;

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), a.cols() + b.cols());
  if (a.cols() > 0) out.leftCols(a.cols()) = a;
  if (b.cols() > 0) out.rightCols(b.cols()) = b;
  return out;
}

bool contains(const IntMatrix& basis, const IntVector& v) { return solve_in_lattice<Integer>(basis, v).has_value(); }

/// Every column of `vectors` lies in the span of `gens`.
bool spans(const IntMatrix& gens, const IntMatrix& vectors) {
  const IntMatrix basis = lattice_basis(gens);
  for (Index j = 0; j < vectors.cols(); ++j)
    if (!contains(basis, vectors.col(j))) return false;
  return true;
}

/// Column (i, b) is b_b * gens_i.
IntMatrix act_on(const std::vector<IntMatrix>& actions, const IntMatrix& gens) {
  const Index r = static_cast<Index>(actions.size());
  const Index rows = actions.empty() ? 0 : actions.front().rows();
  IntMatrix out(rows, gens.cols() * r);
  for (Index i = 0; i < gens.cols(); ++i)
    for (Index b = 0; b < r; ++b) out.col(i * r + b) = product<Integer>(actions[b], gens.col(i));
  return out;
}

std::vector<IntMatrix> actions_of(const TruncModule& m) {
  std::vector<IntMatrix> out;
  for (unsigned k = 0; k < m.ring().rank(); ++k) out.push_back(m.action(k));
  return out;
}

/// Greedy choice of ring generators among `candidates`: a candidate is kept
/// when it is not yet in the Lambda-span of the kept ones plus `relations`.
IntMatrix choose_generators(const std::vector<IntMatrix>& actions, const IntMatrix& relations,
                            const IntMatrix& candidates) {
  IntMatrix basis = lattice_basis(relations);
  std::vector<Index> kept;
  for (Index j = 0; j < candidates.cols(); ++j) {
    if (contains(basis, candidates.col(j))) continue;
    kept.push_back(j);
    basis = lattice_basis(hcat(basis, act_on(actions, candidates.col(j))));
  }
  IntMatrix out(candidates.rows(), static_cast<Index>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) out.col(static_cast<Index>(i)) = candidates.col(kept[i]);
  return out;
}

/// n x n(D+1) matrix of (i, b) -> epsilon(b_b) e_i.
IntMatrix collapse(const TruncRing& ring, Index n) {
  const Index r = ring.rank();
  IntMatrix c = IntMatrix::Zero(n, n * r);
  for (Index i = 0; i < n; ++i)
    for (Index b = 0; b < r; ++b) c(i, i * r + b) = ring.augmentation()(b);
  return c;
}

void guard_size(Index rank, std::size_t stage) {
  if (rank > kMaxStageRank)
    throw ValidationError("resolution stage " + std::to_string(stage) + " needs Z-rank " + std::to_string(rank) +
                          " (limit " + std::to_string(kMaxStageRank) + "); lower the truncation or the length");
}

}  // namespace

// ---- modules --------------------------------------------------------------

TruncModule::TruncModule(std::shared_ptr<const TruncRing> ring, IntMatrix relations, std::vector<IntMatrix> actions,
                         IntMatrix preferred_generators)
    : ring_(std::move(ring)), relations_(std::move(relations)), actions_(std::move(actions)),
      preferred_(std::move(preferred_generators)) {
  if (actions_.size() != ring_->rank()) throw Error("module needs one action matrix per basis element");
  const Index n = actions_.front().rows();
  for (const auto& a : actions_)
    if (a.rows() != n || a.cols() != n) throw Error("action matrices must be square of equal size");
  if (relations_.cols() == 0) relations_.resize(n, 0);
  if (preferred_.cols() == 0) preferred_.resize(n, 0);
  if (relations_.rows() != n || preferred_.rows() != n) throw Error("module data of mismatched size");
}

IntMatrix free_action(const TruncRing& ring, Index n, unsigned k) {
  const Index r = ring.rank();
  IntMatrix a = IntMatrix::Zero(n * r, n * r);
  for (Index i = 0; i < n; ++i) a.block(i * r, i * r, r, r) = ring.action(k);
  return a;
}

namespace {

std::vector<IntMatrix> free_actions(const TruncRing& ring, Index n) {
  std::vector<IntMatrix> out;
  for (unsigned k = 0; k < ring.rank(); ++k) out.push_back(free_action(ring, n, k));
  return out;
}

IntMatrix unit_generators(const TruncRing& ring, Index n) {
  IntMatrix g = IntMatrix::Zero(n * ring.rank(), n);
  for (Index i = 0; i < n; ++i) g(i * ring.rank(), i) = 1;
  return g;
}

}  // namespace

TruncModule TruncModule::free(std::shared_ptr<const TruncRing> ring, Index n) {
  auto actions = free_actions(*ring, n);
  auto gens = unit_generators(*ring, n);
  return TruncModule(std::move(ring), IntMatrix(), std::move(actions), std::move(gens));
}

TruncModule TruncModule::extended(std::shared_ptr<const TruncRing> ring, const IntMatrix& group_relations) {
  const Index n = group_relations.rows();
  const Index r = ring->rank();
  IntMatrix rel = IntMatrix::Zero(n * r, group_relations.cols() * r);
  for (Index j = 0; j < group_relations.cols(); ++j)
    for (Index i = 0; i < n; ++i)
      for (Index b = 0; b < r; ++b) rel(i * r + b, j * r + b) = group_relations(i, j);
  auto actions = free_actions(*ring, n);
  auto gens = unit_generators(*ring, n);
  return TruncModule(std::move(ring), std::move(rel), std::move(actions), std::move(gens));
}

TruncModule TruncModule::from_presentation(std::shared_ptr<const TruncRing> ring, const Presentation& p, int parity) {
  std::vector<Index> position(p.generators.size(), -1);
  Index a = 0;
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    if (p.generators[g].parity == parity) position[g] = a++;
  const Index r = ring->rank();
  std::vector<IntVector> rows;
  for (const auto& rel : p.relations) {
    if (rel.empty() || p.parity(rel) != parity) continue;
    IntVector v = IntVector::Zero(a * r);
    for (const auto& [g, c] : rel) v.segment(position[g] * r, r) = ring->coordinates(c);
    rows.push_back(v);
  }
  auto actions = free_actions(*ring, a);
  // Row-major: every relation followed by its b_k multiples.
  IntMatrix rel(a * r, static_cast<Index>(rows.size()) * r);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Index k = 0; k < r; ++k) rel.col(static_cast<Index>(i) * r + k) = product<Integer>(actions[k], rows[i]);
  auto gens = unit_generators(*ring, a);
  return TruncModule(std::move(ring), std::move(rel), std::move(actions), std::move(gens));
}

IntMatrix linearize(const TruncRing& ring, const IntMatrix& images) {
  const Index r = ring.rank();
  if (images.rows() % r != 0) throw Error("image vectors must have a multiple of D+1 coordinates");
  return act_on(free_actions(ring, images.rows() / r), images);
}

IntMatrix kernel(const TruncRing& ring, const IntMatrix& images) { return kernel_basis(linearize(ring, images)); }

// ---- homology -------------------------------------------------------------

void ChainComplex::check() const {
  if (boundaries.size() + 1 != relations.size() && !(relations.empty() && boundaries.empty()))
    throw NotAComplex("chain complex needs one boundary map between consecutive groups");
  for (std::size_t s = 1; s < relations.size(); ++s) {
    const IntMatrix& d = boundaries[s - 1];
    if (d.rows() != relations[s - 1].rows() || d.cols() != relations[s].rows())
      throw NotAComplex("boundary " + std::to_string(s) + " has the wrong shape");
    const IntMatrix target = lattice_basis(relations[s - 1]);
    const IntMatrix moved = product(d, relations[s]);
    for (Index j = 0; j < moved.cols(); ++j)
      if (!contains(target, moved.col(j)))
        throw NotAComplex("boundary " + std::to_string(s) + " does not respect the relations");
    if (s >= 2) {
      const IntMatrix dd = product(boundaries[s - 2], d);
      const IntMatrix below = lattice_basis(relations[s - 2]);
      for (Index j = 0; j < dd.cols(); ++j)
        if (!contains(below, dd.col(j)))
          throw NotAComplex("d_" + std::to_string(s - 1) + " d_" + std::to_string(s) + " is not zero");
    }
  }
}

std::vector<AbelianGroup> homology(const ChainComplex& c, std::size_t degrees) {
  c.check();
  std::vector<AbelianGroup> out;
  const std::size_t n = c.relations.size();
  auto unrelated = [&](std::size_t s) { return s >= n || c.relations[s].cols() == 0; };
  // rank[s] = rank of d_s, recorded at step s - 1.
  std::vector<Index> rank(n + 1, 0);
  for (std::size_t s = 0; s < std::min(n, degrees); ++s) {
    const Index size = c.relations[s].rows();
    const IntMatrix incoming = s + 1 < n ? c.boundaries[s] : IntMatrix(size, 0);
    if (unrelated(s) && (s == 0 || unrelated(s - 1))) {
      // Free chain groups: Z^n / ker d_s embeds in the group below, so ker d_s
      // is saturated and H_s = Z^(n - rank d_s - rank d_{s+1}) + tors coker d_{s+1}.
      AbelianGroup g = AbelianGroup::cokernel(incoming);
      rank[s + 1] = size - static_cast<Index>(g.free_rank);
      g.free_rank -= static_cast<std::size_t>(rank[s]);
      out.push_back(std::move(g));
      continue;
    }
    const IntMatrix cycles = s == 0 ? IntMatrix(IntMatrix::Identity(size, size))
                                    : preimage_basis<Integer>(c.boundaries[s - 1], c.relations[s - 1]);
    const IntMatrix coords = solve_in_lattice<Integer>(cycles, hcat(incoming, c.relations[s]));
    out.push_back(AbelianGroup::cokernel(coords));
    rank[s + 1] = lattice_basis(incoming).cols();
  }
  return out;
}

// ---- resolutions ----------------------------------------------------------

Index Resolution::generators(std::size_t s) const { return terms.at(s).rank() / terms.at(s).ring().rank(); }

ChainComplex Resolution::tensor_augmentation() const {
  ChainComplex c;
  if (terms.empty()) return c;
  const TruncRing& ring = terms.front().ring();
  const Index r = ring.rank();
  for (std::size_t s = 0; s < terms.size(); ++s) {
    const Index n = generators(s);
    c.relations.push_back(product(collapse(ring, n), terms[s].relations()));
    if (s == 0) continue;
    // d(e_i (x) 1) is column (i, 0) of the linearized map.
    IntMatrix d(generators(s - 1), n);
    IntMatrix firsts(maps[s].rows(), n);
    for (Index i = 0; i < n; ++i) firsts.col(i) = maps[s].col(i * r);
    d = product(collapse(ring, generators(s - 1)), firsts);
    c.boundaries.push_back(d);
  }
  c.relations.push_back(IntMatrix(top_kernel.cols(), 0));
  c.boundaries.push_back(product(collapse(ring, generators(terms.size() - 1)), top_kernel));
  return c;
}

Resolution free_resolution(const TruncModule& m, unsigned length) {
  const auto& ring = m.ring_ptr();
  Resolution res;
  res.mode = ResolutionMode::free;

  const Index n = m.rank();
  const IntMatrix candidates = hcat(m.preferred_generators(), IntMatrix::Identity(n, n));
  IntMatrix gens = choose_generators(actions_of(m), m.relations(), candidates);
  IntMatrix map = act_on(actions_of(m), gens);
  if (!spans(hcat(map, m.relations()), IntMatrix::Identity(n, n)))
    throw ConsistencyError("chosen generators do not span the module");
  guard_size(map.cols(), 0);
  res.terms.push_back(TruncModule::free(ring, gens.cols()));
  res.maps.push_back(map);
  IntMatrix k = preimage_basis<Integer>(map, m.relations());

  for (unsigned s = 1; s <= length; ++s) {
    const TruncModule& prev = res.terms.back();
    gens = choose_generators(actions_of(prev), prev.relations(), k);
    map = act_on(actions_of(prev), gens);
    if (!spans(map, k)) throw ConsistencyError("free resolution is not exact at stage " + std::to_string(s - 1));
    guard_size(map.cols(), s);
    res.terms.push_back(TruncModule::free(ring, gens.cols()));
    res.maps.push_back(map);
    k = kernel_basis(map);
  }
  res.top_kernel = k;
  return res;
}

namespace {

/// The kernel of U(X) (x) Lambda -> X, u_i (x) b -> b x_i, with its
/// explicit Z-basis: w_ib = e_(i,b) - sum_j (P b_b x_i)_j e_(j,0) for b >= 1
/// (P the U(X)-coordinates) and d_i e_(i,0) for every torsion component.
struct SplitKernel {
  Index generators = 0;
  Index ring_rank = 0;
  IntMatrix correction;          // u x u(D+1): z -> sum of the e_(.,0) parts
  std::vector<Integer> orders;   // d_i, 0 for free components
  std::vector<Index> torsion;    // coordinate of d_i e_(i,0), or -1
  IntMatrix basis;

  SplitKernel(const IntMatrix& coords, const std::vector<IntMatrix>& actions, const IntMatrix& lifts,
              std::vector<Integer> d)
      : generators(lifts.cols()), ring_rank(static_cast<Index>(actions.size())), orders(std::move(d)) {
    const Index u = generators, r = ring_rank;
    correction = IntMatrix::Zero(u, u * r);
    for (Index i = 0; i < u; ++i) {
      correction(i, i * r) = 1;
      for (Index b = 1; b < r; ++b) correction.col(i * r + b) = product<Integer>(coords, product<Integer>(actions[b], lifts.col(i)));
    }
    Index next = u * (r - 1);
    for (Index i = 0; i < u; ++i) torsion.push_back(orders[i] != 0 ? next++ : -1);
    basis = IntMatrix::Zero(u * r, next);
    for (Index i = 0; i < u; ++i) {
      for (Index b = 1; b < r; ++b) {
        const Index c = i * (r - 1) + b - 1;
        basis(i * r + b, c) = 1;
        for (Index j = 0; j < u; ++j) basis(j * r, c) = -correction(j, i * r + b);
      }
      if (torsion[i] >= 0) basis(i * r, torsion[i]) = orders[i];
    }
  }

  /// Coordinates of kernel elements (columns of z) in `basis`.
  IntMatrix coordinates(const IntMatrix& z) const {
    const Index r = ring_rank;
    IntMatrix y = IntMatrix::Zero(basis.cols(), z.cols());
    const IntMatrix c = product(correction, z);
    for (Index col = 0; col < z.cols(); ++col) {
      for (Index i = 0; i < generators; ++i) {
        for (Index b = 1; b < r; ++b) y(i * (r - 1) + b - 1, col) = z(i * r + b, col);
        if (torsion[i] < 0) {
          if (c(i, col) != 0) throw ConsistencyError("vector outside the kernel");
        } else {
          if (c(i, col) % orders[i] != 0) throw ConsistencyError("vector outside the kernel");
          y(torsion[i], col) = c(i, col) / orders[i];
        }
      }
    }
    return y;
  }
};

}  // namespace

Resolution relative_resolution(const TruncModule& m, unsigned length) {
  const auto& ring = m.ring_ptr();
  Resolution res;
  res.mode = ResolutionMode::relative;

  // The current module X_p as Z^N / L with actions, embedded in the
  // coordinates of the previous term by `embed`.
  IntMatrix relations = m.relations();
  std::vector<IntMatrix> actions = actions_of(m);
  IntMatrix embed = IntMatrix::Identity(m.rank(), m.rank());

  for (unsigned p = 0;; ++p) {
    const Index n = embed.cols();
    // U(X_p) from the Smith form of its relations, unit factors dropped.
    const auto snf = smith_normal_form(lattice_basis(relations));
    const IntMatrix lift = unimodular_inverse(snf.U);
    std::vector<Index> components;
    std::vector<Integer> orders;
    for (Index i = 0; i < n; ++i) {
      const Integer d = i < snf.rank ? snf.S(i, i) : Integer(0);
      if (d == 1) continue;
      components.push_back(i);
      orders.push_back(d);
    }
    const Index u = static_cast<Index>(components.size());
    guard_size(u * ring->rank(), p);
    IntMatrix coords(u, n), lifts(n, u), group_relations = IntMatrix::Zero(u, 0);
    for (Index i = 0; i < u; ++i) {
      coords.row(i) = snf.U.row(components[i]);
      lifts.col(i) = lift.col(components[i]);
      if (orders[i] != 0) {
        group_relations.conservativeResize(u, group_relations.cols() + 1);
        group_relations.col(group_relations.cols() - 1) = IntVector::Unit(u, i) * orders[i];
      }
    }
    // The section x -> x (x) b_0 followed by the action is the identity on
    // U(X) coordinates.
    if (product(coords, lifts) != IntMatrix::Identity(u, u))
      throw ConsistencyError("stage " + std::to_string(p) + " of the relative resolution does not split");

    TruncModule term = TruncModule::extended(ring, group_relations);
    const IntMatrix map_x = act_on(actions, lifts);
    if (!spans(hcat(map_x, relations), IntMatrix::Identity(n, n)))
      throw ConsistencyError("relative resolution is not exact at stage " + std::to_string(p));
    const SplitKernel k(coords, actions, lifts, orders);
    if (!spans(relations, product(map_x, k.basis))) throw ConsistencyError("kernel basis leaves the kernel");
    res.maps.push_back(product(embed, map_x));
    res.terms.push_back(std::move(term));
    if (p == length) {
      res.top_kernel = k.basis;
      break;
    }

    // X_{p+1} = kernel / relations of E_p, in the coordinates of k.
    const TruncModule& e = res.terms.back();
    relations = k.coordinates(e.relations());
    actions.clear();
    for (unsigned b = 0; b < ring->rank(); ++b) actions.push_back(k.coordinates(product(e.action(b), k.basis)));
    embed = k.basis;
  }
  return res;
}

std::vector<AbelianGroup> tor(const TruncModule& m, unsigned s_max, ResolutionMode mode) {
  const Resolution res = mode == ResolutionMode::free ? free_resolution(m, s_max) : relative_resolution(m, s_max);
  return homology(res.tensor_augmentation(), s_max + 1);
}

std::vector<GradedGroup> tor(const Presentation& p, unsigned s_max, ResolutionMode mode, unsigned truncation) {
  p.validate();
  const unsigned d = truncation == 0 ? p.truncation : truncation;
  if (p.max_index() > d)
    throw MalformedPresentation("presentation uses b" + std::to_string(p.max_index()) + " above truncation " +
                                std::to_string(d));
  auto ring = std::make_shared<const TruncRing>(d);
  std::vector<GradedGroup> out(s_max + 1);
  for (int parity = 0; parity < 2; ++parity) {
    const auto groups = tor(TruncModule::from_presentation(ring, p, parity), s_max, mode);
    for (unsigned s = 0; s <= s_max; ++s) out[s][parity] = groups[s];
  }
  return out;
}

}  // namespace tk
