// Resolutions over the truncated ring and Tor against the augmentation
// module Z (b_0, b_1 acting as 1, b_{>=2} as 0).
#pragma once

#include "tk/cp_ring.hpp"
#include "tk/graded_group.hpp"
#include "tk/presentation.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace tk {

/// A module over Lambda_D = TruncRing(D), given by its underlying group
/// Z^N / L (L spanned by the columns of `relations`) and the matrices of
/// b_0..b_D on Z^N. Modules of the form F (x)_Z Lambda (free or extended)
/// use coordinate (i, b) at index i * (D+1) + b.
class TruncModule {
 public:
  TruncModule(std::shared_ptr<const TruncRing> ring, IntMatrix relations, std::vector<IntMatrix> actions,
              IntMatrix preferred_generators = {});

  /// Lambda^n.
  static TruncModule free(std::shared_ptr<const TruncRing> ring, Index n);
  /// (Z^n / span(group_relations)) (x)_Z Lambda with Lambda acting on the
  /// right factor.
  static TruncModule extended(std::shared_ptr<const TruncRing> ring, const IntMatrix& group_relations);
  /// The parity block of a presentation: Lambda^a modulo the Lambda-span
  /// of that parity's relation rows.
  static TruncModule from_presentation(std::shared_ptr<const TruncRing> ring, const Presentation& p, int parity);

  const TruncRing& ring() const { return *ring_; }
  const std::shared_ptr<const TruncRing>& ring_ptr() const { return ring_; }
  Index rank() const { return static_cast<Index>(actions_.empty() ? 0 : actions_.front().rows()); }
  const IntMatrix& relations() const { return relations_; }
  const IntMatrix& action(unsigned k) const { return actions_.at(k); }
  /// Elements tried first when choosing ring generators.
  const IntMatrix& preferred_generators() const { return preferred_; }

  /// Underlying abelian group.
  AbelianGroup group() const { return AbelianGroup::cokernel(relations_); }

 private:
  std::shared_ptr<const TruncRing> ring_;
  IntMatrix relations_;
  std::vector<IntMatrix> actions_;
  IntMatrix preferred_;
};

/// Matrix of b_k on Lambda^n.
IntMatrix free_action(const TruncRing& ring, Index n, unsigned k);

/// Z-linearization of the Lambda-map Lambda^c -> Lambda^r sending e_j to
/// column j of `images` (an (r(D+1)) x c matrix): column (j, b) is b_b * images_j.
IntMatrix linearize(const TruncRing& ring, const IntMatrix& images);

/// Z-basis of the kernel of a map between free modules, as columns in
/// Z^{c(D+1)}. A Z-generating set of a submodule also generates it over
/// the ring.
IntMatrix kernel(const TruncRing& ring, const IntMatrix& images);

/// Chain groups C_s = Z^{n_s} / D_s with differentials d_s : C_s -> C_{s-1}.
struct ChainComplex {
  std::vector<IntMatrix> relations;   // D_s, columns in Z^{n_s}
  std::vector<IntMatrix> boundaries;  // boundaries[s - 1] = d_s
  Index length() const { return static_cast<Index>(relations.size()); }
  /// NotAComplex unless d_{s-1} d_s and d_s(D_s) land in D_{s-2}, D_{s-1}.
  void check() const;
};

/// H_s = {x : d_s x in D_{s-1}} / (im d_{s+1} + D_s) for s = 0..degrees-1
/// (every degree by default).
std::vector<AbelianGroup> homology(const ChainComplex& c, std::size_t degrees = SIZE_MAX);

enum class ResolutionMode { free, relative };

/// E_s -> ... -> E_0 -> M with every E_s of the form F_s (x)_Z Lambda.
struct Resolution {
  ResolutionMode mode = ResolutionMode::free;
  std::vector<TruncModule> terms;
  /// maps[0] : E_0 -> M, maps[s] : E_s -> E_{s-1}, in underlying coordinates.
  std::vector<IntMatrix> maps;
  /// Z-basis of ker(maps.back()) modulo the relations of the codomain;
  /// its image under the next differential.
  IntMatrix top_kernel;

  /// Number of ring generators of E_s.
  Index generators(std::size_t s) const;
  /// The complex E_s (x)_Lambda Z for s = 0..length, with one extra
  /// degree carrying the image of the next differential.
  ChainComplex tensor_augmentation() const;
};

/// Free resolution through E_length, exact at every stage (checked).
Resolution free_resolution(const TruncModule& m, unsigned length);
/// Resolution by extended modules U(X) (x)_Z Lambda, starting from the
/// split surjection m (x) lambda -> lambda m (checked at stage 0).
Resolution relative_resolution(const TruncModule& m, unsigned length);

/// Tor_s(M, Z) for s = 0..s_max.
std::vector<AbelianGroup> tor(const TruncModule& m, unsigned s_max, ResolutionMode mode);
/// Per parity, over Lambda_D with D = truncation (the presentation's own
/// truncation when 0). MalformedPresentation when D is below an index used.
std::vector<GradedGroup> tor(const Presentation& p, unsigned s_max, ResolutionMode mode, unsigned truncation = 0);

}  // namespace tk
