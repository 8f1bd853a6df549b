#include "tk/twist.hpp"

#include "tk/cp_ring.hpp"

namespace tk {

std::array<IntMatrix, 2> base_change(const Presentation& p) {
  p.validate();
  std::array<std::vector<std::size_t>, 2> rows;     // generator indices
  std::array<std::vector<const Relation*>, 2> cols;
  std::vector<Index> position(p.generators.size());
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    auto& r = rows[p.generators[g].parity];
    position[g] = static_cast<Index>(r.size());
    r.push_back(g);
  }
  for (const auto& rel : p.relations) cols[p.parity(rel)].push_back(&rel);

  std::array<IntMatrix, 2> out;
  for (int parity = 0; parity < 2; ++parity) {
    IntMatrix& m = out[parity];
    m = IntMatrix::Zero(static_cast<Index>(rows[parity].size()), static_cast<Index>(cols[parity].size()));
    for (std::size_t j = 0; j < cols[parity].size(); ++j)
      for (const auto& [g, c] : *cols[parity][j]) m(position[g], static_cast<Index>(j)) = augment_hat(c).at_one();
  }
  return out;
}

GradedGroup twisted_k(const Presentation& p) {
  const auto blocks = base_change(p);
  return GradedGroup{AbelianGroup::cokernel(blocks[0]), AbelianGroup::cokernel(blocks[1])};
}

}  // namespace tk
