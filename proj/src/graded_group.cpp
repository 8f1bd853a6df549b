#include "tk/graded_group.hpp"

#include "tk/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace tk {

namespace {

/// Z^n / span(columns) loses nothing but a trivial summand when a row with
/// a unit entry is used to clear that entry's column by row operations and
/// then dropped. Returns the surviving rows and nonzero columns.
IntMatrix peel_units(const IntMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  std::vector<std::map<Index, Integer>> rows(static_cast<std::size_t>(m));
  std::vector<std::set<Index>> cols(static_cast<std::size_t>(n));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      if (a(i, j) != 0) {
        rows[i].emplace(j, a(i, j));
        cols[j].insert(i);
      }
  std::vector<bool> live(static_cast<std::size_t>(m), true);
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<Index> order;
    for (Index i = 0; i < m; ++i)
      if (live[i] && !rows[i].empty()) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return rows[x].size() < rows[y].size(); });
    for (Index i : order) {
      Index pivot = -1;
      for (const auto& [j, v] : rows[i])
        if ((v == 1 || v == -1) && (pivot < 0 || cols[j].size() < cols[pivot].size())) pivot = j;
      if (pivot < 0) continue;
      progress = true;
      const Integer unit = rows[i].at(pivot);
      const std::vector<Index> targets(cols[pivot].begin(), cols[pivot].end());
      for (Index k : targets) {
        if (k == i) continue;
        const Integer f = rows[k].at(pivot) * unit;
        for (const auto& [c, v] : rows[i]) {
          auto [it, fresh] = rows[k].try_emplace(c, 0);
          it->second -= f * v;
          if (it->second == 0) {
            rows[k].erase(it);
            cols[c].erase(k);
          } else if (fresh) {
            cols[c].insert(k);
          }
        }
      }
      for (const auto& [c, v] : rows[i]) cols[c].erase(i);
      rows[i].clear();
      live[i] = false;
    }
  }
  std::vector<Index> keep_rows, keep_cols;
  for (Index i = 0; i < m; ++i)
    if (live[i]) keep_rows.push_back(i);
  for (Index j = 0; j < n; ++j)
    if (!cols[j].empty()) keep_cols.push_back(j);
  IntMatrix out = IntMatrix::Zero(static_cast<Index>(keep_rows.size()), static_cast<Index>(keep_cols.size()));
  for (std::size_t r = 0; r < keep_rows.size(); ++r)
    for (std::size_t c = 0; c < keep_cols.size(); ++c) {
      const auto& row = rows[keep_rows[r]];
      const auto it = row.find(keep_cols[c]);
      if (it != row.end()) out(static_cast<Index>(r), static_cast<Index>(c)) = it->second;
    }
  return out;
}

}  // namespace

AbelianGroup AbelianGroup::cokernel(const IntMatrix& relations) {
  const IntMatrix core = peel_units(relations);
  // Only the span matters; shrinking to a basis first keeps the Smith
  // transforms square and small.
  const auto snf = smith_normal_form(lattice_basis(core));
  std::vector<Integer> nonzero;
  for (const auto& d : snf.diagonal())
    if (d != 0) nonzero.push_back(d);
  return from_diagonal(static_cast<std::size_t>(core.rows()) - nonzero.size(), nonzero);
}

AbelianGroup AbelianGroup::from_diagonal(std::size_t free_rank, const std::vector<Integer>& diagonal) {
  AbelianGroup g;
  g.free_rank = free_rank;
  for (const auto& raw : diagonal) {
    const Integer d = abs(raw);
    if (d == 0) {
      ++g.free_rank;
    } else if (d != 1) {
      if (!g.torsion.empty() && d % g.torsion.back() != 0)
        throw ConsistencyError("invariant factors " + g.torsion.back().str() + ", " + d.str() + " do not divide");
      g.torsion.push_back(d);
    }
  }
  return g;
}

std::string AbelianGroup::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
  }
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (free_rank > 0 || i > 0) os << " + ";
    os << "Z/" << torsion[i];
  }
  return os.str();
}

std::string GradedGroup::str() const { return "parity 0: " + parity0.str() + ", parity 1: " + parity1.str(); }

nlohmann::ordered_json to_json(const AbelianGroup& g) {
  nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
  const Integer lo = std::numeric_limits<std::int64_t>::min(), hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& d : g.torsion) {
    if (d >= lo && d <= hi)
      torsion.push_back(d.convert_to<std::int64_t>());
    else
      torsion.push_back(d.str());
  }
  return {{"free_rank", g.free_rank}, {"torsion", torsion}};
}

nlohmann::ordered_json to_json(const GradedGroup& g) {
  return {{"parity0", to_json(g.parity0)}, {"parity1", to_json(g.parity1)}};
}

}  // namespace tk
