#include "coltri/homology.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "coltri/residues.hpp"

namespace coltri {

// ---------------------------------------------------------------------------------------------
// Ranks

namespace {

using ModColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1u) result = result * base % p;
    base = base * base % p;
    exp >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

// col <- col - factor * pivot   (mod p)
void axpy_mod(ModColumn& col, const ModColumn& pivot, std::uint32_t factor, std::uint32_t p) {
  ModColumn out;
  out.reserve(col.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < col.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
      out.push_back(col[i++]);
    } else if (i == col.size() || pivot[j].first < col[i].first) {
      const auto v = static_cast<std::uint32_t>((p - static_cast<std::uint64_t>(factor) * pivot[j].second % p) % p);
      if (v != 0) out.emplace_back(pivot[j].first, v);
      ++j;
    } else {
      const auto sub = static_cast<std::uint64_t>(factor) * pivot[j].second % p;
      const auto v = static_cast<std::uint32_t>((col[i].second + p - sub) % p);
      if (v != 0) out.emplace_back(col[i].first, v);
      ++i;
      ++j;
    }
  }
  col.swap(out);
}

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  // Column reduction keyed by the lowest (largest-index) nonzero row.
  std::vector<ModColumn> pivots(m.rows);
  std::vector<bool> has_pivot(m.rows, false);
  std::size_t rank = 0;
  for (const auto& source : m.columns) {
    ModColumn col;
    col.reserve(source.size());
    for (const auto& [row, value] : source) {
      const long long v = ((static_cast<long long>(value) % p) + p) % p;
      if (v != 0) col.emplace_back(row, static_cast<std::uint32_t>(v));
    }
    while (!col.empty()) {
      const auto low = col.back().first;
      if (!has_pivot[low]) {
        // normalise so the pivot entry is 1
        const auto inv = pow_mod(col.back().second, p - 2, p);
        for (auto& entry : col) {
          entry.second = static_cast<std::uint32_t>(static_cast<std::uint64_t>(entry.second) * inv % p);
        }
        pivots[low] = std::move(col);
        has_pivot[low] = true;
        ++rank;
        break;
      }
      axpy_mod(col, pivots[low], col.back().second, p);
    }
  }
  return rank;
}

namespace {

using IntColumn = std::vector<std::pair<std::uint32_t, mpz_class>>;

// col <- a * col - b * pivot, then divide by the content.
void combine_exact(IntColumn& col, const IntColumn& pivot, const mpz_class& a, const mpz_class& b) {
  IntColumn out;
  out.reserve(col.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < col.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
      out.emplace_back(col[i].first, a * col[i].second);
      ++i;
    } else if (i == col.size() || pivot[j].first < col[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      mpz_class v = a * col[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(col[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  mpz_class content = 0;
  for (const auto& entry : out) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), entry.second.get_mpz_t());
    if (content == 1) break;
  }
  if (content > 1) {
    for (auto& entry : out) mpz_divexact(entry.second.get_mpz_t(), entry.second.get_mpz_t(), content.get_mpz_t());
  }
  col.swap(out);
}

}  // namespace

std::size_t rank_exact(const SparseMatrix& m) {
  std::vector<IntColumn> pivots(m.rows);
  std::vector<bool> has_pivot(m.rows, false);
  std::size_t rank = 0;
  for (const auto& source : m.columns) {
    IntColumn col;
    col.reserve(source.size());
    for (const auto& [row, value] : source) {
      if (value != 0) col.emplace_back(row, mpz_class(value));
    }
    while (!col.empty()) {
      const auto low = col.back().first;
      if (!has_pivot[low]) {
        pivots[low] = std::move(col);
        has_pivot[low] = true;
        ++rank;
        break;
      }
      const auto& pivot = pivots[low];
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), col.back().second.get_mpz_t(), pivot.back().second.get_mpz_t());
      const mpz_class a = pivot.back().second / g;
      const mpz_class b = col.back().second / g;
      combine_exact(col, pivot, a, b);
    }
  }
  return rank;
}

// ---------------------------------------------------------------------------------------------
// Order complex

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Strictly increasing chains J_1 < J_2 < ... of proper subsets of `universe`.
void chains_from(const std::vector<ColourSet>& proper, std::vector<ColourSet>& current,
                 std::vector<std::vector<ColourSet>>& out) {
  out.push_back(current);
  for (ColourSet next : proper) {
    if (next != current.back() && current.back().subset_of(next)) {
      current.push_back(next);
      chains_from(proper, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

OrderComplex OrderComplex::build(const ColourfulGraph& g, ColourSet colours,
                                 std::optional<std::span<const Vertex>> component) {
  if (colours.empty() || !colours.within(g.colour_count())) {
    throw InvalidColourSet("order complex needs a non-empty colour set within [1.." +
                           std::to_string(g.colour_count()) + "]");
  }
  std::vector<bool> inside(g.order(), !component.has_value());
  if (component) {
    const auto top = residues(g, colours);
    if (component->empty()) throw NotAComponent("empty vertex set");
    const auto idx = top.component_of.at(component->front());
    std::vector<Vertex> sorted(component->begin(), component->end());
    std::sort(sorted.begin(), sorted.end());
    if (top.components[idx] != sorted) throw NotAComponent("not a component of G_" + colours.to_string());
    for (Vertex v : sorted) inside[v] = true;
  }

  std::vector<ColourSet> proper;
  for (ColourSet j : all_subsets(colours)) {
    if (j != colours) proper.push_back(j);
  }
  // residues for every proper subset, keyed by bitmask
  std::unordered_map<std::uint32_t, ResiduePartition> parts;
  for (ColourSet j : proper) parts.emplace(j.bits(), residues(g, j));

  OrderComplex out;
  for (ColourSet j : proper) {
    const auto& part = parts.at(j.bits());
    for (std::uint32_t c = 0; c < part.count(); ++c) {
      const Vertex v = part.components[c].front();
      if (inside[v]) out.cells_.push_back({j, c, v});
    }
  }
  std::sort(out.cells_.begin(), out.cells_.end(), [](const PosetCell& a, const PosetCell& b) {
    if (a.colours.size() != b.colours.size()) return a.colours.size() < b.colours.size();
    if (a.min_vertex != b.min_vertex) return a.min_vertex < b.min_vertex;
    return a.colours.bits() < b.colours.bits();
  });
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> cell_id;
  for (std::uint32_t i = 0; i < out.cells_.size(); ++i) {
    cell_id[{out.cells_[i].colours.bits(), out.cells_[i].component}] = i;
  }

  std::vector<std::vector<ColourSet>> chains;
  for (ColourSet start : proper) {
    std::vector<ColourSet> current{start};
    chains_from(proper, current, chains);
  }

  const int top_dim = colours.size() - 1;
  out.simplices_.assign(static_cast<std::size_t>(top_dim + 1), {});
  for (const auto& chain : chains) {
    const auto& first = parts.at(chain.front().bits());
    for (std::uint32_t c = 0; c < first.count(); ++c) {
      const Vertex v = first.components[c].front();
      if (!inside[v]) continue;
      std::vector<std::uint32_t> simplex;
      simplex.reserve(chain.size());
      for (ColourSet j : chain) {
        const auto comp = parts.at(j.bits()).component_of[v];
        simplex.push_back(cell_id.at({j.bits(), comp}));
      }
      // |J| strictly increases along the chain, hence so do the element ids.
      out.simplices_[chain.size() - 1].push_back(std::move(simplex));
    }
  }
  for (auto& level : out.simplices_) std::sort(level.begin(), level.end());

  for (int k = 1; k <= top_dim; ++k) {
    const auto& faces = out.simplices_[static_cast<std::size_t>(k - 1)];
    const auto& cofaces = out.simplices_[static_cast<std::size_t>(k)];
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash> index;
    index.reserve(faces.size());
    for (std::uint32_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);

    SparseMatrix m;
    m.rows = faces.size();
    m.cols = cofaces.size();
    m.columns.resize(cofaces.size());
    std::vector<std::uint32_t> face;
    for (std::size_t s = 0; s < cofaces.size(); ++s) {
      auto& column = m.columns[s];
      for (std::size_t drop = 0; drop < cofaces[s].size(); ++drop) {
        face.clear();
        for (std::size_t t = 0; t < cofaces[s].size(); ++t) {
          if (t != drop) face.push_back(cofaces[s][t]);
        }
        column.emplace_back(index.at(face), drop % 2 == 0 ? 1 : -1);
      }
      std::sort(column.begin(), column.end());
    }
    out.boundaries_.push_back(std::move(m));
  }
  return out;
}

bool OrderComplex::boundary_squared_zero() const {
  for (std::size_t k = 1; k < boundaries_.size(); ++k) {
    const auto& lower = boundaries_[k - 1];  // d_k
    const auto& upper = boundaries_[k];      // d_{k+1}
    std::unordered_map<std::uint32_t, long long> acc;
    for (const auto& column : upper.columns) {
      acc.clear();
      for (const auto& [row, value] : column) {
        for (const auto& [row2, value2] : lower.columns[row]) {
          acc[row2] += static_cast<long long>(value) * value2;
        }
      }
      for (const auto& [row, value] : acc) {
        if (value != 0) return false;
      }
    }
  }
  return true;
}

long long OrderComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < simplices_.size(); ++k) {
    const auto count = static_cast<long long>(simplices_[k].size());
    chi += k % 2 == 0 ? count : -count;
  }
  return chi;
}

// ---------------------------------------------------------------------------------------------
// Betti numbers

long long BettiVector::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    const auto b = static_cast<long long>(betti[k]);
    chi += k % 2 == 0 ? b : -b;
  }
  return chi;
}

bool BettiVector::is_sphere(int dim) const {
  if (dim < 0 || betti.size() != static_cast<std::size_t>(dim + 1)) return false;
  if (dim == 0) return betti[0] == 2;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    const std::size_t expected = (k == 0 || k == betti.size() - 1) ? 1 : 0;
    if (betti[k] != expected) return false;
  }
  return true;
}

std::string BettiVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (k != 0) out << ',';
    out << betti[k];
  }
  out << ')';
  return out.str();
}

BettiVector betti_numbers(const OrderComplex& complex, RankMethod method) {
  if (!complex.boundary_squared_zero()) throw Error("boundary of boundary is not zero");
  const int top = complex.dimension();
  // rank[k] = rank of d_k, k = 0..top+1 with d_0 = d_{top+1} = 0
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  for (int k = 1; k <= top; ++k) rank[static_cast<std::size_t>(k)] = rank_mod_p(complex.boundary(k));

  auto betti_at = [&](int k) {
    return complex.simplex_count(k) - rank[static_cast<std::size_t>(k)] -
           rank[static_cast<std::size_t>(k + 1)];
  };

  if (method == RankMethod::Exact) {
    // The mod-p rank of d_k can only undershoot the rational one; when b_{k-1} or b_k
    // (mod p) is zero the rational rank cannot be larger, so only the other maps need redoing.
    std::vector<int> redo;
    for (int k = 2; k <= top; ++k) {
      if (betti_at(k - 1) != 0 && betti_at(k) != 0) redo.push_back(k);
    }
    for (int k : redo) rank[static_cast<std::size_t>(k)] = rank_exact(complex.boundary(k));
  }

  BettiVector out;
  for (int k = 0; k <= top; ++k) out.betti.push_back(betti_at(k));
  return out;
}

BettiVector betti_numbers(const ColourfulGraph& g, ColourSet colours, RankMethod method) {
  return betti_numbers(OrderComplex::build(g, colours), method);
}

}  // namespace coltri
