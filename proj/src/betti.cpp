#include "edgeideal/betti.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>
#include <omp.h>

#include "edgeideal/digraph.hpp"
#include "edgeideal/error.hpp"

namespace edgeideal {

std::int64_t BettiTable::at(int l, VertexSet sigma) const {
  const auto it = entries.find({l, sigma});
  return it == entries.end() ? 0 : it->second;
}

std::map<std::pair<int, int>, std::int64_t> BettiTable::graded() const {
  std::map<std::pair<int, int>, std::int64_t> out;
  for (const auto& [key, value] : entries) out[{key.first, popcount(key.second)}] += value;
  return out;
}

int BettiTable::regularity() const {
  int best = -1;
  for (const auto& [key, value] : entries) best = std::max(best, popcount(key.second) - key.first);
  return best;
}

int BettiTable::projective_dimension() const {
  int best = -1;
  for (const auto& [key, value] : entries) best = std::max(best, key.first);
  return best;
}

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

boost::multiprecision::cpp_int checked_mul(const boost::multiprecision::cpp_int& a,
                                           const boost::multiprecision::cpp_int& b) {
  return a * b;
}
boost::multiprecision::cpp_int checked_sub(const boost::multiprecision::cpp_int& a,
                                           const boost::multiprecision::cpp_int& b) {
  return a - b;
}
boost::multiprecision::cpp_int gcd_of(const boost::multiprecision::cpp_int& a, const boost::multiprecision::cpp_int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Fraction-free elimination; each updated row is divided by its content.
template <class Int>
int integer_rank(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < rows.size(); ++col) {
    std::size_t pivot = top;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    const Int a = rows[top][col];
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      const Int b = rows[r][col];
      if (b == 0) continue;
      Int content = 0;
      for (std::size_t k = col; k < cols; ++k) {
        rows[r][k] = checked_sub(checked_mul(a, rows[r][k]), checked_mul(b, rows[top][k]));
        content = gcd_of(content, rows[r][k]);
      }
      if (content > 1) {
        for (std::size_t k = col; k < cols; ++k) rows[r][k] /= content;
      }
    }
    ++top;
    ++rank;
  }
  return rank;
}

int prime_rank(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (auto& row : rows) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1;
    std::int64_t e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < rows.size(); ++col) {
    std::size_t pivot = top;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    const std::int64_t inv = inverse(rows[top][col]);
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      const std::int64_t f = rows[r][col] * inv % p;
      if (f == 0) continue;
      for (std::size_t k = col; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[top][k]) % p + p) % p;
    }
    ++top;
    ++rank;
  }
  return rank;
}

}  // namespace

int matrix_rank(std::vector<std::vector<std::int64_t>> rows, const Field& field) {
  if (field.kind == Field::Kind::Prime) return prime_rank(std::move(rows), field.p);
  try {
    return integer_rank(rows);
  } catch (const Overflow&) {
    std::vector<std::vector<boost::multiprecision::cpp_int>> big;
    for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
    return integer_rank(std::move(big));
  }
}

std::vector<std::int64_t> betti_at(const SquareFreeMonomialIdeal& ideal, VertexSet sigma, const Field& field) {
  const int n = popcount(sigma);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n + 1), 0);
  if (ideal.is_unit()) return out;
  if (sigma == 0) {
    out[0] = 1;
    return out;
  }
  std::vector<VertexSet> inside;
  VertexSet covered = 0;
  for (VertexSet g : ideal.generators()) {
    if ((g & ~sigma) == 0) {
      inside.push_back(g);
      covered |= g;
    }
  }
  // a vertex of sigma in no generator is a cone point
  if ((sigma & ~covered) != 0) return out;

  const std::vector<int> verts = members(sigma);
  std::vector<std::vector<VertexSet>> faces(static_cast<std::size_t>(n + 1));
  auto extend = [&](auto&& self, VertexSet face, std::size_t from) -> void {
    faces[static_cast<std::size_t>(popcount(face))].push_back(face);
    for (std::size_t k = from; k < verts.size(); ++k) {
      const VertexSet next = face | bit(verts[k]);
      const bool ok = std::none_of(inside.begin(), inside.end(), [&](VertexSet g) {
        return contains(g, verts[k]) && (g & ~next) == 0;
      });
      if (ok) self(self, next, k + 1);
    }
  };
  extend(extend, 0, 0);
  for (auto& level : faces) std::sort(level.begin(), level.end());

  // rank[s]: boundary from faces of size s to faces of size s - 1
  std::vector<int> rank(static_cast<std::size_t>(n + 2), 0);
  for (int s = 1; s <= n; ++s) {
    const auto& rows_faces = faces[static_cast<std::size_t>(s)];
    const auto& col_faces = faces[static_cast<std::size_t>(s - 1)];
    if (rows_faces.empty()) continue;
    std::vector<std::vector<std::int64_t>> m(rows_faces.size(), std::vector<std::int64_t>(col_faces.size(), 0));
    for (std::size_t r = 0; r < rows_faces.size(); ++r) {
      int pos = 0;
      for (int v : members(rows_faces[r])) {
        const VertexSet facet = rows_faces[r] & ~bit(v);
        const auto it = std::lower_bound(col_faces.begin(), col_faces.end(), facet);
        ensure(it != col_faces.end() && *it == facet, "complex is closed under taking subsets");
        m[r][static_cast<std::size_t>(it - col_faces.begin())] = pos % 2 == 0 ? 1 : -1;
        ++pos;
      }
    }
    rank[static_cast<std::size_t>(s)] = matrix_rank(std::move(m), field);
  }

  std::int64_t euler_faces = 0;
  std::int64_t euler_homology = 0;
  for (int s = 0; s <= n; ++s) {
    const auto f = static_cast<std::int64_t>(faces[static_cast<std::size_t>(s)].size());
    const std::int64_t h = f - rank[static_cast<std::size_t>(s)] - rank[static_cast<std::size_t>(s + 1)];
    ensure(h >= 0, "homology dimensions are non-negative");
    const std::int64_t sign = s % 2 == 0 ? 1 : -1;
    euler_faces += sign * f;
    euler_homology += sign * h;
    // reduced homology in dimension s - 1 gives beta_{n - s}
    out[static_cast<std::size_t>(n - s)] = h;
  }
  ensure(euler_faces == euler_homology, "Euler characteristic of the restriction");
  return out;
}

namespace {

void check_cap(const SquareFreeMonomialIdeal& ideal, int cap) {
  const int limit = std::min(cap, kMaxBettiVariables);
  if (ideal.variable_count() > limit) {
    fail(ErrorKind::TooLarge, "Betti table over " + std::to_string(ideal.variable_count()) +
                                  " variables exceeds cap " + std::to_string(limit));
  }
}

BettiTable assemble(const SquareFreeMonomialIdeal& ideal, const Field& field,
                    const std::vector<std::vector<std::int64_t>>& per_sigma) {
  BettiTable t;
  t.variable_count = ideal.variable_count();
  t.field = field;
  for (std::size_t sigma = 0; sigma < per_sigma.size(); ++sigma) {
    for (std::size_t l = 0; l < per_sigma[sigma].size(); ++l) {
      if (per_sigma[sigma][l] != 0) t.entries[{static_cast<int>(l), static_cast<VertexSet>(sigma)}] = per_sigma[sigma][l];
    }
  }
  return t;
}

}  // namespace

BettiTable betti_table_serial(const SquareFreeMonomialIdeal& ideal, const Field& field, int cap) {
  check_cap(ideal, cap);
  const std::size_t total = std::size_t{1} << ideal.variable_count();
  std::vector<std::vector<std::int64_t>> per_sigma(total);
  for (std::size_t sigma = 0; sigma < total; ++sigma) per_sigma[sigma] = betti_at(ideal, sigma, field);
  return assemble(ideal, field, per_sigma);
}

BettiTable betti_table(const SquareFreeMonomialIdeal& ideal, const Field& field, int cap) {
  check_cap(ideal, cap);
  const auto total = static_cast<std::int64_t>(std::int64_t{1} << ideal.variable_count());
  std::vector<std::vector<std::int64_t>> per_sigma(static_cast<std::size_t>(total));
  bool failed = false;
  std::string message;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t sigma = 0; sigma < total; ++sigma) {
    try {
      per_sigma[static_cast<std::size_t>(sigma)] = betti_at(ideal, static_cast<VertexSet>(sigma), field);
    } catch (const std::exception& e) {
#pragma omp critical(edgeideal_betti_error)
      {
        failed = true;
        message = e.what();
      }
    }
  }
  ensure(!failed, "parallel Betti kernel: " + message);
  return assemble(ideal, field, per_sigma);
}

OracleInvariants oracle_invariants(const SquareFreeMonomialIdeal& ideal, const Field& field, int cap) {
  const BettiTable t = betti_table(ideal, field, cap);
  OracleInvariants out;
  out.regularity = t.regularity();
  out.projdim = t.projective_dimension();
  out.depth = ideal.variable_count() - out.projdim;
  return out;
}

namespace {

void require_proper_nonzero(const SquareFreeMonomialIdeal& ideal) {
  if (ideal.generators().empty() || ideal.is_unit()) fail(ErrorKind::Parse, "duality checks need a nonzero proper ideal");
}

}  // namespace

bool terai_check(const SquareFreeMonomialIdeal& ideal, const Field& field, int cap) {
  require_proper_nonzero(ideal);
  const int projdim = betti_table(ideal, field, cap).projective_dimension();
  const int dual_reg = betti_table(alexander_dual(ideal), field, cap).regularity() + 1;
  return projdim == dual_reg;
}

bool dual_betti_relation_check(const SquareFreeMonomialIdeal& ideal, const Field& field, int cap) {
  require_proper_nonzero(ideal);
  const BettiTable dual = betti_table(alexander_dual(ideal), field, cap);
  const int n = ideal.variable_count();
  const VertexSet all = full_set(n);
  for (VertexSet sigma = 0; sigma <= all; ++sigma) {
    const int size = popcount(sigma);
    const auto rhs = betti_at(colon(ideal, all & ~sigma), sigma, field);
    for (int l = 0; l <= size; ++l) {
      if (dual.at(l + 1, sigma) != rhs[static_cast<std::size_t>(size - l)]) return false;
    }
    if (sigma == all) break;
  }
  return true;
}

VertexSet dual_shape_multidegree(const MatchedBipartiteGraph& mg, VertexSet a, VertexSet b) {
  const auto reach = strict_reachability(build_digraph(mg));
  const VertexSet up = up_set(reach, a);
  VertexSet sigma = 0;
  for (int i = 0; i < mg.c(); ++i) sigma |= contains(up, i) ? bit(y_var(i)) : bit(x_var(i));
  for (int i : members(b)) sigma |= bit(x_var(i));
  return sigma;
}

bool dual_shape_check(const MatchedBipartiteGraph& mg, const Field& field, int cap) {
  if (classify(mg) != Classification::CohenMacaulay) fail(ErrorKind::NotCohenMacaulay, "dual shape needs a Cohen-Macaulay graph");
  const DirectedGraph d = build_digraph(mg);
  std::set<std::pair<int, VertexSet>> allowed;
  for_each_antichain(comparability_masks(d), [&](VertexSet a) {
    // every subset of an antichain
    for (VertexSet b = a;; b = (b - 1) & a) {
      allowed.insert({popcount(b), dual_shape_multidegree(mg, a, b)});
      if (b == 0) break;
    }
  });
  const BettiTable t = betti_table(alexander_dual(edge_ideal(mg)), field, cap);
  for (const auto& [key, value] : t.entries) {
    if (key.first == 0) continue;
    if (value != 1 || !allowed.contains({key.first - 1, key.second})) return false;
  }
  return true;
}

}  // namespace edgeideal
