#include "edgeideal/monomial_ideal.hpp"

#include <algorithm>

#include "edgeideal/error.hpp"

namespace edgeideal {

namespace {

bool generator_less(VertexSet a, VertexSet b) {
  const int da = popcount(a);
  const int db = popcount(b);
  if (da != db) return da < db;
  return members(a) < members(b);
}

bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

}  // namespace

std::vector<VertexSet> minimalize(std::vector<VertexSet> gens) {
  std::sort(gens.begin(), gens.end(), generator_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<VertexSet> out;
  for (VertexSet g : gens) {
    const bool redundant = std::any_of(out.begin(), out.end(), [&](VertexSet h) { return subset_of(h, g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

SquareFreeMonomialIdeal::SquareFreeMonomialIdeal(std::vector<std::string> variables, std::vector<VertexSet> generators)
    : vars_(std::move(variables)) {
  if (vars_.size() > static_cast<std::size_t>(kMaxVertices)) fail(ErrorKind::TooLarge, "at most 64 variables");
  const VertexSet all = full_set(static_cast<int>(vars_.size()));
  for (VertexSet g : generators) {
    if (!subset_of(g, all)) fail(ErrorKind::UnknownLabel, "generator uses a variable outside the ring");
  }
  gens_ = minimalize(std::move(generators));
}

bool SquareFreeMonomialIdeal::is_face(VertexSet s) const {
  return std::none_of(gens_.begin(), gens_.end(), [&](VertexSet g) { return subset_of(g, s); });
}

SquareFreeMonomialIdeal edge_ideal(const MatchedBipartiteGraph& mg) {
  std::vector<std::string> vars;
  for (int i = 0; i < mg.c(); ++i) {
    vars.push_back(mg.x_labels()[static_cast<std::size_t>(i)]);
    vars.push_back(mg.y_labels()[static_cast<std::size_t>(i)]);
  }
  std::vector<VertexSet> gens;
  for (const Edge& e : mg.edges()) gens.push_back(bit(x_var(e.left)) | bit(y_var(e.right)));
  return {std::move(vars), std::move(gens)};
}

SquareFreeMonomialIdeal edge_ideal(const BipartiteGraph& g) {
  std::vector<std::string> vars = g.left_labels();
  vars.insert(vars.end(), g.right_labels().begin(), g.right_labels().end());
  std::vector<VertexSet> gens;
  for (const Edge& e : g.edges()) gens.push_back(bit(e.left) | bit(g.left_count() + e.right));
  return {std::move(vars), std::move(gens)};
}

SquareFreeMonomialIdeal alexander_dual(const SquareFreeMonomialIdeal& ideal, std::size_t cap) {
  if (ideal.is_unit()) return {ideal.variables(), {}};
  // the intersection over no primes is the unit ideal
  std::vector<VertexSet> transversals{0};
  for (VertexSet f : ideal.generators()) {
    std::vector<VertexSet> next;
    for (VertexSet t : transversals) {
      if ((t & f) != 0) {
        next.push_back(t);
        continue;
      }
      for (int v : members(f)) next.push_back(t | bit(v));
    }
    transversals = minimalize(std::move(next));
    if (transversals.size() > cap) fail(ErrorKind::TooLarge, "Alexander dual exceeds " + std::to_string(cap) + " generators");
  }
  return {ideal.variables(), std::move(transversals)};
}

SquareFreeMonomialIdeal colon(const SquareFreeMonomialIdeal& ideal, VertexSet m) {
  std::vector<VertexSet> gens;
  for (VertexSet g : ideal.generators()) gens.push_back(g & ~m);
  return {ideal.variables(), std::move(gens)};
}

std::string to_string(const SquareFreeMonomialIdeal& ideal) {
  std::string out = "(";
  bool first = true;
  for (VertexSet g : ideal.generators()) {
    if (!first) out += ", ";
    first = false;
    if (g == 0) {
      out += "1";
      continue;
    }
    bool first_var = true;
    for (int v : members(g)) {
      if (!first_var) out += "*";
      first_var = false;
      out += ideal.variables()[static_cast<std::size_t>(v)];
    }
  }
  return out + ")";
}

}  // namespace edgeideal
