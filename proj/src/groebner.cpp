#include "edgeideal/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <set>

#include "edgeideal/error.hpp"
#include "edgeideal/monomial_ideal.hpp"

namespace edgeideal {

namespace {

struct PrimeOps {
  using T = std::uint32_t;
  std::uint32_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { return static_cast<T>((std::uint64_t{a} + b) % p); }
  T sub(T a, T b) const { return static_cast<T>((std::uint64_t{a} + p - b) % p); }
  T mul(T a, T b) const { return static_cast<T>(std::uint64_t{a} * b % p); }
  T inv(T a) const {
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint32_t e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<T>(result);
  }
  T from(const Rational& r) const {
    using boost::multiprecision::cpp_int;
    const cpp_int modulus = p;
    cpp_int num = boost::multiprecision::numerator(r) % modulus;
    cpp_int den = boost::multiprecision::denominator(r) % modulus;
    if (num < 0) num += modulus;
    if (den == 0) fail(ErrorKind::Parse, "coefficient denominator vanishes modulo " + std::to_string(p));
    return mul(num.convert_to<T>(), inv(den.convert_to<T>()));
  }
  Rational to_rational(T a) const { return Rational(a); }
};

struct RationalOps {
  using T = Rational;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  T from(const Rational& r) const { return r; }
  Rational to_rational(const T& a) const { return a; }
};

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                    std::chrono::duration<double>(seconds))) {}
  void check() {
    if (++ticks_ % 128 != 0) return;
    if (std::chrono::steady_clock::now() > end_) fail(ErrorKind::Timeout, "Groebner budget exhausted");
  }

 private:
  std::chrono::steady_clock::time_point end_;
  unsigned ticks_ = 0;
};

template <class Ops>
class Engine {
 public:
  using T = typename Ops::T;
  struct ETerm {
    Monomial mono;
    T coeff;
  };
  using Poly = std::vector<ETerm>;

  Engine(Ops ops, double budget) : ops_(ops), deadline_(budget) {}

  Poly convert(const Polynomial& p) const {
    Poly out;
    for (const auto& t : p.terms()) {
      T c = ops_.from(t.coeff);
      if (!ops_.is_zero(c)) out.push_back({t.mono, c});
    }
    return out;
  }

  Polynomial export_poly(const Poly& p, int nvars) const {
    std::vector<PolyTerm> terms;
    for (const auto& t : p) terms.push_back({ops_.to_rational(t.coeff), t.mono});
    return Polynomial::from_terms(nvars, std::move(terms));
  }

  void make_monic(Poly& p) const {
    const T inv = ops_.inv(p.front().coeff);
    for (auto& t : p) t.coeff = ops_.mul(t.coeff, inv);
  }

  // p[start..] - c * shift * g, g monic with g[0] cancelling p[start].
  Poly subtract(const Poly& p, std::size_t start, const T& c, const Monomial& shift, const Poly& g) const {
    Poly out;
    out.reserve(p.size() - start + g.size());
    std::size_t a = start + 1;
    std::size_t b = 1;
    while (a < p.size() || b < g.size()) {
      if (b == g.size()) {
        out.push_back(p[a++]);
        continue;
      }
      const Monomial m = g[b].mono * shift;
      const int cmp = a < p.size() ? compare(p[a].mono, m) : -1;
      if (cmp > 0) {
        out.push_back(p[a++]);
      } else if (cmp < 0) {
        out.push_back({m, ops_.sub(ops_.zero(), ops_.mul(c, g[b].coeff))});
        ++b;
      } else {
        T v = ops_.sub(p[a].coeff, ops_.mul(c, g[b].coeff));
        if (!ops_.is_zero(v)) out.push_back({m, std::move(v)});
        ++a;
        ++b;
      }
    }
    return out;
  }

  int find_reducer(const Monomial& m, const std::vector<Poly>& basis, int skip) const {
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == skip || basis[static_cast<std::size_t>(k)].empty()) continue;
      if (basis[static_cast<std::size_t>(k)].front().mono.divides(m)) return k;
    }
    return -1;
  }

  // Full reduction (leading and tail terms); `skip` excludes one basis index.
  Poly reduce(Poly p, const std::vector<Poly>& basis, int skip = -1) {
    Poly rem;
    std::size_t start = 0;
    while (start < p.size()) {
      deadline_.check();
      const int k = find_reducer(p[start].mono, basis, skip);
      if (k < 0) {
        rem.push_back(p[start]);
        ++start;
        continue;
      }
      const Poly& g = basis[static_cast<std::size_t>(k)];
      p = subtract(p, start, p[start].coeff, p[start].mono.quotient(g.front().mono), g);
      start = 0;
    }
    return rem;
  }

  Poly s_polynomial(const Poly& f, const Poly& g) const {
    const Monomial l = f.front().mono.lcm(g.front().mono);
    Poly lhs;
    const Monomial sf = l.quotient(f.front().mono);
    for (const auto& t : f) lhs.push_back({t.mono * sf, t.coeff});
    // lhs - 1 * (l / lm g) * g with both monic
    return subtract(lhs, 0, ops_.one(), l.quotient(g.front().mono), g);
  }

  std::vector<Poly> run(const std::vector<Poly>& input) {
    struct Pair {
      Monomial lcm;
      int i;
      int j;
    };
    // normal strategy: smallest lcm first, ties by newest index
    auto pair_less = [](const Pair& x, const Pair& y) {
      const int cmp = compare(x.lcm, y.lcm);
      if (cmp != 0) return cmp < 0;
      return std::pair(x.j, x.i) < std::pair(y.j, y.i);
    };
    std::vector<Poly> basis;
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<int, int>> open;

    bool unit = false;
    auto add = [&](Poly p) {
      make_monic(p);
      if (p.front().mono.degree == 0) unit = true;
      const int k = static_cast<int>(basis.size());
      basis.push_back(std::move(p));
      for (int i = 0; i < k; ++i) {
        queue.insert({lead(basis, i).lcm(lead(basis, k)), i, k});
        open.insert({i, k});
      }
    };
    for (const auto& p : input) {
      if (!p.empty() && !unit) add(p);
    }

    while (!queue.empty() && !unit) {
      deadline_.check();
      const Pair best = *queue.begin();
      queue.erase(queue.begin());
      const int i = best.i;
      const int j = best.j;
      open.erase({i, j});
      if (lead(basis, i).coprime(lead(basis, j))) continue;
      bool chain = false;
      for (int k = 0; k < static_cast<int>(basis.size()) && !chain; ++k) {
        if (k == i || k == j || !lead(basis, k).divides(best.lcm)) continue;
        chain = !open.contains(ordered(i, k)) && !open.contains(ordered(j, k));
      }
      if (chain) continue;
      Poly r = reduce(s_polynomial(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]), basis);
      if (!r.empty()) add(std::move(r));
    }

    if (unit) return {Poly{{Monomial::one(), ops_.one()}}};
    return finalize(std::move(basis));
  }

 private:
  static const Monomial& lead(const std::vector<Poly>& basis, int k) {
    return basis[static_cast<std::size_t>(k)].front().mono;
  }
  static std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair(a, b) : std::pair(b, a); }

  std::vector<Poly> finalize(std::vector<Poly> basis) {
    std::vector<Poly> minimal;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      bool redundant = false;
      for (std::size_t other = 0; other < basis.size() && !redundant; ++other) {
        if (other == k) continue;
        const Monomial& a = basis[other].front().mono;
        const Monomial& b = basis[k].front().mono;
        // equal leading monomials: keep the earliest
        redundant = a.divides(b) && (!(a == b) || other < k);
      }
      if (!redundant) minimal.push_back(basis[k]);
    }
    std::vector<Poly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Poly p = reduce(minimal[k], minimal, static_cast<int>(k));
      make_monic(p);
      reduced.push_back(std::move(p));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const Poly& a, const Poly& b) { return compare(a.front().mono, b.front().mono) < 0; });
    return reduced;
  }

  Ops ops_;
  Deadline deadline_;
};

int common_variable_count(const std::vector<Polynomial>& polys) {
  int n = 0;
  for (const auto& p : polys) n = std::max(n, p.variable_count());
  return n;
}

template <class Ops>
GroebnerBasis run_engine(Ops ops, const std::vector<Polynomial>& generators, const GroebnerOptions& opts) {
  Engine<Ops> engine(ops, opts.budget_seconds);
  std::vector<typename Engine<Ops>::Poly> input;
  for (const auto& g : generators) input.push_back(engine.convert(g));
  const int nvars = common_variable_count(generators);
  GroebnerBasis gb;
  gb.field = opts.field;
  for (const auto& p : engine.run(input)) gb.basis.push_back(engine.export_poly(p, nvars));
  return gb;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const GroebnerOptions& opts) {
  if (opts.field.kind == Field::Kind::Prime) return run_engine(PrimeOps{opts.field.p}, generators, opts);
  return run_engine(RationalOps{}, generators, opts);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  auto reduce_with = [&](auto ops) {
    Engine<decltype(ops)> engine(ops, kDefaultGroebnerBudget);
    std::vector<typename Engine<decltype(ops)>::Poly> basis;
    for (const auto& g : gb.basis) basis.push_back(engine.convert(g));
    return engine.export_poly(engine.reduce(engine.convert(f), basis), f.variable_count());
  };
  if (gb.field.kind == Field::Kind::Prime) return reduce_with(PrimeOps{gb.field.p});
  return reduce_with(RationalOps{});
}

bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& generators, const GroebnerOptions& opts) {
  std::vector<Polynomial> all = generators;
  all.push_back(f);
  const int n = common_variable_count(all);
  if (n + 1 > kMaxPolyVariables) fail(ErrorKind::TooLarge, "no room for the auxiliary variable");
  std::vector<Polynomial> extended;
  for (const auto& g : generators) extended.push_back(Polynomial::from_terms(n + 1, g.terms()));
  const Polynomial z = Polynomial::variable(n + 1, n);
  extended.push_back(Polynomial::constant(n + 1, 1) - z * Polynomial::from_terms(n + 1, f.terms()));
  return buchberger(extended, opts).is_unit();
}

std::vector<Polynomial> generator_polynomials(const MatchedBipartiteGraph& mg, const GeneratorSet& gs) {
  const int nvars = 2 * mg.c();
  std::vector<Polynomial> out;
  for (const auto* list : {&gs.g_list, &gs.h_list}) {
    for (const auto& terms : *list) {
      std::vector<PolyTerm> poly;
      for (const auto& t : terms) poly.push_back({1, Monomial::variable(x_var(t.left)) * Monomial::variable(y_var(t.right))});
      out.push_back(Polynomial::from_terms(nvars, std::move(poly)));
    }
  }
  return out;
}

const char* to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Member: return "member";
    case MembershipStatus::NotMember: return "not_member";
    case MembershipStatus::Timeout: return "timeout";
  }
  return "unknown";
}

bool VerificationReport::timed_out() const {
  return std::any_of(edges.begin(), edges.end(), [](const EdgeMembership& e) { return e.status == MembershipStatus::Timeout; });
}

bool VerificationReport::verified() const {
  return containment && std::all_of(edges.begin(), edges.end(), [](const EdgeMembership& e) {
           return e.status == MembershipStatus::Member;
         });
}

VerificationReport verify_arank_generators(const MatchedBipartiteGraph& mg, const GeneratorSet& gs,
                                           const GroebnerOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.field = opts.field;
  rep.containment = true;
  for (const auto* list : {&gs.g_list, &gs.h_list}) {
    for (const auto& terms : *list) {
      for (const auto& t : terms) rep.containment = rep.containment && mg.has_edge(t.left, t.right);
    }
  }
  const auto gens = generator_polynomials(mg, gs);
  const int nvars = 2 * mg.c();
  rep.edges.resize(mg.edges().size());
  const auto count = static_cast<std::int64_t>(mg.edges().size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) {
    const Edge e = mg.edges()[static_cast<std::size_t>(k)];
    auto& slot = rep.edges[static_cast<std::size_t>(k)];
    slot.edge = e;
    const auto t0 = std::chrono::steady_clock::now();
    const Polynomial f = Polynomial::monomial(nvars, 1, Monomial::variable(x_var(e.left)) * Monomial::variable(y_var(e.right)));
    try {
      slot.status = radical_membership(f, gens, opts) ? MembershipStatus::Member : MembershipStatus::NotMember;
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::Timeout) {
        slot.status = MembershipStatus::Timeout;
      } else {
#pragma omp critical(edgeideal_verify_error)
        failure = std::current_exception();
      }
    } catch (...) {
#pragma omp critical(edgeideal_verify_error)
      failure = std::current_exception();
    }
    slot.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  if (failure) std::rethrow_exception(failure);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace edgeideal
