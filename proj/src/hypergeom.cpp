#include "agmswarm/hypergeom.hpp"

#include <cmath>
#include <numbers>

#include "agmswarm/error.hpp"

namespace agmswarm::hypergeom {

CharTable::CharTable(std::shared_ptr<const Field> field) : field_(std::move(field)), n_(field_->q() - 1) {
  const Field& F = *field_;
  if (F.q() > kMaxCharTableOrder) {
    throw Error(ErrorCode::GuardExceeded, "character tables are limited to q <= " +
                                              std::to_string(kMaxCharTableOrder));
  }
  const std::uint64_t q = F.q();
  dlog_.assign(q, 0);
  one_minus_.assign(q, 0);
  FieldElement g = F.one();
  for (std::uint64_t k = 0; k < n_; ++k) {
    dlog_[g.index()] = static_cast<std::uint32_t>(k);
    g = F.mul(g, F.generator());
  }
  for (std::uint64_t i = 0; i < q; ++i) one_minus_[i] = F.sub(F.one(), F.element(i)).index();
  roots_.resize(n_);
  for (std::uint64_t k = 0; k < n_; ++k) {
    roots_[k] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_));
  }
}

Complex CharTable::value(MultChar c, FieldElement x) const {
  if (x.is_zero()) return 0;
  return roots_[(c.j * dlog_[x.index()]) % n_];
}

Complex jacobi_sum(const CharTable& T, MultChar a, MultChar b) {
  const std::uint64_t q = T.field().q(), n = T.n_;
  Complex sum = 0;
  for (std::uint64_t i = 1; i < q; ++i) {
    const std::uint32_t om = T.one_minus_[i];
    if (om == 0) continue;
    sum += T.roots_[(a.j * T.dlog_[i] + b.j * T.dlog_[om]) % n];
  }
  return sum;
}

Complex greene_binom(const CharTable& T, MultChar A, MultChar B) {
  return static_cast<double>(T.sign_at_minus_one(B)) / static_cast<double>(T.field().q()) *
         jacobi_sum(T, A, T.conj(B));
}

BinomialCache::BinomialCache(const CharTable& table) : table_(table) {
  const std::uint64_t n = table.group_order();
  values_.resize(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) values_[a * n + b] = greene_binom(table, {a}, {b});
  }
}

namespace {

template <class Binom>
Complex sum_2f1(const CharTable& T, Binom binom, MultChar A, MultChar B, MultChar C, FieldElement x) {
  if (x.is_zero()) return 0;
  const std::uint64_t n = T.group_order();
  const std::uint64_t lx = T.dlog(x);
  Complex sum = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    const MultChar chi{j};
    sum += binom(T.mul(A, chi), chi) * binom(T.mul(B, chi), T.mul(C, chi)) * T.root(j * lx);
  }
  const double q = static_cast<double>(T.field().q());
  return q / (q - 1) * sum;
}

}  // namespace

Complex greene_2f1(const BinomialCache& cache, MultChar A, MultChar B, MultChar C, FieldElement x) {
  return sum_2f1(
      cache.table(), [&](MultChar u, MultChar v) { return cache.get(u, v); }, A, B, C, x);
}

Complex greene_2f1(const CharTable& T, MultChar A, MultChar B, MultChar C, FieldElement x) {
  return sum_2f1(
      T, [&](MultChar u, MultChar v) { return greene_binom(T, u, v); }, A, B, C, x);
}

double default_tolerance(std::uint64_t q) { return 1e-6 * std::sqrt(static_cast<double>(q)); }

Residual trace_identity_check(const BinomialCache& cache, const elliptic::CharacterSums& sums,
                              FieldElement lambda, double tol) {
  const Field& F = sums.field();
  elliptic::require_curve_domain(F, lambda);
  const CharTable& T = cache.table();
  const Complex f = greene_2f1(cache, T.quadratic(), T.quadratic(), T.trivial(), lambda);
  const double phi_m1 = T.sign_at_minus_one(T.quadratic());
  const Complex diff = static_cast<double>(sums.trace(lambda)) + phi_m1 * static_cast<double>(F.q()) * f;
  const double r = std::max(std::abs(diff.real()), std::abs(diff.imag()));
  return {r < tol, r};
}

IffValue I_ff(const elliptic::CharacterSums& sums, FieldElement a, FieldElement b) {
  const Field& F = sums.field();
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "I_ff needs a != 0");
  const FieldElement arg = F.sub(F.one(), F.div(F.sqr(b), F.sqr(a)));
  IffValue out;
  out.S = sums.product_sum(arg);
  out.value = F.mul(F.inv(F.add(a, a)), F.from_int(out.S));
  return out;
}

InvarianceResult invariance_check(const elliptic::CharacterSums& sums, swarm::AgmPair seed, std::size_t steps) {
  const Field& F = sums.field();
  if (!swarm::is_admissible(F, seed)) {
    throw Error(ErrorCode::InadmissibleInput, "seed " + swarm::render(F, seed) + " is not admissible");
  }
  InvarianceResult out;
  out.iterates.push_back(seed);
  const IffValue first = I_ff(sums, seed.a, seed.b);
  swarm::AgmPair cur = seed;
  for (std::size_t i = 0; i < steps; ++i) {
    cur = swarm::agm_step(F, cur);
    out.iterates.push_back(cur);
    const IffValue v = I_ff(sums, cur.a, cur.b);
    if (v.value != first.value) out.pass = false;
    if (v.S != first.S) out.s_invariant = false;
    ++out.steps;
  }
  return out;
}

Residual integral_consistency_check(const BinomialCache& cache, const elliptic::CharacterSums& sums, FieldElement a,
                               FieldElement b, double tol) {
  const Field& F = sums.field();
  if (!swarm::is_admissible(F, {a, b})) {
    throw Error(ErrorCode::InadmissibleInput, "(" + F.render(a) + "," + F.render(b) + ") is not admissible");
  }
  if (F.p() < 5) throw Error(ErrorCode::SmallCharacteristic, "needs p >= 5");
  const CharTable& T = cache.table();
  const IffValue iff = I_ff(sums, a, b);
  const FieldElement arg = F.sub(F.one(), F.div(F.sqr(b), F.sqr(a)));
  const Complex f = greene_2f1(cache, T.quadratic(), T.quadratic(), T.trivial(), arg);
  const double phi_m1 = T.sign_at_minus_one(T.quadratic());
  const Complex diff = static_cast<double>(iff.S) - phi_m1 * static_cast<double>(F.q()) * f;
  const double r = std::max(std::abs(diff.real()), std::abs(diff.imag()));
  return {r < tol, r};
}

HyperSuiteReport run_hyper_suite(std::shared_ptr<const Field> field, double tol) {
  const Field& F = *field;
  if (F.p() < 5) throw Error(ErrorCode::SmallCharacteristic, "needs p >= 5");
  HyperSuiteReport rep;
  rep.q = F.q();
  const CharTable table(field);
  const BinomialCache cache(table);
  const elliptic::CharacterSums sums(field);

  auto record = [](SweepStat& s, Residual r) {
    ++s.checked;
    if (!r.pass) ++s.failed;
    s.worst = std::max(s.worst, r.residual);
  };

  for (std::uint64_t i = 1; i < F.q(); ++i) {
    const FieldElement l = F.element(i);
    if (l == F.one()) continue;
    record(rep.trace_identity, trace_identity_check(cache, sums, l, tol));
  }

  const swarm::SwarmGraph graph = swarm::build_swarm(field);
  std::vector<IffValue> iff(graph.vertex_count());
  for (std::uint32_t id = 0; id < graph.vertex_count(); ++id) {
    const swarm::AgmPair v = graph.vertex(id);
    iff[id] = I_ff(sums, v.a, v.b);
    record(rep.integral, integral_consistency_check(cache, sums, v.a, v.b, tol));
  }
  for (std::uint32_t id = 0; id < graph.vertex_count(); ++id) {
    const std::uint32_t s = graph.successor(id);
    ++rep.invariance.checked;
    ++rep.s_invariance.checked;
    if (iff[id].value != iff[s].value) ++rep.invariance.failed;
    if (iff[id].S != iff[s].S) ++rep.s_invariance.failed;
  }
  return rep;
}

}  // namespace agmswarm::hypergeom
