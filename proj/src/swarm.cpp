#include "agmswarm/swarm.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "agmswarm/elliptic.hpp"
#include "agmswarm/error.hpp"

namespace agmswarm::swarm {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::uint64_t pair_key(const Field& F, AgmPair v) {
  return std::uint64_t{v.a.index()} * F.q() + v.b.index();
}

void require_swarm_field(const Field& F) {
  if (!F.is_3_mod_4()) throw Error(ErrorCode::WrongCongruenceClass, "swarm needs q = 3 mod 4");
  if (F.q() < 7) throw Error(ErrorCode::WrongCongruenceClass, "swarm needs q >= 7");
}

// Booth's least-rotation algorithm.
std::size_t least_rotation(const std::vector<FieldElement>& s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const FieldElement sj = s[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void fill_cycle_data(const Field& F, Jellyfish& J, const elliptic::CharacterSums* sums) {
  J.size = 2 * J.cycle.size();
  J.lambda_cycle.clear();
  J.lambda_cycle.reserve(J.cycle.size());
  for (const AgmPair& v : J.cycle) J.lambda_cycle.push_back(lambda_of(F, v));
  if (sums != nullptr && F.p() > 3) J.trace = sums->trace(J.lambda_cycle.front());
}

}  // namespace

bool is_admissible(const Field& F, AgmPair v) {
  if (v.a.is_zero() || v.b.is_zero()) return false;
  if (v.a == v.b || v.a == F.neg(v.b)) return false;
  return F.quad_char(F.mul(v.a, v.b)) == 1;
}

AgmPair agm_step(const Field& F, AgmPair v) {
  if (!F.is_3_mod_4()) throw Error(ErrorCode::FieldNot3Mod4, "AGM step needs q = 3 mod 4");
  if (!is_admissible(F, v)) throw Error(ErrorCode::InadmissibleInput, render(F, v) + " is not admissible");
  const FieldElement half = F.inv(F.from_int(2));
  const FieldElement a1 = F.mul(F.add(v.a, v.b), half);
  const FieldElement s = F.sqrt_principal(F.mul(v.a, v.b));
  // -1 is a nonsquare, so exactly one of +-s makes a1 * b1 a square.
  const FieldElement b1 = F.quad_char(F.mul(a1, s)) == 1 ? s : F.neg(s);
  return {a1, b1};
}

FieldElement lambda_of(const Field& F, AgmPair v) { return F.div(F.sqr(v.b), F.sqr(v.a)); }

std::string render(const Field& F, AgmPair v) {
  return "(" + F.render(v.a) + "," + F.render(v.b) + ")";
}

Signature canonical_signature(const Field& F, const Jellyfish& J) {
  Signature sig;
  const std::size_t start = least_rotation(J.lambda_cycle);
  sig.lambdas.reserve(J.lambda_cycle.size());
  for (std::size_t i = 0; i < J.lambda_cycle.size(); ++i) {
    sig.lambdas.push_back(J.lambda_cycle[(start + i) % J.lambda_cycle.size()]);
  }
  std::string text;
  for (std::size_t i = 0; i < sig.lambdas.size(); ++i) {
    if (i) text += ',';
    text += F.render(sig.lambdas[i]);
  }
  sig.hash = fnv1a(text);
  return sig;
}

std::uint64_t expected_vertex_count(std::uint64_t q) { return (q - 3) * (q - 1) / 2; }

AgmPair SwarmGraph::vertex(std::uint32_t id) const {
  const std::size_t S = mu_values_.size();
  const FieldElement a = field_->element(id / S + 1);
  return {a, field_->mul(a, mu_values_[id % S])};
}

std::uint32_t SwarmGraph::id_of(AgmPair v) const {
  const Field& F = *field_;
  if (!is_admissible(F, v)) throw Error(ErrorCode::InadmissibleInput, render(F, v) + " is not admissible");
  const FieldElement mu = F.div(v.b, v.a);
  return static_cast<std::uint32_t>((v.a.index() - 1) * mu_values_.size() + mu_rank_[mu.index()]);
}

SwarmGraph build_swarm(std::shared_ptr<const Field> field, std::uint64_t guard) {
  const Field& F = *field;
  require_swarm_field(F);
  const std::uint64_t V = expected_vertex_count(F.q());
  if (V > guard) {
    throw Error(ErrorCode::GuardExceeded,
                std::to_string(V) + " vertices exceed the guard; use orbit mode instead");
  }
  if (V >= kNone) throw Error(ErrorCode::GuardExceeded, "vertex count exceeds 32-bit ids");

  SwarmGraph g;
  g.field_ = field;
  g.mu_rank_.assign(F.q(), -1);
  for (std::uint64_t i = 1; i < F.q(); ++i) {
    FieldElement x = F.element(i);
    if (x != F.one() && F.quad_char(x) == 1) {
      g.mu_rank_[i] = static_cast<std::int32_t>(g.mu_values_.size());
      g.mu_values_.push_back(x);
    }
  }

  g.successor_.resize(V);
  for (std::uint32_t id = 0; id < V; ++id) g.successor_[id] = g.id_of(agm_step(F, g.vertex(id)));

  g.in_degree_.assign(V, 0);
  for (std::uint32_t id = 0; id < V; ++id) {
    auto& deg = g.in_degree_[g.successor_[id]];
    if (deg < 255) ++deg;
  }

  // Functional-graph decomposition with three-colour marking.
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(V, kWhite);
  g.component_.assign(V, kNone);
  g.on_cycle_.assign(V, 0);
  std::vector<std::vector<std::uint32_t>> raw_cycles;
  std::vector<std::uint32_t> path;
  for (std::uint32_t start = 0; start < V; ++start) {
    if (colour[start] != kWhite) continue;
    path.clear();
    std::uint32_t x = start;
    while (colour[x] == kWhite) {
      colour[x] = kGrey;
      path.push_back(x);
      x = g.successor_[x];
    }
    std::uint32_t comp;
    if (colour[x] == kGrey) {
      comp = static_cast<std::uint32_t>(raw_cycles.size());
      auto it = std::find(path.begin(), path.end(), x);
      raw_cycles.emplace_back(it, path.end());
      for (auto c : raw_cycles.back()) g.on_cycle_[c] = 1;
    } else {
      comp = g.component_[x];
    }
    for (auto y : path) {
      colour[y] = kBlack;
      g.component_[y] = comp;
    }
  }

  // Renumber components by their smallest (a, b).
  const std::size_t D = raw_cycles.size();
  std::vector<std::uint64_t> min_key(D, std::numeric_limits<std::uint64_t>::max());
  std::vector<std::uint64_t> comp_size(D, 0);
  for (std::uint32_t id = 0; id < V; ++id) {
    auto c = g.component_[id];
    min_key[c] = std::min(min_key[c], pair_key(F, g.vertex(id)));
    ++comp_size[c];
  }
  std::vector<std::uint32_t> order(D);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto l, auto r) { return min_key[l] < min_key[r]; });
  std::vector<std::uint32_t> rename(D);
  for (std::uint32_t i = 0; i < D; ++i) rename[order[i]] = i;
  for (auto& c : g.component_) c = rename[c];

  std::vector<std::uint32_t> tentacle_of(V, kNone);
  for (std::uint32_t id = 0; id < V; ++id) {
    if (!g.on_cycle_[id]) tentacle_of[g.successor_[id]] = id;
  }

  // Certification: cycle vertices have in-degree 2 (cycle + tentacle),
  // everything else is a leaf feeding straight into the cycle.
  auto fail = [&](const std::string& why) {
    if (g.certificate_.ok) {
      g.certificate_.ok = false;
      g.certificate_.detail = why;
    }
  };
  for (std::uint32_t id = 0; id < V; ++id) {
    if (g.on_cycle_[id]) {
      if (g.in_degree_[id] != 2 || tentacle_of[id] == kNone) fail("cycle vertex " + render(F, g.vertex(id)) + " lacks a single tentacle");
    } else if (g.in_degree_[id] != 0 || !g.on_cycle_[g.successor_[id]]) {
      fail("tentacle " + render(F, g.vertex(id)) + " is longer than one edge");
    }
  }

  std::optional<elliptic::CharacterSums> sums;
  if (F.p() > 3) sums.emplace(field);

  g.jellyfish_.resize(D);
  for (std::uint32_t raw = 0; raw < D; ++raw) {
    const auto& cyc = raw_cycles[raw];
    Jellyfish& J = g.jellyfish_[rename[raw]];
    J.id = rename[raw];
    auto first = std::min_element(cyc.begin(), cyc.end(), [&](auto l, auto r) {
      return pair_key(F, g.vertex(l)) < pair_key(F, g.vertex(r));
    });
    const std::size_t offset = static_cast<std::size_t>(first - cyc.begin());
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::uint32_t v = cyc[(offset + i) % cyc.size()];
      J.cycle.push_back(g.vertex(v));
      if (tentacle_of[v] != kNone) J.tentacles.push_back(g.vertex(tentacle_of[v]));
    }
    fill_cycle_data(F, J, sums ? &*sums : nullptr);
    if (comp_size[raw] != J.size) fail("component " + std::to_string(J.id) + " is not twice its cycle length");
  }

  // Multiplicity classes.
  std::map<std::vector<FieldElement>, std::size_t> by_signature;
  for (const Jellyfish& J : g.jellyfish_) {
    Signature sig = canonical_signature(F, J);
    auto [it, inserted] = by_signature.emplace(sig.lambdas, g.classes_.size());
    if (inserted) {
      JellyClass cls;
      cls.signature = std::move(sig);
      cls.size = J.size;
      cls.trace = J.trace;
      g.classes_.push_back(std::move(cls));
    }
    JellyClass& cls = g.classes_[it->second];
    if (cls.size != J.size || cls.trace != J.trace) fail("class members disagree on size or trace");
    cls.members.push_back(J.id);
  }
  std::sort(g.classes_.begin(), g.classes_.end(), [](const JellyClass& l, const JellyClass& r) {
    if (l.trace != r.trace) return l.trace < r.trace;
    if (l.size != r.size) return l.size > r.size;
    return l.signature.lambdas < r.signature.lambdas;
  });
  return g;
}

std::vector<AgmPair> predecessors(const Field& F, AgmPair target) {
  // a + b = 2a', ab = b'^2: a, b are the roots of z^2 - 2a' z + b'^2.
  std::vector<AgmPair> out;
  const FieldElement disc = F.sub(F.sqr(target.a), F.sqr(target.b));
  if (F.quad_char(disc) != 1) return out;
  const FieldElement s = F.sqrt_principal(disc);
  const FieldElement z1 = F.add(target.a, s), z2 = F.sub(target.a, s);
  for (AgmPair cand : {AgmPair{z1, z2}, AgmPair{z2, z1}}) {
    if (is_admissible(F, cand) && agm_step(F, cand) == target) out.push_back(cand);
  }
  return out;
}

Jellyfish jellyfish_of_seed(const std::shared_ptr<const Field>& field, AgmPair seed) {
  const Field& F = *field;
  require_swarm_field(F);
  if (!is_admissible(F, seed)) throw Error(ErrorCode::InadmissibleInput, render(F, seed) + " is not admissible");
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::vector<AgmPair> path;
  AgmPair x = seed;
  while (seen.find(pair_key(F, x)) == seen.end()) {
    seen.emplace(pair_key(F, x), path.size());
    path.push_back(x);
    x = agm_step(F, x);
  }
  std::vector<AgmPair> cyc(path.begin() + static_cast<std::ptrdiff_t>(seen[pair_key(F, x)]), path.end());
  auto first = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), first, cyc.end());

  Jellyfish J;
  J.cycle = cyc;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const AgmPair cycle_pred = cyc[(i + cyc.size() - 1) % cyc.size()];
    for (const AgmPair& pred : predecessors(F, cyc[i])) {
      if (pred != cycle_pred) {
        J.tentacles.push_back(pred);
        break;
      }
    }
  }
  std::optional<elliptic::CharacterSums> sums;
  if (F.p() > 3) sums.emplace(field);
  fill_cycle_data(F, J, sums ? &*sums : nullptr);
  return J;
}

SwarmSummary summarize(const SwarmGraph& g) {
  const Field& F = g.field();
  SwarmSummary s;
  s.q = F.q();
  s.p = F.p();
  s.r = F.r();
  s.vertex_count = g.vertex_count();
  s.d = g.jellyfish().size();
  for (const Jellyfish& J : g.jellyfish()) {
    s.sizes.push_back(J.size);
    if (J.trace) s.vertices_per_trace[*J.trace] += J.size;
  }
  std::sort(s.sizes.begin(), s.sizes.end());
  if (!s.sizes.empty()) {
    s.min_size = s.sizes.front();
    s.max_size = s.sizes.back();
  }
  for (const JellyClass& c : g.classes()) {
    s.classes.push_back(ClassSummary{c.trace, c.size, c.multiplicity(), c.signature.hash,
                                     c.signature.lambdas.front()});
  }
  return s;
}

namespace {

void dot_jellyfish(std::ostringstream& out, const Field& F, const Jellyfish& J) {
  auto node = [&](AgmPair v) { return "\"" + render(F, v) + "\""; };
  for (const AgmPair& v : J.cycle) out << "  " << node(v) << ";\n";
  for (const AgmPair& v : J.tentacles) out << "  " << node(v) << ";\n";
  for (std::size_t i = 0; i < J.cycle.size(); ++i) {
    out << "  " << node(J.cycle[i]) << " -> " << node(J.cycle[(i + 1) % J.cycle.size()]) << ";\n";
  }
  for (std::size_t i = 0; i < J.tentacles.size(); ++i) {
    out << "  " << node(J.tentacles[i]) << " -> " << node(J.cycle[i]) << ";\n";
  }
}

}  // namespace

std::string export_dot(const SwarmGraph& g) {
  std::ostringstream out;
  out << "digraph swarm_q" << g.field().q() << " {\n";
  for (const Jellyfish& J : g.jellyfish()) {
    out << "  subgraph cluster_" << J.id << " {\n";
    std::ostringstream inner;
    dot_jellyfish(inner, g.field(), J);
    std::string body = inner.str();
    std::istringstream lines(body);
    for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const Field& F, const Jellyfish& J) {
  std::ostringstream out;
  out << "digraph jellyfish_q" << F.q() << " {\n";
  dot_jellyfish(out, F, J);
  out << "}\n";
  return out.str();
}

}  // namespace agmswarm::swarm
