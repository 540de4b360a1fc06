#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "agmswarm/error.hpp"
#include "agmswarm/swarm.hpp"

using namespace agmswarm;
using namespace agmswarm::swarm;

namespace {

AgmPair P(const Field& F, std::int64_t a, std::int64_t b) { return {F.from_int(a), F.from_int(b)}; }

// Step by exhaustive search over square roots, independent of sqrt_principal.
AgmPair brute_step(const Field& F, AgmPair v) {
  const FieldElement a1 = F.div(F.add(v.a, v.b), F.from_int(2));
  const FieldElement ab = F.mul(v.a, v.b);
  std::vector<AgmPair> ok;
  for (std::uint64_t i = 1; i < F.q(); ++i) {
    const FieldElement s = F.element(i);
    if (F.sqr(s) == ab && F.quad_char(F.mul(a1, s)) == 1) ok.push_back({a1, s});
  }
  REQUIRE(ok.size() == 1);
  return ok.front();
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Components of the undirected successor graph, by union-find.
std::size_t brute_component_count(const Field& F) {
  std::vector<AgmPair> verts;
  for (std::uint64_t i = 1; i < F.q(); ++i)
    for (std::uint64_t j = 1; j < F.q(); ++j) {
      AgmPair v{F.element(i), F.element(j)};
      if (is_admissible(F, v)) verts.push_back(v);
    }
  std::map<AgmPair, std::size_t> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = i;
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i) parent[find(parent, i)] = find(parent, idx.at(brute_step(F, verts[i])));
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < verts.size(); ++i) roots.insert(find(parent, i));
  return roots.size();
}

}  // namespace

TEST_CASE("admissibility at q = 7") {
  auto F = Field::create(7, 1);
  CHECK(is_admissible(*F, P(*F, 4, 2)));
  CHECK_FALSE(is_admissible(*F, P(*F, 1, 1)));
  CHECK_FALSE(is_admissible(*F, P(*F, 3, 4)));
  CHECK_FALSE(is_admissible(*F, P(*F, 0, 2)));
  CHECK_FALSE(is_admissible(*F, P(*F, 2, 5)));
}

TEST_CASE("AGM steps of the q = 7 orbit") {
  auto F = Field::create(7, 1);
  CHECK(agm_step(*F, P(*F, 4, 2)) == P(*F, 3, 6));
  CHECK(agm_step(*F, P(*F, 3, 6)) == P(*F, 1, 2));
  CHECK(agm_step(*F, P(*F, 6, 3)) == P(*F, 1, 2));
  CHECK_THROWS_AS(agm_step(*F, P(*F, 1, 1)), Error);
}

TEST_CASE("step agrees with exhaustive root search, closure and scaling") {
  for (auto [p, r] : {std::pair{7u, 1u}, {11u, 1u}, {19u, 1u}, {3u, 3u}, {7u, 3u}}) {
    auto F = Field::create(p, r);
    if (F->q() > 400) continue;
    for (std::uint64_t i = 1; i < F->q(); ++i)
      for (std::uint64_t j = 1; j < F->q(); ++j) {
        const AgmPair v{F->element(i), F->element(j)};
        if (!is_admissible(*F, v)) continue;
        const AgmPair w = agm_step(*F, v);
        CHECK(w == brute_step(*F, v));
        CHECK(is_admissible(*F, w));
        const FieldElement k = F->element(1 + (i * 7 + j) % (F->q() - 1));
        CHECK(agm_step(*F, {F->mul(k, v.a), F->mul(k, v.b)}) == AgmPair{F->mul(k, w.a), F->mul(k, w.b)});
      }
  }
}

TEST_CASE("swarm at q = 7 is the single jellyfish") {
  const auto g = build_swarm(Field::create(7, 1));
  CHECK(g.vertex_count() == 12);
  CHECK(g.jellyfish().size() == 1);
  CHECK(g.certificate().ok);
  const auto& J = g.jellyfish().front();
  CHECK(J.size == 12);
  CHECK(J.cycle.size() == 6);
  CHECK(J.trace == 0);
  const auto s = summarize(g);
  CHECK(s.d == 1);
  CHECK(s.min_size == 12);
  CHECK(s.max_size == 12);
  CHECK(s.classes.size() == 1);
  CHECK(s.classes.front().multiplicity == 1);
}

TEST_CASE("swarm counts at small q") {
  struct Row {
    unsigned p, r;
    std::uint64_t d, min, max;
  };
  for (Row row : {Row{11, 1, 3, 10, 20}, Row{19, 1, 8, 12, 36}, Row{23, 1, 5, 22, 132}, Row{3, 3, 39, 6, 12}}) {
    auto F = Field::create(row.p, row.r);
    const auto s = summarize(build_swarm(F));
    CHECK(s.vertex_count == expected_vertex_count(F->q()));
    CHECK(s.d == row.d);
    CHECK(s.min_size == row.min);
    CHECK(s.max_size == row.max);
    CHECK(s.d == brute_component_count(*F));
  }
  const auto s11 = summarize(build_swarm(Field::create(11, 1)));
  CHECK(s11.sizes == std::vector<std::uint64_t>{10, 10, 20});
}

TEST_CASE("shape invariants on every vertex") {
  for (auto [p, r] : {std::pair{11u, 1u}, {31u, 1u}, {3u, 3u}}) {
    const auto g = build_swarm(Field::create(p, r));
    for (std::uint32_t id = 0; id < g.vertex_count(); ++id) {
      CHECK(g.id_of(g.vertex(id)) == id);
      CHECK(g.component_of(g.successor(id)) == g.component_of(id));
      CHECK(g.in_degree(id) == (g.on_cycle(id) ? 2 : 0));
    }
    std::uint64_t total = 0;
    for (const auto& c : g.classes()) total += c.size * c.multiplicity();
    CHECK(total == g.vertex_count());
  }
}

TEST_CASE("builder rejects bad fields and guards") {
  CHECK_THROWS_AS(build_swarm(Field::create(13, 1)), Error);
  CHECK_THROWS_AS(build_swarm(Field::create(3, 1)), Error);
  try {
    build_swarm(Field::create(31, 1), 100);
    FAIL("expected guard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GuardExceeded);
  }
}

TEST_CASE("orbit mode matches the full swarm") {
  for (auto [p, r] : {std::pair{7u, 1u}, {23u, 1u}, {3u, 3u}}) {
    auto F = Field::create(p, r);
    const auto g = build_swarm(F);
    for (std::uint32_t id = 0; id < g.vertex_count(); id += 3) {
      const auto J = jellyfish_of_seed(F, g.vertex(id));
      const auto& ref = g.jellyfish()[g.component_of(id)];
      CHECK(J.size == ref.size);
      CHECK(J.cycle == ref.cycle);
      CHECK(J.tentacles == ref.tentacles);
    }
  }
  auto F7 = Field::create(7, 1);
  CHECK(jellyfish_of_seed(F7, P(*F7, 4, 2)).cycle == jellyfish_of_seed(F7, P(*F7, 3, 6)).cycle);
  CHECK_THROWS_AS(jellyfish_of_seed(F7, P(*F7, 3, 4)), Error);
}

TEST_CASE("predecessors invert the step") {
  auto F = Field::create(19, 1);
  const auto g = build_swarm(F);
  for (std::uint32_t id = 0; id < g.vertex_count(); ++id) {
    const auto pre = predecessors(*F, g.vertex(id));
    CHECK(pre.size() == g.in_degree(id));
    for (const auto& v : pre) CHECK(agm_step(*F, v) == g.vertex(id));
  }
}

TEST_CASE("signature is the least rotation") {
  auto F = Field::create(23, 1);
  const auto g = build_swarm(F);
  for (const auto& J : g.jellyfish()) {
    const auto sig = canonical_signature(*F, J);
    auto naive = J.lambda_cycle;
    auto rot = J.lambda_cycle;
    for (std::size_t k = 0; k < rot.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      naive = std::min(naive, rot);
    }
    CHECK(sig.lambdas == naive);
    Jellyfish shifted = J;
    std::rotate(shifted.lambda_cycle.begin(), shifted.lambda_cycle.begin() + 1, shifted.lambda_cycle.end());
    CHECK(canonical_signature(*F, shifted) == sig);
    CHECK(canonical_signature(*F, shifted).hash == sig.hash);
  }
}

TEST_CASE("DOT export") {
  const auto g = build_swarm(Field::create(7, 1));
  const std::string dot = export_dot(g);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 12);
  CHECK(dot.find("\"(4,2)\"") != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(export_dot(g) == dot);
  const std::string one = export_dot(g.field(), g.jellyfish().front());
  CHECK(std::count(one.begin(), one.end(), '>') == 12);
}
