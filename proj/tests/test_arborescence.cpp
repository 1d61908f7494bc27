#include <doctest.h>

#include <algorithm>
#include <set>

#include "nestlogit/arborescence.hpp"
#include "nestlogit/errors.hpp"
#include "nestlogit/generate.hpp"
#include "support.hpp"

using namespace nestlogit;

namespace {

RawNode nest(std::string id, double lambda, std::vector<std::string> kids) {
  return {std::move(id), NodeKind::Nest, lambda, std::move(kids)};
}
RawNode leaf(std::string id) { return {std::move(id), NodeKind::Alternative, 1.0, {}}; }

ErrorKind build_error(const RawTree& raw) {
  try {
    Arborescence::build(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("build succeeded");
  return ErrorKind::ParseError;
}

std::vector<NodeIndex> ancestors(const Arborescence& t, NodeIndex z) {
  std::vector<NodeIndex> out{z};
  while (auto p = t.parent(out.back())) out.push_back(*p);
  return out;
}

NodeIndex brute_lca(const Arborescence& t, const TreeMetrics& m, NodeIndex a, NodeIndex b) {
  const auto A = ancestors(t, a);
  const auto B = ancestors(t, b);
  NodeIndex best = Arborescence::root();
  for (NodeIndex x : A)
    if (std::find(B.begin(), B.end(), x) != B.end() && m.depth[x] >= m.depth[best]) best = x;
  return best;
}

}  // namespace

TEST_CASE("smallest legal model") {
  const auto t = Arborescence::build({"0", {nest("0", 1.0, {"1", "2"}), leaf("1"), leaf("2")}});
  CHECK(t.size() == 3);
  CHECK(t.leaf_count() == 2);
  const auto m = metrics(t);
  CHECK(m.depth[t.index_of("1")] == 1);
  CHECK(m.depth[t.index_of("2")] == 1);
  CHECK(m.height[Arborescence::root()] == 1);
  CHECK(m.big_lambda[Arborescence::root()] == 1.0);
}

TEST_CASE("five-node tree metrics, lca and descendants") {
  const auto model = testing::five_node();
  const auto& t = model.tree();
  const auto& m = model.metrics();
  const NodeIndex one = t.index_of("1"), two = t.index_of("2"), three = t.index_of("3"), a = t.index_of("a");
  CHECK(m.depth[one] == 2);
  CHECK(m.height[Arborescence::root()] == 2);
  CHECK(m.height[a] == 1);
  CHECK(m.height[one] == 0);
  CHECK(m.path_from_root[one] == std::vector<NodeIndex>{a});
  CHECK(m.path_from_root[three].empty());
  CHECK(m.big_lambda[one] == 0.5);
  CHECK(m.big_lambda[three] == 1.0);

  CHECK(lca(t, one, three) == Arborescence::root());
  CHECK(lca(t, one, two) == a);
  CHECK(lca(t, "1", "2") == a);
  CHECK(lca(t, one, one) == one);
  CHECK_THROWS_AS(lca(t, "1", "nope"), Error);

  const auto all = descendant_leaves(t, Arborescence::root());
  CHECK(all == std::vector<NodeIndex>{one, two, three});
  CHECK(descendant_leaves(t, a) == std::vector<NodeIndex>{one, two});
  CHECK(descendant_leaves(t, three) == std::vector<NodeIndex>{three});
}

TEST_CASE("chain products of lambda") {
  const auto t = Arborescence::build(
      {"r", {nest("r", 1.0, {"a"}), nest("a", 0.5, {"b"}), nest("b", 0.5, {"j"}), leaf("j")}});
  const auto m = metrics(t);
  CHECK(m.big_lambda[t.index_of("a")] == 0.5);
  CHECK(m.big_lambda[t.index_of("b")] == 0.25);
  CHECK(m.big_lambda[t.index_of("j")] == 0.25);
  CHECK(m.depth[t.index_of("j")] == 3);
  CHECK(m.path_from_root[t.index_of("j")] == std::vector<NodeIndex>{t.index_of("a"), t.index_of("b")});
}

TEST_CASE("child order is preserved") {
  const auto t = Arborescence::build({"r", {nest("r", 1.0, {"z", "y", "x"}), leaf("x"), leaf("y"), leaf("z")}});
  std::vector<std::string> ids;
  for (NodeIndex j : t.leaves()) ids.push_back(t.id(j));
  CHECK(ids == std::vector<std::string>{"z", "y", "x"});
}

TEST_CASE("build errors") {
  CHECK(build_error({"r", {nest("r", 1.0, {"a"}), nest("a", 0.5, {})}}) == ErrorKind::EmptyNest);
  CHECK(build_error({"r", {nest("r", 1.0, {"a", "a"}), leaf("a")}}) == ErrorKind::DuplicateId);
  CHECK(build_error({"r", {nest("r", 1.0, {"a"}), leaf("a"), leaf("a")}}) == ErrorKind::DuplicateId);
  CHECK(build_error({"r", {nest("r", 1.0, {"a"}), nest("a", 1.5, {"j"}), leaf("j")}}) ==
        ErrorKind::LambdaOutOfRange);
  CHECK(build_error({"r", {nest("r", 1.0, {"a"}), nest("a", 0.0, {"j"}), leaf("j")}}) ==
        ErrorKind::LambdaOutOfRange);
  CHECK(build_error({"r", {nest("r", 1.0, {"a"}), nest("a", -0.2, {"j"}), leaf("j")}}) ==
        ErrorKind::LambdaOutOfRange);
  CHECK(build_error({"r", {nest("r", 0.9, {"j"}), leaf("j")}}) == ErrorKind::RootLambdaNotOne);
  CHECK(build_error({"r", {nest("r", 1.0, {"j"}), leaf("j"), leaf("k")}}) == ErrorKind::OrphanNode);
  CHECK(build_error({"r", {nest("r", 1.0, {"j"}), leaf("j"), nest("p", 0.5, {"q"}), nest("q", 0.5, {"p"})}}) ==
        ErrorKind::CycleDetected);
  CHECK(build_error({"r", {nest("r", 1.0, {"a"}), nest("a", 0.5, {"r"})}}) == ErrorKind::CycleDetected);
  CHECK(build_error({"r", {nest("r", 1.0, {"ghost"})}}) == ErrorKind::UnknownNode);
  CHECK(build_error({"j", {leaf("j")}}) == ErrorKind::NotANest);
}

TEST_CASE("queries on the wrong kind of node") {
  const auto model = testing::five_node();
  const auto& t = model.tree();
  CHECK_THROWS_AS(t.lambda(t.index_of("1")), Error);
  CHECK_THROWS_AS(t.leaf_position(t.index_of("a")), Error);
  CHECK_THROWS_AS(t.index_of("missing"), Error);
  CHECK_FALSE(t.find("missing").has_value());
  CHECK_FALSE(t.parent(Arborescence::root()).has_value());
}

TEST_CASE("error messages name the kind and the offending id") {
  try {
    Arborescence::build({"r", {nest("r", 1.0, {"a", "a"}), leaf("a")}});
    FAIL("expected DuplicateId");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find("DuplicateId") != std::string::npos);
    CHECK(what.find("'a'") != std::string::npos);
  }
}

TEST_CASE("property: structure and metrics invariants on random trees") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    GeneratorOptions g;
    g.max_nodes = 100;
    const auto model = random_model({s, 11}, g);
    const auto& t = model.tree();
    const auto& m = model.metrics();
    CAPTURE(s);

    std::set<NodeIndex> seen;
    for (NodeIndex j : descendant_leaves(t, Arborescence::root())) CHECK(seen.insert(j).second);
    REQUIRE(seen.size() == t.leaf_count());

    for (NodeIndex z = 1; z < t.size(); ++z) {
      const NodeIndex p = *t.parent(z);
      CHECK(m.depth[z] == m.depth[p] + 1);
      CHECK(m.big_lambda[z] <= m.big_lambda[p]);
      if (t.is_nest(z))
        CHECK(m.big_lambda[z] == doctest::Approx(m.big_lambda[p] * t.lambda(z)).epsilon(1e-15));
      else
        CHECK(m.big_lambda[z] == m.big_lambda[p]);
    }
    for (NodeIndex n = 0; n < t.size(); ++n) {
      std::uint32_t h = 0;
      for (NodeIndex c : t.children(n)) h = std::max(h, m.height[c] + 1);
      CHECK(m.height[n] == h);
    }

    RandomStream rng({s, 12});
    for (int q = 0; q < 50; ++q) {
      const auto a = static_cast<NodeIndex>(rng.uniform() * static_cast<double>(t.size()));
      const auto b = static_cast<NodeIndex>(rng.uniform() * static_cast<double>(t.size()));
      CHECK(lca(t, a, b) == brute_lca(t, m, a, b));
    }
    if (t.leaf_count() >= 2) CHECK(t.is_nest(lca(t, t.leaves()[0], t.leaves()[1])));
  }
}

TEST_CASE("deep chains build without recursion limits") {
  RawTree raw;
  raw.root = "n0";
  const int depth = 20000;
  for (int i = 0; i < depth; ++i)
    raw.nodes.push_back(nest("n" + std::to_string(i), 1.0, {"n" + std::to_string(i + 1)}));
  raw.nodes.push_back(leaf("n" + std::to_string(depth)));
  const auto t = Arborescence::build(raw);
  const auto m = metrics(t);
  CHECK(m.height[Arborescence::root()] == static_cast<std::uint32_t>(depth));
  CHECK(lca(t, t.leaves()[0], t.index_of("n7")) == t.index_of("n7"));
}
