#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace linedi;
using namespace testutil;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Internal;
}

}  // namespace

TEST(Build, SingleLoop) {
  const auto g = Digraph::build(1, {{0, 0}});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.arc(0), (Arc{0, 0}));
}

TEST(Build, CycleKeepsArcOrder) {
  const auto g = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.arc(2), (Arc{2, 0}));
  EXPECT_TRUE(is_directed_cycle(g));
}

TEST(Build, Rejections) {
  EXPECT_EQ(kind_of([] { Digraph::build(2, {{0, 2}}); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { Digraph::build(2, {{0, 1}}, {"a", "a"}); }), ErrorKind::DuplicateLabel);
  EXPECT_EQ(kind_of([] { Digraph::build(2, {{0, 1}}, {"a"}); }), ErrorKind::LabelCountMismatch);
}

TEST(Build, ParallelArcsAllowed) {
  const auto g = Digraph::build(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(g.size(), 2u);
  const auto l = line(g);
  EXPECT_EQ(l.order(), 2u);
  EXPECT_EQ(l.size(), 0u);
}

TEST(Line, CycleIsCycle) {
  const auto l = line(cycle(3));
  EXPECT_EQ(l.order(), 3u);
  EXPECT_EQ(l.size(), 3u);
  EXPECT_TRUE(is_directed_cycle(l));
}

TEST(Line, ArcOrderContract) {
  const auto g = uvwx();
  const auto l = line(g);
  ASSERT_EQ(l.order(), g.size());
  for (const Arc& a : l.arcs()) EXPECT_EQ(g.arc(a.tail).head, g.arc(a.head).tail);
  std::size_t expected = 0;
  for (const Arc& a : g.arcs()) {
    for (const Arc& b : g.arcs()) expected += a.head == b.tail;
  }
  EXPECT_EQ(l.size(), expected);
  EXPECT_EQ(l.size(), line_arc_count(g));
}

TEST(Line, LoopGivesLoop) {
  const auto l = line(Digraph::build(1, {{0, 0}}));
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l.arc(0), (Arc{0, 0}));
}

TEST(Line, SingleArc) {
  const auto l = line(Digraph::build(2, {{0, 1}}));
  EXPECT_EQ(l.order(), 1u);
  EXPECT_EQ(l.size(), 0u);
}

TEST(Line, NarayanaDigraph) {
  const auto g = narayana_digraph();
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(line(g).order(), 6u);
}

TEST(Line, OverlapLabels) {
  const auto l = line(de_bruijn(2, 2));
  ASSERT_TRUE(l.has_labels());
  const auto b3 = de_bruijn(2, 3);
  std::vector<std::string> a(l.labels().begin(), l.labels().end());
  std::vector<std::string> b(b3.labels().begin(), b3.labels().end());
  std::sort(a.begin(), a.end());
  EXPECT_EQ(a, b);
  for (const Arc& x : l.arcs()) EXPECT_EQ(l.label(x.tail).substr(1), l.label(x.head).substr(0, 2));
}

TEST(Line, PipeLabelsWhenWordsDoNotOverlap) {
  const auto g = Digraph::build(2, {{0, 1}, {1, 0}}, {"a", "bc"});
  const auto l = line(g);
  EXPECT_EQ(l.label(0), "a|bc");
  EXPECT_EQ(l.label(1), "bc|a");
}

TEST(Line, DeBruijnLineMatchesNextDeBruijn) {
  for (std::size_t s = 1; s <= 3; ++s) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto l = line(de_bruijn(s, n));
      const auto next = de_bruijn(s, n + 1);
      ASSERT_EQ(l.order(), next.order());
      std::map<std::string, Vertex> index;
      for (Vertex v = 0; v < next.order(); ++v) index[next.label(v)] = v;
      std::vector<Arc> mapped;
      for (const Arc& a : l.arcs()) mapped.push_back({index.at(l.label(a.tail)), index.at(l.label(a.head))});
      std::vector<Arc> expected(next.arcs().begin(), next.arcs().end());
      std::sort(mapped.begin(), mapped.end());
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(mapped, expected) << s << "," << n;
    }
  }
}

TEST(LineIterate, Orders) {
  EXPECT_EQ(line_iterate(cycle(3), 5).orders, (std::vector<std::uint64_t>{3, 3, 3, 3, 3, 3}));
  EXPECT_EQ(line_iterate(narayana_digraph(), 4).orders, (std::vector<std::uint64_t>{4, 6, 9, 13, 19}));
  EXPECT_EQ(line_iterate(path(3), 3).orders, (std::vector<std::uint64_t>{3, 2, 1, 0}));
}

TEST(LineIterate, ResourceLimit) {
  IterateOptions opts;
  opts.vertex_cap = 100;
  EXPECT_EQ(kind_of([&] { line_iterate(de_bruijn(2, 3), 10, opts); }), ErrorKind::ResourceLimit);
  opts.vertex_cap = 1'000'000;
  opts.arc_cap = 50;
  EXPECT_EQ(kind_of([&] { line_iterate(de_bruijn(2, 3), 10, opts); }), ErrorKind::ResourceLimit);
}

TEST(LineIterate, LabelsGrowWithIterations) {
  const auto it = line_iterate(de_bruijn(2, 2), 3);
  EXPECT_EQ(it.digraph.label(0).size(), 5u);
}

TEST(Converse, Basics) {
  const auto c = converse(Digraph::build(2, {{0, 1}}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.arc(0), (Arc{1, 0}));
  EXPECT_TRUE(check_isomorphic(converse(cycle(3)), cycle(3)).isomorphic);
  const auto g = uvwx();
  const auto cc = converse(converse(g));
  EXPECT_TRUE(std::equal(cc.arcs().begin(), cc.arcs().end(), g.arcs().begin(), g.arcs().end()));
}

TEST(Scc, Examples) {
  const auto c5 = scc(cycle(5));
  EXPECT_EQ(c5.count(), 1u);
  EXPECT_TRUE(c5.is_directed_cycle[0]);

  const auto p = scc(path(3));
  EXPECT_EQ(p.count(), 3u);
  EXPECT_EQ(p.nontrivial_count(), 0u);

  const auto chord = scc(Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}}));
  EXPECT_EQ(chord.count(), 1u);
  EXPECT_FALSE(chord.is_directed_cycle[0]);

  const auto loop = scc(Digraph::build(1, {{0, 0}}));
  EXPECT_FALSE(loop.is_trivial[0]);
  EXPECT_TRUE(loop.is_directed_cycle[0]);
}

TEST(Scc, DeepPathDoesNotRecurse) {
  const auto s = scc(path(200'000));
  EXPECT_EQ(s.count(), 200'000u);
}

TEST(Structure, Predicates) {
  EXPECT_TRUE(is_strongly_connected(cycle(4)));
  EXPECT_FALSE(is_strongly_connected(path(2)));
  EXPECT_TRUE(is_acyclic(path(4)));
  EXPECT_FALSE(is_acyclic(Digraph::build(1, {{0, 0}})));
  EXPECT_FALSE(is_directed_cycle(uvwx()));
}

TEST(LongestPath, Examples) {
  EXPECT_EQ(longest_path_length(path(3)), 2u);
  EXPECT_EQ(longest_path_length(Digraph::build(3, std::vector<Arc>{})), 0u);
  EXPECT_EQ(longest_path_length(Digraph::build(4, {{0, 1}, {0, 2}, {0, 3}})), 1u);
  EXPECT_EQ(kind_of([] { longest_path_length(cycle(3)); }), ErrorKind::NotAcyclic);
  EXPECT_EQ(kind_of([] { longest_path_length(Digraph::build(1, {{0, 0}})); }), ErrorKind::NotAcyclic);
}

TEST(TextFormat, RoundTrip) {
  const auto g = kautz(2, 2);
  const auto text = write_text(g);
  EXPECT_EQ(text.rfind("digraph 6 12\n", 0), 0u);
  const auto back = read_text(text);
  EXPECT_EQ(back.order(), g.order());
  EXPECT_TRUE(std::equal(back.arcs().begin(), back.arcs().end(), g.arcs().begin(), g.arcs().end()));
  EXPECT_TRUE(std::equal(back.labels().begin(), back.labels().end(), g.labels().begin(), g.labels().end()));
  EXPECT_EQ(write_text(back), text);
}

TEST(TextFormat, CommentsAndErrors) {
  const auto g = read_text("# a triangle\ndigraph 3 3\n0 1\n1 2 # chord-free\n2 0\n");
  EXPECT_TRUE(is_directed_cycle(g));
  EXPECT_EQ(kind_of([] { read_text("digraph 2 1\n0 5\n"); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { read_text("graph 2 1\n0 1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { read_text("digraph 2 2\n0 1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { read_text("digraph 2 1\n0 x\n"); }), ErrorKind::ParseError);
}

TEST(TextFormat, EmptyDigraph) {
  const auto g = read_text("digraph 0 0\n");
  EXPECT_TRUE(g.empty());
}

TEST(Isomorphism, Basics) {
  EXPECT_TRUE(check_isomorphic(cycle(4), Digraph::build(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}})).isomorphic);
  EXPECT_FALSE(check_isomorphic(cycle(4), path(4)).isomorphic);
  const auto a = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {3, 3}});
  const auto b = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {3, 3}, {0, 3}});
  EXPECT_FALSE(check_isomorphic(a, b).isomorphic);
  const auto r = check_isomorphic(de_bruijn(2, 4), de_bruijn(2, 4));
  EXPECT_TRUE(r.isomorphic);
  EXPECT_FALSE(r.exact);
}
