#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "dhce/embedding.hpp"
#include "dhce/error.hpp"
#include "dhce/random.hpp"
#include "fixtures.hpp"

using namespace dhce;
namespace fx = dhce::testing;

namespace {

// Natural-log entropy over a counting map, converted to bits.
double entropy_oracle(const std::vector<std::uint32_t>& v) {
  if (v.empty()) return 0.0;
  std::map<std::uint32_t, double> counts;
  for (auto x : v) counts[x] += 1.0;
  double nats = 0.0;
  for (auto [value, c] : counts) {
    const double p = c / static_cast<double>(v.size());
    nats -= p * std::log(p);
  }
  return nats / std::log(2.0);
}

Graph relabel(const Graph& g, const std::vector<NodeId>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.node_count(), e);
}

void check_entropies(const Embedding& e, std::vector<double> expected) {
  REQUIRE(e.entropies.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(e.entropies[i] == doctest::Approx(expected[i]).epsilon(1e-9));
}

}  // namespace

TEST_CASE("shannon_entropy fixtures") {
  CHECK(shannon_entropy(std::vector<std::uint32_t>{3, 3, 3, 3}) == 0.0);
  CHECK(shannon_entropy(std::vector<std::uint32_t>{1, 1, 2, 2}) == doctest::Approx(1.0));
  const double star = -(0.2 * std::log2(0.2) + 0.8 * std::log2(0.8));
  CHECK(star == doctest::Approx(0.721928).epsilon(1e-6));
  CHECK(shannon_entropy(std::vector<std::uint32_t>{4, 1, 1, 1, 1}) == doctest::Approx(star).epsilon(1e-12));
  CHECK(shannon_entropy(std::vector<std::uint32_t>{}) == 0.0);
  CHECK(!std::signbit(shannon_entropy(std::vector<std::uint32_t>{7})));
}

TEST_CASE("shannon_entropy bounds on random multisets") {
  Rng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::uint32_t> v(1 + rng.below(60));
    const auto spread = 1 + rng.below(trial % 3 == 0 ? 2 : 100);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(spread));
    const double h = shannon_entropy(v);
    REQUIRE(h == doctest::Approx(entropy_oracle(v)).epsilon(1e-12));
    const double upper = std::log2(static_cast<double>(v.size()));
    REQUIRE(h >= 0.0);
    REQUIRE(h <= upper + 1e-12);
    std::vector<std::uint32_t> s = v;
    std::sort(s.begin(), s.end());
    const bool all_equal = s.front() == s.back();
    const bool all_distinct = std::adjacent_find(s.begin(), s.end()) == s.end();
    REQUIRE((h == 0.0) == all_equal);
    if (all_distinct) REQUIRE(h == doctest::Approx(upper).epsilon(1e-12));
    if (!all_distinct) REQUIRE(h < upper - 1e-12);
  }
}

TEST_CASE("embed_graph fixtures") {
  const double star = -(0.2 * std::log2(0.2) + 0.8 * std::log2(0.8));
  const double p3 = -(2.0 / 3.0 * std::log2(2.0 / 3.0) + 1.0 / 3.0 * std::log2(1.0 / 3.0));
  CHECK(p3 == doctest::Approx(0.918296).epsilon(1e-6));
  check_entropies(embed_graph(fx::complete(4)), {0.0});
  check_entropies(embed_graph(fx::star(4)), {star, 0.0});
  check_entropies(embed_graph(fx::path(3)), {p3, 0.0});
  check_entropies(embed_graph(fx::cycle(5)), {0.0});
  check_entropies(embed_graph(Graph{}), {0.0});
  check_entropies(embed_graph(fx::empty_graph(1)), {0.0});
}

TEST_CASE("skipping the degree entropy") {
  const EmbedOptions skip{.include_degree_entropy = false};
  check_entropies(embed_graph(fx::star(4), skip), {0.0});
  // The degree state is already the fixed point: keep it.
  check_entropies(embed_graph(fx::complete(4), skip), {0.0});
  const Graph g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}});
  const auto full = embed_graph(g).entropies;
  const auto tail = embed_graph(g, skip).entropies;
  CHECK(std::vector<double>(full.begin() + 1, full.end()) == tail);
}

TEST_CASE("embedding invariants on random graphs") {
  Rng rng(31);
  for (const Graph& g : fx::random_corpus(15, 4)) {
    const auto trace = dhc_trace(g);
    const auto e = embed_graph(g);
    REQUIRE(e.entropies.size() == trace.states.size());
    const double upper = g.node_count() <= 1 ? 0.0 : std::log2(static_cast<double>(g.node_count()));
    for (double h : e.entropies) {
      REQUIRE(h >= 0.0);
      REQUIRE(h <= upper + 1e-12);
    }
    REQUIRE(e.entropies.back() == shannon_entropy(coreness(g)));

    std::vector<NodeId> perm(g.node_count());
    std::iota(perm.begin(), perm.end(), 0u);
    rng.shuffle(perm.begin(), perm.end());
    REQUIRE(embed_graph(relabel(g, perm)).entropies == e.entropies);
  }
}

TEST_CASE("regular graphs embed to a single zero") {
  for (std::size_t k : {2u, 4u, 6u}) {
    const Graph g = generate(GeneratorSpec::watts_strogatz(30, k, 0.0, 1));
    CHECK(embed_graph(g).entropies == std::vector<double>{0.0});
  }
  CHECK(embed_graph(fx::complete(7)).entropies == std::vector<double>{0.0});
}

TEST_CASE("align pads with each row's last entry") {
  {
    const std::vector<Embedding> in{{{0.72, 0.0}}, {{0.0}}};
    const auto m = align(in);
    CHECK(m.rows() == 2);
    CHECK(m.width() == 2);
    CHECK(std::vector<double>(m.row(0).begin(), m.row(0).end()) == std::vector<double>{0.72, 0.0});
    CHECK(std::vector<double>(m.row(1).begin(), m.row(1).end()) == std::vector<double>{0.0, 0.0});
  }
  {
    const std::vector<Embedding> in{{{0.9}}, {{0.5, 0.3, 0.1}}};
    const auto m = align(in);
    CHECK(std::vector<double>(m.row(0).begin(), m.row(0).end()) == std::vector<double>{0.9, 0.9, 0.9});
    CHECK(std::vector<double>(m.row(1).begin(), m.row(1).end()) == std::vector<double>{0.5, 0.3, 0.1});
  }
  {
    const std::vector<Embedding> in{{{0.1, 0.2}}, {{0.3, 0.4}}};
    const auto m = align(in);
    CHECK(std::vector<double>(m.row(1).begin(), m.row(1).end()) == std::vector<double>{0.3, 0.4});
  }
  CHECK_THROWS_AS(align(std::vector<Embedding>{}), ContractViolation);
  CHECK_THROWS_AS(align(std::vector<Embedding>{{{0.1}}, {}}), ContractViolation);
}

TEST_CASE("align keeps originals and pads with constants on random input") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Embedding> in(1 + rng.below(8));
    for (auto& e : in) {
      e.entropies.resize(1 + rng.below(6));
      for (auto& x : e.entropies) x = rng.uniform();
    }
    const auto m = align(in);
    std::size_t longest = 0;
    for (const auto& e : in) longest = std::max(longest, e.entropies.size());
    REQUIRE(m.width() == longest);
    for (std::size_t i = 0; i < in.size(); ++i) {
      const auto& src = in[i].entropies;
      for (std::size_t j = 0; j < m.width(); ++j) REQUIRE(m(i, j) == (j < src.size() ? src[j] : src.back()));
    }
  }
}

TEST_CASE("embed_graphs is order-preserving and thread-count independent") {
  const auto corpus = fx::random_corpus(10, 9);
  const auto serial = embed_graphs(corpus, {}, 1);
  const auto parallel = embed_graphs(corpus, {}, 4);
  REQUIRE(serial.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(serial[i].entropies == embed_graph(corpus[i]).entropies);
    CHECK(parallel[i].entropies == serial[i].entropies);
  }
}

TEST_CASE("matrix CSV layout and read back") {
  auto m = align(std::vector<Embedding>{{{0.7219280948873623, 0.0}}, {{0.0}}});
  m.row_labels = {"s4", "k4"};
  m.class_labels = {"star", "clique"};
  std::ostringstream out;
  write_matrix_csv(out, m);
  CHECK(out.str() == "graph_id,label,e0,e1\ns4,star,0.721928,0.000000\nk4,clique,0.000000,0.000000\n");

  std::istringstream in(out.str());
  const auto back = read_matrix_csv(in);
  CHECK(back.rows() == 2);
  CHECK(back.width() == 2);
  CHECK(back.row_labels == m.row_labels);
  CHECK(back.class_labels == m.class_labels);
  CHECK(back(0, 0) == 0.721928);

  std::istringstream unlabeled("graph_id,label,e0\na,,0.5\n");
  CHECK(!read_matrix_csv(unlabeled).has_class_labels());
}

TEST_CASE("matrix CSV errors") {
  std::istringstream empty("");
  CHECK_THROWS_AS(read_matrix_csv(empty), ParseError);
  std::istringstream bad_header("id,e0\n");
  CHECK_THROWS_AS(read_matrix_csv(bad_header), ParseError);
  std::istringstream ragged("graph_id,label,e0,e1\na,x,0.1\n");
  CHECK_THROWS_AS(read_matrix_csv(ragged), ParseError);
  std::istringstream nan("graph_id,label,e0\na,x,zero\n");
  CHECK_THROWS_AS(read_matrix_csv(nan), ParseError);
  std::istringstream partial("graph_id,label,e0\na,x,0.1\nb,,0.2\n");
  CHECK_THROWS_AS(read_matrix_csv(partial), ParseError);
}
