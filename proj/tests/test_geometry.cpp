#include <catch2/catch_amalgamated.hpp>

#include "newtoric/geometry.hpp"
#include "support/corpus.hpp"
#include "support/volume_oracle.hpp"

using namespace newtoric;
using namespace testsupport;

namespace {

RatVec rats(std::initializer_list<const char*> xs) {
  RatVec v;
  for (auto x : xs) v.push_back(parse_rational(x));
  return v;
}

std::vector<std::size_t> members(std::initializer_list<std::size_t> xs) { return xs; }

// independent 2-D hull oracle: an edge of conv({0} u points) away from
// the origin is a segment with every other point weakly on its inner side
std::vector<std::vector<std::size_t>> hull_edges_2d(const std::vector<RatVec>& pts) {
  auto cross = [](const RatVec& o, const RatVec& a, const RatVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  RatVec origin{Rat(0), Rat(0)};
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool pos = false, neg = false, origin_on = false;
      Rat co = cross(pts[i], pts[j], origin);
      if (co > 0) pos = true;
      else if (co < 0) neg = true;
      else origin_on = true;
      std::vector<std::size_t> on{i, j};
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k == i || k == j) continue;
        Rat c = cross(pts[i], pts[j], pts[k]);
        if (c > 0) pos = true;
        else if (c < 0) neg = true;
        else {
          // collinear: only a member when between the endpoints
          Rat lo = std::min(pts[i][0], pts[j][0]), hi = std::max(pts[i][0], pts[j][0]);
          Rat lo1 = std::min(pts[i][1], pts[j][1]), hi1 = std::max(pts[i][1], pts[j][1]);
          if (pts[k][0] >= lo && pts[k][0] <= hi && pts[k][1] >= lo1 && pts[k][1] <= hi1)
            on.push_back(k);
          else
            pos = neg = true;  // collinear but outside: not an edge
        }
      }
      if ((pos && neg) || origin_on) continue;
      std::sort(on.begin(), on.end());
      edges.push_back(on);
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

TEST_CASE("umbrella of the height-one simplex") {
  SemigroupPresentation p(IntMatrix::identity(3));
  Umbrella u(p, WeightVector::ones(3));
  REQUIRE(u.facets().size() == 1);
  CHECK(u.facets()[0].members == members({0, 1, 2}));
  CHECK(u.facets()[0].functional == rats({"1", "1", "1"}));
}

TEST_CASE("umbrella facets and functionals of the rank-3 corpus semigroup") {
  auto p = example15();
  Umbrella u(p, WeightVector::ones(6));
  REQUIRE(u.facets().size() == 3);
  CHECK(u.facets()[0].members == members({1, 3, 5}));
  CHECK(u.facets()[0].functional == rats({"1/3", "2/3", "-1/3"}));
  CHECK(u.facets()[1].members == members({1, 4, 5}));
  CHECK(u.facets()[1].functional == rats({"1/3", "1/3", "1/3"}));
  CHECK(u.facets()[2].members == members({2, 3, 5}));
  CHECK(u.facets()[2].functional == rats({"0", "1", "-1"}));
}

TEST_CASE("umbrella of the mixed-sign rank-2 semigroup") {
  auto p = example52();
  Umbrella u(p, WeightVector::ones(6));
  REQUIRE(u.facets().size() == 2);
  CHECK(u.facets()[0].members == members({1, 4}));
  CHECK(u.facets()[0].functional == rats({"-1/6", "1/3"}));
  CHECK(u.facets()[1].members == members({1, 5}));
  CHECK(u.facets()[1].functional == rats({"2/3", "1/3"}));

  // cross-check against the angular 2-D hull oracle
  std::vector<RatVec> pts;
  for (std::size_t j = 0; j < p.size(); ++j) {
    IntVec a = p.frame_generator(j);
    pts.push_back({Rat(a[0]), Rat(a[1])});
  }
  auto edges = hull_edges_2d(pts);
  std::vector<std::vector<std::size_t>> got;
  for (const auto& f : u.facets()) got.push_back(f.members);
  CHECK(edges == got);
}

TEST_CASE("zero-weight umbrella reproduces the cone face complex") {
  for (const auto& p : full_corpus()) {
    Umbrella u(p, WeightVector::zeros(p.size()));
    REQUIRE(u.facets().size() == 1);
    CHECK(u.facets()[0].members.size() == p.size());
    for (const Rat& c : u.facets()[0].functional) CHECK(c == 0);
    auto cone = codim1_cone_faces(p);
    auto sub = u.faces_of_dim(p.rank() - 2);
    REQUIRE(cone.size() == sub.size());
    for (std::size_t i = 0; i < cone.size(); ++i)
      CHECK(cone[i].members == sub[i].members);
    // supporting functionals vanish on their face, strictly positive off it
    for (const auto& cf : cone)
      for (std::size_t j = 0; j < p.size(); ++j) {
        bool member = std::binary_search(cf.members.begin(), cf.members.end(), j);
        Int v = cf.evaluate(p.frame_generator(j));
        REQUIRE((member ? v == 0 : v > 0));
      }
  }
}

TEST_CASE("cone facets of the projective rank-3 semigroup") {
  auto p = example23();
  auto faces = codim1_cone_faces(p);
  REQUIRE(faces.size() == 4);
  // members tau_1..tau_4 after sorting
  CHECK(faces[0].members == members({0, 1, 2, 3}));
  CHECK(faces[1].members == members({0, 4}));
  CHECK(faces[2].members == members({3, 5}));
  CHECK(faces[3].members == members({4, 5}));
  // functionals are unique up to positive scale; compare with the
  // printed representatives (0,0,1), (0,1,-1), (1,-1/4,0), (1,0,-1)
  auto proportional = [](const IntVec& got, const RatVec& want) {
    IntVec w = primitive_integer(want);
    return got == w;
  };
  CHECK(proportional(faces[0].functional, rats({"0", "0", "1"})));
  CHECK(proportional(faces[1].functional, rats({"0", "1", "-1"})));
  CHECK(proportional(faces[2].functional, rats({"1", "-1/4", "0"})));
  CHECK(proportional(faces[3].functional, rats({"1", "0", "-1"})));
  for (const auto& f : faces)
    for (std::size_t j = 0; j < p.size(); ++j)
      CHECK(f.evaluate(p.frame_generator(j)) >= 0);
}

TEST_CASE("cone facets of plane quadrants and the quartic") {
  SemigroupPresentation n2(IntMatrix::identity(2));
  auto faces = codim1_cone_faces(n2);
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].members == members({0}));
  CHECK(faces[1].members == members({1}));

  auto q = codim1_cone_faces(example51());
  REQUIRE(q.size() == 2);
  CHECK(q[0].members == members({0}));  // ray through (1,0)
  CHECK(q[1].members == members({3}));  // ray through (1,4)
}

TEST_CASE("newton degrees on the staircase semigroup") {
  NewtonDegrees deg(example37());
  CHECK(deg.degree(vec({1, 1})) == Rat(1, 2));
  CHECK(deg.degree(vec({0, 0})) == 0);
  CHECK(deg.facet_cones_containing(vec({1, 1})).size() == 2);
  CHECK_THROWS_AS(deg.degree(vec({-1, 0})), invalid_input_error);
}

TEST_CASE("newton degrees on the rank-3 corpus semigroup") {
  auto p = example15();
  NewtonDegrees deg(p);
  CHECK(deg.generator_degree(0) == Rat(2, 3));
  CHECK(deg.degree(add(p.frame_generator(2), p.frame_generator(4))) == Rat(4, 3));
  CHECK(deg.degree(add(p.frame_generator(3), p.frame_generator(4))) == Rat(5, 3));
  CHECK(deg.facet_cones_containing(p.frame_generator(0)) ==
        std::vector<std::size_t>{0, 1});
  CHECK(deg.facet_cones_containing(p.frame_generator(5)) ==
        std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("generator degrees sit in (0,1] and hit 1 exactly on facets") {
  for (const auto& p : full_corpus()) {
    NewtonDegrees deg(p);
    const auto& u = deg.one_umbrella();
    for (std::size_t j = 0; j < p.size(); ++j) {
      Rat d = deg.generator_degree(j);
      REQUIRE(d > 0);
      REQUIRE(d <= 1);
      bool on_facet = false;
      for (const auto& f : u.facets())
        on_facet |= std::binary_search(f.members.begin(), f.members.end(), j);
      REQUIRE((d == 1) == on_facet);
    }
  }
}

TEST_CASE("degree subadditivity and the shared-facet-cone criterion") {
  auto gen = rng(23);
  for (const auto& p : full_corpus()) {
    NewtonDegrees deg(p);
    std::uniform_int_distribution<int> mult(0, 3);
    for (int trial = 0; trial < 220; ++trial) {
      IntVec h(p.rank(), Int(0)), k(p.rank(), Int(0));
      for (std::size_t j = 0; j < p.size(); ++j) {
        h = add(h, scale(Int(mult(gen)), p.frame_generator(j)));
        k = add(k, scale(Int(mult(gen)), p.frame_generator(j)));
      }
      Rat dh = deg.degree(h), dk = deg.degree(k), ds = deg.degree(add(h, k));
      REQUIRE(ds <= dh + dk);
      REQUIRE((ds == dh + dk) == deg.share_facet_cone(h, k));
    }
  }
}

TEST_CASE("interior faces exclude everything on a boundary facet") {
  auto p = example15();
  Umbrella u(p, WeightVector::ones(6));
  // a6 spans an extreme ray of C_H, so the vertex {a6} sits on a
  // boundary wall; the edges {a2,a6} and {a4,a6} cut through the middle
  std::vector<std::vector<std::size_t>> interior;
  for (const auto& f : u.interior_faces()) interior.push_back(f.members);
  std::vector<std::vector<std::size_t>> expect = {
      {1, 5}, {3, 5}, {1, 3, 5}, {1, 4, 5}, {2, 3, 5}};
  std::sort(interior.begin(), interior.end());
  std::sort(expect.begin(), expect.end());
  CHECK(interior == expect);
}

TEST_CASE("normalized volume of the corpus polytopes") {
  CHECK(normalized_volume(example23()) == 7);
  SemigroupPresentation id3(IntMatrix::identity(3));
  CHECK(normalized_volume(id3) == 1);

  // two independent triangulations must agree
  auto p = example15();
  std::vector<IntVec> pts;
  pts.push_back(vec({0, 0, 0}));
  for (std::size_t j = 0; j < p.size(); ++j) pts.push_back(p.frame_generator(j));
  Int pulled = normalized_volume(pts);
  Int placed = placing_volume(pts);
  CHECK(pulled == placed);
  CHECK(pulled == normalized_volume(p));

  std::vector<IntVec> pts23;
  pts23.push_back(vec({0, 0, 0}));
  for (std::size_t j = 0; j < example23().size(); ++j)
    pts23.push_back(example23().frame_generator(j));
  CHECK(placing_volume(pts23) == 7);
}

TEST_CASE("volume is invariant under unimodular maps and permutation") {
  auto gen = rng(31);
  auto p = example23();
  std::vector<IntVec> pts;
  pts.push_back(vec({0, 0, 0}));
  for (std::size_t j = 0; j < p.size(); ++j) pts.push_back(p.frame_generator(j));
  std::uniform_int_distribution<int> pick(0, 2), shear(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix t = IntMatrix::identity(3);
    for (int s = 0; s < 4; ++s) {
      std::size_t i = pick(gen), j = pick(gen);
      if (i == j) continue;
      IntMatrix e = IntMatrix::identity(3);
      e.at(i, j) = shear(gen);
      t = t * e;
    }
    std::vector<IntVec> mapped;
    for (const auto& q : pts) mapped.push_back(t.apply(q));
    std::shuffle(mapped.begin(), mapped.end(), gen);
    REQUIRE(normalized_volume(mapped) == 7);
  }
}

TEST_CASE("volume rejects degenerate point sets") {
  CHECK_THROWS_AS(normalized_volume({vec({0, 0}), vec({1, 1}), vec({2, 2})}),
                  invalid_input_error);
}
