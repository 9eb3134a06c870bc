#include <doctest.h>

#include <algorithm>

#include "logquiver/catalog.hpp"
#include "logquiver/errors.hpp"
#include "logquiver/model_io.hpp"

using namespace logquiver;

namespace {

std::vector<Params> parameter_grid(const CatalogEntry& e, long top) {
  std::vector<Params> out{Params{}};
  for (const std::string& name : e.parameter_names) {
    std::vector<Params> next;
    for (const Params& p : out)
      for (long v = name == "N" ? 1 : 0; v <= top; ++v) {
        Params q = p;
        q[name] = v;
        next.push_back(q);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("lattice helpers") {
  CHECK(skew_form({1, 0}, {0, 1}) == 1);
  CHECK(is_primitive({2, 3}));
  CHECK_FALSE(is_primitive({2, 4}));
  CHECK_FALSE(is_primitive({0, 0}));
  long k = 0;
  CHECK(primitive_part({-4, 6}, &k) == Lattice{-2, 3});
  CHECK(k == 2);
}

TEST_CASE("build_quiver on small configurations") {
  SUBCASE("two blow-ups pairing to 2 give the Kronecker quiver") {
    ToricModel m{"kronecker", {{1, 0}, {1, 2}}, {{0, 1, false}, {1, 1, false}}, 0, 1, {}};
    auto [q, d] = build_quiver(m);
    CHECK(q.arrows == std::vector<std::vector<int>>{{0, 2}, {0, 0}});
    CHECK(d.entries == std::vector<long>{1, 1});
  }
  SUBCASE("P2(1,4) d=1 is a source with two arrows") {
    auto inst = catalog("P2(1,4)", {{"d", 1}});
    auto [q, d] = build_quiver(inst.model);
    CHECK(q.vertex_count == 3);
    CHECK(q.arrow_count() == 2);
    CHECK(d.entries == std::vector<long>{1, 1, 1});
    CHECK(q.arrows[2][0] == 1);
    CHECK(q.arrows[2][1] == 1);
  }
  SUBCASE("P2(1,4) d=2 is the five vertex star") {
    auto [q, d] = build_quiver(catalog("P2(1,4)", {{"d", 2}}).model);
    CHECK(q.vertex_count == 5);
    CHECK(q.arrow_count() == 4);
    CHECK(d.entries == std::vector<long>{1, 1, 1, 1, 2});
  }
  SUBCASE("records on the same ray never connect") {
    ToricModel m{"same", {{0, 1}, {1, 0}}, {{0, 1, false}, {0, 1, false}}, 0, 1, {}};
    CHECK(build_quiver(m).first.arrow_count() == 0);
  }
}

TEST_CASE("acyclicity and topological order") {
  Quiver q(3);
  q.arrows[0][1] = 1;
  q.arrows[1][2] = 2;
  auto order = topological_order(q);
  REQUIRE(order);
  CHECK(*order == std::vector<size_t>{0, 1, 2});
  q.arrows[2][0] = 1;
  CHECK_FALSE(is_acyclic(q));
}

TEST_CASE("catalog: ten entries, seven acyclic") {
  const auto& entries = catalog_entries();
  CHECK(entries.size() == 10);
  CHECK(std::count_if(entries.begin(), entries.end(), [](const CatalogEntry& e) { return e.acyclic; }) == 7);
  CHECK_THROWS_AS(find_entry("P3"), UsageError);
  CHECK_THROWS_AS(catalog("P2(1,4)", {{"d", 1}, {"e", 2}}), UsageError);
  CHECK_THROWS_AS(catalog("P2(1,4)", {}), UsageError);
  CHECK_THROWS_AS(catalog("P2(1,4)", {{"d", 0}}), UsageError);
  CHECK_THROWS_AS(catalog("FN(N+4,-N)", {{"N", 0}, {"d1", 1}, {"d2", 1}}), UsageError);
}

TEST_CASE("catalog: balancing, acyclicity verdicts and extraction over a parameter grid") {
  for (const CatalogEntry& e : catalog_entries()) {
    for (const Params& p : parameter_grid(e, 3)) {
      CatalogInstance inst;
      try {
        inst = catalog(e.name, p);
      } catch (const UsageError&) {
        continue;  // tangency order zero or negative point count
      }
      CAPTURE(e.name);
      CAPTURE(format_params(p));
      auto [q, d] = build_quiver(inst.model);
      if (!d.valid()) continue;
      // sum of degree * ray vanishes identically in the parameters
      Lattice sum{};
      for (size_t i = 0; i < inst.model.rays.size(); ++i) sum = sum + inst.model.boundary_degrees[i] * inst.model.rays[i];
      CHECK(sum.is_zero());
      CHECK(check_balancing(inst.model, inst.model.boundary_degrees).ok);
      if (q.arrow_count() > 0 && std::all_of(d.entries.begin(), d.entries.end(), [](long x) { return x > 0; }))
        CHECK(is_acyclic(q) == e.acyclic);
      const ExtractionRay r = extraction_ray(inst.model);
      CHECK(r.ell == inst.beta_d1);
      CHECK(r.direction == -inst.model.rays[inst.model.tangency_ray]);
    }
  }
}

TEST_CASE("cyclic entries contain oriented cycles at generic parameters") {
  CHECK_FALSE(is_acyclic(build_quiver(catalog("F1(0,4)", {{"d1", 1}, {"d2", 1}}).model).first));
  CHECK_FALSE(is_acyclic(build_quiver(catalog("F1(1,3)", {{"d1", 1}, {"d2", 1}}).model).first));
  CHECK_FALSE(is_acyclic(build_quiver(catalog("FN(-N,N+4)", {{"N", 1}, {"d1", 1}, {"d2", 2}}).model).first));
}

TEST_CASE("invalid dimension vectors") {
  auto [q, d] = build_quiver(catalog("F1(4,0)", {{"d1", 2}, {"d2", 1}}).model);
  CHECK_FALSE(d.valid());
}

TEST_CASE("balancing detects violations") {
  auto inst = catalog("P2(1,4)", {{"d", 1}});
  auto degrees = inst.model.boundary_degrees;
  degrees[0] += 1;
  CHECK_FALSE(check_balancing(inst.model, degrees).ok);
}

TEST_CASE("model validation") {
  ToricModel m{"bad", {{2, 0}}, {{0, 1, false}}, 0, 1, {}};
  CHECK_THROWS_AS(m.validate(), ModelError);
  ToricModel empty{"empty", {{1, 0}}, {}, 0, 1, {}};
  CHECK_THROWS_AS(empty.validate(), ModelError);
  ToricModel index{"index", {{1, 0}}, {{3, 1, false}}, 0, 1, {}};
  CHECK_THROWS_AS(index.validate(), ModelError);
}

TEST_CASE("model JSON round trip and schema errors") {
  const ToricModel m = catalog("F0(2,2)", {{"d1", 1}, {"d2", 2}}).model;
  const ToricModel back = model_from_json(model_to_json(m));
  CHECK(back.rays == m.rays);
  CHECK(back.blowups == m.blowups);
  CHECK(back.tangency_ray == m.tangency_ray);
  CHECK(back.tangency_order == m.tangency_order);
  CHECK_THROWS_AS(model_from_json(nlohmann::json{{"rays", {{1, 0}}}}), UsageError);
  CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"rays":[[1]],"blowups":[],"tangency_ray":0,"tangency_order":1})")),
                  UsageError);
  CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), UsageError);
}

TEST_CASE("parameter parsing") {
  CHECK(parse_params("d1=1,d2=22") == Params{{"d1", 1}, {"d2", 22}});
  CHECK(parse_params("") == Params{});
  CHECK_THROWS_AS(parse_params("d1"), UsageError);
  CHECK_THROWS_AS(parse_params("d=x"), UsageError);
  CHECK(format_params({{"d1", 1}, {"d2", 2}}) == "d1=1,d2=2");
}
