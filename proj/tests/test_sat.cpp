#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "nckit/errors.hpp"
#include "nckit/json_io.hpp"
#include "nckit/sat.hpp"
#include "nckit/semantics.hpp"
#include "nckit/translate.hpp"
#include "testutil.hpp"

using namespace nckit;

namespace {

SatResult run(const std::string& text, std::set<FrameProperty> cls = {},
              int max_worlds = 4) {
  SatOptions opt;
  opt.frame_class = std::move(cls);
  opt.max_worlds = max_worlds;
  return satisfiable(parse(text), opt);
}

// Exhaustive search over every pointed model with 1..max_n worlds and the
// given atoms, with no pruning at all: does any satisfy f?
bool oracle_sat(const Formula& f, const std::vector<std::string>& atoms,
                int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::string> ws;
    for (int i = 0; i < n; ++i) ws.push_back("w" + std::to_string(i));
    int bits_r = n * n, bits_v = n * static_cast<int>(atoms.size());
    for (std::uint64_t rm = 0; rm < (1ULL << bits_r); ++rm) {
      std::vector<std::pair<std::string, std::string>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rm >> (i * n + j) & 1) edges.emplace_back(ws[i], ws[j]);
      Frame fr(ws, edges);
      for (std::uint64_t vm = 0; vm < (1ULL << bits_v); ++vm) {
        std::map<std::string, std::set<std::string>> val;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
          std::set<std::string> tr;
          for (int i = 0; i < n; ++i)
            if (vm >> (a * n + i) & 1) tr.insert(ws[i]);
          val[atoms[a]] = tr;
        }
        Model m(fr, val);
        for (const auto& w : ws)
          if (satisfies(m, w, f)) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("certified unsatisfiability at tiny bounds") {
  // Propositional contradiction: no boxes, so one world decides everything.
  SatResult r = run("p & !p", {}, 3);
  CHECK(r.outcome == SatResult::Outcome::UnsatCertified);
  CHECK(r.certification_bound == 1);
  CHECK(r.explored_bound == 1);  // search stopped at the certificate
  CHECK(!r.model.has_value());
  CHECK(fmp_world_bound(parse("p & !p")) == 1);

  // The strength law #p -> %p is a validity; its negation has two box
  // units at depth one, so three worlds certify.
  SatResult s = run("!(#p -> %p)", {}, 4);
  CHECK(s.outcome == SatResult::Outcome::UnsatCertified);
  CHECK(s.certification_bound == 3);
  CHECK(fmp_world_bound(parse("!(#p -> %p)")) == 3);

  // Another validity from the # algebra: #p <-> #!p.
  CHECK(run("!(#p <-> #!p)", {}, 4).outcome ==
        SatResult::Outcome::UnsatCertified);
}

TEST_CASE("satisfiable formulas come back with verified witnesses") {
  SatResult r = run("!#p", {}, 2);
  REQUIRE(r.outcome == SatResult::Outcome::Sat);
  REQUIRE(r.model.has_value());
  REQUIRE(r.world.has_value());
  CHECK(r.model->worlds().size() == 2);  // one world cannot refute #p
  CHECK(r.explored_bound == 2);
  CHECK(satisfies(*r.model, *r.world, parse("!#p")));

  SatResult t = run("~p & ~(~p)", {}, 4);
  REQUIRE(t.outcome == SatResult::Outcome::Sat);
  CHECK(satisfies(*t.model, *t.world, parse("~p & ~(~p)")));
  CHECK(fmp_world_bound(parse("~p & ~(~p)")) == 21);

  // A one-world model satisfies every # formula of this shape.
  SatResult u = run("#p & #q", {}, 3);
  REQUIRE(u.outcome == SatResult::Outcome::Sat);
  CHECK(u.model->worlds().size() == 1);
}

TEST_CASE("frame-class constraints restrict the search") {
  // The 5 schema !#p -> #!#p has Euclidean countermodels...
  SatResult e = run("!#p & !#!#p", {FrameProperty::Euclidean}, 3);
  REQUIRE(e.outcome == SatResult::Outcome::Sat);
  CHECK(has_property(e.model->frame(), FrameProperty::Euclidean).holds);
  CHECK(satisfies(*e.model, *e.world, parse("!#p & !#!#p")));

  // ...but none that are also reflexive: a reflexive Euclidean relation is
  // an equivalence relation, and there the schema is valid. The class is
  // constrained, so the answer stays a bounded one.
  SatResult re = run("!#p & !#!#p",
                     {FrameProperty::Reflexive, FrameProperty::Euclidean}, 3);
  CHECK(re.outcome == SatResult::Outcome::UnsatUpTo);
  CHECK(re.explored_bound == 3);

  // Supporting frame fact: the schema is valid on every small equivalence
  // frame.
  testutil::Rng rng(77);
  for (int i = 0; i < 30; ++i) {
    Frame fr = testutil::random_frame(rng, 1 + testutil::pick(rng, 3),
                                      testutil::FrameShape::S5);
    CHECK(valid_on_frame(fr, parse("!#p -> #!#p")).valid);
  }

  // Constrained classes never certify, even for plain contradictions.
  SatResult c = run("p & !p", {FrameProperty::Reflexive}, 2);
  CHECK(c.outcome == SatResult::Outcome::UnsatUpTo);

  // Returned witnesses respect every requested property.
  const std::set<FrameProperty> classes[] = {
      {FrameProperty::Reflexive},
      {FrameProperty::Serial},
      {FrameProperty::Symmetric},
      {FrameProperty::Transitive},
      {FrameProperty::Reflexive, FrameProperty::Transitive},
      {FrameProperty::Symmetric, FrameProperty::Euclidean},
  };
  testutil::Rng rng2(123);
  int sat_seen = 0;
  for (int i = 0; i < 60; ++i) {
    Formula f = testutil::random_formula(rng2, {"p", "q"}, 2);
    const auto& cls = classes[i % 6];
    SatOptions opt;
    opt.frame_class = cls;
    opt.max_worlds = 3;
    SatResult r = satisfiable(f, opt);
    if (r.outcome != SatResult::Outcome::Sat) continue;
    ++sat_seen;
    CHECK(satisfies(*r.model, *r.world, f));
    for (FrameProperty p : cls) CHECK(has_property(r.model->frame(), p).holds);
  }
  CHECK(sat_seen > 20);
}

TEST_CASE("agreement with an exhaustive unpruned search") {
  testutil::Rng rng(20240);
  int sat_count = 0;
  for (int i = 0; i < 100; ++i) {
    Formula f = testutil::random_formula(rng, {"p", "q"}, 2);
    Formula neg = Formula::neg(f);
    SatOptions opt;
    opt.max_worlds = 3;
    SatResult r = satisfiable(neg, opt);
    bool expected = oracle_sat(neg, {"p", "q"}, 3);
    CAPTURE(render(neg));
    CHECK((r.outcome == SatResult::Outcome::Sat) == expected);
    if (r.outcome == SatResult::Outcome::Sat) {
      ++sat_count;
      CHECK(satisfies(*r.model, *r.world, neg));
      CHECK(static_cast<int>(r.model->worlds().size()) <= 3);
    }
  }
  // Random formulas are rarely valid, so most negations are satisfiable.
  CHECK(sat_count > 50);

  // The unsat side of the agreement, on negations of known validities.
  for (const char* valid : {"#p -> %p", "#p <-> #!p", "#p & #q -> #(p & q)",
                            "%p <-> ([]p | []!p)", "#p -> o p"}) {
    Formula neg = Formula::neg(parse(valid));
    SatOptions opt;
    opt.max_worlds = 3;
    SatResult r = satisfiable(neg, opt);
    CAPTURE(valid);
    CHECK(r.outcome != SatResult::Outcome::Sat);
    CHECK(!oracle_sat(neg, {"p", "q"}, 3));
  }
}

TEST_CASE("monotonicity and determinism in the world bound") {
  testutil::Rng rng(555);
  for (int i = 0; i < 40; ++i) {
    Formula f = testutil::random_formula(rng, {"p"}, 2);
    SatOptions small;
    small.max_worlds = 2;
    SatResult a = satisfiable(f, small);
    if (a.outcome != SatResult::Outcome::Sat) continue;
    SatOptions big;
    big.max_worlds = 4;
    SatResult b = satisfiable(f, big);
    REQUIRE(b.outcome == SatResult::Outcome::Sat);
    // Canonical enumeration: the same minimal witness reappears.
    CHECK(b.explored_bound == a.explored_bound);
    CHECK(model_to_json(*b.model) == model_to_json(*a.model));
    CHECK(*b.world == *a.world);
  }
}

TEST_CASE("budget exhaustion is distinct from unsat") {
  SatOptions opt;
  opt.max_worlds = 4;
  opt.budget = 2;
  CHECK_THROWS_AS(satisfiable(parse("~p & ~(~p)"), opt), BudgetExceeded);
  try {
    satisfiable(parse("~p & ~(~p)"), opt);
  } catch (const BudgetExceeded& e) {
    CHECK(e.limit == 2);
    CHECK(e.required > 2);
  }
  CHECK_THROWS_AS(satisfiable(parse("p"), SatOptions{{}, 0, 1000}),
                  std::invalid_argument);
}

TEST_CASE("outcome names") {
  CHECK(std::string(sat_outcome_name(SatResult::Outcome::Sat)) == "sat");
  CHECK(std::string(sat_outcome_name(SatResult::Outcome::UnsatUpTo)) ==
        "unsat-up-to");
  CHECK(std::string(sat_outcome_name(SatResult::Outcome::UnsatCertified)) ==
        "unsat-certified");
}
