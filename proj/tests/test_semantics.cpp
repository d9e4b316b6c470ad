#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "nckit/errors.hpp"
#include "nckit/formula.hpp"
#include "nckit/kripke.hpp"
#include "nckit/semantics.hpp"
#include "testutil.hpp"

using namespace nckit;
using testutil::fixture_frame;
using testutil::fixture_model;

namespace {

Formula iff_of(const Formula& a, const Formula& b) { return Formula::iff(a, b); }

void check_valid_everywhere(const Model& m, const Formula& f) {
  ModelValidity v = valid_on_model(m, f);
  CHECK_MESSAGE(v.valid, render(f));
}

}  // namespace

TEST_CASE("truth values on the shipped models") {
  Model sec2 = fixture_model("sec2_M.json");
  CHECK(satisfies(sec2, "s", parse("#(p -> q) & #p")));
  CHECK(!satisfies(sec2, "s", parse("#q")));
  CHECK(satisfies(sec2, "s", parse("p & q -> q")));
  CHECK(!satisfies(sec2, "s", parse("#(p & q) -> #q")));

  Model n = fixture_model("prop2_5.json");
  CHECK(satisfies(n, "s", parse("%p")));
  CHECK(!satisfies(n, "s", parse("#p")));
  CHECK(satisfies(n, "s", parse("o!p")));
  CHECK(!satisfies(n, "s", parse("#!p")));
  // t is a dead end: every universal modality holds vacuously.
  for (const char* f : {"#p", "[]p", "%p", "o p", "#false", "[]false"})
    CHECK(satisfies(n, "t", parse(f)));

  Model m74 = fixture_model("prop7_4.json");
  CHECK(satisfies(m74, "s", parse("!#p")));
  CHECK(!satisfies(m74, "s", parse("#!#p")));
  CHECK(!satisfies(m74, "s", parse("!#p -> #!#p")));

  Model m32 = fixture_model("prop3_2_M.json");
  Model n32 = fixture_model("prop3_2_N.json");
  CHECK(!satisfies(m32, "s", parse("[]false")));
  CHECK(satisfies(n32, "t", parse("[]false")));

  Model m35 = fixture_model("prop3_5_M.json");
  Model n35 = fixture_model("prop3_5_N.json");
  CHECK(satisfies(m35, "s", parse("#p")));
  CHECK(!satisfies(n35, "t", parse("#p")));
  Model m35b = fixture_model("prop3_5_Mp.json");
  Model n35b = fixture_model("prop3_5_Np.json");
  CHECK(satisfies(m35b, "s", parse("#p")));
  CHECK(!satisfies(n35b, "t", parse("#p")));

  CHECK_THROWS_AS(satisfies(m32, "zz", parse("p")), UnknownWorld);
}

TEST_CASE("model validity") {
  testutil::Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    Model m = testutil::random_model(rng, 1 + testutil::pick(rng, 4), {"p"});
    check_valid_everywhere(m, parse("#true"));
    check_valid_everywhere(m, parse("#p <-> #!p"));
  }
  ModelValidity v = valid_on_model(fixture_model("prop2_5.json"), parse("#p"));
  CHECK(!v.valid);
  CHECK(*v.counterexample_world == "s");
}

TEST_CASE("frame validity with witnesses") {
  Formula b = parse("p -> #(#p -> p)");
  CHECK(valid_on_frame(fixture_frame("prop4_6_sym.json"), b).valid);

  FrameValidity w = valid_on_frame(fixture_frame("oneway.json"), b);
  REQUIRE(!w.valid);
  CHECK(w.counterexample->valuation ==
        Valuation{{"p", {"s"}}});
  CHECK(w.counterexample->world == "s");

  CHECK(valid_on_frame(fixture_frame("prop4_7_loop.json"), parse("#p")).valid);
  FrameValidity w2 = valid_on_frame(fixture_frame("oneway.json"), parse("#p"));
  REQUIRE(!w2.valid);
  CHECK(w2.counterexample->valuation == Valuation{{"p", {"s"}}});

  CHECK(valid_on_frame(fixture_frame("trans_chain.json"), parse("#p -> ##p")).valid);
  // The non-transitive two-cycle still validates the # version (the #
  // language cannot define transitivity), while the [] version detects it.
  CHECK(valid_on_frame(fixture_frame("prop4_5_F.json"), parse("#p -> ##p")).valid);
  CHECK(!valid_on_frame(fixture_frame("prop4_5_F.json"), parse("[]p -> [][]p")).valid);
}

TEST_CASE("frame entailment") {
  std::vector<Formula> gamma{parse("#p"), parse("p")};
  for (const char* fr : {"oneway.json", "prop4_5_F.json", "trans_chain.json",
                         "prop4_7_loop.json"})
    CHECK(entails_on_frame(fixture_frame(fr), gamma, parse("[]p")).valid);

  FrameValidity v =
      entails_on_frame(fixture_frame("oneway.json"), {parse("#p")}, parse("[]p"));
  CHECK(!v.valid);
  FrameValidity v2 = entails_on_frame(fixture_frame("oneway.json"), {}, parse("#p"));
  CHECK(!v2.valid);
}

TEST_CASE("interdefinability laws hold on random models") {
  testutil::Rng rng(8872);
  int worlds_checked = 0;
  for (int i = 0; i < 300; ++i) {
    int atoms = 1 + testutil::pick(rng, 3);
    std::vector<std::string> names;
    for (int a = 0; a < atoms; ++a) names.push_back(std::string(1, char('p' + a)));
    Model m = testutil::random_model(rng, 1 + testutil::pick(rng, 6), names);
    Formula f = testutil::random_formula(rng, names, 2);
    Formula nf = Formula::neg(f);

    check_valid_everywhere(
        m, iff_of(Formula::tri(f),
                  Formula::conj(Formula::impl(f, Formula::box(f)),
                                Formula::impl(nf, Formula::box(nf)))));
    check_valid_everywhere(
        m, iff_of(Formula::tridown(f),
                  Formula::disj(Formula::conj(f, Formula::diamond(nf)),
                                Formula::conj(nf, Formula::diamond(f)))));
    check_valid_everywhere(
        m, iff_of(Formula::tri(f),
                  Formula::conj(Formula::circ(f), Formula::circ(nf))));
    check_valid_everywhere(m, iff_of(Formula::tri(f), Formula::tri(nf)));
    check_valid_everywhere(
        m, iff_of(Formula::delta(f),
                  Formula::disj(Formula::box(f), Formula::box(nf))));
    worlds_checked += m.size();
  }
  CHECK(worlds_checked > 300);
}

TEST_CASE("strength and weak distribution laws hold on random models") {
  testutil::Rng rng(140);
  for (int i = 0; i < 300; ++i) {
    Model m = testutil::random_model(rng, 1 + testutil::pick(rng, 5), {"p", "q"});
    Formula f = testutil::random_formula(rng, {"p", "q"}, 2);
    Formula g = testutil::random_formula(rng, {"p", "q"}, 2);

    check_valid_everywhere(m, Formula::impl(Formula::tri(f), Formula::delta(f)));
    check_valid_everywhere(m, Formula::impl(Formula::tri(f), Formula::circ(f)));
    check_valid_everywhere(
        m, Formula::impl(f, iff_of(Formula::box(f), Formula::tri(f))));
    check_valid_everywhere(
        m, Formula::impl(
               Formula::conj(Formula::conj(Formula::tri(f),
                                           Formula::tri(Formula::impl(f, g))),
                             f),
               Formula::tri(g)));
  }
}

TEST_CASE("on reflexive models the two noncontingency modalities agree") {
  testutil::Rng rng(577);
  for (int i = 0; i < 100; ++i) {
    Model m = testutil::random_model(rng, 1 + testutil::pick(rng, 5), {"p", "q"},
                                     testutil::FrameShape::Reflexive);
    Formula f = testutil::random_formula(rng, {"p", "q"}, 2);
    check_valid_everywhere(m, iff_of(Formula::tri(f), Formula::delta(f)));
  }
}

TEST_CASE("definable family basics") {
  Model one(Frame({"w"}, {}), {{"p", {}}});
  DefinableFamily fam = DefinableFamily::closure(one, {"p"}, Lang::Tri);
  std::set<std::uint64_t> sets(fam.sets().begin(), fam.sets().end());
  CHECK(sets == std::set<std::uint64_t>{0, 1});

  DisjointUnion u32 = disjoint_union(fixture_model("prop3_2_M.json"),
                                     fixture_model("prop3_2_N.json"));
  DefinableFamily f32 = DefinableFamily::closure(u32.model, {"p"}, Lang::Tri);
  int s = u32.model.index_of("s·L"), t = u32.model.index_of("t·R");
  for (std::uint64_t x : f32.sets())
    CHECK(((x >> s) & 1) == ((x >> t) & 1));

  DisjointUnion u35 = disjoint_union(fixture_model("prop3_5_M.json"),
                                     fixture_model("prop3_5_N.json"));
  int us = u35.model.index_of("s·L"), ut = u35.model.index_of("t·R");
  DefinableFamily fd = DefinableFamily::closure(u35.model, {"p"}, Lang::Delta);
  CHECK(!fd.separating_index(us, ut).has_value());
  DefinableFamily ft = DefinableFamily::closure(u35.model, {"p"}, Lang::Tri);
  REQUIRE(ft.separating_index(us, ut).has_value());
  std::uint64_t tri_p = 0;
  std::vector<bool> tv = truth_set(u35.model, parse("#p"));
  for (int i = 0; i < u35.model.size(); ++i)
    if (tv[i]) tri_p |= 1ull << i;
  CHECK(ft.contains(tri_p));
}

TEST_CASE("definable family is a fixpoint and reconstructs formulas") {
  testutil::Rng rng(3141);
  for (int i = 0; i < 40; ++i) {
    Model m = testutil::random_model(rng, 1 + testutil::pick(rng, 4), {"p", "q"});
    Lang lang = (i % 2 == 0) ? Lang::Tri : Lang::Box;
    DefinableFamily fam = DefinableFamily::closure(m, {"p", "q"}, lang);
    std::uint64_t full = (m.size() == 64) ? ~0ull : (1ull << m.size()) - 1;

    for (std::uint64_t x : fam.sets()) {
      CHECK(fam.contains(full & ~x));
      for (std::uint64_t y : fam.sets()) CHECK(fam.contains(x & y));
    }
    for (std::size_t k = 0; k < fam.size(); ++k) {
      Formula f = fam.formula_for(k);
      CHECK(in_language(f, lang));
      std::vector<bool> tv = truth_set(m, f);
      std::uint64_t mask = 0;
      for (int w = 0; w < m.size(); ++w)
        if (tv[w]) mask |= 1ull << w;
      CHECK(mask == fam.sets()[k]);
    }
  }
}

TEST_CASE("logical equivalence is an equivalence relation with separators") {
  testutil::Rng rng(6021);
  for (int i = 0; i < 25; ++i) {
    Model m = testutil::random_model(rng, 1 + testutil::pick(rng, 4), {"p"});
    const auto& ws = m.worlds();
    for (const auto& a : ws) CHECK(logically_equivalent(m, a, a, {"p"}, Lang::Tri));
    for (const auto& a : ws)
      for (const auto& b : ws) {
        bool ab = logically_equivalent(m, a, b, {"p"}, Lang::Tri);
        CHECK(ab == logically_equivalent(m, b, a, {"p"}, Lang::Tri));
        auto sep = separating_formula(m, a, b, {"p"}, Lang::Tri);
        CHECK(sep.has_value() == !ab);
        if (sep) {
          CHECK(in_language(*sep, Lang::Tri));
          CHECK(satisfies(m, a, *sep));
          CHECK(!satisfies(m, b, *sep));
        }
        for (const auto& c : ws)
          if (ab && logically_equivalent(m, b, c, {"p"}, Lang::Tri))
            CHECK(logically_equivalent(m, a, c, {"p"}, Lang::Tri));
      }
  }
}

TEST_CASE("named equivalences across the shipped model pairs") {
  DisjointUnion u33 = disjoint_union(fixture_model("prop3_3_M.json"),
                                     fixture_model("prop3_3_N.json"));
  CHECK(logically_equivalent(u33.model, "s·L", "s'·R", {"p"}, Lang::Tri));
  CHECK(logically_equivalent(u33.model, "t·L", "t'·R", {"p"}, Lang::Tri));
  CHECK(!logically_equivalent(u33.model, "s·L", "s'·R", {"p"}, Lang::Box));
  auto sep = separating_formula(u33.model, "s'·R", "s·L", {"p"}, Lang::Box);
  REQUIRE(sep.has_value());
  CHECK(satisfies(u33.model, "s'·R", *sep));
  CHECK(!satisfies(u33.model, "s·L", *sep));

  DisjointUnion u35b = disjoint_union(fixture_model("prop3_5_Mp.json"),
                                      fixture_model("prop3_5_Np.json"));
  CHECK(logically_equivalent(u35b.model, "s·L", "t·R", {"p"}, Lang::Delta));
  CHECK(!logically_equivalent(u35b.model, "s·L", "t·R", {"p"}, Lang::Tri));
}

TEST_CASE("valuation enumeration stops at the budget") {
  Frame f = fixture_frame("trans_chain.json");
  CHECK_THROWS_AS(valid_on_frame(f, parse("#p & #q & #r"), 100), BudgetExceeded);
  try {
    valid_on_frame(f, parse("#p & #q & #r"), 100);
  } catch (const BudgetExceeded& e) {
    CHECK(e.required == 512);
    CHECK(e.limit == 100);
  }
  CHECK_NOTHROW(valid_on_frame(f, parse("#p & #q & #r"), 512));
}
