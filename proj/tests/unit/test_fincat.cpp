#include "doctest.h"

#include "pathcat/fincat.hpp"

using namespace pathcat;

namespace {

using M = TableCategory::Morphism;

constexpr ObjId O(std::uint32_t v) { return obj_id(v); }
constexpr MorId A(std::uint32_t v) { return mor_id(v); }

// 0 -> 1 with identities 0 and 1 and the arrow 2.
TableCategory walking_arrow() {
  return TableCategory(2, {{O(0), O(0)}, {O(1), O(1)}, {O(0), O(1)}}, {A(0), A(1)},
                       {{A(0), A(0), A(0)}, {A(1), A(1), A(1)}, {A(2), A(0), A(2)},
                        {A(1), A(2), A(2)}});
}

// x -> 1 <- y with nothing else: x and y have no product.
TableCategory cospan() {
  return TableCategory(3, {{O(0), O(0)}, {O(1), O(1)}, {O(2), O(2)}, {O(0), O(2)}, {O(1), O(2)}},
                       {A(0), A(1), A(2)},
                       {{A(0), A(0), A(0)}, {A(1), A(1), A(1)}, {A(2), A(2), A(2)},
                        {A(3), A(0), A(3)}, {A(2), A(3), A(3)}, {A(4), A(1), A(4)},
                        {A(2), A(4), A(4)}});
}

}  // namespace

TEST_CASE("walking arrow") {
  TableCategory c = walking_arrow();
  CHECK(validate_category(c).ok());
  CHECK(c.terminal() == O(1));
  CHECK(c.to_terminal(O(0)) == A(2));
  CHECK(c.compose(A(1), A(2)) == A(2));
  CHECK_THROWS_AS(c.compose(A(2), A(2)), Error);
  CHECK(c.hom(O(1), O(0)).empty());

  const PullbackData& pb = c.pullback(A(2), A(2));
  CHECK(pb.apex == O(0));
  CHECK(pb.proj1 == A(0));
  CHECK(pb.proj2 == A(0));
  CHECK(c.mediator(pb, A(0), A(0)) == A(0));
  // The product of 0 and 1 is 0.
  CHECK(c.product(O(0), O(1)).apex == O(0));
}

TEST_CASE("missing pullback") {
  TableCategory c = cospan();
  CHECK(validate_category(c).ok());
  CHECK(c.terminal() == O(2));
  CHECK_FALSE(search_pullback(c, A(3), A(4)).has_value());
  try {
    c.pullback(A(3), A(4));
    FAIL("pullback should not exist");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoPullback);
  }
}

TEST_CASE("pullback search records mediators") {
  TableCategory c = walking_arrow();
  std::map<std::pair<MorId, MorId>, MorId> med;
  const auto pb = search_pullback(c, A(1), A(2), &med);
  REQUIRE(pb);
  CHECK(pb->apex == O(0));
  // Cones over 1 <- 1 -> ... from the object 0: (0 -> 1, id_0) factors via id_0.
  CHECK(med.at({A(2), A(0)}) == A(0));
}

TEST_CASE("validation catches broken tables") {
  SUBCASE("identity law") {
    // Two arrows 0 -> 1, with id_1 composing one into the other.
    TableCategory c(2, {{O(0), O(0)}, {O(1), O(1)}, {O(0), O(1)}, {O(0), O(1)}}, {A(0), A(1)},
                    {{A(0), A(0), A(0)}, {A(1), A(1), A(1)}, {A(2), A(0), A(2)},
                     {A(3), A(0), A(3)}, {A(1), A(2), A(3)}, {A(1), A(3), A(3)}});
    const ValidationReport rep = validate_category(c);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].rule == "identity_law");
  }
  SUBCASE("composite of the wrong type") {
    TableCategory c(2, {{O(0), O(0)}, {O(1), O(1)}, {O(0), O(1)}}, {A(0), A(1)},
                    {{A(0), A(0), A(0)}, {A(1), A(1), A(1)}, {A(2), A(0), A(2)},
                     {A(1), A(2), A(1)}});
    const ValidationReport rep = validate_category(c);
    REQUIRE_FALSE(rep.ok());
    bool typed = false;
    for (const auto& v : rep.violations) typed |= v.rule == "composite_type";
    CHECK(typed);
  }
  SUBCASE("schema") {
    CHECK_THROWS_AS(TableCategory(1, {{O(0), O(1)}}, {A(0)}, {}), Error);
    CHECK_THROWS_AS(TableCategory(1, {{O(0), O(0)}}, {}, {}), Error);
    CHECK_THROWS_AS(TableCategory(1, {{O(0), O(0)}}, {A(0)},
                                  {{A(0), A(0), A(0)}, {A(0), A(0), A(0)}}),
                    Error);
  }
}

TEST_CASE("functor validation") {
  TableCategory c = walking_arrow();
  FinFunctor collapse{&c, &c, {O(1), O(1)}, {A(1), A(1), A(1)}};
  CHECK(validate_functor(collapse).ok());
  FinFunctor identity{&c, &c, {O(0), O(1)}, {A(0), A(1), A(2)}};
  CHECK(validate_functor(identity).ok());
  FinFunctor mistyped{&c, &c, {O(0), O(0)}, {A(0), A(0), A(2)}};
  const ValidationReport rep = validate_functor(mistyped);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations[0].rule == "functor_type");
}
