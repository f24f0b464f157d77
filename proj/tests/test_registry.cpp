#include <doctest.h>

#include "clonal/registry.hpp"

using namespace clonal;

TEST_CASE("selectors") {
  CHECK(system_name(make_system("trivial")) == "trivial");
  CHECK(system_name(make_system("symmetric")) == "symmetric");
  CHECK(system_name(make_system("signed")) == "signed");
  CHECK(system_name(make_system("matrix")) == "matrix");
  CHECK(system_name(make_system("power:z6")) == "power:z6");
  CHECK(system_name(make_system("power:z5:twist")) == "power:z5:twist=1,2");
  CHECK(system_name(make_system("power:z6:twist")) == "power:z6:twist=1,5");
  CHECK(system_name(make_system("power:z7:twist=3,5")) == "power:z7:twist=3,5");
  CHECK(system_name(make_system("power:z2:twist")) == "power:z2");
  CHECK(system_name(make_system("power:s3")) == "power:s3");
  CHECK(system_name(make_system("power:s3:twist")) == "power:s3:twist");
  for (const char* bad : {"", "sym", "power:", "power:z", "power:z0", "power:z6:twist=2,1", "power:z6:twsit",
                          "power:q3", "power:z6:twist=1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(make_system(bad), ParseError);
  }
}

TEST_CASE("element JSON forms") {
  const SymmetricSystem sys;
  const Json compact = Json::parse(R"j(["(LL)","[2,1]","(LL)"])j");
  const Json object = Json::parse(R"j({"instance":"symmetric","tminus":"(LL)","g":[2,1],"tplus":"(LL)"})j");
  const Triple<SymmetricSystem> expected{parse_tree("(LL)"), Permutation({2, 1}), parse_tree("(LL)")};
  CHECK(triple_from_json(sys, compact) == expected);
  CHECK(triple_from_json(sys, object) == expected);

  const auto x = ThompsonElement<SymmetricSystem>(symmetric_system(), expected);
  CHECK(element_to_json(x) == object);
  CHECK(element_to_compact(x) == compact);
  CHECK(triple_from_json(sys, element_to_json(x)) == x.rep());

  CHECK_THROWS_AS(triple_from_json(sys, Json::parse(R"j({"instance":"signed","tminus":"L","g":[1],"tplus":"L"})j")),
                  ParseError);
  CHECK_THROWS_AS(triple_from_json(sys, Json::parse(R"j(["(LL)","[2,1]"])j")), ParseError);
  CHECK_THROWS_AS(triple_from_json(sys, Json::parse(R"j(["(LL)","[2,1]","L"])j")), ParseError);
  CHECK_THROWS_AS(triple_from_json(sys, Json::parse(R"j(["(LL)","[2,1,3]","(LL)"])j")), ParseError);
  CHECK_THROWS_AS(triple_from_json(sys, Json::parse(R"j({"tminus":"L","g":[1]})j")), ParseError);
  CHECK_THROWS_AS(triple_from_json(sys, Json(3)), ParseError);
}

TEST_CASE("middle entries in every instance") {
  const SignedSystem sgn;
  CHECK(triple_from_json(sgn, Json::parse(R"j(["(L(LL))","s3 s2 s3","(L(LL))"])j")).g == parse_signed("[1,-3,-2]"));
  const MatrixSystem mat;
  CHECK(triple_from_json(mat, Json::parse(R"j(["(LL)",[["1","1/2"],["0","-2"]],"(LL)"])j")).g ==
        parse_matrix("[[1,1/2],[0,-2]]"));
  CHECK(mat.to_json(parse_matrix("[[1,1/2],[0,-2]]")) == Json::parse(R"j([["1","1/2"],["0","-2"]])j"));
  const TrivialSystem triv;
  CHECK(triple_from_json(triv, Json::parse(R"j(["(LL)","1","(LL)"])j")).g.rank == 2);
  CHECK_THROWS_AS(triple_from_json(triv, Json::parse(R"j(["(LL)","2","(LL)"])j")), ParseError);
  const CyclicPowerSystem pow{CyclicGroup(6)};
  CHECK(triple_from_json(pow, Json::parse(R"j(["(LL)","(1,5)","(LL)"])j")).g.entries == std::vector<std::uint32_t>{1, 5});
  CHECK(triple_from_json(pow, Json::parse(R"j(["(LL)",[1,5],"(LL)"])j")).g.entries == std::vector<std::uint32_t>{1, 5});
  CHECK_THROWS_AS(triple_from_json(pow, Json::parse(R"j(["(LL)","(1,6)","(LL)"])j")), ParseError);
}

TEST_CASE("vertex JSON forms") {
  const SignedSystem sys;
  const SteinVertex<SignedSystem> v{parse_tree("(L(LL))"), parse_signed("[1,-3,-2]"), parse_forest("L|(LL)")};
  CHECK(vertex_from_json(sys, vertex_to_json(sys, v)) == v);
  CHECK(vertex_from_json(sys, Json::parse(R"j(["(L(LL))","[1,-3,-2]","L|(LL)"])j")) == v);
  CHECK_THROWS_AS(vertex_from_json(sys, Json::parse(R"j(["(L(LL))","[1,-3,-2]","L|L"])j")), ParseError);
}
