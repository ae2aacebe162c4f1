#include <catch2/catch_amalgamated.hpp>

#include "gkverma/output.hpp"

namespace gkverma {

namespace {

OutputRecord full_record() {
  OutputRecord record;
  record.type = LieType::C;
  record.n = 4;
  record.p = 4;
  record.z = Rational(-3, 2);
  record.gkdim = 4;
  record.dim_u = 10;
  record.reducible = true;
  record.first_points = {{LatticeTag::half_step, Rational(-3, 2)}};
  record.wallach = "3rd Wallach rep of Sp(4,R)";
  record.set = {{Rational(-3, 2), Rational(1, 2)}};
  record.source = Source::both;
  return record;
}

OutputRecord sparse_record() {
  OutputRecord record;
  record.type = LieType::A;
  record.n = 3;
  record.gkdim = 0;
  record.source = Source::algorithm;
  return record;
}

}  // namespace

TEST_CASE("csv header and field layout", "[output]") {
  const std::string text = to_csv({sparse_record()});
  CHECK(text ==
        "type,n,p,z,gkdim,dim_u,reducible,first_points,wallach,set,source\n"
        "A,3,,,0,,,,,,algorithm\n");
}

TEST_CASE("csv round trip", "[output]") {
  const std::vector<OutputRecord> records = {full_record(), sparse_record()};
  CHECK(from_csv(to_csv(records)) == records);
}

TEST_CASE("json round trip", "[output]") {
  const std::vector<OutputRecord> records = {full_record(), sparse_record()};
  CHECK(from_json(to_json(records)) == records);
}

TEST_CASE("csv quotes embedded commas", "[output]") {
  OutputRecord record = full_record();
  record.wallach = "2nd Wallach rep of SU(3,3)";
  const std::string text = to_csv({record});
  CHECK(text.find("\"2nd Wallach rep of SU(3,3)\"") != std::string::npos);
  const std::vector<OutputRecord> parsed = from_csv(text);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].wallach == "2nd Wallach rep of SU(3,3)");
}

TEST_CASE("csv and json carry identical records", "[output]") {
  const std::vector<OutputRecord> records = {full_record(), sparse_record()};
  CHECK(from_csv(to_csv(records)) == from_json(to_json(records)));
}

TEST_CASE("multiple lattice entries are semicolon separated", "[output]") {
  OutputRecord record;
  record.type = LieType::D;
  record.n = 5;
  record.p = 1;
  record.first_points = {{LatticeTag::integer, -3}, {LatticeTag::integer, 0}};
  record.set = {{-3, 1}, {0, 1}};
  record.source = Source::closed_form;
  const std::string text = to_csv({record});
  CHECK(text.find("Z:-3;Z:0") != std::string::npos);
  CHECK(text.find("-3:1;0:1") != std::string::npos);
  CHECK(from_csv(text) == std::vector<OutputRecord>{record});
}

TEST_CASE("enum name round trips", "[output]") {
  for (Source source : {Source::algorithm, Source::closed_form, Source::both})
    CHECK(source_from_name(source_name(source)) == source);
  for (LatticeTag tag : {LatticeTag::integer, LatticeTag::half_odd, LatticeTag::half_step})
    CHECK(lattice_tag_from_name(lattice_tag_name(tag)) == tag);
}

}  // namespace gkverma
