#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "nakayama/io.hpp"
#include "support.hpp"

namespace nakayama {
namespace {

TEST(AlgebraJson, RoundTrip) {
  const auto g = testing::gamma_cyc3();
  EXPECT_EQ(algebra_from_json(to_json(g)), g);
  EXPECT_EQ(to_json(g).dump(), R"j({"kind":"cyclic","kupisch":[3,2,3,2,3,2]})j");
}

TEST(AlgebraJson, ExtraKeysIgnored) {
  const auto j = nlohmann::json::parse(R"j({"kind":"linear","kupisch":[1,2],"note":"x"})j");
  EXPECT_EQ(algebra_from_json(j), make_rsz_nakayama(2, Orientation::linear));
}

TEST(AlgebraJson, Rejects) {
  auto code_of = [](const char* text) {
    try {
      algebra_from_json(nlohmann::json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal_inconsistency;
  };
  EXPECT_EQ(code_of(R"j({"kupisch":[1]})j"), ErrorCode::parse_error);
  EXPECT_EQ(code_of(R"j({"kind":"linear","kupisch":[1.5]})j"), ErrorCode::parse_error);
  EXPECT_EQ(code_of(R"j({"kind":"spiral","kupisch":[1]})j"), ErrorCode::parse_error);
  EXPECT_EQ(code_of(R"j({"kind":"linear","kupisch":[1,3]})j"), ErrorCode::invalid_kupisch);
  EXPECT_EQ(code_of(R"j([1,2])j"), ErrorCode::parse_error);
}

TEST(AlgebraJson, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "nakayama_io_test.json";
  {
    std::ofstream out(path);
    out << R"j({"kind":"linear","kupisch":[1,2,2,3,2]})j";
  }
  EXPECT_EQ(load_algebra(path), testing::gamma_lin3());
  std::filesystem::remove(path);
  EXPECT_THROW(load_algebra(path), Error);
}

TEST(Documents, Shapes) {
  const auto g = testing::gamma_lin3();
  EXPECT_EQ(to_json(ModuleSet({{1, 1}, {4, 3}})).dump(), R"j(["M(1,1)","M(4,3)"])j");
  EXPECT_EQ(to_json(MaybeModule{}).dump(), R"j("0")j");
  EXPECT_EQ(to_json(ExtendedNat::infinity()).dump(), R"j("inf")j");
  EXPECT_EQ(to_json(SupportPair{ModuleSet({{1, 1}}), {2, 4, 5}}).dump(),
            R"j({"killed":[2,4,5],"modules":["M(1,1)"]})j");
  const auto a = to_json(auslander_algebra(make_rsz_nakayama(3, Orientation::linear)));
  EXPECT_EQ(a.at("kupisch"), nlohmann::json::parse("[1,2,2,3,2]"));
  EXPECT_EQ(a.at("projinj"), nlohmann::json::parse("[2,4,5]"));
  EXPECT_EQ(a.at("dictionary").at("2"), "M(2,2)");
}

}  // namespace
}  // namespace nakayama
