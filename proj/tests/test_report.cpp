#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "rauzy/report.hpp"

using namespace rauzy;
using fixtures::sys;

TEST_CASE("analysis report for the 3-adic example") {
  const auto& r = sys(fixtures::kReal3);
  auto j = analysis_report(r, true);
  CHECK(j["substitution"] == "1->111112;2->111");
  CHECK(j["characteristic_polynomial"]["text"] == "x^2 - 5x - 3");
  CHECK(j["flags"]["irreducible"] == true);
  CHECK(j["flags"]["pisot"] == true);
  CHECK(j["flags"]["unit"] == false);
  CHECK(j["representation_space"]["layout"] == "R x Q_3");
  CHECK(j["strong_coincidence"]["verdict"] == "holds");
  CHECK(j["property_F"]["verdict"] == "holds");
  CHECK(j["representation_space"]["contraction_deviation"].get<double>() < 1e-9);
  CHECK(j["representation_space"]["ball_radius_M"].get<double>() == doctest::Approx(1 / (1 - (std::sqrt(37.0) - 5) / 2)));
  // key order is fixed
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys.front() == "substitution");
  CHECK(keys.back() == "property_F");
  CHECK(analysis_report(r, true).dump() == j.dump());
  CHECK_FALSE(analysis_report(r, false).contains("property_F"));
}

TEST_CASE("powered substitutions report the working data") {
  const auto& p = sys(fixtures::kPeriod2);
  auto j = analysis_report(p, false);
  CHECK(j["working_power"] == 2);
  CHECK(j.contains("working_substitution"));
  CHECK(j["minimal_polynomial"]["text"] == "x^2 - 21x + 4");
}

TEST_CASE("numbers round-trip through their exact form") {
  const auto& e = sys(fixtures::kEx1);
  for (const char* text : {"0", "(a-2)/2", "3a/2+1", "-7/3", "a"}) {
    auto x = e.parse_element(text);
    auto j = number_json(e, x);
    CHECK(e.parse_element(j["exact"].get<std::string>()) == x);
    CHECK(j["approx"].get<double>() == doctest::Approx(static_cast<double>(x.approx())));
    auto c = e.eigen().v_coordinates(x);
    REQUIRE(j["v_coordinates"].size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(j["v_coordinates"][i] == c[i].get_str());
  }
}

TEST_CASE("expansion and verdict documents") {
  const auto& e = sys(fixtures::kEx1);
  auto x = e.parse_element("a-2");
  auto j = expansion_json(e, x, expand(e, x, 1));
  CHECK(j["kind"] == "eventually-periodic");
  CHECK(j["expansion"] == ".δ(1)δ(1)(0δ(12))^ω");
  auto v = verdict_json(e, check_property_F(e, zero_expansion_graph(e)));
  CHECK(v["verdict"] == "fails");
  CHECK(v["witnesses"].size() == 2);
}

TEST_CASE("errors serialise with their kind") {
  auto j = error_json(Error(ErrorKind::ResourceCap, "too many points"));
  CHECK(j["error"]["kind"] == "resource-cap");
  CHECK(j["error"]["message"] == "too many points");
  CHECK(Error(ErrorKind::Validation, "").exit_code() == 2);
  CHECK(Error(ErrorKind::Unsupported, "").exit_code() == 2);
  CHECK(Error(ErrorKind::ResourceCap, "").exit_code() == 3);
  CHECK(Error(ErrorKind::Precision, "").exit_code() == 4);
  try {
    System::parse("1->12;2->21");
    FAIL("reducible input accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Validation);
  }
}
