#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "u2quot/u2quot.h"

namespace fs = std::filesystem;

TEST_CASE("status names and families") {
  CHECK(std::string(u2q_status_name(U2Q_OK)) == "Ok");
  CHECK(std::string(u2q_status_name(U2Q_SNAP_FAILURE)) == "SnapFailure");
  CHECK(std::string(u2q_status_name(U2Q_NULL_ARGUMENT)) == "NullArgument");
  u2q_family f;
  CHECK(u2q_parse_family("octahedral", &f) == U2Q_OK);
  CHECK(f == U2Q_OCTAHEDRAL);
  CHECK(u2q_parse_family("klein", &f) == U2Q_INVALID_PARAMETERS);
  CHECK(u2q_parse_family(nullptr, &f) == U2Q_NULL_ARGUMENT);
}

TEST_CASE("spec validation") {
  u2q_spec* s = nullptr;
  CHECK(u2q_spec_new(U2Q_DIHEDRAL, 2, 2, 0, 0, &s) == U2Q_INVALID_PARAMETERS);
  CHECK(s == nullptr);
  CHECK(std::strlen(u2q_last_error()) > 0);
  CHECK(u2q_spec_new(U2Q_DIHEDRAL, 1, 2, 0, 0, nullptr) == U2Q_NULL_ARGUMENT);
  CHECK(u2q_spec_new(U2Q_DIHEDRAL, 1, 2, 0, 0, &s) == U2Q_OK);
  CHECK(u2q_spec_set_eta(s, 1, 0) == U2Q_INVALID_PARAMETERS);
  u2q_spec_free(s);
  u2q_spec_free(nullptr);
}

TEST_CASE("describe through handles") {
  u2q_spec* s = nullptr;
  REQUIRE(u2q_spec_new(U2Q_DIHEDRAL, 1, 2, 0, 0, &s) == U2Q_OK);
  REQUIRE(u2q_spec_set_eta(s, -3, 4) == U2Q_OK);
  u2q_report* r = nullptr;
  CHECK(u2q_describe(s, 0.0, &r) == U2Q_CONFIG_ERROR);
  REQUIRE(u2q_describe(s, 1e-6, &r) == U2Q_OK);
  CHECK(u2q_report_all_pass(r) == 1);

  auto j = nlohmann::json::parse(u2q_report_json(r));
  CHECK(j["order"] == 8);
  CHECK(j["compactification"]["kappa"] == 7);
  CHECK(j["topology"]["eta"]["num"] == -3);
  CHECK(std::string(u2q_report_text(r)).find("PASS sfasd_bound") != std::string::npos);

  const char* dot = nullptr;
  CHECK(u2q_report_dot(r, U2Q_GRAPH_COMPACTIFICATION, &dot) == U2Q_OK);
  CHECK(std::string(dot).rfind("graph", 0) == 0);

  u2q_report* back = nullptr;
  REQUIRE(u2q_report_parse_json(u2q_report_json(r), &back) == U2Q_OK);
  CHECK(std::string(u2q_report_json(back)) == u2q_report_json(r));
  CHECK(u2q_report_parse_json("{", &back) == U2Q_CONFIG_ERROR);

  fs::path dir = fs::temp_directory_path() / "u2quot_capi";
  fs::create_directories(dir);
  CHECK(u2q_report_write_dot(r, U2Q_GRAPH_RESOLUTION, (dir / "r.dot").string().c_str()) == U2Q_OK);
  CHECK(fs::exists(dir / "r.dot"));
  CHECK(u2q_report_write_dot(r, U2Q_GRAPH_RESOLUTION, (dir / "no" / "r.dot").string().c_str()) == U2Q_IO_ERROR);
  fs::remove_all(dir);

  u2q_report_free(back);
  u2q_report_free(r);
  u2q_spec_free(s);
  CHECK(u2q_report_all_pass(nullptr) == 0);
}

TEST_CASE("cyclic report has no compactification graph") {
  u2q_spec* s = nullptr;
  REQUIRE(u2q_spec_new(U2Q_CYCLIC, 0, 0, 3, 5, &s) == U2Q_OK);
  u2q_report* r = nullptr;
  REQUIRE(u2q_describe(s, 1e-6, &r) == U2Q_OK);
  const char* dot = nullptr;
  CHECK(u2q_report_dot(r, U2Q_GRAPH_COMPACTIFICATION, &dot) == U2Q_INVALID_PARAMETERS);
  CHECK(u2q_report_dot(r, U2Q_GRAPH_RESOLUTION, &dot) == U2Q_OK);
  u2q_report_free(r);
  u2q_spec_free(s);
}

TEST_CASE("Hirzebruch-Jung strings through the C interface") {
  std::vector<int64_t> buf(8);
  size_t len = 0;
  CHECK(u2q_hj_string(2, 5, buf.data(), buf.size(), &len) == U2Q_OK);
  CHECK(len == 2);
  CHECK(buf[0] == 3);
  CHECK(buf[1] == 2);
  CHECK(u2q_hj_string(19, 20, buf.data(), buf.size(), &len) == U2Q_BUFFER_TOO_SMALL);
  CHECK(len == 19);
  CHECK(u2q_hj_string(0, 1, buf.data(), buf.size(), &len) == U2Q_TRIVIAL_TYPE);
  CHECK(len == 0);
  CHECK(u2q_hj_string(2, 4, buf.data(), buf.size(), &len) == U2Q_NOT_COPRIME);
  CHECK(u2q_hj_string(2, 5, buf.data(), buf.size(), nullptr) == U2Q_NULL_ARGUMENT);
}

TEST_CASE("verify through the C interface") {
  u2q_summary* s = nullptr;
  REQUIRE(u2q_verify("families = tetrahedral\nm_max = 7\nhj_max = 10\np_max = 5", &s) == U2Q_OK);
  CHECK(u2q_summary_exit_code(s) == 0);
  auto j = nlohmann::json::parse(u2q_summary_json(s));
  CHECK(j["spec_count"] == 3);
  CHECK(std::string(u2q_summary_text(s)).find("all checks passed") != std::string::npos);
  u2q_summary_free(s);

  CHECK(u2q_verify("tolerance = 5", &s) == U2Q_CONFIG_ERROR);
  CHECK(u2q_verify(nullptr, &s) == U2Q_NULL_ARGUMENT);
  CHECK(u2q_summary_exit_code(nullptr) == 1);
}
