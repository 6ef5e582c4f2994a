#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "treechild/treechild.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  tc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(tc_status_name(TC_OK)) == "ok");
  CHECK(std::string(tc_status_name(TC_ERR_INCONSISTENT)) ==
        "internal consistency failure");
  CHECK(std::string(tc_version()).size() > 0);
}

TEST_CASE("word counts and listings") {
  char* count = nullptr;
  REQUIRE(tc_words_count('A', 3, 0, 0, 0, &count) == TC_OK);
  CHECK(take(count) == "106");

  char** words = nullptr;
  size_t n = 0;
  REQUIRE(tc_words_list('C', 2, 1, 0, 0, &words, &n) == TC_OK);
  REQUIRE(n == 7);
  std::vector<std::string> got;
  for (size_t i = 0; i < n; ++i) got.emplace_back(words[i]);
  tc_string_array_free(words, n);
  CHECK(got.front() == "aaabb");  // lexicographically first
  CHECK(got.back() == "baaba");
}

TEST_CASE("error reporting") {
  char* out = nullptr;
  CHECK(tc_words_count('Q', 2, 1, 0, 0, &out) == TC_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(tc_last_error_message()) > 0);
  CHECK(out == nullptr);
  CHECK(tc_words_count('A', 9, 9, 0, 0, &out) == TC_ERR_BUDGET_EXCEEDED);
  CHECK(tc_words_count('A', 9, 9, 30, 0, &out) == TC_OK);
  tc_string_free(out);
  out = nullptr;
  CHECK(tc_y_count(-1, 0, 0, &out) == TC_ERR_INVALID_ARGUMENT);
  CHECK(tc_network_count(3, 3, &out) == TC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("H readings differ") {
  char* out = nullptr;
  REQUIRE(tc_words_count('H', 2, 1, 0, 0, &out) == TC_OK);
  CHECK(take(out) == "4");
  REQUIRE(tc_words_count('H', 2, 1, 0, 1, &out) == TC_OK);
  CHECK(take(out) == "3");
}

TEST_CASE("word validity through the API") {
  int valid = -1;
  REQUIRE(tc_word_is_valid("baaba", 'C', 2, 1, 0, &valid) == TC_OK);
  CHECK(valid == 1);
  REQUIRE(tc_word_is_valid("bbaaab", 'A', 2, 0, 0, &valid) == TC_OK);
  CHECK(valid == 0);
  CHECK(tc_word_is_valid("aabb", 'A', 2, 0, 0, &valid) == TC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("tableau round trip through JSON") {
  char* json = nullptr;
  REQUIRE(tc_word_to_tableau("aabba", 'C', 2, 1, &json) == TC_OK);
  const std::string doc = take(json);
  CHECK(doc.find("rows") != std::string::npos);
  char* word = nullptr;
  REQUIRE(tc_tableau_to_word(doc.c_str(), 'C', 2, 1, &word) == TC_OK);
  CHECK(take(word) == "aabba");
}

TEST_CASE("counts") {
  char* out = nullptr;
  REQUIRE(tc_y_count(1, 0, 2, &out) == TC_OK);
  CHECK(take(out) == "7");
  REQUIRE(tc_network_count(3, 1, &out) == TC_OK);
  CHECK(take(out) == "21");
  REQUIRE(tc_b_count(3, 2, &out) == TC_OK);
  CHECK(take(out) == "106");
  REQUIRE(tc_c_count(3, 1, &out) == TC_OK);
  CHECK(take(out) == "57");
  REQUIRE(tc_b_count_dyck(3, 2, &out) == TC_OK);
  CHECK(take(out) == "106");
}

TEST_CASE("verification reports") {
  tc_report* rep = nullptr;
  REQUIRE(tc_verify_tableau_identity(20, &rep) == TC_OK);
  CHECK(tc_report_passed(rep) == 1);
  REQUIRE(tc_report_line_count(rep) >= 1);
  CHECK(tc_report_line(rep, 0) != nullptr);
  CHECK(tc_report_line(rep, 999) == nullptr);
  tc_report_free(rep);

  rep = nullptr;
  REQUIRE(tc_verify_series_identity(4, 0, 2, &rep) == TC_OK);
  CHECK(tc_report_passed(rep) == 1);
  CHECK(tc_report_line_count(rep) == 5);
  tc_report_free(rep);
}

TEST_CASE("series handles") {
  tc_series* s = nullptr;
  REQUIRE(tc_series_compute('B', 1, 8, &s) == TC_OK);
  CHECK(tc_series_order(s) == 8);
  char* c = nullptr;
  REQUIRE(tc_series_coeff(s, 4, &c) == TC_OK);
  CHECK(take(c) == "7");
  CHECK(tc_series_coeff(s, 99, &c) == TC_ERR_INVALID_ARGUMENT);
  tc_series_free(s);

  REQUIRE(tc_series_compute('C', 1, 6, &s) == TC_OK);
  REQUIRE(tc_series_coeff(s, 2, &c) == TC_OK);
  CHECK(take(c) == "7/2");  // c_{2,1}/2! = 7/2
  tc_series_free(s);

  CHECK(tc_series_compute('Q', 0, 6, &s) == TC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("distribution handles") {
  tc_dist* d = nullptr;
  REQUIRE(tc_dist_compute('X', 2, &d) == TC_OK);
  CHECK(tc_dist_support_min(d) == 1);
  CHECK(tc_dist_support_max(d) == 2);
  char* m = nullptr;
  REQUIRE(tc_dist_mass(d, 2, &m) == TC_OK);
  CHECK(take(m) == "5/7");
  REQUIRE(tc_dist_moment(d, 1, &m) == TC_OK);
  CHECK(take(m) == "12/7");
  tc_dist_free(d);
  CHECK(tc_dist_compute('W', 2, &d) == TC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("convergence report JSON") {
  const long ns[] = {8, 16};
  char* json = nullptr;
  REQUIRE(tc_convergence_report('Y', ns, 2, 2, &json) == TC_OK);
  const std::string doc = take(json);
  CHECK(doc.find("\"doubling\"") != std::string::npos);
  CHECK(doc.find("\"rows\"") != std::string::npos);
  CHECK(doc.find("\"param\":\"Y\"") != std::string::npos);
}
