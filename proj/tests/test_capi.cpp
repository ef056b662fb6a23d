#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "numerolab.h"

namespace {

using ordered_json = nlohmann::ordered_json;

struct Result {
  std::unique_ptr<nl_result, decltype(&nl_result_free)> r;

  explicit Result(nl_result* raw) : r(raw, nl_result_free) {}
  nl_status status() const { return nl_result_status(r.get()); }
  std::string output() const { return nl_result_output(r.get()); }
  std::string error() const { return nl_result_error(r.get()); }
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("b-file and plain renderings match the documented examples") {
  Result concat{nl_concat_terms("odds", 1, 4, NL_BFILE)};
  CHECK(concat.status() == NL_OK);
  CHECK(concat.output() == "1 1\n2 13\n3 135\n4 1357\n");

  Result smallest{nl_uniform_smallest("7", 10, "1", 1, NL_PLAIN)};
  CHECK(smallest.status() == NL_OK);
  CHECK(smallest.output() == "111111\n");

  Result stream{nl_kernel_stream("smarandache", 1, 17, NL_PLAIN)};
  CHECK(stream.status() == NL_OK);
  CHECK(lines(stream.output()) ==
        std::vector<std::string>{"1", "2", "3", "4", "5", "3", "7", "4", "6",
                                 "5", "11", "4", "13", "7", "5", "6", "17"});
}

TEST_CASE("json lines carry a version, a kind, and the call parameters") {
  Result scan{
      nl_relations_scan("smarandache", 1, 35, 2, 2, "add", NL_JSON)};
  REQUIRE(scan.status() == NL_OK);
  auto rows = lines(scan.output());
  REQUIRE(rows.size() == 3);
  std::vector<std::uint64_t> starts;
  for (const std::string& row : rows) {
    ordered_json record = ordered_json::parse(row);
    CHECK(record["v"] == 1);
    CHECK(record["kind"] == "relations.scan");
    CHECK(record["params"]["stream"] == "smarandache");
    CHECK(record["params"]["p"] == 2);
    CHECK(record["left"] == record["right"]);
    starts.push_back(record["start"].get<std::uint64_t>());
  }
  CHECK(starts == std::vector<std::uint64_t>{6, 7, 28});
}

TEST_CASE("plain and json renderings agree on values") {
  Result plain{nl_kernel_stream("fibonacci", 3, 6, NL_PLAIN)};
  Result json{nl_kernel_stream("fibonacci", 3, 6, NL_JSON)};
  REQUIRE(plain.status() == NL_OK);
  REQUIRE(json.status() == NL_OK);
  auto values = lines(plain.output());
  auto records = lines(json.output());
  REQUIRE(values.size() == records.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ordered_json record = ordered_json::parse(records[i]);
    CHECK(record["value"] == values[i]);
    CHECK(record["index"] == 3 + i);
  }
}

TEST_CASE("verdict operations always succeed with explicit output") {
  Result prime{nl_kernel_prime("7", 64, NL_PLAIN)};
  CHECK(prime.status() == NL_OK);
  CHECK(prime.output() == "true\n");

  Result composite{nl_kernel_prime("10", 64, NL_PLAIN)};
  CHECK(composite.status() == NL_OK);
  CHECK(composite.output() == "false\n");

  Result vacant{nl_uniform_empty("79365", 10, "6", 1, NL_PLAIN)};
  CHECK(vacant.status() == NL_OK);
  CHECK(vacant.output() == "true\n");

  Result chain{nl_opseq_eval("1,2,3", "add,mul", 1000, NL_PLAIN)};
  CHECK(chain.status() == NL_OK);
  CHECK(chain.output() == "9\n");

  Result undefined{nl_opseq_eval("1,0", "div", 1000, NL_PLAIN)};
  CHECK(undefined.status() == NL_OK);
  CHECK(undefined.output() == "undefined\n");

  Result broken{nl_divis_on("smarandache", "4,20", 1, NL_PLAIN)};
  CHECK(broken.status() == NL_OK);
  CHECK(broken.output() == "fail 4 20 1\n");

  Result engraving{nl_magic_verify(
      "[[16,3,2,13],[5,10,11,8],[9,6,7,12],[4,15,14,1]]", "sum", 1, 1,
      NL_PLAIN)};
  CHECK(engraving.status() == NL_OK);
  CHECK(engraving.output() == "34\n");
}

TEST_CASE("empty searches report NL_EMPTY with no output") {
  Result vacant{nl_uniform_smallest("79365", 10, "6", 1, NL_PLAIN)};
  CHECK(vacant.status() == NL_EMPTY);
  CHECK(vacant.output().empty());

  Result exhausted{nl_remainder_minimal(2, 1, 3, 0, 21, NL_PLAIN)};
  CHECK(exhausted.status() == NL_EMPTY);
  CHECK(exhausted.output().empty());
  CHECK_FALSE(exhausted.error().empty());

  Result held{nl_conjecture_sweep("9", "100", NL_PLAIN)};
  CHECK(held.status() == NL_EMPTY);
  CHECK(held.output().empty());
}

TEST_CASE("invalid arguments map to NL_EINVAL with a message") {
  Result stream{nl_kernel_stream("nosuch", 1, 4, NL_PLAIN)};
  CHECK(stream.status() == NL_EINVAL);
  CHECK_FALSE(stream.error().empty());
  CHECK(stream.output().empty());

  Result null_arg{nl_kernel_prime(nullptr, 64, NL_PLAIN)};
  CHECK(null_arg.status() == NL_EINVAL);

  Result text{nl_kernel_smarandache("seven", NL_PLAIN)};
  CHECK(text.status() == NL_EINVAL);

  Result verdict_bfile{nl_kernel_prime("7", 64, NL_BFILE)};
  CHECK(verdict_bfile.status() == NL_EINVAL);

  Result bad_digits{nl_uniform_smallest("7", 10, "1,,2", 1, NL_PLAIN)};
  CHECK(bad_digits.status() == NL_EINVAL);

  Result bad_grid{nl_magic_verify("[[1,2],[3]]", "sum", 1, 1, NL_PLAIN)};
  CHECK(bad_grid.status() == NL_EINVAL);

  Result bad_json{nl_geom_ratio("{oops", "0,0", 0, NL_PLAIN)};
  CHECK(bad_json.status() == NL_EINVAL);
}

TEST_CASE("geometry round-trips through the JSON shape encoding") {
  const char* diamond = "{\"vertices\":[[1,0],[0,1],[-1,0],[0,-1]]}";
  Result ratio{nl_geom_ratio(diamond, "0,0", 0, NL_PLAIN)};
  REQUIRE(ratio.status() == NL_OK);
  double at_center = std::stod(ratio.output());
  CHECK(std::fabs(at_center - std::sqrt(2.0)) < 1e-12);

  Result inf{nl_geom_inf(diamond, 12, 40, 0, NL_JSON)};
  REQUIRE(inf.status() == NL_OK);
  ordered_json record = ordered_json::parse(lines(inf.output()).at(0));
  CHECK(std::fabs(record["estimate"].get<double>() - std::sqrt(2.0)) < 1e-6);

  Result outside{nl_geom_ratio(diamond, "2,2", 0, NL_PLAIN)};
  CHECK(outside.status() == NL_EINVAL);

  Result made{nl_geom_make("tetrahedron", 0, "2.5", NL_PLAIN)};
  REQUIRE(made.status() == NL_OK);
  Result centroid{
      nl_geom_ratio(lines(made.output()).at(0).c_str(), "0,0,0", 0,
                    NL_PLAIN)};
  REQUIRE(centroid.status() == NL_OK);
  CHECK(std::fabs(std::stod(centroid.output()) - 3.0) < 1e-9);
}

TEST_CASE("rational remainder chains render exactly") {
  Result forward{nl_remainder_forward("7/2", 3, "1/6", 2, NL_PLAIN)};
  CHECK(forward.status() == NL_OK);
  CHECK(forward.output() == "13/6\n23/18\n");

  Result backward{nl_remainder_backward("23/18", 3, "1/6", 2, NL_PLAIN)};
  CHECK(backward.status() == NL_OK);
  CHECK(backward.output() == "7/2\n");

  Result minimal{nl_remainder_minimal(2, 1, 3, 0, 10000000, NL_PLAIN)};
  CHECK(minimal.status() == NL_OK);
  CHECK(minimal.output() == "22\n10 4 1\n");
}

TEST_CASE("repeated calls and thread hints never change the bytes") {
  auto snapshot = [] {
    Result search{nl_magic_search("1,2,3,4,5,6,7,8,9", 3, "sum", 1, 1, 10,
                                  NL_JSON)};
    REQUIRE(search.status() == NL_OK);
    return search.output();
  };
  std::string first = snapshot();
  std::string second = snapshot();
  CHECK(first == second);
  nl_set_threads(8);
  std::string hinted = snapshot();
  nl_set_threads(1);
  CHECK(first == hinted);
  CHECK_FALSE(first.empty());
}

TEST_CASE("version string names the library") {
  std::string version = nl_version();
  CHECK(version.find("numerolab") == 0);
}

}  // TEST_SUITE
