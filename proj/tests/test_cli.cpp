#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mintri/cli.hpp"
#include "support.hpp"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Output {
  int code;
  std::string text;
};

Output run(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = mintri::cli::run(args, out);
  return {code, out.str()};
}

json run_json(std::vector<std::string> args) {
  const Output o = run(std::move(args));
  REQUIRE(o.code == 0);
  return json::parse(o.text);
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& body)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path) << body;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("certificate report") {
  const json j = run_json({"certificate", "gLLMQbeefffehhqxhqq"});
  CHECK(j["certificate_found"] == true);
  CHECK(j["rank"] == 2);
  CHECK(j["tetrahedra"] == 6);
  const json& g = j["subgroups"][0];
  CHECK(g["n_qqq"] == 6);
  CHECK(g["chi"] == json::array({-2, -2, -2}));
  CHECK(g["sum_neg_chi"] == 6);
  CHECK(j["even"] == true);
  CHECK(j["alternates"] == true);
  CHECK(j["no_spheres"] == true);
}

TEST_CASE("monodromy report") {
  const json j = run_json({"monodromy", "--word", "RRLL"});
  CHECK(j["certificate_found"] == true);
  CHECK(j["tetrahedra"] == 4);
  CHECK(j["trace"] == 6);
  const json rl = run_json({"monodromy", "-w", "RL"});
  CHECK(rl["lifted_word"] == "RLRLRL");
  CHECK(rl["tetrahedra"] == 6);
  const Output bad = run({"monodromy", "-w", "RRR"});
  CHECK(bad.code == mintri::cli::kMalformed);
}

TEST_CASE("analyze report") {
  const json j = run_json({"analyze", fixtures::kFigureEight});
  CHECK(j["edge_degrees"] == json::array({6, 6}));
  CHECK(j["min_degree"] == 6);
  CHECK(j["all_links_tori"] == true);
  CHECK(j["orientable"] == true);
  CHECK(j["admissible"] == true);
}

TEST_CASE("error codes") {
  const Output malformed = run({"decode", "not_a_sig"});
  CHECK(malformed.code == mintri::cli::kMalformed);
  const json err = json::parse(malformed.text)["error"];
  CHECK(err["code"] == mintri::cli::kMalformed);
  CHECK(err["input"] == "not_a_sig");
  CHECK_FALSE(err["message"].get<std::string>().empty());

  CHECK(run({"frobnicate"}).code == mintri::cli::kUsage);
  CHECK(run({}).code == mintri::cli::kUsage);
  CHECK(run({"enumerate", "-n", "2", "-f", "nope"}).code == mintri::cli::kUsage);
  CHECK(run({"enumerate", "-n", "3"}).code == mintri::cli::kUsage);
  CHECK(run({"encode", "/nonexistent/table.json"}).code == mintri::cli::kIo);
  CHECK(run({"decode", fixtures::census()[0].sig}).code == mintri::cli::kOk);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"certificate", fixtures::census()[1].sig},
                                                                 {"lst", "dLQbcbcdhcs"},
                                                                 {"moves", fixtures::kFigureEight},
                                                                 {"enumerate", "-n", "2"},
                                                                 {"minsearch", fixtures::kFigureEight}}) {
    const Output a = run(args);
    const Output b = run(args);
    CHECK(a.code == 0);
    CHECK(a.text == b.text);
  }
}

TEST_CASE("census files keep input order") {
  std::string body = "# cusped census sample\n\n";
  std::vector<std::string> expected;
  for (const auto& c : fixtures::census()) {
    body += std::string(c.sig) + " " + c.name + "\n";
    expected.push_back(c.sig);
  }
  body += std::string(fixtures::kFigureEight) + "\n";
  expected.push_back(fixtures::kFigureEight);
  const TempFile file("mintri_cli_census.txt", body);
  for (const char* jobs : {"1", "4"}) {
    const Output o = run({"-j", jobs, "certificate", file.path.string()});
    CHECK(o.code == 0);
    const auto lines = json_lines(o.text);
    REQUIRE(lines.size() == expected.size());
    for (std::size_t i = 0; i < lines.size(); ++i) CHECK(lines[i]["signature"] == expected[i]);
    CHECK(lines.back()["certificate_found"] == false);
  }
  const TempFile broken("mintri_cli_broken.txt", std::string(fixtures::kFigureEight) + "\nnot_a_sig\n");
  const Output o = run({"decode", broken.path.string()});
  CHECK(o.code == mintri::cli::kMalformed);
  const auto lines = json_lines(o.text);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0]["signature"] == fixtures::kFigureEight);
  CHECK(lines[1]["error"]["input"] == "not_a_sig");
}

TEST_CASE("decode then encode round trip") {
  for (const auto& c : fixtures::census()) {
    const Output decoded = run({"decode", c.sig});
    REQUIRE(decoded.code == 0);
    const TempFile file("mintri_cli_table.json", decoded.text);
    const json j = run_json({"encode", file.path.string()});
    CHECK(j["signature"] == c.sig);
    CHECK(j["tetrahedra"] == c.tets);
  }
  const TempFile junk("mintri_cli_junk.json", "{\"gluings\": 3}");
  CHECK(run({"encode", junk.path.string()}).code == mintri::cli::kMalformed);
  const TempFile text("mintri_cli_text.json", "gluings");
  CHECK(run({"encode", text.path.string()}).code == mintri::cli::kMalformed);
}
