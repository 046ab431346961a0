#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ter/cli.hpp"
#include "ter/json_io.hpp"

using namespace ter;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("ter_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("territory commands") {
  auto r = call({"territory", "based", "--c", "4", "--g", "2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  std::set<std::string> gens;
  for (const auto& p : j["generators"]) gens.insert(p.get<std::string>());
  CHECK(gens == std::set<std::string>{"a1^3", "2*a1^2*a2", "2*a1*a2^2 - a1^2*a3"});
  CHECK(r.err.empty());

  auto e = call({"territory", "equations", "--c", "2,2", "--g", "1", "--chart", "t1"});
  REQUIRE(e.code == 0);
  CHECK(Json::parse(e.out)["generators"].empty());
  auto q = call({"territory", "equations", "--c", "2,3,3", "--g", "2", "--chart", "t1,t2^2,t3^2"});
  REQUIRE(q.code == 0);
  CHECK_FALSE(Json::parse(q.out)["generators"].empty());
  CHECK(call({"--format", "text", "territory", "based", "--c", "4", "--g", "2"}).out.find("a1^3\n") != std::string::npos);
  CHECK(call({"territory", "equations", "--c", "2,2", "--g", "1", "--chart", "t1,t2"}).code == 1);
}

TEST_CASE("point commands") {
  std::string tac = temp_file("tacnode.json", R"({"c": [2, 2], "basis": [{"t1": "1", "t2": "1"}]})");
  auto r = call({"point", "degenerate", "--file", tac});
  REQUIRE(r.code == 0);
  Json chain = Json::parse(r.out);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0]["step"] == "input");
  CHECK(chain[1]["step"] == "t-fix");
  CHECK(chain[1]["point"]["genus"] == 1);
  CHECK(call({"--format", "dot", "point", "degenerate", "--file", tac}).out.rfind("digraph", 0) == 0);

  auto c = call({"point", "check", "--file", tac});
  REQUIRE(c.code == 0);
  Json info = Json::parse(c.out);
  CHECK(info["genus"] == 1);
  CHECK(info["exact"] == Json::array({true, true}));
  CHECK(info["gorenstein"]["gorenstein"] == true);

  // Emitted points re-parse to the same canonical point.
  std::string cusp = temp_file("cusp.json", R"({"c": [4], "basis": [{"t^2": "2", "t^3": "2"}]})");
  auto l = call({"point", "limit", "--file", cusp, "--weights", "1"});
  REQUIRE(l.code == 0);
  CHECK(point_from_json(Json::parse(l.out)) == point_from_json(Json::parse(R"({"c": [4], "basis": [{"t^2": "1"}]})")));
  auto same = call({"point", "tfix", "--file", cusp});
  CHECK(same.out == l.out);
  std::string lim = temp_file("lim.json", l.out);
  auto p = call({"point", "phi-limit", "--file", lim});
  REQUIRE(p.code == 0);
  CHECK(point_from_json(Json::parse(p.out)) == point_from_json(Json::parse(R"({"c": [4], "basis": [{"t^3": "1"}]})")));
  CHECK(call({"point", "phi-limit", "--file", cusp}).code == 1);

  auto rs = call({"point", "restrict", "--file", tac, "--branches", "2"});
  REQUIRE(rs.code == 0);
  CHECK(Json::parse(rs.out)["genus"] == 0);
  auto ct = call({"point", "contract", "--file", tac, "--branches", "1"});
  REQUIRE(ct.code == 0);
  CHECK(Json::parse(ct.out)["genus"] == 1);
  std::string p1 = temp_file("p1.json", rs.out);
  std::string p2 = temp_file("p2.json", ct.out);
  auto jn = call({"point", "join", "--files", p1, p2});
  REQUIRE(jn.code == 0);
  CHECK(Json::parse(jn.out)["genus"] == 1);
  CHECK(call({"point", "join", "--files", p1, p2, "--parts", "2/1"}).code == 0);

  auto gl = call({"point", "gluing", "--file", tac, "--split", "1/2"});
  REQUIRE(gl.code == 0);
  Json g = Json::parse(gl.out);
  CHECK(g["label"]["g_I"] == 1);
  CHECK(g["label"]["g_Iprime"] == 0);
  CHECK(g["isom_hilb"]["gamma"].is_number());

  std::string big = temp_file("big.json", R"({"c": [6], "basis": [{"t^3": "1"}, {"t^4": "1"}, {"t^5": "1"}]})");
  auto tr = call({"point", "truncate", "--file", big, "--c", "4"});
  REQUIRE(tr.code == 0);
  std::string small = temp_file("small.json", tr.out);
  auto lf = call({"point", "lift", "--file", small, "--c", "6"});
  REQUIRE(lf.code == 0);
  CHECK(point_from_json(Json::parse(lf.out)) == point_from_json(Json::parse(R"({"c": [6], "basis": [{"t^3": "1"}, {"t^4": "1"}, {"t^5": "1"}]})")));
}

TEST_CASE("monoid and spine commands") {
  auto f = call({"fixed-points", "--c", "2,2", "--g", "1", "--format", "json"});
  REQUIRE(f.code == 0);
  CHECK(Json::parse(f.out).size() == 2);
  auto m = call({"monoids", "--genus", "3", "--conductor-max", "8"});
  REQUIRE(m.code == 0);
  CHECK(Json::parse(m.out).size() == 4);
  auto s = call({"stratum", "--c", "2,2", "--ks", "1"});
  REQUIRE(s.code == 0);
  CHECK(Json::parse(s.out)["realizable"] == true);
  CHECK(Json::parse(call({"stratum", "--c", "2,2", "--ks", "1", "--inclusive"}).out)["realizable"] == false);

  auto d = call({"spine", "dim", "--c", "12", "--g", "6"});
  REQUIRE(d.code == 0);
  CHECK(Json::parse(d.out)["grassmannian"]["dimension"] == 5);
  CHECK(Json::parse(d.out)["lower_bound"] == 5);
  auto in = call({"spine", "intersect", "--c", "12", "--g", "6", "--members", "11;10"});
  REQUIRE(in.code == 0);
  CHECK(Json::parse(in.out)["dimension"] == 3);
  auto a = call({"--seed", "7", "spine", "sample", "--c", "12", "--g", "6"});
  auto b = call({"spine", "sample", "--c", "12", "--g", "6", "--seed", "7"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(call({"spine", "sample", "--c", "3,3,3,3", "--g", "3"}).code == 1);
}

TEST_CASE("smoothability commands") {
  auto c = call({"smoothability", "check", "--g", "22", "--m", "1"});
  REQUIRE(c.code == 0);
  CHECK(Json::parse(c.out)["verdict"] == "nonsmoothable-exists");
  CHECK(Json::parse(call({"smoothability", "check", "--g", "1", "--m", "1"}).out)["verdict"] == "unknown");
  auto m1 = call({"smoothability", "map", "--gmax", "30", "--mmax", "10"});
  auto m2 = call({"smoothability", "map", "--gmax", "30", "--mmax", "10"});
  REQUIRE(m1.code == 0);
  CHECK(m1.out == m2.out);
  CHECK(m1.out.rfind("g,m,verdict,c_star,spine_dim,threshold,case,beta\n", 0) == 0);
  CHECK(m1.out.find("\n22,1,nonsmoothable-exists,") != std::string::npos);
  auto dir = std::filesystem::temp_directory_path();
  std::string csv = (dir / "ter_cli_map.csv").string(), svg = (dir / "ter_cli_map.svg").string();
  REQUIRE(call({"smoothability", "map", "--gmax", "30", "--mmax", "10", "--csv", csv, "--svg", svg}).code == 0);
  std::stringstream got;
  got << std::ifstream(csv).rdbuf();
  CHECK(got.str() == m1.out);
  CHECK(std::filesystem::file_size(svg) > 0);
  std::string outp = (dir / "ter_cli_out.txt").string();
  REQUIRE(call({"--out", outp, "smoothability", "check", "--g", "5", "--m", "15"}).code == 0);
  std::stringstream o;
  o << std::ifstream(outp).rdbuf();
  CHECK(Json::parse(o.str())["verdict"] == "nonsmoothable-exists");
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"territory", "based", "--c", "4"}).code == 2);
  CHECK(call({"territory", "based", "--c", "4,x", "--g", "2"}).code == 2);
  CHECK(call({"--format", "yaml", "monoids", "--genus", "1", "--conductor-max", "2"}).code == 2);
  CHECK(call({"point", "check", "--file", "/nonexistent/p.json"}).code == 2);
  std::string junk = temp_file("junk.json", "{not json");
  CHECK(call({"point", "check", "--file", junk}).code == 2);
  std::string open = temp_file("open.json", R"({"c": [4], "basis": [{"t": "1"}]})");
  auto r = call({"point", "check", "--file", open});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("not-closed") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}
