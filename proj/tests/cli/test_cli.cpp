#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs the CLI with stdout captured (so the default format is json) and
// stderr sent to a temporary file.
Run cli(const std::string& args) {
  static int counter = 0;
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("lamzeta_cli_err_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  const std::string cmd = std::string(LAMZETA_CLI) + " " + args + " 2>" + err_path.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  std::filesystem::remove(err_path);
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("verify: solved partner, achieved") {
  const Run r = cli("verify zeta-gen --N 3 --m 1 --alpha pi");
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["id"] == "ZETA_GEN");
  CHECK(j["achieved"] == true);
  CHECK(j["digits_agreed"].get<int>() >= 30);
  CHECK(j["params"]["beta"].get<std::string>().rfind("3.14159265358979", 0) == 0);
}

TEST_CASE("verify: schema and constraint errors exit 1") {
  Run r = cli("verify zeta-gen --N 2 --m 1 --alpha pi");
  CHECK(r.code == 1);
  CHECK(r.err.find("N must be odd") != std::string::npos);
  CHECK(cli("verify zeta-gen --N 3 --m 1 --alpha pi --beta 2pi").code == 1);
  CHECK(cli("verify zeta-gen --N 3 --m 1 --alpha pi --gamma 2").code == 1);
  CHECK(cli("verify zeta-gen --N 3 --m 1").code == 1);
  CHECK(cli("verify zeta-gen --N 3 --m 1 --alpha").code == 1);
  CHECK(cli("verify zeta-gen --N 3 --m 1 --alpha pi^").code == 1);
  CHECK(cli("verify no-such-identity").code == 1);
  CHECK(cli("verify").code == 1);
  CHECK(cli("verify zeta-gen stray --N 3").code == 1);
}

TEST_CASE("verify: expected mismatch exits 2") {
  const Run r = cli("verify cn-erroneous --m 1 --y 2pi");
  CHECK(r.code == 2);
  const auto j = json_of(r);
  CHECK(j["achieved"] == false);
  CHECK(std::stod(j["abs_err"].get<std::string>()) > 1e-3);
}

TEST_CASE("verify: key=value form and negative values") {
  CHECK(cli("verify ramanujan-odd --m=-1 --alpha=2pi").code == 0);
  CHECK(cli("verify ramanujan-odd --m -2 --beta pi/2").code == 0);
}

TEST_CASE("eval") {
  Run r = cli("eval --r -3 --s 1 --x 2pi --digits 30");
  CHECK(r.code == 0);
  auto j = json_of(r);
  // (7 pi^3/180 - zeta(3))/2
  CHECK(j["value"]["re"].get<std::string>().rfind("1.871372759366027378837045", 0) == 0);
  CHECK(j["certified_digits"] == 30);

  r = cli("eval --r 0 --s 1 --x 100");
  CHECK(r.code == 0);
  CHECK(json_of(r)["value"]["re"].get<std::string>().rfind("3.72007597602083", 0) == 0);

  r = cli("eval --r -3 --s 0.2 --x pi --digits 30 --max-terms 100000");
  CHECK(r.code == 3);
  CHECK(r.err.find("22 digits") != std::string::npos);

  r = cli("eval --r -3 --s 0.2 --x pi --digits 30 --max-terms 100000 --allow-reduced");
  CHECK(r.code == 2);
  j = json_of(r);
  CHECK(j["reduced"] == true);
  CHECK(j["certified_digits"] == 22);

  CHECK(cli("eval --r -3 --s 1 --x -1").code == 1);
  CHECK(cli("eval --r -3 --s 0 --x 1").code == 1);
  CHECK(cli("eval --r -3 --x 1").code == 1);
  CHECK(cli("eval --r -3 --s 1 --x 1 --x-im 1").code == 0);
}

TEST_CASE("oracle") {
  Run r = cli("oracle --N 2 --h 1 --x 2");
  CHECK(r.code == 0);
  CHECK(json_of(r)["digits_agreed"].get<int>() >= 15);
  r = cli("oracle --N 1 --h 0 --x 1");
  CHECK(r.code == 0);
  CHECK(json_of(r)["digits_agreed"].get<int>() >= 15);
  r = cli("oracle --N 2 --h 1 --x 2 --t-max 0.01");
  CHECK(r.code == 3);
  CHECK_FALSE(r.err.empty());
  CHECK(cli("oracle --N 0 --h 1 --x 2").code == 1);
}

TEST_CASE("table") {
  Run r = cli("table --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("1,3,zeta(3),zeta(7),false") != std::string::npos);
  CHECK(r.out.find("2,9,zeta(5),zeta(37),false") != std::string::npos);
  CHECK(r.out.find("3,1,zeta(7),zeta(7),false") != std::string::npos);
  r = cli("table --max-m 2 --max-N 3");
  CHECK(r.code == 0);
  CHECK(json_of(r)["rows"].size() == 4);
  r = cli("table --verify --max-m 2 --max-N 3");
  CHECK(r.code == 0);
  for (const auto& row : json_of(r)["rows"]) CHECK(row["achieved"] == true);
  CHECK(cli("table --max-m 0").code == 1);
  CHECK(cli("table other-kind").code == 1);
}

TEST_CASE("global flags") {
  CHECK(cli("--digits 3 verify zeta-gen --N 1 --m 1 --alpha pi").code == 1);
  CHECK(cli("verify zeta-gen --N 1 --m 1 --alpha pi --format xml").code == 1);
  CHECK(cli("no-such-verb").code == 1);
  CHECK(cli("").code == 1);
  CHECK(cli("--help").code == 0);
  const Run csv = cli("--digits 20 verify zeta-gen --N 1 --m 1 --alpha pi --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("schema_version,id,params,", 0) == 0);
  const Run text = cli("verify zeta-gen --N 1 --m 1 --alpha pi --format text --digits 20");
  CHECK(text.out.find("ACHIEVED") != std::string::npos);
}

TEST_CASE("output file is written whole and matches stdout") {
  const auto path = std::filesystem::temp_directory_path() / ("lamzeta_out_" + std::to_string(::getpid()) + ".json");
  const Run to_file = cli("verify zeta-gen --N 1 --m 2 --alpha pi --no-timing --output " + path.string());
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  const Run to_stdout = cli("verify zeta-gen --N 1 --m 2 --alpha pi --no-timing");
  CHECK(slurp(path) == to_stdout.out);
  for (const auto& e : std::filesystem::directory_iterator(path.parent_path())) {
    CHECK(e.path().filename().string().find(path.filename().string() + ".tmp") == std::string::npos);
  }
  std::filesystem::remove(path);
  CHECK(cli("verify zeta-gen --N 1 --m 2 --alpha pi --output /nonexistent-dir/x.json").code == 1);
}

TEST_CASE("golden reports: byte-identical and round-trip") {
  const std::filesystem::path golden(LAMZETA_GOLDEN_DIR);
  const Run a = cli("verify zeta-gen --N 3 --m 1 --alpha pi --no-timing");
  CHECK(a.out == slurp(golden / "zeta_gen_N3_m1.json"));
  const Run b = cli("verify cn-erroneous --m 1 --y 2pi --no-timing --digits 20");
  CHECK(b.out == slurp(golden / "cn_erroneous_m1.json"));
  // Parsing and re-serializing keeps every field.
  for (const char* name : {"zeta_gen_N3_m1.json", "cn_erroneous_m1.json"}) {
    const auto j = nlohmann::ordered_json::parse(slurp(golden / name));
    CHECK(j.dump(2) + "\n" == slurp(golden / name));
  }
}

TEST_CASE("determinism with a seed") {
  const Run a = cli("verify log-dedekind --alpha 3/4pi --no-timing --seed 7");
  const Run b = cli("verify log-dedekind --alpha 3/4pi --no-timing --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
