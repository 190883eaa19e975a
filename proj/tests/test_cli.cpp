#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "klasika/cli.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using klasika::cli::run;
using Json = nlohmann::json;

namespace {

// tests/golden/cases.txt: one case per line, tab-separated: name, then the
// arguments. An argument of the form `env:NAME=VALUE` sets an environment
// variable for that case instead. Expected output lives in <name>.out.
struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> env;
};

struct Observed {
  int exit_code = 0;
  std::string out;
  std::string err;
};

std::vector<GoldenCase> load_cases() {
  std::ifstream in(fs::path(KLASIKA_GOLDEN_DIR) / "cases.txt");
  REQUIRE(in.good());
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    GoldenCase c;
    c.name = fields[0];
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (fields[i].rfind("env:", 0) == 0) {
        const std::string kv = fields[i].substr(4);
        const std::size_t eq = kv.find('=');
        c.env.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
      } else {
        c.args.push_back(fields[i]);
      }
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

std::string render(const Observed& o) {
  return "exit: " + std::to_string(o.exit_code) + "\n--- stdout\n" + o.out + "--- stderr\n" + o.err;
}

Observed run_in_process(const GoldenCase& c) {
  for (const auto& [k, v] : c.env) setenv(k.c_str(), v.c_str(), 1);
  const auto r = run(c.args);
  for (const auto& [k, v] : c.env) unsetenv(k.c_str());
  return {r.exit_code, r.stdout_text(), r.stderr_text()};
}

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return q + "'";
}

// Runs the installed binary; stdout only.
Observed run_binary(const GoldenCase& c) {
  std::string cmd;
  for (const auto& [k, v] : c.env) cmd += k + "=" + shell_quote(v) + " ";
  cmd += shell_quote(KLASIKA_CLI_PATH);
  for (const auto& a : c.args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Observed o;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = pclose(pipe);
  o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kCommands[] = {"disc",         "repeated",     "solve",          "depress",   "classify-conic",
                                 "classify-quadric", "diagonalize", "ngon",        "trisect",   "double-cube",
                                 "square-circle", "construct-eval", "integrate",   "partfrac",  "ellipse",
                                 "param",        "help"};

std::string random_token() {
  static const std::string structured = "0123456789,,,//--..+eE";
  static const char* const words[] = {"/", "area", "perimeter", "circle", "ellipse", "hyperbola", "parabola",
                                      "--json", "--tol", "sqrt(", ")", "1e-9", "0", "-1", "1/0", "1,0,1"};
  switch (support::uniform(0, 9)) {
    case 0:
    case 1: return kCommands[support::uniform(0, std::size(kCommands) - 1)];
    case 2:
    case 3: return words[support::uniform(0, std::size(words) - 1)];
    case 4:
    case 5:
    case 6: {
      std::string s;
      const auto len = support::uniform(0, 30);
      for (long long i = 0; i < len; ++i) s += structured[support::uniform(0, structured.size() - 1)];
      return s;
    }
    default: {
      std::string s;
      const auto len = support::uniform(0, 1) == 0 ? support::uniform(0, 40) : support::uniform(0, 1024);
      for (long long i = 0; i < len; ++i) s += static_cast<char>(support::uniform(32, 126));
      return s;
    }
  }
}

}  // namespace

TEST_CASE("golden files for every subcommand") {
  const auto cases = load_cases();
  const bool update = std::getenv("KLASIKA_UPDATE_GOLDEN") != nullptr;
  std::vector<std::string> seen;
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const fs::path file = fs::path(KLASIKA_GOLDEN_DIR) / (c.name + ".out");
    const std::string got = render(run_in_process(c));
    if (update) {
      std::ofstream(file, std::ios::binary) << got;
      continue;
    }
    REQUIRE(fs::exists(file));
    CHECK(got == read_file(file));
    if (!c.args.empty()) seen.push_back(c.args[0]);
  }
  if (update) return;
  for (const char* cmd : kCommands) {
    CAPTURE(cmd);
    CHECK(std::find(seen.begin(), seen.end(), cmd) != seen.end());
  }
}

TEST_CASE("the installed binary matches the golden stdout and exit code") {
  for (const auto& c : load_cases()) {
    CAPTURE(c.name);
    const Observed bin = run_binary(c);
    const Observed lib = run_in_process(c);
    CHECK(bin.exit_code == lib.exit_code);
    CHECK(bin.out == lib.out);
  }
}

TEST_CASE("reference outputs for disc, ngon and integrate") {
  const auto disc = run({"disc", "2,-3,1", "--json"});
  const Json d = Json::parse(disc.payload_json);
  CHECK(d["discriminant_resultant"] == "1");
  CHECK(d["discriminant_hankel"] == "1");
  CHECK(d["agree"] == true);

  const auto ngon = run({"ngon", "17", "--json"});
  CHECK(ngon.payload_json.rfind("{\"n\":17,\"constructible\":true,", 0) == 0);
  CHECK(ngon.exit_code == 0);

  const auto integ = run({"integrate", "4,-1,2", "/", "0,4,0,1"});
  CHECK(integ.stdout_text() == "ln|x| + 1/2*ln(x^2+4) - 1/2*arctan(x/2) + K\n");
}

TEST_CASE("exit codes and error shape") {
  CHECK(run({}).exit_code == klasika::cli::kExitUsage);
  CHECK(run({"frobnicate"}).exit_code == klasika::cli::kExitUsage);
  CHECK(run({"disc", "1,x"}).exit_code == klasika::cli::kExitUsage);
  CHECK(run({"disc", "1,1"}).exit_code == klasika::cli::kExitDomain);
  CHECK(run({"integrate", "1", "/", "1,0,0,0,1"}).exit_code == klasika::cli::kExitDomain);
  const auto bad = run({"disc", "1,zz", "--json"});
  const Json j = Json::parse(bad.payload_json);
  CHECK(j["status"] == "error");
  CHECK(j["schema"] == 1);
  CHECK(j["error"]["message"].get<std::string>().find("zz") != std::string::npos);
  CHECK(run({"frobnicate"}).stderr_text().find("frobnicate") != std::string::npos);
}

TEST_CASE("deterministic output") {
  for (const auto& c : load_cases()) {
    const Observed a = run_in_process(c), b = run_in_process(c);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("fuzzed argv never crashes") {
  int ok = 0;
  for (int i = 0; i < 100000; ++i) {
    std::vector<std::string> args;
    const auto n = support::uniform(0, 6);
    for (long long k = 0; k < n; ++k) args.push_back(random_token());
    const bool json = support::uniform(0, 1) == 0;
    if (json) args.push_back("--json");
    const auto r = run(args);
    const bool valid_code = r.exit_code == 0 || r.exit_code == 1 || r.exit_code == 2;
    CHECK(valid_code);
    CHECK((r.exit_code == 0) == (r.status == klasika::cli::Status::Ok));
    const Json parsed = Json::parse(r.payload_json, nullptr, false);
    REQUIRE(!parsed.is_discarded());
    CHECK(parsed["schema"] == 1);
    CHECK(parsed["status"] == (r.exit_code == 0 ? "ok" : "error"));
    if (r.exit_code != 0) {
      INFO(r.payload_json);
      CHECK(parsed["error"]["kind"] != "internal");
    } else {
      ++ok;
    }
  }
  CHECK(ok > 0);
}
