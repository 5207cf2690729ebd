#include "dmagic/oeis.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

using dmagic::bfile_error;
using dmagic::BFileSequence;
using dmagic::cross_check;
using dmagic::default_bfile_url;
using dmagic::fetch_bfile;
using dmagic::fetch_error;
using dmagic::Natural;
using dmagic::parse_bfile;
using dmagic::serialize_bfile;

namespace {

// Runs the CLI with stdout discarded; used for the fetch round trip below.
int cli_exit_code(const std::string& args) {
  const char* bin = std::getenv("DMAGIC_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "DMAGIC_CLI_BIN not set");
  const std::string command =
      "'" + std::string(bin) + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string bundled_bfile_text() {
  const char* path = std::getenv("DMAGIC_BFILE");
  REQUIRE_MESSAGE(path != nullptr, "DMAGIC_BFILE not set");
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.is_open(), "cannot open bundled b-file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_SUITE("oeis") {

TEST_CASE("b-file lines become contiguous entries") {
  const BFileSequence seq = parse_bfile("0 1\n1 1\n2 2\n3 6\n");
  CHECK(seq.first_index == 0);
  REQUIRE(seq.values.size() == 4);
  CHECK(seq.values[2] == Natural{2});
  CHECK(seq.values[3] == Natural{6});
  CHECK(seq.at(3) == Natural{6});
  CHECK(seq.at(4) == std::nullopt);
  CHECK(seq.at(-1) == std::nullopt);
}

TEST_CASE("comments, blanks, and CRLF are tolerated") {
  const BFileSequence seq =
      parse_bfile("# header\r\n\r\n5 60\r\n6 60\r\n# tail\n7 420\n");
  CHECK(seq.first_index == 5);
  REQUIRE(seq.values.size() == 3);
  CHECK(seq.values[2] == Natural{420});
}

TEST_CASE("empty and whitespace-only input are empty sequences") {
  CHECK(parse_bfile("").empty());
  CHECK(parse_bfile("\n\n  \n").empty());
  CHECK(parse_bfile("# only a comment\n").empty());
}

TEST_CASE("malformed rows name the line") {
  const auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_bfile(text);
    } catch (const bfile_error& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("0 1\nx 2\n") == 2);
  CHECK(line_of("0 1\n1\n") == 2);
  CHECK(line_of("0 1\n1 2 3\n") == 2);
  CHECK(line_of("0 1\n1 -5\n") == 2);
  CHECK(line_of("0 1\n2 2\n") == 2);        // skipped index 1
  CHECK(line_of("1 1\n0 1\n") == 2);        // descending
  CHECK(line_of("# c\n\n0 1\n0 1\n") == 4); // duplicate
}

TEST_CASE("serialization is stable under reparsing") {
  const BFileSequence seq =
      parse_bfile("# note\n4 12\n5 60\n6 60\n7 420\n");
  const std::string text = serialize_bfile(seq);
  CHECK(text == "4 12\n5 60\n6 60\n7 420\n");
  const BFileSequence again = parse_bfile(text);
  CHECK(again.first_index == seq.first_index);
  CHECK(again.values == seq.values);
}

TEST_CASE("bundled b-file covers at least 0..100 and agrees everywhere") {
  const BFileSequence seq = parse_bfile(bundled_bfile_text());
  CHECK(seq.first_index == 0);
  CHECK(seq.last_index() >= 100);
  CHECK(seq.at(10) == Natural{2520});
  CHECK(seq.at(16) == Natural{720720});

  const auto report = cross_check(100, seq);
  CHECK(report.ok());
  CHECK(report.checked == 101);
  CHECK(report.skipped.empty());
}

TEST_CASE("cross-check to the full bundled range") {
  const BFileSequence seq = parse_bfile(bundled_bfile_text());
  const auto report = cross_check(seq.last_index(), seq);
  CHECK(report.ok());
  CHECK(report.checked == seq.last_index() + 1);
}

TEST_CASE("cross-check is vacuous at max 0 and flags edits") {
  const BFileSequence tiny = parse_bfile("0 1\n1 1\n2 2\n3 7\n");
  const auto vacuous = cross_check(0, tiny);
  CHECK(vacuous.ok());
  CHECK(vacuous.checked == 1);

  const auto flagged = cross_check(3, tiny);
  CHECK(!flagged.ok());
  REQUIRE(flagged.mismatches.size() == 1);
  CHECK(flagged.mismatches[0].index == 3);
  CHECK(flagged.mismatches[0].expected == Natural{6});
  CHECK(flagged.mismatches[0].found == Natural{7});
}

TEST_CASE("uncovered indices are skipped, not failed") {
  const BFileSequence partial = parse_bfile("5 60\n6 60\n7 420\n");
  const auto report = cross_check(7, partial);
  CHECK(report.ok());
  CHECK(report.checked == 3);
  CHECK(report.skipped == std::vector<std::int64_t>{0, 1, 2, 3, 4});
}

TEST_CASE("default b-file urls") {
  CHECK(default_bfile_url("A003418") ==
        "https://oeis.org/A003418/b003418.txt");
  CHECK_THROWS_AS(default_bfile_url("3418"), std::invalid_argument);
  CHECK_THROWS_AS(default_bfile_url("A34x8"), std::invalid_argument);
  CHECK_THROWS_AS(default_bfile_url("A"), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("oeis-fetch") {

// These run against a loopback server only; nothing here talks to the
// real OEIS.
TEST_CASE("fetch against a local server") {
  httplib::Server server;
  server.Get("/A000001/b000001.txt",
             [](const httplib::Request&, httplib::Response& res) {
               res.set_content("0 1\n1 1\n", "text/plain");
             });
  server.Get("/huge.txt",
             [](const httplib::Request&, httplib::Response& res) {
               res.set_content(std::string(9u << 20, 'x'), "text/plain");
             });

  const int port = server.bind_to_any_port("127.0.0.1");
  if (port <= 0) {
    MESSAGE("cannot bind a loopback port here; skipping fetch tests");
    return;
  }
  std::thread runner([&server] { server.listen_after_bind(); });
  server.wait_until_ready();
  const std::string base = "http://127.0.0.1:" + std::to_string(port);

  SUBCASE("success returns the body") {
    CHECK(fetch_bfile("A000001", base + "/A000001/b000001.txt") ==
          "0 1\n1 1\n");
  }
  SUBCASE("missing files raise with the status") {
    CHECK_THROWS_WITH_AS(fetch_bfile("A000001", base + "/nope.txt"),
                         doctest::Contains("404"), fetch_error);
  }
  SUBCASE("oversized bodies abort mid-stream") {
    CHECK_THROWS_WITH_AS(fetch_bfile("A000001", base + "/huge.txt"),
                         doctest::Contains("cap"), fetch_error);
  }
  SUBCASE("the CLI cross-checks a fetched b-file end to end") {
    CHECK(cli_exit_code("check-oeis --max-n 1 --fetch --url " + base +
                        "/A000001/b000001.txt") == 0);
    CHECK(cli_exit_code("check-oeis --max-n 1 --fetch --url " + base +
                        "/nope.txt") == 2);
    CHECK(cli_exit_code("DUMMY") == 2);  // sanity: helper reports exits
  }

  server.stop();
  runner.join();
}

TEST_CASE("unreachable endpoints raise a fetch error") {
  CHECK_THROWS_AS(fetch_bfile("A000001", "http://127.0.0.1:1/x"), fetch_error);
}

TEST_CASE("non-http schemes are refused") {
  CHECK_THROWS_AS(fetch_bfile("A000001", "ftp://example.org/x"), fetch_error);
  CHECK_THROWS_AS(fetch_bfile("A000001", "oeis.org/x"), fetch_error);
}

}  // TEST_SUITE
