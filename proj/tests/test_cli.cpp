#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string &args) {
  const std::string command = std::string(MOTIVE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE *pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::ordered_json parse(const Run &r) { return nlohmann::ordered_json::parse(r.out); }

} // namespace

TEST(Cli, CrossedBasisOfCyclicTwo) {
  const auto r = run("cbr-basis --group cyclic:2");
  ASSERT_EQ(r.status, 0);
  const auto doc = parse(r);
  EXPECT_EQ(doc["command"], "cbr-basis");
  EXPECT_EQ(doc["payload"]["dimension"], 4);
  EXPECT_EQ(doc["payload"]["basis"].size(), 4u);
}

TEST(Cli, MotivicReportAlternatingFive) {
  const auto r = run("motivic-report --group alt:5 --coeff Z");
  ASSERT_EQ(r.status, 0);
  const auto doc = parse(r);
  EXPECT_EQ(doc["payload"]["summands"].size(), 2u);
  EXPECT_EQ(doc["payload"]["survivors"], nlohmann::ordered_json::array({"1#1"}));
  EXPECT_EQ(doc["payload"]["summands"][0]["rho"], nlohmann::ordered_json({{"()", "1"}}));
  EXPECT_EQ(doc["payload"]["summands"][1]["rho"], nlohmann::ordered_json::object());
}

TEST(Cli, VerifyAllSymmetricThree) {
  const auto r = run("verify-all --group sym:3");
  EXPECT_EQ(r.status, 0);
  const auto doc = parse(r);
  EXPECT_FALSE(doc["checks"].empty());
  EXPECT_FALSE(doc.contains("reproducer"));
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(run("verify-all --group sym:3 --seed 3").out, run("verify-all --group sym:3 --seed 3").out);
  EXPECT_EQ(run("cbr-idempotents --group alt:5 --coeff Q").out, run("cbr-idempotents --group alt:5 --coeff Q").out);
}

TEST(Cli, Multiply) {
  const auto r = run(R"(cbr-multiply --group cyclic:2 --lhs '{"[1#1,(1,2)]":"1"}' --rhs '{"[1#1,(1,2)]":"1"}')");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["payload"]["product"], nlohmann::ordered_json({{"[1#1,()]", "2"}}));
}

TEST(Cli, Blocks) {
  const auto r = run("blocks --group sym:3 --prime 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(parse(r)["payload"]["blocks"].size(), 2u);
}

TEST(Cli, Tsv) {
  const auto r = run("cbr-basis --group cyclic:2 --tsv");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("payload.dimension\t4\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("no-such-command --group cyclic:2").status, 2);
  EXPECT_EQ(run("cbr-basis").status, 2);
  EXPECT_EQ(run("cbr-basis --group sym:9").status, 3);
  const auto r = run("mackey-check --group sym:4");
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(parse(r)["error"]["bound"], "span dimension bound");
  EXPECT_EQ(run("cbr-basis --group alt:5 --bound 30").status, 3);
}

TEST(Cli, FailingCheckExitsOne) {
  // the crossed ideal ranks disagree with the Weyl-group ranks here
  const auto r = run("p-local-report --group alt:5 --prime 2");
  EXPECT_EQ(r.status, 1);
  const auto doc = parse(r);
  EXPECT_EQ(doc["payload"]["summands"].size(), 5u);
}
