#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HGC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + "hgc_" + name; }

TEST(Cli, ParamsTable) {
  const auto r = run("params -m 4..8 -q 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("5, 2, 297, 10, 192\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("8, 2, 1519749, 28, 1048576\n"), std::string::npos);
}

TEST(Cli, GoldenSpectrum) {
  const auto r = run("spectrum -m 5 -q 2 --exhaustive");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "weight,count\n0,1\n192,24948\n216,295680\n224,498960\n232,228096\n256,891\n");
}

TEST(Cli, VerifySmallInstance) { EXPECT_EQ(run("verify -m 4 -q 2").code, 0); }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("params -m x").code, 2);
  EXPECT_EQ(run("spectrum -m 6 -q 2 --exhaustive").code, 2);  // over the default budget
  EXPECT_EQ(run("spectrum -m 4 -q 2 --budget 0").code, 2);
  EXPECT_EQ(run("points -m 4 -q 6").code, 2);
  EXPECT_EQ(run("points -m 4 --format xml").code, 2);
  const std::string bad = tmp("bad.json");
  std::ofstream(bad) << R"({"m":4,"p":2,"e":1,"upper":[1,2,3]})";
  EXPECT_EQ(run("weight --form " + bad).code, 2);
  std::ofstream(bad) << "not json";
  EXPECT_EQ(run("classify --form " + bad).code, 2);
  EXPECT_EQ(run("classify --form /nonexistent/form.json").code, 2);
}

TEST(Cli, MinWordFeedsClassify) {
  const std::string form = tmp("min52.json");
  ASSERT_EQ(run("min-word -m 5 -q 2 --format json --out " + form).code, 0);
  const auto ff = hgc::io::read_form_file(form);
  EXPECT_EQ(ff.m, 5);
  const auto r = run("classify --format json --form " + form);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"weightDirect\": 192"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"radDim\": 3"), std::string::npos);
  const auto w = run("weight --form " + form);
  EXPECT_EQ(w.out, "method,weight\ndirect,192\nrecursive,192\nfrom_abc,192\n");
}

TEST(Cli, OutputsAreByteIdentical) {
  for (const std::string args : {"spectrum -m 4 -q 3 --sample 3000 --seed 11", "genmat -m 5 -q 2",
                                 "lines -m 4 -q 3 --format json", "bounds -m 12 -q 5"}) {
    const std::string a = tmp("a.out"), b = tmp("b.out");
    ASSERT_EQ(run(args + " --jobs 1 --out " + a).code, 0) << args;
    ASSERT_EQ(run(args + " --jobs 3 --out " + b).code, 0) << args;
    EXPECT_FALSE(slurp(a).empty());
    EXPECT_EQ(slurp(a), slurp(b)) << args;
  }
  EXPECT_NE(slurp(tmp("a.out")).find("i, xi, muMax, dLower"), std::string::npos);
}

TEST(Cli, SpectrumMetadataRecordsSeed) {
  const std::string out = tmp("spec.csv");
  ASSERT_EQ(run("spectrum -m 4 -q 2 --sample 100 --seed 42 --out " + out).code, 0);
  const auto meta = slurp(out + ".meta.json");
  EXPECT_NE(meta.find("\"seed\":42"), std::string::npos) << meta;
  EXPECT_NE(meta.find("\"mode\":\"sample\""), std::string::npos);
  EXPECT_NE(meta.find("wall_time_seconds"), std::string::npos);
}

TEST(Io, FormRoundTripAndValidation) {
  const hgc::io::FormFile f{4, 3, 1, {0, 1, 2, 3, 4, 8}};
  std::stringstream ss;
  hgc::io::write_form(ss, f);
  const auto g = hgc::io::read_form(ss);
  EXPECT_EQ(g.m, 4);
  EXPECT_EQ(g.upper, f.upper);
  std::stringstream out_of_field(R"({"m":4,"p":2,"e":1,"upper":[0,0,0,0,0,4]})");
  EXPECT_THROW(hgc::io::read_form(out_of_field), hgc::io::FormatError);
  std::stringstream missing(R"({"m":4,"upper":[0,0,0,0,0,0]})");
  EXPECT_THROW(hgc::io::read_form(missing), hgc::io::FormatError);
  std::stringstream bad_field(R"({"m":4,"p":4,"e":1,"upper":[0,0,0,0,0,0]})");
  EXPECT_THROW(hgc::io::read_form(bad_field), hgc::io::FormatError);
}

TEST(Io, PointsCsvHeader) {
  const auto r = run("points -m 3 -q 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "# m=3 p=2 e=1");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2 + 9);
}

}  // namespace
