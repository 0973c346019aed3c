// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <thread>

#include "hgc/verify.hpp"

int main() {
  hgc::VerifyOptions opt;
  opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto results = hgc::acceptance_suite(opt);
  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::printf("%s criterion %zu (%s) [%.2fs]: %s\n", r.pass ? "PASS" : "FAIL", i + 1, r.name.c_str(), r.seconds,
                r.detail.c_str());
    all = all && r.pass;
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
