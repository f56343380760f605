// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <gksum/verify.hpp>

using namespace gksum;

namespace {

struct Criterion {
  int id;
  const char* suite;
  double limit_seconds;
  const char* summary;
};

const Criterion kCriteria[] = {
    {1, "finite-macdonald-zero", 10, "finite Macdonald sum at lambda = 0 is 1 (A1 A2 B2 G2)"},
    {2, "padic-rank1", 30, "SL2 coset counts equal the A1 GK coefficients, q in {2,3,5}, n <= 4"},
    {3, "weyl-character", 10, "u = 0 limit equals Freudenthal multiplicities (A2 B2, labels <= 2)"},
    {4, "finite-stabilization", 5, "A2 coefficient at (1,1) stabilizes to (1-u)(2-u) from min label 2"},
    {5, "affine-constant-term", 120, "H_0 equals the product form (A1 A2 affine, N = M = 6)"},
    {6, "affine-gk-stabilization", 120, "A1 affine H_lambda / H_0 equals the GK series up to height 4"},
    {7, "dominance-emptiness", 60, "no coset in a non-dominant direction; all supports in the positive cone"},
    {8, "properties", 60, "ring laws, truncation stability, w(Delta) constant terms, BFS invariants"},
};

const SuiteEntry& find_suite(const std::string& name) {
  for (const auto& s : verify_suites())
    if (name == s.name) return s;
  std::fprintf(stderr, "no suite %s\n", name.c_str());
  std::exit(3);
}

bool mentions_support_failure(const SuiteResult& r) {
  for (const auto& l : r.lines)
    if (l.find("support leaves the positive cone") != std::string::npos) return true;
  return false;
}

}  // namespace

int main() {
  const VerifyOptions opts;
  bool all = true;
  bool support_ok = true;
  for (const auto& c : kCriteria) {
    SuiteResult r = run_suite(find_suite(c.suite), opts);
    std::vector<std::string> extra;
    if (c.id <= 6 && mentions_support_failure(r)) support_ok = false;
    if (c.id == 5) {
      const auto a1 = build_root_system('A', 1, true);
      const auto h0 = h_zero(a1, 6, 6);
      const FormalRing ring{6};
      const USeries want = ring.u_power(2) - ring.u();
      const USeries got = h0.coefficient(*a1.null_coroot);
      if (!(got == want)) {
        r.passed = false;
        extra.push_back("A1 affine e^{-delta} coefficient " + got.str() + ", expected " + want.str());
      }
    }
    if (c.id == 7 && !support_ok) {
      r.passed = false;
      extra.push_back("a series from criteria 1-6 has support outside the positive cone");
    }
    const bool in_time = r.seconds < c.limit_seconds;
    const bool ok = r.passed && in_time;
    all &= ok;
    std::printf("[%s] criterion %d: %s (%.2fs, limit %.0fs)\n", ok ? "PASS" : "FAIL", c.id, c.summary, r.seconds,
                c.limit_seconds);
    if (!ok) {
      for (const auto& l : r.lines)
        if (l.rfind("FAIL", 0) == 0 || l.rfind("      ", 0) == 0) std::printf("    %s\n", l.c_str());
      for (const auto& l : extra) std::printf("    FAIL  %s\n", l.c_str());
      if (!in_time) std::printf("    FAIL  exceeded the time limit\n");
    }
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
