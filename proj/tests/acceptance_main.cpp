// Acceptance runner: one line per criterion, nonzero exit on any failure.
#include "zz/acceptance.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
  zz::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0) opt.include_slow = true;
  bool all = true;
  long long total = 0;
  zz::run_acceptance(opt, [&](const zz::CriterionResult& r) {
    all = all && r.pass;
    total += r.ms;
    std::printf("[%s] %2d  %-55s %6lld ms%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.ms, r.details.empty() ? "" : "  -- ", r.details.c_str());
    std::fflush(stdout);
  });
  std::printf("%s (total %lld ms)\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES",
              total);
  return all ? 0 : 1;
}
