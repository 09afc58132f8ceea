#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "weilmod/selfcheck.hpp"

using namespace weilmod;

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  double limit_s;  // 0 = no runtime bound
};

const Criterion kCriteria[] = {
    {1, "Stone-von Neumann: commutant 1, central character psi", "stone_von_neumann", 60},
    {2, "Weil-factor identities and the Hilbert identity", "weil_factor", 60},
    {3, "Hasse-invariant product formula, two paths", "hasse_product", 0},
    {4, "Fourier normalisation F^2 = eps parity, F^4 = eps^2", "fourier", 0},
    {5, "cocycle trivial over finite fields", "finite_cocycle", 300},
    {6, "p-adic cocycle: values, cocycle identity, lemmas, operator path", "padic_cocycle", 0},
    {7, "M[g]: intertwining, commuting pairs, proportional to sigma", "m_bracket", 0},
    {8, "Sp_2(F_q) Weil representation splits into (q+-1)/2", "weil_decomposition", 0},
    {9, "theta lifts for O_1 x Sp_2(F_3) and reduction mod 7", "theta", 60},
};

bool capture(const std::string& cmd, std::string& out, int& rc) {
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return false;
  char buf[4096];
  size_t n;
  out.clear();
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  rc = pclose(f);
  return true;
}

}  // namespace

int main() {
  int failed = 0;
  SelfcheckOptions opt;
  for (auto& c : kCriteria) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = run_suite(c.suite, opt);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.pass() && (c.limit_s == 0 || s < c.limit_s);
    failed += !ok;
    std::printf("criterion %2d %s: %s (%ld checks, %ld failures, %.1fs)\n", c.id, ok ? "PASS" : "FAIL", c.title,
                r.checks, r.failures, s);
    if (!r.pass()) std::printf("             first failure: %s\n", r.first_failure.c_str());
    if (c.limit_s && s >= c.limit_s) std::printf("             runtime bound %.0fs exceeded\n", c.limit_s);
    std::fflush(stdout);
  }
  std::string cmd = std::string("\"") + WEILMOD_CLI + "\" selfcheck --seed 42";
  std::string a, b;
  int ra = -1, rb = -1;
  bool ran = capture(cmd, a, ra) && capture(cmd, b, rb);
  bool ok = ran && ra == 0 && rb == 0 && !a.empty() && a == b;
  failed += !ok;
  std::printf("criterion 10 %s: selfcheck --seed 42 byte-reproducible (%zu bytes, exit %d/%d)\n", ok ? "PASS" : "FAIL",
              a.size(), ra, rb);
  std::printf("%d of 10 criteria failed\n", failed);
  return failed ? 1 : 0;
}
