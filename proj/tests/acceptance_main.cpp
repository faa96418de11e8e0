// Acceptance gate: one exact check per criterion, one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qkchev/verify.hpp"

using namespace qkchev;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(int idx, bool pass, const std::string& what, double secs,
            const std::string& detail = "") {
  std::printf("[%2d] %s %s [%.2fs]%s%s\n", idx, pass ? "PASS" : "FAIL", what.c_str(),
              secs, detail.empty() ? "" : " ", detail.c_str());
  if (!pass) ++g_failures;
}

// No row carries the given failure tag.
bool clean_of(const SweepReport& rep, const std::string& tag) {
  for (const auto& r : rep.rows)
    if (r.note.find(tag) != std::string::npos) return false;
  return true;
}

bool clean(const SweepReport& rep) { return rep.ok(); }

}  // namespace

int main() {
  int jobs = env_jobs();

  auto t0 = std::chrono::steady_clock::now();
  SweepReport edge_a = run_suite("edgeOracleA", 6, jobs);
  SweepReport edge_c = run_suite("edgeOracleC", 3, jobs);
  double edge_secs = seconds_since(t0);
  report(1, clean(edge_a) && clean(edge_c) && edge_secs < 10.0,
         "edge criterion matches the length-gap classification (A n<=6, C n<=3)",
         edge_secs);

  t0 = std::chrono::steady_clock::now();
  SweepReport grass_a = run_suite("grassA", 5, jobs);
  double ga_secs = seconds_since(t0);
  report(2,
         clean_of(grass_a, "diff") && clean_of(grass_a, "exception") &&
             ga_secs < 120.0,
         "type A Grassmannian closed form equals the projected product (n<=5)",
         ga_secs);

  t0 = std::chrono::steady_clock::now();
  SweepReport grass_c = run_suite("grassC", 4, jobs);
  report(3, clean_of(grass_c, "diff") && clean_of(grass_c, "exception"),
         "type C Grassmannian closed form equals the projected product (n<=4)",
         seconds_since(t0));

  t0 = std::chrono::steady_clock::now();
  SweepReport twostep = run_suite("twostepA", 5, jobs);
  report(4,
         clean_of(twostep, "diff") && clean_of(twostep, "exception") &&
             clean_of(twostep, "partition"),
         "two-step closed form equals the projected product, single case label "
         "(n<=5)",
         seconds_since(t0));

  t0 = std::chrono::steady_clock::now();
  bool cancel_ok = clean_of(grass_a, "cancel") && clean_of(grass_c, "cancel") &&
                   clean_of(twostep, "cancel");
  report(5, cancel_ok, "closed-form outputs are sign homogeneous per basis label",
         seconds_since(t0));

  t0 = std::chrono::steady_clock::now();
  std::string wt_err = wt_pinning_errors(5, 3);
  report(6, wt_err.empty(),
         "wt is the translated weight in type A and first-segment local in type C",
         seconds_since(t0), wt_err);

  t0 = std::chrono::steady_clock::now();
  SweepReport inv = run_suite("involutions", 5, jobs);
  report(7, clean(inv),
         "sign-reversing pairings and cancellation sums hold (A n<=5, C n<=3)",
         seconds_since(t0));

  t0 = std::chrono::steady_clock::now();
  std::string theta_err = theta_equivalence_errors(5, 3);
  report(8, theta_err.empty(),
         "window test for the highest-root threshold matches the Bruhat order",
         seconds_since(t0), theta_err);

  t0 = std::chrono::steady_clock::now();
  SweepReport parity = run_suite("parity", 4, jobs);
  report(9, clean(parity), "directed walks between fixed endpoints share parity",
         seconds_since(t0));

  t0 = std::chrono::steady_clock::now();
  SweepReport commute = run_suite("commute", 4, jobs);
  report(10, clean(commute), "line-bundle operators commute (A n<=4, C n<=2)",
         seconds_since(t0));

  t0 = std::chrono::steady_clock::now();
  std::string mirror_err = mirror_errors(6, 4);
  report(11, mirror_err.empty(),
         "column chain is the dualized row chain; mirrored evaluators agree",
         seconds_since(t0), mirror_err);

  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
