#pragma once

#include <string>
#include <vector>

#include "qkchev/chevalley.hpp"
#include "qkchev/involutions.hpp"

namespace qkchev {

// One verification record. `note` lists the failed sub-checks ("diff",
// "cancel", "theta", ...) and is empty when match is true.
struct SweepRow {
  std::string family;
  int n = 0;
  std::string k;
  std::string w;
  std::string label;
  long long n_all = 0;
  long long n_less = 0;
  bool match = true;
  std::string note;
};

struct SweepReport {
  std::string suite;
  int nmax = 0;
  std::vector<SweepRow> rows;
  double seconds = 0.0;

  bool ok() const;
  long long failures() const;
};

std::vector<std::string> suite_names();
int default_bound(const std::string& suite);

// Runs a named sweep up to the given window-size bound (0 picks the
// default); jobs > 1 fans the outer loop out over threads and merges rows in
// canonical order.
SweepReport run_suite(const std::string& suite, int nmax = 0, int jobs = 1);

std::string report_tsv(const SweepReport& rep);

// Raw alternating terms of the full-flag product, for sign-grouping checks.
std::vector<RawTerm> gb_raw_terms(const WeylElement& w, int k);

// Exact statements behind the remaining acceptance criteria; each returns an
// empty string on success and the first counterexample otherwise.
std::string wt_pinning_errors(int nmax_a, int nmax_c);
std::string theta_equivalence_errors(int nmax_a, int nmax_c);
std::string mirror_errors(int nmax_chain, int nmax_twostep);
std::string gb_chain_independence_errors(int nmax);

int env_jobs();

}  // namespace qkchev
