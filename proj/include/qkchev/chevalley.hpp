#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qkchev/alcove.hpp"
#include "qkchev/ring.hpp"

namespace qkchev {

struct GBOptions {
  bool star = false;  // type A: use the column-ordered chain
  WtOrder wt_order = WtOrder::LastIndexInnermost;
};

// Full flag multiplication by the line bundle class of the anti-dominant
// fundamental weight: the alternating sum over all admissible subsets with
// Novikov and character statistics. This is the oracle for the closed forms.
SchubertCombo chevalley_GB(const WeylElement& w, int k, const GBOptions& opt = {});

// Linear extension of chevalley_GB over an arbitrary full-flag combination.
SchubertCombo apply_chevalley_operator(const SchubertCombo& a, int k,
                                       const GBOptions& opt = {});

// Window characterization of w >= floor(s_theta) on minimal representatives:
// type A: w(k) = n and w(k+1) = 1; type C: w(k) = -1.
bool theta_condition(const WeylElement& w, int k);

enum class CaseLabel {
  GrassA_theta,
  GrassA_plain,
  GrassC,
  TwoStep_T1,
  TwoStep_T2a,
  TwoStep_T2b,
  TwoStep_T3_1a,
  TwoStep_T3_1b,
  TwoStep_T3_2a,
  TwoStep_T3_2b,
  TwoStep_T3_Full,
  TwoStep_T4,
  TwoStep_T5a,
  TwoStep_T5b,
  TwoStep_T6_1a,
  TwoStep_T6_1b,
  TwoStep_T6_2a,
  TwoStep_T6_2b,
  TwoStep_T6_Full,
};

std::string case_label_name(CaseLabel label);

// One record per generated closed-form term before summation; used to check
// that groups with equal (coset, Novikov, weight) never mix signs.
struct RawTerm {
  std::vector<int> window;
  std::vector<int> qexps;
  Weight weight;
  int sign = 1;
};

CaseLabel classify_grassmannian(const WeylElement& w, int k);

// Cancellation-free evaluators: Bruhat-only subsets of the defining chain,
// with the extra Novikov terms dictated by the case label.
SchubertCombo chevalley_grassmannian_A(const WeylElement& w, int k,
                                       std::vector<RawTerm>* raw = nullptr);
SchubertCombo chevalley_grassmannian_C(const WeylElement& w, int k,
                                       std::vector<RawTerm>* raw = nullptr);

CaseLabel classify_twostep(const WeylElement& w, int k1, int k2, int target);

SchubertCombo chevalley_twostep(const WeylElement& w, int k1, int k2, int target,
                                std::vector<RawTerm>* raw = nullptr);

// Admissible subsets of a two-step chain grouped by quantum-step pattern:
// none; trailing quantum simple step; trailing quantum long step; quantum
// long step followed by the Bruhat simple step.
struct AdmissiblePartition {
  std::vector<AdmissibleSubset> a_less, a1, a2, a3;
};

AdmissiblePartition partition_twostep(const WeylElement& w, const LabeledChain& chain,
                                      int k1, int k2);

// Condition (Q): w(k1) > w(k2) and w(k1+1) > w(k2+1).
bool condition_Q(const WeylElement& w, int k1, int k2);
// Condition (Q-A): some l <= k1 has w(k2+1) < w(l) < w(k1+1).
bool condition_QA(const WeylElement& w, int k1, int k2);
// Condition (Full) and its mirror (Full)*.
bool condition_full(const WeylElement& w, int k1, int k2);
bool condition_full_star(const WeylElement& w, int k1, int k2);

ParabolicSubset grassmannian_parabolic(const GroupDescriptor& d, int k);
ParabolicSubset twostep_parabolic(const GroupDescriptor& d, int k1, int k2);

// Groups raw terms by (window, qexps, weight) and reports the first group
// containing both signs, or nullopt when sign-homogeneous.
std::optional<std::string> mixed_sign_group(const std::vector<RawTerm>& raw);

}  // namespace qkchev
