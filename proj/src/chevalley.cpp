#include "qkchev/chevalley.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qkchev {

namespace {

Weight negate(Weight mu) {
  for (int& c : mu) c = -c;
  return mu;
}

WeightLaurent char_of(const GroupDescriptor& d, const Weight& mu, int sign) {
  return WeightLaurent::monomial(d, mu, BigInt(sign));
}

void record(std::vector<RawTerm>* raw, const WeylElement& w, const NovikovMonomial& q,
            const Weight& mu, int sign) {
  if (raw) raw->push_back({w.window(), q.exps(), mu, sign});
}

}  // namespace

SchubertCombo chevalley_GB(const WeylElement& w, int k, const GBOptions& opt) {
  const GroupDescriptor& d = w.group();
  LabeledChain chain = make_chain(d, k, opt.star);
  SchubertCombo out(d, ParabolicSubset::empty());
  for (const auto& a : enumerate_admissible(w, chain)) {
    Weight mu = canonical_weight(d, negate(wt_statistic(w, chain, a, opt.wt_order)));
    out.add(a.end(), NovikovMonomial::from_coroot(down_statistic(chain, a)),
            char_of(d, mu, a.sign()));
  }
  return out;
}

SchubertCombo apply_chevalley_operator(const SchubertCombo& a, int k,
                                       const GBOptions& opt) {
  if (!a.parabolic().indices.empty())
    throw std::invalid_argument("operator acts on full flag combos");
  const GroupDescriptor& d = a.group();
  SchubertCombo out(d, ParabolicSubset::empty());
  for (const auto& [key, c] : a.terms()) {
    SchubertCombo part = chevalley_GB(WeylElement(d, key.window), k, opt);
    out += part.scaled(c, NovikovMonomial(key.qexps));
  }
  return out;
}

bool theta_condition(const WeylElement& w, int k) {
  if (w.group().family == Family::A) return w(k) == w.n() && w(k + 1) == 1;
  return w(k) == -1;
}

std::string case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::GrassA_theta: return "GrassA_theta";
    case CaseLabel::GrassA_plain: return "GrassA_plain";
    case CaseLabel::GrassC: return "GrassC";
    case CaseLabel::TwoStep_T1: return "TwoStep_T1";
    case CaseLabel::TwoStep_T2a: return "TwoStep_T2a";
    case CaseLabel::TwoStep_T2b: return "TwoStep_T2b";
    case CaseLabel::TwoStep_T3_1a: return "TwoStep_T3_1a";
    case CaseLabel::TwoStep_T3_1b: return "TwoStep_T3_1b";
    case CaseLabel::TwoStep_T3_2a: return "TwoStep_T3_2a";
    case CaseLabel::TwoStep_T3_2b: return "TwoStep_T3_2b";
    case CaseLabel::TwoStep_T3_Full: return "TwoStep_T3_Full";
    case CaseLabel::TwoStep_T4: return "TwoStep_T4";
    case CaseLabel::TwoStep_T5a: return "TwoStep_T5a";
    case CaseLabel::TwoStep_T5b: return "TwoStep_T5b";
    case CaseLabel::TwoStep_T6_1a: return "TwoStep_T6_1a";
    case CaseLabel::TwoStep_T6_1b: return "TwoStep_T6_1b";
    case CaseLabel::TwoStep_T6_2a: return "TwoStep_T6_2a";
    case CaseLabel::TwoStep_T6_2b: return "TwoStep_T6_2b";
    case CaseLabel::TwoStep_T6_Full: return "TwoStep_T6_Full";
  }
  return "?";
}

ParabolicSubset grassmannian_parabolic(const GroupDescriptor& d, int k) {
  return ParabolicSubset::full_minus(d, {k});
}

ParabolicSubset twostep_parabolic(const GroupDescriptor& d, int k1, int k2) {
  return ParabolicSubset::full_minus(d, {k1, k2});
}

CaseLabel classify_grassmannian(const WeylElement& w, int k) {
  if (w.group().family == Family::C) return CaseLabel::GrassC;
  return theta_condition(w, k) ? CaseLabel::GrassA_theta : CaseLabel::GrassA_plain;
}

namespace {

void require_min_rep(const WeylElement& w, const ParabolicSubset& J) {
  if (!is_min_coset_rep(w, J))
    throw std::invalid_argument("element " + w.str() + " is not minimal in " + J.str());
}

WeylElement checked_end(const WeylElement& end, const ParabolicSubset& J) {
  if (!is_min_coset_rep(end, J))
    throw std::logic_error("Bruhat walk left the minimal representatives: " + end.str());
  return end;
}

}  // namespace

SchubertCombo chevalley_grassmannian_A(const WeylElement& w, int k,
                                       std::vector<RawTerm>* raw) {
  const GroupDescriptor& d = w.group();
  if (d.family != Family::A) throw std::invalid_argument("type A evaluator");
  ParabolicSubset J = grassmannian_parabolic(d, k);
  require_min_rep(w, J);
  SchubertCombo out(d, J);
  Weight factor = act_on_weight(w, fundamental_weight(d, k));
  NovikovMonomial one(d.rank()), qk = NovikovMonomial::variable(d.rank(), k);
  if (w.is_identity()) {
    // Two terms: the empty subset and the simple step at alpha_k.
    WeylElement sk = apply_simple(w, k);
    out.add(w, one, char_of(d, factor, 1));
    out.add(sk, one, char_of(d, factor, -1));
    record(raw, w, one, factor, 1);
    record(raw, sk, one, factor, -1);
    return out;
  }
  LabeledChain chain = chain_typeA(d.n, k);
  bool theta = theta_condition(w, k);
  for (const auto& a : enumerate_admissible(w, chain, StepFilter::BruhatOnly)) {
    WeylElement end = checked_end(a.end(), J);
    out.add(end, one, char_of(d, factor, a.sign()));
    record(raw, end, one, factor, a.sign());
    if (theta) {
      WeylElement shifted = min_coset_rep(apply_transposition(end, k, k + 1), J);
      out.add(shifted, qk, char_of(d, factor, -a.sign()));
      record(raw, shifted, qk, factor, -a.sign());
    }
  }
  return out;
}

SchubertCombo chevalley_grassmannian_C(const WeylElement& w, int k,
                                       std::vector<RawTerm>* raw) {
  const GroupDescriptor& d = w.group();
  if (d.family != Family::C) throw std::invalid_argument("type C evaluator");
  ParabolicSubset J = grassmannian_parabolic(d, k);
  require_min_rep(w, J);
  SchubertCombo out(d, J);
  NovikovMonomial one(d.rank()), qk = NovikovMonomial::variable(d.rank(), k);
  LabeledChain chain = chain_typeC(d.n, k);
  for (const auto& a : enumerate_admissible(w, chain, StepFilter::BruhatOnly)) {
    Weight mu = negate(wt_statistic(w, chain, a));
    WeylElement end = checked_end(a.end(), J);
    out.add(end, one, char_of(d, mu, a.sign()));
    record(raw, end, one, mu, a.sign());
    if (end_of_first_segment(w, chain, a)(k) == -1) {
      WeylElement shifted =
          min_coset_rep(apply_reflection(end, two_root(k)), J);
      out.add(shifted, qk, char_of(d, mu, -a.sign()));
      record(raw, shifted, qk, mu, -a.sign());
    }
  }
  return out;
}

bool condition_Q(const WeylElement& w, int k1, int k2) {
  return w(k1) > w(k2) && w(k1 + 1) > w(k2 + 1);
}

bool condition_QA(const WeylElement& w, int k1, int k2) {
  for (int l = 1; l <= k1; ++l)
    if (w(k2 + 1) < w(l) && w(l) < w(k1 + 1)) return true;
  return false;
}

bool condition_full(const WeylElement& w, int k1, int k2) {
  if (w(k1) != w.n() || w(k2 + 1) != 1) return false;
  for (int l = 1; l <= k2; ++l)
    if (w(l) < w(k1 + 1)) return false;
  return true;
}

bool condition_full_star(const WeylElement& w, int k1, int k2) {
  if (w(k1) != w.n() || w(k2 + 1) != 1) return false;
  for (int l = k1 + 1; l <= w.n(); ++l)
    if (w(l) > w(k2)) return false;
  return true;
}

namespace {

void check_twostep_args(const WeylElement& w, int k1, int k2, int target) {
  const GroupDescriptor& d = w.group();
  if (d.family != Family::A) throw std::invalid_argument("two-step: type A only");
  if (!(1 <= k1 && k1 < k2 && k2 <= d.rank()))
    throw std::invalid_argument("two-step indices out of range");
  if (target != k1 && target != k2)
    throw std::invalid_argument("target must be one of the removed indices");
}

}  // namespace

CaseLabel classify_twostep(const WeylElement& w, int k1, int k2, int target) {
  check_twostep_args(w, k1, k2, target);
  require_min_rep(w, twostep_parabolic(w.group(), k1, k2));
  int n = w.n();
  bool q = condition_Q(w, k1, k2);
  if (target == k1) {
    if (w(k1) < w(k1 + 1)) return CaseLabel::TwoStep_T1;
    if (!q) {
      if (w(1) < w(k1 + 1) || w(k1) < w(k2)) return CaseLabel::TwoStep_T2a;
      return CaseLabel::TwoStep_T2b;
    }
    if (w(k1) < w(n))
      return w(1) < w(k1 + 1) ? CaseLabel::TwoStep_T3_1a : CaseLabel::TwoStep_T3_1b;
    if (w(1) < w(k2 + 1)) return CaseLabel::TwoStep_T3_2a;
    if (w(1) < w(k1 + 1)) return CaseLabel::TwoStep_T3_2b;
    if (!condition_full(w, k1, k2))
      throw std::logic_error("uncovered branch for " + w.str());
    return CaseLabel::TwoStep_T3_Full;
  }
  if (w(k2) < w(k2 + 1)) return CaseLabel::TwoStep_T4;
  if (!q) {
    if (w(k2) < w(n) || w(k1 + 1) < w(k2 + 1)) return CaseLabel::TwoStep_T5a;
    return CaseLabel::TwoStep_T5b;
  }
  if (w(1) < w(k2 + 1))
    return w(k2) < w(n) ? CaseLabel::TwoStep_T6_1a : CaseLabel::TwoStep_T6_1b;
  if (w(k1) < w(n)) return CaseLabel::TwoStep_T6_2a;
  if (w(k2) < w(n)) return CaseLabel::TwoStep_T6_2b;
  if (!condition_full_star(w, k1, k2))
    throw std::logic_error("uncovered branch for " + w.str());
  return CaseLabel::TwoStep_T6_Full;
}

SchubertCombo chevalley_twostep(const WeylElement& w, int k1, int k2, int target,
                                std::vector<RawTerm>* raw) {
  check_twostep_args(w, k1, k2, target);
  const GroupDescriptor& d = w.group();
  ParabolicSubset J = twostep_parabolic(d, k1, k2);
  require_min_rep(w, J);
  CaseLabel label = classify_twostep(w, k1, k2, target);

  bool sub_simple = label == CaseLabel::TwoStep_T2b || label == CaseLabel::TwoStep_T3_1b ||
                    label == CaseLabel::TwoStep_T3_Full || label == CaseLabel::TwoStep_T5b ||
                    label == CaseLabel::TwoStep_T6_1b || label == CaseLabel::TwoStep_T6_Full;
  bool sub_long = label == CaseLabel::TwoStep_T3_2b || label == CaseLabel::TwoStep_T3_Full ||
                  label == CaseLabel::TwoStep_T6_2b || label == CaseLabel::TwoStep_T6_Full;
  bool full = label == CaseLabel::TwoStep_T3_Full || label == CaseLabel::TwoStep_T6_Full;

  LabeledChain chain = target == k1 ? chain_typeA(d.n, k1) : chain_typeA_star(d.n, k2);
  SchubertCombo out(d, J);
  Weight factor = act_on_weight(w, fundamental_weight(d, target));
  NovikovMonomial one(d.rank());
  NovikovMonomial qt = NovikovMonomial::variable(d.rank(), target);
  NovikovMonomial qq =
      NovikovMonomial::variable(d.rank(), k1).times(NovikovMonomial::variable(d.rank(), k2));

  for (const auto& a : enumerate_admissible(w, chain, StepFilter::BruhatOnly)) {
    WeylElement end = checked_end(a.end(), J);
    out.add(end, one, char_of(d, factor, a.sign()));
    record(raw, end, one, factor, a.sign());
    if (sub_simple) {
      WeylElement v = min_coset_rep(apply_transposition(end, target, target + 1), J);
      out.add(v, qt, char_of(d, factor, -a.sign()));
      record(raw, v, qt, factor, -a.sign());
    }
    if (sub_long) {
      WeylElement lng = apply_transposition(end, k1, k2 + 1);
      WeylElement v = min_coset_rep(lng, J);
      out.add(v, qq, char_of(d, factor, -a.sign()));
      record(raw, v, qq, factor, -a.sign());
      if (full) {
        WeylElement v2 = min_coset_rep(apply_transposition(lng, target, target + 1), J);
        out.add(v2, qq, char_of(d, factor, a.sign()));
        record(raw, v2, qq, factor, a.sign());
      }
    }
  }
  return out;
}

AdmissiblePartition partition_twostep(const WeylElement& w, const LabeledChain& chain,
                                      int k1, int k2) {
  check_twostep_args(w, k1, k2, chain.star ? k2 : k1);
  if (chain.k != (chain.star ? k2 : k1))
    throw std::invalid_argument("chain does not match the removed indices");
  int simple = chain.star ? k2 : k1;
  PositiveRoot simple_rt = minus_root(simple, simple + 1);
  PositiveRoot long_rt = minus_root(k1, k2 + 1);
  AdmissiblePartition part;
  for (const auto& a : enumerate_admissible(w, chain)) {
    auto qs = a.quantum_indices();
    int s = a.card();
    if (qs.empty()) {
      part.a_less.push_back(a);
      continue;
    }
    const PositiveRoot& qroot = chain.entries[qs[0]].root;
    if (qs.size() == 1 && qs[0] == a.indices[s - 1] && qroot == simple_rt) {
      part.a1.push_back(a);
      continue;
    }
    if (qs.size() == 1 && qs[0] == a.indices[s - 1] && qroot == long_rt) {
      part.a2.push_back(a);
      continue;
    }
    if (qs.size() == 1 && s >= 2 && qs[0] == a.indices[s - 2] && qroot == long_rt &&
        chain.entries[a.indices[s - 1]].root == simple_rt) {
      part.a3.push_back(a);
      continue;
    }
    throw std::logic_error("unexpected quantum pattern for " + w.str());
  }
  return part;
}

std::optional<std::string> mixed_sign_group(const std::vector<RawTerm>& raw) {
  std::map<std::tuple<std::vector<int>, std::vector<int>, Weight>, int> seen;
  for (const auto& t : raw) {
    auto key = std::make_tuple(t.window, t.qexps, t.weight);
    auto [it, inserted] = seen.emplace(key, t.sign);
    if (!inserted && it->second != t.sign) {
      std::ostringstream out;
      out << "mixed signs at w=";
      for (size_t i = 0; i < t.window.size(); ++i) out << (i ? " " : "") << t.window[i];
      return out.str();
    }
  }
  return std::nullopt;
}

}  // namespace qkchev
