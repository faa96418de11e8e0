#include "qkchev/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qkchev {

WeightLaurent WeightLaurent::unit(const GroupDescriptor& d) {
  return monomial(d, Weight(d.n, 0));
}

WeightLaurent WeightLaurent::monomial(const GroupDescriptor& d, Weight mu, BigInt c) {
  WeightLaurent out;
  out.add_term(canonical_weight(d, std::move(mu)), c);
  return out;
}

void WeightLaurent::add_term(Weight mu, const BigInt& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    terms_.emplace(std::move(mu), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeightLaurent WeightLaurent::operator-() const {
  WeightLaurent out;
  for (const auto& [mu, c] : terms_) out.terms_.emplace(mu, -c);
  return out;
}

WeightLaurent operator+(const WeightLaurent& a, const WeightLaurent& b) {
  WeightLaurent out = a;
  for (const auto& [mu, c] : b.terms_) out.add_term(mu, c);
  return out;
}

WeightLaurent operator*(const WeightLaurent& a, const WeightLaurent& b) {
  WeightLaurent out;
  for (const auto& [mu, c] : a.terms_)
    for (const auto& [nu, e] : b.terms_) {
      Weight sum = mu;
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += nu[i];
      out.add_term(std::move(sum), c * e);
    }
  return out;
}

std::string WeightLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    BigInt abs = c.sign() < 0 ? -c : c;
    if (first)
      out << (c.sign() < 0 ? "-" : "");
    else
      out << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (!(abs == BigInt(1))) out << abs.str() << " ";
    out << "e(";
    for (size_t i = 0; i < mu.size(); ++i) out << (i ? "," : "") << mu[i];
    out << ")";
  }
  return out.str();
}

NovikovMonomial::NovikovMonomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative Novikov exponent");
}

NovikovMonomial NovikovMonomial::from_coroot(const CorootVector& xi) {
  return NovikovMonomial(std::vector<int>(xi.begin(), xi.end()));
}

NovikovMonomial NovikovMonomial::variable(int rank, int i) {
  NovikovMonomial q(rank);
  q.exps_[i - 1] = 1;
  return q;
}

bool NovikovMonomial::trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

NovikovMonomial NovikovMonomial::times(const NovikovMonomial& o) const {
  NovikovMonomial out = *this;
  for (size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] += o.exps_[i];
  return out;
}

NovikovMonomial NovikovMonomial::restricted(const std::vector<int>& kept) const {
  NovikovMonomial out(static_cast<int>(exps_.size()));
  for (int i : kept) out.exps_[i - 1] = exps_[i - 1];
  return out;
}

std::string NovikovMonomial::str() const {
  std::string s;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "Q" + std::to_string(i + 1);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

SchubertCombo SchubertCombo::basis_class(const GroupDescriptor& d,
                                         const ParabolicSubset& J,
                                         const WeylElement& w) {
  SchubertCombo out(d, J);
  out.add(w, NovikovMonomial(d.rank()), WeightLaurent::unit(d));
  return out;
}

void SchubertCombo::add(const WeylElement& w, const NovikovMonomial& q,
                        const WeightLaurent& c) {
  if (c.is_zero()) return;
  if (!J_.indices.empty() && !is_min_coset_rep(w, J_))
    throw std::invalid_argument("element " + w.str() + " is not minimal in its coset");
  Key key{w.window(), q.exps()};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SchubertCombo operator+(const SchubertCombo& a, const SchubertCombo& b) {
  if (!(a.d_ == b.d_) || !(a.J_ == b.J_))
    throw std::invalid_argument("combo_add: mismatched spaces");
  SchubertCombo out = a;
  for (const auto& [key, c] : b.terms_) {
    auto it = out.terms_.find(key);
    if (it == out.terms_.end()) {
      out.terms_.emplace(key, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) out.terms_.erase(it);
  }
  return out;
}

SchubertCombo SchubertCombo::operator-() const {
  SchubertCombo out(d_, J_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

SchubertCombo SchubertCombo::scaled(const WeightLaurent& c,
                                    const NovikovMonomial& q) const {
  SchubertCombo out(d_, J_);
  for (const auto& [key, coeff] : terms_) {
    WeightLaurent prod = coeff * c;
    if (prod.is_zero()) continue;
    Key shifted{key.window, NovikovMonomial(key.qexps).times(q).exps()};
    out.terms_.emplace(std::move(shifted), std::move(prod));
  }
  return out;
}

bool operator==(const SchubertCombo& a, const SchubertCombo& b) {
  return a.d_ == b.d_ && a.J_ == b.J_ && a.terms_ == b.terms_;
}

SchubertCombo project_phiJ(const SchubertCombo& a, const ParabolicSubset& J) {
  if (!a.parabolic().indices.empty())
    throw std::invalid_argument("project_phiJ expects a full flag combo");
  const GroupDescriptor& d = a.group();
  std::vector<int> kept = J.removed(d);
  SchubertCombo out(d, J);
  for (const auto& [key, c] : a.terms()) {
    WeylElement w(d, key.window);
    out.add(min_coset_rep(w, J), NovikovMonomial(key.qexps).restricted(kept), c);
  }
  return out;
}

std::string SchubertCombo::pretty() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [key, c] : terms_) {
    NovikovMonomial q(key.qexps);
    out << "O[";
    for (size_t i = 0; i < key.window.size(); ++i)
      out << (i ? " " : "") << key.window[i];
    out << "]";
    if (!q.trivial()) out << " " << q.str();
    out << " : " << c.str() << "\n";
  }
  return out.str();
}

std::string SchubertCombo::to_json() const {
  std::ostringstream out;
  auto intlist = [&out](const std::vector<int>& v) {
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "]";
  };
  out << "{\"J\": ";
  intlist(J_.indices);
  out << ", \"terms\": [";
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << ",";
    first = false;
    out << "\n  {\"w\": ";
    intlist(key.window);
    out << ", \"q\": {";
    bool firstq = true;
    for (size_t i = 0; i < key.qexps.size(); ++i) {
      if (key.qexps[i] == 0) continue;
      if (!firstq) out << ", ";
      firstq = false;
      out << "\"" << (i + 1) << "\": " << key.qexps[i];
    }
    out << "}, \"coeff\": [";
    bool firstc = true;
    for (const auto& [mu, coef] : c.terms()) {
      if (!firstc) out << ", ";
      firstc = false;
      out << "{\"weight\": ";
      intlist(mu);
      out << ", \"c\": " << coef.str() << "}";
    }
    out << "]}";
  }
  out << "\n]}\n";
  return out.str();
}

SchubertCombo combo_from_json(const GroupDescriptor& d, const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  ParabolicSubset J;
  J.indices = doc.at("J").get<std::vector<int>>();
  SchubertCombo out(d, J);
  for (const auto& term : doc.at("terms")) {
    WeylElement w(d, term.at("w").get<std::vector<int>>());
    NovikovMonomial q(d.rank());
    std::vector<int> exps(d.rank(), 0);
    for (const auto& [idx, e] : term.at("q").items())
      exps[std::stoi(idx) - 1] = e.get<int>();
    WeightLaurent c;
    for (const auto& mono : term.at("coeff"))
      c.add_term(mono.at("weight").get<std::vector<int>>(),
                 BigInt(mono.at("c").get<long long>()));
    out.add(w, NovikovMonomial(exps), c);
  }
  return out;
}

std::string SchubertCombo::to_tsv() const {
  std::ostringstream out;
  out << "w\tq\tweight\tc\n";
  for (const auto& [key, c] : terms_) {
    std::string wstr, qstr;
    for (size_t i = 0; i < key.window.size(); ++i)
      wstr += (i ? " " : "") + std::to_string(key.window[i]);
    qstr = NovikovMonomial(key.qexps).str();
    for (const auto& [mu, coef] : c.terms()) {
      std::string mstr;
      for (size_t i = 0; i < mu.size(); ++i)
        mstr += (i ? " " : "") + std::to_string(mu[i]);
      out << wstr << '\t' << qstr << '\t' << mstr << '\t' << coef.str() << '\n';
    }
  }
  return out.str();
}

}  // namespace qkchev
