#include "dqp/ainfty.hpp"

#include <stdexcept>

namespace dqp {

AInftyStructure::AInftyStructure(const DoubleBracket& db, int max_n)
    : AInftyStructure(db, db.tau(), max_n) {}

AInftyStructure::AInftyStructure(const DoubleBracket& db, Rational tau_override, int max_n)
    : db_(&db), tau_(std::move(tau_override)), max_n_(max_n) {
  if (max_n_ < 4) max_n_ = 4;
  ccoeffs_ = CCoeffTable::build(tau_, max_n_);
}

PhiElem AInftyStructure::m3(const MixedSlot& x1, const MixedSlot& x2, const MixedSlot& x3) const {
  const Algebra& alg = algebra();
  PhiElem out;
  if (x1.parity == 0 && x2.parity == 1 && x3.parity == 0) {
    // m3(b, tg, a) = sum u g(v) over {{a,b}} = sum u (x) v
    TensorElem br = db_->eval(x3.as_alg(), x1.as_alg());
    const SparseVec& g = x2.value;
    for (const auto& [idx, c] : br.entries()) out.alg.v.add(idx[0], c * g.coeff(idx[1]));
  } else if (x1.parity == 1 && x2.parity == 0 && x3.parity == 1) {
    // m3(tf, b, tg): a -> (f (x) g)({{a, b}})
    for (int gamma = 0; gamma < alg.dim(); ++gamma) {
      TensorElem br = db_->eval(alg.basis(gamma), x2.as_alg());
      Rational val(0);
      for (const auto& [idx, c] : br.entries())
        val += c * x1.value.coeff(idx[0]) * x3.value.coeff(idx[1]);
      out.dual.v.add(gamma, val);
    }
  }
  return out;
}

Rational AInftyStructure::pair_mn(int n, std::span<const MixedSlot> word) const {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("pair_mn needs even n >= 4");
  if (static_cast<int>(word.size()) != n + 1) throw std::invalid_argument("word must have n+1 slots");
  if (n - 1 > max_n_) throw std::out_of_range("arity exceeds the precomputed coefficient bound");
  int duals = 0;
  for (const auto& s : word) duals += s.parity;
  if (duals != n - 1) return Rational(0);
  for (const auto& s : word)
    if (s.value.empty()) return Rational(0);
  CanonicalSplit split = canonicalize_cycle(CyclicWord(MixedTuple(word.begin(), word.end())));
  if (split.i == 0) return Rational(0);
  const Rational& cij = ccoeffs_.at(split.i, split.j);
  Rational total(0);
  for (const auto& [coeff, w] : script_m(algebra(), split, cij)) total += coeff * ev(algebra(), w);
  return total;
}

PhiElem AInftyStructure::mn(int n, std::span<const MixedSlot> args) const {
  const Algebra& alg = algebra();
  PhiElem out;
  int duals = 0;
  for (const auto& s : args) duals += s.parity;
  MixedTuple word(args.begin(), args.end());
  word.emplace_back();
  if (duals == n - 2) {
    // value in A: match the pairing against every dual basis functional
    for (int gamma = 0; gamma < alg.dim(); ++gamma) {
      word.back() = MixedSlot::dual(alg.dual_basis(gamma));
      out.alg.v.add(gamma, pair_mn(n, word));
    }
  } else if (duals == n - 1) {
    for (int gamma = 0; gamma < alg.dim(); ++gamma) {
      word.back() = MixedSlot::algebra(alg.basis(gamma));
      out.dual.v.add(gamma, pair_mn(n, word));
    }
  }
  return out;
}

PhiElem AInftyStructure::apply(int n, std::span<const MixedSlot> args) const {
  if (static_cast<int>(args.size()) != n) throw std::invalid_argument("arity mismatch");
  switch (n) {
    case 1:
      return {};
    case 2:
      return m2_phi(algebra(), args[0].as_phi(), args[1].as_phi());
    case 3:
      return m3(args[0], args[1], args[2]);
    default:
      return n % 2 == 0 ? mn(n, args) : PhiElem{};
  }
}

Rational AInftyStructure::pair_apply(int n, std::span<const MixedSlot> word) const {
  if (static_cast<int>(word.size()) != n + 1) throw std::invalid_argument("word must have n+1 slots");
  if (n >= 4 && n % 2 == 0) return pair_mn(n, word);  // avoids the dim reconstructions
  if (n != 2 && n != 3) return Rational(0);
  PhiElem val = apply(n, word.first(n));
  return natural_form(algebra(), val, word.back().as_phi());
}

TensorElem AInftyStructure::b_map(int n, int ell, const AlgElem& a, const AlgElem& b) const {
  if (n < 3 || ell < 0 || ell > n - 2) throw std::invalid_argument("b_map index out of range");
  const Algebra& alg = algebra();
  TensorElem out(n - 1);
  if (ell == 0) return out;                    // b_{(2,0,...,0)} = 0
  if (n % 2 == 1 && n != 3) return out;        // odd multiplications above 3 vanish
  if (n == 3) {
    out.add_scaled(db_->eval(a, b), Rational(-1));
    return out;
  }
  const AlgElem& one = alg.unit();
  const Rational& C =
      (ell == 1 || ell == n - 2) ? ccoeffs_.at(1, n - 2) : ccoeffs_.at(ell, n - ell - 1);
  auto ones = [&](int m) { return std::vector<AlgElem>(m, one); };
  auto add = [&](const std::vector<AlgElem>& factors, const Rational& c) {
    out.add_scaled(TensorElem::outer(factors), c);
  };
  std::vector<AlgElem> w;
  if (ell == 1) {
    // a(x)b(x)1^{n-3} - ba(x)1^{n-2} + b(x)1^{n-3}(x)a - 1(x)b(x)1^{n-4}(x)a
    w = {a, b};
    for (int m = 0; m < n - 3; ++m) w.push_back(one);
    add(w, C);
    w = {alg.mul(b, a)};
    for (int m = 0; m < n - 2; ++m) w.push_back(one);
    add(w, -C);
    w = {b};
    for (int m = 0; m < n - 3; ++m) w.push_back(one);
    w.push_back(a);
    add(w, C);
    w = {one, b};
    for (int m = 0; m < n - 4; ++m) w.push_back(one);
    w.push_back(a);
    add(w, -C);
  } else if (ell == n - 2) {
    // a(x)1^{n-3}(x)b - a(x)1^{n-4}(x)b(x)1 + 1^{n-3}(x)b(x)a - 1^{n-2}(x)ab
    w = {a};
    for (int m = 0; m < n - 3; ++m) w.push_back(one);
    w.push_back(b);
    add(w, C);
    w = {a};
    for (int m = 0; m < n - 4; ++m) w.push_back(one);
    w.push_back(b);
    w.push_back(one);
    add(w, -C);
    w = ones(n - 3);
    w.push_back(b);
    w.push_back(a);
    add(w, C);
    w = ones(n - 2);
    w.push_back(alg.mul(a, b));
    add(w, -C);
  } else {
    // a(x)1^{l-2}(x)(1(x)b - b(x)1)(x)1^{n-l-2} - 1^{l-1}(x)(1(x)b - b(x)1)(x)1^{n-l-3}(x)a
    auto middle = [&](std::vector<AlgElem> head, std::vector<AlgElem> tail, const Rational& c) {
      std::vector<AlgElem> w1 = head;
      w1.push_back(one);
      w1.push_back(b);
      w1.insert(w1.end(), tail.begin(), tail.end());
      add(w1, c);
      std::vector<AlgElem> w2 = head;
      w2.push_back(b);
      w2.push_back(one);
      w2.insert(w2.end(), tail.begin(), tail.end());
      add(w2, -c);
    };
    std::vector<AlgElem> head = {a};
    for (int m = 0; m < ell - 2; ++m) head.push_back(one);
    middle(head, ones(n - ell - 2), C);
    head = ones(ell - 1);
    std::vector<AlgElem> tail = ones(n - ell - 3);
    tail.push_back(a);
    middle(head, tail, -C);
  }
  return out;
}

namespace {
bool pattern_must_vanish_acceptable(const std::vector<int>& pat) {
  const int n = static_cast<int>(pat.size());
  for (int p = 0; p + 1 < n; ++p)
    if (pat[p] == 0 && pat[p + 1] == 0) return true;
  int total = 0;
  for (int v : pat) total += v;
  if (total == n - 1 && pat.front() * pat.back() == 0) return true;
  return false;
}

bool alternating(const std::vector<int>& pat) {
  for (std::size_t p = 0; p + 1 < pat.size(); ++p)
    if (pat[p] == pat[p + 1]) return false;
  return true;
}

template <typename Fn>
void for_each_basis_filling(const Algebra& alg, const std::vector<int>& pat, Fn&& fn) {
  const int n = static_cast<int>(pat.size());
  std::vector<int> idx(n, 0);
  while (true) {
    MixedTuple tup;
    tup.reserve(n);
    for (int p = 0; p < n; ++p)
      tup.push_back(pat[p] == 0 ? MixedSlot::algebra(alg.basis(idx[p]))
                                : MixedSlot::dual(alg.dual_basis(idx[p])));
    fn(tup);
    int p = n;
    while (p > 0) {
      --p;
      if (++idx[p] < alg.dim()) break;
      idx[p] = 0;
      if (p == 0) return;
    }
  }
}

std::string describe(const Algebra& alg, const MixedTuple& tup) {
  std::string s = "(";
  for (std::size_t p = 0; p < tup.size(); ++p) {
    if (p) s += ", ";
    s += tup[p].parity == 0 ? alg.format(tup[p].as_alg()) : alg.format(tup[p].as_dual());
  }
  return s + ")";
}
}  // namespace

SupportReport AInftyStructure::check_acceptable(int n) const {
  SupportReport report{"m" + std::to_string(n), {}, 0};
  if (n < 1) throw std::invalid_argument("arity must be positive");
  const Algebra& alg = algebra();
  if (n == 1) return report;  // void condition
  if (n == 2) {
    // parity closure of the graded product
    std::vector<int> pat(2);
    for (pat[0] = 0; pat[0] < 2; ++pat[0])
      for (pat[1] = 0; pat[1] < 2; ++pat[1])
        for_each_basis_filling(alg, pat, [&](const MixedTuple& tup) {
          ++report.checked;
          PhiElem val = apply(2, tup);
          const int degree = pat[0] + pat[1];
          bool bad = (degree == 0 && !val.dual.v.empty()) ||
                     (degree == 1 && !val.alg.v.empty()) || (degree == 2 && !val.zero());
          if (bad)
            report.violations.push_back("m2" + describe(alg, tup) + " leaves degree " +
                                        std::to_string(degree));
        });
    return report;
  }
  std::vector<int> pat(n, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    for (int p = 0; p < n; ++p) pat[p] = (mask >> p) & 1;
    if (!pattern_must_vanish_acceptable(pat)) continue;
    for_each_basis_filling(alg, pat, [&](const MixedTuple& tup) {
      ++report.checked;
      if (!apply(n, tup).zero())
        report.violations.push_back(report.map_name + describe(alg, tup) + " != 0");
    });
  }
  return report;
}

SupportReport AInftyStructure::check_good(int n) const {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("good maps have odd arity >= 3");
  SupportReport report{"m" + std::to_string(n), {}, 0};
  const Algebra& alg = algebra();
  std::vector<int> pat(n, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    for (int p = 0; p < n; ++p) pat[p] = (mask >> p) & 1;
    const bool alt = alternating(pat);
    for_each_basis_filling(alg, pat, [&](const MixedTuple& tup) {
      ++report.checked;
      PhiElem val = apply(n, tup);
      if (!alt) {
        if (!val.zero())
          report.violations.push_back(report.map_name + describe(alg, tup) +
                                      " nonzero off the alternating patterns");
      } else {
        const bool bad = pat[0] == 0 ? !val.dual.v.empty() : !val.alg.v.empty();
        if (bad)
          report.violations.push_back(report.map_name + describe(alg, tup) +
                                      " leaves the first slot's component");
      }
    });
  }
  return report;
}

}  // namespace dqp
