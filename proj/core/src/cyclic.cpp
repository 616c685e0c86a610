#include "dqp/cyclic.hpp"

#include <stdexcept>

namespace dqp {

CyclicWord CyclicWord::rotated(int offset) const {
  const int n = static_cast<int>(entries_.size());
  if (n == 0) return *this;
  offset = ((offset % n) + n) % n;
  MixedTuple out;
  out.reserve(entries_.size());
  for (int p = 0; p < n; ++p) out.push_back(entries_[(p + offset) % n]);
  return CyclicWord(std::move(out));
}

bool CyclicWord::cyclic_equal(const CyclicWord& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  const int n = static_cast<int>(entries_.size());
  for (int r = 0; r < n; ++r)
    if (rotated(r).entries() == other.entries()) return true;
  return n == 0;
}

CyclicWord CanonicalSplit::reassemble() const {
  MixedTuple out;
  for (const auto& f : f_block) out.push_back(MixedSlot::dual(f));
  out.push_back(MixedSlot::algebra(a));
  for (const auto& g : g_block) out.push_back(MixedSlot::dual(g));
  out.push_back(MixedSlot::algebra(b));
  return CyclicWord(std::move(out)).rotated(-rotation);
}

CanonicalSplit canonicalize_cycle(const CyclicWord& word) {
  const auto& entries = word.entries();
  const int n = static_cast<int>(entries.size());
  int zeros = 0;
  for (const auto& s : entries) zeros += (s.parity == 0);
  const int k = n - zeros;
  if (zeros != 2 || k % 2 == 0 || k < 1)
    throw std::invalid_argument("canonical split needs two algebra entries and oddly many duals");

  for (int r = 0; r < n; ++r) {
    CyclicWord rot = word.rotated(r);
    const auto& e = rot.entries();
    int first_a = -1, second_a = -1;
    for (int p = 0; p < n; ++p)
      if (e[p].parity == 0) {
        if (first_a < 0)
          first_a = p;
        else
          second_a = p;
      }
    const int i = first_a;
    const int j = second_a - first_a - 1;
    if (second_a != n - 1 || j < i) continue;  // normal form ends in b with j >= i
    CanonicalSplit split;
    split.i = i;
    split.j = j;
    split.rotation = r;
    for (int p = 0; p < i; ++p) split.f_block.push_back(e[p].as_dual());
    split.a = e[i].as_alg();
    for (int p = i + 1; p < second_a; ++p) split.g_block.push_back(e[p].as_dual());
    split.b = e[second_a].as_alg();
    return split;
  }
  throw std::logic_error("no normal-form rotation found");  // unreachable for valid input
}

namespace {
CyclicWord from_duals(const std::vector<DualElem>& fs) {
  MixedTuple out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(MixedSlot::dual(f));
  return CyclicWord(std::move(out));
}
}  // namespace

FormalWordSum script_m(const Algebra& alg, const CanonicalSplit& split, const Rational& c_ij) {
  const int i = split.i;
  if (i == 0) return {};
  const auto& fs = split.f_block;
  const auto& gs = split.g_block;
  const AlgElem& a = split.a;
  const AlgElem& b = split.b;
  FormalWordSum out;
  auto push = [&](const Rational& c, std::vector<DualElem> w) {
    out.push_back({c, from_duals(std::move(w))});
  };
  std::vector<DualElem> w;
  if (i == 1) {
    // <f1.a, g1..g_{j-1}, gj.b> + <b.f1, a.g1, g2..gj>
    // - <f1, a.g1, g2..g_{j-1}, gj.b> - <b.f1.a, g1..gj>
    w = {alg.act_right(fs[0], a)};
    w.insert(w.end(), gs.begin(), gs.end() - 1);
    w.push_back(alg.act_right(gs.back(), b));
    push(c_ij, w);

    w = {alg.act_left(b, fs[0]), alg.act_left(a, gs.front())};
    w.insert(w.end(), gs.begin() + 1, gs.end());
    push(c_ij, w);

    w = {fs[0], alg.act_left(a, gs.front())};
    w.insert(w.end(), gs.begin() + 1, gs.end() - 1);
    w.push_back(alg.act_right(gs.back(), b));
    push(-c_ij, w);

    w = {alg.dual_action(b, fs[0], a)};
    w.insert(w.end(), gs.begin(), gs.end());
    push(-c_ij, w);
  } else {
    // <f1..f_{i-1}, fi.a, g1..g_{j-1}, gj.b> + <b.f1, f2..fi, a.g1, g2..gj>
    // - <f1..fi, a.g1, g2..g_{j-1}, gj.b> - <b.f1, f2..f_{i-1}, fi.a, g1..gj>
    w.assign(fs.begin(), fs.end() - 1);
    w.push_back(alg.act_right(fs.back(), a));
    w.insert(w.end(), gs.begin(), gs.end() - 1);
    w.push_back(alg.act_right(gs.back(), b));
    push(c_ij, w);

    w = {alg.act_left(b, fs.front())};
    w.insert(w.end(), fs.begin() + 1, fs.end());
    w.push_back(alg.act_left(a, gs.front()));
    w.insert(w.end(), gs.begin() + 1, gs.end());
    push(c_ij, w);

    w.assign(fs.begin(), fs.end());
    w.push_back(alg.act_left(a, gs.front()));
    w.insert(w.end(), gs.begin() + 1, gs.end() - 1);
    w.push_back(alg.act_right(gs.back(), b));
    push(-c_ij, w);

    w = {alg.act_left(b, fs.front())};
    w.insert(w.end(), fs.begin() + 1, fs.end() - 1);
    w.push_back(alg.act_right(fs.back(), a));
    w.insert(w.end(), gs.begin(), gs.end());
    push(-c_ij, w);
  }
  return out;
}

Rational ev(const Algebra& alg, const CyclicWord& word) {
  Rational out(1);
  for (const auto& s : word.entries()) {
    if (s.parity != 1) throw std::invalid_argument("ev is defined on all-dual words");
    out *= alg.eval_at_unit({s.value});
    if (out == 0) return out;
  }
  return out;
}

}  // namespace dqp
