#include "dqp/double_bracket.hpp"

#include <stdexcept>

namespace dqp {

DoubleBracket::DoubleBracket(const Algebra& alg, std::vector<TensorElem> table, Rational tau)
    : alg_(alg), table_(std::move(table)), tau_(std::move(tau)) {
  if (static_cast<int>(table_.size()) != alg.dim() * alg.dim())
    throw std::invalid_argument("bracket table must have dim^2 entries");
  for (const auto& t : table_)
    if (t.order() != 2) throw std::invalid_argument("bracket values must be order-2 tensors");
}

DoubleBracket DoubleBracket::zero(const Algebra& alg, Rational tau) {
  std::vector<TensorElem> table(alg.dim() * alg.dim(), TensorElem(2));
  return DoubleBracket(alg, std::move(table), std::move(tau));
}

DoubleBracket DoubleBracket::with_tau(Rational tau) const {
  return DoubleBracket(alg_, table_, std::move(tau));
}

TensorElem DoubleBracket::eval(const AlgElem& a, const AlgElem& b) const {
  TensorElem out(2);
  for (const auto& [i, ca] : a.v.entries())
    for (const auto& [j, cb] : b.v.entries()) out.add_scaled(table(i, j), ca * cb);
  return out;
}

BracketReport DoubleBracket::check_db1() const {
  BracketReport report;
  const int d = alg_.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ++report.checked;
      TensorElem rhs = -table(j, i).flipped();
      if (!(table(i, j) == rhs))
        report.defects.push_back({"db1", {i, j}, table(i, j).format(alg_), rhs.format(alg_)});
    }
  return report;
}

BracketReport DoubleBracket::check_db2() const {
  BracketReport report;
  const int d = alg_.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        ++report.checked;
        TensorElem lhs = eval(alg_.basis(i), alg_.mul(alg_.basis(j), alg_.basis(k)));
        TensorElem rhs = table(i, k).act_left(alg_, alg_.basis(j));
        rhs += table(i, j).act_right(alg_, alg_.basis(k));
        if (!(lhs == rhs))
          report.defects.push_back({"db2", {i, j, k}, lhs.format(alg_), rhs.format(alg_)});
      }
  return report;
}

TensorElem bracket_left_extension(const DoubleBracket& db, const AlgElem& x, const TensorElem& T) {
  TensorElem out(T.order() + 1);
  const Algebra& alg = db.algebra();
  for (const auto& [idx, c] : T.entries()) {
    TensorElem br = db.eval(x, alg.basis(idx.front()));
    for (const auto& [bidx, bc] : br.entries()) {
      TensorElem::Index nidx;
      nidx.reserve(idx.size() + 1);
      nidx.push_back(bidx[0]);
      nidx.push_back(bidx[1]);
      nidx.insert(nidx.end(), idx.begin() + 1, idx.end());
      out.add(nidx, c * bc);
    }
  }
  return out;
}

TensorElem DoubleBracket::triple_bracket(const AlgElem& c, const AlgElem& b,
                                         const AlgElem& a) const {
  TensorElem out = bracket_left_extension(*this, c, eval(b, a));
  out += bracket_left_extension(*this, b, eval(a, c)).cycled();
  out += bracket_left_extension(*this, a, eval(c, b)).cycled().cycled();
  return out;
}

BracketReport DoubleBracket::is_double_poisson() const {
  BracketReport report;
  const int d = alg_.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        ++report.checked;
        TensorElem tb = triple_bracket(alg_.basis(i), alg_.basis(j), alg_.basis(k));
        if (!tb.zero()) {
          report.defects.push_back({"jacobi", {i, j, k}, tb.format(alg_), "0"});
          return report;
        }
      }
  return report;
}

BracketReport DoubleBracket::is_quasi_poisson() const {
  BracketReport report;
  const int d = alg_.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        ++report.checked;
        AlgElem c = alg_.basis(i), b = alg_.basis(j), a = alg_.basis(k);
        TensorElem lhs = triple_bracket(c, b, a);
        TensorElem rhs = e3_closed_form(alg_, c, b, a);
        rhs *= tau_;
        if (!(lhs == rhs)) {
          report.defects.push_back({"quasi", {i, j, k}, lhs.format(alg_), rhs.format(alg_)});
          return report;
        }
      }
  return report;
}

TensorElem e_derivation(const Algebra& alg, const AlgElem& a) {
  TensorElem out = TensorElem::outer({a, alg.unit()});
  out.add_scaled(TensorElem::outer({alg.unit(), a}), Rational(-1));
  return out;
}

namespace {
// tilde{a1,a2,a3}_{E^3} = E'_3(a3)E''_1(a1) (x) E'_1(a1)E''_2(a2) (x) E'_2(a2)E''_3(a3),
// with E(x) = x (x) 1 - 1 (x) x expanded as two Sweedler terms per slot.
TensorElem tilde_e3(const Algebra& alg, const AlgElem& a1, const AlgElem& a2, const AlgElem& a3) {
  TensorElem out(3);
  const AlgElem& one = alg.unit();
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2)
      for (int s3 = 0; s3 < 2; ++s3) {
        const AlgElem& e1p = (s1 == 0) ? a1 : one;
        const AlgElem& e1pp = (s1 == 0) ? one : a1;
        const AlgElem& e2p = (s2 == 0) ? a2 : one;
        const AlgElem& e2pp = (s2 == 0) ? one : a2;
        const AlgElem& e3p = (s3 == 0) ? a3 : one;
        const AlgElem& e3pp = (s3 == 0) ? one : a3;
        TensorElem term = TensorElem::outer(
            {alg.mul(e3p, e1pp), alg.mul(e1p, e2pp), alg.mul(e2p, e3pp)});
        out.add_scaled(term, Rational((s1 + s2 + s3) % 2 == 0 ? 1 : -1));
      }
  return out;
}
}  // namespace

TensorElem mu_e3_bracket(const Algebra& alg, const AlgElem& c, const AlgElem& b,
                         const AlgElem& a) {
  // sum_i sigma^i o tilde o sigma^{-i}; the cyclic signs (-1)^{(n-1)i} are +1 at n = 3
  TensorElem out = tilde_e3(alg, c, b, a);
  out += tilde_e3(alg, b, a, c).cycled();
  out += tilde_e3(alg, a, c, b).cycled().cycled();
  return out;
}

TensorElem e3_closed_form(const Algebra& alg, const AlgElem& c, const AlgElem& b,
                          const AlgElem& a) {
  const AlgElem& one = alg.unit();
  const Rational q(1, 4);
  TensorElem out(3);
  out.add_scaled(TensorElem::outer({alg.mul(a, c), b, one}), q);
  out.add_scaled(TensorElem::outer({alg.mul(a, c), one, b}), -q);
  out.add_scaled(TensorElem::outer({a, alg.mul(c, b), one}), -q);
  out.add_scaled(TensorElem::outer({a, c, b}), q);
  out.add_scaled(TensorElem::outer({c, one, alg.mul(b, a)}), q);
  out.add_scaled(TensorElem::outer({c, b, a}), -q);
  out.add_scaled(TensorElem::outer({one, alg.mul(c, b), a}), q);
  out.add_scaled(TensorElem::outer({one, c, alg.mul(b, a)}), -q);
  return out;
}

DoubleBracket DoubleBracket::leibniz_extend(const Algebra& alg,
                                            const std::vector<std::vector<int>>& words,
                                            const std::map<std::pair<int, int>, TensorElem>& gens,
                                            Rational tau) {
  if (static_cast<int>(words.size()) != alg.dim())
    throw std::invalid_argument("need one generator word per basis element");
  const int d = alg.dim();
  // brackets {{e_g, e_i}} for generators g, extending over each word by the
  // Leibniz identity {{x, uv}} = u {{x, v}} + {{x, u}} v
  auto gen_of = [&](int g, int i) -> TensorElem {
    auto it = gens.find({g, i});
    return it != gens.end() ? it->second : TensorElem(2);
  };
  std::vector<std::vector<TensorElem>> row(d, std::vector<TensorElem>(d, TensorElem(2)));
  for (const auto& [key, val] : gens) {
    (void)key;
    if (val.order() != 2) throw std::invalid_argument("generator bracket must be order 2");
  }
  std::vector<int> gen_set;
  for (const auto& [key, val] : gens) {
    gen_set.push_back(key.first);
    gen_set.push_back(key.second);
  }
  // first row over generators: {{e_g, e_j}} by Leibniz along words[j]
  for (int g = 0; g < d; ++g) {
    bool is_gen = false;
    for (int s : gen_set)
      if (s == g) is_gen = true;
    if (!is_gen) continue;
    for (int j = 0; j < d; ++j) {
      TensorElem acc(2);
      AlgElem prefix = alg.unit();
      const auto& word = words[j];
      // {{g, w_1 w_2 ... w_m}} = sum_k (w_1..w_{k-1}) {{g, w_k}} (w_{k+1}..w_m)
      for (std::size_t k = 0; k < word.size(); ++k) {
        AlgElem suffix = alg.unit();
        for (std::size_t m = k + 1; m < word.size(); ++m)
          suffix = alg.mul(suffix, alg.basis(word[m]));
        TensorElem term = gen_of(g, word[k]).act_left(alg, prefix).act_right(alg, suffix);
        acc += term;
        prefix = alg.mul(prefix, alg.basis(word[k]));
      }
      row[g][j] = acc;
    }
  }
  // full table: {{e_i, e_j}} by Leibniz in the FIRST argument through skew
  // symmetry: {{uv, y}} = -flip {{y, uv}} and {{y, uv}} Leibniz over words[i].
  std::vector<TensorElem> table(d * d, TensorElem(2));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const auto& word = words[i];
      TensorElem acc(2);
      AlgElem prefix = alg.unit();
      for (std::size_t k = 0; k < word.size(); ++k) {
        AlgElem suffix = alg.unit();
        for (std::size_t m = k + 1; m < word.size(); ++m)
          suffix = alg.mul(suffix, alg.basis(word[m]));
        // {{e_j, word}} expanded, then negated flip gives {{word, e_j}}
        TensorElem term = row[word[k]][j];  // {{e_{w_k}, e_j}}
        term = -term.flipped();             // {{e_j, e_{w_k}}}
        term = term.act_left(alg, prefix).act_right(alg, suffix);
        acc += term;
        prefix = alg.mul(prefix, alg.basis(word[k]));
      }
      table[i * d + j] = -acc.flipped();
    }
  }
  return DoubleBracket(alg, std::move(table), std::move(tau));
}

}  // namespace dqp
