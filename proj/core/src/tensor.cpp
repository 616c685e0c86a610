#include "dqp/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace dqp {

void TensorElem::add(const Index& idx, const Rational& value) {
  if (value == 0) return;
  if (static_cast<int>(idx.size()) != order_) throw std::invalid_argument("tensor order mismatch");
  auto it = entries_.find(idx);
  if (it == entries_.end()) {
    entries_.emplace(idx, value);
  } else {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

void TensorElem::add_scaled(const TensorElem& other, const Rational& scale) {
  if (other.order_ != order_) throw std::invalid_argument("tensor order mismatch");
  if (scale == 0) return;
  for (const auto& [idx, c] : other.entries_) add(idx, c * scale);
}

TensorElem& TensorElem::operator+=(const TensorElem& other) {
  add_scaled(other, Rational(1));
  return *this;
}

TensorElem& TensorElem::operator*=(const Rational& s) {
  if (s == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [idx, c] : entries_) c *= s;
  return *this;
}

TensorElem TensorElem::operator-() const {
  TensorElem out(order_);
  for (const auto& [idx, c] : entries_) out.entries_.emplace(idx, -c);
  return out;
}

TensorElem TensorElem::outer(const std::vector<AlgElem>& factors) {
  TensorElem out(static_cast<int>(factors.size()));
  Index idx(factors.size(), 0);
  Rational coeff(1);
  // iterate the product of supports
  std::vector<std::size_t> pos(factors.size(), 0);
  for (const auto& f : factors)
    if (f.v.empty()) return out;
  while (true) {
    coeff = 1;
    for (std::size_t s = 0; s < factors.size(); ++s) {
      const auto& [k, c] = factors[s].v.entries()[pos[s]];
      idx[s] = k;
      coeff *= c;
    }
    out.add(idx, coeff);
    std::size_t s = factors.size();
    while (s > 0) {
      --s;
      if (++pos[s] < factors[s].v.entries().size()) break;
      pos[s] = 0;
      if (s == 0) return out;
    }
  }
}

TensorElem TensorElem::act_left(const Algebra& alg, const AlgElem& a) const {
  TensorElem out(order_);
  for (const auto& [idx, c] : entries_) {
    AlgElem prod = alg.mul(a, alg.basis(idx.front()));
    Index nidx = idx;
    for (const auto& [k, ck] : prod.v.entries()) {
      nidx.front() = k;
      out.add(nidx, c * ck);
    }
  }
  return out;
}

TensorElem TensorElem::act_right(const Algebra& alg, const AlgElem& b) const {
  TensorElem out(order_);
  for (const auto& [idx, c] : entries_) {
    AlgElem prod = alg.mul(alg.basis(idx.back()), b);
    Index nidx = idx;
    for (const auto& [k, ck] : prod.v.entries()) {
      nidx.back() = k;
      out.add(nidx, c * ck);
    }
  }
  return out;
}

TensorElem TensorElem::cycled() const {
  TensorElem out(order_);
  for (const auto& [idx, c] : entries_) {
    Index nidx(idx.size());
    nidx[0] = idx.back();
    for (std::size_t s = 1; s < idx.size(); ++s) nidx[s] = idx[s - 1];
    out.add(nidx, c);
  }
  return out;
}

TensorElem TensorElem::flipped() const {
  if (order_ != 2) throw std::invalid_argument("flip is defined for order-2 tensors");
  TensorElem out(2);
  for (const auto& [idx, c] : entries_) out.add({idx[1], idx[0]}, c);
  return out;
}

Rational TensorElem::apply(const Algebra&, const std::vector<DualElem>& fs) const {
  if (static_cast<int>(fs.size()) != order_) throw std::invalid_argument("functional tuple size");
  Rational total(0);
  for (const auto& [idx, c] : entries_) {
    Rational term = c;
    for (int s = 0; s < order_ && term != 0; ++s) term *= fs[s].v.coeff(idx[s]);
    total += term;
  }
  return total;
}

std::string TensorElem::format(const Algebra& alg) const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : entries_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rational_str(c) << "*";
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (s) os << "(x)";
      os << alg.basis_names()[idx[s]];
    }
  }
  return os.str();
}

}  // namespace dqp
