#include "dqp/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace dqp {

Algebra::Algebra(int dim, std::vector<std::string> basis_names, std::vector<SparseVec> table,
                 SparseVec unit)
    : dim_(dim), names_(std::move(basis_names)), table_(std::move(table)), unit_{std::move(unit)} {
  if (dim_ <= 0) throw std::invalid_argument("algebra dimension must be positive");
  if (names_.empty()) {
    names_.reserve(dim_);
    for (int i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != dim_)
    throw std::invalid_argument("basis name count does not match dimension");
  if (static_cast<int>(table_.size()) != dim_ * dim_)
    throw std::invalid_argument("structure constant table must have dim^2 rows");
}

Algebra Algebra::truncated_polynomial(int order) {
  std::vector<std::string> names;
  for (int i = 0; i < order; ++i)
    names.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
  std::vector<SparseVec> table(order * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      if (i + j < order) table[i * order + j] = SparseVec::basis(i + j);
  return Algebra(order, std::move(names), std::move(table), SparseVec::basis(0));
}

AlgElem Algebra::mul(const AlgElem& a, const AlgElem& b) const {
  AlgElem out;
  for (const auto& [i, ca] : a.v.entries())
    for (const auto& [j, cb] : b.v.entries())
      out.v.add_scaled(product_of_basis(i, j), ca * cb);
  return out;
}

Rational Algebra::eval(const DualElem& f, const AlgElem& a) const {
  Rational s(0);
  for (const auto& [i, c] : a.v.entries()) s += f.v.coeff(i) * c;
  return s;
}

DualElem Algebra::act_left(const AlgElem& a, const DualElem& f) const {
  DualElem out;
  for (int g = 0; g < dim_; ++g) {
    Rational val = eval(f, mul(basis(g), a));
    out.v.add(g, val);
  }
  return out;
}

DualElem Algebra::act_right(const DualElem& f, const AlgElem& b) const {
  DualElem out;
  for (int g = 0; g < dim_; ++g) {
    Rational val = eval(f, mul(b, basis(g)));
    out.v.add(g, val);
  }
  return out;
}

DualElem Algebra::dual_action(const AlgElem& a, const DualElem& f, const AlgElem& b) const {
  return act_left(a, act_right(f, b));
}

ValidationReport Algebra::validate() const {
  ValidationReport report;
  for (int i = 0; i < dim_; ++i) {
    AlgElem ei = basis(i);
    report.checked += 2;
    if (!(mul({unit_.v}, ei) == ei))
      report.defects.push_back({AlgebraDefect::Kind::LeftUnit, i, -1, -1,
                                "1*" + names_[i] + " != " + names_[i]});
    if (!(mul(ei, {unit_.v}) == ei))
      report.defects.push_back({AlgebraDefect::Kind::RightUnit, i, -1, -1,
                                names_[i] + "*1 != " + names_[i]});
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        ++report.checked;
        AlgElem lhs = mul(mul(basis(i), basis(j)), basis(k));
        AlgElem rhs = mul(basis(i), mul(basis(j), basis(k)));
        if (!(lhs == rhs))
          report.defects.push_back({AlgebraDefect::Kind::Associativity, i, j, k,
                                    "(" + names_[i] + "*" + names_[j] + ")*" + names_[k] +
                                        " != " + names_[i] + "*(" + names_[j] + "*" + names_[k] +
                                        ")"});
      }
  return report;
}

namespace {
std::string format_combo(const std::vector<std::string>& names, const SparseVec& v,
                         const char* suffix) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.entries()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rational_str(c) << "*";
    os << names[i] << suffix;
  }
  return os.str();
}
}  // namespace

std::string Algebra::format(const AlgElem& a) const { return format_combo(names_, a.v, ""); }
std::string Algebra::format(const DualElem& f) const { return format_combo(names_, f.v, "*"); }
std::string Algebra::format(const PhiElem& x) const {
  if (x.zero()) return "0";
  if (x.dual.v.empty()) return format(x.alg);
  if (x.alg.v.empty()) return format(x.dual);
  return format(x.alg) + " + " + format(x.dual);
}

PhiElem m2_phi(const Algebra& alg, const PhiElem& x, const PhiElem& y) {
  PhiElem out;
  out.alg = alg.mul(x.alg, y.alg);
  out.dual.v = alg.act_right(x.dual, y.alg).v;
  out.dual.v += alg.act_left(x.alg, y.dual).v;
  return out;
}

Rational natural_form(const Algebra& alg, const PhiElem& x, const PhiElem& y) {
  return alg.eval(x.dual, y.alg) + alg.eval(y.dual, x.alg);
}

}  // namespace dqp
