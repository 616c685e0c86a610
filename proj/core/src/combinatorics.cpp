#include "dqp/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace dqp {

Rational binomial(long x, long d) {
  if (d < 0) return Rational(0);
  Integer num(1);
  for (long i = 0; i < d; ++i) num *= Integer(x - i);
  Rational out(num);
  out /= Rational(factorial(static_cast<unsigned long>(d)));
  out.canonicalize();
  return out;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace {
std::mutex bern_mutex;
std::vector<Rational>& bern_table() {
  static std::vector<Rational> table{Rational(1)};
  return table;
}

void extend_bernoulli_locked(std::size_t n) {
  auto& table = bern_table();
  // sum_{j=0}^{m} C(m+1,j) B_j = 0  =>  B_m = -(1/(m+1)) sum_{j<m} C(m+1,j) B_j
  for (std::size_t m = table.size(); m <= n; ++m) {
    Rational s(0);
    for (std::size_t j = 0; j < m; ++j) {
      Rational term = binomial(static_cast<long>(m) + 1, static_cast<long>(j));
      term *= table[j];
      s += term;
    }
    s /= binomial(static_cast<long>(m) + 1, static_cast<long>(m));
    s = -s;
    s.canonicalize();
    table.push_back(s);
  }
}
}  // namespace

const Rational& bernoulli(std::size_t n) {
  std::lock_guard<std::mutex> lock(bern_mutex);
  extend_bernoulli_locked(n);
  return bern_table()[n];
}

void warm_bernoulli(std::size_t bound) {
  std::lock_guard<std::mutex> lock(bern_mutex);
  extend_bernoulli_locked(bound);
}

Rational c_coeff(long i, long j, const Rational& tau) {
  if (i < 1 || j < 1 || (i + j) % 2 == 0)
    throw std::invalid_argument("c_coeff requires i, j >= 1 with i + j odd");
  const long ell = i + j - 1;  // even, >= 2
  Rational out = binomial(i + j - 2, i - 1);
  out *= bernoulli(static_cast<std::size_t>(ell));
  out /= Rational(factorial(static_cast<unsigned long>(ell)));
  if ((1 + ell / 2) % 2 != 0) out = -out;
  out *= pow_rational(tau, static_cast<unsigned long>(ell / 2));
  out.canonicalize();
  return out;
}

CCoeffTable CCoeffTable::build(const Rational& tau, long bound) {
  CCoeffTable t;
  t.tau_ = tau;
  t.bound_ = bound;
  warm_bernoulli(static_cast<std::size_t>(bound > 0 ? bound : 1));
  for (long i = 1; i < bound; ++i)
    for (long j = 1; i + j <= bound; ++j)
      if ((i + j) % 2 == 1) t.entries_[{i, j}] = c_coeff(i, j, tau);
  return t;
}

const Rational& CCoeffTable::at(long i, long j) const {
  auto it = entries_.find({i, j});
  if (it == entries_.end())
    throw std::out_of_range("C coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside precomputed bound " + std::to_string(bound_));
  return it->second;
}

void CCoeffTable::corrupt(long i, long j, const Rational& delta) {
  entries_.at({i, j}) += delta;
}

}  // namespace dqp
