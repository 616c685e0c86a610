#include "dqp/bundled.hpp"

#include <stdexcept>

namespace dqp {

namespace {
AlgebraInput from_generator_bracket(int order, TensorElem gen, Rational tau, std::string name,
                                    std::vector<std::string> certified) {
  Algebra alg = Algebra::truncated_polynomial(order);
  // basis element t^i is the i-fold product of the generator t = e_1
  std::vector<std::vector<int>> words(order);
  for (int i = 0; i < order; ++i) words[i] = std::vector<int>(i, 1);
  std::map<std::pair<int, int>, TensorElem> gens;
  gens.emplace(std::make_pair(1, 1), std::move(gen));
  DoubleBracket db = DoubleBracket::leibniz_extend(alg, words, gens, std::move(tau));
  return AlgebraInput{std::move(alg), std::move(db), std::move(name), std::move(certified)};
}
}  // namespace

AlgebraInput make_qp2() {
  Algebra alg = Algebra::truncated_polynomial(2);
  DoubleBracket db = DoubleBracket::zero(alg, Rational(1));
  return AlgebraInput{std::move(alg), std::move(db), "qp2",
                      {"validate", "db1", "db2", "quasi_poisson"}};
}

AlgebraInput make_qp3() {
  TensorElem gen(2);
  gen.add({2, 0}, Rational(1, 2));
  gen.add({0, 2}, Rational(-1, 2));
  return from_generator_bracket(3, std::move(gen), Rational(1), "qp3",
                                {"validate", "db1", "db2", "quasi_poisson"});
}

AlgebraInput make_dp3() {
  TensorElem gen(2);
  gen.add({1, 0}, Rational(1));
  gen.add({0, 1}, Rational(-1));
  return from_generator_bracket(3, std::move(gen), Rational(0), "dp3",
                                {"validate", "db1", "db2", "double_poisson"});
}

AlgebraInput make_bundled(const std::string& name) {
  if (name == "qp2") return make_qp2();
  if (name == "qp3") return make_qp3();
  if (name == "dp3") return make_dp3();
  throw std::invalid_argument("unknown bundled example \"" + name + "\"");
}

}  // namespace dqp
