#include <iostream>

#include "kcycles/coefficients.hpp"
#include "kcycles/tree_poly.hpp"

int main() {
  kcycles::CoeffTable table;
  std::cout << kcycles::to_text(kcycles::reduced_tree_poly(1)) << ' ' << table.b_lambda_n({1, 1}) << '\n';
  return table.b_lambda_n({1, 1}) == kcycles::Rational(29, 720) ? 0 : 1;
}
