// A short tour: build a symmetric function, change basis, factor it, and
// classify its Boolean kernel.

#include <iostream>

#include "sympbf/sympbf.hpp"

using namespace sympbf;

namespace {

void analyze(const MultilinearPBF& f, const std::string& name) {
  const auto sym = to_symmetric(f);
  const auto series = series_from_symmetric(sym);

  std::cout << name << "\n  a =";
  for (const auto& v : sym.a) std::cout << " " << to_string(v);
  std::cout << "\n  c =";
  for (const auto& v : series.c) std::cout << " " << to_string(v);

  const auto poly = to_univariate(series);
  if (poly.degree() >= 1) {
    const auto fact = find_roots(poly, {}, f.n());
    std::cout << "\n  K = " << to_string(fact.constant) << ", roots:";
    for (const auto& entry : fact.roots) {
      std::cout << " " << (entry.exact_value ? to_string(*entry.exact_value)
                                             : format_double(entry.value.real()));
      if (entry.multiplicity > 1) std::cout << "^" << entry.multiplicity;
    }
    const auto kernel = classify_kernel(fact, f.n());
    std::cout << "\n  kernel size " << kernel.kernel_size.str() << " of " << (1ull << f.n())
              << " inputs (brute force: " << brute_kernel_size(f) << ")";
  }
  std::cout << "\n\n";
}

}  // namespace

int main() {
  analyze(make_delta(3), "delta on 3 variables");
  analyze(make_xor(3), "parity on 3 variables");
  analyze(make_ising(IsingParams(5, 1, Rational(-1, 2))), "pair coupling J=1, bias h=-1/2, n=5");
  return 0;
}
