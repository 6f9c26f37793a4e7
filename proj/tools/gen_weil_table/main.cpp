// Regenerates core/src/weil_table.cpp from the exponential-sum oracle.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tendo/localfield.hpp"
#include "tendo/weil.hpp"

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const long bound = argc > 1 ? std::stol(argv[1]) : 100;
  std::ostringstream rows;
  for (long n = 2; n < bound; ++n) {
    if (!is_prime(n)) continue;
    const tendo::Prime p(n);
    rows << "    {" << n << ", {";
    const auto classes = tendo::square_class_table(p);
    for (std::size_t i = 0; i < 8; ++i) {
      int exponent = 0;
      if (i < classes.size()) {
        const auto r = tendo::gauss_oracle(classes[i].representative(), p);
        if (!r.stabilized) {
          std::cerr << "oracle did not stabilize at p = " << n << ", a = " << classes[i].representative() << "\n";
          return 1;
        }
        exponent = r.snapped.exponent();
      }
      rows << (i ? ", " : "") << exponent;
    }
    rows << "}},\n";
    std::cerr << "p = " << n << " done\n";
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (argc > 2) {
    file.open(argv[2]);
    out = &file;
  }
  *out << "// Generated by gen_weil_table; do not edit.\n"
       << "#include \"weil_table.hpp\"\n\n"
       << "namespace tendo::detail {\n\n"
       << "namespace {\n\n"
       << "constexpr WeilTableRow kRows[] = {\n"
       << rows.str() << "};\n\n"
       << "}  // namespace\n\n"
       << "std::span<const WeilTableRow> weil_table_rows() { return kRows; }\n\n"
       << "}  // namespace tendo::detail\n";
  return 0;
}
