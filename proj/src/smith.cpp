#include "polywork/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace polywork {

namespace {

bool nonzero(const Int& x) { return sgn(x) != 0; }

}  // namespace

SmithResult smith_normal_form(std::vector<std::vector<Int>> m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  SmithResult out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest-magnitude nonzero pivot in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (!nonzero(m[i][j])) continue;
        if (pr == rows || mpz_cmpabs(m[i][j].get_mpz_t(), m[pr][pc].get_mpz_t()) < 0) {
          pr = i;
          pc = j;
        }
      }
    if (pr == rows) break;  // block is zero
    std::swap(m[t], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (!nonzero(m[i][t])) continue;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (nonzero(r)) {
          std::swap(m[t], m[i]);  // strictly smaller pivot; repeat
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (!nonzero(m[t][j])) continue;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (nonzero(r)) {
          for (std::size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }

    // Pivot must divide the rest of the block; otherwise fold a row in.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j) {
        if (!nonzero(m[i][j])) continue;
        if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
        }
      }
    if (!divides) continue;  // re-run elimination at the same t
    ++t;
  }

  out.diagonal.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(abs(m[i][i]));
  out.rank = t;
  return out;
}

}  // namespace polywork
