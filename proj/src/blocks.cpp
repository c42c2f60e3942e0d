#include "steklov/blocks.hpp"

#include <cstdlib>

namespace steklov {

namespace {

void check_coverage(const WeightCoefficients& coeffs, long M) {
  if (coeffs.m_max() < 2 * M) {
    throw std::invalid_argument("weight coefficients do not cover 2M");
  }
}

std::vector<Interval> inv_sqrt_weights(const BlockIndex& block,
                                       const std::vector<long>& modes) {
  std::vector<Interval> u;
  u.reserve(modes.size());
  for (long m : modes) {
    u.push_back(recip(sqrt(Interval(diagonal_weight(block, m)))));
  }
  return u;
}

}  // namespace

long diagonal_weight(const BlockIndex& block, long m) {
  long d = std::labs(block.residue + m * block.n_sides);
  if (d == 0) throw domain_violation("zero mode has no diagonal weight");
  return d;
}

BlockSection assemble_block_section(const BlockIndex& block, long M,
                                    const WeightCoefficients& coeffs) {
  if (block.residue == 0) {
    throw std::invalid_argument("use assemble_zero_block_section for r = 0");
  }
  check_coverage(coeffs, M);
  BlockSection s;
  s.block = block;
  s.half_width = M;
  s.zero_mode_excluded = false;
  for (long m = -M; m <= M; ++m) s.modes.push_back(m);
  const long n = s.dim();
  std::vector<Interval> u = inv_sqrt_weights(block, s.modes);
  s.mat.assign(n * n, Interval());
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      Interval e = coeffs.v(s.modes[i] - s.modes[j]) * u[i] * u[j];
      s.mat[j * n + i] = e;  // mirrored entry is the identical interval
      s.mat[i * n + j] = std::move(e);
    }
  }
  return s;
}

BlockSection assemble_zero_block_section(int n_sides, long M,
                                         const WeightCoefficients& coeffs) {
  if (M < 1) throw std::invalid_argument("M must be >= 1");
  check_coverage(coeffs, M);
  BlockSection s;
  s.block = BlockIndex{n_sides, 0};
  s.half_width = M;
  s.zero_mode_excluded = true;
  for (long m = -M; m <= M; ++m) {
    if (m != 0) s.modes.push_back(m);
  }
  const long n = s.dim();
  std::vector<Interval> u = inv_sqrt_weights(s.block, s.modes);
  s.mat.assign(n * n, Interval());
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      // v_0 = 1, so the rank-one term is just v_m v_l.
      Interval num =
          coeffs.v(s.modes[i] - s.modes[j]) - coeffs.v(s.modes[i]) * coeffs.v(s.modes[j]);
      Interval e = num * (u[i] * u[j]);
      s.mat[j * n + i] = e;
      s.mat[i * n + j] = std::move(e);
    }
  }
  return s;
}

CriticalBlockData critical_block_data(int n_sides, long M,
                                      const WeightCoefficients& coeffs) {
  if (M < 1) throw std::invalid_argument("M must be >= 1");
  check_coverage(coeffs, M);
  CriticalBlockData d;
  d.n_sides = n_sides;
  d.half_width = M;
  BlockIndex blk{n_sides, 1};
  for (long m = -M; m <= M; ++m) {
    if (m != 0) d.modes.push_back(m);
  }
  const long n = d.dim();
  std::vector<Interval> u = inv_sqrt_weights(blk, d.modes);
  d.b.reserve(n);
  for (long i = 0; i < n; ++i) {
    d.b.push_back(coeffs.v(d.modes[i]) * u[i]);
  }
  d.k.assign(n * n, Interval());
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      Interval e = coeffs.v(d.modes[i] - d.modes[j]) * u[i] * u[j];
      d.k[j * n + i] = e;
      d.k[i * n + j] = std::move(e);
    }
  }
  return d;
}

}  // namespace steklov
