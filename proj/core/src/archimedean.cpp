#include "arthur/archimedean.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "arthur/error.hpp"

namespace arthur {

namespace {

void sort_desc(std::vector<HalfInt>& v) { std::sort(v.begin(), v.end(), std::greater<>{}); }

void append_block(std::vector<HalfInt>& out, const ArchBlock& blk) {
  if (blk.a_delta < 1 || blk.b < 1) throw Error("arch block needs a_delta, b >= 1");
  const std::vector<HalfInt> centers =
      blk.a_delta == 1 ? std::vector<HalfInt>{HalfInt{}}
                       : std::vector<HalfInt>{HalfInt::from_doubled(blk.a_delta - 1),
                                              HalfInt::from_doubled(1 - blk.a_delta)};
  for (HalfInt c : centers) {
    for (int k = blk.b - 1; k >= 1 - blk.b; k -= 2) out.push_back(c + HalfInt::from_doubled(k));
  }
}

void append_tau(std::vector<HalfInt>& out, int a_tau, HalfInt s0) {
  if (a_tau < 1) throw Error("a_tau must be >= 1");
  const HalfInt shift = HalfInt::from_doubled(a_tau - 1);
  out.push_back(s0 + shift);
  out.push_back(-(s0 + shift));
  if (a_tau != 1) {
    out.push_back(s0 - shift);
    out.push_back(-(s0 - shift));
  }
}

void require_positive(HalfInt s0) {
  if (s0 <= HalfInt{}) throw Error("s0 must be > 0");
}

}  // namespace

InfChar inf_char(std::span<const ArchBlock> blocks) {
  InfChar chi;
  for (const auto& blk : blocks) append_block(chi.entries, blk);
  sort_desc(chi.entries);
  return chi;
}

InfChar combined_inf_char(std::span<const ArchBlock> psi, int a_tau, HalfInt s0) {
  const int taus[] = {a_tau};
  return combined_inf_char(psi, taus, s0);
}

InfChar combined_inf_char(std::span<const ArchBlock> psi, std::span<const int> a_taus,
                          HalfInt s0) {
  require_positive(s0);
  InfChar chi = inf_char(psi);
  for (int a : a_taus) append_tau(chi.entries, a, s0);
  sort_desc(chi.entries);
  return chi;
}

bool is_regular(const InfChar& chi) {
  std::vector<HalfInt> v = chi.entries;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

int arch_lfactor_order(int a_tau, int a_delta, int b, HalfInt s0) {
  if (a_tau < 1 || a_delta < 1 || b < 1) throw Error("arch_lfactor_order needs a_tau, a_delta, b >= 1");
  const HalfInt base = s0 - HalfInt::from_doubled(b - 1);
  std::vector<HalfInt> args{base + HalfInt::from_doubled(std::abs(a_tau - a_delta))};
  if (a_tau != 1 && a_delta != 1) args.push_back(base + HalfInt::from_doubled(a_tau + a_delta - 2));
  int order = 0;
  for (HalfInt g : args) {
    if (g.is_integral() && g <= HalfInt{}) --order;
  }
  return order;
}

int normalization_order(std::span<const int> a_taus, std::span<const ArchBlock> psi,
                        HalfInt s0) {
  require_positive(s0);
  int order = 0;
  for (int a : a_taus) {
    for (const auto& blk : psi) order += arch_lfactor_order(a, blk.a_delta, blk.b, s0);
  }
  return order;
}

}  // namespace arthur
