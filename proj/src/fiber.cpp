#include "ospquant/fiber.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace ospq {

std::optional<std::pair<FiberKey, int>> fiber_normalize(SpaceSignature sig,
                                                        const std::vector<int>& word) {
  FiberKey key;
  key.even.assign(sig.even_count(), 0);
  // odd letters in order of appearance; evens commute past everything
  std::vector<int> odds;
  for (int g : word) {
    if (g < 1 || g > sig.dims()) throw std::out_of_range("fiber generator index");
    if (g <= sig.even_count())
      key.even[g - 1] += 1;
    else
      odds.push_back(g - sig.even_count() - 1);  // 0-based odd slot
  }
  // insertion sort tracking the Koszul sign; duplicates vanish
  int sign = 1;
  for (std::size_t i = 1; i < odds.size(); ++i)
    for (std::size_t j = i; j > 0 && odds[j] <= odds[j - 1]; --j) {
      if (odds[j] == odds[j - 1]) return std::nullopt;
      std::swap(odds[j], odds[j - 1]);
      sign = -sign;
    }
  for (int b : odds) key.odd |= std::uint64_t(1) << b;
  return std::pair{std::move(key), sign};
}

std::optional<std::pair<FiberKey, int>> fiber_vee(SpaceSignature sig, int j,
                                                  const FiberKey& m) {
  FiberKey key = m;
  if (j <= sig.even_count()) {
    key.even[j - 1] += 1;
    return std::pair{std::move(key), 1};
  }
  const int bit = j - sig.even_count() - 1;
  if (subset_has(m.odd, bit)) return std::nullopt;
  key.odd |= std::uint64_t(1) << bit;
  return std::pair{std::move(key), removal_sign(m.odd, bit)};
}

std::vector<std::pair<FiberKey, int>> fiber_contract(SpaceSignature sig, int j,
                                                     const FiberKey& m) {
  std::vector<std::pair<FiberKey, int>> out;
  if (j <= sig.even_count()) {
    if (m.even[j - 1] == 0) return out;
    FiberKey key = m;
    key.even[j - 1] -= 1;
    out.emplace_back(std::move(key), m.even[j - 1]);
  } else {
    const int bit = j - sig.even_count() - 1;
    if (!subset_has(m.odd, bit)) return out;
    FiberKey key = m;
    key.odd &= ~(std::uint64_t(1) << bit);
    out.emplace_back(std::move(key), removal_sign(m.odd, bit));
  }
  return out;
}

std::vector<std::pair<FiberKey, int>> fiber_rho(SpaceSignature sig, int out_j,
                                                int in_i, const FiberKey& m) {
  std::vector<std::pair<FiberKey, int>> out;
  const int pi = sig.parity(in_i), pj = sig.parity(out_j);
  const int op_parity = (pi + pj) & 1;
  if (in_i <= sig.even_count()) {
    // even occurrences sit before the odd block: prefix parity zero
    const int count = m.even[in_i - 1];
    if (count == 0) return out;
    FiberKey removed = m;
    removed.even[in_i - 1] -= 1;
    auto placed = fiber_vee(sig, out_j, removed);
    if (!placed) return out;
    out.emplace_back(std::move(placed->first), placed->second * count);
  } else {
    const int bit = in_i - sig.even_count() - 1;
    if (!subset_has(m.odd, bit)) return out;
    // prefix of the occurrence: all evens plus the smaller odd letters
    int prefix = std::popcount(m.odd & ((std::uint64_t(1) << bit) - 1));
    int sign = (op_parity && (prefix & 1)) ? -1 : 1;
    FiberKey removed = m;
    removed.odd &= ~(std::uint64_t(1) << bit);
    if (out_j <= sig.even_count()) {
      // the even letter slides out of the odd block freely
      removed.even[out_j - 1] += 1;
      out.emplace_back(std::move(removed), sign);
    } else {
      const int jbit = out_j - sig.even_count() - 1;
      if (subset_has(removed.odd, jbit)) return out;
      sign *= removal_sign(m.odd, bit);          // occurrence to the front
      sign *= removal_sign(removed.odd, jbit);   // front to its sorted slot
      removed.odd |= std::uint64_t(1) << jbit;
      out.emplace_back(std::move(removed), sign);
    }
  }
  return out;
}

std::string fiber_label(const FiberKey& m) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < m.even.size(); ++i) {
    if (m.even[i] == 0) continue;
    if (any) os << " ";
    any = true;
    os << "e" << (i + 1);
    if (m.even[i] > 1) os << "^" << m.even[i];
  }
  for (int b = 0; b < 64; ++b) {
    if (!subset_has(m.odd, b)) continue;
    if (any) os << " ";
    any = true;
    os << "e" << (m.even.size() + b + 1);
  }
  return any ? os.str() : "1";
}

namespace {

void enumerate_even(SpaceSignature sig, int slot, int remaining, FiberKey& cur,
                    std::vector<FiberKey>& out) {
  if (slot == sig.even_count()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.even[slot] = e;
    enumerate_even(sig, slot + 1, remaining - e, cur, out);
  }
  cur.even[slot] = 0;
}

}  // namespace

std::vector<FiberKey> fiber_basis(SpaceSignature sig, int k) {
  std::vector<FiberKey> out;
  const int no = sig.odd_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << no); ++mask) {
    const int m = std::popcount(mask);
    if (m > k) continue;
    FiberKey cur;
    cur.even.assign(sig.even_count(), 0);
    cur.odd = mask;
    if (sig.even_count() == 0) {
      if (m == k) out.push_back(cur);
      continue;
    }
    enumerate_even(sig, 0, k - m, cur, out);
  }
  std::sort(out.begin(), out.end(), FiberLess{});
  return out;
}

}  // namespace ospq
