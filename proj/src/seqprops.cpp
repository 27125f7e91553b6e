#include "qf/seqprops.hpp"

#include <string>

namespace qf {

namespace {

template <typename Quantity, typename Accept>
SeqVerdict scan(std::span<const Rat> a, Quantity quantity, Accept accept) {
  SeqVerdict v;
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    Rat s = quantity(i);
    if (!accept(s)) v.holds = false;
    if (s.is_zero()) v.equality_indices.push_back(static_cast<int>(i));
    v.witnesses.push_back({{static_cast<int>(i)}, std::move(s)});
  }
  return v;
}

}  // namespace

SeqVerdict is_concave(std::span<const Rat> a) {
  return scan(
      a, [&](std::size_t i) { return a[i - 1] - Rat(2) * a[i] + a[i + 1]; },
      [](const Rat& s) { return s.sign() <= 0; });
}

SeqVerdict is_convex(std::span<const Rat> a) {
  return scan(
      a, [&](std::size_t i) { return a[i - 1] - Rat(2) * a[i] + a[i + 1]; },
      [](const Rat& s) { return s.sign() >= 0; });
}

SeqVerdict is_log_concave(std::span<const Rat> a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].sign() <= 0)
      throw Error(Errc::NonPositiveEntry, "entry " + std::to_string(i) + " = " + a[i].str() + " is not positive");
  return scan(
      a, [&](std::size_t i) { return a[i] * a[i] - a[i - 1] * a[i + 1]; },
      [](const Rat& s) { return s.sign() >= 0; });
}

Rat three_term(std::span<const Rat> a, int i, int j, int k) {
  if (i < 0 || !(i < j && j < k) || k >= static_cast<int>(a.size()))
    throw Error(Errc::IndexOrder, "three_term needs 0 <= i < j < k < length");
  return Rat(k - j) * a[i] + Rat(i - k) * a[j] + Rat(j - i) * a[k];
}

}  // namespace qf
