#include "lucp/pic.hpp"

namespace lucp {

Verdict same_invertible_class(const InvertibleBimodule& a,
                              const InvertibleBimodule& b, Rng& rng,
                              std::uint64_t sample_cap,
                              std::uint64_t exhaustive_cap) {
  IsoSearch s = find_iso(a.x, b.x, rng, sample_cap, exhaustive_cap);
  if (s.iso) return Verdict::Pass;
  return s.exhausted ? Verdict::Fail : Verdict::Undecided;
}

LedgerClosure<InvertibleBimodule> invertible_class_ledger(
    const Ring& r, const std::vector<Bimodule>& gens, Rng& rng,
    std::size_t cap, std::uint64_t sample_cap,
    std::uint64_t exhaustive_cap) {
  std::vector<InvertibleBimodule> certified;
  certified.reserve(gens.size());
  for (const Bimodule& g : gens) certified.push_back(make_invertible(g));
  return close_ledger(
      regular_invertible(r), certified,
      [](const InvertibleBimodule& a, const InvertibleBimodule& b) {
        return tensor_invertible(a, b);
      },
      [&](const InvertibleBimodule& a, const InvertibleBimodule& b) {
        return same_invertible_class(a, b, rng, sample_cap, exhaustive_cap);
      },
      cap);
}

std::vector<std::size_t> z_symmetric_classes(
    const LedgerClosure<InvertibleBimodule>& led, const Center& z) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < led.reps.size(); ++i)
    if (is_z_symmetric(z, led.reps[i].x)) out.push_back(i);
  return out;
}

}  // namespace lucp
