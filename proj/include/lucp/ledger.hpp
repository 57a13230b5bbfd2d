#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lucp/abelian.hpp"
#include "lucp/errors.hpp"

namespace lucp {

// A finite ledger of classes closed under products: representatives are
// discovered by multiplying out the generators, and membership is decided
// by the supplied comparison. The comparison returns Pass for the same
// class, a conclusive Fail for distinct classes, and Undecided when its
// search was cut short; any Undecided placement aborts the table and marks
// the whole ledger Undecided.
template <class T>
struct LedgerClosure {
  std::vector<T> reps;  // index 0 is the identity class
  FiniteGroupTable table;
  Verdict verdict = Verdict::Pass;

  std::size_t size() const { return reps.size(); }
};

// locate: returns index of the class of value among reps, reps.size() when
// new, or aborts with Undecided.
template <class T, class Prod, class Same>
LedgerClosure<T> close_ledger(const T& identity, const std::vector<T>& gens,
                              Prod prod, Same same, std::size_t cap) {
  LedgerClosure<T> led;
  led.reps.push_back(identity);
  auto locate = [&](const T& value, bool& undecided) -> std::size_t {
    for (std::size_t i = 0; i < led.reps.size(); ++i) {
      Verdict v = same(led.reps[i], value);
      if (v == Verdict::Pass) return i;
      if (v == Verdict::Undecided) {
        undecided = true;
        return led.reps.size();
      }
    }
    return led.reps.size();
  };
  bool undecided = false;
  for (const T& g : gens) {
    std::size_t at = locate(g, undecided);
    if (undecided) {
      led.verdict = Verdict::Undecided;
      return led;
    }
    if (at == led.reps.size()) {
      if (led.reps.size() >= cap)
        fail(ErrorKind::CapExceeded,
             "ledger exceeds its class cap of " + std::to_string(cap));
      led.reps.push_back(g);
    }
  }
  // close under pairwise products, recording the table as we go
  std::vector<std::size_t> table(led.reps.size() * led.reps.size(),
                                 static_cast<std::size_t>(-1));
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = led.reps.size();
    if (table.size() != n * n) {
      std::vector<std::size_t> wider(n * n, static_cast<std::size_t>(-1));
      // re-index the old entries
      std::size_t old = 0;
      while (old * old < table.size()) ++old;
      for (std::size_t i = 0; i < old; ++i)
        for (std::size_t j = 0; j < old; ++j)
          wider[i * n + j] = table[i * old + j];
      table = std::move(wider);
    }
    for (std::size_t i = 0; i < n && !grew; ++i)
      for (std::size_t j = 0; j < n && !grew; ++j) {
        if (table[i * n + j] != static_cast<std::size_t>(-1)) continue;
        T value = prod(led.reps[i], led.reps[j]);
        std::size_t at = locate(value, undecided);
        if (undecided) {
          led.verdict = Verdict::Undecided;
          return led;
        }
        if (at == led.reps.size()) {
          if (led.reps.size() >= cap)
            fail(ErrorKind::CapExceeded,
                 "ledger exceeds its class cap of " + std::to_string(cap));
          led.reps.push_back(value);
          grew = true;
        }
        table[i * n + j] = at;
      }
  }
  led.table = FiniteGroupTable::from_table(led.reps.size(), table, 0);
  return led;
}

}  // namespace lucp
