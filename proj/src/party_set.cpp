#include "qeic/party_set.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qeic {

PartySet parse_party_set(const std::string& letters, int n) {
  PartySet s;
  for (char c : letters) {
    int party = c - 'A';
    if (party < 0 || party >= n) {
      throw std::invalid_argument(std::string("unknown party '") + c + "' for n=" +
                                  std::to_string(n));
    }
    if (s.contains(party)) {
      throw std::invalid_argument(std::string("repeated party '") + c + "'");
    }
    s = s.unite(PartySet(1u << party));
  }
  return s;
}

std::string party_set_name(PartySet s) {
  std::string name;
  for (int i = 0; i < 32; ++i) {
    if (s.contains(i)) name.push_back(static_cast<char>('A' + i));
  }
  return name;
}

bool card_lex_less(PartySet a, PartySet b) {
  int ca = a.cardinality(), cb = b.cardinality();
  if (ca != cb) return ca < cb;
  // Same cardinality: lexicographic on ascending party indices, which matches
  // lexicographic order of the letter names.
  uint32_t x = a.mask, y = b.mask;
  while (x != 0 && y != 0) {
    int px = __builtin_ctz(x), py = __builtin_ctz(y);
    if (px != py) return px < py;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

const std::vector<PartySet>& card_lex_subsets(int n) {
  if (n < 1 || n > kMaxParties) {
    throw std::invalid_argument("party count out of range: " + std::to_string(n));
  }
  static std::array<std::vector<PartySet>, kMaxParties + 1> cache;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int k = 1; k <= kMaxParties; ++k) {
      std::vector<PartySet> subsets;
      subsets.reserve((1u << k) - 1);
      for (uint32_t m = 1; m < (1u << k); ++m) subsets.emplace_back(m);
      std::sort(subsets.begin(), subsets.end(), card_lex_less);
      cache[static_cast<size_t>(k)] = std::move(subsets);
    }
  });
  return cache[static_cast<size_t>(n)];
}

int card_lex_index(PartySet s, int n) {
  const auto& order = card_lex_subsets(n);
  auto it = std::lower_bound(order.begin(), order.end(), s, card_lex_less);
  if (it == order.end() || *it != s) {
    throw std::invalid_argument("subset not valid for n=" + std::to_string(n));
  }
  return static_cast<int>(it - order.begin());
}

PartySet apply_permutation(PartySet s, const std::vector<int>& perm) {
  PartySet out;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (s.contains(static_cast<int>(i))) {
      out = out.unite(PartySet(1u << perm[i]));
    }
  }
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> result;
  do {
    result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace qeic
