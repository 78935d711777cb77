#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qeic {

inline constexpr int kMaxParties = 6;

// Subset of parties as a bitmask; bit i is party i, party 0 prints as "A".
struct PartySet {
  uint32_t mask = 0;

  constexpr PartySet() = default;
  constexpr explicit PartySet(uint32_t m) : mask(m) {}

  constexpr bool empty() const { return mask == 0; }
  int cardinality() const { return __builtin_popcount(mask); }
  constexpr bool contains(int party) const { return (mask >> party) & 1u; }
  constexpr bool disjoint_with(PartySet other) const { return (mask & other.mask) == 0; }
  constexpr bool subset_of(PartySet other) const { return (mask & ~other.mask) == 0; }
  constexpr PartySet unite(PartySet other) const { return PartySet(mask | other.mask); }
  constexpr PartySet complement_in(int n) const {
    return PartySet(~mask & ((1u << n) - 1u));
  }

  friend constexpr bool operator==(PartySet a, PartySet b) { return a.mask == b.mask; }
  friend constexpr bool operator!=(PartySet a, PartySet b) { return a.mask != b.mask; }
};

// "AB" -> {0,1}. Throws std::invalid_argument for letters outside A..A+n-1
// or repeated letters.
PartySet parse_party_set(const std::string& letters, int n);

std::string party_set_name(PartySet s);

// Cardinality-then-lexicographic order on letter names: A,B,...,AB,AC,...
// This is the presentation order used for vectors and tables.
bool card_lex_less(PartySet a, PartySet b);

// All nonempty subsets of n parties in card-lex order (size 2^n - 1).
const std::vector<PartySet>& card_lex_subsets(int n);

// Position of s in card_lex_subsets(n).
int card_lex_index(PartySet s, int n);

// Image of s under a party relabeling: party i goes to perm[i].
PartySet apply_permutation(PartySet s, const std::vector<int>& perm);

std::vector<std::vector<int>> all_permutations(int n);

}  // namespace qeic
