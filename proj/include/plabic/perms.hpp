#pragma once

#include <string>
#include <vector>

#include "plabic/error.hpp"

namespace plabic {

enum class Decoration { None, Over, Under };

// One-line notation, 1-based: values[i-1] = pi(i). Fixed points carry a
// decoration (Over = white lollipop, Under = black lollipop).
struct DecoratedPermutation {
  std::vector<int> values;
  std::vector<Decoration> deco;

  DecoratedPermutation() = default;
  DecoratedPermutation(std::vector<int> v, std::vector<Decoration> d) : values(std::move(v)), deco(std::move(d)) {}

  int b() const { return static_cast<int>(values.size()); }
  int operator()(int i) const { return values[i - 1]; }
  bool fixed(int i) const { return values[i - 1] == i; }
  Decoration decoration(int i) const { return deco[i - 1]; }
  bool operator==(const DecoratedPermutation& o) const { return values == o.values && deco == o.deco; }
  bool operator!=(const DecoratedPermutation& o) const { return !(*this == o); }
  bool operator<(const DecoratedPermutation& o) const {
    return values != o.values ? values < o.values : deco < o.deco;
  }
};

void check_permutation(const DecoratedPermutation& p);
std::string format_permutation(const DecoratedPermutation& p);
// "3 4 5 1 2 6^": i^ overline, i_ underline; an undecorated fixed point is an error
DecoratedPermutation parse_permutation(const std::string& s);
// plain permutation with every fixed point underlined
DecoratedPermutation undecorated(const std::vector<int>& values);
int anti_excedances(const DecoratedPermutation& p);
std::vector<DecoratedPermutation> all_decorated_permutations(int b);
// (a+1, ..., b, 1, ..., a), with the decoration forced at a = 0 or a = b
DecoratedPermutation pi_ab(int a, int b);

struct BoundedAffinePermutation {
  std::vector<long> window;  // f(1..b)
  int b() const { return static_cast<int>(window.size()); }
  long operator()(long i) const;  // b-periodic extension f(i + b) = f(i) + b
  int a() const;
};

void check_window(const BoundedAffinePermutation& f);
BoundedAffinePermutation affinize(const DecoratedPermutation& p);
DecoratedPermutation deaffinize(const BoundedAffinePermutation& f);
long length(const BoundedAffinePermutation& f);
bool is_identity_mod_b(const BoundedAffinePermutation& f);
long long count_Dab(int a, int b);

using Subset = std::vector<int>;  // sorted
std::string format_subset(const Subset& s, int b);
Subset parse_subset(const std::string& s, int b);
std::vector<Subset> all_subsets(int b, int a);

struct GrassmannNecklace {
  int b = 0;
  std::vector<Subset> sets;  // I_1..I_b
  bool operator==(const GrassmannNecklace& o) const { return b == o.b && sets == o.sets; }
};

void check_necklace(const GrassmannNecklace& n);
GrassmannNecklace necklace_from_perm(const DecoratedPermutation& p);
DecoratedPermutation perm_from_necklace(const GrassmannNecklace& n);
// I <=_l J in the Gale order induced by l < l+1 < ... < b < 1 < ... < l-1
bool gale_leq(const Subset& I, const Subset& J, int l, int b);
std::vector<Subset> positroid(const GrassmannNecklace& n);
bool weakly_separated(const Subset& I, const Subset& J, int b);

}  // namespace plabic
