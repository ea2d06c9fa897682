#include "plabic/perms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace plabic {

void check_permutation(const DecoratedPermutation& p) {
  int b = p.b();
  if (static_cast<int>(p.deco.size()) != b)
    throw Error(ErrorKind::MalformedPermutation, "decoration vector has the wrong length");
  std::vector<bool> hit(b + 1, false);
  for (int i = 1; i <= b; ++i) {
    int v = p(i);
    if (v < 1 || v > b || hit[v]) throw Error(ErrorKind::MalformedPermutation, "values are not a permutation of 1..b");
    hit[v] = true;
    bool fixed = v == i;
    if (fixed != (p.decoration(i) != Decoration::None))
      throw Error(ErrorKind::MalformedPermutation,
                  "position " + std::to_string(i) + ": decorations must sit exactly on fixed points");
  }
}

std::string format_permutation(const DecoratedPermutation& p) {
  std::ostringstream os;
  for (int i = 1; i <= p.b(); ++i) {
    if (i > 1) os << ' ';
    os << p(i);
    if (p.decoration(i) == Decoration::Over) os << '^';
    if (p.decoration(i) == Decoration::Under) os << '_';
  }
  return os.str();
}

DecoratedPermutation parse_permutation(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',' || c == '(' || c == ')') c = ' ';
  std::istringstream is(t);
  std::string tok;
  DecoratedPermutation p;
  while (is >> tok) {
    Decoration d = Decoration::None;
    if (tok.back() == '^') d = Decoration::Over;
    if (tok.back() == '_') d = Decoration::Under;
    if (d != Decoration::None) tok.pop_back();
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw Error(ErrorKind::MalformedPermutation, "bad token '" + tok + "'");
    p.values.push_back(v);
    p.deco.push_back(d);
  }
  check_permutation(p);
  return p;
}

DecoratedPermutation undecorated(const std::vector<int>& values) {
  DecoratedPermutation p;
  p.values = values;
  for (size_t i = 0; i < values.size(); ++i)
    p.deco.push_back(values[i] == static_cast<int>(i) + 1 ? Decoration::Under : Decoration::None);
  return p;
}

int anti_excedances(const DecoratedPermutation& p) {
  int a = 0;
  for (int i = 1; i <= p.b(); ++i)
    if (p(i) < i || p.decoration(i) == Decoration::Over) ++a;
  return a;
}

std::vector<DecoratedPermutation> all_decorated_permutations(int b) {
  std::vector<DecoratedPermutation> out;
  std::vector<int> v(b);
  std::iota(v.begin(), v.end(), 1);
  do {
    std::vector<int> fixed;
    for (int i = 0; i < b; ++i)
      if (v[i] == i + 1) fixed.push_back(i);
    for (int mask = 0; mask < (1 << fixed.size()); ++mask) {
      DecoratedPermutation p(v, std::vector<Decoration>(b, Decoration::None));
      for (size_t k = 0; k < fixed.size(); ++k)
        p.deco[fixed[k]] = (mask >> k) & 1 ? Decoration::Over : Decoration::Under;
      out.push_back(p);
    }
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

DecoratedPermutation pi_ab(int a, int b) {
  if (a < 0 || a > b) throw Error(ErrorKind::MalformedPermutation, "need 0 <= a <= b");
  DecoratedPermutation p;
  for (int i = 1; i <= b; ++i) {
    int v = i + a > b ? i + a - b : i + a;
    p.values.push_back(v);
    p.deco.push_back(v != i ? Decoration::None : (a == b ? Decoration::Over : Decoration::Under));
  }
  return p;
}

long BoundedAffinePermutation::operator()(long i) const {
  long b = this->b();
  long q = (i - 1) >= 0 ? (i - 1) / b : -((b - i) / b);
  long r = i - q * b;  // 1..b
  return window[r - 1] + q * b;
}

int BoundedAffinePermutation::a() const {
  long s = 0;
  for (int i = 1; i <= b(); ++i) s += window[i - 1] - i;
  return static_cast<int>(s / b());
}

void check_window(const BoundedAffinePermutation& f) {
  int b = f.b();
  if (b < 1) throw Error(ErrorKind::MalformedWindow, "empty window");
  std::vector<bool> hit(b, false);
  for (int i = 1; i <= b; ++i) {
    long v = f.window[i - 1];
    if (v < i || v > i + b)
      throw Error(ErrorKind::MalformedWindow, "f(" + std::to_string(i) + ") = " + std::to_string(v) +
                                                  " violates i <= f(i) <= i+b");
    int r = static_cast<int>(((v % b) + b) % b);
    if (hit[r]) throw Error(ErrorKind::MalformedWindow, "window values are not distinct mod b");
    hit[r] = true;
  }
}

BoundedAffinePermutation affinize(const DecoratedPermutation& p) {
  check_permutation(p);
  BoundedAffinePermutation f;
  int b = p.b();
  for (int i = 1; i <= b; ++i) {
    int v = p(i);
    if (v > i) f.window.push_back(v);
    else if (v < i) f.window.push_back(v + b);
    else f.window.push_back(p.decoration(i) == Decoration::Over ? i + b : i);
  }
  return f;
}

DecoratedPermutation deaffinize(const BoundedAffinePermutation& f) {
  check_window(f);
  int b = f.b();
  DecoratedPermutation p;
  for (int i = 1; i <= b; ++i) {
    long v = f.window[i - 1];
    if (v == i) {
      p.values.push_back(i);
      p.deco.push_back(Decoration::Under);
    } else if (v == i + b) {
      p.values.push_back(i);
      p.deco.push_back(Decoration::Over);
    } else {
      p.values.push_back(static_cast<int>(v <= b ? v : v - b));
      p.deco.push_back(Decoration::None);
    }
  }
  return p;
}

long length(const BoundedAffinePermutation& f) {
  check_window(f);
  int b = f.b();
  long n = 0;
  for (long i = 1; i <= b; ++i)
    for (long j = i + 1; j < i + b; ++j)
      if (f(i) > f(j)) ++n;
  return n;
}

bool is_identity_mod_b(const BoundedAffinePermutation& f) {
  for (int i = 1; i <= f.b(); ++i) {
    long v = f.window[i - 1];
    if (v != i && v != i + f.b()) return false;
  }
  return true;
}

namespace {

long long ipow(long long x, int e) {
  long long r = 1;
  while (e-- > 0) r *= x;
  return r;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long count_Dab(int a, int b) {
  if (a < 0 || a > b) return 0;
  if (a == 0) return 1;
  long long s = 0;
  for (int i = 0; i <= a - 1; ++i) {
    long long term = ipow(a - i, i) * ipow(a - i + 1, b - i) - ipow(a - i - 1, i) * ipow(a - i, b - i);
    s += (i % 2 ? -1 : 1) * binom(b, i) * term;
  }
  return s;
}

std::string format_subset(const Subset& s, int b) {
  std::ostringstream os;
  for (size_t k = 0; k < s.size(); ++k) {
    if (b > 9 && k) os << ',';
    os << s[k];
  }
  return os.str();
}

Subset parse_subset(const std::string& s, int b) {
  Subset out;
  if (b <= 9 && s.find(',') == std::string::npos) {
    for (char c : s)
      if (c >= '1' && c <= '9') out.push_back(c - '0');
  } else {
    std::string t = s;
    for (char& c : t)
      if (c == ',') c = ' ';
    std::istringstream is(t);
    int v;
    while (is >> v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> all_subsets(int b, int a) {
  std::vector<Subset> out;
  for (int mask = 0; mask < (1 << b); ++mask) {
    if (__builtin_popcount(mask) != a) continue;
    Subset s;
    for (int i = 0; i < b; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_necklace(const GrassmannNecklace& n) {
  int b = n.b;
  if (b < 1 || static_cast<int>(n.sets.size()) != b) throw Error(ErrorKind::NotANecklace, "need exactly b sets");
  size_t a = n.sets[0].size();
  for (int i = 1; i <= b; ++i) {
    const Subset& I = n.sets[i - 1];
    if (I.size() != a) throw Error(ErrorKind::NotANecklace, "sets have different sizes");
    std::set<int> s(I.begin(), I.end());
    if (s.size() != I.size() || (!I.empty() && (*s.begin() < 1 || *s.rbegin() > b)))
      throw Error(ErrorKind::NotANecklace, "set entries must be distinct elements of 1..b");
    const Subset& next = n.sets[i % b];
    for (int x : I)
      if (x != i && !std::binary_search(next.begin(), next.end(), x))
        throw Error(ErrorKind::NotANecklace,
                    "I_" + std::to_string(i % b + 1) + " does not contain I_" + std::to_string(i) + " minus " +
                        std::to_string(i));
  }
}

GrassmannNecklace necklace_from_perm(const DecoratedPermutation& p) {
  check_permutation(p);
  int b = p.b();
  std::vector<int> inv(b + 1);
  for (int i = 1; i <= b; ++i) inv[p(i)] = i;
  GrassmannNecklace n;
  n.b = b;
  auto rank = [b](int x, int l) { return ((x - l) % b + b) % b; };
  for (int l = 1; l <= b; ++l) {
    Subset I;
    for (int i = 1; i <= b; ++i) {
      bool anti = p.fixed(i) ? p.decoration(i) == Decoration::Over : rank(inv[i], l) > rank(i, l);
      if (anti) I.push_back(i);
    }
    n.sets.push_back(I);
  }
  return n;
}

DecoratedPermutation perm_from_necklace(const GrassmannNecklace& n) {
  check_necklace(n);
  int b = n.b;
  DecoratedPermutation p;
  for (int i = 1; i <= b; ++i) {
    const Subset& I = n.sets[i - 1];
    const Subset& J = n.sets[i % b];
    bool in = std::binary_search(I.begin(), I.end(), i);
    if (I == J) {
      p.values.push_back(i);
      p.deco.push_back(in ? Decoration::Over : Decoration::Under);
      continue;
    }
    // J = (I \ {i}) + {j}
    int j = -1;
    for (int x : J)
      if (x == i || !std::binary_search(I.begin(), I.end(), x)) j = x;
    if (j < 0 || !in) throw Error(ErrorKind::NotANecklace, "consecutive sets differ without dropping i");
    p.values.push_back(j);
    p.deco.push_back(j == i ? Decoration::Over : Decoration::None);
  }
  try {
    check_permutation(p);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotANecklace, e.what());
  }
  return p;
}

bool gale_leq(const Subset& I, const Subset& J, int l, int b) {
  if (I.size() != J.size()) throw Error(ErrorKind::SizeMismatch, "Gale order needs equal sizes");
  auto rank = [b, l](int x) { return ((x - l) % b + b) % b; };
  std::vector<int> ri, rj;
  for (int x : I) ri.push_back(rank(x));
  for (int x : J) rj.push_back(rank(x));
  std::sort(ri.begin(), ri.end());
  std::sort(rj.begin(), rj.end());
  for (size_t k = 0; k < ri.size(); ++k)
    if (ri[k] > rj[k]) return false;
  return true;
}

std::vector<Subset> positroid(const GrassmannNecklace& n) {
  check_necklace(n);
  std::vector<Subset> out;
  for (const Subset& J : all_subsets(n.b, static_cast<int>(n.sets[0].size()))) {
    bool ok = true;
    for (int l = 1; l <= n.b && ok; ++l) ok = gale_leq(n.sets[l - 1], J, l, n.b);
    if (ok) out.push_back(J);
  }
  return out;
}

bool weakly_separated(const Subset& I, const Subset& J, int b) {
  if (I.size() != J.size()) throw Error(ErrorKind::SizeMismatch, "weak separation needs equal sizes");
  // walk around the circle and count switches between I\J and J\I
  std::vector<int> tags;
  for (int x = 1; x <= b; ++x) {
    bool inI = std::binary_search(I.begin(), I.end(), x);
    bool inJ = std::binary_search(J.begin(), J.end(), x);
    if (inI != inJ) tags.push_back(inI ? 1 : 2);
  }
  int switches = 0;
  for (size_t k = 0; k < tags.size(); ++k)
    if (tags[k] != tags[(k + 1) % tags.size()]) ++switches;
  return switches <= 2;
}

}  // namespace plabic
