#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cext/spectrum.hpp"

namespace cext {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyInfo, 17> kFamilies{{
    {Family::I1, "I1"},     {Family::I2, "I2"},     {Family::II1, "II1"},     {Family::II2, "II2"},
    {Family::III1, "III1"}, {Family::III2, "III2"}, {Family::Ia, "Ia"},       {Family::Ib, "Ib"},
    {Family::IIa, "IIa"},   {Family::IIb, "IIb"},   {Family::IIc, "IIc"},     {Family::IIIa, "IIIa"},
    {Family::IIIb, "IIIb"}, {Family::IIIc, "IIIc"}, {Family::Iabc, "Iabc"},   {Family::IIabc, "IIabc"},
    {Family::IIIabc, "IIIabc"},
}};

enum class Roman { I, II, III };

Roman roman_of(Family f) {
  switch (f) {
    case Family::I1:
    case Family::I2:
    case Family::Ia:
    case Family::Ib:
    case Family::Iabc:
      return Roman::I;
    case Family::II1:
    case Family::II2:
    case Family::IIa:
    case Family::IIb:
    case Family::IIc:
    case Family::IIabc:
      return Roman::II;
    default:
      return Roman::III;
  }
}

std::string_view roman_text(Roman r) { return r == Roman::I ? "I" : (r == Roman::II ? "II" : "III"); }

// Suffix for degenerate families ("a", "b", "c", "abc"); empty for nondegenerate.
std::string_view degeneracy_suffix(Family f) {
  switch (f) {
    case Family::Ia:
    case Family::IIa:
    case Family::IIIa:
      return "a";
    case Family::Ib:
    case Family::IIb:
    case Family::IIIb:
      return "b";
    case Family::IIc:
    case Family::IIIc:
      return "c";
    case Family::Iabc:
    case Family::IIabc:
    case Family::IIIabc:
      return "abc";
    default:
      return "";
  }
}

// Subclass digit (1 or 2) of nondegenerate families.
int subclass_of(Family f) {
  switch (f) {
    case Family::I1:
    case Family::II1:
    case Family::III1:
      return 1;
    case Family::I2:
    case Family::II2:
    case Family::III2:
      return 2;
    default:
      return 0;
  }
}

std::optional<Family> family_for(Roman r, int subclass, std::string_view suffix) {
  for (const auto& info : kFamilies) {
    if (roman_of(info.family) == r && subclass_of(info.family) == subclass && degeneracy_suffix(info.family) == suffix) {
      return info.family;
    }
  }
  return std::nullopt;
}

std::vector<std::string_view> split_dots(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto dot = s.find('.', start);
    parts.push_back(s.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return parts;
}

std::optional<int> positive_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1) return std::nullopt;
  return value;
}

[[noreturn]] void bad_label(std::string_view label) {
  throw std::invalid_argument("unknown spectrum type label '" + std::string(label) + "'");
}

// "c - alpha0" rendered with the constant already evaluated.
std::string minus_alpha0(long c) { return std::to_string(c) + " - alpha0"; }

std::string open_interval(const std::string& lo, std::string_view var, const std::string& hi) {
  return lo + " < " + std::string(var) + " < " + hi;
}

// Positions of the F_1 and F_2 ground levels relative to the F_0 ladder, read
// off the printed level chains: floor of the position in units of the
// ladder spacing, and the rank of its fractional part (0 = on an F_0 level;
// equal ranks coincide).
struct Slots {
  long s1;
  int r1;
  long s2;
  int r2;
};

Slots slots_of(const SpectrumType& t) {
  const long m = t.m;
  const long n = t.n;
  switch (t.family) {
    case Family::I1: return {n - 1, 1, n - 1, 2};
    case Family::I2: return {n - 1, 2, n, 1};
    case Family::Ia: return {n, 0, n, 1};
    case Family::Ib: return {n - 1, 1, n, 0};
    case Family::Iabc: return {n, 0, n, 0};
    case Family::II1: return {m + n - 2, 2, n - 1, 1};
    case Family::II2: return {m + n - 1, 1, n - 1, 2};
    case Family::IIa: return {m + n - 1, 0, n - 1, 1};
    case Family::IIb: return {m + n - 2, 1, n - 1, 0};
    case Family::IIc: return {m + n - 2, 1, n - 1, 1};
    case Family::IIabc: return {m + n - 1, 0, n - 1, 0};
    case Family::III1: return {m - 1, 1, -n, 2};
    case Family::III2: return {m - 1, 2, -n, 1};
    case Family::IIIa: return {m, 0, -n, 1};
    case Family::IIIb: return {m - 1, 1, -n, 0};
    case Family::IIIc: return {m - 1, 1, -n, 1};
    case Family::IIIabc: return {m, 0, -n, 0};
  }
  throw std::logic_error("unhandled spectrum family");
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& info : kFamilies) {
    if (info.family == family) return info.name;
  }
  throw std::logic_error("unhandled spectrum family");
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& info : kFamilies) {
    if (info.name == name) return info.family;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const auto& info : kFamilies) out.push_back(info.family);
    return out;
  }();
  return families;
}

SpectrumType make_type(Family family, int m, int n) {
  SpectrumType t{family, m, n};
  if (t.class_one()) t.m = 0;
  if (t.n < 1 || (!t.class_one() && t.m < 1)) {
    throw std::invalid_argument("spectrum type indices must be >= 1");
  }
  return t;
}

bool SpectrumType::class_one() const { return roman_of(family) == Roman::I; }

std::string SpectrumType::family_name() const { return std::string(cext::family_name(family)); }

std::string SpectrumType::label() const {
  std::ostringstream out;
  out << roman_text(roman_of(family));
  const auto suffix = degeneracy_suffix(family);
  if (suffix.empty()) {
    out << '.' << subclass_of(family);
    if (!class_one()) out << '.' << m;
    out << '.' << n;
  } else {
    if (!class_one()) out << '.' << m;
    out << '.' << n << '.' << suffix;
  }
  return out.str();
}

SpectrumType SpectrumType::parse(std::string_view label) {
  const auto parts = split_dots(label);
  if (parts.empty()) bad_label(label);
  Roman roman;
  if (parts[0] == "I") {
    roman = Roman::I;
  } else if (parts[0] == "II") {
    roman = Roman::II;
  } else if (parts[0] == "III") {
    roman = Roman::III;
  } else {
    bad_label(label);
  }
  const std::size_t expected = roman == Roman::I ? 3 : 4;
  if (parts.size() != expected) bad_label(label);

  const std::string_view last = parts.back();
  const bool degenerate = last == "a" || last == "b" || last == "c" || last == "abc";
  std::optional<Family> family;
  std::optional<int> m = 0;
  std::optional<int> n;
  if (degenerate) {
    family = family_for(roman, 0, last);
    n = positive_int(parts[expected - 2]);
    if (roman != Roman::I) m = positive_int(parts[1]);
  } else {
    const auto sub = positive_int(parts[1]);
    if (!sub || *sub > 2) bad_label(label);
    family = family_for(roman, *sub, "");
    n = positive_int(last);
    if (roman != Roman::I) m = positive_int(parts[2]);
  }
  if (!family || !m || !n) bad_label(label);
  return make_type(*family, *m, *n);
}

std::string SpectrumType::window() const {
  const long mm = m;
  const long nn = n;
  const std::string a0 = "alpha0";
  const std::string a1 = "alpha1";
  auto num = [](long v) { return std::to_string(v); };
  switch (family) {
    case Family::I1:
      return "-1 < alpha0 < 2 and " + open_interval(minus_alpha0(6 * nn - 8), a1, num(6 * nn - 4));
    case Family::I2:
      return "-1 < alpha0 < 2 and " + open_interval(num(6 * nn - 4), a1, minus_alpha0(6 * nn - 2));
    case Family::II1:
      return open_interval(num(6 * mm - 4), a0, num(6 * mm + 2)) + " and " +
             open_interval(num(6 * nn - 10), a1, minus_alpha0(6 * mm + 6 * nn - 8));
    case Family::II2:
      return open_interval(num(6 * mm - 4), a0, num(6 * mm + 2)) + " and " +
             open_interval(minus_alpha0(6 * mm + 6 * nn - 8), a1, num(6 * nn - 4));
    case Family::III1:
      return open_interval(num(6 * mm + 6 * nn - 10), a0, num(6 * mm + 6 * nn - 4)) + " and " +
             open_interval(minus_alpha0(6 * mm - 8), a1, num(2 - 6 * nn));
    case Family::III2:
      return open_interval(num(6 * mm + 6 * nn - 4), a0, num(6 * mm + 6 * nn + 2)) + " and " +
             open_interval(num(-4 - 6 * nn), a1, minus_alpha0(6 * mm - 2));
    case Family::Ia:
      return "-1 < alpha0 < 2 and alpha1 = " + minus_alpha0(6 * nn - 2);
    case Family::Ib:
      return "-1 < alpha0 < 2 and alpha1 = " + num(6 * nn - 4);
    case Family::IIa:
      return open_interval(num(6 * mm - 4), a0, num(6 * mm + 2)) + " and alpha1 = " +
             minus_alpha0(6 * mm + 6 * nn - 8);
    case Family::IIb:
      return open_interval(num(6 * mm - 4), a0, num(6 * mm + 2)) + " and alpha1 = " + num(6 * nn - 10);
    case Family::IIc:
      return "alpha0 = " + num(6 * mm - 4) + " and " + open_interval(num(6 * nn - 10), a1, num(6 * nn - 4));
    case Family::IIIa:
      return open_interval(num(6 * mm + 6 * nn - 4), a0, num(6 * mm + 6 * nn + 2)) + " and alpha1 = " +
             minus_alpha0(6 * mm - 2);
    case Family::IIIb:
      return open_interval(num(6 * mm + 6 * nn - 4), a0, num(6 * mm + 6 * nn + 2)) + " and alpha1 = " +
             num(-4 - 6 * nn);
    case Family::IIIc:
      return "alpha0 = " + num(6 * mm + 6 * nn - 4) + " and " + open_interval(num(-4 - 6 * nn), a1, num(2 - 6 * nn));
    case Family::Iabc:
      return "alpha0 = 2 and alpha1 = " + num(6 * nn - 4);
    case Family::IIabc:
      return "alpha0 = " + num(6 * mm + 2) + " and alpha1 = " + num(6 * nn - 10);
    case Family::IIIabc:
      return "alpha0 = " + num(6 * mm + 6 * nn + 2) + " and alpha1 = " + num(-4 - 6 * nn);
  }
  throw std::logic_error("unhandled spectrum family");
}

bool in_window(const SpectrumType& t, const Rational& a0, const Rational& a1) {
  if (t.n < 1 || (!t.class_one() && t.m < 1)) return false;
  const Rational m(t.m);
  const Rational n(t.n);
  const Rational six(6);
  auto between = [](const Rational& lo, const Rational& x, const Rational& hi) { return lo < x && x < hi; };
  const bool class_one_a0 = between(Rational(-1), a0, Rational(2));

  switch (t.family) {
    case Family::I1:
      return class_one_a0 && between(six * n - a0 - 8, a1, six * n - 4);
    case Family::I2:
      return class_one_a0 && between(six * n - 4, a1, six * n - a0 - 2);
    case Family::II1:
      return between(six * m - 4, a0, six * m + 2) && between(six * n - 10, a1, six * m + six * n - a0 - 8);
    case Family::II2:
      return between(six * m - 4, a0, six * m + 2) && between(six * m + six * n - a0 - 8, a1, six * n - 4);
    case Family::III1:
      return between(six * m + six * n - 10, a0, six * m + six * n - 4) && between(six * m - a0 - 8, a1, 2 - six * n);
    case Family::III2:
      return between(six * m + six * n - 4, a0, six * m + six * n + 2) && between(-4 - six * n, a1, six * m - a0 - 2);
    case Family::Ia:
      return class_one_a0 && a1 == six * n - a0 - 2;
    case Family::Ib:
      return class_one_a0 && a1 == six * n - 4;
    case Family::IIa:
      return between(six * m - 4, a0, six * m + 2) && a1 == six * m + six * n - a0 - 8;
    case Family::IIb:
      return between(six * m - 4, a0, six * m + 2) && a1 == six * n - 10;
    case Family::IIc:
      return a0 == six * m - 4 && between(six * n - 10, a1, six * n - 4);
    case Family::IIIa:
      return between(six * m + six * n - 4, a0, six * m + six * n + 2) && a1 == six * m - a0 - 2;
    case Family::IIIb:
      return between(six * m + six * n - 4, a0, six * m + six * n + 2) && a1 == -4 - six * n;
    case Family::IIIc:
      return a0 == six * m + six * n - 4 && between(-4 - six * n, a1, 2 - six * n);
    case Family::Iabc:
      return a0 == Rational(2) && a1 == six * n - 4;
    case Family::IIabc:
      return a0 == six * m + 2 && a1 == six * n - 10;
    case Family::IIIabc:
      return a0 == six * m + six * n + 2 && a1 == -4 - six * n;
  }
  return false;
}

SpectrumType classify3(const AlgebraParams& p) {
  if (p.lambda() != 3) throw UnsupportedLambda(p.lambda(), "named spectrum types exist only for C_3");
  if (!p.admissible()) throw InadmissibleParams("parameters outside the Fock-space domain");

  const Rational& a0 = p.alpha(0);
  const Rational& a1 = p.alpha(1);
  // Ground levels of F_1 and F_2 measured from E_0, in units of the ladder
  // spacing 3: x1 = (E_1 - E_0)/3, x2 = (E_2 - E_0)/3, y = x1 - x2.
  const Rational x1 = (a0 + a1 + 2) / Rational(6);
  const Rational x2 = (a1 + 4) / Rational(6);
  const Rational y = (a0 - 2) / Rational(6);
  auto idx = [](std::int64_t v) { return static_cast<int>(v); };

  SpectrumType t;
  if (y.sign() < 0) {
    // class (I): E_0 < E_1 < E_2
    const int n = idx(x1.ceil());
    if (x1.is_integer()) {
      t = make_type(Family::Ia, 0, n);
    } else if (x2.is_integer()) {
      t = make_type(Family::Ib, 0, n);
    } else {
      t = make_type(x2 < Rational(n) ? Family::I1 : Family::I2, 0, n);
    }
  } else if (y.sign() == 0) {
    // intermediate (I-II): E_1 = E_2
    if (x2.is_integer()) {
      t = make_type(Family::Iabc, 0, idx(x2.floor()));
    } else {
      t = make_type(Family::IIc, 1, idx(x2.floor()) + 1);
    }
  } else if (x2.sign() >= 0) {
    // class (II), and (II-III) on x2 = 0
    const int n = idx(x2.floor()) + 1;
    if (y.is_integer() && x2.is_integer()) {
      t = make_type(Family::IIabc, idx(y.floor()), n);
    } else if (y.is_integer()) {
      t = make_type(Family::IIc, idx(y.floor()) + 1, n);
    } else if (x2.is_integer()) {
      t = make_type(Family::IIb, idx(y.ceil()), n);
    } else {
      const int m = idx(y.ceil());
      const Rational pivot(m + n - 1);
      if (x1 == pivot) {
        t = make_type(Family::IIa, m, n);
      } else {
        t = make_type(x1 < pivot ? Family::II1 : Family::II2, m, n);
      }
    }
  } else {
    // class (III): E_2 < E_0 < E_1
    const int n = idx((-x2).ceil());
    const int m = idx(x1.ceil());
    if (x1.is_integer() && x2.is_integer()) {
      t = make_type(Family::IIIabc, m, n);
    } else if (x1.is_integer()) {
      t = make_type(Family::IIIa, m, n);
    } else if (x2.is_integer()) {
      t = make_type(Family::IIIb, m, n);
    } else {
      const Rational pivot(m + n - 1);
      if (y == pivot) {
        t = make_type(Family::IIIc, m, n);
      } else {
        t = make_type(y < pivot ? Family::III1 : Family::III2, m, n);
      }
    }
  }

  if (!in_window(t, a0, a1)) {
    throw ClassificationGap("alpha = (" + a0.str() + ", " + a1.str() + ") decided as " + t.label() +
                            " but lies outside its window " + t.window());
  }
  return t;
}

PatternDescriptor expected_prefix(const SpectrumType& t, long count) {
  if (count < 1) throw std::invalid_argument("prefix length must be >= 1");
  const Slots slots = slots_of(t);
  const std::array<long, 3> shift{0, slots.s1, slots.s2};
  const std::array<int, 3> rank{0, slots.r1, slots.r2};

  // Level 3k + mu sits in period k + shift[mu] at sub-position rank[mu].
  std::map<std::pair<long, int>, std::vector<long>> buckets;
  for (long index = 0; index < count; ++index) {
    const auto mu = static_cast<std::size_t>(index % 3);
    buckets[{index / 3 + shift[mu], rank[mu]}].push_back(index);
  }
  PatternDescriptor d;
  d.groups.reserve(buckets.size());
  for (auto& [key, members] : buckets) d.groups.push_back(std::move(members));
  return d;
}

}  // namespace cext
