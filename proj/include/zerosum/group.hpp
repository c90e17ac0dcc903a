#pragma once

// Finite groups with index-coded elements: cyclic, products of cyclics,
// dihedral, dicyclic and metacyclic C_q x|_s C_m.
//
// Element indexing is fixed and shows up in every serialized artifact:
//   C:n        y^k                      -> k
//   CxC:n1,..  g1^a1 * g2^a2 * ...      -> a1 + n1*(a2 + n2*(...))
//   D:n        x^e y^k, k in [0,n)      -> e*n + k
//   Q:n        x^e y^k, k in [0,2n)     -> e*2n + k
//   M:q,m,s    x^i y^j                  -> i*q + j
// so the cyclic subgroup <y> always comes first in y-power order.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zerosum/error.hpp"

namespace zerosum {

enum class GroupKind { Cyclic, Dihedral, Dicyclic, Metacyclic, ProductOfCyclics };

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
  }
  return out;
}

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline bool parse_int(std::string_view token, long long& out) {
  if (token.empty()) return false;
  if (token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

/// Multiplicative order of s modulo q, or 0 when s is not a unit.
inline std::uint64_t multiplicative_order(std::uint64_t s, std::uint64_t q) {
  s %= q;
  if (q < 2 || std::gcd(s, q) != 1) return 0;
  std::uint64_t value = s;
  for (std::uint64_t k = 1; k <= q; ++k) {
    if (value == 1) return k;
    value = value * s % q;
  }
  return 0;
}

inline long long floor_mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace detail

/// Parameters of one of the supported group families.
struct GroupSpec {
  GroupKind kind = GroupKind::Cyclic;
  std::vector<std::uint32_t> params;

  static GroupSpec cyclic(std::uint32_t n) { return {GroupKind::Cyclic, {n}}; }
  static GroupSpec dihedral(std::uint32_t n) { return {GroupKind::Dihedral, {n}}; }
  static GroupSpec dicyclic(std::uint32_t n) { return {GroupKind::Dicyclic, {n}}; }
  static GroupSpec metacyclic(std::uint32_t q, std::uint32_t m, std::uint32_t s) {
    return {GroupKind::Metacyclic, {q, m, s}};
  }
  static GroupSpec product(std::vector<std::uint32_t> factors) {
    return {GroupKind::ProductOfCyclics, std::move(factors)};
  }

  /// Canonical text form, e.g. `D:4`, `M:5,4,2`, `CxC:2,2,4`.
  std::string to_string() const {
    std::string out;
    switch (kind) {
      case GroupKind::Cyclic: out = "C:"; break;
      case GroupKind::Dihedral: out = "D:"; break;
      case GroupKind::Dicyclic: out = "Q:"; break;
      case GroupKind::Metacyclic: out = "M:"; break;
      case GroupKind::ProductOfCyclics: out = "CxC:"; break;
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(params[i]);
    }
    return out;
  }

  /// Parses `C:n`, `D:n`, `Q:n`, `M:q,m,s` or `CxC:n1,n2,...`. Whitespace is ignored.
  /// Only the syntax and arity are checked here; Group::build validates the values.
  static GroupSpec parse(std::string_view text) {
    const std::string clean = detail::strip_spaces(text);
    const auto colon = clean.find(':');
    if (colon == std::string::npos) {
      throw ParseError("group spec '" + clean + "': expected '<kind>:<params>'");
    }
    const std::string kind_token = clean.substr(0, colon);
    GroupSpec spec;
    std::size_t arity = 1;
    if (kind_token == "C") {
      spec.kind = GroupKind::Cyclic;
    } else if (kind_token == "D") {
      spec.kind = GroupKind::Dihedral;
    } else if (kind_token == "Q") {
      spec.kind = GroupKind::Dicyclic;
    } else if (kind_token == "M") {
      spec.kind = GroupKind::Metacyclic;
      arity = 3;
    } else if (kind_token == "CxC") {
      spec.kind = GroupKind::ProductOfCyclics;
      arity = 0;
    } else {
      throw ParseError("group spec: unknown kind '" + kind_token + "' (expected C, D, Q, M or CxC)");
    }
    for (const auto& token : detail::split(std::string_view(clean).substr(colon + 1), ',')) {
      long long value = 0;
      if (!detail::parse_int(token, value) || value < 1 || value > (1LL << 30)) {
        throw ParseError("group spec: bad parameter '" + token + "' (expected a positive integer)");
      }
      spec.params.push_back(static_cast<std::uint32_t>(value));
    }
    if (arity != 0 && spec.params.size() != arity) {
      throw ParseError("group spec '" + clean + "': kind " + kind_token + " takes " + std::to_string(arity) +
                       " parameter(s), got " + std::to_string(spec.params.size()));
    }
    return spec;
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Element of a Group, identified by its index in [0, |G|).
struct Element {
  std::uint32_t index = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// The two cosets of <y> in a dihedral or dicyclic group.
enum class Coset { H, N };

/// Immutable finite group. Construct through Group::build.
class Group {
 public:
  /// Largest order for which the full multiplication table is kept.
  static constexpr std::uint32_t kTableLimit = 4096;
  /// Largest order for which associativity is checked on every triple.
  static constexpr std::uint32_t kExhaustiveAssociativityLimit = 256;
  static constexpr std::uint32_t kRandomAssociativityTriples = 100000;
  static constexpr std::uint32_t kMaxOrder = 1U << 20;

  static std::shared_ptr<const Group> build(const GroupSpec& spec) {
    return std::shared_ptr<const Group>(new Group(spec));
  }
  static std::shared_ptr<const Group> build(std::string_view spec_text) {
    return build(GroupSpec::parse(spec_text));
  }

  const GroupSpec& spec() const noexcept { return spec_; }
  GroupKind kind() const noexcept { return spec_.kind; }
  std::uint32_t order() const noexcept { return order_; }
  Element identity() const noexcept { return Element{0}; }
  std::uint32_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const noexcept { return abelian_; }
  bool has_table() const noexcept { return !table_.empty(); }

  /// The `n` of D:n and Q:n, `q` of M:q,m,s, or `n` of C:n.
  std::uint32_t n() const noexcept { return spec_.params.front(); }

  /// Order of the cyclic subgroup H = <y> for dihedral, dicyclic and metacyclic groups.
  std::uint32_t h_order() const noexcept { return h_order_; }

  Element mul(Element a, Element b) const {
    if (!table_.empty()) return Element{table_[std::size_t(a.index) * order_ + b.index]};
    return mul_closed_form(a, b);
  }

  /// Exponent arithmetic on the word forms; agrees with the table on every pair.
  Element mul_closed_form(Element a, Element b) const {
    const std::uint32_t ia = a.index;
    const std::uint32_t ib = b.index;
    switch (spec_.kind) {
      case GroupKind::Cyclic:
        return Element{(ia + ib) % order_};
      case GroupKind::ProductOfCyclics: {
        std::uint32_t out = 0;
        std::uint32_t stride = 1;
        std::uint32_t ra = ia;
        std::uint32_t rb = ib;
        for (std::uint32_t f : spec_.params) {
          out += ((ra % f + rb % f) % f) * stride;
          ra /= f;
          rb /= f;
          stride *= f;
        }
        return Element{out};
      }
      case GroupKind::Dihedral:
      case GroupKind::Dicyclic: {
        const std::uint32_t h = h_order_;
        const std::uint32_t ea = ia / h;
        const std::uint32_t ka = ia % h;
        const std::uint32_t eb = ib / h;
        const std::uint32_t kb = ib % h;
        // y^k x = x y^-k, and x^2 = y^n in the dicyclic case.
        std::uint32_t k = (eb ? (h - ka) % h : ka) + kb;
        if (ea && eb && spec_.kind == GroupKind::Dicyclic) k += n();
        return Element{((ea + eb) % 2) * h + k % h};
      }
      case GroupKind::Metacyclic: {
        const std::uint32_t q = h_order_;
        const std::uint32_t m = spec_.params[1];
        const std::uint32_t xa = ia / q;
        const std::uint32_t ya = ia % q;
        const std::uint32_t xb = ib / q;
        const std::uint32_t yb = ib % q;
        // y^j x^k = x^k y^(j s^k)
        const std::uint64_t twisted = std::uint64_t(ya) * s_powers_[xb] % q;
        return Element{((xa + xb) % m) * q + std::uint32_t((twisted + yb) % q)};
      }
    }
    return Element{0};
  }

  Element inverse(Element a) const { return Element{inverse_[a.index]}; }

  /// Least k >= 1 with a^k = 1.
  std::uint32_t element_order(Element a) const { return orders_[a.index]; }

  Element power(Element a, long long k) const {
    const long long ord = element_order(a);
    long long e = detail::floor_mod(k, ord);
    Element acc = identity();
    Element base = a;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  /// Canonical word, e.g. `1`, `y^3`, `x*y^2`, `x^2*y`, `g1*g2^3`.
  const std::string& name(Element a) const { return names_[a.index]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Element x^e y^k of a dihedral, dicyclic or metacyclic group.
  Element word(std::uint32_t x_power, long long y_power) const {
    require_xy("word");
    const std::uint32_t x_order = spec_.kind == GroupKind::Metacyclic ? spec_.params[1] : 2;
    return Element{(x_power % x_order) * h_order_ + std::uint32_t(detail::floor_mod(y_power, h_order_))};
  }
  Element y_power(long long k) const {
    if (spec_.kind == GroupKind::Cyclic) return Element{std::uint32_t(detail::floor_mod(k, order_))};
    return word(0, k);
  }

  /// Which coset of <y> the element lies in (dihedral and dicyclic only).
  Coset coset(Element a) const {
    if (spec_.kind != GroupKind::Dihedral && spec_.kind != GroupKind::Dicyclic) {
      throw GroupError("coset split is only defined for dihedral and dicyclic groups, not " + spec_.to_string());
    }
    return a.index < h_order_ ? Coset::H : Coset::N;
  }

  /// Evaluates a word such as `x*y^3`, `y^-1*x` or `g1^2*g2`; `1` and `e` denote the identity.
  Element parse_element(std::string_view text) const {
    const std::string clean = detail::strip_spaces(text);
    if (clean.empty()) throw ParseError("empty element word");
    Element acc = identity();
    for (const auto& factor : detail::split(clean, '*')) {
      if (factor.empty()) throw ParseError("element word '" + clean + "': empty factor");
      const auto caret = factor.find('^');
      const std::string base = factor.substr(0, caret);
      long long exp = 1;
      if (caret != std::string::npos && !detail::parse_int(std::string_view(factor).substr(caret + 1), exp)) {
        throw ParseError("element word '" + clean + "': bad exponent in '" + factor + "'");
      }
      Element g = identity();
      if (base == "1" || base == "e") {
        g = identity();
      } else if (auto gen = generator(base)) {
        g = *gen;
      } else {
        throw ParseError("element word '" + clean + "': unknown generator '" + base + "' for group " +
                         spec_.to_string());
      }
      acc = mul(acc, power(g, exp));
    }
    return acc;
  }

  /// Named generator (`x`, `y`, `g1`, ...) if the group has one by that name.
  std::optional<Element> generator(std::string_view name) const {
    switch (spec_.kind) {
      case GroupKind::Cyclic:
        if (name == "y") return Element{order_ > 1 ? 1U : 0U};
        break;
      case GroupKind::Dihedral:
      case GroupKind::Dicyclic:
      case GroupKind::Metacyclic:
        if (name == "y") return Element{1};
        if (name == "x") return Element{h_order_};
        break;
      case GroupKind::ProductOfCyclics: {
        if (name.size() < 2 || name.front() != 'g') break;
        long long idx = 0;
        if (!detail::parse_int(name.substr(1), idx) || idx < 1 || idx > static_cast<long long>(spec_.params.size())) {
          break;
        }
        std::uint32_t stride = 1;
        for (long long i = 1; i < idx; ++i) stride *= spec_.params[i - 1];
        return Element{spec_.params[idx - 1] > 1 ? stride : 0U};
      }
    }
    return std::nullopt;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out(order_);
    for (std::uint32_t i = 0; i < order_; ++i) out[i] = Element{i};
    return out;
  }

  /// Center of the group, computed from the multiplication.
  std::vector<Element> center() const {
    std::vector<Element> out;
    for (std::uint32_t a = 0; a < order_; ++a) {
      bool central = true;
      for (std::uint32_t b = 0; b < order_ && central; ++b) {
        central = mul(Element{a}, Element{b}) == mul(Element{b}, Element{a});
      }
      if (central) out.push_back(Element{a});
    }
    return out;
  }

  /// Row-major multiplication table (empty above kTableLimit).
  std::span<const std::uint32_t> table() const noexcept { return table_; }

  /// How associativity was established at build time.
  bool associativity_exhaustive() const noexcept { return associativity_exhaustive_; }

 private:
  explicit Group(const GroupSpec& spec) : spec_(spec) {
    validate_spec();
    compute_order();
    build_names();
    if (order_ <= kTableLimit) build_table();
    compute_inverses();
    verify();
    compute_orders();
  }

  void require_xy(const char* what) const {
    if (spec_.kind != GroupKind::Dihedral && spec_.kind != GroupKind::Dicyclic &&
        spec_.kind != GroupKind::Metacyclic) {
      throw GroupError(std::string(what) + " needs a group generated by x and y, not " + spec_.to_string());
    }
  }

  void validate_spec() {
    const auto& p = spec_.params;
    const std::string tag = spec_.to_string();
    auto need = [&](bool ok, const std::string& msg) {
      if (!ok) throw GroupError(tag + ": " + msg);
    };
    switch (spec_.kind) {
      case GroupKind::Cyclic:
        need(p.size() == 1 && p[0] >= 1, "cyclic group needs n >= 1");
        break;
      case GroupKind::Dihedral:
        need(p.size() == 1 && p[0] >= 2, "dihedral group needs n >= 2");
        break;
      case GroupKind::Dicyclic:
        need(p.size() == 1 && p[0] >= 2, "dicyclic group needs n >= 2");
        break;
      case GroupKind::Metacyclic: {
        need(p.size() == 3, "metacyclic group needs parameters q,m,s");
        need(detail::is_prime(p[0]), "relation y^q = 1 needs q prime, got q = " + std::to_string(p[0]));
        need(p[1] >= 2, "relation x^m = 1 needs m >= 2");
        const auto ord = detail::multiplicative_order(p[2], p[0]);
        need(ord == p[1], "relation ord_q(s) = m violated: ord_" + std::to_string(p[0]) + "(" + std::to_string(p[2]) +
                              ") = " + std::to_string(ord) + ", m = " + std::to_string(p[1]));
        break;
      }
      case GroupKind::ProductOfCyclics:
        need(!p.empty(), "product of cyclics needs at least one factor");
        for (auto f : p) need(f >= 1, "every cyclic factor needs n_i >= 1");
        break;
    }
  }

  void compute_order() {
    std::uint64_t order = 1;
    switch (spec_.kind) {
      case GroupKind::Cyclic: order = n(); h_order_ = n(); break;
      case GroupKind::Dihedral: order = 2ULL * n(); h_order_ = n(); break;
      case GroupKind::Dicyclic: order = 4ULL * n(); h_order_ = 2 * n(); break;
      case GroupKind::Metacyclic: order = std::uint64_t(spec_.params[0]) * spec_.params[1]; h_order_ = spec_.params[0]; break;
      case GroupKind::ProductOfCyclics:
        for (auto f : spec_.params) {
          order *= f;
          if (order > kMaxOrder) break;
        }
        h_order_ = 0;
        break;
    }
    if (order > kMaxOrder) {
      throw GroupError(spec_.to_string() + ": order exceeds the supported maximum " + std::to_string(kMaxOrder));
    }
    order_ = static_cast<std::uint32_t>(order);
    if (spec_.kind == GroupKind::Metacyclic) {
      s_powers_.resize(spec_.params[1]);
      for (std::uint32_t k = 0; k < spec_.params[1]; ++k) {
        s_powers_[k] = std::uint32_t(detail::mod_pow(spec_.params[2], k, spec_.params[0]));
      }
    }
    abelian_ = spec_.kind == GroupKind::Cyclic || spec_.kind == GroupKind::ProductOfCyclics ||
               (spec_.kind == GroupKind::Dihedral && n() == 2);
  }

  static std::string power_name(const std::string& base, std::uint32_t k) {
    return k == 1 ? base : base + "^" + std::to_string(k);
  }

  void build_names() {
    names_.resize(order_);
    for (std::uint32_t i = 0; i < order_; ++i) {
      std::string out;
      auto append = [&out](const std::string& factor) {
        if (!out.empty()) out += '*';
        out += factor;
      };
      switch (spec_.kind) {
        case GroupKind::Cyclic:
          if (i > 0) append(power_name("y", i));
          break;
        case GroupKind::ProductOfCyclics: {
          std::uint32_t rest = i;
          for (std::size_t f = 0; f < spec_.params.size(); ++f) {
            const std::uint32_t digit = rest % spec_.params[f];
            rest /= spec_.params[f];
            if (digit > 0) append(power_name("g" + std::to_string(f + 1), digit));
          }
          break;
        }
        case GroupKind::Dihedral:
        case GroupKind::Dicyclic:
        case GroupKind::Metacyclic: {
          const std::uint32_t xp = i / h_order_;
          const std::uint32_t yp = i % h_order_;
          if (xp > 0) append(power_name("x", xp));
          if (yp > 0) append(power_name("y", yp));
          break;
        }
      }
      names_[i] = out.empty() ? "1" : out;
    }
  }

  // Faithful permutation representation of x and y acting on the right
  // (z . (ab) = (z . a) . b). The table built from it does not use the
  // closed-form product, so comparing the two is a genuine check.
  //   D:n  on {0,1} x Z_n:   (0,k).y = (0,k+1), (1,k).y = (1,k-1),
  //                          (0,k).x = (1,k),   (1,k).x = (0,k)
  //   Q:n  on {0,1} x Z_2n:  same, except (1,k).x = (0,k+n)
  //   M    on Z_q:           z.y = z + 1,  z.x = s z
  using Perm = std::vector<std::uint32_t>;

  std::pair<Perm, Perm> generator_permutations() const {
    Perm px;
    Perm py;
    switch (spec_.kind) {
      case GroupKind::Dihedral:
      case GroupKind::Dicyclic: {
        const std::uint32_t nn = spec_.kind == GroupKind::Dicyclic ? n() : 0;
        const std::uint32_t h = h_order_;
        px.resize(2 * h);
        py.resize(2 * h);
        for (std::uint32_t k = 0; k < h; ++k) {
          py[k] = (k + 1) % h;
          py[h + k] = h + (k + h - 1) % h;
          px[k] = h + k;
          px[h + k] = (k + nn) % h;
        }
        break;
      }
      case GroupKind::Metacyclic: {
        const std::uint32_t q = spec_.params[0];
        const std::uint32_t s = spec_.params[2] % q;
        px.resize(q);
        py.resize(q);
        for (std::uint32_t z = 0; z < q; ++z) {
          py[z] = (z + 1) % q;
          px[z] = std::uint32_t(std::uint64_t(z) * s % q);
        }
        break;
      }
      default:
        break;
    }
    return {px, py};
  }

  static Perm then(const Perm& first, const Perm& second) {
    Perm out(first.size());
    for (std::size_t z = 0; z < first.size(); ++z) out[z] = second[first[z]];
    return out;
  }

  void build_table() {
    table_.assign(std::size_t(order_) * order_, 0);
    if (spec_.kind == GroupKind::Cyclic || spec_.kind == GroupKind::ProductOfCyclics) {
      for (std::uint32_t a = 0; a < order_; ++a) {
        for (std::uint32_t b = 0; b < order_; ++b) {
          table_[std::size_t(a) * order_ + b] = mul_closed_form(Element{a}, Element{b}).index;
        }
      }
      return;
    }
    const auto [px, py] = generator_permutations();
    const std::uint32_t x_order = spec_.kind == GroupKind::Metacyclic ? spec_.params[1] : 2;
    const std::size_t degree = px.size();
    std::vector<Perm> perms(order_);
    Perm identity_perm(degree);
    std::iota(identity_perm.begin(), identity_perm.end(), 0U);
    Perm x_part = identity_perm;
    for (std::uint32_t xp = 0; xp < x_order; ++xp) {
      Perm current = x_part;
      for (std::uint32_t yp = 0; yp < h_order_; ++yp) {
        perms[xp * h_order_ + yp] = current;
        current = then(current, py);
      }
      x_part = then(x_part, px);
    }
    // D and Q act regularly, so the image of point 0 identifies a permutation;
    // z -> s^i z + j on Z_q needs the images of 0 and 1.
    const std::size_t base = spec_.kind == GroupKind::Metacyclic ? 2 : 1;
    auto key = [&](std::uint32_t i0, std::uint32_t i1) { return std::uint64_t(i0) * degree + (base == 2 ? i1 : 0); };
    std::unordered_map<std::uint64_t, std::uint32_t> index_of;
    index_of.reserve(order_);
    for (std::uint32_t idx = 0; idx < order_; ++idx) {
      const Perm& p = perms[idx];
      const auto [it, fresh] = index_of.emplace(key(p[0], base == 2 ? p[1] : 0), idx);
      if (!fresh) {
        throw GroupError(spec_.to_string() + ": words " + names_[it->second] + " and " + names_[idx] +
                         " coincide; the presentation does not give the expected order");
      }
    }
    // Closure under right multiplication by the generators makes the word set
    // the whole permutation group, so base images then determine every product.
    for (std::uint32_t idx = 0; idx < order_; ++idx) {
      for (const Perm* gen : {&px, &py}) {
        const Perm next = then(perms[idx], *gen);
        auto it = index_of.find(key(next[0], base == 2 ? next[1] : 0));
        if (it == index_of.end() || perms[it->second] != next) {
          throw GroupError(spec_.to_string() + ": product of " + names_[idx] + " with a generator leaves the word set");
        }
      }
    }
    for (std::uint32_t a = 0; a < order_; ++a) {
      const Perm& pa = perms[a];
      for (std::uint32_t b = 0; b < order_; ++b) {
        const Perm& pb = perms[b];
        table_[std::size_t(a) * order_ + b] = index_of.at(key(pb[pa[0]], base == 2 ? pb[pa[1]] : 0));
      }
    }
  }

  Element closed_form_inverse(Element a) const {
    const std::uint32_t i = a.index;
    switch (spec_.kind) {
      case GroupKind::Cyclic:
        return Element{(order_ - i) % order_};
      case GroupKind::ProductOfCyclics: {
        std::uint32_t out = 0;
        std::uint32_t stride = 1;
        std::uint32_t rest = i;
        for (std::uint32_t f : spec_.params) {
          out += ((f - rest % f) % f) * stride;
          rest /= f;
          stride *= f;
        }
        return Element{out};
      }
      case GroupKind::Dihedral:
        return i < h_order_ ? Element{(h_order_ - i) % h_order_} : a;
      case GroupKind::Dicyclic:
        // (x y^k)^-1 = x y^(k+n)
        return i < h_order_ ? Element{(h_order_ - i) % h_order_} : Element{h_order_ + (i - h_order_ + n()) % h_order_};
      case GroupKind::Metacyclic: {
        const std::uint32_t q = h_order_;
        const std::uint32_t m = spec_.params[1];
        const std::uint32_t xi = (m - i / q) % m;
        const std::uint64_t yj = std::uint64_t(i % q) * s_powers_[xi] % q;
        return Element{xi * q + std::uint32_t((q - yj) % q)};
      }
    }
    return Element{0};
  }

  void compute_inverses() {
    inverse_.resize(order_);
    for (std::uint32_t a = 0; a < order_; ++a) inverse_[a] = closed_form_inverse(Element{a}).index;
  }

  void fail(const std::string& relation) const {
    throw GroupError(spec_.to_string() + ": verification failed: " + relation);
  }

  void verify() {
    const Element e = identity();
    if (has_table()) {
      for (std::uint32_t a = 0; a < order_; ++a) {
        for (std::uint32_t b = 0; b < order_; ++b) {
          if (mul_closed_form(Element{a}, Element{b}) != mul(Element{a}, Element{b})) {
            fail("closed-form product " + names_[a] + " * " + names_[b] + " disagrees with the table");
          }
        }
      }
    }
    for (std::uint32_t a = 0; a < order_; ++a) {
      const Element ea{a};
      if (mul(e, ea) != ea || mul(ea, e) != ea) fail("identity law at " + names_[a]);
      if (mul(ea, inverse(ea)) != e || mul(inverse(ea), ea) != e) fail("inverse law at " + names_[a]);
    }
    if (order_ <= kExhaustiveAssociativityLimit) {
      associativity_exhaustive_ = true;
      for (std::uint32_t a = 0; a < order_; ++a) {
        for (std::uint32_t b = 0; b < order_; ++b) {
          const Element ab = mul(Element{a}, Element{b});
          for (std::uint32_t c = 0; c < order_; ++c) {
            if (mul(ab, Element{c}) != mul(Element{a}, mul(Element{b}, Element{c}))) {
              fail("associativity at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
            }
          }
        }
      }
    } else {
      std::mt19937_64 rng(0x5eed0fa55ULL ^ order_);
      std::uniform_int_distribution<std::uint32_t> pick(0, order_ - 1);
      for (std::uint32_t t = 0; t < kRandomAssociativityTriples; ++t) {
        const Element a{pick(rng)};
        const Element b{pick(rng)};
        const Element c{pick(rng)};
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          fail("associativity at (" + names_[a.index] + ", " + names_[b.index] + ", " + names_[c.index] + ")");
        }
      }
    }
    verify_relations();
  }

  void verify_relations() const {
    if (spec_.kind == GroupKind::Cyclic || spec_.kind == GroupKind::ProductOfCyclics) return;
    const Element x{h_order_};
    const Element y{1};
    const Element e = identity();
    auto pow_raw = [this](Element g, std::uint64_t k) {
      Element acc = identity();
      for (std::uint64_t i = 0; i < k; ++i) acc = mul(acc, g);
      return acc;
    };
    const Element y_inv = pow_raw(y, h_order_ - 1);
    switch (spec_.kind) {
      case GroupKind::Dihedral:
        if (mul(x, x) != e) fail("x^2 = 1");
        if (pow_raw(y, n()) != e) fail("y^n = 1");
        if (mul(y, x) != mul(x, y_inv)) fail("yx = xy^-1");
        break;
      case GroupKind::Dicyclic:
        if (mul(x, x) != pow_raw(y, n())) fail("x^2 = y^n");
        if (pow_raw(y, 2ULL * n()) != e) fail("y^2n = 1");
        if (mul(y, x) != mul(x, y_inv)) fail("yx = xy^-1");
        break;
      case GroupKind::Metacyclic:
        if (pow_raw(x, spec_.params[1]) != e) fail("x^m = 1");
        if (pow_raw(y, spec_.params[0]) != e) fail("y^q = 1");
        if (mul(y, x) != mul(x, pow_raw(y, spec_.params[2]))) fail("yx = xy^s");
        break;
      default:
        break;
    }
  }

  std::uint32_t closed_form_order(std::uint32_t i) const {
    auto cyclic_order = [](std::uint32_t k, std::uint32_t n) { return n / std::gcd(k, n); };
    switch (spec_.kind) {
      case GroupKind::Cyclic:
        return cyclic_order(i, order_);
      case GroupKind::ProductOfCyclics: {
        std::uint32_t out = 1;
        for (std::uint32_t f : spec_.params) {
          out = std::lcm(out, cyclic_order(i % f, f));
          i /= f;
        }
        return out;
      }
      case GroupKind::Dihedral:
        return i < h_order_ ? cyclic_order(i, h_order_) : 2;
      case GroupKind::Dicyclic:
        return i < h_order_ ? cyclic_order(i, h_order_) : 4;
      case GroupKind::Metacyclic: {
        // For i != 0, s^i != 1 and the y-parts of (x^i y^j)^ord(x^i) form a
        // full geometric series in s^i, which vanishes mod q.
        const std::uint32_t xi = i / h_order_;
        return xi == 0 ? cyclic_order(i % h_order_, h_order_) : cyclic_order(xi, spec_.params[1]);
      }
    }
    return 1;
  }

  void compute_orders() {
    orders_.resize(order_);
    std::uint64_t lcm = 1;
    for (std::uint32_t a = 0; a < order_; ++a) {
      orders_[a] = closed_form_order(a);
      lcm = std::lcm(lcm, std::uint64_t(orders_[a]));
    }
    exponent_ = static_cast<std::uint32_t>(lcm);
    if (!has_table()) return;
    for (std::uint32_t a = 0; a < order_; ++a) {
      Element acc{a};
      std::uint32_t k = 1;
      while (acc != identity()) {
        acc = mul(acc, Element{a});
        ++k;
      }
      if (k != orders_[a]) fail("order of " + names_[a] + " is " + std::to_string(k));
    }
  }

  GroupSpec spec_;
  std::uint32_t order_ = 1;
  std::uint32_t h_order_ = 0;
  std::uint32_t exponent_ = 1;
  bool abelian_ = true;
  bool associativity_exhaustive_ = false;
  std::vector<std::uint32_t> s_powers_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const Group>;

inline Element mul(const Group& g, Element a, Element b) { return g.mul(a, b); }
inline Element inverse(const Group& g, Element a) { return g.inverse(a); }
inline std::uint32_t element_order(const Group& g, Element a) { return g.element_order(a); }
inline std::uint32_t exponent(const Group& g) { return g.exponent(); }
inline Coset coset_split(const Group& g, Element a) { return g.coset(a); }

/// Quaternion names for Q:2 under x -> i, y -> j, with the orientation i*j = k.
inline std::vector<std::string> quaternion_names(const Group& g) {
  if (g.kind() != GroupKind::Dicyclic || g.n() != 2) {
    throw GroupError("quaternion names need Q:2, got " + g.spec().to_string());
  }
  // Basis words 1, y, x, x*y map to e, j, i, k; y^2 is the central -e.
  const Element minus_one = g.y_power(2);
  std::vector<std::string> names(g.order());
  const std::pair<Element, std::string> basis[] = {
      {g.identity(), "e"}, {g.y_power(1), "j"}, {g.word(1, 0), "i"}, {g.word(1, 1), "k"}};
  for (const auto& [element, label] : basis) {
    names[element.index] = label;
    names[g.mul(element, minus_one).index] = "-" + label;
  }
  return names;
}

/// The surjection Q_4n -> D_2n with kernel {1, y^n}, x -> x and y -> y.
class QuotientMap {
 public:
  explicit QuotientMap(std::uint32_t n)
      : source_(Group::build(GroupSpec::dicyclic(n))), target_(Group::build(GroupSpec::dihedral(n))) {
    image_.resize(source_->order());
    for (std::uint32_t i = 0; i < source_->order(); ++i) {
      const std::uint32_t x_power = i / source_->h_order();
      const std::uint32_t y_power = i % source_->h_order();
      image_[i] = target_->word(x_power, y_power);
    }
    for (std::uint32_t a = 0; a < source_->order(); ++a) {
      for (std::uint32_t b = 0; b < source_->order(); ++b) {
        const Element ab = source_->mul(Element{a}, Element{b});
        if ((*this)(ab) != target_->mul((*this)(Element{a}), (*this)(Element{b}))) {
          throw GroupError("quotient map Q:" + std::to_string(n) + " -> D:" + std::to_string(n) +
                           " is not a homomorphism at (" + source_->name(Element{a}) + ", " +
                           source_->name(Element{b}) + ")");
        }
      }
    }
  }

  Element operator()(Element a) const { return image_[a.index]; }

  const Group& source() const noexcept { return *source_; }
  const Group& target() const noexcept { return *target_; }

  std::vector<Element> kernel() const {
    std::vector<Element> out;
    for (std::uint32_t i = 0; i < image_.size(); ++i) {
      if (image_[i] == target_->identity()) out.push_back(Element{i});
    }
    return out;
  }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> image_;
};

inline QuotientMap quotient_map(std::uint32_t n) {
  if (n < 2) throw GroupError("quotient map needs n >= 2");
  return QuotientMap(n);
}

}  // namespace zerosum

template <>
struct std::hash<zerosum::Element> {
  std::size_t operator()(zerosum::Element e) const noexcept { return std::hash<std::uint32_t>{}(e.index); }
};
