#pragma once

#include <string>
#include <variant>
#include <vector>

#include "carrier.hpp"
#include "literals.hpp"

namespace flexmeadow {

// ---------------------------------------------------------------------------
// external: the external numbers themselves
// ---------------------------------------------------------------------------

/// External numbers with Minkowski arithmetic and the total inverse. No
/// error element; N(x) is the neutrix part.
struct ExternalModel {
  using value_type = ExtNum;

  GenConfig cfg;

  std::string name() const { return "external"; }
  ExtNum zero() const { return ext_zero(); }
  ExtNum one() const { return ext_one(); }
  ExtNum add(const ExtNum& x, const ExtNum& y) const { return e_add(x, y); }
  ExtNum mul(const ExtNum& x, const ExtNum& y) const { return e_mul(x, y); }
  ExtNum neg(const ExtNum& x) const { return e_neg(x); }
  ExtNum inv(const ExtNum& x) const { return e_inv(x); }
  ExtNum nfun(const ExtNum& x) const { return neutrix_part(x); }
  bool eq(const ExtNum& x, const ExtNum& y) const { return e_eq(x, y); }
  std::string print(const ExtNum& x) const { return print_ext(x); }
  ExtNum parse(const std::string& s) const { return parse_ext(s); }

  ExtNum sample(std::uint64_t seed, std::uint64_t index,
                std::uint64_t slot) const {
    SplitMix64 g(mix_stream(seed, index, slot));
    if (g.below(100) < static_cast<std::uint64_t>(cfg.special_percent)) {
      switch (g.below(5)) {
        case 0: return ext_zero();
        case 1: return ext_one();
        case 2: return ext_neutrix(Neutrix::infinitesimals());
        case 3: return ext_neutrix(Neutrix::limited());
        default: return ext_neutrix(Neutrix::full());
      }
    }
    PSeries precise;
    std::uint64_t nterms = g.below(3);  // 0, 1, or 2 monomials
    for (std::uint64_t t = 0; t < nterms; ++t)
      precise = ps_add(precise, ps_monomial(random_coeff(g), random_exp(g)));
    Neutrix n;
    switch (g.below(4)) {
      case 0: n = Neutrix::zero(); break;
      case 1: n = Neutrix::full(); break;
      case 2: n = Neutrix::cut(random_exp(g), Bound::Closed); break;
      default: n = Neutrix::cut(random_exp(g), Bound::Open); break;
    }
    return ExtNum{fe_from_series(std::move(precise)), n};
  }

  Rational random_exp(SplitMix64& g) const {
    std::int64_t num = g.range(-cfg.exp_numerator_bound, cfg.exp_numerator_bound);
    std::int64_t den = g.range(1, cfg.exp_denominator_max);
    return Rational(num, den);
  }

  /// Integer coefficients: collisions (and hence cancellations) between
  /// independently drawn monomials are what expose one-sided laws, so the
  /// coefficient pool is kept small.
  Rational random_coeff(SplitMix64& g) const {
    std::int64_t num = 0;
    while (num == 0) num = g.range(-cfg.coeff_bound, cfg.coeff_bound);
    return Rational(num);
  }
};

// ---------------------------------------------------------------------------
// ffp:<p> — a prime field with inv(0) = 0 and N identically 0
// ---------------------------------------------------------------------------

namespace detail {
inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace detail

/// The field F_p extended with a total inverse fixing 0 (inv(0) = 0) and the
/// trivial error-part function N(x) = 0. Finite, so exhaustively checkable.
struct FfpModel {
  using value_type = std::int64_t;

  int p;

  explicit FfpModel(int p_) : p(p_) {
    if (!detail::is_prime(p) || p > 97)
      throw InvalidModulus("modulus must be a prime <= 97, got " +
                           std::to_string(p));
  }

  std::string name() const { return "ffp:" + std::to_string(p); }
  std::int64_t zero() const { return 0; }
  std::int64_t one() const { return 1 % p; }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  std::int64_t neg(std::int64_t a) const { return (p - a) % p; }
  std::int64_t inv(std::int64_t a) const {
    if (a == 0) return 0;
    for (std::int64_t y = 1; y < p; ++y)
      if ((a * y) % p == 1) return y;
    return 0;  // unreachable for prime p
  }
  std::int64_t nfun(std::int64_t) const { return 0; }
  bool eq(std::int64_t a, std::int64_t b) const { return a == b; }
  std::string print(std::int64_t a) const { return std::to_string(a); }
  std::int64_t parse(const std::string& s) const {
    Rational r = rat_parse(s);
    if (denominator(r) != 1)
      throw SyntaxError("expected an integer residue", 0);
    BigInt v = numerator(r) % p;
    if (v < 0) v += p;
    return static_cast<std::int64_t>(v);
  }
  std::vector<std::int64_t> enumerate() const {
    std::vector<std::int64_t> out;
    for (std::int64_t a = 0; a < p; ++a) out.push_back(a);
    return out;
  }
  std::int64_t sample(std::uint64_t seed, std::uint64_t index,
                      std::uint64_t slot) const {
    SplitMix64 g(mix_stream(seed, index, slot));
    return static_cast<std::int64_t>(g.below(static_cast<std::uint64_t>(p)));
  }
};

// ---------------------------------------------------------------------------
// ffp-common:<p> — the prime field plus an absorbing error element E
// ---------------------------------------------------------------------------

/// F_p with an adjoined absorbing error element E and inv(0) = E. E is
/// represented internally by the residue value p.
struct FfpCommonModel {
  using value_type = std::int64_t;

  int p;

  explicit FfpCommonModel(int p_) : p(p_) {
    if (!detail::is_prime(p) || p > 97)
      throw InvalidModulus("modulus must be a prime <= 97, got " +
                           std::to_string(p));
  }

  bool is_err(std::int64_t a) const { return a == p; }

  std::string name() const { return "ffp-common:" + std::to_string(p); }
  std::int64_t zero() const { return 0; }
  std::int64_t one() const { return 1 % p; }
  std::int64_t err() const { return p; }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    if (is_err(a) || is_err(b)) return p;
    return (a + b) % p;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    if (is_err(a) || is_err(b)) return p;
    return (a * b) % p;
  }
  std::int64_t neg(std::int64_t a) const {
    if (is_err(a)) return p;
    return (p - a) % p;
  }
  std::int64_t inv(std::int64_t a) const {
    if (is_err(a) || a == 0) return p;
    for (std::int64_t y = 1; y < p; ++y)
      if ((a * y) % p == 1) return y;
    return p;  // unreachable for prime p
  }
  /// Error parts in this structure are the multiples 0*x: 0 for field
  /// elements and E for E itself.
  std::int64_t nfun(std::int64_t a) const { return mul(zero(), a); }
  bool eq(std::int64_t a, std::int64_t b) const { return a == b; }
  std::string print(std::int64_t a) const {
    return is_err(a) ? "E" : std::to_string(a);
  }
  std::int64_t parse(const std::string& s) const {
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "E") return p;
    Rational r = rat_parse(t);
    if (denominator(r) != 1)
      throw SyntaxError("expected an integer residue or E", 0);
    BigInt v = numerator(r) % p;
    if (v < 0) v += p;
    return static_cast<std::int64_t>(v);
  }
  std::vector<std::int64_t> enumerate() const {
    std::vector<std::int64_t> out;
    for (std::int64_t a = 0; a <= p; ++a) out.push_back(a);
    return out;
  }
  std::int64_t sample(std::uint64_t seed, std::uint64_t index,
                      std::uint64_t slot) const {
    SplitMix64 g(mix_stream(seed, index, slot));
    return static_cast<std::int64_t>(g.below(static_cast<std::uint64_t>(p + 1)));
  }
};

// ---------------------------------------------------------------------------
// rhat-common — rationals blurred by the infinitesimals, plus a full-field
// error element
// ---------------------------------------------------------------------------

/// Carrier { r + infinitesimals : r rational } together with the full field,
/// which acts as the absorbing error element and as inv of anything that is
/// not zeroless. Closure holds because the carrier admits only one order of
/// magnitude besides the full field.
struct RhatCommonModel {
  using value_type = ExtNum;

  GenConfig cfg;

  std::string name() const { return "rhat-common"; }

  ExtNum zero() const { return ext_make(fe_zero(), Neutrix::infinitesimals()); }
  ExtNum one() const { return ext_make(fe_one(), Neutrix::infinitesimals()); }
  ExtNum err() const { return ext_neutrix(Neutrix::full()); }

  /// A carrier element is either the full field or a coset r+infinitesimals
  /// with limited representative (its constant term is the rational r).
  void ensure_carrier(const ExtNum& x) const {
    if (x.N.kind == Neutrix::Kind::Full) return;
    if (x.N == Neutrix::infinitesimals() &&
        (x.a.is_zero() || valuation(x.a) >= Valuation::of(0)))
      return;
    throw OutOfCarrier("value '" + print_ext(x) + "' is not in " + name());
  }

  ExtNum add(const ExtNum& x, const ExtNum& y) const {
    ensure_carrier(x);
    ensure_carrier(y);
    return e_add(x, y);
  }
  ExtNum mul(const ExtNum& x, const ExtNum& y) const {
    ensure_carrier(x);
    ensure_carrier(y);
    return e_mul(x, y);
  }
  ExtNum neg(const ExtNum& x) const {
    ensure_carrier(x);
    return e_neg(x);
  }
  ExtNum inv(const ExtNum& x) const {
    ensure_carrier(x);
    // By definition of this model, the inverse of anything containing 0 is
    // the full field (maximal uncertainty); zeroless cosets invert as usual.
    if (!is_zeroless(x)) return err();
    return e_inv(x);
  }
  ExtNum nfun(const ExtNum& x) const {
    ensure_carrier(x);
    return neutrix_part(x);
  }
  bool eq(const ExtNum& x, const ExtNum& y) const { return e_eq(x, y); }
  std::string print(const ExtNum& x) const { return print_ext(x); }
  ExtNum parse(const std::string& s) const {
    ExtNum x = parse_ext(s);
    ensure_carrier(x);
    return x;
  }
  ExtNum sample(std::uint64_t seed, std::uint64_t index,
                std::uint64_t slot) const {
    SplitMix64 g(mix_stream(seed, index, slot));
    if (g.below(100) < static_cast<std::uint64_t>(cfg.special_percent)) {
      switch (g.below(3)) {
        case 0: return zero();
        case 1: return one();
        default: return err();
      }
    }
    std::int64_t num = g.range(-cfg.rat_bound, cfg.rat_bound);
    std::int64_t den = g.range(1, cfg.rat_bound);
    return ext_make(fe_const(Rational(num, den)), Neutrix::infinitesimals());
  }
};

// ---------------------------------------------------------------------------
// rat-involutive — plain rationals with inv(0) = 0
// ---------------------------------------------------------------------------

/// The rationals with the involutive convention inv(0) = 0 and N identically
/// 0. A sanity baseline.
struct RatInvolutiveModel {
  using value_type = Rational;

  GenConfig cfg;

  std::string name() const { return "rat-involutive"; }
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational inv(const Rational& a) const {
    if (a == 0) return 0;
    return Rational(1) / a;
  }
  Rational nfun(const Rational&) const { return 0; }
  bool eq(const Rational& a, const Rational& b) const { return a == b; }
  std::string print(const Rational& a) const { return rat_str(a); }
  Rational parse(const std::string& s) const { return rat_parse(s); }
  Rational sample(std::uint64_t seed, std::uint64_t index,
                  std::uint64_t slot) const {
    SplitMix64 g(mix_stream(seed, index, slot));
    std::int64_t num = g.range(-cfg.rat_bound, cfg.rat_bound);
    std::int64_t den = g.range(1, cfg.rat_bound);
    return Rational(num, den);
  }
};

static_assert(meadow_carrier<ExternalModel>);
static_assert(meadow_carrier<FfpModel> && has_enumerate<FfpModel>);
static_assert(meadow_carrier<FfpCommonModel> && has_err<FfpCommonModel> &&
              has_enumerate<FfpCommonModel>);
static_assert(meadow_carrier<RhatCommonModel> && has_err<RhatCommonModel>);
static_assert(meadow_carrier<RatInvolutiveModel>);
static_assert(!has_err<ExternalModel> && !has_enumerate<ExternalModel>);

// ---------------------------------------------------------------------------
// Model selection by CLI name
// ---------------------------------------------------------------------------

using AnyModel = std::variant<ExternalModel, FfpModel, FfpCommonModel,
                              RhatCommonModel, RatInvolutiveModel>;

/// Accepts: external | ffp:<p> | ffp-common:<p> | rhat-common |
/// rat-involutive, with p a prime <= 97.
inline AnyModel make_model(const std::string& name, const GenConfig& cfg = {}) {
  auto modulus = [](const std::string& s, std::size_t at) {
    try {
      std::size_t used = 0;
      int p = std::stoi(s.substr(at), &used);
      if (at + used != s.size()) throw std::invalid_argument("trailing");
      return p;
    } catch (const InvalidModulus&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("bad modulus in model name '" + s + "'");
    }
  };
  if (name == "external") return ExternalModel{cfg};
  if (name.rfind("ffp-common:", 0) == 0)
    return FfpCommonModel(modulus(name, 11));
  if (name.rfind("ffp:", 0) == 0) return FfpModel(modulus(name, 4));
  if (name == "rhat-common") return RhatCommonModel{cfg};
  if (name == "rat-involutive") return RatInvolutiveModel{cfg};
  throw UsageError("unknown model '" + name +
                   "' (expected external, ffp:<p>, ffp-common:<p>, "
                   "rhat-common, or rat-involutive)");
}

}  // namespace flexmeadow
