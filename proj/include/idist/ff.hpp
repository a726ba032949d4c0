#ifndef IDIST_FF_HPP
#define IDIST_FF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idist/error.hpp"

namespace idist {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// An element of GF(p^s), stored as its canonical index
/// v = c0 + c1*p + ... + c_{s-1}*p^{s-1} in the polynomial basis.
struct FieldElement {
  const FieldCtx* ctx = nullptr;
  std::uint32_t v = 0;

  bool is_zero() const { return v == 0; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.v == b.v;
  }
  friend auto operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.v <=> b.v;
  }
};

struct CyclotomicClass {
  int e = 1;  // order (number of classes), e | q-1
  int index = 0;
  std::vector<FieldElement> members;
};

/// A concrete realization of GF(p^s): modulus polynomial, primitive element
/// and discrete-log tables. Immutable after construction; elements are plain
/// values tied to their context.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  int p() const { return p_; }
  int s() const { return s_; }
  int q() const { return q_; }
  /// Modulus coefficients, constant term first, length s+1, monic.
  /// For s=1 this is {0,1} (the polynomial x).
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement alpha() const { return {this, alpha_}; }

  FieldElement from_index(std::uint32_t v) const;
  /// Element of the prime subfield with value c mod p.
  FieldElement from_prime(long long c) const;
  /// Element from polynomial-basis digits, constant term first.
  FieldElement from_digits(const std::vector<int>& digits) const;
  std::vector<int> digits(FieldElement x) const;

  /// alpha^k for any integer k.
  FieldElement alpha_pow(long long k) const;
  /// Discrete log base alpha; error DivisionByZero on zero.
  int dlog(FieldElement x) const;

  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_raw(std::uint32_t a) const;
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  /// x^e for any integer e, with x^0 = 1 for x != 0; 0^e = 0 for e > 0.
  FieldElement pow(FieldElement a, long long e) const;

  /// x + x^p + ... + x^{p^{s-1}}; lands in the prime subfield.
  FieldElement trace_to_prime(FieldElement x) const;
  /// Same, as an integer in 0..p-1.
  int trace_int(FieldElement x) const;
  /// Frobenius power x -> x^{p^k}.
  FieldElement frobenius(FieldElement x, int k) const;

  int multiplicative_order(FieldElement x) const;
  bool is_square(FieldElement x) const;

  /// The e cyclotomic classes of order e; error NotADivisor unless e | q-1.
  std::vector<CyclotomicClass> cyclotomic_classes(int e) const;

  /// All q elements in index order.
  std::vector<FieldElement> elements() const;

  /// Ordering key comparing coefficient sequences low-to-high.
  std::uint64_t lex_key(std::uint32_t v) const;

  /// "p" for prime fields, "p^s:c0,c1,...,cs" otherwise.
  std::string spec_string() const;

  bool same_field(const FieldCtx& other) const;
  void check_same(const FieldElement& x) const;

  static FieldCtxPtr build(int p, int s,
                           std::optional<std::vector<int>> modulus = {},
                           std::optional<std::vector<int>> primitive = {});

 private:
  FieldCtx() = default;

  int p_ = 0, s_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::uint32_t alpha_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[k] = alpha^k, k in 0..q-2
  std::vector<int> log_;            // log_[v] for v != 0
  std::vector<std::uint32_t> pow_p_;  // cached p^i, i in 0..s
};

/// Convenience wrapper matching the CLI field-spec grammar.
FieldCtxPtr build_field(int p, int s,
                        std::optional<std::vector<int>> modulus = {},
                        std::optional<std::vector<int>> primitive = {});

/// Parse "p^s" or "p^s:c0,c1,...,cs" (or plain "p").
FieldCtxPtr parse_field_spec(const std::string& spec);

// -- element operators (throw MixedFields on context mismatch) --

inline FieldElement operator+(FieldElement a, FieldElement b) {
  a.ctx->check_same(b);
  return a.ctx->add(a, b);
}
inline FieldElement operator-(FieldElement a, FieldElement b) {
  a.ctx->check_same(b);
  return a.ctx->sub(a, b);
}
inline FieldElement operator*(FieldElement a, FieldElement b) {
  a.ctx->check_same(b);
  return a.ctx->mul(a, b);
}
inline FieldElement operator/(FieldElement a, FieldElement b) {
  a.ctx->check_same(b);
  return a.ctx->div(a, b);
}
inline FieldElement operator-(FieldElement a) { return a.ctx->neg(a); }

}  // namespace idist

#endif
