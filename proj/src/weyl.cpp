#include "kmroots/weyl.hpp"

#include "kmroots/error.hpp"

namespace kmroots {

std::string_view to_string(RootKind k) {
  switch (k) {
    case RootKind::Real: return "real";
    case RootKind::Imaginary: return "imaginary";
    case RootKind::NotARoot: return "not-a-root";
  }
  return "?";
}

RootVector reflect(const CartanMatrix& a, std::size_t i, const RootVector& x) {
  RootVector r = x;
  const auto p = pairing(a, x, i);
  if (p < INT32_MIN || p > INT32_MAX) throw Error(ErrorKind::Overflow, "reflection of " + x.str());
  r.add(i, static_cast<RootVector::Coeff>(-p));
  return r;
}

RootVector apply(const CartanMatrix& a, const WeylWord& w, const RootVector& x) {
  RootVector r = x;
  for (auto i : w.letters) r = reflect(a, i, r);
  return r;
}

Reduction reduce(const CartanMatrix& a, const RootVector& x) {
  if (!x.is_positive()) throw Error(ErrorKind::NotPositive, "reduce needs a positive vector, got " + x.str());
  Reduction red{x, {}, ReductionStop::Chamber};
  for (;;) {
    if (red.terminal.simple_index() >= 0) {
      red.stop = ReductionStop::Simple;
      return red;
    }
    std::size_t i = 0;
    while (i < a.size() && pairing(a, red.terminal, i) <= 0) ++i;
    if (i == a.size()) {
      red.stop = ReductionStop::Chamber;
      return red;
    }
    RootVector next = reflect(a, i, red.terminal);
    if (!next.is_positive()) {
      red.stop = ReductionStop::LeftPositive;
      return red;
    }
    red.terminal = next;
    red.word.letters.push_back(i);
  }
}

RootKind classify_root(const CartanMatrix& a, const GramTable& b, const RootVector& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroVector, "classify_root of the zero vector");
  if (x.sign() == Sign::Mixed) return RootKind::NotARoot;
  const RootVector abs = x.is_positive() ? x : -x;
  const auto red = reduce(a, abs);
  RootKind kind = RootKind::NotARoot;
  if (red.stop == ReductionStop::Simple) {
    kind = RootKind::Real;
  } else if (red.stop == ReductionStop::Chamber && is_connected(a, red.terminal)) {
    kind = RootKind::Imaginary;
  }
  const auto norm = form(b, x, x);
  if ((kind == RootKind::Real && norm <= 0) || (kind == RootKind::Imaginary && norm > 0))
    throw Error(ErrorKind::PreconditionViolated,
                "root kind of " + x.str() + " contradicts its norm " + std::to_string(norm));
  return kind;
}

ReducedPair orbit_reduce_pair(const CartanMatrix& a, const GramTable& b, const RootVector& alpha,
                              const RootVector& beta) {
  if (beta.is_zero() || classify_root(a, b, beta) == RootKind::NotARoot)
    throw Error(ErrorKind::NotARoot, beta.str() + " is not a root");
  const bool negative = beta.sign() == Sign::Negative;
  const auto red = reduce(a, negative ? -beta : beta);
  ReducedPair out{apply(a, red.word, alpha), negative ? -red.terminal : red.terminal, red.word};
  return out;
}

}  // namespace kmroots
