#pragma once

#include <stdexcept>
#include <string>

namespace fcx {

// Domain errors. Anything derived from Error is a caller-visible failure
// (bad input or a violated precondition); std::logic_error is reserved for
// internal invariants that should never fire.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define FCX_DEFINE_ERROR(Name)                                                 \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

FCX_DEFINE_ERROR(ParseError);
FCX_DEFINE_ERROR(RankOutOfRange);
FCX_DEFINE_ERROR(InvalidHeap);
FCX_DEFINE_ERROR(NotAChain);
FCX_DEFINE_ERROR(NotAlternating);
FCX_DEFINE_ERROR(NotFC);
FCX_DEFINE_ERROR(StarViolation);
FCX_DEFINE_ERROR(ForbiddenEWalk);
FCX_DEFINE_ERROR(InvalidWalk);
FCX_DEFINE_ERROR(TruncationMismatch);
FCX_DEFINE_ERROR(NonNilpotentDivisor);
FCX_DEFINE_ERROR(ArithmeticOverflow);
FCX_DEFINE_ERROR(InsufficientData);

// These three should never fire: each one falsifies the implementation
// against a proven statement.
FCX_DEFINE_ERROR(ClassificationFailure);
FCX_DEFINE_ERROR(LemmaViolation);
FCX_DEFINE_ERROR(TheoremViolation);

#undef FCX_DEFINE_ERROR

} // namespace fcx
