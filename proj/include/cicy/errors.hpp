#pragma once

// Domain errors. Every error derives from cicy::Error and carries a stable
// kind name that the CLI prints and tests match on.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cicy {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CICY_DEFINE_ERROR(Name, Base)                            \
  class Name : public Base {                                     \
   public:                                                       \
    explicit Name(const std::string& what) : Base(#Name, what) {} \
                                                                 \
   protected:                                                    \
    Name(std::string kind, const std::string& what)              \
        : Base(std::move(kind), what) {}                         \
  };

CICY_DEFINE_ERROR(InvalidArgument, Error)
CICY_DEFINE_ERROR(ParseError, Error)

// A degree list that is not one of the five CICY threefolds. NotCalabiYau is
// the stricter failure where dimension or canonical class is already wrong.
CICY_DEFINE_ERROR(NotInCatalog, Error)
CICY_DEFINE_ERROR(NotCalabiYau, NotInCatalog)

CICY_DEFINE_ERROR(NonIntegralChi, Error)
CICY_DEFINE_ERROR(OddProduct, Error)
CICY_DEFINE_ERROR(InconsistentAnchor, Error)
CICY_DEFINE_ERROR(InsufficientSamples, Error)
CICY_DEFINE_ERROR(NoMatch, Error)

CICY_DEFINE_ERROR(NotACurve, Error)

CICY_DEFINE_ERROR(EvenGeneratorCount, Error)
CICY_DEFINE_ERROR(NonIntegralSocle, Error)
CICY_DEFINE_ERROR(InconsistentDegrees, Error)
CICY_DEFINE_ERROR(ShapeMismatch, Error)

#undef CICY_DEFINE_ERROR

class AmbiguousMatch : public Error {
 public:
  AmbiguousMatch(const std::string& what, std::vector<std::pair<int, int>> candidates)
      : Error("AmbiguousMatch", what), candidates_(std::move(candidates)) {}

  const std::vector<std::pair<int, int>>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<std::pair<int, int>> candidates_;
};

}  // namespace cicy
