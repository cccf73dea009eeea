#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphsym {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GRAPHSYM_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// graph_core
GRAPHSYM_DEFINE_ERROR(InvalidGraphError);
GRAPHSYM_DEFINE_ERROR(InvalidPermutationError);
GRAPHSYM_DEFINE_ERROR(PermutationSizeError);
GRAPHSYM_DEFINE_ERROR(EmptyDomainError);
GRAPHSYM_DEFINE_ERROR(NoPathError);
GRAPHSYM_DEFINE_ERROR(NotADagError);
GRAPHSYM_DEFINE_ERROR(DisconnectedGraphError);

// serialize
GRAPHSYM_DEFINE_ERROR(InvalidSpecError);
GRAPHSYM_DEFINE_ERROR(ConsistencyError);

// tasks
GRAPHSYM_DEFINE_ERROR(QueryError);
GRAPHSYM_DEFINE_ERROR(UnknownTaskError);
GRAPHSYM_DEFINE_ERROR(UnsupportedTaskError);
GRAPHSYM_DEFINE_ERROR(MissingReferenceError);
GRAPHSYM_DEFINE_ERROR(ReferenceUnavailableError);
GRAPHSYM_DEFINE_ERROR(UnmappableInstanceError);

// spectral
GRAPHSYM_DEFINE_ERROR(AsymmetryError);
GRAPHSYM_DEFINE_ERROR(DegenerateSpectrumError);

// metrics
GRAPHSYM_DEFINE_ERROR(EmptySeriesError);
GRAPHSYM_DEFINE_ERROR(ZeroRangeError);
GRAPHSYM_DEFINE_ERROR(DegenerateNormError);
GRAPHSYM_DEFINE_ERROR(DegenerateBaselineError);

// harness
GRAPHSYM_DEFINE_ERROR(TransportError);
GRAPHSYM_DEFINE_ERROR(ConfigError);

#undef GRAPHSYM_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class IngestError : public Error {
 public:
  IngestError(const std::string& what, std::size_t record_index)
      : Error("record " + std::to_string(record_index) + ": " + what),
        record_index_(record_index) {}
  std::size_t record_index() const noexcept { return record_index_; }

 private:
  std::size_t record_index_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (off-diagonal residual " + std::to_string(residual) +
              ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace graphsym
