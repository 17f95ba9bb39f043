#ifndef FBG_ERRORS_HPP
#define FBG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fbg {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FASTA / MSA input
struct EmptyInput : Error { using Error::Error; };
struct InvalidFasta : Error { using Error::Error; };
struct NonUniformRowLength : Error { using Error::Error; };
struct AllRowsFiltered : Error { using Error::Error; };

// Index and query primitives
struct OutOfBounds : Error { using Error::Error; };
struct EmptyInterval : Error { using Error::Error; };

// Segmentation
struct NoValidSegmentation : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// Graph construction and GFA
struct SegmentationMismatch : Error { using Error::Error; };
struct MalformedGfa : Error { using Error::Error; };
struct MissingBlockTag : Error { using Error::Error; };

// Succinct index
struct NotRepeatFree : Error { using Error::Error; };
struct BadMagic : Error { using Error::Error; };
struct VersionMismatch : Error { using Error::Error; };
struct TruncatedStream : Error { using Error::Error; };

}  // namespace fbg

#endif  // FBG_ERRORS_HPP
