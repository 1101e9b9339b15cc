#ifndef SALIENT_ERRORS_HPP
#define SALIENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace salient {

enum class Err {
  MalformedLine,
  OutOfBounds,
  EmptyFile,
  EmptyFixations,
  DimensionMismatch,
  MalformedHeader,
  MissingChannel,
  ImageTooSmall,
  InvalidImage,
  EmptyInput,
  SingleClassInput,
  KExceedsN,
  TooFewSamples,
  NoUsefulWeakLearner,
  VersionMismatch,
  CorruptFile,
  EmptyEvaluation,
  FoldTooSmall,
  MissingUpstream,
  IoError,
  InvalidArgument,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace salient

#endif
