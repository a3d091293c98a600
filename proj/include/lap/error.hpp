#pragma once

#include <stdexcept>
#include <string>

namespace lap {

enum class Errc {
  // serialization / io
  BadMagic,
  UnsupportedVersion,
  CorruptPayload,
  IoError,
  // dataset
  MissingAnnotation,
  DimensionMismatch,
  UnknownLabelString,
  // forest
  SingleClassInput,
  EmptyInput,
  RaggedFeatures,
  // mask generation
  NoContent,
  OutsideMask,
  // segmentation
  NoMaskAnnotations,
  ModelMismatch,
  // geometry / features
  DegeneratePoints,
  DegenerateCovariance,
  TooFewDescriptors,
  // evaluation
  TooFewSurgeries,
  EmptyColumn,
  // generic
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace lap
