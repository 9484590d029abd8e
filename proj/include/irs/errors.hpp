#pragma once

#include <stdexcept>
#include <string>

namespace irs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define IRS_DEFINE_ERROR(Name)              \
  struct Name : Error {                     \
    using Error::Error;                     \
    Name() : Error(#Name) {}                \
  }

IRS_DEFINE_ERROR(UnsupportedFormat);
IRS_DEFINE_ERROR(CorruptFile);
IRS_DEFINE_ERROR(ImageTooSmall);
IRS_DEFINE_ERROR(InvalidSigma);
IRS_DEFINE_ERROR(InvalidLevels);
IRS_DEFINE_ERROR(NoValidPairs);
IRS_DEFINE_ERROR(DegenerateColumn);
IRS_DEFINE_ERROR(TooFewSamples);
IRS_DEFINE_ERROR(EmptyCorpus);
IRS_DEFINE_ERROR(ZeroRealMean);
IRS_DEFINE_ERROR(MissingReferenceFile);
IRS_DEFINE_ERROR(ProfileFormatError);
IRS_DEFINE_ERROR(NegativeRadius);
IRS_DEFINE_ERROR(NonFiniteRadius);
IRS_DEFINE_ERROR(InvalidThreshold);
IRS_DEFINE_ERROR(NoImagesFound);
IRS_DEFINE_ERROR(IoError);

#undef IRS_DEFINE_ERROR

}  // namespace irs
