// include/spadi/errors.hpp

// Copyright 2026  The spadi authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SPADI_ERRORS_HPP
#define SPADI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spadi {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SPADI_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// Decomposition / analysis errors.
SPADI_DEFINE_ERROR(InvalidArgument);    // precondition violated by the caller
SPADI_DEFINE_ERROR(EmptyValiditySet);   // delays too large for frame length
SPADI_DEFINE_ERROR(IndexOutOfRange);    // shifted read outside [0, N)
SPADI_DEFINE_ERROR(DegenerateInput);    // zero-energy channel fed to the shift search
SPADI_DEFINE_ERROR(AllChannelsSilent);  // every row or column pruned
SPADI_DEFINE_ERROR(SingularSystem);     // Gram matrix has no usable spectrum
SPADI_DEFINE_ERROR(SilentReference);    // reference energy is zero over the validity set
SPADI_DEFINE_ERROR(SilentProjection);   // projected energy is zero over the validity set
SPADI_DEFINE_ERROR(SignalTooShort);     // fewer samples than one frame (or filter support)
SPADI_DEFINE_ERROR(ZeroEnergySource);   // autocorrelation oracle got an all-zero source

// Degradation synthesis errors.
SPADI_DEFINE_ERROR(SilentSignal);   // cannot set an SNR against zero signal energy
SPADI_DEFINE_ERROR(DelayTooLarge);  // per-channel delay >= signal length
SPADI_DEFINE_ERROR(NoConvergence);  // equiripple exchange failed to settle

// Audio I/O errors.
SPADI_DEFINE_ERROR(IoFailure);
SPADI_DEFINE_ERROR(MalformedHeader);
SPADI_DEFINE_ERROR(UnsupportedFormat);
SPADI_DEFINE_ERROR(TruncatedData);
SPADI_DEFINE_ERROR(SampleRateMismatch);
SPADI_DEFINE_ERROR(ChannelCountMismatch);
SPADI_DEFINE_ERROR(LengthMismatch);

#undef SPADI_DEFINE_ERROR

}  // namespace spadi

#endif  // SPADI_ERRORS_HPP
