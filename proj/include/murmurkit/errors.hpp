#pragma once

#include <stdexcept>
#include <string>

namespace murmur {

// Base class for everything this toolkit throws on bad input or bad files.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// audio_io
struct NotWav : Error { using Error::Error; };
struct UnsupportedEncoding : Error { using Error::Error; };
struct EmptyAudio : Error { using Error::Error; };
struct InvalidRate : Error { using Error::Error; };

// preprocess
struct EmptySignal : Error { using Error::Error; };
struct InvalidBand : Error { using Error::Error; };

// scalogram
struct InvalidFrequency : Error { using Error::Error; };
struct EmptySegment : Error { using Error::Error; };
struct InvalidHop : Error { using Error::Error; };
struct DegenerateShape : Error { using Error::Error; };

// dataset
struct MissingColumn : Error { using Error::Error; };
struct UnreadableRow : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct TooFewSamples : Error { using Error::Error; };
struct DegenerateFeatures : Error { using Error::Error; };
struct ClassTooSmall : Error { using Error::Error; };

// funnelcnn
struct ShapeUnderflow : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NonFiniteInput : Error { using Error::Error; };
struct NoCachedForward : Error { using Error::Error; };

// trainer
struct ConfigMismatch : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };
struct EmptyEvalSet : Error { using Error::Error; };

// quantkit
struct EmptyRepresentativeSet : Error { using Error::Error; };

// cli / files
struct BadModelFile : Error { using Error::Error; };
struct EmptyManifest : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace murmur
