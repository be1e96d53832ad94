#pragma once

#include <stdexcept>
#include <string>

namespace gpayn {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreGraspInfeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EpisodeFinished : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoReachableCandidate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HistoryEpisodeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigHashMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BufferTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingDemoFile : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gpayn
