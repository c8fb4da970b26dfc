#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vigil/types.hpp"

namespace vigil {

// Pinhole camera: intrinsics plus a world-to-camera rigid transform.
struct CameraModel {
  double fx = 0.0, fy = 0.0;  // focal lengths, pixels; > 0
  double cx = 0.0, cy = 0.0;  // principal point, pixels
  std::array<double, 9> rotation{1, 0, 0, 0, 1, 0, 0, 0, 1};  // row-major
  std::array<double, 3> translation{0, 0, 0};
  double width = 0.0, height = 0.0;  // image size, pixels

  // Throws ConfigError unless fx, fy > 0 and rotation is orthonormal
  // within 1e-6.
  void validate() const;
};

// Intersection over union of two axis-aligned boxes; 0 when disjoint,
// 1 for identical boxes.
double iou(const DetectionBox& a, const DetectionBox& b);

// Projects the 8 corners of a 3D box through the camera and returns the
// axis-aligned bounding rectangle of the projected corners, clipped to the
// image. Corners behind the camera (z <= 0 in camera frame) are dropped;
// returns nullopt when every corner is behind or the clipped rectangle is
// empty. Class label and confidence are copied.
std::optional<DetectionBox> project_box3d(const Box3D& box,
                                          const CameraModel& cam);

struct TrackMember {
  std::string point_id;
  int record_index = -1;
  int output_index = -1;
  std::int64_t frame = 0;
  double time_s = 0.0;
  DetectionBox box;
};

// A time-ordered chain of detections sharing one identifier.
struct Track {
  int track_id = -1;
  std::string class_label;
  std::vector<TrackMember> members;
};

struct TrackingOptions {
  double match_iou = 0.5;  // in (0, 1]
  // Boxes only match within the same class; when off, a track keeps the
  // class of its first member and the attribute check can catch flips.
  bool class_gated = true;
  // A track stays eligible for matching for this many frames after its last
  // member. 1 = strict frame-to-frame matching; flicker detection needs the
  // gap bridged, so callers checking temporal consistency raise it.
  std::int64_t max_gap_frames = 1;
};

// Greedy IoU matching over a detection stream: candidate (track, box) pairs
// are sorted by IoU descending (ties by lower track id, then lower box
// index) and accepted while both sides are unmatched; unmatched boxes start
// fresh tracks. Every box lands in exactly one track. Records without a
// frame index are treated as consecutive frames.
std::vector<Track> build_tracks(const Stream& stream,
                                const TrackingOptions& opts = {});

// Maximal intervals of consecutive frames containing the track; a gap of one
// or more missing frames splits intervals. Intervals are disjoint, sorted,
// with times taken from the members.
std::vector<PresenceInterval> presence_timeline(const Track& track);

}  // namespace vigil
