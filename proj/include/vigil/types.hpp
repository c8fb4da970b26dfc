#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace vigil {

// Bad configuration or API misuse.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Severity scores are non-negative; 0 encodes an abstention (the assertion
// did not fire). Only the relative ordering of nonzero scores is meaningful.
using Severity = double;

// Axis-aligned 2D detection, pixel units, (x, y) = top-left corner.
struct DetectionBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;  // > 0
  double h = 0.0;  // > 0
  std::string class_label;
  double confidence = 0.0;  // in [0, 1]
  // Auxiliary string attributes carried with the detection (e.g. identity,
  // gender for face boxes). Empty for plain detections.
  std::map<std::string, std::string> attrs;
};

// Oriented 3D detection, meters; yaw rotates about +z.
struct Box3D {
  double cx = 0.0, cy = 0.0, cz = 0.0;
  double length = 0.0;  // along local x, > 0
  double width = 0.0;   // along local y, > 0
  double height = 0.0;  // along local z, > 0
  double yaw = 0.0;
  std::string class_label;
  double confidence = 0.0;
};

struct BoxOutput {
  std::vector<DetectionBox> boxes;
};

struct LabelOutput {
  std::string class_label;
  double confidence = 0.0;
};

// Time-aligned detections from two sensors (3D point-cloud boxes plus the
// camera detector's 2D boxes).
struct PairedOutput {
  std::vector<Box3D> boxes3d;
  std::vector<DetectionBox> boxes;
};

using RecordOutput = std::variant<BoxOutput, LabelOutput, PairedOutput>;

// One logged model invocation: an opaque input reference plus its outputs.
// Exactly one output variant is populated.
struct PredictionRecord {
  std::string point_id;
  double time_s = 0.0;
  std::optional<std::int64_t> frame;  // set for frame-indexed streams
  RecordOutput output;
  std::optional<int> scene_id;  // optional scene grouping (e.g. scene cuts)
  std::string input_ref;        // never dereferenced by the engine
};

struct Stream {
  std::vector<PredictionRecord> records;
  double fps = 0.0;  // > 0 for frame-indexed streams

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

// The 2D boxes of a record, or nullptr for label records.
const std::vector<DetectionBox>* boxes_of(const PredictionRecord& rec);
std::vector<DetectionBox>* boxes_of(PredictionRecord& rec);

// Number of addressable outputs: boxes for detection records, 1 for labels.
int output_count(const PredictionRecord& rec);

// Checks point-id uniqueness, non-decreasing timestamps and a single output
// variant across the stream. Throws InputError.
void validate_stream(const Stream& stream);

// Maximal run of records all holding the same identifier (or track), closed
// time interval [begin_s, end_s] over record timestamps.
struct PresenceInterval {
  double begin_s = 0.0;
  double end_s = 0.0;
  int first_record = -1;
  int last_record = -1;
};

}  // namespace vigil
