// Run reports: every CLI command wraps its payload in a small envelope
// recording the command line, a digest of the input scene, and (optionally)
// wall time.  With timing omitted, reports are byte-for-byte deterministic.
#pragma once

#include "polyvert/scene.hpp"

#include <chrono>
#include <string>

namespace polyvert {

struct Report {
  std::string command;
  std::string input_digest;
  json outputs = json::object();
  bool exact = true;
  bool with_timing = true;
  double timing_ms = 0.0;
};

std::string digest_hex(const std::string& data);

json report_to_json(const Report& r);

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace polyvert
