#include "polyvert/report.hpp"

#include <cstdio>

namespace polyvert {

std::string digest_hex(const std::string& data) {
  uint64_t h = fnv1a(data);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json report_to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  j["exact"] = r.exact;
  j["outputs"] = r.outputs;
  if (r.with_timing) j["timing_ms"] = r.timing_ms;
  return j;
}

}  // namespace polyvert
