#include "hermitian/report.hpp"

namespace hq {

void VerificationReport::finalize() {
  if (!pass && witnesses.empty()) {
    witnesses.push_back({{"kind", "mismatch"}, {"expected", expected}, {"observed", observed}});
  }
}

Json VerificationReport::to_json() const {
  Json j;
  j["check"] = check;
  j["q"] = q;
  j["params"] = params;
  j["expected"] = expected;
  j["observed"] = observed;
  j["pass"] = pass;
  j["witnesses"] = witnesses;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

Json field_json(const Field& f) {
  return {{"p", f.p()}, {"h", f.h()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

Json u128_json(u128 v) {
  if (v <= u128(INT64_MAX)) return static_cast<uint64_t>(v);
  return to_string(v);
}

}  // namespace hq
