#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hermitian/ff.hpp"

namespace hq {

using Json = nlohmann::ordered_json;

struct VerificationReport {
  std::string check;
  uint64_t q = 0;
  Json params = Json::object();
  Json expected = Json::object();
  Json observed = Json::object();
  bool pass = false;
  Json witnesses = Json::array();
  std::vector<std::string> notes;

  // A failing report with no witness gets a generic one so the record is
  // never empty-handed.
  void finalize();
  Json to_json() const;
};

// {p, h, m, modulus}
Json field_json(const Field& f);

// Exact integers beyond 2^63 are written as decimal strings.
Json u128_json(u128 v);

}  // namespace hq
