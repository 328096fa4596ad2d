#include "hermitian/run.hpp"

#include <chrono>
#include <ctime>

#include "hermitian/curve.hpp"
#include "hermitian/group.hpp"
#include "hermitian/invariants.hpp"
#include "hermitian/quotient.hpp"

namespace hq {

Json RunConfig::to_json() const {
  Json j = {{"p", p},
            {"h", h},
            {"m", m},
            {"k", k},
            {"seed", seed},
            {"points", points},
            {"elements", elements},
            {"word_length", word_length},
            {"args", args},
            {"threads", threads},
            {"max_sylvester_dim_sq", max_sylvester_dim_sq},
            {"checks", checks}};
  return j;
}

std::pair<uint32_t, uint32_t> split_prime_power(uint64_t q) {
  if (q < 2) raise(ErrorCode::BadParameters, "q must be a prime power >= 2");
  uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  uint32_t h = 0;
  uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++h;
  }
  if (r != 1) raise(ErrorCode::BadParameters, "q = " + std::to_string(q) + " is not a prime power");
  return {static_cast<uint32_t>(p), h};
}

namespace {

template <class T>
T get_uint(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<int64_t>() >= 0))
    raise(ErrorCode::BadParameters, std::string("'") + key + "' must be a nonnegative integer");
  const uint64_t x = v.get<uint64_t>();
  if (x > std::numeric_limits<T>::max()) raise(ErrorCode::BadParameters, std::string("'") + key + "' is too large");
  return static_cast<T>(x);
}

std::string timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunConfig config_from_json(const Json& j) {
  if (!j.is_object()) raise(ErrorCode::BadParameters, "configuration must be a JSON object");
  static const std::vector<std::string> known = {"q",       "p",      "h",           "m",     "k",
                                                 "seed",    "points", "elements",    "word_length",
                                                 "args",    "threads", "max_sylvester_dim_sq", "checks",
                                                 "timestamp"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      raise(ErrorCode::BadParameters, "unknown configuration key '" + key + "'");

  RunConfig c;
  if (j.contains("q")) {
    if (j.contains("p") || j.contains("h")) raise(ErrorCode::BadParameters, "give either q or p and h");
    std::tie(c.p, c.h) = split_prime_power(get_uint<uint64_t>(j, "q"));
  } else {
    if (j.contains("p")) c.p = get_uint<uint32_t>(j, "p");
    if (j.contains("h")) c.h = get_uint<uint32_t>(j, "h");
  }
  if (!Field::is_prime(c.p)) raise(ErrorCode::NonPrimeP, "p = " + std::to_string(c.p) + " is not prime");
  if (c.h == 0) raise(ErrorCode::BadParameters, "h must be positive");
  if (j.contains("m")) c.m = get_uint<uint32_t>(j, "m");
  if (j.contains("k")) c.k = get_uint<uint32_t>(j, "k");
  if (j.contains("seed")) c.seed = get_uint<uint64_t>(j, "seed");
  if (j.contains("points")) c.points = get_uint<uint64_t>(j, "points");
  if (j.contains("elements")) c.elements = get_uint<uint64_t>(j, "elements");
  if (j.contains("word_length")) c.word_length = get_uint<uint32_t>(j, "word_length");
  if (j.contains("args")) c.args = get_uint<uint64_t>(j, "args");
  if (j.contains("threads")) c.threads = std::max(1u, get_uint<unsigned>(j, "threads"));
  if (j.contains("max_sylvester_dim_sq")) c.max_sylvester_dim_sq = get_uint<uint64_t>(j, "max_sylvester_dim_sq");
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) raise(ErrorCode::BadParameters, "'checks' must be a list of names");
    for (const auto& s : j["checks"]) {
      if (!s.is_string()) raise(ErrorCode::BadParameters, "'checks' must be a list of names");
      c.checks.push_back(s.get<std::string>());
    }
  }
  if (j.contains("timestamp")) {
    if (!j["timestamp"].is_boolean()) raise(ErrorCode::BadParameters, "'timestamp' must be a boolean");
    c.timestamp = j["timestamp"].get<bool>();
  }
  return c;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "field-info",   "count-points", "verify-invariance", "verify-symbolic",  "degree-census",
      "zero-locus",   "quotient-eliminate", "group-order", "pgl2-invariance", "all"};
  return names;
}

namespace {

VerificationReport field_info(const RunConfig& c) {
  const uint32_t m = c.m == 0 ? 2 * c.h : c.m;
  const Field& f = Field::get(c.p, c.h, m);
  VerificationReport r;
  r.check = "field-info";
  r.q = f.q();
  r.params = {{"field", field_json(f)}};
  const bool irreducible = Field::is_irreducible(f.p(), f.modulus());
  const bool least = Field::least_irreducible(f.p(), m) == f.modulus();
  r.expected = {{"irreducible", true}, {"least", true}};
  r.observed = {{"irreducible", irreducible},
                {"least", least},
                {"order", u128_json(f.order())},
                {"contains_fq2", f.contains_fq2()},
                {"tables", f.has_tables()}};
  r.pass = irreducible && least;
  r.finalize();
  return r;
}

std::vector<VerificationReport> verify_symbolic(const RunConfig& c) {
  std::vector<std::string> dm, cons;
  if (c.checks.empty()) {
    dm = {"dm4", "dm6"};
    cons = {"i", "ii", "iii"};
  }
  for (const auto& s : c.checks) {
    if (s == "dm4" || s == "dm6") dm.push_back(s);
    else if (s == "i" || s == "ii" || s == "iii") cons.push_back(s);
    else raise(ErrorCode::BadParameters, "unknown symbolic check '" + s + "' (dm4, dm6, i, ii, iii)");
  }
  std::vector<VerificationReport> out;
  for (const auto& s : dm) out.push_back(symbolic_dm_identity(c.p, c.h, s == "dm4" ? 4 : 6));
  if (!cons.empty()) out.push_back(symbolic_consistency(c.p, c.h, cons));
  return out;
}

InvarianceConfig invariance_config(const RunConfig& c) {
  InvarianceConfig ic;
  ic.p = c.p;
  ic.h = c.h;
  ic.m = c.m;
  ic.n_points = c.points;
  ic.n_elements = c.elements;
  ic.word_length = c.word_length;
  ic.seed = c.seed;
  ic.threads = c.threads;
  return ic;
}

QuotientConfig quotient_config(const RunConfig& c) {
  QuotientConfig qc;
  qc.p = c.p;
  qc.h = c.h;
  qc.m = c.m;
  qc.n_points = std::min<uint64_t>(c.points, 100);
  qc.seed = c.seed;
  qc.max_sylvester_dim_sq = c.max_sylvester_dim_sq;
  return qc;
}

void single(const std::string& sub, const RunConfig& c, std::vector<VerificationReport>& out) {
  if (sub == "field-info") out.push_back(field_info(c));
  else if (sub == "count-points") out.push_back(count_check(c.p, c.h, c.k, c.threads));
  else if (sub == "verify-invariance") out.push_back(verify_invariance(invariance_config(c)));
  else if (sub == "verify-symbolic") for (auto& r : verify_symbolic(c)) out.push_back(std::move(r));
  else if (sub == "degree-census") out.push_back(degree_census(c.p, c.h));
  else if (sub == "zero-locus") out.push_back(zero_locus(c.p, c.h, c.threads));
  else if (sub == "quotient-eliminate") out.push_back(quotient_eliminate(quotient_config(c)));
  else if (sub == "group-order") out.push_back(group_order_check(c.p, c.h, c.seed));
  else if (sub == "pgl2-invariance") out.push_back(pgl2_invariance(c.p, c.h, c.args, c.seed));
  else raise(ErrorCode::BadParameters, "unknown subcommand '" + sub + "'");
}

}  // namespace

Json run(const std::string& subcommand, const RunConfig& cfg) {
  if (std::find(subcommands().begin(), subcommands().end(), subcommand) == subcommands().end())
    raise(ErrorCode::BadParameters, "unknown subcommand '" + subcommand + "'");
  const uint64_t q = [&] {
    uint64_t r = 1;
    for (uint32_t i = 0; i < cfg.h; ++i) r *= cfg.p;
    return r;
  }();

  std::vector<VerificationReport> reports;
  Json skipped = Json::array();
  if (subcommand != "all") {
    single(subcommand, cfg, reports);
  } else {
    // m and k are chosen per check here.
    RunConfig c = cfg;
    c.m = 0;
    c.checks.clear();
    for (uint32_t k : {1u, 3u}) {
      c.k = k;
      try {
        reports.push_back(count_check(c.p, c.h, k, c.threads));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ScaleExceeded) throw;
        skipped.push_back({{"check", "count-points"}, {"k", k}, {"reason", e.what()}});
      }
    }
    for (const char* sub : {"group-order", "verify-invariance", "verify-symbolic", "degree-census", "zero-locus",
                            "pgl2-invariance", "quotient-eliminate"}) {
      try {
        single(sub, c, reports);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ScaleExceeded) throw;
        skipped.push_back({{"check", sub}, {"reason", e.what()}});
      }
    }
  }

  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["subcommand"] = subcommand;
  doc["q"] = q;
  doc["config"] = cfg.to_json();
  doc["rng"] = kRngName;
  doc["seed"] = cfg.seed;
  if (cfg.timestamp) doc["timestamp"] = timestamp_now();
  bool pass = !reports.empty();
  Json list = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    Json rj = r.to_json();
    if (!rj["params"].contains("seed")) rj["params"]["seed"] = cfg.seed;
    list.push_back(std::move(rj));
  }
  doc["reports"] = list;
  doc["skipped"] = skipped;
  doc["pass"] = pass;
  return doc;
}

}  // namespace hq
