#include "hermitian/hq.h"

#include <string>

#include "hermitian/curve.hpp"
#include "hermitian/invariants.hpp"
#include "hermitian/run.hpp"

struct hq_field {
  const hq::Field* f;
  std::string json;
};

struct hq_report {
  hq::Json doc;
  bool pass;
  std::string text;
};

namespace {

thread_local std::string last_error;

template <class Body>
hq_status guarded(Body body) {
  try {
    body();
    last_error.clear();
    return HQ_OK;
  } catch (const hq::Error& e) {
    last_error = e.what();
    return static_cast<hq_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return HQ_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HQ_INTERNAL;
  }
}

const hq::Field& field_of(const hq_field* field) {
  if (field == nullptr) hq::raise(hq::ErrorCode::InvalidArgument, "null field handle");
  return *field->f;
}

hq::FieldElement element(const hq_field* field, uint64_t index) {
  const hq::Field& f = field_of(field);
  if (hq::u128(index) >= f.order()) hq::raise(hq::ErrorCode::InvalidArgument, "element index out of range");
  return f.from_index(index);
}

void need(const void* p) {
  if (p == nullptr) hq::raise(hq::ErrorCode::InvalidArgument, "null output pointer");
}

void store(const hq::EvalOutcome& o, hq_outcome* kind, uint64_t* value) {
  need(kind);
  *kind = static_cast<hq_outcome>(o.kind);
  if (o.is_value() && value != nullptr) *value = o.value->rep();
}

}  // namespace

extern "C" {

const char* hq_version(void) { return hq::kToolVersion; }

const char* hq_status_name(hq_status status) {
  if (status == HQ_OK) return "Ok";
  return hq::to_string(static_cast<hq::ErrorCode>(status));
}

const char* hq_last_error(void) { return last_error.c_str(); }

hq_status hq_field_create(uint32_t p, uint32_t h, uint32_t m, hq_field** out) {
  return guarded([&] {
    need(out);
    *out = nullptr;
    const hq::Field& f = hq::Field::get(p, h, m);
    *out = new hq_field{&f, hq::field_json(f).dump()};
  });
}

void hq_field_free(hq_field* field) { delete field; }

const char* hq_field_json(const hq_field* field) { return field ? field->json.c_str() : ""; }

uint64_t hq_field_q(const hq_field* field) { return field ? field->f->q() : 0; }

hq_status hq_add(const hq_field* field, uint64_t a, uint64_t b, uint64_t* out) {
  return guarded([&] {
    need(out);
    *out = (element(field, a) + element(field, b)).rep();
  });
}

hq_status hq_mul(const hq_field* field, uint64_t a, uint64_t b, uint64_t* out) {
  return guarded([&] {
    need(out);
    *out = (element(field, a) * element(field, b)).rep();
  });
}

hq_status hq_div(const hq_field* field, uint64_t a, uint64_t b, uint64_t* out) {
  return guarded([&] {
    need(out);
    *out = (element(field, a) / element(field, b)).rep();
  });
}

hq_status hq_pow(const hq_field* field, uint64_t a, uint64_t e_hi, uint64_t e_lo, uint64_t* out) {
  return guarded([&] {
    need(out);
    *out = element(field, a).pow((hq::u128(e_hi) << 64) | e_lo).rep();
  });
}

hq_status hq_frob_q(const hq_field* field, uint64_t a, uint64_t k, uint64_t* out) {
  return guarded([&] {
    need(out);
    *out = element(field, a).frob_q(k).rep();
  });
}

hq_status hq_on_curve(const hq_field* field, uint64_t x, uint64_t y, int* out) {
  return guarded([&] {
    need(out);
    const hq::Field& f = field_of(field);
    if (!f.contains_fq2()) hq::raise(hq::ErrorCode::FieldTooSmall, "field does not contain F_{q^2}");
    *out = hq::on_curve_affine(element(field, x), element(field, y)) ? 1 : 0;
  });
}

hq_status hq_eval_t(const hq_field* field, uint64_t x, uint64_t y, hq_outcome* kind, uint64_t* value) {
  return guarded([&] { store(hq::eval_t(element(field, x), element(field, y)), kind, value); });
}

hq_status hq_eval_t_x(const hq_field* field, uint64_t x, hq_outcome* kind, uint64_t* value) {
  return guarded([&] { store(hq::eval_t_x(element(field, x)), kind, value); });
}

hq_status hq_eval_t_y(const hq_field* field, uint64_t y, hq_outcome* kind, uint64_t* value) {
  return guarded([&] { store(hq::eval_t_y(element(field, y)), kind, value); });
}

hq_status hq_run(const char* subcommand, const char* config_json, hq_report** out) {
  return guarded([&] {
    need(out);
    *out = nullptr;
    if (subcommand == nullptr) hq::raise(hq::ErrorCode::InvalidArgument, "null subcommand");
    hq::Json cfg = hq::Json::object();
    if (config_json != nullptr && *config_json != '\0') {
      cfg = hq::Json::parse(config_json, nullptr, false);
      if (cfg.is_discarded()) hq::raise(hq::ErrorCode::BadParameters, "configuration is not valid JSON");
    }
    hq::Json doc = hq::run(subcommand, hq::config_from_json(cfg));
    const bool pass = doc["pass"].get<bool>();
    *out = new hq_report{std::move(doc), pass, {}};
  });
}

void hq_report_free(hq_report* report) { delete report; }

int hq_report_pass(const hq_report* report) { return report && report->pass ? 1 : 0; }

const char* hq_report_json(hq_report* report, int indent) {
  if (report == nullptr) return "";
  report->text = report->doc.dump(indent < 0 ? -1 : indent);
  return report->text.c_str();
}

}  // extern "C"
