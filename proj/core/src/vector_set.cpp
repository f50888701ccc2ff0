#include "kscontext/vector_set.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "kscontext/error.hpp"

namespace kscontext {

using nlohmann::json;

ExactVector canonical_ray(const ExactVector& v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const ExactScalar& x) { return !x.is_zero(); });
  if (lead == v.end()) return v;
  ExactScalar scale = lead->inverse();
  ExactVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * scale);
  return out;
}

bool projectively_equal(const ExactVector& u, const ExactVector& v) {
  if (u.size() != v.size()) return false;
  return canonical_ray(u) == canonical_ray(v);
}

namespace {

std::string ray_key(const ExactVector& v) {
  std::string key;
  for (const auto& x : canonical_ray(v)) {
    key += x.to_string();
    key += ';';
  }
  return key;
}

std::vector<std::string> sorted_keys(const VectorSet& s) {
  std::vector<std::string> keys;
  keys.reserve(s.rays.size());
  for (const auto& r : s.rays) keys.push_back(ray_key(r));
  std::sort(keys.begin(), keys.end());
  return keys;
}

json encode_rational(const mpq_class& q) {
  auto encode_int = [](const mpz_class& z) -> json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  return json::array({encode_int(q.get_num()), encode_int(q.get_den())});
}

mpz_class decode_int(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
    return mpz_class(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) {
      throw InputError(InputErrorKind::kSchema, "coordinate integer is not a decimal string");
    }
    return z;
  }
  throw InputError(InputErrorKind::kSchema, "coordinate entries must be integers");
}

ExactScalar decode_scalar(const json& j) {
  if (!j.is_array() || j.size() != 8) {
    throw InputError(InputErrorKind::kSchema, "each coordinate must be an array of 8 integers");
  }
  mpq_class parts[4];
  for (int k = 0; k < 4; ++k) {
    mpz_class num = decode_int(j[2 * k]);
    mpz_class den = decode_int(j[2 * k + 1]);
    if (den <= 0) throw InputError(InputErrorKind::kSchema, "denominators must be positive");
    parts[k] = mpq_class(num, den);
    parts[k].canonicalize();
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace

void validate(const VectorSet& set) {
  if (set.dimension < 1) throw InputError(InputErrorKind::kSchema, "dimension must be positive");
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(set.rays.size());
  for (std::size_t i = 0; i < set.rays.size(); ++i) {
    const auto& ray = set.rays[i];
    if (ray.size() != static_cast<std::size_t>(set.dimension)) {
      throw InputError(InputErrorKind::kDimensionMismatch,
                       "ray " + std::to_string(i) + " has length " + std::to_string(ray.size()) +
                           " but dimension is " + std::to_string(set.dimension));
    }
    if (std::all_of(ray.begin(), ray.end(), [](const ExactScalar& x) { return x.is_zero(); })) {
      throw InputError(InputErrorKind::kZeroRay, "ray " + std::to_string(i) + " is zero");
    }
    keys.emplace_back(ray_key(ray), i);
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t k = 1; k < keys.size(); ++k) {
    if (keys[k].first == keys[k - 1].first) {
      auto [a, b] = std::minmax(keys[k - 1].second, keys[k].second);
      throw InputError(InputErrorKind::kProjectiveDuplicate,
                       "rays " + std::to_string(a) + " and " + std::to_string(b) + " are projectively equal");
    }
  }
}

bool same_rays(const VectorSet& a, const VectorSet& b) {
  return a.dimension == b.dimension && a.rays.size() == b.rays.size() && sorted_keys(a) == sorted_keys(b);
}

std::string serialize_vector_set(const VectorSet& set) {
  json rays = json::array();
  for (const auto& ray : set.rays) {
    json coords = json::array();
    for (const auto& x : ray) {
      json c = json::array();
      for (const mpq_class* q : {&x.re_unit(), &x.re_sqrt2(), &x.im_unit(), &x.im_sqrt2()}) {
        for (auto& v : encode_rational(*q)) c.push_back(v);
      }
      coords.push_back(std::move(c));
    }
    rays.push_back(std::move(coords));
  }
  json doc = {{"name", set.name}, {"dimension", set.dimension}, {"rays", std::move(rays)}};
  return doc.dump();
}

VectorSet parse_vector_set(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(InputErrorKind::kSyntax, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc.contains("dimension") || !doc.contains("rays")) {
    throw InputError(InputErrorKind::kSchema, "vector set needs fields name, dimension, rays");
  }
  if (!doc["name"].is_string() || !doc["dimension"].is_number_integer() || !doc["rays"].is_array()) {
    throw InputError(InputErrorKind::kSchema, "vector set fields have the wrong types");
  }
  VectorSet set;
  set.name = doc["name"].get<std::string>();
  auto dim = doc["dimension"].get<std::int64_t>();
  if (dim < 1 || dim > std::numeric_limits<int>::max()) {
    throw InputError(InputErrorKind::kSchema, "dimension must be a positive integer");
  }
  set.dimension = static_cast<int>(dim);
  for (const auto& ray : doc["rays"]) {
    if (!ray.is_array()) throw InputError(InputErrorKind::kSchema, "each ray must be an array");
    ExactVector v;
    v.reserve(ray.size());
    for (const auto& coord : ray) v.push_back(decode_scalar(coord));
    set.rays.push_back(std::move(v));
  }
  validate(set);
  return set;
}

}  // namespace kscontext
