#include "kscontext/catalog.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "catalog_data.hpp"
#include "kscontext/error.hpp"

namespace kscontext {

namespace {

VectorSet from_literals(const std::string& name, int dimension, const std::vector<std::string_view>& rows) {
  VectorSet set{name, dimension, {}};
  set.rays.reserve(rows.size());
  for (auto row : rows) {
    ExactVector ray;
    std::stringstream ss{std::string(row)};
    std::string token;
    while (std::getline(ss, token, ',')) ray.push_back(parse_scalar_literal(token));
    set.rays.push_back(std::move(ray));
  }
  validate(set);
  return set;
}

VectorSet from_sign_strings(const std::string& name, const std::vector<std::string_view>& rows) {
  VectorSet set{name, 8, {}};
  for (auto row : rows) {
    ExactVector ray;
    for (char ch : row) ray.emplace_back(ch == '+' ? 1L : ch == '-' ? -1L : 0L);
    set.rays.push_back(std::move(ray));
  }
  validate(set);
  return set;
}

using Matrix4 = std::array<std::array<ExactScalar, 4>, 4>;

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      ExactScalar s;
      for (int k = 0; k < 4; ++k) {
        if (!a[r][k].is_zero() && !b[k][c].is_zero()) s += a[r][k] * b[k][c];
      }
      m[r][c] = s;
    }
  }
  return m;
}

// Single-qubit Pauli as a 2x2 matrix indexed by I, X, Y, Z.
std::array<std::array<ExactScalar, 2>, 2> pauli1(char p) {
  const ExactScalar i = ExactScalar::i();
  switch (p) {
    case 'X': return {{{0, 1}, {1, 0}}};
    case 'Y': return {{{0, -i}, {i, 0}}};
    case 'Z': return {{{1, 0}, {0, -1}}};
    default: return {{{1, 0}, {0, 1}}};
  }
}

Matrix4 pauli2(char a, char b) {
  auto pa = pauli1(a);
  auto pb = pauli1(b);
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[r][c] = pa[r / 2][c / 2] * pb[r % 2][c % 2];
  }
  return m;
}

// I + sign * m
Matrix4 shifted(const Matrix4& m, int sign) {
  Matrix4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      out[r][c] = sign > 0 ? m[r][c] : -m[r][c];
      if (r == c) out[r][c] += 1;
    }
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"peres33", 3, 33, "Peres 33-ray Kochen-Specker set"},
      {"cabello18", 4, 18, "Cabello 18-ray Kochen-Specker set"},
      {"peres_mermin24", 4, 24, "Peres-Mermin magic square eigenbases"},
      {"stabilizer2q", 4, 60, "two-qubit stabilizer states"},
      {"e8", 8, 120, "E8 root system"},
  };
  return entries;
}

VectorSet embedded_builtin(const std::string& name) {
  if (name == "peres33") return from_literals(name, 3, data::kPeres33);
  if (name == "cabello18") return from_literals(name, 4, data::kCabello18);
  if (name == "peres_mermin24") return from_literals(name, 4, data::kPeresMermin24);
  if (name == "stabilizer2q") return from_literals(name, 4, data::kStabilizer2q);
  if (name == "e8") return from_sign_strings(name, data::kE8Signs);
  throw InputError(InputErrorKind::kUnknownName, "unknown vector set: " + name);
}

VectorSet load_builtin(const std::string& name) {
  if (name == "stabilizer2q") return generate_stabilizer_rays();
  if (name == "e8") return generate_e8_rays();
  return embedded_builtin(name);
}

VectorSet generate_stabilizer_rays() {
  std::vector<std::string> paulis;
  for (char a : std::string("IXYZ")) {
    for (char b : std::string("IXYZ")) {
      if (a != 'I' || b != 'I') paulis.push_back({a, b});
    }
  }

  VectorSet set{"stabilizer2q", 4, {}};
  auto known = [&](const ExactVector& ray) {
    for (const auto& r : set.rays) {
      if (r == ray) return true;
    }
    return false;
  };

  for (std::size_t p = 0; p < paulis.size(); ++p) {
    Matrix4 mp = pauli2(paulis[p][0], paulis[p][1]);
    for (std::size_t q = p + 1; q < paulis.size(); ++q) {
      Matrix4 mq = pauli2(paulis[q][0], paulis[q][1]);
      Matrix4 pq = multiply(mp, mq);
      Matrix4 qp = multiply(mq, mp);
      bool commute = true;
      for (int r = 0; r < 4 && commute; ++r) {
        for (int c = 0; c < 4 && commute; ++c) commute = pq[r][c] == qp[r][c];
      }
      if (!commute) continue;
      for (int s : {1, -1}) {
        for (int t : {1, -1}) {
          // Rank-one projector up to the factor 1/4; any nonzero column spans its range.
          Matrix4 proj = multiply(shifted(mp, s), shifted(mq, t));
          for (int c = 0; c < 4; ++c) {
            ExactVector column{proj[0][c], proj[1][c], proj[2][c], proj[3][c]};
            bool nonzero = false;
            for (const auto& x : column) nonzero = nonzero || !x.is_zero();
            if (!nonzero) continue;
            ExactVector ray = canonical_ray(column);
            if (!known(ray)) set.rays.push_back(std::move(ray));
            break;
          }
        }
      }
    }
  }
  validate(set);
  return set;
}

std::vector<ExactVector> e8_roots() {
  std::vector<ExactVector> roots;
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      for (long sa : {1L, -1L}) {
        for (long sb : {1L, -1L}) {
          ExactVector v(8, ExactScalar(0L));
          v[a] = sa;
          v[b] = sb;
          roots.push_back(std::move(v));
        }
      }
    }
  }
  const ExactScalar half = ExactScalar::rational(1, 2);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    ExactVector v;
    for (int k = 0; k < 8; ++k) v.push_back((mask >> k) & 1U ? -half : half);
    roots.push_back(std::move(v));
  }
  return roots;
}

VectorSet generate_e8_rays() {
  VectorSet set{"e8", 8, {}};
  for (auto& root : e8_roots()) {
    for (const auto& x : root) {
      if (x.is_zero()) continue;
      if (x.re_unit() > 0) set.rays.push_back(root);
      break;
    }
  }
  validate(set);
  return set;
}

}  // namespace kscontext
