// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "wehrl/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wehrl/error.hpp"

namespace wehrl {

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw Error(ErrorCode::InvalidState, std::string("state file lacks array '") + key + "'");
  }
  std::vector<double> out;
  out.reserve(doc[key].size());
  for (const auto& v : doc[key]) {
    if (!v.is_number()) throw Error(ErrorCode::InvalidState, std::string("non-numeric entry in ") + key);
    out.push_back(v.get<double>());
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text << '\n';
}

}  // namespace

LoadedState parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidState, std::string("malformed state JSON: ") + e.what());
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw Error(ErrorCode::InvalidState, "state file lacks integer 'dim'");
  }
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw Error(ErrorCode::InvalidState, "dim must be >= 1");
  const std::string kind = doc.value("kind", std::string("pure"));
  const auto re = number_array(doc, "re");
  const auto im = number_array(doc, "im");
  if (re.size() != im.size()) throw Error(ErrorCode::InvalidState, "re/im length mismatch");

  if (kind == "pure") {
    if (re.size() != static_cast<std::size_t>(dim)) {
      throw Error(ErrorCode::InvalidState, "pure state needs dim coefficients");
    }
    CVector c(dim);
    for (int n = 0; n < dim; ++n) c[n] = cplx(re[n], im[n]);
    auto f = FockVector::from_unit(std::move(c));
    return {DensityMatrix::pure(f), f};
  }
  if (kind == "mixed") {
    if (re.size() != static_cast<std::size_t>(dim) * dim) {
      throw Error(ErrorCode::InvalidState, "mixed state needs dim*dim entries");
    }
    CMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) m(i, j) = cplx(re[i * dim + j], im[i * dim + j]);
    }
    return {DensityMatrix::from_matrix(m), std::nullopt};
  }
  throw Error(ErrorCode::InvalidState, "kind must be 'pure' or 'mixed'");
}

LoadedState load_state(const std::filesystem::path& path) { return parse_state_json(read_file(path)); }

std::string state_to_json(const FockVector& f) {
  json doc;
  doc["dim"] = f.dim();
  doc["kind"] = "pure";
  std::vector<double> re, im;
  for (int n = 0; n < f.dim(); ++n) {
    re.push_back(f[n].real());
    im.push_back(f[n].imag());
  }
  doc["re"] = re;
  doc["im"] = im;
  return doc.dump();
}

std::string state_to_json(const DensityMatrix& rho) {
  json doc;
  const int dim = rho.dim();
  doc["dim"] = dim;
  doc["kind"] = "mixed";
  std::vector<double> re, im;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      re.push_back(rho(i, j).real());
      im.push_back(rho(i, j).imag());
    }
  }
  doc["re"] = re;
  doc["im"] = im;
  return doc.dump();
}

void save_state(const std::filesystem::path& path, const FockVector& f) {
  write_file(path, state_to_json(f));
}

void save_state(const std::filesystem::path& path, const DensityMatrix& rho) {
  write_file(path, state_to_json(rho));
}

}  // namespace wehrl
