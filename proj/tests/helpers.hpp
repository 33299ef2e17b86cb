#pragma once

#include <string>

#include "oracles.hpp"
#include "qbracket/laurent.hpp"
#include "qbracket/multipoly.hpp"
#include "qbracket/search.hpp"

inline std::string data_path(const std::string &file) {
  return std::string(QBRACKET_DATA_DIR) + "/" + file;
}

inline qbracket::Polynomial P(const std::string &text) {
  return qbracket::parse_polynomial(text);
}

inline oracle::Laurent to_oracle(const qbracket::LaurentPolynomial &l) {
  oracle::Laurent out;
  for (const auto &[e, c] : l.terms())
    out[e] = static_cast<long long>(c);
  return out;
}

inline oracle::Poly3 to_oracle(const qbracket::Polynomial &p) {
  oracle::Poly3 out;
  for (const auto &[m, c] : p.terms())
    out[{static_cast<int>(m.exps[0]), static_cast<int>(m.exps[1]),
         static_cast<int>(m.exps[2])}] = static_cast<long long>(c);
  return out;
}

inline oracle::PD to_oracle_pd(const qbracket::Diagram &d) {
  return {d.crossings().begin(), d.crossings().end()};
}

inline std::vector<qbracket::TableEntry> load_entries(const std::string &file) {
  auto t = qbracket::load_table(data_path(file));
  return t.entries;
}
