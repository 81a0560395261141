#pragma once

// JSON encodings.
//
//   integer            number, or decimal string when outside 64-bit range
//   Z element / ideal  integer (ideal: nonnegative generator)
//   ZSqrt-5 element    [a, b] meaning a + b*sqrt(-5)
//   ZSqrt-5 ideal      [[p, 0], [r, s]] Hermite rows, or {"generators": [...]}
//   fractional ideal   {"num": ideal, "den": d}
//   matrix             {"ring": "Z" | "ZSqrt-5", "entries": [[...], ...]}
//   chain              {"ring": ..., "d": [...]} or {"ring": ..., "e": [...]}, or a bare list of d's

#include <string>
#include <vector>

#include <json.hpp>

#include "detdiv/error.hpp"
#include "detdiv/ideal.hpp"
#include "detdiv/invariants.hpp"
#include "detdiv/oracle.hpp"
#include "detdiv/realizability.hpp"
#include "detdiv/smith.hpp"

namespace detdiv {

using Json = nlohmann::json;

inline Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::MalformedInput, "not a decimal integer: " + j.get<std::string>());
    return x;
  }
  throw Error(ErrorCode::MalformedInput, "expected an integer, got " + j.dump());
}

inline RingTag ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring")) return RingTag::Z;
  const auto& r = j.at("ring");
  if (r == "Z") return RingTag::Z;
  if (r == "ZSqrt-5") return RingTag::ZSqrtMinus5;
  throw Error(ErrorCode::MalformedInput, "unknown ring " + r.dump());
}

template <Ring R>
void expect_ring(const Json& j) {
  if (ring_from_json(j) != R::tag)
    throw Error(ErrorCode::RingMismatch, "expected ring " + std::string(ring_name(R::tag)));
}

template <Ring R>
Json elem_to_json(const Elem<R>& x) {
  if constexpr (std::same_as<R, IntegerRing>)
    return integer_to_json(x);
  else
    return Json::array({integer_to_json(x.a()), integer_to_json(x.b())});
}

template <Ring R>
Elem<R> elem_from_json(const Json& j) {
  if constexpr (std::same_as<R, IntegerRing>) {
    if (j.is_array()) throw Error(ErrorCode::RingMismatch, "pair entry in a Z matrix");
    return integer_from_json(j);
  } else {
    if (j.is_array()) {
      if (j.size() != 2) throw Error(ErrorCode::MalformedInput, "element must be [a, b]");
      return QuadInt(integer_from_json(j[0]), integer_from_json(j[1]));
    }
    return QuadInt(integer_from_json(j));
  }
}

template <Ring R>
Json ideal_to_json(const Ideal<R>& x) {
  if constexpr (std::same_as<R, IntegerRing>) {
    return integer_to_json(x.generator());
  } else {
    return Json::array({Json::array({integer_to_json(x.p()), 0}),
                        Json::array({integer_to_json(x.r()), integer_to_json(x.s())})});
  }
}

template <Ring R>
Ideal<R> ideal_from_json(const Json& j) {
  if (j.is_object() && j.contains("generators")) {
    std::vector<Elem<R>> gens;
    for (const auto& g : j.at("generators")) gens.push_back(elem_from_json<R>(g));
    return Ideal<R>::from_generators(gens);
  }
  if constexpr (std::same_as<R, IntegerRing>) {
    if (j.is_array()) throw Error(ErrorCode::RingMismatch, "Hermite basis given for a Z ideal");
    return IntegerIdeal::principal(integer_from_json(j));
  } else {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
        j[1].size() != 2)
      throw Error(ErrorCode::MalformedInput, "ZSqrt-5 ideal must be [[p, 0], [r, s]]");
    if (sgn(integer_from_json(j[0][1])) != 0)
      throw Error(ErrorCode::MalformedInput, "Hermite basis must have a zero upper-right entry");
    return QuadIdeal::from_hnf(integer_from_json(j[0][0]), integer_from_json(j[1][0]),
                               integer_from_json(j[1][1]));
  }
}

template <Ring R>
Json frac_to_json(const FracIdeal<R>& x) {
  return Json{{"num", ideal_to_json(x.num())}, {"den", integer_to_json(x.den())}};
}

template <Ring R>
FracIdeal<R> frac_from_json(const Json& j) {
  return FracIdeal<R>(ideal_from_json<R>(j.at("num")), integer_from_json(j.at("den")));
}

template <Ring R>
Json matrix_entries_to_json(const Matrix<R>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(elem_to_json<R>(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Ring R>
Json matrix_to_json(const Matrix<R>& m) {
  return Json{{"ring", ring_name(R::tag)}, {"entries", matrix_entries_to_json(m)}};
}

template <Ring R>
Matrix<R> matrix_from_json(const Json& j) {
  const Json* entries = &j;
  if (j.is_object()) {
    expect_ring<R>(j);
    entries = &j.at("entries");
  }
  if (!entries->is_array() || entries->empty())
    throw Error(ErrorCode::MalformedInput, "matrix entries must be a nonempty list of rows");
  std::vector<std::vector<Elem<R>>> rows;
  for (const auto& row : *entries) {
    if (!row.is_array()) throw Error(ErrorCode::MalformedInput, "matrix row must be a list");
    std::vector<Elem<R>> r;
    for (const auto& x : row) r.push_back(elem_from_json<R>(x));
    rows.push_back(std::move(r));
  }
  return Matrix<R>::from_rows(rows);
}

template <Ring R>
Json chain_to_json(const DivisorChain<R>& c) {
  Json d = Json::array();
  for (const auto& x : c.determinantal()) d.push_back(ideal_to_json(x));
  Json out{{"ring", ring_name(R::tag)}, {"d", d}};
  if (auto e = c.elementary()) {
    Json ej = Json::array();
    for (const auto& x : *e) ej.push_back(ideal_to_json(x));
    out["e"] = std::move(ej);
  } else {
    out["e"] = nullptr;
  }
  return out;
}

template <Ring R>
DivisorChain<R> chain_from_json(const Json& j) {
  auto list = [](const Json& arr) {
    if (!arr.is_array()) throw Error(ErrorCode::MalformedInput, "chain must be a list of ideals");
    std::vector<Ideal<R>> out;
    for (const auto& x : arr) out.push_back(ideal_from_json<R>(x));
    return out;
  };
  if (j.is_array()) return DivisorChain<R>(list(j));
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "chain must be a list or an object");
  expect_ring<R>(j);
  if (j.contains("d")) return DivisorChain<R>(list(j.at("d")));
  if (j.contains("e")) return DivisorChain<R>::from_elementary(list(j.at("e")));
  throw Error(ErrorCode::MalformedInput, "chain object needs \"d\" or \"e\"");
}

template <Ring R>
Triple<R> triple_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "triple must be an object");
  expect_ring<R>(j);
  // bare lists inside a triple inherit the triple's ring
  return Triple<R>(chain_from_json<R>(j.at("a")), chain_from_json<R>(j.at("b")),
                   chain_from_json<R>(j.at("c")));
}

template <Ring R>
Json verdict_to_json(const Verdict<R>& v) {
  Json out{{"outcome", to_string(v.outcome)}, {"rationale", v.rationale}};
  out["violated"] = v.violated ? Json(*v.violated) : Json(nullptr);
  if (v.witness) {
    out["witnessA"] = matrix_to_json(v.witness->first);
    out["witnessB"] = matrix_to_json(v.witness->second);
  } else {
    out["witnessA"] = nullptr;
    out["witnessB"] = nullptr;
  }
  return out;
}

inline Json smith_to_json(const SmithDecomposition& s) {
  return Json{{"P", matrix_to_json(s.P)}, {"D", matrix_to_json(s.D)}, {"Q", matrix_to_json(s.Q)}};
}

inline std::string_view to_string(ScanMode m) {
  return m == ScanMode::Exhaustive ? "exhaustive" : "sampled";
}

template <Ring R>
Json triple_key_to_json(const TripleKey& key, std::size_t n) {
  auto t = decode_triple<R>(key, n);
  auto chain = [](const DivisorChain<R>& c) {
    Json out = Json::array();
    for (const auto& x : c.determinantal()) out.push_back(ideal_to_json(x));
    return out;
  };
  return Json{{"a", chain(t.a)}, {"b", chain(t.b)}, {"c", chain(t.c)}};
}

inline Json report_to_json(const ScanReport& r, const ScanConfig& cfg) {
  Json triples = Json::array();
  for (const auto& key : r.realized_triples) {
    if (r.ring == RingTag::Z)
      triples.push_back(triple_key_to_json<IntegerRing>(key, r.n));
    else
      triples.push_back(triple_key_to_json<QuadraticRing>(key, r.n));
  }
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) cex.push_back(Json{{"property", c.property}, {"detail", c.detail}});
  Json stats = Json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  Json config{{"n", cfg.n},
              {"bound", cfg.entry_bound},
              {"ring", ring_name(cfg.ring)},
              {"mode", to_string(cfg.mode)},
              {"seed", cfg.seed},
              {"samples", cfg.sample_count}};
  config["detBound"] = cfg.det_bound ? Json(*cfg.det_bound) : Json(nullptr);
  return Json{{"config", config},
              {"ok", r.ok()},
              {"stats", stats},
              {"realizedTriples", triples},
              {"counterexamples", cex}};
}

}  // namespace detdiv
