#pragma once

// detdiv command-line front end. Every verb reads JSON, writes JSON on stdout.
// Exit codes: 0 success, 1 domain-level negative answer, 2 input error.

#include <array>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "detdiv/detdiv.hpp"
#include "detdiv/json_io.hpp"

namespace detdiv::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

inline constexpr std::array<std::string_view, 10> kVerbs = {
    "divisors",     "compound", "smith",      "equivalent",  "check-chain",
    "check-triple", "realize",  "block-form", "oracle-scan", "verify-lemma"};

struct CliError {
  std::string code;
  std::string message;
};

inline Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw CliError{"io_error", "cannot open " + path};
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CliError{"malformed_json", path + ": " + e.what()};
  }
}

template <class F>
decltype(auto) with_ring(RingTag tag, F&& f) {
  if (tag == RingTag::Z) return f(IntegerRing{});
  return f(QuadraticRing{});
}

template <Ring R>
Json class_to_json(const IdealClass<R>& c) {
  return c.principal ? "principal" : "non-principal";
}

struct Options {
  std::string in, a, b, c, out;
  int k = 1;
  std::size_t n = 2;
  std::int64_t bound = 2;
  std::string mode = "exhaustive";
  std::string ring = "Z";
  std::string check = "triples";
  std::int64_t det_bound = 0;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  std::uint64_t ceiling = 10'000'000;
};

inline int cmd_divisors(const Options& o, Json& result) {
  const Json j = read_json(o.in);
  return with_ring(ring_from_json(j), [&]<class R>(R) {
    const auto m = matrix_from_json<R>(j);
    const auto chain = divisor_chain(m);
    Json d = Json::array(), e = Json::array();
    for (int k = 1; k <= static_cast<int>(m.size()); ++k) {
      d.push_back(ideal_to_json(chain.d(k)));
      e.push_back(ideal_to_json(elem_divisor(m, k)));
    }
    result = Json{{"ring", ring_name(R::tag)}, {"d", d}, {"e", e}, {"rank", rank(m)}};
    result["columnClass"] = m.is_zero() ? Json(nullptr) : class_to_json(column_class(m));
    return kOk;
  });
}

inline int cmd_compound(const Options& o, Json& result) {
  const Json j = read_json(o.in);
  return with_ring(ring_from_json(j), [&]<class R>(R) {
    const auto m = matrix_from_json<R>(j);
    if (o.k < 1 || static_cast<std::size_t>(o.k) > m.size())
      throw Error(ErrorCode::InvalidArgument, "k must satisfy 1 <= k <= n");
    result = matrix_to_json(compound(m, static_cast<std::size_t>(o.k)));
    return kOk;
  });
}

inline int cmd_smith(const Options& o, Json& result) {
  const auto a = matrix_from_json<IntegerRing>(read_json(o.in));
  const auto s = smith_normal_form(a);
  result = smith_to_json(s);
  result["verified"] = s.P * a * s.Q == s.D && is_unimodular(s.P) && is_unimodular(s.Q);
  return kOk;
}

inline int cmd_equivalent(const Options& o, Json& result) {
  const Json ja = read_json(o.a), jb = read_json(o.b);
  if (ring_from_json(ja) != ring_from_json(jb))
    throw Error(ErrorCode::RingMismatch, "matrices live over different rings");
  return with_ring(ring_from_json(ja), [&]<class R>(R) {
    const auto a = matrix_from_json<R>(ja), b = matrix_from_json<R>(jb);
    const bool eq = equivalent(a, b);
    result = Json{{"equivalent", eq}};
    if constexpr (std::same_as<R, IntegerRing>) {
      if (eq) {
        if (auto cert = transform_certificate(a, b)) {
          result["P"] = matrix_to_json(cert->first);
          result["Q"] = matrix_to_json(cert->second);
        }
      }
    }
    return eq ? kOk : kNegative;
  });
}

inline int cmd_check_chain(const Options& o, Json& result) {
  const Json j = read_json(o.in);
  return with_ring(ring_from_json(j), [&]<class R>(R) {
    const auto c = chain_from_json<R>(j);
    const int bad = first_chain_violation(c);
    result = chain_to_json(c);
    result["valid"] = bad == 0;
    result["violated"] = bad == 0 ? Json(nullptr) : Json(bad);
    return bad == 0 ? kOk : kNegative;
  });
}

template <Ring R>
int emit_verdict(const Triple<R>& t, Json& result) {
  const auto v = check_triple(t);
  result = verdict_to_json(v);
  return v.outcome == Outcome::NotRealizable ? kNegative : kOk;
}

inline int cmd_check_triple(const Options& o, Json& result) {
  const Json j = read_json(o.in);
  return with_ring(ring_from_json(j),
                   [&]<class R>(R) { return emit_verdict(triple_from_json<R>(j), result); });
}

inline int cmd_realize(const Options& o, Json& result) {
  const Json ja = read_json(o.a), jb = read_json(o.b);
  const RingTag tag = ring_from_json(ja);
  if (ring_from_json(jb) != tag) throw Error(ErrorCode::RingMismatch, "chains live over different rings");
  return with_ring(tag, [&]<class R>(R) {
    auto a = chain_from_json<R>(ja), b = chain_from_json<R>(jb);
    // without --c the product chain a_k b_k is realized
    DivisorChain<R> c = o.c.empty() ? a * b : [&] {
      const Json jc = read_json(o.c);
      if (ring_from_json(jc) != tag) throw Error(ErrorCode::RingMismatch, "chains live over different rings");
      return chain_from_json<R>(jc);
    }();
    return emit_verdict(Triple<R>(std::move(a), std::move(b), std::move(c)), result);
  });
}

inline int cmd_block_form(const Options& o, Json& result) {
  const auto a = matrix_from_json<IntegerRing>(read_json(o.in));
  const auto bnf = block_normal_form(a);
  Json blocks = Json::array();
  for (const auto& blk : bnf.blocks) blocks.push_back(matrix_entries_to_json(blk));
  result = Json{{"blocks", blocks}, {"P", matrix_to_json(bnf.P)}, {"Q", matrix_to_json(bnf.Q)}};
  result["verified"] = bnf.P * pad_with_zeros(a) * bnf.Q == block_diagonal<IntegerRing>(bnf.blocks);
  return kOk;
}

inline int cmd_verify_lemma(const Options& o, Json& result) {
  const Json j = read_json(o.in);
  return with_ring(ring_from_json(j), [&]<class R>(R) {
    std::vector<Matrix<R>> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(matrix_from_json<R>(b));
    const auto rep = verify_block_lemma<R>(blocks);
    Json e = Json::array(), g = Json::array();
    for (const auto& x : rep.elementary) e.push_back(ideal_to_json(x));
    for (const auto& x : rep.block_gcds) g.push_back(ideal_to_json(x));
    result = Json{{"ring", ring_name(R::tag)},
                  {"elementary", e},
                  {"blockGcds", g},
                  {"elementaryMatch", rep.elementary_match},
                  {"assembledClass", class_to_json(rep.assembled_class)},
                  {"productClass", class_to_json(rep.product_class)},
                  {"classMatch", rep.class_match},
                  {"ok", rep.ok()}};
    return rep.ok() ? kOk : kNegative;
  });
}

inline int cmd_oracle_scan(const Options& o, Json& result) {
  ScanConfig cfg;
  cfg.n = o.n;
  cfg.entry_bound = o.bound;
  if (o.ring == "Z")
    cfg.ring = RingTag::Z;
  else if (o.ring == "ZSqrt-5")
    cfg.ring = RingTag::ZSqrtMinus5;
  else
    throw Error(ErrorCode::InvalidArgument, "unknown ring " + o.ring);
  if (o.mode == "exhaustive")
    cfg.mode = ScanMode::Exhaustive;
  else if (o.mode == "sampled")
    cfg.mode = ScanMode::Sampled;
  else
    throw Error(ErrorCode::InvalidArgument, "mode must be exhaustive or sampled");
  if (o.det_bound > 0) cfg.det_bound = o.det_bound;
  cfg.sample_count = o.samples;
  cfg.seed = o.seed;
  cfg.pair_ceiling = o.ceiling;

  ScanReport rep;
  if (o.check == "triples") {
    rep = with_ring(cfg.ring, [&]<class R>(R) { return enumerate_realized_triples<R>(cfg); });
  } else if (o.check == "bounds") {
    rep = with_ring(cfg.ring, [&]<class R>(R) { return verify_bound_theorems<R>(cfg); });
  } else if (o.check == "cross") {
    rep = cross_check_checker(cfg);
  } else {
    throw Error(ErrorCode::InvalidArgument, "check must be triples, bounds or cross");
  }
  result = report_to_json(rep, cfg);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw CliError{"io_error", "cannot write " + o.out};
    f << result.dump(2) << '\n';
    // stdout carries only the summary when the report goes to a file
    result = Json{{"ok", rep.ok()}, {"stats", result["stats"]}, {"out", o.out}};
  }
  return rep.ok() ? kOk : kNegative;
}

inline void emit_error(std::ostream& err, const std::string& code, const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << '\n';
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || (args[0] != "--help" && args[0] != "-h" &&
                       std::find(kVerbs.begin(), kVerbs.end(), args[0]) == kVerbs.end())) {
    emit_error(err, "unknown_verb", args.empty() ? "no verb given" : "unknown verb " + args[0]);
    return kInputError;
  }

  CLI::App app{"Determinantal divisors, Smith forms and realizability of divisor triples"};
  app.require_subcommand(1);
  Options o;

  auto* divisors = app.add_subcommand("divisors", "d_k, e_k, rank and column class of a matrix");
  divisors->add_option("--in", o.in, "matrix JSON")->required();
  auto* comp = app.add_subcommand("compound", "k-th compound matrix");
  comp->add_option("--in", o.in, "matrix JSON")->required();
  comp->add_option("--k", o.k, "minor size")->required();
  auto* smith = app.add_subcommand("smith", "Smith normal form with certificates (Z)");
  smith->add_option("--in", o.in, "matrix JSON")->required();
  auto* eqv = app.add_subcommand("equivalent", "decide B = P A Q");
  eqv->add_option("--a", o.a, "matrix JSON")->required();
  eqv->add_option("--b", o.b, "matrix JSON")->required();
  auto* chk = app.add_subcommand("check-chain", "is this the divisor chain of a nonsingular matrix");
  chk->add_option("--in", o.in, "chain JSON")->required();
  auto* trip = app.add_subcommand("check-triple", "realizability verdict for a triple");
  trip->add_option("--in", o.in, "triple JSON")->required();
  auto* real = app.add_subcommand("realize", "realizability verdict from three chain files");
  real->add_option("--a", o.a, "chain JSON")->required();
  real->add_option("--b", o.b, "chain JSON")->required();
  real->add_option("--c", o.c, "chain JSON (default: a_k b_k)");
  auto* blk = app.add_subcommand("block-form", "2x2 block normal form of (A 0; 0 0) (Z)");
  blk->add_option("--in", o.in, "matrix JSON")->required();
  auto* scan = app.add_subcommand("oracle-scan", "brute-force scan over small matrix pairs");
  scan->add_option("--n", o.n, "dimension")->capture_default_str();
  scan->add_option("--bound", o.bound, "max |coordinate| of entries")->capture_default_str();
  scan->add_option("--mode", o.mode, "exhaustive | sampled")->capture_default_str();
  scan->add_option("--ring", o.ring, "Z | ZSqrt-5")->capture_default_str();
  scan->add_option("--check", o.check, "triples | bounds | cross")->capture_default_str();
  scan->add_option("--det-bound", o.det_bound, "cap on |det| (cross: chain universe bound)");
  scan->add_option("--samples", o.samples, "pairs in sampled mode")->capture_default_str();
  scan->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
  scan->add_option("--ceiling", o.ceiling, "max pairs in exhaustive mode")->capture_default_str();
  scan->add_option("--out", o.out, "write the report here instead of stdout");
  auto* lemma = app.add_subcommand("verify-lemma", "check e_k and column class of a block diagonal");
  lemma->add_option("--in", o.in, "JSON {\"ring\": ..., \"blocks\": [...]}")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "bad_arguments", e.what());
    return kInputError;
  }

  Json result;
  int code = kOk;
  try {
    if (*divisors) code = cmd_divisors(o, result);
    else if (*comp) code = cmd_compound(o, result);
    else if (*smith) code = cmd_smith(o, result);
    else if (*eqv) code = cmd_equivalent(o, result);
    else if (*chk) code = cmd_check_chain(o, result);
    else if (*trip) code = cmd_check_triple(o, result);
    else if (*real) code = cmd_realize(o, result);
    else if (*blk) code = cmd_block_form(o, result);
    else if (*scan) code = cmd_oracle_scan(o, result);
    else if (*lemma) code = cmd_verify_lemma(o, result);
  } catch (const CliError& e) {
    emit_error(err, e.code, e.message);
    return kInputError;
  } catch (const Error& e) {
    emit_error(err, std::string(to_string(e.code())), e.what());
    return kInputError;
  } catch (const Json::exception& e) {
    emit_error(err, "malformed_json", e.what());
    return kInputError;
  }
  out << result.dump() << '\n';
  return code;
}

}  // namespace detdiv::cli
