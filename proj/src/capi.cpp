#include "numerolab.h"

#include <atomic>
#include <cctype>
#include <cmath>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "numerolab/concat.hpp"
#include "numerolab/conjectures.hpp"
#include "numerolab/digital.hpp"
#include "numerolab/divisibility.hpp"
#include "numerolab/geometry.hpp"
#include "numerolab/kernel.hpp"
#include "numerolab/magic.hpp"
#include "numerolab/opseq.hpp"
#include "numerolab/relations.hpp"
#include "numerolab/remainder.hpp"
#include "numerolab/types.hpp"
#include "numerolab/uniform.hpp"

using numerolab::Int;
using numerolab::Rat;
using ordered_json = nlohmann::ordered_json;

struct nl_result {
  nl_status status = NL_OK;
  std::string output;
  std::string error;
};

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kMaxItems = 1'000'000;
constexpr std::uint64_t kMaxOffset = 1'000'000'000'000ull;

std::atomic<unsigned> g_thread_hint{1};

// Everything an operation wants to say, in one format-neutral bundle.
// `series` marks output that is a plain integer sequence (b-file ready);
// records and plain lines carry the same content for the other formats.
struct Emission {
  std::vector<ordered_json> records;
  std::vector<std::string> plain;
  std::optional<std::vector<Int>> series;
  std::optional<std::vector<std::uint64_t>> indices;  // overrides 1..n
  bool empty = false;
};

std::string render(const Emission& emission, nl_format fmt,
                   const char* kind, const ordered_json& params) {
  std::string out;
  switch (fmt) {
    case NL_PLAIN:
      for (const std::string& line : emission.plain) {
        out += line;
        out += '\n';
      }
      return out;
    case NL_JSON:
      for (const ordered_json& record : emission.records) {
        ordered_json line;
        line["v"] = kSchemaVersion;
        line["kind"] = kind;
        line["params"] = params;
        line.update(record);
        out += line.dump();
        out += '\n';
      }
      return out;
    case NL_BFILE: {
      if (!emission.series)
        throw std::invalid_argument(
            "bfile format requires a plain integer sequence");
      const auto& values = *emission.series;
      for (std::size_t i = 0; i < values.size(); ++i) {
        std::uint64_t index =
            emission.indices ? (*emission.indices)[i] : i + 1;
        out += std::to_string(index);
        out += ' ';
        out += values[i].get_str();
        out += '\n';
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown output format");
}

void emit(nl_result& out, nl_format fmt, const char* kind,
          const ordered_json& params, const Emission& emission) {
  out.output = render(emission, fmt, kind, params);
  if (emission.empty) out.status = NL_EMPTY;
}

template <typename Fn>
nl_result* run_op(Fn&& body) {
  auto out = std::make_unique<nl_result>();
  try {
    body(*out);
  } catch (const std::invalid_argument& e) {
    out->status = NL_EINVAL;
    out->error = e.what();
    out->output.clear();
  } catch (const std::exception& e) {
    out->status = NL_ERUNTIME;
    out->error = e.what();
    out->output.clear();
  } catch (...) {
    out->status = NL_ERUNTIME;
    out->error = "unknown failure";
    out->output.clear();
  }
  return out.release();
}

std::string need_text(const char* value, const char* what) {
  if (value == nullptr)
    throw std::invalid_argument(std::string(what) + " is required");
  return value;
}

Int need_int(const char* text, const char* what) {
  auto parsed = numerolab::parse_int(need_text(text, what));
  if (!parsed)
    throw std::invalid_argument(std::string(what) +
                                " must be a decimal integer");
  return *parsed;
}

Int need_nat(const char* text, const char* what) {
  auto parsed = numerolab::parse_nat(need_text(text, what));
  if (!parsed)
    throw std::invalid_argument(std::string(what) +
                                " must be a nonnegative decimal integer");
  return *parsed;
}

Rat need_rat(const char* text, const char* what) {
  auto parsed = numerolab::parse_rat(need_text(text, what));
  if (!parsed)
    throw std::invalid_argument(std::string(what) +
                                " must be a rational like p or p/q");
  return *parsed;
}

double need_double(const char* text, const char* what) {
  std::string s = need_text(text, what);
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " must be a number");
  }
  if (used != s.size() || !std::isfinite(value))
    throw std::invalid_argument(std::string(what) + " must be a number");
  return value;
}

numerolab::kernel::StreamName need_stream(const char* name) {
  auto parsed =
      numerolab::kernel::stream_from_name(need_text(name, "stream"));
  if (!parsed) throw std::invalid_argument("unknown stream name");
  return *parsed;
}

void check_count(std::uint64_t count, const char* what) {
  if (count > kMaxItems)
    throw std::invalid_argument(std::string(what) + " is too large");
}

std::uint64_t checked_offset(std::uint64_t offset) {
  if (offset < 1 || offset > kMaxOffset)
    throw std::invalid_argument("offset out of range");
  return offset;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<unsigned> need_digit_list(const char* text, const char* what) {
  std::vector<unsigned> out;
  for (const std::string& part : split_csv(need_text(text, what))) {
    if (part.empty())
      throw std::invalid_argument(std::string(what) + " has an empty entry");
    Int v = need_int(part.c_str(), what);
    if (v < 0 || v > 255)
      throw std::invalid_argument(std::string(what) + " entry out of range");
    out.push_back(static_cast<unsigned>(v.get_ui()));
  }
  return out;
}

std::vector<Int> need_int_list(const char* text, const char* what) {
  std::vector<Int> out;
  for (const std::string& part : split_csv(need_text(text, what))) {
    if (part.empty())
      throw std::invalid_argument(std::string(what) + " has an empty entry");
    out.push_back(need_int(part.c_str(), what));
  }
  return out;
}

ordered_json parse_json_arg(const char* text, const char* what) {
  try {
    return ordered_json::parse(need_text(text, what));
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " is not valid JSON");
  }
}

Int json_cell(const ordered_json& cell, const char* what) {
  if (cell.is_number_integer()) {
    long long v = cell.get<long long>();
    return Int(static_cast<long>(v));
  }
  if (cell.is_string()) return need_int(cell.get<std::string>().c_str(), what);
  throw std::invalid_argument(std::string(what) +
                              " cells must be integers or decimal strings");
}

std::string str(const Int& v) { return v.get_str(); }
std::string str(const Rat& v) { return numerolab::to_string(v); }
std::string str(double v) { return ordered_json(v).dump(); }

ordered_json int_array(const std::vector<Int>& values) {
  ordered_json arr = ordered_json::array();
  for (const Int& v : values) arr.push_back(str(v));
  return arr;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

extern "C" {

nl_status nl_result_status(const nl_result* r) {
  return r == nullptr ? NL_ERUNTIME : r->status;
}

const char* nl_result_output(const nl_result* r) {
  return r == nullptr ? "" : r->output.c_str();
}

const char* nl_result_error(const nl_result* r) {
  return r == nullptr ? "out of memory" : r->error.c_str();
}

void nl_result_free(nl_result* r) { delete r; }

const char* nl_version(void) { return "numerolab 1.0.0"; }

void nl_set_threads(unsigned threads) {
  g_thread_hint.store(threads == 0 ? 1 : threads);
}

/* ---------------- kernel ---------------- */

nl_result* nl_kernel_prime(const char* n, int rounds, nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int value = need_nat(n, "n");
    if (rounds < 1 || rounds > 4096)
      throw std::invalid_argument("rounds out of range");
    auto verdict = numerolab::kernel::is_prime(value, rounds);
    Emission e;
    std::string line = verdict.prime ? "true" : "false";
    if (!verdict.proved) line += " probable";
    e.plain.push_back(line);
    e.records.push_back(
        {{"n", str(value)}, {"prime", verdict.prime},
         {"proved", verdict.proved}});
    emit(out, fmt, "kernel.prime",
         {{"n", str(value)}, {"rounds", rounds}}, e);
  });
}

nl_result* nl_kernel_factor(const char* n, nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int value = need_nat(n, "n");
    auto factors = numerolab::kernel::factorize(value);
    Emission e;
    for (const Int& f : factors) e.plain.push_back(str(f));
    e.records.push_back({{"n", str(value)}, {"factors", int_array(factors)}});
    e.series = factors;
    e.empty = factors.empty();
    emit(out, fmt, "kernel.factor", {{"n", str(value)}}, e);
  });
}

nl_result* nl_kernel_smarandache(const char* n, nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int value = need_nat(n, "n");
    Int s = numerolab::kernel::smarandache(value);
    Emission e;
    e.plain.push_back(str(s));
    e.records.push_back({{"n", str(value)}, {"value", str(s)}});
    emit(out, fmt, "kernel.smarandache", {{"n", str(value)}}, e);
  });
}

nl_result* nl_kernel_quotient(const char* m, nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int value = need_nat(m, "m");
    Int q = numerolab::kernel::smarandache_quotient(value);
    Emission e;
    e.plain.push_back(str(q));
    e.records.push_back({{"m", str(value)}, {"value", str(q)}});
    emit(out, fmt, "kernel.quotient", {{"m", str(value)}}, e);
  });
}

nl_result* nl_kernel_power(const char* n, nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int value = need_nat(n, "n");
    auto form = numerolab::kernel::perfect_power(value);
    Emission e;
    ordered_json record{{"n", str(value)}, {"power", form.has_value()}};
    if (form) {
      e.plain.push_back(str(form->base) + " " + std::to_string(form->exp));
      record["base"] = str(form->base);
      record["exp"] = form->exp;
    } else {
      e.plain.push_back("none");
    }
    e.records.push_back(record);
    emit(out, fmt, "kernel.power", {{"n", str(value)}}, e);
  });
}

nl_result* nl_kernel_lucky(const char* limit, nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int bound = need_nat(limit, "limit");
    auto values = numerolab::kernel::lucky_numbers(bound);
    Emission e;
    for (std::size_t i = 0; i < values.size(); ++i) {
      e.plain.push_back(str(values[i]));
      e.records.push_back({{"index", i + 1}, {"value", str(values[i])}});
    }
    e.series = values;
    e.empty = values.empty();
    emit(out, fmt, "kernel.lucky", {{"limit", str(bound)}}, e);
  });
}

nl_result* nl_kernel_stream(const char* stream, uint64_t offset,
                            uint64_t count, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto name = need_stream(stream);
    check_count(count, "count");
    numerolab::kernel::SeqSpec spec{name, checked_offset(offset)};
    auto values = numerolab::kernel::stream(spec, count);
    Emission e;
    std::vector<std::uint64_t> indices;
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::uint64_t index = spec.offset + i;
      e.plain.push_back(str(values[i]));
      e.records.push_back({{"index", index}, {"value", str(values[i])}});
      indices.push_back(index);
    }
    e.series = values;
    e.indices = std::move(indices);
    e.empty = values.empty();
    emit(out, fmt, "kernel.stream",
         {{"stream", numerolab::kernel::to_string(name)},
          {"offset", spec.offset},
          {"count", count}},
         e);
  });
}

/* ---------------- concat ---------------- */

nl_result* nl_concat_terms(const char* stream, uint64_t offset,
                           uint64_t count, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto name = need_stream(stream);
    check_count(count, "count");
    numerolab::kernel::SeqSpec spec{name, checked_offset(offset)};
    auto terms = numerolab::concat::concat_terms(spec, count);
    Emission e;
    std::vector<Int> series;
    std::vector<std::uint64_t> indices;
    for (const auto& term : terms) {
      e.plain.push_back(str(term.value));
      e.records.push_back({{"index", term.index},
                           {"value", str(term.value)},
                           {"digits", term.digit_length}});
      series.push_back(term.value);
      indices.push_back(term.index);
    }
    e.series = std::move(series);
    e.indices = std::move(indices);
    e.empty = terms.empty();
    emit(out, fmt, "concat.terms",
         {{"stream", numerolab::kernel::to_string(name)},
          {"offset", spec.offset},
          {"count", count}},
         e);
  });
}

nl_result* nl_concat_screen(const char* stream, uint64_t offset,
                            uint64_t count, const char* test, int rounds,
                            nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto name = need_stream(stream);
    check_count(count, "count");
    auto screen_test =
        numerolab::concat::screen_test_from_name(need_text(test, "test"));
    if (!screen_test) throw std::invalid_argument("unknown screen test");
    if (rounds < 1 || rounds > 4096)
      throw std::invalid_argument("rounds out of range");
    numerolab::kernel::SeqSpec spec{name, checked_offset(offset)};
    auto verdicts =
        numerolab::concat::screen(spec, count, *screen_test, rounds);
    Emission e;
    for (const auto& v : verdicts) {
      std::string line = str(v.value);
      line += v.hit ? " true" : " false";
      if (!v.proved) line += " probable";
      e.plain.push_back(line);
      e.records.push_back({{"index", v.index},
                           {"value", str(v.value)},
                           {"hit", v.hit},
                           {"proved", v.proved}});
    }
    emit(out, fmt, "concat.screen",
         {{"stream", numerolab::kernel::to_string(name)},
          {"offset", spec.offset},
          {"count", count},
          {"test", numerolab::concat::to_string(*screen_test)},
          {"rounds", rounds}},
         e);
  });
}

nl_result* nl_concat_closure(const char* stream, uint64_t offset,
                             uint64_t count, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto name = need_stream(stream);
    check_count(count, "count");
    numerolab::kernel::SeqSpec spec{name, checked_offset(offset)};
    auto verdicts = numerolab::concat::closure_check(spec, count);
    Emission e;
    for (const auto& v : verdicts) {
      e.plain.push_back(str(v.value) + (v.member ? " true" : " false"));
      e.records.push_back({{"index", v.index},
                           {"value", str(v.value)},
                           {"member", v.member}});
    }
    emit(out, fmt, "concat.closure",
         {{"stream", numerolab::kernel::to_string(name)},
          {"offset", spec.offset},
          {"count", count}},
         e);
  });
}

/* ---------------- uniform ---------------- */

namespace {

numerolab::uniform::UniformQuery uniform_query(const char* n, unsigned base,
                                               const char* digits,
                                               int complete) {
  numerolab::uniform::UniformQuery q;
  q.n = need_nat(n, "n");
  q.base = base;
  q.digits = need_digit_list(digits, "digits");
  q.complete = complete != 0;
  return q;
}

ordered_json uniform_params(const numerolab::uniform::UniformQuery& q) {
  ordered_json digits = ordered_json::array();
  for (unsigned d : q.digits) digits.push_back(d);
  return {{"n", str(q.n)},
          {"base", q.base},
          {"digits", digits},
          {"complete", q.complete}};
}

}  // namespace

nl_result* nl_uniform_smallest(const char* n, unsigned base,
                               const char* digits, int complete,
                               nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto q = uniform_query(n, base, digits, complete);
    auto value = numerolab::uniform::smallest_member(q);
    Emission e;
    if (value) {
      e.plain.push_back(str(*value));
      e.records.push_back({{"value", str(*value)}});
    }
    e.empty = !value.has_value();
    emit(out, fmt, "uniform.smallest", uniform_params(q), e);
  });
}

nl_result* nl_uniform_members(const char* n, unsigned base,
                              const char* digits, int complete,
                              uint64_t count, uint64_t max_len,
                              nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto q = uniform_query(n, base, digits, complete);
    check_count(count, "count");
    auto values = numerolab::uniform::members(q, count, max_len);
    Emission e;
    for (std::size_t i = 0; i < values.size(); ++i) {
      e.plain.push_back(str(values[i]));
      e.records.push_back({{"index", i + 1}, {"value", str(values[i])}});
    }
    e.series = values;
    e.empty = values.empty();
    ordered_json params = uniform_params(q);
    params["count"] = count;
    params["max_len"] = max_len;
    emit(out, fmt, "uniform.members", params, e);
  });
}

nl_result* nl_uniform_empty(const char* n, unsigned base, const char* digits,
                            int complete, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto q = uniform_query(n, base, digits, complete);
    bool empty_set = numerolab::uniform::is_empty(q);
    Emission e;
    e.plain.push_back(empty_set ? "true" : "false");
    e.records.push_back({{"empty", empty_set}});
    emit(out, fmt, "uniform.empty", uniform_params(q), e);
  });
}

/* ---------------- opseq ---------------- */

namespace {

std::vector<numerolab::opseq::Op> need_ops(const char* text,
                                           const char* what) {
  std::vector<numerolab::opseq::Op> out;
  std::string joined = need_text(text, what);
  if (joined.empty()) return out;
  for (const std::string& part : split_csv(joined)) {
    auto op = numerolab::opseq::op_from_name(part);
    if (!op)
      throw std::invalid_argument(std::string(what) +
                                  " has an unknown operator");
    out.push_back(*op);
  }
  return out;
}

ordered_json ops_array(const std::vector<numerolab::opseq::Op>& ops) {
  ordered_json arr = ordered_json::array();
  for (auto op : ops) arr.push_back(numerolab::opseq::to_string(op));
  return arr;
}

numerolab::opseq::Domain need_domain(const char* text) {
  auto parsed =
      numerolab::opseq::domain_from_name(need_text(text, "domain"));
  if (!parsed) throw std::invalid_argument("unknown domain");
  return *parsed;
}

}  // namespace

nl_result* nl_opseq_eval(const char* operands, const char* ops,
                         uint64_t digit_cap, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto values = need_int_list(operands, "operands");
    auto chain_ops = need_ops(ops, "ops");
    if (values.size() != chain_ops.size() + 1)
      throw std::invalid_argument("need one more operand than operators");
    auto result =
        numerolab::opseq::eval_chain_ex(values, chain_ops, digit_cap);
    Emission e;
    ordered_json record{{"operands", int_array(values)},
                        {"ops", ops_array(chain_ops)}};
    using numerolab::opseq::EvalStatus;
    switch (result.status) {
      case EvalStatus::ok:
        e.plain.push_back(str(result.value));
        record["status"] = "ok";
        record["value"] = str(result.value);
        break;
      case EvalStatus::undefined:
        e.plain.push_back("undefined");
        record["status"] = "undefined";
        break;
      case EvalStatus::capped:
        e.plain.push_back("capped");
        record["status"] = "capped";
        break;
    }
    e.records.push_back(record);
    emit(out, fmt, "opseq.eval",
         {{"operands", int_array(values)},
          {"ops", ops_array(chain_ops)},
          {"digit_cap", digit_cap}},
         e);
  });
}

nl_result* nl_opseq_next(uint64_t upto, const char* opset,
                         const char* threshold, const char* domain,
                         uint64_t digit_cap, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto ops = need_ops(opset, "opset");
    Rat bound = need_rat(threshold, "threshold");
    auto dom = need_domain(domain);
    auto term =
        numerolab::opseq::next_term(upto, ops, bound, dom, digit_cap);
    Emission e;
    if (!term.exhausted) {
      e.plain.push_back(str(term.value) + " = " +
                        numerolab::opseq::render_chain(term.witness));
      e.records.push_back(
          {{"value", str(term.value)},
           {"chain", numerolab::opseq::render_chain(term.witness)},
           {"cap_limited", term.cap_limited}});
    }
    e.empty = term.exhausted;
    emit(out, fmt, "opseq.next",
         {{"upto", upto},
          {"opset", ops_array(ops)},
          {"threshold", str(bound)},
          {"domain", numerolab::opseq::to_string(dom)},
          {"digit_cap", digit_cap}},
         e);
  });
}

nl_result* nl_opseq_seq(const char* opset, uint64_t count, const char* domain,
                        const char* start, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto ops = need_ops(opset, "opset");
    check_count(count, "count");
    auto dom = need_domain(domain);
    Rat first = need_rat(start, "start");
    auto result = numerolab::opseq::sequence(ops, count, dom, first);
    Emission e;
    for (std::size_t i = 0; i < result.terms.size(); ++i) {
      e.plain.push_back(str(result.terms[i]));
      e.records.push_back({{"index", i + 1}, {"value", str(result.terms[i])}});
    }
    if (result.exhausted || result.cap_limited)
      e.records.push_back({{"exhausted", result.exhausted},
                           {"cap_limited", result.cap_limited}});
    e.empty = result.terms.empty();
    emit(out, fmt, "opseq.seq",
         {{"opset", ops_array(ops)},
          {"count", count},
          {"domain", numerolab::opseq::to_string(dom)},
          {"start", str(first)}},
         e);
  });
}

nl_result* nl_opseq_random(const char* opset, uint64_t count, uint64_t seed,
                           nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto ops = need_ops(opset, "opset");
    check_count(count, "count");
    auto result = numerolab::opseq::random_sequence(ops, count, seed);
    Emission e;
    for (std::size_t i = 0; i < result.terms.size(); ++i) {
      const auto& term = result.terms[i];
      e.plain.push_back(str(term.value) + " = " +
                        numerolab::opseq::render_chain(term.witness));
      e.records.push_back(
          {{"index", i + 1},
           {"value", str(term.value)},
           {"chain", numerolab::opseq::render_chain(term.witness)}});
    }
    if (result.exhausted) e.records.push_back({{"exhausted", true}});
    e.empty = result.terms.empty();
    emit(out, fmt, "opseq.random",
         {{"opset", ops_array(ops)}, {"count", count}, {"seed", seed}}, e);
  });
}

/* ---------------- relations ---------------- */

nl_result* nl_relations_scan(const char* stream, uint64_t offset,
                             uint64_t n_max, uint64_t p, uint64_t q,
                             const char* fold, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto name = need_stream(stream);
    check_count(n_max, "nmax");
    auto fold_op =
        numerolab::relations::fold_from_name(need_text(fold, "fold"));
    if (!fold_op) throw std::invalid_argument("unknown fold");
    numerolab::kernel::SeqSpec spec{name, checked_offset(offset)};
    auto hits = numerolab::relations::scan(spec, n_max, p, q, *fold_op);
    Emission e;
    std::vector<Int> starts;
    for (const auto& hit : hits) {
      e.plain.push_back(std::to_string(hit.start_index) + " " +
                        str(hit.left_value) + " " + str(hit.right_value));
      e.records.push_back({{"start", hit.start_index},
                           {"left", str(hit.left_value)},
                           {"right", str(hit.right_value)}});
      starts.emplace_back(
          static_cast<unsigned long>(hit.start_index));
    }
    e.series = std::move(starts);
    e.empty = hits.empty();
    emit(out, fmt, "relations.scan",
         {{"stream", numerolab::kernel::to_string(name)},
          {"offset", spec.offset},
          {"nmax", n_max},
          {"p", p},
          {"q", q},
          {"fold", numerolab::relations::to_string(*fold_op)}},
         e);
  });
}

nl_result* nl_relations_ppa(uint64_t count, nl_format fmt) {
  return run_op([&](nl_result& out) {
    check_count(count, "count");
    auto terms = numerolab::relations::ppa_terms(count);
    Emission e;
    std::vector<Int> series;
    for (const auto& term : terms) {
      e.plain.push_back(str(term.value));
      e.records.push_back({{"index", term.index}, {"value", str(term.value)}});
      series.push_back(term.value);
    }
    e.series = std::move(series);
    e.empty = terms.empty();
    emit(out, fmt, "relations.ppa", {{"count", count}}, e);
  });
}

nl_result* nl_relations_ppa_verify(uint64_t p_max, nl_format fmt) {
  return run_op([&](nl_result& out) {
    if (p_max < 1) throw std::invalid_argument("pmax must be positive");
    check_count(p_max, "pmax");
    auto terms = numerolab::relations::ppa_terms(2 * p_max);
    std::vector<Int> values;
    values.reserve(terms.size());
    for (const auto& term : terms) values.push_back(term.value);
    auto failing = numerolab::relations::ppa_verify(values, p_max);
    Emission e;
    if (failing) {
      e.plain.push_back("fail " + std::to_string(*failing));
      e.records.push_back({{"pass", false}, {"first_failing", *failing}});
    } else {
      e.plain.push_back("pass");
      e.records.push_back({{"pass", true}});
    }
    emit(out, fmt, "relations.ppa_verify", {{"pmax", p_max}}, e);
  });
}

/* ---------------- digital ---------------- */

nl_result* nl_digital_filter(const char* stream, uint64_t offset, uint64_t k,
                             const char* allowed, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto name = need_stream(stream);
    check_count(k, "k");
    auto digits = need_digit_list(allowed, "allowed");
    numerolab::kernel::SeqSpec spec{name, checked_offset(offset)};
    auto values = numerolab::digital::full_digital_filter(spec, k, digits);
    Emission e;
    for (std::size_t i = 0; i < values.size(); ++i) {
      e.plain.push_back(str(values[i]));
      e.records.push_back({{"index", i + 1}, {"value", str(values[i])}});
    }
    e.series = values;
    e.empty = values.empty();
    ordered_json allowed_arr = ordered_json::array();
    for (unsigned d : digits) allowed_arr.push_back(d);
    emit(out, fmt, "digital.filter",
         {{"stream", numerolab::kernel::to_string(name)},
          {"offset", spec.offset},
          {"k", k},
          {"allowed", allowed_arr}},
         e);
  });
}

nl_result* nl_digital_partial(const char* n, const char* predicate,
                              nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int value = need_nat(n, "n");
    auto pred = numerolab::digital::predicate_from_name(
        need_text(predicate, "predicate"));
    if (!pred) throw std::invalid_argument("unknown predicate");
    auto partition = numerolab::digital::partial_digital_check(value, *pred);
    Emission e;
    if (partition) {
      std::vector<std::string> groups;
      ordered_json arr = ordered_json::array();
      for (const auto& word : partition->groups) {
        groups.push_back(numerolab::digital::to_string(word));
        arr.push_back(numerolab::digital::to_string(word));
      }
      e.plain.push_back(join(groups, '|'));
      e.records.push_back({{"groups", arr}});
    }
    e.empty = !partition.has_value();
    emit(out, fmt, "digital.partial",
         {{"n", str(value)},
          {"predicate", numerolab::digital::to_string(*pred)}},
         e);
  });
}

nl_result* nl_digital_split(const char* n, const char* relation,
                            nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int value = need_nat(n, "n");
    auto rel = numerolab::digital::relation_from_name(
        need_text(relation, "relation"));
    if (!rel) throw std::invalid_argument("unknown relation");
    auto split = numerolab::digital::split_check(value, *rel);
    Emission e;
    if (split) {
      e.plain.push_back(str(split->g1) + "|" + str(split->g2));
      e.records.push_back({{"g1", str(split->g1)}, {"g2", str(split->g2)}});
    }
    e.empty = !split.has_value();
    emit(out, fmt, "digital.split",
         {{"n", str(value)},
          {"relation", numerolab::digital::to_string(*rel)}},
         e);
  });
}

nl_result* nl_digital_triad(const char* n, nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int value = need_nat(n, "n");
    auto triad = numerolab::digital::triad_sum_check(value);
    Emission e;
    if (triad) {
      e.plain.push_back(str(triad->x) + "|" + str(triad->y) + "|" +
                        str(triad->z));
      e.records.push_back({{"x", str(triad->x)},
                           {"y", str(triad->y)},
                           {"z", str(triad->z)}});
    }
    e.empty = !triad.has_value();
    emit(out, fmt, "digital.triad", {{"n", str(value)}}, e);
  });
}

/* ---------------- magic ---------------- */

namespace {

numerolab::magic::Law need_law(const char* law) {
  auto parsed = numerolab::magic::law_from_name(need_text(law, "law"));
  if (!parsed) throw std::invalid_argument("unknown law");
  return *parsed;
}

// Rows must form a square; cells may be JSON integers or decimal strings.
std::pair<std::uint64_t, std::vector<Int>> parse_grid(const char* text) {
  ordered_json rows = parse_json_arg(text, "grid");
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("grid must be a JSON array of rows");
  std::vector<Int> cells;
  std::uint64_t order = rows.size();
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != order)
      throw std::invalid_argument("grid rows must all have the same length");
    for (const auto& cell : row) cells.push_back(json_cell(cell, "grid"));
  }
  return {order, std::move(cells)};
}

ordered_json grid_rows(const numerolab::magic::SquareGrid& grid) {
  ordered_json rows = ordered_json::array();
  for (std::uint64_t r = 0; r < grid.order; ++r) {
    ordered_json row = ordered_json::array();
    for (std::uint64_t c = 0; c < grid.order; ++c) {
      const Int& cell = grid.cells[r * grid.order + c];
      if (cell.fits_slong_p())
        row.push_back(cell.get_si());
      else
        row.push_back(cell.get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

nl_result* nl_magic_verify(const char* grid, const char* law, int diagonals,
                           int distinct, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto law_value = need_law(law);
    auto [order, cells] = parse_grid(grid);
    numerolab::magic::SquareGrid square{order, std::move(cells), law_value,
                                        diagonals != 0, distinct != 0};
    auto constant = numerolab::magic::verify_square(square);
    Emission e;
    ordered_json record{{"magic", constant.has_value()}};
    if (constant) {
      e.plain.push_back(str(*constant));
      record["constant"] = str(*constant);
    } else {
      e.plain.push_back("none");
    }
    e.records.push_back(record);
    emit(out, fmt, "magic.verify",
         {{"order", order},
          {"law", numerolab::magic::to_string(law_value)},
          {"diagonals", diagonals != 0},
          {"distinct", distinct != 0}},
         e);
  });
}

nl_result* nl_magic_search(const char* pool, uint64_t order, const char* law,
                           int diagonals, int distinct, uint64_t limit,
                           nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto law_value = need_law(law);
    auto values = need_int_list(pool, "pool");
    check_count(limit, "limit");
    auto grids = numerolab::magic::search_squares(
        values, order, law_value, diagonals != 0, distinct != 0, limit);
    Emission e;
    for (const auto& found : grids) {
      ordered_json rows = grid_rows(found);
      auto constant = numerolab::magic::verify_square(found);
      e.plain.push_back(rows.dump());
      e.records.push_back(
          {{"constant", constant ? str(*constant) : std::string()},
           {"grid", rows}});
    }
    e.empty = grids.empty();
    ordered_json pool_arr = int_array(values);
    emit(out, fmt, "magic.search",
         {{"pool", pool_arr},
          {"order", order},
          {"law", numerolab::magic::to_string(law_value)},
          {"diagonals", diagonals != 0},
          {"distinct", distinct != 0},
          {"limit", limit}},
         e);
  });
}

nl_result* nl_magic_cube(const char* cells, const char* law, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto law_value = need_law(law);
    ordered_json layers = parse_json_arg(cells, "cube");
    if (!layers.is_array() || layers.empty())
      throw std::invalid_argument("cube must be a JSON array of layers");
    std::uint64_t order = layers.size();
    std::vector<Int> flat;
    for (const auto& layer : layers) {
      if (!layer.is_array() || layer.size() != order)
        throw std::invalid_argument("cube layers must be square");
      for (const auto& row : layer) {
        if (!row.is_array() || row.size() != order)
          throw std::invalid_argument("cube layers must be square");
        for (const auto& cell : row) flat.push_back(json_cell(cell, "cube"));
      }
    }
    auto constant = numerolab::magic::verify_cube(order, flat, law_value);
    Emission e;
    ordered_json record{{"magic", constant.has_value()}};
    if (constant) {
      e.plain.push_back(str(*constant));
      record["constant"] = str(*constant);
    } else {
      e.plain.push_back("none");
    }
    e.records.push_back(record);
    emit(out, fmt, "magic.cube",
         {{"order", order},
          {"law", numerolab::magic::to_string(law_value)}},
         e);
  });
}

/* ---------------- conjecture ---------------- */

nl_result* nl_conjecture_reps(const char* k, const char* bound,
                              nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int target = need_nat(k, "k");
    Int limit = need_nat(bound, "bound");
    auto triples = numerolab::conjectures::prime_reps(target, limit);
    Emission e;
    for (const auto& t : triples) {
      e.plain.push_back(str(t.p) + " " + str(t.q) + " " + str(t.r));
      e.records.push_back(
          {{"p", str(t.p)}, {"q", str(t.q)}, {"r", str(t.r)}});
    }
    e.empty = triples.empty();
    emit(out, fmt, "conjecture.reps",
         {{"k", str(target)}, {"bound", str(limit)}}, e);
  });
}

nl_result* nl_conjecture_sweep(const char* k_max, const char* bound,
                               nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int limit_k = need_nat(k_max, "kmax");
    Int limit = need_nat(bound, "bound");
    auto missing = numerolab::conjectures::sweep(limit_k, limit);
    Emission e;
    if (fmt == NL_JSON) {
      // One audit record per odd target: its count and first witness.
      for (Int target = 1; target <= limit_k; target += 2) {
        auto triples = numerolab::conjectures::prime_reps(target, limit);
        ordered_json record{{"k", str(target)},
                            {"count", triples.size()}};
        if (!triples.empty()) {
          const auto& t = triples.front();
          record["witness"] =
              ordered_json::array({str(t.p), str(t.q), str(t.r)});
        }
        e.records.push_back(record);
      }
    }
    for (const Int& target : missing) e.plain.push_back(str(target));
    e.series = missing;
    e.empty = missing.empty();
    emit(out, fmt, "conjecture.sweep",
         {{"kmax", str(limit_k)}, {"bound", str(limit)}}, e);
  });
}

nl_result* nl_conjecture_witness(const char* a, const char* x_max,
                                 nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int target = need_nat(a, "a");
    Int limit = need_nat(x_max, "xmax");
    auto witness = numerolab::conjectures::cube_square_witness(target, limit);
    Emission e;
    if (witness) {
      e.plain.push_back(str(witness->x) + " " + str(witness->y));
      Int cube = witness->x * witness->x * witness->x;
      Int square = witness->y * witness->y;
      const char* form = cube - square == target ? "x^3-y^2" : "y^2-x^3";
      e.records.push_back({{"x", str(witness->x)},
                           {"y", str(witness->y)},
                           {"form", form}});
    }
    e.empty = !witness.has_value();
    emit(out, fmt, "conjecture.witness",
         {{"a", str(target)}, {"xmax", str(limit)}}, e);
  });
}

nl_result* nl_conjecture_bad(const char* a_max, const char* x_max,
                             nl_format fmt) {
  return run_op([&](nl_result& out) {
    Int limit_a = need_nat(a_max, "amax");
    Int limit_x = need_nat(x_max, "xmax");
    auto values = numerolab::conjectures::bad_scan(limit_a, limit_x);
    Emission e;
    for (const Int& v : values) {
      e.plain.push_back(str(v));
      e.records.push_back({{"a", str(v)}});
    }
    e.series = values;
    e.empty = values.empty();
    emit(out, fmt, "conjecture.bad",
         {{"amax", str(limit_a)}, {"xmax", str(limit_x)}}, e);
  });
}

/* ---------------- divis ---------------- */

namespace {

numerolab::divisibility::NamedFn need_fn(const char* fn) {
  auto parsed =
      numerolab::divisibility::fn_from_name(need_text(fn, "fn"));
  if (!parsed) throw std::invalid_argument("unknown function name");
  return *parsed;
}

}  // namespace

nl_result* nl_divis_check(const char* fn, const char* n_max, unsigned depth,
                          nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto g = need_fn(fn);
    Int limit = need_nat(n_max, "nmax");
    auto failure = numerolab::divisibility::check_divisibility(g, limit,
                                                               depth);
    Emission e;
    ordered_json record{{"pass", !failure.has_value()}};
    if (failure) {
      e.plain.push_back("fail " + str(failure->n) + " " + str(failure->m) +
                        " " + std::to_string(failure->depth));
      record["n"] = str(failure->n);
      record["m"] = str(failure->m);
      record["failing_depth"] = failure->depth;
    } else {
      e.plain.push_back("pass");
    }
    e.records.push_back(record);
    emit(out, fmt, "divis.check",
         {{"fn", numerolab::divisibility::to_string(g)},
          {"nmax", str(limit)},
          {"depth", depth}},
         e);
  });
}

nl_result* nl_divis_on(const char* fn, const char* indices, unsigned depth,
                       nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto g = need_fn(fn);
    auto index_values = need_int_list(indices, "indices");
    auto failure = numerolab::divisibility::check_divisibility_on(
        g, index_values, depth);
    Emission e;
    ordered_json record{{"pass", !failure.has_value()}};
    if (failure) {
      e.plain.push_back("fail " + str(failure->n) + " " + str(failure->m) +
                        " " + std::to_string(failure->depth));
      record["n"] = str(failure->n);
      record["m"] = str(failure->m);
      record["failing_depth"] = failure->depth;
    } else {
      e.plain.push_back("pass");
    }
    e.records.push_back(record);
    emit(out, fmt, "divis.on",
         {{"fn", numerolab::divisibility::to_string(g)},
          {"indices", int_array(index_values)},
          {"depth", depth}},
         e);
  });
}

nl_result* nl_divis_strong(const char* fn, const char* n_max,
                           nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto g = need_fn(fn);
    Int limit = need_nat(n_max, "nmax");
    auto failure = numerolab::divisibility::check_strong(g, limit);
    Emission e;
    ordered_json record{{"pass", !failure.has_value()}};
    if (failure) {
      e.plain.push_back("fail " + str(failure->n) + " " + str(failure->m));
      record["n"] = str(failure->n);
      record["m"] = str(failure->m);
    } else {
      e.plain.push_back("pass");
    }
    e.records.push_back(record);
    emit(out, fmt, "divis.strong",
         {{"fn", numerolab::divisibility::to_string(g)},
          {"nmax", str(limit)}},
         e);
  });
}

nl_result* nl_divis_kstrong(const char* fn, unsigned arity,
                            const char* n_max, nl_format fmt) {
  return run_op([&](nl_result& out) {
    auto g = need_fn(fn);
    Int limit = need_nat(n_max, "nmax");
    auto report = numerolab::divisibility::check_k_strong(g, arity, limit);
    Emission e;
    ordered_json record{{"pass", !report.counterexample.has_value()},
                        {"sampled", report.sampled}};
    std::string line =
        report.counterexample.has_value() ? "fail" : "pass";
    if (report.counterexample) {
      ordered_json tuple = ordered_json::array();
      for (const Int& v : *report.counterexample) {
        line += " " + str(v);
        tuple.push_back(str(v));
      }
      record["tuple"] = tuple;
    }
    if (report.sampled) line += " sampled";
    e.plain.push_back(line);
    e.records.push_back(record);
    emit(out, fmt, "divis.kstrong",
         {{"fn", numerolab::divisibility::to_string(g)},
          {"arity", arity},
          {"nmax", str(limit)}},
         e);
  });
}

/* ---------------- geom ---------------- */

namespace {

namespace geo = numerolab::geometry;

struct ParsedShape {
  std::optional<geo::ConvexPolygon> polygon;
  std::optional<geo::ConvexPolyhedron> solid;
};

double json_coord(const ordered_json& v) {
  if (!v.is_number()) throw std::invalid_argument("coordinates must be numbers");
  return v.get<double>();
}

// {"vertices": [[x,y],...]} or {"vertices": [[x,y,z],...], "faces": [...]}
ParsedShape parse_shape(const char* text) {
  ordered_json shape = parse_json_arg(text, "shape");
  if (!shape.is_object() || !shape.contains("vertices") ||
      !shape["vertices"].is_array() || shape["vertices"].empty())
    throw std::invalid_argument("shape needs a vertices array");
  const auto& verts = shape["vertices"];
  std::size_t dim = verts.front().is_array() ? verts.front().size() : 0;
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("vertices must be 2-D or 3-D");
  ParsedShape out;
  if (dim == 2) {
    if (shape.contains("faces"))
      throw std::invalid_argument("polygons take no faces");
    geo::ConvexPolygon poly;
    for (const auto& v : verts) {
      if (!v.is_array() || v.size() != 2)
        throw std::invalid_argument("mixed vertex dimensions");
      poly.vertices.push_back({json_coord(v[0]), json_coord(v[1])});
    }
    out.polygon = std::move(poly);
    return out;
  }
  if (!shape.contains("faces") || !shape["faces"].is_array())
    throw std::invalid_argument("solids need a faces array");
  geo::ConvexPolyhedron solid;
  for (const auto& v : verts) {
    if (!v.is_array() || v.size() != 3)
      throw std::invalid_argument("mixed vertex dimensions");
    solid.vertices.push_back(
        {json_coord(v[0]), json_coord(v[1]), json_coord(v[2])});
  }
  for (const auto& face : shape["faces"]) {
    if (!face.is_array())
      throw std::invalid_argument("faces must be index arrays");
    std::vector<std::size_t> indices;
    for (const auto& idx : face) {
      if (!idx.is_number_unsigned())
        throw std::invalid_argument("face indices must be nonnegative");
      indices.push_back(idx.get<std::size_t>());
    }
    solid.faces.push_back(std::move(indices));
  }
  out.solid = std::move(solid);
  return out;
}

std::vector<double> need_point(const char* text, std::size_t dim) {
  std::vector<double> coords;
  for (const std::string& part : split_csv(need_text(text, "point")))
    coords.push_back(need_double(part.c_str(), "point"));
  if (coords.size() != dim)
    throw std::invalid_argument("point dimension does not match the shape");
  return coords;
}

ordered_json sample_record(const geo::GeomSample& sample) {
  ordered_json point = ordered_json::array();
  for (double c : sample.point) point.push_back(c);
  return {{"point", point},
          {"vertex_sum", sample.vertex_sum},
          {"projection_sum", sample.projection_sum},
          {"ratio", sample.ratio}};
}

ordered_json polygon_json(const geo::ConvexPolygon& poly) {
  ordered_json verts = ordered_json::array();
  for (const auto& v : poly.vertices)
    verts.push_back(ordered_json::array({v.x, v.y}));
  return {{"vertices", verts}};
}

ordered_json solid_json(const geo::ConvexPolyhedron& solid) {
  ordered_json verts = ordered_json::array();
  for (const auto& v : solid.vertices)
    verts.push_back(ordered_json::array({v.x, v.y, v.z}));
  ordered_json faces = ordered_json::array();
  for (const auto& face : solid.faces) {
    ordered_json indices = ordered_json::array();
    for (std::size_t idx : face) indices.push_back(idx);
    faces.push_back(indices);
  }
  return {{"vertices", verts}, {"faces", faces}};
}

}  // namespace

nl_result* nl_geom_ratio(const char* shape, const char* point, int clamped,
                         nl_format fmt) {
  return run_op([&](nl_result& out) {
    ParsedShape parsed = parse_shape(shape);
    geo::GeomSample sample;
    if (parsed.polygon) {
      auto coords = need_point(point, 2);
      sample = geo::em_ratio(*parsed.polygon, {coords[0], coords[1]},
                             clamped != 0);
    } else {
      auto coords = need_point(point, 3);
      sample = geo::em_ratio(*parsed.solid,
                             {coords[0], coords[1], coords[2]}, clamped != 0);
    }
    Emission e;
    e.plain.push_back(str(sample.ratio));
    e.records.push_back(sample_record(sample));
    ordered_json point_echo = ordered_json::array();
    for (double c : sample.point) point_echo.push_back(c);
    emit(out, fmt, "geom.ratio",
         {{"point", point_echo}, {"clamped", clamped != 0}}, e);
  });
}

nl_result* nl_geom_inf(const char* shape, unsigned grid, unsigned refine,
                       int clamped, nl_format fmt) {
  return run_op([&](nl_result& out) {
    ParsedShape parsed = parse_shape(shape);
    geo::InfEstimate estimate;
    if (parsed.polygon)
      estimate = geo::em_inf(*parsed.polygon, grid, refine, clamped != 0);
    else
      estimate = geo::em_inf(*parsed.solid, grid, refine, clamped != 0);
    Emission e;
    std::string line = str(estimate.estimate);
    ordered_json argmin = ordered_json::array();
    for (double c : estimate.argmin) {
      line += " " + str(c);
      argmin.push_back(c);
    }
    e.plain.push_back(line);
    e.records.push_back({{"estimate", estimate.estimate},
                         {"argmin", argmin}});
    emit(out, fmt, "geom.inf",
         {{"grid", grid}, {"refine", refine}, {"clamped", clamped != 0}},
         e);
  });
}

nl_result* nl_geom_make(const char* kind, uint64_t sides, const char* size,
                        nl_format fmt) {
  return run_op([&](nl_result& out) {
    std::string which = need_text(kind, "kind");
    double measure = need_double(size, "size");
    ordered_json shape;
    if (which == "polygon") {
      shape = polygon_json(geo::regular_polygon(sides, measure));
    } else if (which == "tetrahedron") {
      shape = solid_json(geo::regular_tetrahedron(measure));
    } else {
      throw std::invalid_argument("kind must be polygon or tetrahedron");
    }
    Emission e;
    e.plain.push_back(shape.dump());
    e.records.push_back({{"shape", shape}});
    emit(out, fmt, "geom.make",
         {{"kind", which}, {"sides", sides}, {"size", measure}}, e);
  });
}

/* ---------------- remainder ---------------- */

nl_result* nl_remainder_forward(const char* start, uint64_t q,
                                const char* extra, uint64_t steps,
                                nl_format fmt) {
  return run_op([&](nl_result& out) {
    Rat first = need_rat(start, "start");
    Rat removal = need_rat(extra, "extra");
    auto run = numerolab::remainder::forward(first, q, removal, steps);
    Emission e;
    ordered_json values = ordered_json::array();
    for (const Rat& r : run.remainders) {
      e.plain.push_back(str(r));
      values.push_back(str(r));
    }
    e.records.push_back(
        {{"remainders", values}, {"went_negative", run.went_negative}});
    emit(out, fmt, "remainder.forward",
         {{"start", str(first)},
          {"q", q},
          {"extra", str(removal)},
          {"steps", steps}},
         e);
  });
}

nl_result* nl_remainder_backward(const char* last, uint64_t q,
                                 const char* extra, uint64_t steps,
                                 nl_format fmt) {
  return run_op([&](nl_result& out) {
    Rat final_value = need_rat(last, "last");
    Rat removal = need_rat(extra, "extra");
    Rat start =
        numerolab::remainder::backward(final_value, q, removal, steps);
    Emission e;
    e.plain.push_back(str(start));
    e.records.push_back({{"start", str(start)}});
    emit(out, fmt, "remainder.backward",
         {{"last", str(final_value)},
          {"q", q},
          {"extra", str(removal)},
          {"steps", steps}},
         e);
  });
}

nl_result* nl_remainder_minimal(uint64_t q, uint64_t extra, uint64_t steps,
                                int allow_zero, uint64_t cap,
                                nl_format fmt) {
  return run_op([&](nl_result& out) {
    ordered_json params{{"q", q},
                        {"extra", extra},
                        {"steps", steps},
                        {"allow_zero", allow_zero != 0},
                        {"cap", cap}};
    Emission e;
    try {
      auto found = numerolab::remainder::minimal_integral(
          q, extra, steps, allow_zero != 0, cap);
      std::vector<std::string> parts;
      for (const Int& r : found.remainders) parts.push_back(str(r));
      e.plain.push_back(str(found.start));
      e.plain.push_back(join(parts, ' '));
      e.records.push_back({{"n", str(found.start)},
                           {"remainders", int_array(found.remainders)}});
      e.series = found.remainders;
    } catch (const std::runtime_error& err) {
      // An exhausted scan is an empty search result, not a failure.
      out.error = err.what();
      e.empty = true;
      e.series = std::vector<Int>{};
    }
    emit(out, fmt, "remainder.minimal", params, e);
  });
}

}  // extern "C"
