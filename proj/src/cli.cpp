// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "torusconj/action.hpp"
#include "torusconj/diag.hpp"
#include "torusconj/errors.hpp"
#include "torusconj/exactmat.hpp"
#include "torusconj/lattice.hpp"
#include "torusconj/normalizer.hpp"
#include "torusconj/oracle.hpp"
#include "torusconj/roots.hpp"

namespace torusconj::cli {
namespace {

using Json = nlohmann::json;

constexpr unsigned long kMaxRootVectors = 100'000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- JSON encoding ---------------------------------------------------------

// Integers that fit in 64 bits are numbers, anything wider is a decimal string.
Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json to_json(std::span<const Integer> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json one_based(std::span<const std::size_t> idx) {
  Json a = Json::array();
  for (auto i : idx) a.push_back(i + 1);
  return a;
}

Json permutation_json(std::span<const std::size_t> p) {
  return {{"permutation", one_based(p)}, {"cycles", cycle_string(p)}};
}

Json signed_permutation_json(const SignedPermutation& sp) {
  Json j = permutation_json(sp.perm);
  j["sign"] = sp.sign;
  return j;
}

Json iso_json(const IsoType& t) {
  return {{"torus_rank", t.torus_rank}, {"factors", to_json(t.factors)}};
}

// ---- operand decoding ------------------------------------------------------

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

std::size_t to_size(const Integer& x, const char* what) {
  if (sgn(x) < 0 || !x.fits_ulong_p())
    fail(ErrorKind::kInvalidArgument, std::string(what) + " must be a nonnegative machine-size integer");
  return x.get_ui();
}

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream is(text);
  return {std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
}

IntVector vector_from_text(const std::string& text) {
  if (text.find(';') != std::string::npos) throw ParseError("expected a single row, found ';'");
  IntVector v;
  for (const auto& t : tokens(text)) v.push_back(parse_integer(t));
  if (v.empty()) throw ParseError("empty vector");
  return v;
}

// Rows are separated by ';' or by line breaks; trailing blank lines are ignored.
IntMatrix matrix_from_text(std::string text) {
  std::replace(text.begin(), text.end(), '\r', ' ');
  text.erase(text.find_last_not_of(" \t\n") + 1);
  std::replace(text.begin(), text.end(), '\n', ';');
  std::vector<IntVector> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(';', start), text.size());
    IntVector row;
    for (const auto& t : tokens(text.substr(start, stop - start))) row.push_back(parse_integer(t));
    if (row.empty()) throw ParseError("empty row in matrix literal");
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix rows have different lengths");
    rows.push_back(std::move(row));
    start = stop + 1;
  }
  return IntMatrix::from_rows(rows, rows.front().size());
}

IntVector vector_from_json(const Json& j) {
  if (j.is_string()) return vector_from_text(j.get<std::string>());
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of integers");
  if (j.size() == 1 && j.front().is_array()) return vector_from_json(j.front());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

IntMatrix matrix_from_json(const Json& j) {
  if (j.is_string()) return matrix_from_text(j.get<std::string>());
  if (j.is_object() && j.contains("canonical_matrix")) return matrix_from_json(j["canonical_matrix"]);
  if (j.is_object() && j.contains("entries")) {
    // {"rows": m, "cols": n, "entries": [...]}; the only form that can carry m = 0.
    const Json& e = j["entries"];
    if (!j.contains("rows") || !j.contains("cols") || !e.is_array())
      throw ParseError("matrix object needs rows, cols and entries");
    const std::size_t m = to_size(integer_from_json(j["rows"]), "rows");
    const std::size_t n = to_size(integer_from_json(j["cols"]), "cols");
    if (n == 0) throw ParseError("matrix needs at least one column");
    if (e.size() != m) throw ParseError("entries do not match the row count");
    if (m == 0) return IntMatrix(0, n);
    IntMatrix a = matrix_from_json(e);
    if (a.cols() != n) throw ParseError("entries do not match the column count");
    return a;
  }
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of rows");
  if (!j.front().is_array()) return IntMatrix::row_vector(vector_from_json(j));
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.empty()) throw ParseError("matrix rows must be nonempty arrays");
    IntVector row;
    for (const auto& x : r) row.push_back(integer_from_json(x));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, rows.front().size());
}

Json parse_json(const std::string& text) {
  try {
    Json j = Json::parse(text);
    // A full response envelope may be fed back in; its result is the operand.
    if (j.is_object() && j.contains("schema_version") && j.contains("result")) return j["result"];
    return j;
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read file " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// An operand arrives as matrix-literal text or as a JSON value.
using Raw = std::variant<std::string, Json>;

struct Operand {
  std::string name;
  std::string literal;
  std::string file;
  std::string json;
  CLI::Option* literal_opt = nullptr;
  CLI::Option* file_opt = nullptr;
  CLI::Option* json_opt = nullptr;
};

struct Response {
  Response(Json r, std::optional<Json> w = std::nullopt, std::optional<Json> p = std::nullopt)
      : result(std::move(r)), witness(std::move(w)), parameters(std::move(p)) {}

  Json result;
  std::optional<Json> witness;
  std::optional<Json> parameters;
};

class Command {
 public:
  using Handler = std::function<Response(const Command&)>;

  Command(CLI::App* app, const std::optional<Json>* stdin_doc) : app_(app), stdin_doc_(stdin_doc) {}

  CLI::App* app() const { return app_; }
  void set_handler(Handler h) { handler_ = std::move(h); }
  Response invoke() const { return handler_(*this); }

  void operand(const std::string& name, const std::string& what) {
    auto op = std::make_unique<Operand>();
    op->name = name;
    op->literal_opt = app_->add_option("--" + name, op->literal, what);
    op->file_opt = app_->add_option("--" + name + "-file", op->file, what + " (read from file)");
    op->json_opt = app_->add_option("--" + name + "-json", op->json, what + " (JSON)");
    operands_.push_back(std::move(op));
  }

  std::optional<Raw> fetch(const std::string& name) const {
    const auto it = std::find_if(operands_.begin(), operands_.end(),
                                 [&](const auto& op) { return op->name == name; });
    if (it == operands_.end()) throw std::logic_error("unknown operand " + name);
    const Operand& op = **it;
    const bool from_stdin = stdin_doc_->has_value() && (*stdin_doc_)->contains(name);
    const int sources = static_cast<int>(op.literal_opt->count() > 0) +
                        static_cast<int>(op.file_opt->count() > 0) +
                        static_cast<int>(op.json_opt->count() > 0) + static_cast<int>(from_stdin);
    if (sources > 1) throw UsageError("operand --" + name + " given by more than one source");
    if (op.literal_opt->count() > 0) return Raw{op.literal};
    if (op.json_opt->count() > 0) return Raw{parse_json(op.json)};
    if (op.file_opt->count() > 0) {
      const std::string text = read_file(op.file);
      const auto first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && std::string("[{\"").find(text[first]) != std::string::npos)
        return Raw{parse_json(text)};
      return Raw{text};
    }
    if (from_stdin) return Raw{(**stdin_doc_)[name]};
    return std::nullopt;
  }

  bool has(const std::string& name) const { return fetch(name).has_value(); }

  Raw required(const std::string& name) const {
    auto raw = fetch(name);
    if (!raw) throw UsageError("missing operand --" + name);
    return *raw;
  }

  IntMatrix matrix(const std::string& name) const {
    const Raw raw = required(name);
    if (const auto* s = std::get_if<std::string>(&raw)) return matrix_from_text(*s);
    return matrix_from_json(std::get<Json>(raw));
  }

  IntVector vector(const std::string& name) const {
    const Raw raw = required(name);
    if (const auto* s = std::get_if<std::string>(&raw)) return vector_from_text(*s);
    return vector_from_json(std::get<Json>(raw));
  }

  // 1-based coordinate indices; absent operand means the empty pattern.
  ZeroPattern pattern(const std::string& name, std::size_t n) const {
    const auto raw = fetch(name);
    std::vector<Integer> values;
    if (raw) {
      if (const auto* s = std::get_if<std::string>(&*raw)) {
        for (const auto& t : tokens(*s)) values.push_back(parse_integer(t));
      } else {
        const Json& j = std::get<Json>(*raw);
        if (!j.is_array()) throw ParseError("expected an array of coordinate indices");
        for (const auto& x : j) values.push_back(integer_from_json(x));
      }
    }
    std::vector<std::size_t> idx;
    for (const auto& v : values) {
      if (sgn(v) <= 0 || !v.fits_ulong_p()) throw ParseError("coordinate indices start at 1");
      idx.push_back(v.get_ui() - 1);
    }
    return ZeroPattern::from_indices(n, idx);
  }

  CLI::Option* option(const std::string& name, const std::string& what, const std::string& fallback = "") {
    std::string& slot = values_[name];
    slot = fallback;
    return app_->add_option("--" + name, slot, what);
  }
  const std::string& text(const std::string& name) const { return values_.at(name); }
  Integer scalar(const std::string& name) const { return parse_integer(text(name)); }

 private:
  CLI::App* app_;
  const std::optional<Json>* stdin_doc_;
  std::vector<std::unique_ptr<Operand>> operands_;
  std::map<std::string, std::string> values_;
  Handler handler_;
};

Json orbit_json(const OrbitReport& r) {
  Json j{{"stabilizer", iso_json(r.stabilizer)},
         {"stabilizer_dim", r.stabilizer_dim},
         {"orbit_dim", r.orbit_dim},
         {"closed", r.closed},
         {"origin_in_closure", r.origin_in_closure}};
  if (r.stabilizer_order) j["stabilizer_order"] = to_json(*r.stabilizer_order);
  return j;
}

Json action_json(const ActionReport& r) {
  return {{"group_dim", r.group_dim},
          {"stable", r.stable},
          {"has_nonconstant_invariants", r.has_nonconstant_invariants},
          {"invariant_monomial", r.invariant_monomial ? to_json(*r.invariant_monomial) : Json()},
          {"nonclosed_codim1_orbit_axes", one_based(r.nonclosed_codim1_orbit_axes)}};
}

Json normalizer_json(const NormalizerReport& r) {
  Json c{{"tag", std::string(to_string(r.normalizer_case.tag))}};
  if (r.normalizer_case.axis) c["axis"] = *r.normalizer_case.axis + 1;
  Json gens = Json::array();
  for (const auto& g : r.perm_part.generators) gens.push_back(signed_permutation_json(g));
  Json cent = Json::array();
  for (const auto& p : r.centralizer_perm_part) cent.push_back(permutation_json(p));
  Json j{{"case", c},
         {"contained_in_monomial", r.contained_in_monomial},
         {"algebraic", r.algebraic},
         {"explicit_form_known", r.explicit_form_known},
         {"perm_part", {{"generators", gens}, {"order", to_json(r.perm_part.order)}}},
         {"centralizer_perm_part", cent}};
  if (r.explicit_structure) j["explicit_structure"] = *r.explicit_structure;
  if (r.axis_shape) {
    j["axis_shape"] = {{"axis", r.axis_shape->axis + 1},
                       {"affine_coordinate", r.axis_shape->axis + 1},
                       {"monomially_permuted", one_based(r.axis_shape->permuted_coordinates)}};
  }
  return j;
}

// ---- subcommands -----------------------------------------------------------

void register_commands(CLI::App& app, std::vector<std::unique_ptr<Command>>& cmds,
                       const std::optional<Json>* stdin_doc) {
  auto add = [&](const std::string& name, const std::string& what) -> Command& {
    cmds.push_back(std::make_unique<Command>(app.add_subcommand(name, what), stdin_doc));
    return *cmds.back();
  };

  {
    auto& c = add("snf", "Smith normal form S = U A V");
    c.operand("matrix", "integer matrix");
    c.set_handler([](const Command& c) {
      const SmithDecomposition d = smith_normal_form(c.matrix("matrix"));
      return Response{{{"factors", to_json(d.factors)},
                       {"rank", d.rank()},
                       {"s", to_json(d.s)},
                       {"u", to_json(d.u)},
                       {"v", to_json(d.v)}}};
    });
  }
  {
    auto& c = add("hnf", "Hermite basis of the row lattice");
    c.operand("matrix", "integer matrix");
    c.set_handler([](const Command& c) {
      return Response{to_json(hermite_normal_form(c.matrix("matrix")))};
    });
  }
  {
    auto& c = add("pluecker", "maximal minors of a full-row-rank matrix");
    c.operand("matrix", "integer matrix");
    c.set_handler([](const Command& c) {
      Json a = Json::array();
      for (const auto& [cols, minor] : pluecker_coordinates(c.matrix("matrix")))
        a.push_back({{"columns", one_based(cols)}, {"minor", to_json(minor)}});
      return Response{a};
    });
  }
  {
    auto& c = add("lattice-equal", "equality of row lattices");
    c.operand("a", "first matrix");
    c.operand("b", "second matrix");
    c.option("method", "hermite or pluecker", "hermite")->check(CLI::IsMember({"hermite", "pluecker"}));
    c.set_handler([](const Command& c) {
      const IntMatrix a = c.matrix("a");
      const IntMatrix b = c.matrix("b");
      const std::string& method = c.text("method");
      const bool eq = method == "pluecker" ? pluecker_equal(a, b) : equal(lattice_of(a), lattice_of(b));
      return Response{eq, std::nullopt, Json{{"method", method}}};
    });
  }
  {
    auto& c = add("contains", "membership of a vector in a row lattice");
    c.operand("matrix", "integer matrix");
    c.operand("vector", "integer vector");
    c.set_handler([](const Command& c) {
      return Response{contains(lattice_of(c.matrix("matrix")), c.vector("vector"))};
    });
  }
  {
    auto& c = add("isotype", "isomorphism type of D_n(A)");
    c.operand("matrix", "defining matrix");
    c.set_handler([](const Command& c) {
      const auto g = DiagSubgroup::from_matrix(c.matrix("matrix"));
      Json j = iso_json(iso_type(g));
      j["dimension"] = dimension(g);
      return Response{j};
    });
  }
  {
    auto& c = add("conjugate", "conjugacy of two diagonalizable subgroups");
    c.operand("a", "first defining matrix or weight vector");
    c.operand("b", "second defining matrix or weight vector");
    c.option("group", "gln, monomial, crn or autn-codim1")
        ->required()
        ->check(CLI::IsMember({"gln", "monomial", "crn", "autn-codim1"}));
    c.set_handler([](const Command& c) {
      const std::string& group = c.text("group");
      if (group == "autn-codim1") {
        const auto w = conjugate_in_autn_codim1(c.vector("a"), c.vector("b"));
        return Response{w.has_value(), w ? std::optional<Json>(signed_permutation_json(*w)) : std::nullopt,
                        Json{{"group", group}}};
      }
      const auto g1 = DiagSubgroup::from_matrix(c.matrix("a"));
      const auto g2 = DiagSubgroup::from_matrix(c.matrix("b"));
      if (group == "crn") {
        const auto m = crn_conjugator(g1, g2);
        return Response{m.has_value(), m ? std::optional<Json>(Json{{"matrix", to_json(*m)}}) : std::nullopt,
                        Json{{"group", group}}};
      }
      const auto p = conjugate_in_gl(g1, g2);
      return Response{p.has_value(), p ? std::optional<Json>(permutation_json(*p)) : std::nullopt,
                      Json{{"group", group}}};
    });
  }
  {
    auto& c = add("canonical", "canonical representative of a conjugacy class");
    c.operand("matrix", "defining matrix (crn)");
    c.operand("weights", "weight vector");
    c.option("context", "crn, autn-codim1, aut3-torus or crn-codim1")
        ->required()
        ->check(CLI::IsMember({"crn", "autn-codim1", "aut3-torus", "crn-codim1"}));
    c.set_handler([](const Command& c) {
      const std::string& context = c.text("context");
      const Json params{{"context", context}};
      if (context == "crn") {
        const IntMatrix a = c.has("matrix") ? c.matrix("matrix") : IntMatrix::row_vector(c.vector("weights"));
        const CanonicalCrn k = crn_canonical(DiagSubgroup::from_matrix(a));
        return Response{{{"r", k.r}, {"factors", to_json(k.factors)},
                         {"canonical_matrix", to_json(k.canonical_matrix)}},
                        std::nullopt, params};
      }
      const IntVector l = c.vector("weights");
      if (context == "autn-codim1") return Response{to_json(codim1_canonical(l)), std::nullopt, params};
      if (context == "aut3-torus") return Response{to_json(aut3_torus_canonical(l)), std::nullopt, params};
      return Response{to_json(crn_codim1_canonical(l)), std::nullopt, params};
    });
  }
  {
    auto& c = add("torus-equal", "equality of one-dimensional tori T(l), T(l')");
    c.operand("a", "first primitive vector");
    c.operand("b", "second primitive vector");
    c.set_handler([](const Command& c) {
      return Response{torus_equal_1dim(c.vector("a"), c.vector("b"))};
    });
  }
  {
    auto& c = add("orbit", "orbit data for points with a given zero pattern");
    c.operand("weights", "weight vector l");
    c.operand("zeros", "1-based coordinates that vanish");
    c.set_handler([](const Command& c) {
      const WeightVector w{c.vector("weights")};
      return Response{orbit_json(orbit_report(w, c.pattern("zeros", w.n())))};
    });
  }
  {
    auto& c = add("limit", "zero pattern of the limit along a one-parameter subgroup");
    c.operand("weights", "weight vector l");
    c.operand("zeros", "1-based coordinates that vanish");
    c.operand("direction", "cocharacter d with <d, l> = 0");
    c.set_handler([](const Command& c) {
      const WeightVector w{c.vector("weights")};
      const auto p = limit_pattern(w, c.pattern("zeros", w.n()), c.vector("direction"));
      return Response{p ? one_based(p->indices()) : Json()};
    });
  }
  {
    auto& c = add("action-report", "stability and invariants of the action of D_n(l)");
    c.operand("weights", "weight vector l");
    c.set_handler([](const Command& c) {
      return Response{action_json(action_report(WeightVector{c.vector("weights")}))};
    });
  }
  {
    auto& c = add("normalizer", "normalizer case and monomial part for D_n(l)");
    c.operand("weights", "weight vector l");
    c.set_handler([](const Command& c) {
      return Response{normalizer_json(normalizer_report(c.vector("weights")))};
    });
  }
  {
    auto& c = add("roots", "root vectors x^l d/dx_i up to a total degree");
    c.option("dim", "ambient dimension n")->required();
    c.option("degree", "maximal total degree of l")->required();
    c.option("group", "diagonal (D_n) or special (D_n*)", "diagonal")->check(CLI::IsMember({"diagonal", "special"}));
    c.set_handler([](const Command& c) {
      const std::size_t n = to_size(c.scalar("dim"), "--dim");
      const std::size_t d = to_size(c.scalar("degree"), "--degree");
      const std::string& rel = c.text("group");
      const Integer count = root_vector_count(n, d);
      if (cmp(count, kMaxRootVectors) > 0) fail(ErrorKind::kTooLarge, "too many root vectors to list");
      const RootGroup g = rel == "special" ? RootGroup::kSpecial : RootGroup::kDiagonal;
      Json list = Json::array();
      for (const auto& rv : enumerate_root_vectors(n, d)) {
        list.push_back({{"i", rv.i + 1}, {"l", to_json(rv.l)}, {"root", to_json(root_of(rv, g).exponents)}});
      }
      return Response{{{"count", to_json(count)}, {"root_vectors", list}}, std::nullopt,
                      Json{{"group", rel}}};
    });
  }
  {
    auto& c = add("oracle-torsion", "count m-torsion points of D_n(A) by enumeration");
    c.operand("matrix", "defining matrix");
    c.option("modulus", "modulus m >= 1")->required();
    c.set_handler([](const Command& c) {
      const std::size_t m = to_size(c.scalar("modulus"), "--modulus");
      return Response{torsion_count(c.matrix("matrix"), m), std::nullopt, Json{{"modulus", m}}};
    });
  }
  {
    auto& c = add("oracle-lattice-equal", "compare row lattices inside a box");
    c.operand("a", "first matrix");
    c.operand("b", "second matrix");
    c.option("bound", "box half-width (default: from Hermite bases)");
    c.set_handler([](const Command& c) {
      const IntMatrix a = c.matrix("a");
      const IntMatrix b = c.matrix("b");
      const Integer bound = c.text("bound").empty() ? default_lattice_bound(a, b) : c.scalar("bound");
      return Response{lattice_equal_bounded(a, b, bound), std::nullopt, Json{{"bound", to_json(bound)}}};
    });
  }
  {
    auto& c = add("oracle-closedness", "search for a destabilizing one-parameter subgroup");
    c.operand("weights", "weight vector l");
    c.operand("zeros", "1-based coordinates that vanish");
    c.option("bound", "search radius (default 3 max|l_i|)");
    c.set_handler([](const Command& c) {
      const WeightVector w{c.vector("weights")};
      const Integer bound = c.text("bound").empty() ? default_closedness_bound(w) : c.scalar("bound");
      const auto d = closedness_search(w, c.pattern("zeros", w.n()), bound);
      return Response{!d.has_value(), d ? std::optional<Json>(Json{{"d", to_json(*d)}}) : std::nullopt,
                      Json{{"bound", to_json(bound)}}};
    });
  }
  {
    auto& c = add("oracle-perm-sign", "exhaustive search for l = e (l' o sigma)");
    c.operand("a", "first vector");
    c.operand("b", "second vector");
    c.set_handler([](const Command& c) {
      const auto w = perm_sign_exhaust(c.vector("a"), c.vector("b"));
      return Response{w.has_value(), w ? std::optional<Json>(signed_permutation_json(*w)) : std::nullopt};
    });
  }
}

int emit_error(std::ostream& out, std::ostream& err, const std::string& command, const std::string& kind,
               const std::string& message, int code, bool pretty) {
  Json env{{"schema_version", 1},
           {"ok", false},
           {"error", {{"kind", kind}, {"message", message}}}};
  if (!command.empty()) env["command"] = command;
  out << env.dump(pretty ? 2 : -1) << '\n';
  err << "torusconj: " << kind << ": " << message << '\n';
  return code;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact decision procedures for diagonalizable subgroups of the torus", "torusconj"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  bool use_stdin = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_flag("--stdin", use_stdin, "read operands as a JSON object from standard input");

  std::optional<Json> stdin_doc;
  std::vector<std::unique_ptr<Command>> commands;
  register_commands(app, commands, &stdin_doc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::string name;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    for (const auto& c : commands)
      if (c->app()->parsed()) name = c->app()->get_name();
    std::string message = e.what();
    if (name.empty()) {
      const auto first = std::find_if(args.begin(), args.end(), [](const std::string& a) { return !a.starts_with('-'); });
      if (first != args.end()) message = "unknown command '" + *first + "'";
    }
    return emit_error(out, err, name, "UsageError", message, kExitMalformed, pretty);
  }

  const Command* cmd = nullptr;
  for (const auto& c : commands)
    if (c->app()->parsed()) cmd = c.get();
  name = cmd->app()->get_name();

  try {
    if (use_stdin) {
      const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      Json doc = parse_json(text);
      if (!doc.is_object()) throw ParseError("standard input must hold a JSON object of operands");
      stdin_doc = std::move(doc);
    }
    const Response r = cmd->invoke();
    Json env{{"schema_version", 1}, {"ok", true}, {"command", name}, {"result", r.result}};
    if (r.witness) env["witness"] = *r.witness;
    if (r.parameters) env["parameters"] = *r.parameters;
    out << env.dump(pretty ? 2 : -1) << '\n';
    return kExitOk;
  } catch (const DomainError& e) {
    return emit_error(out, err, name, std::string(to_string(e.kind())), e.what(), kExitPrecondition, pretty);
  } catch (const ParseError& e) {
    return emit_error(out, err, name, "ParseError", e.what(), kExitMalformed, pretty);
  } catch (const UsageError& e) {
    return emit_error(out, err, name, "UsageError", e.what(), kExitMalformed, pretty);
  } catch (const Json::exception& e) {
    return emit_error(out, err, name, "ParseError", e.what(), kExitMalformed, pretty);
  }
}

}  // namespace torusconj::cli
