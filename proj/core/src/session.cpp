#include "reesblow/session.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "reesblow/parser.hpp"

namespace reesblow {

using json = nlohmann::ordered_json;

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Splits `text` at `sep` where brackets, parentheses and quotes are closed.
std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  bool quoted = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '"') quoted = !quoted;
    if (quoted) continue;
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(std::string(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(std::string(text.substr(start)));
  return out;
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    if (s[i] == '"') {
      auto close = s.find('"', i + 1);
      if (close == std::string_view::npos) throw Error("unterminated quote");
      tokens.emplace_back(s.substr(i + 1, close - i - 1));
      i = close + 1;
      continue;
    }
    std::size_t start = i;
    int depth = 0;
    while (i < s.size() && (depth > 0 || !is_space(s[i]))) {
      char c = s[i];
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') {
        if (--depth < 0) throw Error("unbalanced '" + std::string(1, c) + "'");
      }
      ++i;
    }
    if (depth != 0) throw Error("unbalanced brackets in '" + std::string(s.substr(start)) + "'");
    tokens.emplace_back(s.substr(start, i - start));
  }
  return tokens;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string ideal_text(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return "(0)";
  return "(" + join(poly_strings(gens), ", ") + ")";
}

std::string ideal_text(const Ideal& ideal) { return ideal_text(ideal.generators()); }

std::string ring_text(const RingContext& ring) {
  std::vector<std::string> vars;
  for (const auto& v : ring.variables()) vars.push_back(v.name + ":" + std::to_string(v.weight));
  return ring.field().name() + "[" + join(vars, ", ") + "]";
}

std::string algebra_text(const GradedAlgebra& a) {
  std::string out = ring_text(*a.ring());
  if (!a.ideal().is_zero()) out += " / " + ideal_text(a.ideal());
  if (a.is_zero_ring()) out += " (zero ring)";
  return out;
}

std::string order_name(const MonomialOrder& order) { return order.describe(); }

json weights_json(const RingContext& ring) {
  json w = json::object();
  for (const auto& v : ring.variables()) w[v.name] = v.weight;
  return w;
}

json algebra_json(const GradedAlgebra& a, const std::optional<std::string>& name) {
  json j;
  j["kind"] = "algebra";
  if (name) j["name"] = *name;
  j["field"] = a.ring()->field().name();
  json vars = json::array();
  for (const auto& v : a.ring()->variables()) vars.push_back(v.name);
  j["variables"] = vars;
  j["weights"] = weights_json(*a.ring());
  j["order"] = order_name(a.ring()->order());
  j["generators"] = poly_strings(a.ideal().generators());
  j["reports"] = {{"zero_ring", a.is_zero_ring()}};
  return j;
}

json ideal_json(const Ideal& ideal, const std::optional<std::string>& name) {
  json j;
  j["kind"] = "ideal";
  if (name) j["name"] = *name;
  j["generators"] = poly_strings(ideal.generators());
  j["weights"] = weights_json(*ideal.context());
  return j;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string monomial_text(const RingPtr& ring, const Monomial& m) {
  return Polynomial::term(ring, m, ring->field().one()).to_string();
}

const std::vector<std::string> kVerbs = {
    "ring",    "ideal",     "gb",       "nf",       "member",  "quotient",   "intersect",  "sum",
    "product", "saturate",  "eliminate", "kernel",  "regseq",  "ann",        "hilbert",    "graded",
    "piece",   "split",     "chart",    "veronese", "gendeg1", "twist",      "rees",       "cone",
    "regularize", "treg",   "compare-classical", "naturality", "nonneg", "proj", "blowup", "exceptional",
    "empty",   "deform"};

}  // namespace

std::vector<ScriptCommand> split_script(std::string_view script) {
  std::vector<ScriptCommand> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= script.size()) {
    auto nl = script.find('\n', pos);
    std::string_view raw = script.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line;
    bool quoted = false;
    std::size_t cut = raw.size();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '"') quoted = !quoted;
      if (raw[i] == '#' && !quoted) {
        cut = i;
        break;
      }
    }
    for (auto& part : split_top_level(raw.substr(0, cut), ';')) {
      std::string cmd = trim(part);
      if (!cmd.empty()) out.push_back(ScriptCommand{line, cmd});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

class Session::Command {
 public:
  Command(Session& session, std::vector<std::string> tokens) : s_(session) {
    if (tokens.size() >= 3 && tokens[1] == "=") {
      name_ = tokens[0];
      tokens.erase(tokens.begin(), tokens.begin() + 2);
    }
    verb_ = tokens.front();
    args_.assign(tokens.begin() + 1, tokens.end());
    if (!name_ && verb_ != "ring" && verb_ != "ideal" && args_.size() >= 2 && args_[1] == "=") {
      name_ = args_[0];
      args_.erase(args_.begin(), args_.begin() + 2);
    }
  }

  OutputRecord run() {
    if (std::find(kVerbs.begin(), kVerbs.end(), verb_) == kVerbs.end())
      throw Error("unknown command '" + verb_ + "'");
    dispatch();
    OutputRecord r;
    r.text = join(lines_, "\n");
    r.result = std::move(result_);
    return r;
  }

 private:
  // ---- argument access ----
  [[noreturn]] void usage(const std::string& form) const { throw Error("usage: " + form); }

  void require_args(std::size_t n, const std::string& form) const {
    if (args_.size() != n) usage(form);
  }

  std::optional<std::string> take_option(const std::string& key) {
    for (std::size_t i = 0; i + 1 < args_.size(); ++i) {
      if (args_[i] == key) {
        std::string value = args_[i + 1];
        args_.erase(args_.begin() + static_cast<std::ptrdiff_t>(i), args_.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        return value;
      }
    }
    return std::nullopt;
  }

  bool take_flag(const std::string& key) {
    auto it = std::find(args_.begin(), args_.end(), key);
    if (it == args_.end()) return false;
    args_.erase(it);
    return true;
  }

  static int integer(const std::string& text) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) throw Error("expected an integer, got '" + text + "'");
    return value;
  }

  int bound_or(std::optional<std::string> given, int fallback) const {
    if (given) return integer(*given);
    return s_.options_.bound.value_or(fallback);
  }

  static std::string bracket_body(const std::string& token) {
    if (token.size() < 2 || token.front() != '[' || token.back() != ']')
      throw Error("expected a bracketed list, got '" + token + "'");
    return token.substr(1, token.size() - 2);
  }

  static std::vector<Polynomial> poly_list(const std::string& token, const RingPtr& ring) {
    std::string body = bracket_body(token);
    try {
      return parse_polynomial_list(body, ring);
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.reason(), e.position() + 1);
    }
  }

  static Polynomial poly(const std::string& token, const RingPtr& ring) {
    if (!token.empty() && token.front() == '[') throw Error("expected a polynomial, got a list '" + token + "'");
    return parse_polynomial(token, ring);
  }

  static std::vector<std::string> name_list(const std::string& token) {
    std::vector<std::string> out;
    for (auto& part : split_top_level(bracket_body(token), ',')) {
      std::string n = trim(part);
      if (!n.empty()) out.push_back(n);
    }
    return out;
  }

  const Binding& lookup(const std::string& name) const {
    auto it = s_.bindings_.find(name);
    if (it == s_.bindings_.end()) throw Error("unknown name '" + name + "'");
    return it->second;
  }

  const GradedAlgebra& algebra(const std::string& name) const {
    const Binding& b = lookup(name);
    if (auto a = std::get_if<GradedAlgebra>(&b)) return *a;
    if (auto r = std::get_if<ReesPresentation>(&b)) return r->algebra;
    throw Error("'" + name + "' is not an algebra");
  }

  const IdealBinding& ideal(const std::string& name) const {
    if (auto i = std::get_if<IdealBinding>(&lookup(name))) return *i;
    throw Error("'" + name + "' is not an ideal");
  }

  // An ideal name, or an algebra name standing for its defining ideal.
  Ideal base_ideal(const std::string& name) const {
    const Binding& b = lookup(name);
    if (auto i = std::get_if<IdealBinding>(&b)) return i->full;
    return algebra(name).ideal();
  }

  const ReesPresentation& rees(const std::string& name) const {
    if (auto r = std::get_if<ReesPresentation>(&lookup(name))) return *r;
    throw Error("'" + name + "' is not a Rees presentation");
  }

  const ProjAtlas& atlas(const std::string& name) const {
    if (auto a = std::get_if<ProjAtlas>(&lookup(name))) return *a;
    throw Error("'" + name + "' is not an atlas");
  }

  // `A I`, `A [f1, f2]` or a Rees binding `R`.
  ImmersionData immersion(const std::string& form) {
    if (args_.size() == 1) return rees(args_[0]).data;
    if (args_.size() != 2) usage(form);
    const GradedAlgebra& base = algebra(args_[0]);
    if (!args_[1].empty() && args_[1].front() == '[') return ImmersionData(base, poly_list(args_[1], base.ring()));
    const IdealBinding& i = ideal(args_[1]);
    require_same_ring(*i.ideal.context(), *base.ring());
    return ImmersionData(base, i.ideal.generators());
  }

  std::string label() const { return name_ ? *name_ : verb_; }

  void emit(std::string line) { lines_.push_back(std::move(line)); }

  void bind(Binding value) {
    if (name_) s_.bind(*name_, std::move(value), 0);
  }

  void bind_ideal(const Ideal& result, const std::string& algebra_name) {
    bind(IdealBinding{result, result, algebra_name});
  }

  // ---- commands ----
  void dispatch() {
    if (verb_ == "ring") return cmd_ring();
    if (verb_ == "ideal") return cmd_ideal();
    if (verb_ == "gb") return cmd_gb();
    if (verb_ == "nf" || verb_ == "member") return cmd_nf();
    if (verb_ == "quotient" || verb_ == "intersect" || verb_ == "sum" || verb_ == "product") return cmd_algebra_op();
    if (verb_ == "saturate") return cmd_saturate();
    if (verb_ == "eliminate") return cmd_eliminate();
    if (verb_ == "kernel") return cmd_kernel();
    if (verb_ == "regseq") return cmd_regseq();
    if (verb_ == "ann") return cmd_ann();
    if (verb_ == "hilbert") return cmd_hilbert();
    if (verb_ == "graded") return cmd_graded();
    if (verb_ == "piece") return cmd_piece();
    if (verb_ == "split") return cmd_split();
    if (verb_ == "chart") return cmd_chart();
    if (verb_ == "veronese") return cmd_veronese();
    if (verb_ == "gendeg1") return cmd_gendeg1();
    if (verb_ == "twist") return cmd_twist();
    if (verb_ == "rees") return cmd_rees();
    if (verb_ == "cone" || verb_ == "nonneg") return cmd_cone();
    if (verb_ == "regularize") return cmd_regularize();
    if (verb_ == "treg") return cmd_treg();
    if (verb_ == "compare-classical") return cmd_compare();
    if (verb_ == "naturality") return cmd_naturality();
    if (verb_ == "proj") return cmd_proj();
    if (verb_ == "blowup") return cmd_blowup();
    if (verb_ == "exceptional") return cmd_exceptional();
    if (verb_ == "empty") return cmd_empty();
    if (verb_ == "deform") return cmd_deform();
  }

  void algebra_result(const GradedAlgebra& a) {
    emit(label() + " = " + algebra_text(a));
    result_ = algebra_json(a, name_);
  }

  void ideal_result(const Ideal& i) {
    emit(label() + " = " + ideal_text(i));
    result_ = ideal_json(i, name_);
  }

  void cmd_ring() {
    const std::string form = "ring NAME [FIELD] [x:w, ...] [mod [relations]] [order lex|grevlex]";
    if (args_.empty()) usage(form);
    name_ = args_[0];
    args_.erase(args_.begin());
    auto mod = take_option("mod");
    auto order_text = take_option("order");
    Field field = s_.options_.field;
    if (!args_.empty() && !args_[0].empty() && args_[0].front() != '[') {
      field = Field::parse(args_[0]);
      args_.erase(args_.begin());
    }
    if (args_.size() != 1) usage(form);
    std::vector<Variable> vars;
    for (auto& part : split_top_level(bracket_body(args_[0]), ',')) {
      std::string item = trim(part);
      if (item.empty()) continue;
      auto colon = item.find(':');
      if (colon == std::string::npos) {
        vars.push_back(Variable{item, 0});
      } else {
        vars.push_back(Variable{trim(item.substr(0, colon)), integer(trim(item.substr(colon + 1)))});
      }
    }
    MonomialOrder order = s_.options_.order;
    if (order_text) {
      if (*order_text == "lex")
        order = MonomialOrder::lex();
      else if (*order_text == "grevlex")
        order = MonomialOrder::grevlex();
      else
        throw Error("unknown order '" + *order_text + "'");
    }
    RingPtr ring = RingContext::make(field, std::move(vars), order);
    std::vector<Polynomial> relations;
    if (mod) relations = poly_list(*mod, ring);
    GradedAlgebra a(Ideal(ring, std::move(relations)), *name_);
    s_.bind(*name_, a, 0);
    algebra_result(a);
  }

  void cmd_ideal() {
    const std::string form = "ideal NAME in ALGEBRA = [f1, ...]";
    if (args_.size() != 5 || args_[1] != "in" || args_[3] != "=") usage(form);
    name_ = args_[0];
    const GradedAlgebra& a = algebra(args_[2]);
    Ideal i(a.ring(), poly_list(args_[4], a.ring()));
    Ideal full = ideal_sum(i, a.ideal());
    s_.bind(*name_, IdealBinding{i, full, args_[2]}, 0);
    emit(*name_ + " = " + ideal_text(i) + " in " + args_[2]);
    result_ = ideal_json(i, name_);
    result_["algebra"] = args_[2];
  }

  void cmd_gb() {
    if (args_.empty() || args_.size() > 2) usage("gb IDEAL [lex|grevlex]");
    Ideal i = base_ideal(args_[0]);
    MonomialOrder order = s_.options_.order;
    if (args_.size() == 2) {
      if (args_[1] == "lex")
        order = MonomialOrder::lex();
      else if (args_[1] == "grevlex")
        order = MonomialOrder::grevlex();
      else
        throw Error("unknown order '" + args_[1] + "'");
    }
    const auto& gb = i.groebner(order);
    emit("gb " + args_[0] + " (" + order_name(order) + ") = " + ideal_text(gb.basis()));
    result_ = {{"kind", "groebner"}, {"generators", poly_strings(gb.basis())}, {"weights", weights_json(*i.context())},
               {"reports", {{"order", order_name(order)}, {"size", gb.size()}}}};
  }

  void cmd_nf() {
    require_args(2, verb_ + " IDEAL POLYNOMIAL");
    Ideal i = base_ideal(args_[0]);
    Polynomial p = poly(args_[1], i.context());
    Polynomial r = i.normal_form(p);
    if (verb_ == "nf") {
      emit("nf = " + r.to_string());
      result_ = {{"kind", "polynomial"}, {"generators", {r.to_string()}}, {"weights", weights_json(*i.context())}};
    } else {
      emit("member: " + bool_text(r.is_zero()));
      result_ = {{"kind", "membership"},
                 {"polynomial", p.to_string()},
                 {"weights", weights_json(*i.context())},
                 {"reports", {{"member", r.is_zero()}, {"normal_form", r.to_string()}}}};
    }
  }

  void cmd_algebra_op() {
    require_args(2, verb_ + " [NAME =] IDEAL IDEAL");
    Ideal a = base_ideal(args_[0]);
    Ideal b = base_ideal(args_[1]);
    IdealOp op = verb_ == "quotient"    ? IdealOp::Quotient
                 : verb_ == "intersect" ? IdealOp::Intersection
                 : verb_ == "sum"       ? IdealOp::Sum
                                        : IdealOp::Product;
    Ideal r = ideal_algebra(op, a, b).canonical();
    ideal_result(r);
    bind_ideal(r, "");
  }

  void cmd_saturate() {
    require_args(2, "saturate [NAME =] IDEAL POLYNOMIAL");
    Ideal i = base_ideal(args_[0]);
    auto sat = saturation(i, poly(args_[1], i.context()));
    ideal_result(sat.ideal);
    emit("stabilized_at: " + std::to_string(sat.stabilized_at));
    result_["reports"] = {{"stabilized_at", sat.stabilized_at}};
    bind_ideal(sat.ideal, "");
  }

  void cmd_eliminate() {
    require_args(2, "eliminate [NAME =] IDEAL [vars]");
    Ideal i = base_ideal(args_[0]);
    Ideal r = eliminate(i, name_list(args_[1])).canonical();
    ideal_result(r);
    emit("ring: " + ring_text(*r.context()));
    bind_ideal(r, "");
  }

  void cmd_kernel() {
    require_args(3, "kernel [NAME =] SOURCE TARGET [images]");
    const GradedAlgebra& source = algebra(args_[0]);
    const GradedAlgebra& target = algebra(args_[1]);
    auto images = poly_list(args_[2], target.ring());
    Ideal k = map_kernel(source.ring(), images, target.ideal()).canonical();
    ideal_result(k);
    if (name_) s_.bind(*name_, IdealBinding{k, ideal_sum(k, source.ideal()), args_[0]}, 0);
  }

  void cmd_regseq() {
    bool all = take_flag("--all");
    require_args(2, "regseq IDEAL|ALGEBRA [f1, ...] [--all]");
    Ideal base = base_ideal(args_[0]);
    auto seq = poly_list(args_[1], base.context());
    auto describe = [&](const RegularSequenceResult& r) {
      json rep = {{"regular", r.regular}, {"proper", r.proper}};
      if (r.failing_index) rep["failing_index"] = *r.failing_index + 1;
      if (r.witness) rep["witness"] = r.witness->to_string();
      return rep;
    };
    auto result = regular_sequence_test(seq, base);
    emit("sequence: " + ideal_text(seq));
    emit("regular: " + bool_text(result.regular));
    if (result.failing_index) emit("failing index: " + std::to_string(*result.failing_index + 1));
    if (result.witness) emit("witness: " + result.witness->to_string());
    if (!result.proper) emit("proper: false");
    json reports = describe(result);
    if (all) {
      std::vector<std::size_t> perm(seq.size());
      std::iota(perm.begin(), perm.end(), 0);
      json perms = json::array();
      do {
        std::vector<Polynomial> permuted;
        std::vector<std::string> idx;
        for (auto k : perm) {
          permuted.push_back(seq[k]);
          idx.push_back(std::to_string(k + 1));
        }
        auto r = regular_sequence_test(permuted, base);
        emit("order (" + join(idx, ", ") + "): " + bool_text(r.regular));
        json entry = describe(r);
        entry["order"] = idx;
        perms.push_back(entry);
      } while (std::next_permutation(perm.begin(), perm.end()));
      reports["permutations"] = perms;
    }
    result_ = {{"kind", "regular_sequence"},
               {"generators", poly_strings(seq)},
               {"weights", weights_json(*base.context())},
               {"reports", reports}};
  }

  void cmd_ann() {
    require_args(2, "ann [NAME =] IDEAL|ALGEBRA POLYNOMIAL");
    Ideal base = base_ideal(args_[0]);
    Ideal r = annihilator(poly(args_[1], base.context()), base);
    bool zero_divisor = !base.contains(r);
    ideal_result(r);
    emit("zero divisor: " + bool_text(zero_divisor));
    result_["reports"] = {{"zero_divisor", zero_divisor}};
    bind_ideal(r, "");
  }

  void cmd_hilbert() {
    require_args(3, "hilbert IDEAL|ALGEBRA DMIN DMAX");
    Ideal base = base_ideal(args_[0]);
    auto values = hilbert_function(base, integer(args_[1]), integer(args_[2]));
    std::vector<std::string> parts;
    json arr = json::array();
    for (auto [d, n] : values) {
      parts.push_back(std::to_string(d) + ":" + std::to_string(n));
      arr.push_back({d, n});
    }
    emit("hilbert: " + join(parts, " "));
    result_ = {{"kind", "hilbert"}, {"weights", weights_json(*base.context())}, {"reports", {{"values", arr}}}};
  }

  void cmd_graded() {
    require_args(1, "graded NAME = IDEAL|ALGEBRA");
    if (!name_) usage("graded NAME = IDEAL|ALGEBRA");
    GradedAlgebra a(base_ideal(args_[0]), *name_);
    algebra_result(a);
    bind(a);
  }

  void cmd_piece() {
    auto shift = take_option("shift");
    auto bound = take_option("bound");
    require_args(2, "piece ALGEBRA DEGREE [shift N] [bound B]");
    const GradedAlgebra& a = algebra(args_[0]);
    std::optional<int> b = bound ? std::optional<int>(integer(*bound)) : s_.options_.bound;
    auto piece = graded_piece_basis(a, integer(args_[1]), b, shift ? integer(*shift) : 0);
    std::vector<std::string> basis;
    for (const auto& m : piece.basis) basis.push_back(monomial_text(a.ring(), m));
    emit("piece " + args_[1] + (piece.shift ? " of shift " + std::to_string(piece.shift) : "") + ": [" +
         join(basis, ", ") + "]");
    emit("dimension: " + std::to_string(basis.size()));
    json rep = {{"degree", piece.degree}, {"shift", piece.shift}, {"dimension", basis.size()}};
    if (piece.bound) rep["bound"] = *piece.bound;
    result_ = {{"kind", "piece"}, {"generators", basis}, {"weights", weights_json(*a.ring())}, {"reports", rep}};
  }

  void cmd_split() {
    auto upto = take_option("upto");
    auto bound = take_option("bound");
    require_args(1, "split ALGEBRA [upto D] [bound B]");
    const GradedAlgebra& a = algebra(args_[0]);
    auto split = split_degree_zero(a);
    int top = bound_or(upto, 6);
    int cap = bound ? integer(*bound) : 2;
    auto checks = check_split(a, split, top, cap);
    emit("B0 = " + algebra_text(split.degree_zero));
    emit("B+ = " + ideal_text(split.irrelevant));
    json degrees = json::array();
    bool additive = true;
    for (const auto& c : checks) {
      emit("d=" + std::to_string(c.degree) + ": " + std::to_string(c.total) + " = " +
           std::to_string(c.degree_zero_part) + " + " + std::to_string(c.irrelevant_part));
      additive = additive && c.additive() && c.disjoint;
      degrees.push_back({{"degree", c.degree},
                         {"total", c.total},
                         {"degree_zero", c.degree_zero_part},
                         {"irrelevant", c.irrelevant_part},
                         {"disjoint", c.disjoint}});
    }
    emit("additive: " + bool_text(additive));
    result_ = {{"kind", "split"},
               {"generators", poly_strings(split.irrelevant.generators())},
               {"weights", weights_json(*a.ring())},
               {"degree_zero", algebra_json(split.degree_zero, std::nullopt)},
               {"reports", {{"additive", additive}, {"exponent_bound", cap}, {"degrees", degrees}}}};
  }

  static std::string substitution_text(const Chart& c) {
    std::vector<std::string> parts;
    for (const auto& [from, to] : c.substitution()) parts.push_back(from + " -> " + to);
    return join(parts, ", ");
  }

  static json chart_json(const Chart& c, std::size_t index, const std::string& generator) {
    json j = algebra_json(c.ring, std::nullopt);
    j["kind"] = "chart";
    j["index"] = index;
    j["at"] = generator;
    json sub = json::object();
    for (const auto& [from, to] : c.substitution()) sub[from] = to;
    j["substitution"] = sub;
    if (c.exceptional) j["exceptional"] = c.exceptional->to_string();
    return j;
  }

  void cmd_chart() {
    require_args(2, "chart [NAME =] ALGEBRA POLYNOMIAL");
    const GradedAlgebra& a = algebra(args_[0]);
    Polynomial f = poly(args_[1], a.ring());
    Chart c = homogeneous_localization_chart(a, f);
    auto check = verify_degree_zero_localization(a, c);
    emit(label() + " at " + f.to_string() + " = " + algebra_text(c.ring));
    emit("substitution: " + substitution_text(c));
    emit("localization check: " + bool_text(check.ok()));
    result_ = chart_json(c, 1, f.to_string());
    if (name_) result_["name"] = *name_;
    result_["reports"]["localization_check"] = {{"forward_well_defined", check.forward_well_defined},
                                                {"backward_well_defined", check.backward_well_defined},
                                                {"forward_then_backward", check.forward_then_backward_identity},
                                                {"backward_then_forward", check.backward_then_forward_identity}};
    if (name_) bind(c.ring.renamed(*name_));
  }

  void cmd_veronese() {
    auto bound = take_option("bound");
    require_args(2, "veronese [NAME =] ALGEBRA DELTA [bound B]");
    const GradedAlgebra& a = algebra(args_[0]);
    int delta = integer(args_[1]);
    auto v = veronese(a, delta, bound_or(bound, 4 * delta));
    algebra_result(v.algebra);
    std::vector<std::string> images;
    const RingPtr& vr = v.algebra.ring();
    std::size_t first = vr->nvars() - v.generator_images.size();
    json imgs = json::object();
    for (std::size_t k = 0; k < v.generator_images.size(); ++k) {
      images.push_back(vr->variable(first + k).name + " -> " + v.generator_images[k].to_string());
      imgs[vr->variable(first + k).name] = v.generator_images[k].to_string();
    }
    emit("images: " + join(images, ", "));
    std::vector<std::string> hs;
    bool identity = true;
    json hil = json::array();
    for (auto [d, small, big] : v.hilbert_check) {
      hs.push_back(std::to_string(d) + ":" + std::to_string(small) + "/" + std::to_string(big));
      identity = identity && small == big;
      hil.push_back({d, small, big});
    }
    if (!v.hilbert_check.empty()) {
      emit("hilbert (veronese/original): " + join(hs, " "));
      emit("hilbert identity: " + bool_text(identity));
    }
    result_["images"] = imgs;
    result_["reports"]["degree_bound"] = v.degree_bound;
    if (!v.hilbert_check.empty()) {
      result_["reports"]["hilbert"] = hil;
      result_["reports"]["hilbert_identity"] = identity;
    }
    bind(v.algebra.renamed(name_.value_or("")));
  }

  void cmd_gendeg1() {
    if (args_.empty() || args_.size() > 2) usage("gendeg1 ALGEBRA [N]");
    const GradedAlgebra& a = algebra(args_[0]);
    int n = args_.size() == 2 ? integer(args_[1]) : s_.options_.bound.value_or(6);
    auto r = generated_in_degree_one(a, n);
    emit("generated in degree 1: " + bool_text(r.generated) + " (checked up to degree " + std::to_string(n) + ")");
    json rep = {{"generated", r.generated}, {"bound", n}};
    if (r.failing_degree) {
      emit("failing degree: " + std::to_string(*r.failing_degree));
      emit("witness: " + monomial_text(a.ring(), *r.witness));
      rep["failing_degree"] = *r.failing_degree;
      rep["witness"] = monomial_text(a.ring(), *r.witness);
    }
    result_ = {{"kind", "generation"}, {"weights", weights_json(*a.ring())}, {"reports", rep}};
  }

  void cmd_twist() {
    if (args_.size() < 2 || args_.size() > 3) usage("twist ATLAS N [M]");
    const ProjAtlas& at = atlas(args_[0]);
    int n = integer(args_[1]);
    int m = args_.size() == 3 ? integer(args_[2]) : n;
    auto g = twist_cocycle(at, n);
    json entries = json::array();
    for (const auto& e : g.entries) {
      if (e.i == e.j) continue;
      emit("g(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ") = " + e.value.to_string() +
           ", inverse " + e.inverse.to_string());
      entries.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"value", e.value.to_string()}, {"inverse", e.inverse.to_string()}});
    }
    bool product = cocycle_product_holds(at, g, twist_cocycle(at, m), twist_cocycle(at, n + m));
    bool condition = cocycle_condition_holds(at, g);
    emit("g(" + std::to_string(n) + ")*g(" + std::to_string(m) + ") = g(" + std::to_string(n + m) +
         "): " + bool_text(product));
    emit("cocycle condition: " + bool_text(condition));
    result_ = {{"kind", "cocycle"},
               {"n", n},
               {"entries", entries},
               {"reports", {{"m", m}, {"product", product}, {"cocycle_condition", condition}}}};
  }

  void cmd_rees() {
    if (!name_) usage("rees NAME = ALGEBRA IDEAL|[f1, ...]");
    ReesPresentation r = rees_extended(immersion("rees NAME = ALGEBRA IDEAL|[f1, ...]"));
    r.algebra = r.algebra.renamed(*name_);
    emit(*name_ + " = " + algebra_text(r.algebra));
    std::vector<std::string> parts;
    json vs = json::object();
    for (std::size_t i = 0; i < r.v.size(); ++i) {
      parts.push_back(r.ring()->variable(r.v[i]).name + " -> " + r.data.sequence()[i].to_string());
      vs[r.ring()->variable(r.v[i]).name] = r.data.sequence()[i].to_string();
    }
    if (!parts.empty()) emit("v: " + join(parts, ", "));
    emit("t^-1: " + r.u_name());
    result_ = algebra_json(r.algebra, name_);
    result_["kind"] = "rees";
    result_["v"] = vs;
    result_["u"] = r.u_name();
    bind(r);
  }

  void cmd_cone() {
    require_args(1, verb_ + " [NAME =] REES");
    const ReesPresentation& r = rees(args_[0]);
    if (verb_ == "cone") {
      GradedAlgebra c = cone(r).renamed(name_.value_or(""));
      algebra_result(c);
      bind(c);
      return;
    }
    NonnegPart p = nonneg_part(r, s_.options_.bound.value_or(6));
    GradedAlgebra a = p.algebra.renamed(name_.value_or(""));
    algebra_result(a);
    emit("generated in degree 1: " + bool_text(p.generation.generated) + " (checked up to degree " +
         std::to_string(p.generation.bound) + ")");
    result_["reports"]["generated_in_degree_one"] = p.generation.generated;
    result_["reports"]["generation_bound"] = p.generation.bound;
    bind(a);
  }

  void cmd_regularize() {
    require_args(1, "regularize [NAME =] REES|ALGEBRA");
    auto reg = regularize(algebra(args_[0]));
    GradedAlgebra a = reg.algebra.renamed(name_.value_or(""));
    algebra_result(a);
    emit("kernel: " + ideal_text(reg.kernel));
    emit("stabilized_at: " + std::to_string(reg.stabilized_at));
    result_["reports"]["kernel"] = poly_strings(reg.kernel.generators());
    result_["reports"]["stabilized_at"] = reg.stabilized_at;
    bind(a);
  }

  void cmd_treg() {
    require_args(1, "treg REES|ALGEBRA");
    auto t = t_regularity(algebra(args_[0]));
    emit("t-regular: " + bool_text(t.regular));
    emit("obstruction: " + ideal_text(t.obstruction));
    result_ = {{"kind", "t_regularity"},
               {"generators", poly_strings(t.obstruction.generators())},
               {"weights", weights_json(*t.obstruction.context())},
               {"reports", {{"t_regular", t.regular}}}};
  }

  static std::string side_text(const ClassicalSide& side) {
    std::vector<std::string> bad;
    for (const auto& d : side.degrees)
      if (!d.matches()) bad.push_back(std::to_string(d.n));
    return side.matches() ? "match" : "mismatch in degrees " + join(bad, ", ");
  }

  static json side_json(const ClassicalSide& side) {
    json arr = json::array();
    for (const auto& d : side.degrees)
      arr.push_back({{"n", d.n},
                     {"well_defined", d.well_defined},
                     {"surjective", d.surjective},
                     {"injective", d.injective},
                     {"match", d.matches()}});
    return {{"match", side.matches()}, {"degrees", arr}};
  }

  void cmd_compare() {
    if (args_.empty() || args_.size() > 2) usage("compare-classical REES [N]");
    const ReesPresentation& r = rees(args_[0]);
    int n = args_.size() == 2 ? integer(args_[1]) : s_.options_.bound.value_or(5);
    auto report = compare_to_classical(r, n);
    json powers = json::array();
    if (report.vacuous) {
      emit("vacuous: empty sequence");
    } else {
      emit("regularized: " + side_text(report.regularized) + " (n <= " + std::to_string(n) + ")");
      emit("unregularized: " + side_text(report.unregularized) + " (n <= " + std::to_string(n) + ")");
      for (std::size_t k = 0; k < report.powers.size(); ++k) {
        emit("I^" + std::to_string(k + 1) + " = " + ideal_text(report.powers[k]));
        powers.push_back(poly_strings(report.powers[k].generators()));
      }
    }
    emit("t-regular: " + bool_text(report.t_regular));
    result_ = {{"kind", "classical_comparison"},
               {"reports",
                {{"bound", n},
                 {"vacuous", report.vacuous},
                 {"t_regular", report.t_regular},
                 {"regularized", side_json(report.regularized)},
                 {"unregularized", side_json(report.unregularized)},
                 {"powers", powers}}}};
  }

  void cmd_naturality() {
    const std::string form =
        "naturality base-change REES ALGEBRA [images] | naturality target ALGEBRA [a...] [b...] [bound N]";
    auto bound = take_option("bound");
    if (args_.empty()) usage(form);
    if (args_[0] == "base-change") {
      if (args_.size() != 4) usage(form);
      const ReesPresentation& r = rees(args_[1]);
      const GradedAlgebra& target = algebra(args_[2]);
      auto images = poly_list(args_[3], target.ring());
      auto report = rees_base_change(r.data, target, images);
      emit("direct = " + algebra_text(report.direct.algebra));
      emit("pulled back = " + ideal_text(report.pulled.canonical()));
      emit("presentations equal: " + bool_text(report.equal));
      result_ = algebra_json(report.direct.algebra, std::nullopt);
      result_["kind"] = "naturality";
      result_["mode"] = "base-change";
      json map = json::object();
      for (std::size_t i = 0; i < report.map.size(); ++i) map[r.ring()->variable(i).name] = report.map[i].to_string();
      result_["map"] = map;
      result_["reports"]["equal"] = report.equal;
    } else if (args_[0] == "target") {
      if (args_.size() != 4) usage(form);
      const GradedAlgebra& c = algebra(args_[1]);
      auto a = poly_list(args_[2], c.ring());
      auto b = poly_list(args_[3], c.ring());
      int n = bound_or(bound, 4);
      auto report = rees_target_map(c, a, b, n);
      std::vector<std::string> parts;
      json map = json::object();
      for (std::size_t i = 0; i < report.map.size(); ++i) {
        const std::string& v = report.source.ring()->variable(i).name;
        if (report.source.ring()->weight(i) != 0) parts.push_back(v + " -> " + report.map[i].to_string());
        map[v] = report.map[i].to_string();
      }
      emit("source = " + algebra_text(report.source.algebra));
      emit("target = " + algebra_text(report.target.algebra));
      emit("map: " + join(parts, ", "));
      emit("well-defined: " + bool_text(report.well_defined));
      emit("surjective in degrees " + std::to_string(-n) + ".." + std::to_string(n) + ": " +
           bool_text(report.surjective()));
      json degrees = json::array();
      for (auto [d, ok] : report.surjective_by_degree) degrees.push_back({d, ok});
      result_ = {{"kind", "naturality"},
                 {"mode", "target"},
                 {"map", map},
                 {"weights", weights_json(*report.source.ring())},
                 {"reports",
                  {{"well_defined", report.well_defined},
                   {"surjective", report.surjective()},
                   {"degrees", degrees}}}};
    } else {
      usage(form);
    }
  }

  void atlas_result(const ProjAtlas& at) {
    bool empty = is_empty_atlas(at);
    json charts = json::array();
    if (at.charts.empty()) {
      emit(label() + ": empty atlas (no charts)");
    } else {
      emit(label() + ": " + std::to_string(at.charts.size()) + " chart" + (at.charts.size() == 1 ? "" : "s") +
           (empty ? ", all zero rings" : ""));
    }
    for (std::size_t j = 0; j < at.charts.size(); ++j) {
      const Chart& c = at.charts[j];
      std::string gen = at.generators[j].to_string();
      emit("chart " + std::to_string(j + 1) + " at " + gen + " = " + algebra_text(c.ring));
      emit("  substitution: " + substitution_text(c));
      if (c.exceptional) emit("  exceptional: " + c.exceptional->to_string());
      charts.push_back(chart_json(c, j + 1, gen));
    }
    result_ = {{"kind", "atlas"}};
    if (name_) result_["name"] = *name_;
    result_["charts"] = charts;
    result_["empty"] = empty;
    if (at.charts.size() > 1) {
      json transitions = json::array();
      for (std::size_t a = 0; a < at.charts.size(); ++a)
        for (std::size_t b = 0; b < at.charts.size(); ++b) {
          if (a == b) continue;
          std::vector<std::string> parts;
          json images = json::object();
          const RingPtr& rb = at.charts[b].ring.ring();
          for (std::size_t k = 0; k < rb->nvars(); ++k) {
            parts.push_back(rb->variable(k).name + " = " + at.transitions[a][b][k].to_string());
            images[rb->variable(k).name] = at.transitions[a][b][k].to_string();
          }
          emit("chart " + std::to_string(b + 1) + " in chart " + std::to_string(a + 1) + ": " + join(parts, ", "));
          transitions.push_back({{"from", b + 1}, {"to", a + 1}, {"images", images}});
        }
      auto check = verify_atlas(at);
      emit("transitions verified: " + bool_text(check.ok()));
      result_["transitions"] = transitions;
      result_["reports"]["two_cycles_identity"] = check.two_cycles_identity;
      result_["reports"]["transitions_well_defined"] = check.transitions_well_defined;
    }
    for (const auto& w : at.warnings) emit("warning: " + w);
    if (!at.warnings.empty()) result_["warnings"] = at.warnings;
  }

  void cmd_proj() {
    require_args(2, "proj [NAME =] ALGEBRA [generators]");
    const GradedAlgebra& a = algebra(args_[0]);
    ProjAtlas at = proj_atlas(a, poly_list(args_[1], a.ring()));
    atlas_result(at);
    bind(at);
  }

  void cmd_blowup() {
    ProjAtlas at = blow_up(immersion("blowup [NAME =] ALGEBRA IDEAL|[f1, ...] | blowup [NAME =] REES"));
    atlas_result(at);
    bind(at);
  }

  void cmd_exceptional() {
    int n = s_.options_.bound.value_or(4);
    auto e = exceptional_divisor(immersion("exceptional [NAME =] ALGEBRA IDEAL|[f1, ...] | exceptional [NAME =] REES"), n);
    atlas_result(e.atlas);
    json checks = json::array();
    for (const auto& c : e.charts) {
      emit("chart " + std::to_string(c.chart + 1) + ": blow-up chart + (" +
           e.blowup.charts[c.chart].exceptional->to_string() + ") = " + ideal_text(c.expected) + ", " +
           (c.agrees ? "agrees" : "differs"));
      checks.push_back({{"chart", c.chart + 1},
                        {"exceptional", e.blowup.charts[c.chart].exceptional->to_string()},
                        {"expected", poly_strings(c.expected.generators())},
                        {"agrees", c.agrees}});
    }
    emit("kappa well-defined: " + bool_text(e.kappa.well_defined));
    emit("kappa surjective in degrees 0.." + std::to_string(n) + ": " + bool_text(e.kappa.surjective()));
    result_["reports"]["charts"] = checks;
    result_["reports"]["kappa_well_defined"] = e.kappa.well_defined;
    result_["reports"]["kappa_surjective"] = e.kappa.surjective();
    bind(e.atlas);
  }

  void cmd_empty() {
    require_args(1, "empty ATLAS");
    bool empty = is_empty_atlas(atlas(args_[0]));
    emit("empty: " + bool_text(empty));
    result_ = {{"kind", "emptiness"}, {"reports", {{"empty", empty}}}};
  }

  void cmd_deform() {
    require_args(2, "deform [NAME =] REES VALUE");
    const ReesPresentation& r = rees(args_[0]);
    Scalar c;
    try {
      c = r.ring()->field().from_rational(mpq_class(args_[1]));
    } catch (const std::invalid_argument&) {
      throw Error("expected a scalar, got '" + args_[1] + "'");
    }
    auto f = deformation_fiber(r, c);
    GradedAlgebra a = f.fiber.renamed(name_.value_or(""));
    emit("fiber at " + r.u_name() + " = " + c.to_string() + ": " + algebra_text(a));
    result_ = algebra_json(a, name_);
    result_["kind"] = "fiber";
    result_["value"] = c.to_string();
    if (f.isomorphic_to_base) {
      emit("isomorphic to base: " + bool_text(*f.isomorphic_to_base));
      result_["reports"]["isomorphic_to_base"] = *f.isomorphic_to_base;
    }
    if (f.equals_cone) {
      emit("equals cone: " + bool_text(*f.equals_cone));
      result_["reports"]["equals_cone"] = *f.equals_cone;
    }
    bind(a);
  }

  Session& s_;
  std::string verb_;
  std::optional<std::string> name_;
  std::vector<std::string> args_;
  std::vector<std::string> lines_;
  json result_ = json::object();
};

Session::Session(SessionOptions options) : options_(std::move(options)) {}

const Session::Binding* Session::find(const std::string& name) const {
  auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

void Session::bind(const std::string& name, Binding value, std::size_t) {
  if (!is_identifier(name)) throw Error("invalid name '" + name + "'");
  if (bindings_.count(name)) throw Error("name '" + name + "' is already bound");
  bindings_.emplace(name, std::move(value));
}

OutputRecord Session::execute(std::string_view command, std::size_t line) {
  auto tokens = tokenize(command);
  if (tokens.empty()) throw Error("empty command");
  auto start = std::chrono::steady_clock::now();
  Command cmd(*this, std::move(tokens));
  OutputRecord record = cmd.run();
  record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  record.line = line;
  record.command = std::string(command);
  log_.push_back(ScriptCommand{line, record.command});
  records_.push_back(record);
  return record;
}

std::vector<OutputRecord> Session::run(std::string_view script) {
  std::vector<OutputRecord> out;
  for (const auto& cmd : split_script(script)) {
    try {
      out.push_back(execute(cmd.text, cmd.line));
    } catch (const ScriptError&) {
      throw;
    } catch (const std::exception& e) {
      throw ScriptError(cmd.line, e.what());
    }
  }
  return out;
}

std::vector<OutputRecord> Session::replay(const std::vector<ScriptCommand>& log, const SessionOptions& options) {
  Session fresh(options);
  std::vector<OutputRecord> out;
  for (const auto& cmd : log) {
    try {
      out.push_back(fresh.execute(cmd.text, cmd.line));
    } catch (const std::exception& e) {
      throw ScriptError(cmd.line, e.what());
    }
  }
  return out;
}

namespace {

json record_json(const OutputRecord& record, bool timing) {
  json j;
  j["line"] = record.line;
  j["command"] = record.command;
  j["status"] = record.status;
  j["result"] = record.result;
  if (timing) j["seconds"] = record.seconds;
  return j;
}

}  // namespace

std::string format_output(const OutputRecord& record, OutputMode mode, bool timing) {
  if (mode == OutputMode::Json) return record_json(record, timing).dump();
  std::ostringstream out;
  out << "> " << record.command << "\n" << record.text << "\n";
  if (timing) out << "time: " << record.seconds << " s\n";
  return out.str();
}

std::string format_document(const std::vector<OutputRecord>& records, OutputMode mode, bool timing) {
  if (mode == OutputMode::Json) {
    json doc;
    doc["schema"] = kJsonSchema;
    doc["records"] = json::array();
    for (const auto& r : records) doc["records"].push_back(record_json(r, timing));
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (const auto& r : records) out += format_output(r, mode, timing);
  return out;
}

}  // namespace reesblow
