#include "chiwb/session.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "chiwb/blowup.hpp"
#include "chiwb/diagonal.hpp"
#include "chiwb/errors.hpp"
#include "chiwb/parse.hpp"
#include "chiwb/scan.hpp"

namespace chiwb {

namespace {

using json = nlohmann::ordered_json;

constexpr long kJsonIntMax = 9007199254740992;  // 2^53

json int_value(long v) {
  if (v > kJsonIntMax || v < -kJsonIntMax) return json(std::to_string(v));
  return json(v);
}

json int_list(const std::vector<long>& vs) {
  json a = json::array();
  for (long v : vs) a.push_back(int_value(v));
  return a;
}

struct Env {
  const SessionOptions* options = nullptr;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  RingPtr current;
};

bool punct(const Token& t, const char* p) {
  return t.kind == Token::Kind::Punct && t.text == p;
}

void expect_punct(Lexer& lex, const char* p) {
  if (!punct(lex.peek(), p)) lex.error(std::string("expected '") + p + "'");
  lex.next();
}

std::string expect_ident(Lexer& lex, const char* what) {
  if (lex.peek().kind != Token::Kind::Ident) lex.error(std::string("expected ") + what);
  return lex.next().text;
}

unsigned expect_uint(Lexer& lex, const char* what) {
  if (lex.peek().kind != Token::Kind::Int) lex.error(std::string("expected ") + what);
  return static_cast<unsigned>(std::stoul(lex.next().text));
}

const Ideal& lookup_ideal(Env& env, Lexer& lex) {
  Token t = lex.peek();
  std::string name = expect_ident(lex, "an ideal name");
  auto it = env.ideals.find(name);
  if (it == env.ideals.end()) Lexer::error_at(t, "unknown ideal '" + name + "'");
  return it->second;
}

RingPtr require_ring(Env& env, const Token& at) {
  if (!env.current) Lexer::error_at(at, "no ring has been declared");
  return env.current;
}

// ring <name> = (QQ|FF(<p>))[v,...] (base=v(,v)?)? ;
void exec_ring(Env& env, Lexer& lex, json& payload) {
  std::string name = expect_ident(lex, "a ring name");
  expect_punct(lex, "=");
  Token ft = lex.peek();
  std::string fkind = expect_ident(lex, "a field (QQ or FF)");
  Field field = Field::rationals();
  if (fkind == "QQ") {
  } else if (fkind == "FF") {
    expect_punct(lex, "(");
    Token pt = lex.peek();
    unsigned p = expect_uint(lex, "a prime characteristic");
    expect_punct(lex, ")");
    try {
      field = Field::prime_field(p);
    } catch (const Error& e) {
      Lexer::error_at(pt, e.what());
    }
  } else {
    Lexer::error_at(ft, "unknown field '" + fkind + "'");
  }
  if (env.options->has_field_override) field = env.options->field_override;

  expect_punct(lex, "[");
  std::vector<std::string> vars;
  vars.push_back(expect_ident(lex, "a variable name"));
  while (punct(lex.peek(), ",")) {
    lex.next();
    vars.push_back(expect_ident(lex, "a variable name"));
  }
  expect_punct(lex, "]");

  std::size_t base_count = 0;
  if (lex.peek().kind == Token::Kind::Ident && lex.peek().text == "base") {
    lex.next();
    expect_punct(lex, "=");
    std::vector<std::string> base;
    base.push_back(expect_ident(lex, "a base variable"));
    if (punct(lex.peek(), ",")) {
      lex.next();
      base.push_back(expect_ident(lex, "a base variable"));
    }
    for (std::size_t i = 0; i < base.size(); ++i)
      if (i >= vars.size() || vars[i] != base[i])
        lex.error("base variables must be the leading variables of the ring");
    base_count = base.size();
  }
  expect_punct(lex, ";");

  RingPtr ring = RingContext::make(field, vars, MonomialOrder::grevlex(), base_count);
  env.rings[name] = ring;
  env.current = ring;
  payload["ring"] = name;
  payload["field"] = field.is_rationals() ? std::string("QQ")
                                          : "FF(" + std::to_string(field.characteristic()) + ")";
  payload["variables"] = ring->vars();
  payload["base"] = int_value(static_cast<long>(base_count));
}

void exec_ideal(Env& env, Lexer& lex, json& payload) {
  Token at = lex.peek();
  std::string name = expect_ident(lex, "an ideal name");
  RingPtr ring = require_ring(env, at);
  expect_punct(lex, "=");
  std::vector<Polynomial> gens;
  gens.push_back(parse_polynomial(lex, ring));
  while (punct(lex.peek(), ",")) {
    lex.next();
    gens.push_back(parse_polynomial(lex, ring));
  }
  expect_punct(lex, ";");
  Ideal ideal(ring, gens);
  env.ideals[name] = ideal;
  payload["ideal"] = name;
  payload["generators"] = json::array();
  for (const auto& g : gens) payload["generators"].push_back(g.to_string());
}

json chi_payload(const ChiReport& rep) {
  json p;
  p["chi"] = int_value(rep.chi);
  p["tor_lengths"] = int_list(rep.tor_lengths);
  p["dims"] = int_list({rep.dim_left, rep.dim_right});
  p["dim_ring"] = int_value(rep.dim_ring);
  p["decent"] = rep.decent;
  p["vanishing_case"] = rep.vanishing_case;
  p["positivity_case"] = rep.positivity_case;
  return p;
}

ChartPoints parse_points(Lexer& lex) {
  ChartPoints pts;
  if (!(lex.peek().kind == Token::Kind::Ident && lex.peek().text == "points"))
    lex.error("expected 'points = [ ... ]'");
  lex.next();
  expect_punct(lex, "=");
  expect_punct(lex, "[");
  while (!punct(lex.peek(), "]")) {
    unsigned chart = expect_uint(lex, "a chart index");
    expect_punct(lex, ":");
    expect_punct(lex, "(");
    std::vector<mpq_class> coords;
    coords.push_back(parse_rational(lex));
    while (punct(lex.peek(), ",")) {
      lex.next();
      coords.push_back(parse_rational(lex));
    }
    expect_punct(lex, ")");
    pts[chart].push_back(std::move(coords));
  }
  expect_punct(lex, "]");
  return pts;
}

json points_payload(const BlowupIntersectionReport& rep) {
  json arr = json::array();
  for (const auto& p : rep.points) {
    json e;
    e["chart"] = int_value(static_cast<long>(p.chart));
    json coords = json::array();
    for (const auto& c : p.point) coords.push_back(c.get_str());
    e["point"] = coords;
    e["chi"] = int_value(p.chi);
    e["counted"] = p.counted;
    e["on_support"] = p.on_support;
    arr.push_back(std::move(e));
  }
  return arr;
}

// returns the status for the result
std::string exec_command(Env& env, Lexer& lex, const std::string& verb, json& payload) {
  Token at = lex.peek();
  if (verb == "chi") {
    const Ideal& a = lookup_ideal(env, lex);
    const Ideal& b = lookup_ideal(env, lex);
    expect_punct(lex, ";");
    payload = chi_payload(chi(a, b));
    return "ok";
  }
  if (verb == "tor") {
    const Ideal& a = lookup_ideal(env, lex);
    const Ideal& b = lookup_ideal(env, lex);
    unsigned idx = expect_uint(lex, "a homological index");
    expect_punct(lex, ";");
    PresentedModule t = tor(a, b, idx);
    payload["index"] = int_value(idx);
    payload["rank"] = int_value(static_cast<long>(t.rank));
    payload["relations"] = int_value(static_cast<long>(t.relations.size()));
    try {
      payload["dimension"] = int_value(k_dimension(t));
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::InfiniteLength) throw;
      payload["dimension"] = "infinite";
    }
    return "ok";
  }
  if (verb == "resolution") {
    const Ideal& a = lookup_ideal(env, lex);
    expect_punct(lex, ";");
    PresentedModule m = PresentedModule::quotient_by(a);
    const FreeComplex& res = m.resolution();
    std::vector<long> ranks(res.ranks.begin(), res.ranks.end());
    payload["ranks"] = int_list(ranks);
    payload["length"] = int_value(static_cast<long>(res.length()));
    return "ok";
  }
  if (verb == "multiplicity") {
    const Ideal& a = lookup_ideal(env, lex);
    expect_punct(lex, ";");
    long e = point_multiplicity(a);
    long dim = a.is_unit() ? -1 : krull_dimension(a);
    long hs = hs_multiplicity(a, Ideal::irrelevant(a.ring()), dim);
    payload["e"] = int_value(e);
    payload["dim"] = int_value(dim);
    payload["hs_multiplicity"] = int_value(hs);
    return e == hs ? "ok" : "assertion_failed";
  }
  if (verb == "tangentcone") {
    const Ideal& a = lookup_ideal(env, lex);
    expect_punct(lex, ";");
    Ideal cone = tangent_cone(a);
    payload["generators"] = json::array();
    for (const auto& g : cone.generators()) payload["generators"].push_back(g.to_string());
    return "ok";
  }
  if (verb == "transversal") {
    const Ideal& a = lookup_ideal(env, lex);
    const Ideal& b = lookup_ideal(env, lex);
    expect_punct(lex, ";");
    TransversalityReport rep = transversality_check(a, b);
    payload["chi"] = int_value(rep.chi.chi);
    payload["e_left"] = int_value(rep.e_left);
    payload["e_right"] = int_value(rep.e_right);
    payload["e_product"] = int_value(rep.e_left * rep.e_right);
    payload["cone_dim"] = int_value(rep.cone_dim);
    payload["transverse"] = rep.transverse;
    payload["equality"] = rep.equality;
    payload["tennison_ok"] = rep.tennison_ok;
    for (const auto& [k, v] : rep.chi.witnesses) payload[k] = v;
    return "ok";
  }
  if (verb == "diagonal") {
    const Ideal& a = lookup_ideal(env, lex);
    const Ideal& b = lookup_ideal(env, lex);
    expect_punct(lex, ";");
    TensorModel model = model_from_ring(require_ring(env, at));
    CompletedTorReport rep = diagonal_decompose(model, a, b);
    payload["e_values"] = int_list(rep.e_values);
    payload["wtor_dims"] = int_list(rep.wtor_dims);
    payload["chi_via_diagonal"] = int_value(rep.chi_via_diagonal);
    payload["chi_direct"] = int_value(rep.chi_direct);
    payload["positivity_case"] = rep.positivity_case;
    payload["vanishing_case"] = rep.vanishing_case;
    return rep.equal ? "ok" : "assertion_failed";
  }
  if (verb == "flatcheck") {
    const Ideal& a = lookup_ideal(env, lex);
    expect_punct(lex, ";");
    TensorModel model = half_model_from_ring(require_ring(env, at));
    FlatnessReport rep = r_flatness_check(model, a);
    payload["flat"] = rep.flat;
    payload["h1_zero"] = rep.h1_zero;
    payload["h2_zero"] = rep.h2_zero;
    payload["fiber_dim"] = int_value(rep.fiber_dim);
    payload["module_dim"] = int_value(rep.module_dim);
    payload["expected_fiber_dim"] = int_value(rep.expected_fiber_dim);
    payload["fiber_dim_matches"] = rep.fiber_dim_matches;
    return "ok";
  }
  if (verb == "dimbound") {
    const Ideal& a = lookup_ideal(env, lex);
    const Ideal& b = lookup_ideal(env, lex);
    expect_punct(lex, ";");
    TensorModel model = model_from_ring(require_ring(env, at));
    DimensionBoundReport rep = dimension_bound_check(model, a, b);
    payload["joint_dim"] = int_value(rep.joint_dim);
    payload["dim_left"] = int_value(rep.dim_left);
    payload["dim_right"] = int_value(rep.dim_right);
    payload["bound"] = int_value(rep.bound);
    return rep.holds ? "ok" : "assertion_failed";
  }
  if (verb == "blowupchi") {
    const Ideal& a = lookup_ideal(env, lex);
    const Ideal& b = lookup_ideal(env, lex);
    ChartPoints pts = parse_points(lex);
    expect_punct(lex, ";");
    BlowupIntersectionReport rep = blowup_chi(a, b, pts);
    payload["points"] = points_payload(rep);
    payload["total"] = int_value(rep.total);
    return "ok";
  }
  if (verb == "fulton") {
    const Ideal& a = lookup_ideal(env, lex);
    const Ideal& b = lookup_ideal(env, lex);
    ChartPoints pts = parse_points(lex);
    expect_punct(lex, ";");
    FultonReport rep = fulton_verify(a, b, pts);
    payload["lhs"] = int_value(rep.chi);
    payload["rhs"] = int_value(rep.e_left * rep.e_right + rep.blowup_total);
    payload["e_left"] = int_value(rep.e_left);
    payload["e_right"] = int_value(rep.e_right);
    payload["blowup_total"] = int_value(rep.blowup_total);
    payload["points"] = points_payload(rep.blowup);
    return rep.holds ? "ok" : "assertion_failed";
  }
  if (verb == "corollaryd") {
    const Ideal& a = lookup_ideal(env, lex);
    const Ideal& b = lookup_ideal(env, lex);
    ChartPoints pts = parse_points(lex);
    expect_punct(lex, ";");
    CorollaryDReport rep = corollary_d_check(a, b, pts);
    payload["chi"] = int_value(rep.chi);
    payload["e_product"] = int_value(rep.e_product);
    payload["cone_dim"] = int_value(rep.cone_dim);
    payload["blowup_total"] = int_value(rep.blowup_total);
    payload["equality_case"] = rep.equality_case;
    payload["empty_on_blowup"] = rep.empty_on_blowup;
    return rep.conclusion_verified ? "ok" : "assertion_failed";
  }
  if (verb == "scan") {
    std::string kind = expect_ident(lex, "a scan kind");
    if (!(lex.peek().kind == Token::Kind::Ident && lex.peek().text == "count"))
      lex.error("expected 'count=<n>'");
    lex.next();
    expect_punct(lex, "=");
    unsigned count = expect_uint(lex, "a count");
    expect_punct(lex, ";");
    ScanOutcome out = run_scan(require_ring(env, at), kind, count, env.options->seed);
    payload["kind"] = out.kind;
    payload["checked"] = int_value(out.checked);
    payload["cases"] = int_value(out.cases);
    payload["violations"] = int_value(out.violations);
    payload["violating"] = out.violating;
    return out.violations == 0 ? "ok" : "assertion_failed";
  }
  if (verb == "basechange") {
    const Ideal& a = lookup_ideal(env, lex);
    const Ideal& b = lookup_ideal(env, lex);
    RingPtr ring = require_ring(env, at);
    if (!(lex.peek().kind == Token::Kind::Ident && lex.peek().text == "vars"))
      lex.error("expected 'vars = <w>(,<w>)*'");
    lex.next();
    expect_punct(lex, "=");
    std::vector<std::string> vars = ring->vars();
    vars.push_back(expect_ident(lex, "an extension variable"));
    while (punct(lex.peek(), ",")) {
      lex.next();
      vars.push_back(expect_ident(lex, "an extension variable"));
    }
    RingPtr ext_ring = RingContext::make(ring->field(), vars);
    if (!(lex.peek().kind == Token::Kind::Ident && lex.peek().text == "ext"))
      lex.error("expected 'ext = <poly>(, <poly>)*'");
    lex.next();
    expect_punct(lex, "=");
    std::vector<Polynomial> gens;
    gens.push_back(parse_polynomial(lex, ext_ring));
    while (punct(lex.peek(), ",")) {
      lex.next();
      gens.push_back(parse_polynomial(lex, ext_ring));
    }
    expect_punct(lex, ";");
    BaseChangeReport rep = flat_base_change_check(a, b, ext_ring, Ideal(ext_ring, gens));
    payload["degree"] = int_value(rep.degree);
    payload["chi_base"] = int_value(rep.chi_base);
    payload["chi_ext"] = int_value(rep.chi_ext);
    return rep.ratio_holds ? "ok" : "assertion_failed";
  }
  Lexer::error_at(at, "unknown command '" + verb + "'");
}

}  // namespace

RunOutcome run_session_text(const std::string& text, const SessionOptions& options) {
  RunOutcome outcome;
  Env env;
  env.options = &options;

  Lexer lex(text);
  while (!lex.at_end()) {
    const std::size_t start = lex.peek().offset;
    SessionResult result;
    bool parse_failed = false;
    const auto t0 = std::chrono::steady_clock::now();
    budget::Scope scope(options.budget);
    try {
      Token verb_token = lex.peek();
      std::string verb = expect_ident(lex, "a command");
      json payload;
      std::string status;
      if (verb == "ring") {
        exec_ring(env, lex, payload);
        status = "ok";
      } else if (verb == "ideal") {
        exec_ideal(env, lex, payload);
        status = "ok";
      } else {
        status = exec_command(env, lex, verb, payload);
      }
      result.command = text.substr(start, lex.last_end() - start);
      result.status = status;
      result.payload = std::move(payload);
      (void)verb_token;
    } catch (const Error& e) {
      result.command = text.substr(start, std::max(lex.last_end(), start) - start);
      result.status = e.kind() == Error::Kind::AssertionFailed ? "assertion_failed" : "error";
      result.payload["error"] = e.what();
      parse_failed = e.kind() == Error::Kind::Parse;
    }
    const auto t1 = std::chrono::steady_clock::now();
    result.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    // trim trailing whitespace from the echoed statement
    while (!result.command.empty() &&
           (result.command.back() == ' ' || result.command.back() == '\n' ||
            result.command.back() == '\t' || result.command.back() == '\r'))
      result.command.pop_back();
    outcome.results.push_back(std::move(result));
    if (parse_failed) break;  // no reliable way to resynchronize
  }

  outcome.exit_code = 0;
  for (const auto& r : outcome.results) {
    if (r.status == "assertion_failed") {
      outcome.exit_code = 2;
      break;
    }
    if (r.status == "error") outcome.exit_code = 1;
  }
  return outcome;
}

RunOutcome run_session_file(const std::string& path, const SessionOptions& options) {
  std::ifstream in(path);
  if (!in) {
    RunOutcome outcome;
    SessionResult r;
    r.command = path;
    r.status = "error";
    r.payload["error"] = "cannot open session file '" + path + "'";
    outcome.results.push_back(std::move(r));
    outcome.exit_code = 1;
    return outcome;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return run_session_text(ss.str(), options);
}

std::string emit_text(const RunOutcome& outcome, const SessionOptions& options) {
  std::ostringstream os;
  for (const auto& r : outcome.results) {
    os << "== " << r.command << "\n";
    os << "status: " << r.status << "\n";
    for (const auto& [key, value] : r.payload.items()) {
      os << key << ": ";
      if (value.is_string())
        os << value.get<std::string>();
      else
        os << value.dump();
      os << "\n";
    }
    if (options.timing) os << "time_ms: " << r.time_ms << "\n";
    os << "\n";
  }
  return os.str();
}

std::string emit_json(const RunOutcome& outcome, const SessionOptions& options) {
  json top;
  top["version"] = 1;
  top["results"] = json::array();
  for (const auto& r : outcome.results) {
    json entry;
    entry["command"] = r.command;
    entry["status"] = r.status;
    for (const auto& [key, value] : r.payload.items()) entry[key] = value;
    if (options.timing) entry["time_ms"] = r.time_ms;
    top["results"].push_back(std::move(entry));
  }
  return top.dump(2) + "\n";
}

}  // namespace chiwb
