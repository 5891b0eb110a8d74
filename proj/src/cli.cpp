#include "opx/cli.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "opx/errors.hpp"
#include "opx/families.hpp"
#include "opx/favard.hpp"
#include "opx/tridiag.hpp"
#include "opx/verify.hpp"

namespace opx {

namespace {

using json = nlohmann::ordered_json;

struct Args {
  std::string sub;
  std::map<std::string, std::string> flags;
};

Args parse_args(const std::vector<std::string>& argv) {
  if (argv.empty())
    throw usage_error("missing subcommand; expected one of "
                      "moments, entry, inverse, eigvec, classify, verify");
  Args a;
  a.sub = argv[0];
  static const std::set<std::string> known = {"--family", "--m", "--i",      "--d",
                                             "--n",      "--z", "--N",      "--format",
                                             "--suite"};
  for (size_t i = 1; i < argv.size(); ++i) {
    const std::string& f = argv[i];
    if (known.find(f) == known.end()) throw usage_error("unknown flag '" + f + "'");
    if (i + 1 >= argv.size()) throw usage_error("flag '" + f + "' needs a value");
    a.flags[f.substr(2)] = argv[++i];
  }
  return a;
}

const std::string& require_flag(const Args& a, const std::string& key) {
  auto it = a.flags.find(key);
  if (it == a.flags.end())
    throw usage_error(a.sub + ": missing required flag --" + key);
  return it->second;
}

long parse_long(const std::string& s, const std::string& flag) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw usage_error("flag --" + flag + ": expected an integer, got '" + s + "'");
  }
}

long require_int(const Args& a, const std::string& key, long lo, long hi) {
  long v = parse_long(require_flag(a, key), key);
  if (v < lo || v > hi)
    throw usage_error("flag --" + key + ": value " + std::to_string(v) +
                      " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

long optional_int(const Args& a, const std::string& key, long fallback, long lo, long hi) {
  if (a.flags.find(key) == a.flags.end()) return fallback;
  return require_int(a, key, lo, hi);
}

// One family parameter: either a strict rational or the literal "sym".
struct PVal {
  bool sym = false;
  Rational r;

  ParamPoly poly(const std::string& name) const {
    return sym ? ParamPoly::variable(name) : ParamPoly(r);
  }
  const Rational& rational(const std::string& family, const std::string& key) const {
    if (sym)
      throw usage_error(family + ": parameter '" + key + "' cannot be symbolic here");
    return r;
  }
};

struct Family {
  std::string name;
  json params = json::object();
  std::optional<RecurrencePair<Rational>> rec;
  std::optional<RecurrencePair<ParamPoly>> srec;  // present iff a parameter is sym
  std::optional<TridiagonalOperator> op;
  bool is_sh = false;
  Rational sh_alpha;
  bool sh_with_s = false;
};

std::map<std::string, PVal> parse_family_params(const std::string& name,
                                                const std::string& body,
                                                const std::set<std::string>& keys) {
  std::map<std::string, PVal> out;
  size_t pos = 0;
  int syms = 0;
  while (pos <= body.size() && !body.empty()) {
    size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw usage_error(name + ": malformed parameter '" + item + "'");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (keys.find(key) == keys.end())
      throw usage_error(name + ": unknown parameter '" + key + "'");
    if (out.find(key) != out.end())
      throw usage_error(name + ": duplicate parameter '" + key + "'");
    PVal v;
    if (value == "sym") {
      v.sym = true;
      if (++syms > 1) throw usage_error(name + ": at most one symbolic parameter");
    } else {
      v.r = Rational::parse(value);
    }
    out[key] = v;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

const PVal& pick(const std::map<std::string, PVal>& params, const std::string& name,
                 const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw usage_error(name + ": missing parameter '" + key + "'");
  return it->second;
}

Family parse_family(const std::string& spec) {
  size_t colon = spec.find(':');
  Family fam;
  fam.name = spec.substr(0, colon);
  std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);

  auto echo = [&fam](const std::string& key, const PVal& v) {
    fam.params[key] = v.sym ? "sym" : v.r.to_string();
  };

  if (fam.name == "laguerre") {
    auto p = parse_family_params(fam.name, body, {"alpha"});
    const PVal& alpha = pick(p, fam.name, "alpha");
    echo("alpha", alpha);
    if (alpha.sym) {
      fam.srec = laguerre_recurrence<ParamPoly>(alpha.poly("alpha"));
    } else {
      fam.rec = laguerre_recurrence<Rational>(alpha.r);
      fam.op = jacobi_operator(*fam.rec);
    }
  } else if (fam.name == "meixner1") {
    auto p = parse_family_params(fam.name, body, {"beta", "c"});
    const PVal& beta = pick(p, fam.name, "beta");
    const PVal& c = pick(p, fam.name, "c");
    echo("beta", beta);
    echo("c", c);
    fam.rec = meixner1_recurrence(beta.rational(fam.name, "beta"),
                                  c.rational(fam.name, "c"));
    fam.op = jacobi_operator(*fam.rec);
  } else if (fam.name == "meixner2") {
    auto p = parse_family_params(fam.name, body, {"delta", "eta"});
    const PVal& delta = pick(p, fam.name, "delta");
    const PVal& eta = pick(p, fam.name, "eta");
    echo("delta", delta);
    echo("eta", eta);
    if (delta.sym || eta.sym) {
      fam.srec = meixner2_recurrence<ParamPoly>(delta.poly("delta"), eta.poly("eta"));
    } else {
      fam.rec = meixner2_recurrence<Rational>(delta.r, eta.r);
      fam.op = jacobi_operator(*fam.rec);
    }
  } else if (fam.name == "su11+" || fam.name == "su11-") {
    bool positive = fam.name == "su11+";
    auto p = parse_family_params(fam.name, body, {"k", "c"});
    const PVal& k = pick(p, fam.name, "k");
    const PVal& c = pick(p, fam.name, "c");
    echo("k", k);
    echo("c", c);
    if (k.sym || c.sym) {
      fam.srec = su11_recurrence<ParamPoly>(k.poly("k"), c.poly("c"), positive);
    } else {
      fam.rec = su11_recurrence<Rational>(k.r, c.r, positive);
      fam.op = positive ? su11_plus_operator(k.r, c.r) : su11_minus_operator(k.r, c.r);
    }
  } else if (fam.name == "pibeta") {
    auto p = parse_family_params(fam.name, body, {"beta", "c"});
    const PVal& beta = pick(p, fam.name, "beta");
    const PVal& c = pick(p, fam.name, "c");
    echo("beta", beta);
    echo("c", c);
    fam.op = pibeta_operator(beta.rational(fam.name, "beta"), c.rational(fam.name, "c"));
    fam.rec = fam.op->recurrence();
  } else if (fam.name == "hermite") {
    auto p = parse_family_params(fam.name, body, {"alpha"});
    const PVal& alpha = pick(p, fam.name, "alpha");
    echo("alpha", alpha);
    fam.rec = hermite_recurrence(alpha.rational(fam.name, "alpha"));
    fam.op = hermite_operator(alpha.r);
  } else if (fam.name == "carlitz") {
    auto p = parse_family_params(fam.name, body, {"k"});
    const PVal& k = pick(p, fam.name, "k");
    echo("k", k);
    fam.rec = carlitz_recurrence(k.rational(fam.name, "k"));
    fam.op = carlitz_operator(k.r);
  } else if (fam.name == "sh") {
    auto p = parse_family_params(fam.name, body, {"alpha", "s"});
    const PVal& alpha = pick(p, fam.name, "alpha");
    echo("alpha", alpha);
    fam.sh_alpha = alpha.rational(fam.name, "alpha");
    if (p.find("s") != p.end()) {
      const Rational& s = p.at("s").rational(fam.name, "s");
      if (s != Rational(0) && s != Rational(1))
        throw usage_error("sh: parameter 's' must be 0 or 1");
      fam.sh_with_s = s == Rational(1);
      fam.params["s"] = s.to_string();
    }
    fam.is_sh = true;
  } else {
    throw usage_error("unknown family '" + fam.name + "'");
  }
  return fam;
}

json params_echo(const Args& a) {
  json p = json::object();
  for (const auto& [key, value] : a.flags)
    if (key != "family") p[key] = value;
  return p;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int cmd_moments(const Args& a, std::ostream& out, bool csv, json& doc) {
  Family fam = parse_family(require_flag(a, "family"));
  long n = require_int(a, "n", 0, 64);
  std::vector<std::string> values;
  if (fam.srec) {
    for (const ParamPoly& mu : moments(*fam.srec, int(n))) values.push_back(mu.to_string());
  } else if (fam.rec) {
    for (const Rational& mu : moments(*fam.rec, int(n))) values.push_back(mu.to_string());
  } else {
    throw usage_error("moments: family '" + fam.name + "' has no moment sequence");
  }
  if (csv) {
    for (size_t j = 0; j < values.size(); ++j) out << j << "," << values[j] << "\n";
  } else {
    doc["result"] = values;
  }
  return 0;
}

int cmd_inverse(const Args& a, std::ostream& out, bool csv, json& doc) {
  Family fam = parse_family(require_flag(a, "family"));
  long n = require_int(a, "n", 0, 64);
  std::vector<std::vector<std::string>> rows;
  auto collect = [&rows](const auto& table) {
    for (const auto& row : table) {
      std::vector<std::string> r;
      for (const auto& v : row) r.push_back(v.to_string());
      rows.push_back(std::move(r));
    }
  };
  if (fam.srec)
    collect(inverse_coeffs(*fam.srec, int(n)));
  else if (fam.rec)
    collect(inverse_coeffs(*fam.rec, int(n)));
  else
    throw usage_error("inverse: family '" + fam.name + "' has no recurrence");
  if (csv) {
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t k = 0; k < rows[r].size(); ++k)
        out << r << "," << k << "," << rows[r][k] << "\n";
  } else {
    doc["result"] = rows;
  }
  return 0;
}

int cmd_entry(const Args& a, std::ostream& out, bool csv, json& doc) {
  Family fam = parse_family(require_flag(a, "family"));
  long m = require_int(a, "m", 0, 64);
  long i = optional_int(a, "i", 0, 0, 64);
  long d = optional_int(a, "d", 0, -64, 64);
  if (i + d < 0) throw usage_error("entry: target index i+d is negative");
  Surd value;
  if (fam.is_sh)
    value = sh_entry(fam.sh_alpha, int(m), int(i + d), int(i), fam.sh_with_s);
  else if (fam.op)
    value = matrix_entry(*fam.op, int(m), int(i), int(d));
  else
    throw usage_error("entry: family '" + fam.name + "' has no operator form");
  if (csv)
    out << value.to_string() << "\n";
  else
    doc["result"] = value.to_string();
  return 0;
}

int cmd_eigvec(const Args& a, std::ostream& out, bool csv, json& doc) {
  Family fam = parse_family(require_flag(a, "family"));
  if (!fam.op)
    throw usage_error("eigvec: family '" + fam.name + "' has no operator form");
  Rational z = Rational::parse(require_flag(a, "z"));
  long N = require_int(a, "N", 0, 256);
  EigvecResult ev = eigenvector_coeffs(*fam.op, z, int(N));
  if (csv) {
    for (size_t n = 0; n < ev.p_values.size(); ++n)
      out << n << "," << ev.p_values[n].to_string() << "," << ev.h_values[n].to_string()
          << "\n";
  } else {
    json p = json::array(), h = json::array();
    for (const Rational& v : ev.p_values) p.push_back(v.to_string());
    for (const Surd& v : ev.h_values) h.push_back(v.to_string());
    doc["result"] = json{{"p", p}, {"h", h}};
  }
  return 0;
}

int cmd_classify(const Args& a, std::ostream& out, bool csv, json& doc) {
  Family fam = parse_family(require_flag(a, "family"));
  if (fam.name != "su11+" && fam.name != "su11-")
    throw usage_error("classify: expected an su11+ or su11- family");
  if (fam.srec) throw usage_error("classify: parameters must be rational");
  Rational k = Rational::parse(fam.params["k"].get<std::string>());
  Rational c = Rational::parse(fam.params["c"].get<std::string>());
  if (fam.name == "su11-") c = -c;  // the negative series matches the family at -c
  Classification cls = plmx_classify(k, c);
  json result = json::object();
  result["kind"] = cls.kind_name();
  switch (cls.kind) {
    case Classification::Kind::Laguerre:
    case Classification::Kind::LaguerreReflected:
      result["alpha"] = cls.family_second.to_string();
      break;
    case Classification::Kind::Meixner1:
      result["beta"] = cls.family_second.to_string();
      if (cls.meixner1_c) result["c"] = cls.meixner1_c->to_string();
      break;
    case Classification::Kind::Meixner2:
      result["eta"] = cls.family_second.to_string();
      if (cls.meixner2_delta) result["delta"] = cls.meixner2_delta->to_string();
      break;
  }
  result["scale"] = cls.scale.to_string();
  result["shift"] = cls.shift.to_string();
  if (csv) {
    for (const auto& [key, value] : result.items())
      out << key << "," << value.get<std::string>() << "\n";
  } else {
    doc["result"] = result;
  }
  return 0;
}

int cmd_verify(const Args& a, std::ostream& out, bool csv, json& doc) {
  std::string suite = a.flags.count("suite") ? a.flags.at("suite") : "all";
  std::vector<CheckResult> results = run_suite(suite);
  bool ok = true;
  if (csv) {
    for (const CheckResult& r : results) {
      out << r.criterion << "," << csv_quote(r.name) << ","
          << (r.passed ? "pass" : "fail") << "," << csv_quote(r.detail) << "\n";
      ok = ok && r.passed;
    }
  } else {
    json list = json::array();
    for (const CheckResult& r : results) {
      list.push_back(json{{"criterion", r.criterion},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"detail", r.detail}});
      ok = ok && r.passed;
    }
    doc["result"] = list;
  }
  return ok ? 0 : 1;
}

int dispatch(const Args& a, std::ostream& out) {
  std::string format = a.flags.count("format") ? a.flags.at("format") : "json";
  if (format != "json" && format != "csv")
    throw usage_error("flag --format: expected json or csv, got '" + format + "'");
  bool csv = format == "csv";

  json doc;
  doc["command"] = a.sub;
  if (a.flags.count("family"))
    doc["family"] = a.flags.at("family");
  else
    doc["family"] = nullptr;
  doc["params"] = params_echo(a);

  int code;
  if (a.sub == "moments")
    code = cmd_moments(a, out, csv, doc);
  else if (a.sub == "inverse")
    code = cmd_inverse(a, out, csv, doc);
  else if (a.sub == "entry")
    code = cmd_entry(a, out, csv, doc);
  else if (a.sub == "eigvec")
    code = cmd_eigvec(a, out, csv, doc);
  else if (a.sub == "classify")
    code = cmd_classify(a, out, csv, doc);
  else if (a.sub == "verify")
    code = cmd_verify(a, out, csv, doc);
  else
    throw usage_error("unknown subcommand '" + a.sub + "'");

  if (!csv) out << doc.dump() << "\n";
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(parse_args(args), out);
  } catch (const usage_error& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
}

}  // namespace opx
