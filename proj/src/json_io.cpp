#include "gdet/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gdet/errors.hpp"

namespace gdet::json {
namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw PreconditionError("malformed input at '" + field + "': " + what);
}

const json& member(const json& j, const char* key, const std::string& field) {
  if (!j.is_object()) bad(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(field + "." + key, "missing");
  return *it;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) bad(field, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return j.get<int>();
}

void write_double(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  if (x == std::trunc(x) && std::abs(x) < 1e15) {
    // Integral values print without exponent or trailing digits.
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", x);
    std::string s(buf);
    if (s.size() > 2 && s.compare(s.size() - 2, 2, ".0") == 0) s.resize(s.size() - 2);
    out += (s == "-0") ? "-0.0" : s;
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void write(std::string& out, const json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::number_float:
      write_double(out, j.get<double>());
      return;
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += (flat && indent >= 0) ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(out, e, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

json from_complex(cplx c) { return json::array({c.real(), c.imag()}); }

cplx to_complex(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) bad(field, "expected [re, im]");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
}

json from_poly(const BiPoly& p) {
  const Bidegree d = p.declared_bidegree();
  json rows = json::array();
  for (int i = 0; i <= d.d1; ++i) {
    json row = json::array();
    for (int j = 0; j <= d.d2; ++j) row.push_back(from_complex(p.coeff(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"space", std::string(to_string(p.space()))},
              {"bidegree", json::array({d.d1, d.d2})},
              {"coeffs", std::move(rows)}};
}

BiPoly to_poly(const json& j, const std::string& field) {
  const json& sp = member(j, "space", field);
  if (!sp.is_string() || (sp != "zw" && sp != "sp")) bad(field + ".space", "expected \"zw\" or \"sp\"");
  const Space space = sp == "zw" ? Space::ZW : Space::SP;
  const json& bd = member(j, "bidegree", field);
  if (!bd.is_array() || bd.size() != 2) bad(field + ".bidegree", "expected [d1, d2]");
  const int d1 = integer(bd[0], field + ".bidegree[0]");
  const int d2 = integer(bd[1], field + ".bidegree[1]");
  if (d1 < 0 || d2 < 0) bad(field + ".bidegree", "components must be nonnegative");
  const json& rows = member(j, "coeffs", field);
  if (!rows.is_array() || static_cast<int>(rows.size()) != d1 + 1) {
    bad(field + ".coeffs", "expected d1 + 1 rows");
  }
  BiPoly p(space, Bidegree{d1, d2});
  for (int i = 0; i <= d1; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    const std::string rf = field + ".coeffs[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != d2 + 1) bad(rf, "expected d2 + 1 entries");
    for (int k = 0; k <= d2; ++k) {
      p.set_coeff(i, k, to_complex(row[static_cast<std::size_t>(k)], rf + "[" + std::to_string(k) + "]"));
    }
  }
  if (p.is_zero()) return BiPoly(space);
  return p;
}

json from_ratfun(const RatFun& f) { return json{{"num", from_poly(f.num())}, {"den", from_poly(f.den())}}; }

RatFun to_ratfun(const json& j, const std::string& field) {
  BiPoly num = to_poly(member(j, "num", field), field + ".num");
  BiPoly den = to_poly(member(j, "den", field), field + ".den");
  if (den.is_zero()) bad(field + ".den", "denominator is zero");
  if (num.space() != den.space()) bad(field, "numerator and denominator spaces differ");
  return RatFun(std::move(num), std::move(den));
}

json from_point(const PointG& pt) { return json{{"s", from_complex(pt.s)}, {"p", from_complex(pt.p)}}; }

PointG to_point(const json& j, const std::string& field) {
  return {to_complex(member(j, "s", field), field + ".s"),
          to_complex(member(j, "p", field), field + ".p")};
}

json from_inner(const InnerFun& f) {
  return json{{"m", f.m()}, {"eta", from_poly(f.eta())}, {"phase", from_complex(f.phase())}};
}

InnerFun to_inner(const json& j, const std::string& field) {
  const int m = integer(member(j, "m", field), field + ".m");
  if (m < 0) bad(field + ".m", "must be nonnegative");
  BiPoly eta = to_poly(member(j, "eta", field), field + ".eta");
  if (eta.space() != Space::SP) bad(field + ".eta", "must be an (s,p) polynomial");
  if (eta.is_zero()) bad(field + ".eta", "must be nonzero");
  cplx phase = 1.0;
  if (j.contains("phase")) phase = to_complex(j["phase"], field + ".phase");
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) bad(field + ".phase", "must be unimodular");
  return InnerFun(m, std::move(eta), phase);
}

json from_eps_family(const EpsFamily& g) {
  return json{{"f", from_inner(g.f())}, {"xi", from_poly(g.variety().xi())}, {"epsilon", g.epsilon()}};
}

EpsFamily to_eps_family(const json& j, const std::string& field) {
  InnerFun f = to_inner(member(j, "f", field), field + ".f");
  BiPoly xi = to_poly(member(j, "xi", field), field + ".xi");
  if (xi.space() != Space::SP) bad(field + ".xi", "must be an (s,p) polynomial");
  if (xi.is_zero()) bad(field + ".xi", "must be nonzero");
  const double eps = number(member(j, "epsilon", field), field + ".epsilon");
  return EpsFamily(f, VarietySpec(std::move(xi)), eps);
}

PickProblem to_pick_problem(const json& j) {
  const std::string field = "pick";
  const json& k = member(j, "kernel", field);
  if (!k.is_string() || (k != "szego" && k != "bergman" && k != "symg")) {
    bad(field + ".kernel", "expected \"szego\", \"bergman\" or \"symg\"");
  }
  PickProblem p;
  p.kernel = make_kernel(k.get<std::string>());
  const json& nodes = member(j, "nodes", field);
  const json& values = member(j, "values", field);
  if (!nodes.is_array()) bad(field + ".nodes", "expected an array");
  if (!values.is_array()) bad(field + ".values", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string nf = field + ".nodes[" + std::to_string(i) + "]";
    if (p.kernel->dimension() == 1) {
      p.nodes.push_back(Node::disk(to_complex(nodes[i], nf)));
    } else {
      p.nodes.push_back(Node::g(to_point(nodes[i], nf)));
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    p.values.push_back(to_complex(values[i], field + ".values[" + std::to_string(i) + "]"));
  }
  p.validate();
  return p;
}

json from_pick_problem(const PickProblem& p) {
  json nodes = json::array();
  for (const Node& n : p.nodes) {
    nodes.push_back(p.kernel->dimension() == 1 ? from_complex(n.c[0]) : from_point({n.c[0], n.c[1]}));
  }
  json values = json::array();
  for (const cplx& v : p.values) values.push_back(from_complex(v));
  return json{{"kernel", p.kernel->name()}, {"nodes", nodes}, {"values", values}};
}

std::string dump(const json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  return out;
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw PreconditionError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace gdet::json
